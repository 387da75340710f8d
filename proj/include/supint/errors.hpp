#pragma once

#include <stdexcept>
#include <string>

namespace supint {

/// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InadmissiblePoint : Error {
    using Error::Error;
};
struct ChartMismatch : Error {
    using Error::Error;
};
struct UnknownSystem : Error {
    using Error::Error;
};
struct MissingParam : Error {
    using Error::Error;
};
struct DegenerateParam : Error {
    using Error::Error;
};
struct UnknownConstant : Error {
    using Error::Error;
};
struct SingularJacobian : Error {
    using Error::Error;
};
struct NotSeparablePair : Error {
    using Error::Error;
};
struct InsufficientJetOrder : Error {
    using Error::Error;
};
struct CorrectionAlsoFails : Error {
    using Error::Error;
};
struct DivisorVanishes : Error {
    using Error::Error;
};
struct NonPolynomialDependence : Error {
    using Error::Error;
};
struct NoParameterMapFound : Error {
    using Error::Error;
};
struct RowMismatch : Error {
    using Error::Error;
};
struct SingularityReached : Error {
    using Error::Error;
};
struct ComplexFlowUnsupported : Error {
    using Error::Error;
};
struct CatalogFormatError : Error {
    using Error::Error;
};

} // namespace supint
