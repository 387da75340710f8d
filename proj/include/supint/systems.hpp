#pragma once

#include <string>
#include <vector>

#include "supint/catalog.hpp"
#include "supint/phase.hpp"
#include "supint/rng.hpp"

namespace supint {

/// A catalog system bound to numeric parameter values; Hamiltonian and
/// constants wired as evaluable phase-space functions.
struct SystemInstance {
    const SystemRecord* rec = nullptr;
    ParamMap params;
    PhaseFunction H;
    std::vector<std::pair<std::string, PhaseFunction>> constants;

    const SystemRecord& record() const { return *rec; }
    const PhaseFunction& constant(const std::string& name) const; // UnknownConstant
    bool has_constant(const std::string& name) const;
};

/// Binds a system record to parameter values.  Required parameters not
/// supplied fall back to the record's defaults; MissingParam fires only when
/// neither is available.  Throws UnknownSystem, MissingParam, or
/// DegenerateParam (the latter also for defaulted values).
SystemInstance instantiate(const Catalog& cat, const std::string& id, const ParamMap& params);
SystemInstance instantiate(const std::string& id, const ParamMap& params = {});

/// Evaluates one named constant of motion at a point.
Scalar constant_surface(const SystemInstance& s, const std::string& name, const PhasePoint& x);

struct CatalogEntrySummary {
    std::string id;
    std::string space;
    std::vector<std::string> required_params;
    std::vector<std::string> charts; // defining chart + separable charts on record
    std::vector<std::string> relations;
    std::vector<std::string> identities;
    bool metric_only = false;
};

std::vector<CatalogEntrySummary> list_catalog(const Catalog& cat);
std::vector<CatalogEntrySummary> list_catalog();

/// Momentum sampling ranges shared by all charts (positions come from the
/// record's box).
constexpr double kMomentumRe = 1.2;
constexpr double kMomentumIm = 0.5;

/// Draws an admissible complex phase point from a box, rejecting guard
/// violations.  Throws InadmissiblePoint if max_tries exhausted.
PhasePoint sample_point(Rng& rng, const std::string& chart_id, const SampleBox& box,
                        const std::vector<ExprPtr>& guards, const ParamMap& params,
                        int max_tries = 500);

/// Admissible point in the system's defining chart.
PhasePoint sample_admissible(const SystemInstance& s, Rng& rng);

/// Complex parameter values for a record, resampled away from its listed
/// degenerate values.
ParamMap sample_params(const SystemRecord& rec, Rng& rng);

/// The record's default (real) parameter values, for trajectories and CLI.
ParamMap default_params(const SystemRecord& rec);

/// Momentum-polynomial structure of a constant at a position:
///   order 2:  C = a11 p1^2 + 2 a12 p1 p2 + a22 p2^2 + lambda(q)
///   order 1:  C = a1 p1 + a2 p2
/// extracted by differentiating in the momenta (exact for polynomial C).
struct QuadraticCoefficients {
    Scalar a11{}, a12{}, a22{}, lambda{};
    std::array<Scalar, 2> a1{}; // first-order coefficients
};
QuadraticCoefficients momentum_coefficients(const PhaseFunction& f,
                                            const std::array<Scalar, 2>& q);

/// Point on the complex two-sphere model carried by the (z,w) chart:
///   s1 = (z+w)/(1+zw), s2 = -i(z-w)/(1+zw), s3 = (1-zw)/(1+zw),
/// with the angular momenta J spanning the isometries.
struct SphereModelPoint {
    std::array<Scalar, 3> s{};
    std::array<Scalar, 3> J{};
};
SphereModelPoint sphere_model_point(const PhasePoint& zw);

} // namespace supint
