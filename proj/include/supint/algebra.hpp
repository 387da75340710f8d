#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "supint/systems.hpp"

namespace supint {

struct VerificationReport {
    std::string system_id;
    std::string check_id;
    std::string kind; // conservation | relation | identity | quad-closure | ...
    int points = 0;
    double max_residual = 0.0;
    bool pass = false;
    bool deviation = false; // corrected display used after the printed one failed
    std::uint64_t seed = 0;
    std::string note;
};

/// Residual tolerance for classical checks, relative to the local term scale.
constexpr double kClassicalTol = 1e-9;

/// Values of the system's generators (record order; "R" = {R1,R2}) at x.
std::vector<Scalar> generator_values(const SystemInstance& s, const PhasePoint& x);

/// |{H,C}| / scale over sampled points.
VerificationReport verify_conservation(const SystemInstance& s, const std::string& cname,
                                       int n_points, std::uint64_t seed);

/// |{lhs_a,lhs_b} - rhs(generators)| / scale.  Falls back to the corrected
/// display (flagging deviation) when the printed one fails.
VerificationReport verify_relation(const SystemInstance& s, const RelationRecord& r,
                                   int n_points, std::uint64_t seed);

/// |P(generators)| / scale for a polynomial identity (R evaluated as {R1,R2}).
VerificationReport verify_identity(const SystemInstance& s, const IdentityRecord& idn,
                                   int n_points, std::uint64_t seed);

/// Closure of a quadratic algebra: with the defining identity written as
/// P(H,R1,R2,R) = 0 carrying R only through R^2, checks
///   {R,R1} = +1/2 dP/dR2   and   {R,R2} = -1/2 dP/dR1
/// (equivalently the stated derivatives of the R^2 polynomial).
VerificationReport verify_quad_closure(const SystemInstance& s, int which /*1 or 2*/,
                                       int n_points, std::uint64_t seed);

/// Rank of the Jacobian of (H, constants...) w.r.t. (q,p) at x; singular
/// values below 1e-8 x largest are treated as zero.
int functional_rank(const SystemInstance& s, const PhasePoint& x);

/// Every classical check attached to the system, in catalog order.
std::vector<VerificationReport> verify_system_classical(const SystemInstance& s,
                                                        int n_points, std::uint64_t seed);

struct LedgerEntry {
    std::string system_id;
    std::string check_id;
    double as_printed_residual = 0.0;
    double corrected_residual = 0.0;
    std::string note;
};

/// Re-runs a failed printed check against its corrected display and records
/// the outcome; throws CorrectionAlsoFails if the correction fails too.
LedgerEntry ledger_record(const SystemInstance& s, const std::string& check_id,
                          int n_points, std::uint64_t seed);

} // namespace supint
