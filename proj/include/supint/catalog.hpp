#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "supint/expr.hpp"

namespace supint {

/// Complex sampling box for one chart: re/im ranges for each of the two
/// positions.  Momentum ranges are uniform across the catalog.
struct SampleBox {
    // q1 re lo/hi, q1 im lo/hi, q2 re lo/hi, q2 im lo/hi
    std::array<double, 8> b{-1.5, 1.5, -1.5, 1.5, -1.5, 1.5, -1.5, 1.5};
};

/// Real sampling box for trajectory initial data.
struct RealBox {
    std::array<double, 6> b{0.5, 1.5, -1.0, 1.0, -1.0, 1.0}; // q1, q2 ranges, p range
};

/// A printed replacement for a display that fails numerical verification.
struct Correction {
    ExprPtr expr;
    std::string note;
};

struct ConstantRecord {
    std::string name;
    int order = 2; // polynomial degree in momenta (1, 2, or 4)
    ExprPtr expr;  // slots (0,1,2,3) = (q1,q2,p1,p2) of the defining chart
    std::optional<Correction> corrected; // replacement for expr
};

struct RelationRecord {
    std::string id;
    std::string lhs_a, lhs_b; // bracket arguments, by generator name
    ExprPtr rhs;              // over generator slots
    std::optional<Correction> corrected;
};

struct IdentityRecord {
    std::string id;
    ExprPtr expr; // over generator slots; asserted = 0
    bool r_squared = false; // contains the R generator (R evaluated as {R1,R2})
    std::optional<Correction> corrected;
};

struct OperatorTerm {
    ExprPtr coeff; // position function over slots (0,1) of the defining chart
    int du = 0, dv = 0;
};

struct OperatorRecord {
    std::string name; // quantum generator name (H, K, X1, X2, R1, R2)
    std::vector<OperatorTerm> terms;
};

struct OperatorRelationRecord {
    std::string id;
    std::string lhs_a, lhs_b; // commutator arguments, by operator name
    ExprPtr rhs;              // operator expression over generator slots
    std::optional<Correction> corrected;
};

struct OperatorIdentityRecord {
    std::string id;
    ExprPtr expr; // operator expression over generator slots; = 0
    std::optional<Correction> corrected;
};

struct SystemRecord {
    std::string id;
    std::string space;    // D1, D2, D3, D4, E2C, S2C
    std::string chart_id; // defining chart
    std::vector<std::string> required_params;
    std::vector<std::pair<std::string, Scalar>> default_params; // trajectory/CLI defaults
    std::vector<std::pair<std::string, Scalar>> degenerate_params;
    ExprPtr hamiltonian;
    std::vector<ExprPtr> guards; // admissibility in the defining chart
    SampleBox box;
    bool real_flow = false;
    RealBox real_box;
    bool metric_only = false;
    std::vector<ConstantRecord> constants;
    std::vector<std::string> generators; // slot order for relation/identity exprs
    std::vector<RelationRecord> relations;
    std::vector<IdentityRecord> identities;
    bool quad_algebra = false;      // closure relations derived from the R^2 identity
    std::string r2_identity_id;
    std::vector<OperatorRecord> operators;
    std::vector<OperatorRelationRecord> op_relations;
    std::vector<OperatorIdentityRecord> op_identities;

    const ConstantRecord* find_constant(const std::string& name) const;
};

struct ChartRecord {
    std::string id;    // e.g. D2.elliptic
    std::string space; // D2, D3, D4
    std::vector<std::string> coord_names;
    std::vector<std::string> required_params;
    std::vector<std::pair<std::string, Scalar>> default_params;
    ExprPtr to_base_u, to_base_v;         // base coords as functions of chart coords
    ExprPtr from_base_q1, from_base_q2;   // chart coords as functions of base coords
    std::vector<ExprPtr> guards_chart;    // admissibility in chart coords
    std::vector<ExprPtr> guards_base;     // admissibility of the inverse at base points
    SampleBox box;                        // fundamental domain (chart coords)
};

struct StackelRecord {
    std::string id;
    std::string system_id;
    std::string chart_id;
    // H = (f1(q1) p1^2 + f2(q2) p2^2 + v1(q1) + v2(q2)) / (g1(q1) + g2(q2)),
    // each factor a single-variable expression in slot 0.
    ExprPtr f1, f2, v1, v2, g1, g2;
    std::optional<Correction> corrected_f1, corrected_f2;
    std::optional<Correction> corrected_v1, corrected_v2;
    std::optional<Correction> corrected_g1, corrected_g2;
};

/// A printed display of a constant of motion in a non-reference chart,
/// equal to a generator-space combination of the reference constants.
struct ChartConstantRecord {
    std::string id;
    std::string system_id;
    std::string chart_id;
    ExprPtr chart_expr; // over chart phase slots
    ExprPtr combo;      // over the system's generator slots
    std::optional<Correction> corrected; // replacement for chart_expr
};

struct EmbeddingRecord {
    std::string id;
    std::string space;
    std::string variant; // "printed" or "corrected"
    bool deviation = false;
    std::vector<std::string> required_params;
    ExprPtr X, Y, T;       // position functions over base slots (0,1)
    ExprPtr conformal;     // target metric coefficient over base slots
    std::vector<ExprPtr> guards;
    SampleBox box;
    std::string note;
};

struct CCMRowRecord {
    std::string id;        // e.g. E6:D2
    std::string source_id; // catalog id of the constant-curvature system
    ExprPtr divisor;       // V0 in source coordinates
    std::string target_space;
    std::string target_free_id;
    ExprPtr u_map, v_map;  // target base coords as functions of source coords
    Scalar h_scale{1.0};   // H' = h_scale * (kinetic / V0) matches target H0
    std::string identity_class;
};

struct GenPairRecord {
    std::string id;        // e.g. D2:E1->D2.B
    std::string source_id; // nondegenerate constant-curvature system
    ExprPtr divisor;       // V0 in source coordinates
    std::string target_id; // Darboux potential entry
    ExprPtr u_map, v_map;  // target defining coords as functions of source coords
    Scalar h_scale{1.0};
    std::string note;
};

struct Catalog {
    int version = 1;
    std::vector<SystemRecord> systems;
    std::vector<ChartRecord> charts;
    std::vector<StackelRecord> stackel;
    std::vector<ChartConstantRecord> chart_constants;
    std::vector<EmbeddingRecord> embeddings;
    std::vector<CCMRowRecord> ccm_rows;
    std::vector<GenPairRecord> gen_pairs;

    const SystemRecord& system(const std::string& id) const;
    const SystemRecord* find_system(const std::string& id) const;
    const ChartRecord& chart(const std::string& id) const;
    const ChartRecord* find_chart(const std::string& id) const;
};

/// Deterministic text serialization (byte-stable for a fixed catalog).
std::string catalog_to_text(const Catalog& c);
Catalog catalog_from_text(const std::string& text);

Catalog load_catalog_file(const std::string& path);
void save_catalog_file(const Catalog& c, const std::string& path);

/// Default resolution order: SUPINT_CATALOG env var, then ./data/catalog.sup,
/// then the build-time source path.
std::string default_catalog_path();
const Catalog& shared_catalog(); // loaded once from default_catalog_path()

/// SHA-256 of a byte string, lowercase hex (for the golden-hash test and
/// report manifests).
std::string sha256_hex(const std::string& bytes);

/// Constructs the full catalog in memory (the authoritative builder; the
/// checked-in data file is its serialization).
Catalog build_catalog();

} // namespace supint
