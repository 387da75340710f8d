#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "supint/catalog.hpp"
#include "supint/expr.hpp"

namespace supint::build {

// Phase-slot shorthands for exprs in a two-coordinate chart.
inline E Q1() { return var(0); }
inline E Q2() { return var(1); }
inline E P1() { return var(2); }
inline E P2() { return var(3); }

/// Maps generator names to var slots for relation/identity expressions.
struct Gens {
    std::vector<std::string> names;
    E operator()(const std::string& n) const {
        for (size_t k = 0; k < names.size(); ++k)
            if (names[k] == n) return var(static_cast<int>(k));
        throw std::logic_error("catalog builder: unknown generator " + n);
    }
};

inline SampleBox box(double r1lo, double r1hi, double i1lo, double i1hi,
                     double r2lo, double r2hi, double i2lo, double i2hi) {
    SampleBox b;
    b.b = {r1lo, r1hi, i1lo, i1hi, r2lo, r2hi, i2lo, i2hi};
    return b;
}

inline RealBox realbox(double q1lo, double q1hi, double q2lo, double q2hi,
                       double plo, double phi) {
    RealBox b;
    b.b = {q1lo, q1hi, q2lo, q2hi, plo, phi};
    return b;
}

inline std::vector<ExprPtr> guard_list(std::initializer_list<E> gs) {
    std::vector<ExprPtr> out;
    for (const E& g : gs) out.push_back(g.p);
    return out;
}

inline OperatorTerm term(E coeff, int du, int dv) { return {coeff.p, du, dv}; }

inline RelationRecord rel(std::string id, std::string a, std::string b, E rhs) {
    return {std::move(id), std::move(a), std::move(b), rhs.p, std::nullopt};
}

inline RelationRecord rel_fixed(std::string id, std::string a, std::string b, E rhs,
                                E fixed, std::string note) {
    return {std::move(id), std::move(a), std::move(b), rhs.p,
            Correction{fixed.p, std::move(note)}};
}

inline IdentityRecord ident(std::string id, E expr, bool r_squared = false) {
    return {std::move(id), expr.p, r_squared, std::nullopt};
}

inline IdentityRecord ident_fixed(std::string id, E expr, bool r_squared, E fixed,
                                  std::string note) {
    return {std::move(id), expr.p, r_squared, Correction{fixed.p, std::move(note)}};
}

inline OperatorRelationRecord oprel(std::string id, std::string a, std::string b, E rhs) {
    return {std::move(id), std::move(a), std::move(b), rhs.p, std::nullopt};
}

inline OperatorRelationRecord oprel_fixed(std::string id, std::string a, std::string b,
                                          E rhs, E fixed, std::string note) {
    return {std::move(id), std::move(a), std::move(b), rhs.p,
            Correction{fixed.p, std::move(note)}};
}

inline OperatorIdentityRecord opident(std::string id, E expr) {
    return {std::move(id), expr.p, std::nullopt};
}

inline OperatorIdentityRecord opident_fixed(std::string id, E expr, E fixed,
                                            std::string note) {
    return {std::move(id), expr.p, Correction{fixed.p, std::move(note)}};
}

inline StackelRecord stackel(std::string id, std::string system, std::string chart, E f1,
                             E f2, E v1, E v2, E g1, E g2) {
    return {std::move(id), std::move(system), std::move(chart),
            f1.p, f2.p, v1.p, v2.p, g1.p, g2.p};
}

void add_d1(Catalog& c);
void add_d2(Catalog& c);
void add_d3(Catalog& c);
void add_d4(Catalog& c);
void add_ccm(Catalog& c);

} // namespace supint::build
