#pragma once

#include "weylforge/algebra.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace weylforge {

/// Ordered unknown parameters of a generated system. Deterministic given the
/// generation parameters; constant terms p_{0,0}, q_{0,0} (Weyl) and the
/// total-constant coefficients (skew) are omitted.
struct UnknownCatalog {
    std::vector<std::string> names;

    bool contains(const std::string& name) const;
};

/// Polynomial equation system: every CPoly equals 0. The unit equation of the
/// Dixmier systems is stored as poly - 1.
struct EqSystem {
    std::vector<CPoly> equations;
};

struct Assignment {
    std::map<std::string, FracElem> values;
};
struct Inconsistent {};
struct Unknown {};

struct SolveResult {
    std::variant<Assignment, Inconsistent, Unknown> outcome;
    std::set<CPoly> assumptions;        // polynomials asserted nonzero
    std::set<std::string> free;         // unknowns left free

    bool is_assignment() const { return std::holds_alternative<Assignment>(outcome); }
    bool is_inconsistent() const { return std::holds_alternative<Inconsistent>(outcome); }
    bool is_unknown() const { return std::holds_alternative<Unknown>(outcome); }
    const Assignment& assignment() const { return std::get<Assignment>(outcome); }
};

/// Equations for [q,p] = 1 over generic coefficients
///   p = sum_{i<=n} p_i(t) x^i, p_0 = p01*t+...+p0m*t^m,
///   p_i = pi0+...+pim*t^m (i >= 1), q likewise.
/// One equation per standard monomial t^a x^b, ordered deglex-descending on
/// the indexing monomial. Unknown names are p<i><j>, q<i><j>.
std::pair<UnknownCatalog, EqSystem> generate_dixmier_system(unsigned n, unsigned m);

/// Skew analogue: unknown polynomials p_1..p_n in CSD_n with per-variable
/// degree caps; equations from [p_j, p_i] - d_ij per ordered pair i < j.
/// Unknown names are c<k>m<e_1>...<e_n>.
std::pair<UnknownCatalog, EqSystem> generate_skew_system(const SignaturePtr& sig,
                                                         const std::vector<unsigned>& bounds);

/// Unknown polynomial for slot k of a skew system under `bounds`, assembled
/// from an assignment (free unknowns keep their symbolic names).
NCPoly skew_unknown_poly(const SignaturePtr& sig, const std::vector<unsigned>& bounds, unsigned k,
                         const std::map<std::string, FracElem>& values);

/// Exact Gaussian elimination over the parameter fraction field. Every
/// equation must be affine in the catalog unknowns; other parameters ride
/// along symbolically. Constant pivots are preferred; each symbolic pivot
/// records a nonzero assumption. A row 0 = nonzero reports Inconsistent.
SolveResult linear_solve_exact(const EqSystem& sys, const UnknownCatalog& unknowns);

struct GroebnerCaps {
    std::size_t max_pairs = 10000;
    unsigned max_degree = 20;
};

struct Basis {
    std::vector<CPoly> polys;
};
struct CapReached {};
using GroebnerResult = std::variant<Basis, CapReached>;

/// Remainder of f on division by basis: no monomial of the result is
/// divisible by any basis leading monomial.
CPoly normal_form(const CPoly& f, const std::vector<CPoly>& basis, const MonoOrder& order);

/// Buchberger with the coprime-leading-monomial criterion; the returned basis
/// is auto-reduced, integer-primitive, positive leading coefficients.
GroebnerResult groebner_basis(std::vector<CPoly> gens, const MonoOrder& order,
                              const GroebnerCaps& caps = {});

enum class Ternary { True, False, Unknown };

/// Ideal membership of 1 via Groebner; Unknown when caps are hit.
Ternary ideal_contains_one(const std::vector<CPoly>& gens, const GroebnerCaps& caps = {});

/// Caps from WEYLFORGE_GROEBNER_CAPS="pairs,degree", else defaults.
GroebnerCaps groebner_caps_from_env();

}  // namespace weylforge
