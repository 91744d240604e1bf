#pragma once

#include "weylforge/algebra.hpp"

#include <string>
#include <vector>

namespace weylforge {

/// Writing p = p_0(t) + p_1(t)x + ... + p_n(t)x^n and likewise q, with zero
/// summands padded so both reach the common bound n. The t-coefficients are
/// CPoly values in the parameter "t".
struct PairDecomposition {
    unsigned n = 0;                 // common x-degree bound
    unsigned m = 0;                 // max t-degree over all coefficients
    std::vector<CPoly> p_coeffs;    // indices 0..n
    std::vector<CPoly> q_coeffs;
};

/// The 2n residuals of the determinant-identity battery: residual s is
///   sum_{r>=1} sum_{i+j=s+r} C(j,r) (q_j p_i^{(r)} - p_j q_i^{(r)})  -  [s = 0],
/// all zero iff the pair is Dixmier.
struct IdentityBattery {
    std::vector<CPoly> residuals;  // size 2n

    bool all_zero() const;
};

/// M a = b whose solutions complete the generators to a skew tuple; M is
/// skew-symmetric of size (n-1) x (n-1), b = (d_1n, ..., d_{n-1,n}).
struct SkewLinearSystem {
    std::vector<std::vector<FracElem>> M;
    std::vector<FracElem> b;
};

/// qp = pq + 1, i.e. [q,p] = 1. Signature must be A_1.
bool check_dixmier_pair(const NCPoly& p, const NCPoly& q);

/// Lossless x-coefficient split of an A_1 pair. Coefficients must clear to
/// polynomials (no symbolic denominators) and must not use a parameter "t".
PairDecomposition decompose_pair(const NCPoly& p, const NCPoly& q);

IdentityBattery build_identity_battery(const PairDecomposition& d);

/// Determinant of the 2x2 coefficient matrix [[b,a],[d,c]] of a linear pair
/// p = b t + a x, q = d t + c x with zero constant terms.
FracElem linear_pair_det(const NCPoly& p, const NCPoly& q);

/// [p_j, p_i] = d_ij for all i < j.
bool check_skew_tuple(const std::vector<NCPoly>& ps, const SignaturePtr& sig);

SkewLinearSystem build_skew_linear_system(const SignaturePtr& sig);

/// Closed-form families of Dixmier pairs. Identifiers: "type1".."type4",
/// "xdeg1.case1", "xdeg1.case2" (take `m`), "tdeg1.case1", "tdeg1.case2"
/// (take `n`). fdata is the free polynomial f (resp. g) as a CPoly in the
/// single parameter named "u"; families that take none ignore it.
struct FamilySpec {
    std::string id;
    unsigned size = 0;  // t-degree m for xdeg1, x-degree n for tdeg1
};

std::pair<NCPoly, NCPoly> family_instantiate(const FamilySpec& family,
                                             const std::map<std::string, Rational>& params,
                                             const CPoly& fdata = CPoly());

/// Condition-(iii) matrix of a closed-form family together with its known
/// inverse, as 2x2 row-major entries. The type families carry their own
/// matrix pair; the degree-1 families use the adjugate-shaped inverse
/// [[Q, -P], [-d, b]].
struct FamilyMatrices {
    std::vector<NCPoly> matrix;   // row-major 2x2
    std::vector<NCPoly> inverse;  // row-major 2x2
};

FamilyMatrices family_matrices(const FamilySpec& family,
                               const std::map<std::string, Rational>& params,
                               const CPoly& fdata = CPoly());

}  // namespace weylforge
