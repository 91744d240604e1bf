#pragma once

#include "weylforge/fracelem.hpp"

#include <memory>
#include <vector>

namespace weylforge {

/// The algebra CSD_n(K): generators x_1..x_n with x_j*x_i = x_i*x_j + d_ij
/// for i < j, every d_ij nonzero. A_1(K) is the preset n = 2, d_12 = 1 with
/// printing aliases t = x_1, x = x_2.
class Signature {
public:
    /// d holds the constants row-major for i < j: d_12, d_13, ..., d_{n-1,n}.
    /// Symbolic entries are recorded as nonzero assumptions.
    Signature(int n, std::vector<FracElem> d, std::vector<std::string> var_names = {});

    static std::shared_ptr<const Signature> weyl();
    static std::shared_ptr<const Signature> csd(int n, std::vector<FracElem> d);

    int n() const { return n_; }
    /// d_ij for 0 <= i < j < n (zero-based indices).
    const FracElem& d(int i, int j) const;
    const std::string& var_name(int i) const { return var_names_[i]; }
    int var_index(const std::string& name) const;  // -1 when not a variable
    bool is_weyl() const;

    friend bool operator==(const Signature& a, const Signature& b);

private:
    int n_;
    std::vector<FracElem> d_;  // upper triangle, row-major
    std::vector<std::string> var_names_;
};

using SignaturePtr = std::shared_ptr<const Signature>;
using ExpVec = std::vector<unsigned>;

/// Deglex comparison of exponent vectors: total degree first, then the
/// leftmost larger exponent wins. Returns <0, 0, >0.
int deglex_compare(const ExpVec& a, const ExpVec& b);

struct LeadingData {
    ExpVec lm;
    FracElem lc;
    unsigned deg = 0;
};

/// Element of CSD_n(K) in canonical form: a finite sum of standard monomials
/// x_1^{a_1}...x_n^{a_n} with FracElem coefficients; no zero coefficient is
/// ever stored.
class NCPoly {
public:
    explicit NCPoly(SignaturePtr sig) : sig_(std::move(sig)) {}

    static NCPoly zero(SignaturePtr sig) { return NCPoly(std::move(sig)); }
    static NCPoly scalar(SignaturePtr sig, FracElem c);
    static NCPoly generator(SignaturePtr sig, int i, unsigned exp = 1);
    static NCPoly monomial(SignaturePtr sig, ExpVec e, FracElem c);

    const SignaturePtr& sig() const { return sig_; }
    const std::map<ExpVec, FracElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    FracElem scalar_value() const;  // requires is_scalar() or zero
    unsigned degree() const;        // total degree; 0 for the zero polynomial

    void add_term(const ExpVec& e, const FracElem& c);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    NCPoly scaled(const FracElem& c) const;

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    NCPoly substitute_params(const std::map<std::string, Rational>& env) const;

private:
    SignaturePtr sig_;
    std::map<ExpVec, FracElem> terms_;
};

/// Canonical product, collecting through the closed form
/// x_j^b x_i^a = sum_k k! C(a,k) C(b,k) d_ij^k x_i^{a-k} x_j^{b-k}.
NCPoly nc_mul(const NCPoly& f, const NCPoly& g);
NCPoly nc_pow(const NCPoly& f, unsigned e);

/// [f,g] = f*g - g*f.
NCPoly commutator(const NCPoly& f, const NCPoly& g);

/// Leading data under deglex. f must be nonzero.
LeadingData leading_data(const NCPoly& f);

/// Number of nonzero homogeneous components in the Z-graduation of A_1 where
/// a monomial t^a x^b sits in component a - b. f nonzero, Signature A_1.
unsigned mass(const NCPoly& f);

/// True iff [x_k, f] = 0 for every generator x_k.
bool is_central(const NCPoly& f);

}  // namespace weylforge
