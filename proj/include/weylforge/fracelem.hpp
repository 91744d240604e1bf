#pragma once

#include "weylforge/cpoly.hpp"

#include <set>
#include <string>

namespace weylforge {

/// Element of the fraction field of CPoly. Normalization clears rational
/// content and common monomial factors and fixes the denominator's leading
/// coefficient positive; no full polynomial gcd is computed, so equality is
/// decided by cross-multiplication. Arithmetic accumulates the set of
/// denominator polynomials asserted nonzero.
class FracElem {
public:
    FracElem() : num_(), den_(Rational(1)) {}
    FracElem(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    explicit FracElem(CPoly num) : num_(std::move(num)), den_(Rational(1)) {}
    FracElem(CPoly num, CPoly den, std::set<CPoly> assumptions = {});

    static FracElem parameter(const std::string& name) {
        return FracElem(CPoly::variable(name));
    }

    const CPoly& num() const { return num_; }
    const CPoly& den() const { return den_; }
    const std::set<CPoly>& assumptions() const { return assumptions_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    /// True when both num and den are rational constants.
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rational rational_value() const;  // requires is_rational()
    bool is_polynomial() const { return den_.is_constant(); }
    /// Numerator scaled by 1/den when den is constant; requires is_polynomial().
    CPoly polynomial_value() const;

    FracElem operator-() const;
    friend FracElem operator+(const FracElem& a, const FracElem& b);
    friend FracElem operator-(const FracElem& a, const FracElem& b);
    friend FracElem operator*(const FracElem& a, const FracElem& b);
    friend FracElem operator/(const FracElem& a, const FracElem& b);  // throws on zero divisor
    FracElem& operator+=(const FracElem& o) { return *this = *this + o; }
    FracElem& operator-=(const FracElem& o) { return *this = *this - o; }
    FracElem& operator*=(const FracElem& o) { return *this = *this * o; }
    FracElem& operator/=(const FracElem& o) { return *this = *this / o; }

    FracElem inverse() const;

    /// Cross-multiplied equality a.num*b.den == b.num*a.den.
    friend bool operator==(const FracElem& a, const FracElem& b);
    friend bool operator!=(const FracElem& a, const FracElem& b) { return !(a == b); }
    /// Deterministic structural order (for use as map/set key).
    friend bool operator<(const FracElem& a, const FracElem& b);

    FracElem substitute(const std::map<std::string, Rational>& env) const;
    std::set<std::string> variables() const;

    /// "num" or "(num)/(den)" in canonical CPoly text.
    std::string str() const;

private:
    void normalize();

    CPoly num_, den_;
    std::set<CPoly> assumptions_;
};

std::ostream& operator<<(std::ostream& os, const FracElem& f);

/// Evaluate a CPoly with some parameters replaced by field elements;
/// unmapped parameters stay symbolic.
FracElem substitute_frac(const CPoly& p, const std::map<std::string, FracElem>& env);

}  // namespace weylforge
