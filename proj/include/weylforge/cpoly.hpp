#pragma once

#include "weylforge/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace weylforge {

/// Named commutative parameter (t, l0, l1, d12, ...). Ordered by name.
struct Parameter {
    std::string name;

    friend bool operator==(const Parameter& a, const Parameter& b) { return a.name == b.name; }
    friend bool operator<(const Parameter& a, const Parameter& b) { return a.name < b.name; }
};

/// Power product of parameters; exponents are strictly positive.
using ParamMono = std::map<std::string, unsigned>;

enum class MonoOrderKind { Lex, DegLex };

/// Monomial order over an explicit variable precedence list. Variables not
/// listed rank below all listed ones, compared by name.
struct MonoOrder {
    MonoOrderKind kind = MonoOrderKind::DegLex;
    std::vector<std::string> vars;

    /// <0, 0, >0 like a three-way comparison; positive means a > b.
    int compare(const ParamMono& a, const ParamMono& b) const;
};

/// Commutative multivariate polynomial over the rationals.
/// Zero coefficients are never stored; the zero polynomial has no terms.
class CPoly {
public:
    CPoly() = default;
    explicit CPoly(Rational c);
    explicit CPoly(const Parameter& p, unsigned exp = 1, Rational c = Rational(1));

    static CPoly constant(Rational c) { return CPoly(std::move(c)); }
    static CPoly variable(const std::string& name) { return CPoly(Parameter{name}); }

    const std::map<ParamMono, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value; requires is_constant().
    Rational constant_value() const;

    unsigned total_degree() const;
    unsigned degree_in(const std::string& var) const;
    std::set<std::string> variables() const;
    bool depends_on(const std::string& var) const;

    CPoly operator-() const;
    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    CPoly& operator*=(const CPoly& o) { *this = *this * o; return *this; }
    CPoly scaled(const Rational& c) const;

    friend bool operator==(const CPoly& a, const CPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const CPoly& a, const CPoly& b) { return !(a == b); }
    friend bool operator<(const CPoly& a, const CPoly& b) { return a.terms_ < b.terms_; }

    CPoly derivative(const Parameter& v) const;
    CPoly substitute(const std::map<std::string, Rational>& env) const;
    /// Substitute a variable by a whole polynomial.
    CPoly substitute_poly(const std::string& var, const CPoly& value) const;

    /// Exact quotient a/b, or nullopt when b does not divide a. b must be nonzero.
    static std::optional<CPoly> divide_exact(const CPoly& a, const CPoly& b);

    /// Leading monomial/coefficient under `order`. Polynomial must be nonzero.
    const ParamMono& leading_monomial(const MonoOrder& order) const;
    const Rational& leading_coefficient(const MonoOrder& order) const;

    /// gcd of coefficient numerators / lcm of denominators, signed so the
    /// deglex-leading coefficient of poly/content is positive. Zero poly -> 0.
    Rational content() const;
    /// poly / content(): integer-primitive with positive leading coefficient.
    CPoly primitive_part() const;

    /// Canonical text, deglex-descending terms, e.g. "3*l0^2*l1 - 2*t + 1/2".
    std::string str() const;

    void add_term(const ParamMono& m, const Rational& c);

private:
    std::map<ParamMono, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const CPoly& p);

/// Default order used for canonical printing: deglex over name-sorted parameters.
const MonoOrder& default_order();

ParamMono mono_mul(const ParamMono& a, const ParamMono& b);
bool mono_divides(const ParamMono& a, const ParamMono& b);  // a | b
ParamMono mono_div(const ParamMono& b, const ParamMono& a);  // b / a, requires a | b
ParamMono mono_lcm(const ParamMono& a, const ParamMono& b);
unsigned mono_total_degree(const ParamMono& m);

}  // namespace weylforge
