#include "weylforge/fracelem.hpp"

#include <ostream>
#include <stdexcept>

namespace weylforge {

namespace {

/// Largest monomial dividing every term of p (zero poly -> empty).
ParamMono common_mono(const CPoly& p) {
    ParamMono out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (first) {
            out = m;
            first = false;
            continue;
        }
        ParamMono next;
        for (const auto& [name, e] : out) {
            auto it = m.find(name);
            if (it != m.end()) next[name] = std::min(e, it->second);
        }
        out = std::move(next);
        if (out.empty()) break;
    }
    return out;
}

CPoly strip_mono(const CPoly& p, const ParamMono& m) {
    if (m.empty()) return p;
    CPoly out;
    for (const auto& [mono, c] : p.terms()) out.add_term(mono_div(mono, m), c);
    return out;
}

}  // namespace

FracElem::FracElem(CPoly num, CPoly den, std::set<CPoly> assumptions)
    : num_(std::move(num)), den_(std::move(den)), assumptions_(std::move(assumptions)) {
    if (den_.is_zero()) throw std::domain_error("FracElem: zero denominator");
    if (!den_.is_constant()) assumptions_.insert(den_.primitive_part());
    normalize();
}

void FracElem::normalize() {
    if (num_.is_zero()) {
        den_ = CPoly(Rational(1));
        return;
    }
    if (num_ == den_) {
        num_ = CPoly(Rational(1));
        den_ = CPoly(Rational(1));
        return;
    }
    ParamMono shared = common_mono(num_);
    if (!shared.empty()) {
        ParamMono dm = common_mono(den_);
        ParamMono cancel;
        for (const auto& [name, e] : shared) {
            auto it = dm.find(name);
            if (it != dm.end()) cancel[name] = std::min(e, it->second);
        }
        if (!cancel.empty()) {
            num_ = strip_mono(num_, cancel);
            den_ = strip_mono(den_, cancel);
        }
    }
    Rational dc = den_.content();
    den_ = den_.scaled(dc.inverse());
    num_ = num_.scaled(dc.inverse());
    // den is now primitive with positive leading coefficient; a constant
    // denominator folds into the numerator entirely
    if (den_.is_constant()) {
        num_ = num_.scaled(den_.constant_value().inverse());
        den_ = CPoly(Rational(1));
    }
}

Rational FracElem::rational_value() const {
    if (!is_rational()) throw std::logic_error("FracElem: not rational");
    return num_.constant_value() / den_.constant_value();
}

CPoly FracElem::polynomial_value() const {
    if (!is_polynomial()) throw std::logic_error("FracElem: non-constant denominator");
    return num_.scaled(den_.constant_value().inverse());
}

FracElem FracElem::operator-() const {
    FracElem out = *this;
    out.num_ = -out.num_;
    return out;
}

namespace {
std::set<CPoly> merged(const std::set<CPoly>& a, const std::set<CPoly>& b) {
    std::set<CPoly> out = a;
    out.insert(b.begin(), b.end());
    return out;
}
}  // namespace

FracElem operator+(const FracElem& a, const FracElem& b) {
    if (a.den_ == b.den_)
        return FracElem(a.num_ + b.num_, a.den_, merged(a.assumptions_, b.assumptions_));
    return FracElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_,
                    merged(a.assumptions_, b.assumptions_));
}

FracElem operator-(const FracElem& a, const FracElem& b) { return a + (-b); }

FracElem operator*(const FracElem& a, const FracElem& b) {
    return FracElem(a.num_ * b.num_, a.den_ * b.den_, merged(a.assumptions_, b.assumptions_));
}

FracElem operator/(const FracElem& a, const FracElem& b) {
    if (b.is_zero()) throw std::domain_error("FracElem: division by zero");
    return FracElem(a.num_ * b.den_, a.den_ * b.num_, merged(a.assumptions_, b.assumptions_));
}

FracElem FracElem::inverse() const {
    if (is_zero()) throw std::domain_error("FracElem: inverse of zero");
    return FracElem(den_, num_, assumptions_);
}

bool operator==(const FracElem& a, const FracElem& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

bool operator<(const FracElem& a, const FracElem& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
}

FracElem FracElem::substitute(const std::map<std::string, Rational>& env) const {
    CPoly n = num_.substitute(env);
    CPoly d = den_.substitute(env);
    if (d.is_zero()) throw std::domain_error("FracElem::substitute: denominator vanished");
    std::set<CPoly> assum;
    for (const auto& a : assumptions_) {
        CPoly s = a.substitute(env);
        if (s.is_zero()) throw std::domain_error("FracElem::substitute: assumption violated");
        if (!s.is_constant()) assum.insert(s.primitive_part());
    }
    return FracElem(std::move(n), std::move(d), std::move(assum));
}

std::set<std::string> FracElem::variables() const {
    std::set<std::string> out = num_.variables();
    auto dv = den_.variables();
    out.insert(dv.begin(), dv.end());
    return out;
}

std::string FracElem::str() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const FracElem& f) { return os << f.str(); }

FracElem substitute_frac(const CPoly& p, const std::map<std::string, FracElem>& env) {
    FracElem out(Rational(0));
    for (const auto& [mono, c] : p.terms()) {
        FracElem term{c};
        ParamMono rest;
        for (const auto& [name, e] : mono) {
            auto it = env.find(name);
            if (it == env.end()) {
                rest[name] = e;
                continue;
            }
            for (unsigned k = 0; k < e; ++k) term *= it->second;
        }
        CPoly restpoly;
        restpoly.add_term(rest, Rational(1));
        out += term * FracElem(restpoly);
    }
    return out;
}

}  // namespace weylforge
