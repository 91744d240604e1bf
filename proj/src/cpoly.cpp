#include "weylforge/cpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace weylforge {

unsigned mono_total_degree(const ParamMono& m) {
    unsigned d = 0;
    for (const auto& [name, e] : m) d += e;
    return d;
}

ParamMono mono_mul(const ParamMono& a, const ParamMono& b) {
    ParamMono out = a;
    for (const auto& [name, e] : b) out[name] += e;
    return out;
}

bool mono_divides(const ParamMono& a, const ParamMono& b) {
    for (const auto& [name, e] : a) {
        auto it = b.find(name);
        if (it == b.end() || it->second < e) return false;
    }
    return true;
}

ParamMono mono_div(const ParamMono& b, const ParamMono& a) {
    ParamMono out = b;
    for (const auto& [name, e] : a) {
        auto it = out.find(name);
        if (it == out.end() || it->second < e) throw std::logic_error("mono_div: not divisible");
        it->second -= e;
        if (it->second == 0) out.erase(it);
    }
    return out;
}

ParamMono mono_lcm(const ParamMono& a, const ParamMono& b) {
    ParamMono out = a;
    for (const auto& [name, e] : b) {
        auto it = out.find(name);
        if (it == out.end() || it->second < e) out[name] = e;
    }
    return out;
}

int MonoOrder::compare(const ParamMono& a, const ParamMono& b) const {
    if (a == b) return 0;
    if (kind == MonoOrderKind::DegLex) {
        unsigned da = mono_total_degree(a), db = mono_total_degree(b);
        if (da != db) return da > db ? 1 : -1;
    }
    auto exp_of = [](const ParamMono& m, const std::string& v) -> unsigned {
        auto it = m.find(v);
        return it == m.end() ? 0u : it->second;
    };
    for (const auto& v : vars) {
        unsigned ea = exp_of(a, v), eb = exp_of(b, v);
        if (ea != eb) return ea > eb ? 1 : -1;
    }
    // remaining variables by name
    std::set<std::string> rest;
    for (const auto& [name, e] : a)
        if (std::find(vars.begin(), vars.end(), name) == vars.end()) rest.insert(name);
    for (const auto& [name, e] : b)
        if (std::find(vars.begin(), vars.end(), name) == vars.end()) rest.insert(name);
    for (const auto& v : rest) {
        unsigned ea = exp_of(a, v), eb = exp_of(b, v);
        if (ea != eb) return ea > eb ? 1 : -1;
    }
    return 0;
}

const MonoOrder& default_order() {
    static const MonoOrder order{MonoOrderKind::DegLex, {}};
    return order;
}

CPoly::CPoly(Rational c) {
    if (!c.is_zero()) terms_.emplace(ParamMono{}, std::move(c));
}

CPoly::CPoly(const Parameter& p, unsigned exp, Rational c) {
    if (c.is_zero()) return;
    ParamMono m;
    if (exp > 0) m[p.name] = exp;
    terms_.emplace(std::move(m), std::move(c));
}

bool CPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational CPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("CPoly: not a constant");
    return terms_.begin()->second;
}

unsigned CPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_total_degree(m));
    return d;
}

unsigned CPoly::degree_in(const std::string& var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        if (it != m.end()) d = std::max(d, it->second);
    }
    return d;
}

std::set<std::string> CPoly::variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [name, e] : m) out.insert(name);
    return out;
}

bool CPoly::depends_on(const std::string& var) const {
    for (const auto& [m, c] : terms_)
        if (m.count(var)) return true;
    return false;
}

void CPoly::add_term(const ParamMono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CPoly CPoly::operator-() const {
    CPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

CPoly& CPoly::operator+=(const CPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
    CPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
}

CPoly CPoly::scaled(const Rational& c) const {
    CPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
    return out;
}

CPoly CPoly::derivative(const Parameter& v) const {
    CPoly out;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(v.name);
        if (it == m.end()) continue;
        unsigned e = it->second;
        ParamMono m2 = m;
        if (e == 1)
            m2.erase(v.name);
        else
            m2[v.name] = e - 1;
        out.add_term(m2, c * Rational(static_cast<long>(e)));
    }
    return out;
}

CPoly CPoly::substitute(const std::map<std::string, Rational>& env) const {
    CPoly out;
    for (const auto& [m, c] : terms_) {
        Rational coef = c;
        ParamMono m2;
        for (const auto& [name, e] : m) {
            auto it = env.find(name);
            if (it == env.end()) {
                m2[name] = e;
            } else {
                for (unsigned k = 0; k < e; ++k) coef *= it->second;
            }
        }
        out.add_term(m2, coef);
    }
    return out;
}

CPoly CPoly::substitute_poly(const std::string& var, const CPoly& value) const {
    CPoly out;
    for (const auto& [m, c] : terms_) {
        ParamMono m2 = m;
        unsigned e = 0;
        auto it = m2.find(var);
        if (it != m2.end()) {
            e = it->second;
            m2.erase(it);
        }
        CPoly term;
        term.add_term(m2, c);
        for (unsigned k = 0; k < e; ++k) term = term * value;
        out += term;
    }
    return out;
}

const ParamMono& CPoly::leading_monomial(const MonoOrder& order) const {
    if (terms_.empty()) throw std::logic_error("CPoly: leading monomial of zero");
    const ParamMono* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (order.compare(m, *best) > 0) best = &m;
    return *best;
}

const Rational& CPoly::leading_coefficient(const MonoOrder& order) const {
    return terms_.at(leading_monomial(order));
}

std::optional<CPoly> CPoly::divide_exact(const CPoly& a, const CPoly& b) {
    if (b.is_zero()) throw std::domain_error("CPoly::divide_exact: zero divisor");
    const MonoOrder& order = default_order();
    const ParamMono& lmb = b.leading_monomial(order);
    const Rational& lcb = b.terms_.at(lmb);
    CPoly r = a, q;
    while (!r.is_zero()) {
        const ParamMono& lmr = r.leading_monomial(order);
        if (!mono_divides(lmb, lmr)) return std::nullopt;
        Rational c = r.terms_.at(lmr) / lcb;
        ParamMono qm = mono_div(lmr, lmb);
        q.add_term(qm, c);
        CPoly piece;
        piece.add_term(qm, c);
        r -= piece * b;
    }
    return q;
}

Rational CPoly::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
    Rational content(mpq_class(num_gcd, den_lcm));
    if (leading_coefficient(default_order()).sign() < 0) content = -content;
    return content;
}

CPoly CPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    return scaled(content().inverse());
}

std::string CPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const ParamMono, Rational>*> ordered;
    ordered.reserve(terms_.size());
    for (const auto& t : terms_) ordered.push_back(&t);
    const MonoOrder& order = default_order();
    std::sort(ordered.begin(), ordered.end(),
              [&](auto* a, auto* b) { return order.compare(a->first, b->first) > 0; });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ordered) {
        const auto& [m, c] = *t;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0 && m.empty()) {
                os << c.str();
                first = false;
                continue;
            }
            if (c.sign() < 0)
                os << "-" << mag.str() << "*";
            else if (!mag.is_one() || m.empty())
                os << mag.str() << (m.empty() ? "" : "*");
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (!mag.is_one() || m.empty()) os << mag.str() << (m.empty() ? "" : "*");
        }
        bool firstvar = true;
        for (const auto& [name, e] : m) {
            if (!firstvar) os << "*";
            os << name;
            if (e > 1) os << "^" << e;
            firstvar = false;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CPoly& p) { return os << p.str(); }

}  // namespace weylforge
