#include "weylforge/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylforge {

Signature::Signature(int n, std::vector<FracElem> d, std::vector<std::string> var_names)
    : n_(n), d_(std::move(d)), var_names_(std::move(var_names)) {
    if (n_ < 2) throw std::invalid_argument("Signature: n must be >= 2");
    if (d_.size() != static_cast<std::size_t>(n_ * (n_ - 1) / 2))
        throw std::invalid_argument("Signature: need n*(n-1)/2 constants d_ij");
    for (auto& dij : d_) {
        if (dij.is_zero()) throw std::invalid_argument("Signature: d_ij must be nonzero");
        if (!dij.is_rational()) {
            // record the nonzero assumption on the symbolic constant
            dij = dij * FracElem(dij.num(), dij.num());
        }
    }
    if (var_names_.empty()) {
        for (int i = 1; i <= n_; ++i) var_names_.push_back("x" + std::to_string(i));
    }
    if (var_names_.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("Signature: variable name count mismatch");
}

SignaturePtr Signature::weyl() {
    static SignaturePtr instance = std::make_shared<const Signature>(
        2, std::vector<FracElem>{FracElem(Rational(1))}, std::vector<std::string>{"t", "x"});
    return instance;
}

SignaturePtr Signature::csd(int n, std::vector<FracElem> d) {
    return std::make_shared<const Signature>(n, std::move(d));
}

const FracElem& Signature::d(int i, int j) const {
    if (i < 0 || j <= i || j >= n_) throw std::out_of_range("Signature::d: need 0 <= i < j < n");
    // row-major upper triangle: offset(i) = sum_{r<i} (n-1-r)
    int offset = i * (2 * n_ - i - 1) / 2 + (j - i - 1);
    return d_[offset];
}

int Signature::var_index(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (var_names_[i] == name) return i;
    return -1;
}

bool Signature::is_weyl() const {
    return n_ == 2 && d_[0].is_rational() && d_[0].rational_value().is_one();
}

bool operator==(const Signature& a, const Signature& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t k = 0; k < a.d_.size(); ++k)
        if (a.d_[k] != b.d_[k]) return false;
    return true;
}

int deglex_compare(const ExpVec& a, const ExpVec& b) {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

NCPoly NCPoly::scalar(SignaturePtr sig, FracElem c) {
    NCPoly out(sig);
    out.add_term(ExpVec(sig->n(), 0), c);
    return out;
}

NCPoly NCPoly::generator(SignaturePtr sig, int i, unsigned exp) {
    if (i < 0 || i >= sig->n()) throw std::out_of_range("NCPoly::generator index");
    NCPoly out(sig);
    ExpVec e(sig->n(), 0);
    e[i] = exp;
    out.add_term(e, FracElem(Rational(1)));
    return out;
}

NCPoly NCPoly::monomial(SignaturePtr sig, ExpVec e, FracElem c) {
    if (e.size() != static_cast<std::size_t>(sig->n()))
        throw std::invalid_argument("NCPoly::monomial: exponent arity mismatch");
    NCPoly out(sig);
    out.add_term(e, c);
    return out;
}

bool NCPoly::is_scalar() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const ExpVec& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

FracElem NCPoly::scalar_value() const {
    if (terms_.empty()) return FracElem(Rational(0));
    if (!is_scalar()) throw std::logic_error("NCPoly: not a scalar");
    return terms_.begin()->second;
}

unsigned NCPoly::degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (unsigned k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

void NCPoly::add_term(const ExpVec& e, const FracElem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly out(sig_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    if (!(*sig_ == *o.sig_)) throw std::invalid_argument("NCPoly: signature mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    if (!(*sig_ == *o.sig_)) throw std::invalid_argument("NCPoly: signature mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

NCPoly NCPoly::scaled(const FracElem& c) const {
    NCPoly out(sig_);
    if (c.is_zero()) return out;
    for (const auto& [e, coef] : terms_) out.terms_.emplace(e, coef * c);
    return out;
}

NCPoly NCPoly::substitute_params(const std::map<std::string, Rational>& env) const {
    NCPoly out(sig_);
    for (const auto& [e, c] : terms_) out.add_term(e, c.substitute(env));
    return out;
}

namespace {

/// x^e * x_i^b in canonical form: move x_i^b left past x_j^{e_j} for j > i,
/// one variable at a time with the pairwise closed form.
void mul_monomial_by_power(const Signature& sig, const ExpVec& e, const FracElem& coeff, int i,
                           unsigned b, std::map<ExpVec, FracElem>& out) {
    const int n = sig.n();
    // partial states: (exponents of variables > current j already fixed,
    // remaining x_i count) with a coefficient.
    struct State {
        ExpVec exp;
        unsigned pending;
        FracElem c;
    };
    std::vector<State> states{{e, b, coeff}};
    for (int j = n - 1; j > i; --j) {
        if (e[j] == 0) continue;
        std::vector<State> next;
        const FracElem& dij = sig.d(i, j);
        for (const auto& st : states) {
            unsigned a = st.exp[j];
            unsigned kmax = std::min<unsigned>(a, st.pending);
            FracElem dpow(Rational(1));
            for (unsigned k = 0; k <= kmax; ++k) {
                Rational fk = factorial(k) * binomial(a, k) * binomial(st.pending, k);
                State ns;
                ns.exp = st.exp;
                ns.exp[j] = a - k;
                ns.pending = st.pending - k;
                ns.c = st.c * dpow * FracElem(fk);
                next.push_back(std::move(ns));
                if (k < kmax) dpow = dpow * dij;
            }
        }
        states = std::move(next);
    }
    for (auto& st : states) {
        st.exp[i] += st.pending;
        auto [it, inserted] = out.emplace(st.exp, st.c);
        if (!inserted) {
            it->second += st.c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
}

}  // namespace

NCPoly nc_mul(const NCPoly& f, const NCPoly& g) {
    if (!(*f.sig() == *g.sig())) throw std::invalid_argument("nc_mul: signature mismatch");
    const Signature& sig = *f.sig();
    NCPoly out(f.sig());
    for (const auto& [ef, cf] : f.terms()) {
        for (const auto& [eg, cg] : g.terms()) {
            // multiply x^ef by x^eg: feed the variables of eg in increasing index
            std::map<ExpVec, FracElem> cur;
            cur.emplace(ef, cf * cg);
            for (int i = 0; i < sig.n(); ++i) {
                if (eg[i] == 0) continue;
                std::map<ExpVec, FracElem> next;
                for (const auto& [e, c] : cur) mul_monomial_by_power(sig, e, c, i, eg[i], next);
                cur = std::move(next);
            }
            for (const auto& [e, c] : cur) out.add_term(e, c);
        }
    }
    return out;
}

NCPoly nc_pow(const NCPoly& f, unsigned e) {
    NCPoly acc = NCPoly::scalar(f.sig(), FracElem(Rational(1)));
    NCPoly base = f;
    while (e > 0) {
        if (e & 1u) acc = nc_mul(acc, base);
        e >>= 1u;
        if (e > 0) base = nc_mul(base, base);
    }
    return acc;
}

NCPoly commutator(const NCPoly& f, const NCPoly& g) {
    return nc_mul(f, g) - nc_mul(g, f);
}

LeadingData leading_data(const NCPoly& f) {
    if (f.is_zero()) throw std::domain_error("leading_data: zero polynomial (lm(0) := 0)");
    const ExpVec* best = nullptr;
    for (const auto& [e, c] : f.terms())
        if (!best || deglex_compare(e, *best) > 0) best = &e;
    LeadingData out;
    out.lm = *best;
    out.lc = f.terms().at(*best);
    out.deg = 0;
    for (unsigned k : *best) out.deg += k;
    return out;
}

unsigned mass(const NCPoly& f) {
    if (f.is_zero()) throw std::domain_error("mass: zero polynomial");
    if (!f.sig()->is_weyl()) throw std::invalid_argument("mass: Signature must be A_1");
    std::set<long> components;
    for (const auto& [e, c] : f.terms())
        components.insert(static_cast<long>(e[0]) - static_cast<long>(e[1]));
    return static_cast<unsigned>(components.size());
}

bool is_central(const NCPoly& f) {
    for (int k = 0; k < f.sig()->n(); ++k) {
        NCPoly xk = NCPoly::generator(f.sig(), k);
        if (!commutator(xk, f).is_zero()) return false;
    }
    return true;
}

}  // namespace weylforge
