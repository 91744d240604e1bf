#include "weylforge/dixmier.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace weylforge {

bool IdentityBattery::all_zero() const {
    return std::all_of(residuals.begin(), residuals.end(),
                       [](const CPoly& r) { return r.is_zero(); });
}

bool check_dixmier_pair(const NCPoly& p, const NCPoly& q) {
    if (!p.sig()->is_weyl()) throw std::invalid_argument("check_dixmier_pair: Signature must be A_1");
    return commutator(q, p) == NCPoly::scalar(p.sig(), FracElem(Rational(1)));
}

namespace {

/// x-coefficient split of one A_1 polynomial into CPoly values in "t".
std::vector<CPoly> split_in_x(const NCPoly& f, unsigned n) {
    std::vector<CPoly> out(n + 1);
    for (const auto& [e, c] : f.terms()) {
        if (!c.is_polynomial())
            throw std::invalid_argument("decompose_pair: coefficient with symbolic denominator");
        CPoly coef = c.polynomial_value();
        if (coef.depends_on("t"))
            throw std::invalid_argument("decompose_pair: parameter named t collides with the variable");
        CPoly tpow(Parameter{"t"}, e[0]);
        out[e[1]] += coef * tpow;
    }
    return out;
}

unsigned x_degree(const NCPoly& f) {
    unsigned d = 0;
    for (const auto& [e, c] : f.terms()) d = std::max(d, e[1]);
    return d;
}

}  // namespace

PairDecomposition decompose_pair(const NCPoly& p, const NCPoly& q) {
    if (!p.sig()->is_weyl() || !q.sig()->is_weyl())
        throw std::invalid_argument("decompose_pair: Signature must be A_1");
    PairDecomposition d;
    d.n = std::max(x_degree(p), x_degree(q));
    d.p_coeffs = split_in_x(p, d.n);
    d.q_coeffs = split_in_x(q, d.n);
    d.m = 0;
    for (const auto& c : d.p_coeffs) d.m = std::max(d.m, c.degree_in("t"));
    for (const auto& c : d.q_coeffs) d.m = std::max(d.m, c.degree_in("t"));
    return d;
}

IdentityBattery build_identity_battery(const PairDecomposition& d) {
    const unsigned n = d.n;
    IdentityBattery battery;
    if (n == 0) {
        // constants in x: [q,p] has no x part; the unit identity alone
        battery.residuals.push_back(CPoly(Rational(-1)));
        return battery;
    }
    const Parameter t{"t"};
    // derivative tables: p_i^{(r)}, q_i^{(r)} for r = 0..n
    std::vector<std::vector<CPoly>> dp(n + 1), dq(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        dp[i].push_back(d.p_coeffs[i]);
        dq[i].push_back(d.q_coeffs[i]);
        for (unsigned r = 1; r <= n; ++r) {
            dp[i].push_back(dp[i][r - 1].derivative(t));
            dq[i].push_back(dq[i][r - 1].derivative(t));
        }
    }
    for (unsigned s = 0; s < 2 * n; ++s) {
        CPoly residual;
        for (unsigned r = 1; r <= n; ++r) {
            // i + j = s + r with 0 <= i, j <= n and C(j, r) = 0 for j < r
            for (unsigned j = r; j <= n; ++j) {
                unsigned target = s + r;
                if (j > target) continue;
                unsigned i = target - j;
                if (i > n) continue;
                Rational c = binomial(j, r);
                residual += (dq[j][0] * dp[i][r] - dp[j][0] * dq[i][r]).scaled(c);
            }
        }
        if (s == 0) residual -= CPoly(Rational(1));
        // the top coefficient of [q,p] is n * det[[q_n,p_n],[q_n',p_n']]; the
        // battery reports the determinant itself (char 0 allows dropping n)
        if (s == 2 * n - 1) residual = residual.scaled(Rational(1, static_cast<unsigned long>(n)));
        battery.residuals.push_back(std::move(residual));
    }
    return battery;
}

FracElem linear_pair_det(const NCPoly& p, const NCPoly& q) {
    if (!p.sig()->is_weyl()) throw std::invalid_argument("linear_pair_det: Signature must be A_1");
    auto coeff_of = [](const NCPoly& f, unsigned a, unsigned b) {
        auto it = f.terms().find(ExpVec{a, b});
        return it == f.terms().end() ? FracElem(Rational(0)) : it->second;
    };
    for (const NCPoly* f : {&p, &q}) {
        if (f->degree() > 1) throw std::invalid_argument("linear_pair_det: nonlinear input");
        if (f->terms().count(ExpVec{0, 0}))
            throw std::invalid_argument("linear_pair_det: nonzero constant term");
    }
    FracElem b = coeff_of(p, 1, 0), a = coeff_of(p, 0, 1);
    FracElem dd = coeff_of(q, 1, 0), c = coeff_of(q, 0, 1);
    return b * c - a * dd;
}

bool check_skew_tuple(const std::vector<NCPoly>& ps, const SignaturePtr& sig) {
    if (ps.size() != static_cast<std::size_t>(sig->n()))
        throw std::invalid_argument("check_skew_tuple: tuple length mismatch");
    for (int i = 0; i < sig->n(); ++i)
        for (int j = i + 1; j < sig->n(); ++j)
            if (commutator(ps[j], ps[i]) != NCPoly::scalar(sig, sig->d(i, j))) return false;
    return true;
}

SkewLinearSystem build_skew_linear_system(const SignaturePtr& sig) {
    const int n = sig->n();
    SkewLinearSystem sys;
    sys.M.assign(n - 1, std::vector<FracElem>(n - 1, FracElem(Rational(0))));
    for (int i = 0; i < n - 1; ++i) {
        for (int k = 0; k < n - 1; ++k) {
            if (k < i)
                sys.M[i][k] = -sig->d(k, i);
            else if (k > i)
                sys.M[i][k] = sig->d(i, k);
        }
        sys.b.push_back(sig->d(i, n - 1));
    }
    return sys;
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

namespace {

Rational require(const std::map<std::string, Rational>& params, const std::string& name,
                 bool nonzero) {
    auto it = params.find(name);
    if (it == params.end())
        throw std::invalid_argument("family_instantiate: missing parameter " + name);
    if (nonzero && it->second.is_zero())
        throw std::invalid_argument("family_instantiate: parameter " + name + " must be nonzero");
    return it->second;
}

/// fdata as coefficients of the univariate free polynomial in "u".
std::vector<Rational> free_poly_coeffs(const CPoly& fdata) {
    std::vector<Rational> out(fdata.degree_in("u") + 1, Rational(0));
    for (const auto& [mono, c] : fdata.terms()) {
        unsigned e = 0;
        for (const auto& [name, k] : mono) {
            if (name != "u")
                throw std::invalid_argument("family_instantiate: f must use the parameter u only");
            e = k;
        }
        out[e] = c;
    }
    return out;
}

/// f evaluated at generator `var` of A_1 as an NCPoly, optionally multiplied
/// by one extra power of the generator (f(x)*x).
NCPoly free_poly_at(const SignaturePtr& sig, const CPoly& fdata, int var, unsigned extra) {
    NCPoly out(sig);
    std::vector<Rational> coeffs = free_poly_coeffs(fdata);
    for (unsigned k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        ExpVec e(2, 0);
        e[static_cast<std::size_t>(var)] = k + extra;
        out.add_term(e, FracElem(coeffs[k]));
    }
    return out;
}

std::string lam(unsigned i) { return "l" + std::to_string(i); }

}  // namespace

std::pair<NCPoly, NCPoly> family_instantiate(const FamilySpec& family,
                                             const std::map<std::string, Rational>& params,
                                             const CPoly& fdata) {
    SignaturePtr sig = Signature::weyl();
    NCPoly t = NCPoly::generator(sig, 0);
    NCPoly x = NCPoly::generator(sig, 1);
    auto scalar = [&](const Rational& c) { return FracElem(c); };

    if (family.id == "type1") {
        Rational alpha = require(params, "alpha", false);
        Rational lambda = require(params, "lambda", true);
        NCPoly f_of_x_times_x = free_poly_at(sig, fdata, 1, 1);
        NCPoly p = t.scaled(scalar(alpha)) +
                   (f_of_x_times_x.scaled(scalar(alpha)) - x).scaled(scalar(lambda).inverse());
        NCPoly q = t.scaled(scalar(lambda)) + f_of_x_times_x;
        return {p, q};
    }
    if (family.id == "type2") {
        Rational alpha = require(params, "alpha", false);
        Rational lambda = require(params, "lambda", true);
        NCPoly f_of_t_times_t = free_poly_at(sig, fdata, 0, 1);
        NCPoly p = -f_of_t_times_t - x.scaled(scalar(lambda));
        NCPoly q = (free_poly_at(sig, fdata, 0, 1).scaled(scalar(alpha)) + t)
                       .scaled(scalar(lambda).inverse()) +
                   x.scaled(scalar(alpha));
        return {p, q};
    }
    if (family.id == "type3") {
        Rational lambda = require(params, "lambda", true);
        NCPoly p = t.scaled(scalar(lambda)) + free_poly_at(sig, fdata, 1, 1);
        NCPoly q = x.scaled(scalar(lambda).inverse());
        return {p, q};
    }
    if (family.id == "type4") {
        Rational lambda = require(params, "lambda", true);
        NCPoly p = t.scaled(scalar(lambda).inverse());
        NCPoly q = free_poly_at(sig, fdata, 0, 1) + x.scaled(scalar(lambda));
        return {p, q};
    }
    if (family.id == "xdeg1.case1") {
        unsigned m = family.size;
        if (m < 1) throw std::invalid_argument("xdeg1.case1: need m >= 1");
        Rational l0 = require(params, lam(0), false);
        Rational l1 = require(params, lam(1), false);
        Rational lm1 = require(params, lam(m + 1), true);
        NCPoly p = NCPoly::generator(sig, 0).scaled(scalar((Rational(1) + l0 * l1) / lm1)) +
                   x.scaled(scalar(l0));
        NCPoly q = x.scaled(scalar(lm1));
        for (unsigned j = 1; j <= m; ++j) {
            Rational lj = require(params, lam(j), false);
            q += NCPoly::generator(sig, 0, j).scaled(scalar(lj));
            if (j >= 2) p += NCPoly::generator(sig, 0, j).scaled(scalar(l0 * lj / lm1));
        }
        return {p, q};
    }
    if (family.id == "xdeg1.case2") {
        unsigned m = family.size;
        if (m < 1) throw std::invalid_argument("xdeg1.case2: need m >= 1");
        if (m == 1) {
            Rational l0 = require(params, lam(0), false);
            Rational l1 = require(params, lam(1), true);
            NCPoly p = t.scaled(scalar(l0)) - x.scaled(scalar(l1.inverse()));
            NCPoly q = t.scaled(scalar(l1));
            return {p, q};
        }
        Rational lm = require(params, lam(m), true);
        NCPoly p = x.scaled(scalar(lm));
        for (unsigned j = 1; j <= m; ++j)
            p += NCPoly::generator(sig, 0, j).scaled(scalar(require(params, lam(j - 1), false)));
        NCPoly q = t.scaled(scalar(-lm.inverse()));
        return {p, q};
    }
    if (family.id == "tdeg1.case1") {
        unsigned n = family.size;
        if (n < 2) throw std::invalid_argument("tdeg1.case1: need n >= 2");
        Rational l0 = require(params, lam(0), true);
        Rational l1 = require(params, lam(1), false);
        Rational ln1 = require(params, lam(n + 1), false);
        NCPoly p = t.scaled(scalar(l0));
        NCPoly q = t.scaled(scalar(ln1)) +
                   x.scaled(scalar((Rational(1) + l1 * ln1) / l0));
        for (unsigned j = 1; j <= n; ++j) {
            Rational lj = require(params, lam(j), false);
            p += NCPoly::generator(sig, 1, j).scaled(scalar(lj));
            if (j >= 2) q += NCPoly::generator(sig, 1, j).scaled(scalar(lj * ln1 / l0));
        }
        return {p, q};
    }
    if (family.id == "tdeg1.case2") {
        unsigned n = family.size;
        if (n < 2) throw std::invalid_argument("tdeg1.case2: need n >= 2");
        Rational l0 = require(params, lam(0), true);
        NCPoly p = x.scaled(scalar(l0));
        NCPoly q = t.scaled(scalar(-l0.inverse()));
        for (unsigned j = 1; j <= n; ++j)
            q += NCPoly::generator(sig, 1, j).scaled(scalar(require(params, lam(j), false)));
        return {p, q};
    }
    throw std::invalid_argument("family_instantiate: unknown family " + family.id);
}

namespace {

/// [[b, P],[d, Q]] with p_0 = b*t, q_0 = d*t, P = sum_{i>=1} p_i x^{i-1}.
std::array<NCPoly, 4> condition_iii_split(const NCPoly& p, const NCPoly& q) {
    SignaturePtr sig = p.sig();
    NCPoly b(sig), P(sig), d(sig), Q(sig);
    auto split = [&](const NCPoly& f, NCPoly& head, NCPoly& rest) {
        for (const auto& [e, c] : f.terms()) {
            if (e[1] == 0) {
                if (e[0] == 0)
                    throw std::invalid_argument("condition (ii) fails: t does not divide the x^0 part");
                head.add_term(ExpVec{e[0] - 1, 0}, c);
            } else {
                rest.add_term(ExpVec{e[0], e[1] - 1}, c);
            }
        }
    };
    split(p, b, P);
    split(q, d, Q);
    return {b, P, d, Q};
}

}  // namespace

FamilyMatrices family_matrices(const FamilySpec& family,
                               const std::map<std::string, Rational>& params,
                               const CPoly& fdata) {
    SignaturePtr sig = Signature::weyl();
    NCPoly one = NCPoly::scalar(sig, FracElem(Rational(1)));
    auto scal = [&](const Rational& c) { return NCPoly::scalar(sig, FracElem(c)); };

    if (family.id == "type1" || family.id == "type3") {
        Rational lambda = require(params, "lambda", true);
        NCPoly f_of_x = free_poly_at(sig, fdata, 1, 0);
        if (family.id == "type1") {
            Rational alpha = require(params, "alpha", false);
            NCPoly upper = (f_of_x.scaled(FracElem(alpha)) - one).scaled(FracElem(lambda).inverse());
            return {{scal(alpha), upper, scal(lambda), f_of_x},
                    {f_of_x, -upper, -scal(lambda), scal(alpha)}};
        }
        return {{scal(lambda), f_of_x, NCPoly(sig), scal(lambda.inverse())},
                {scal(lambda.inverse()), -f_of_x, NCPoly(sig), scal(lambda)}};
    }
    if (family.id == "type2" || family.id == "type4") {
        Rational lambda = require(params, "lambda", true);
        NCPoly f_of_t = free_poly_at(sig, fdata, 0, 0);
        if (family.id == "type2") {
            Rational alpha = require(params, "alpha", false);
            NCPoly lower = (f_of_t.scaled(FracElem(alpha)) + one).scaled(FracElem(lambda).inverse());
            return {{-f_of_t, -scal(lambda), lower, scal(alpha)},
                    {scal(alpha), scal(lambda), -lower, -f_of_t}};
        }
        return {{scal(lambda.inverse()), NCPoly(sig), f_of_t, scal(lambda)},
                {scal(lambda), NCPoly(sig), -f_of_t, scal(lambda.inverse())}};
    }
    auto [p, q] = family_instantiate(family, params, fdata);
    auto [b, P, d, Q] = condition_iii_split(p, q);
    return {{b, P, d, Q}, {Q, -P, -d, b}};
}

}  // namespace weylforge
