#include "weylforge/systems.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace weylforge {

bool UnknownCatalog::contains(const std::string& name) const {
    return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

std::string weyl_unknown(char letter, unsigned i, unsigned j) {
    std::ostringstream os;
    os << letter << i << j;
    return os.str();
}

/// Build the generic polynomial sum_i p_i(t) x^i with unknown coefficients.
NCPoly generic_weyl_poly(const SignaturePtr& sig, char letter, unsigned n, unsigned m,
                         UnknownCatalog& catalog) {
    NCPoly out(sig);
    for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = (i == 0 ? 1u : 0u); j <= m; ++j) {
            std::string name = weyl_unknown(letter, i, j);
            catalog.names.push_back(name);
            out.add_term(ExpVec{j, i}, FracElem::parameter(name));
        }
    }
    return out;
}

/// One equation per standard monomial of `poly`, deglex-descending; every
/// coefficient must be polynomial (no symbolic denominators).
EqSystem equations_from_ncpoly(const NCPoly& poly) {
    std::vector<std::pair<ExpVec, CPoly>> rows;
    for (const auto& [e, c] : poly.terms()) {
        if (!c.is_polynomial())
            throw std::logic_error("equations_from_ncpoly: fractional coefficient");
        rows.emplace_back(e, c.polynomial_value());
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return deglex_compare(a.first, b.first) > 0; });
    EqSystem sys;
    for (auto& [e, c] : rows) sys.equations.push_back(std::move(c));
    return sys;
}

}  // namespace

std::pair<UnknownCatalog, EqSystem> generate_dixmier_system(unsigned n, unsigned m) {
    if (n < 1 || m < 1) throw std::invalid_argument("generate_dixmier_system: need n, m >= 1");
    SignaturePtr sig = Signature::weyl();
    UnknownCatalog catalog;
    NCPoly p = generic_weyl_poly(sig, 'p', n, m, catalog);
    NCPoly q = generic_weyl_poly(sig, 'q', n, m, catalog);
    NCPoly residual = commutator(q, p) - NCPoly::scalar(sig, FracElem(Rational(1)));
    return {std::move(catalog), equations_from_ncpoly(residual)};
}

namespace {

void enumerate_bounded(const std::vector<unsigned>& bounds, ExpVec& cur, std::size_t idx,
                       std::vector<ExpVec>& out) {
    if (idx == bounds.size()) {
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e <= bounds[idx]; ++e) {
        cur[idx] = e;
        enumerate_bounded(bounds, cur, idx + 1, out);
    }
    cur[idx] = 0;
}

std::string skew_unknown_name(unsigned k, const ExpVec& e) {
    std::ostringstream os;
    os << "c" << (k + 1) << "m";
    for (unsigned x : e) os << x;
    return os.str();
}

std::vector<ExpVec> bounded_monomials(const std::vector<unsigned>& bounds, bool include_constant) {
    std::vector<ExpVec> monos;
    ExpVec cur(bounds.size(), 0);
    enumerate_bounded(bounds, cur, 0, monos);
    std::sort(monos.begin(), monos.end(),
              [](const ExpVec& a, const ExpVec& b) { return deglex_compare(a, b) > 0; });
    if (!include_constant) monos.pop_back();  // deglex-least is the constant
    return monos;
}

}  // namespace

NCPoly skew_unknown_poly(const SignaturePtr& sig, const std::vector<unsigned>& bounds, unsigned k,
                         const std::map<std::string, FracElem>& values) {
    NCPoly out(sig);
    for (const ExpVec& e : bounded_monomials(bounds, /*include_constant=*/false)) {
        std::string name = skew_unknown_name(k, e);
        auto it = values.find(name);
        out.add_term(e, it != values.end() ? it->second : FracElem::parameter(name));
    }
    return out;
}

std::pair<UnknownCatalog, EqSystem> generate_skew_system(const SignaturePtr& sig,
                                                         const std::vector<unsigned>& bounds) {
    if (bounds.size() != static_cast<std::size_t>(sig->n()))
        throw std::invalid_argument("generate_skew_system: one degree cap per variable");
    UnknownCatalog catalog;
    std::vector<NCPoly> ps;
    for (int k = 0; k < sig->n(); ++k) {
        for (const ExpVec& e : bounded_monomials(bounds, false))
            catalog.names.push_back(skew_unknown_name(static_cast<unsigned>(k), e));
        ps.push_back(skew_unknown_poly(sig, bounds, static_cast<unsigned>(k), {}));
    }
    EqSystem sys;
    for (int i = 0; i < sig->n(); ++i) {
        for (int j = i + 1; j < sig->n(); ++j) {
            NCPoly residual =
                commutator(ps[j], ps[i]) - NCPoly::scalar(sig, sig->d(i, j));
            EqSystem part = equations_from_ncpoly(residual);
            for (auto& eq : part.equations) sys.equations.push_back(std::move(eq));
        }
    }
    return {std::move(catalog), std::move(sys)};
}

// ---------------------------------------------------------------------------
// Exact linear solving over the parameter fraction field
// ---------------------------------------------------------------------------

SolveResult linear_solve_exact(const EqSystem& sys, const UnknownCatalog& unknowns) {
    SolveResult result;
    const std::size_t nu = unknowns.names.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < nu; ++k) index[unknowns.names[k]] = k;

    // rows: coefficients per unknown plus the constant column (everything
    // FracElem; symbolic parameters that are not unknowns ride along).
    struct Row {
        std::vector<FracElem> a;
        FracElem rhs0;  // the affine part, kept as "constant column" c with eq = sum a_k u_k + c
    };
    std::vector<Row> rows;
    for (const CPoly& eq : sys.equations) {
        Row row;
        row.a.assign(nu, FracElem(Rational(0)));
        row.rhs0 = FracElem(Rational(0));
        CPoly constant_part;
        for (const auto& [mono, coef] : eq.terms()) {
            std::string found;
            unsigned found_exp = 0;
            ParamMono rest;
            for (const auto& [name, e] : mono) {
                if (index.count(name)) {
                    if (!found.empty() || e > 1)
                        throw std::invalid_argument("linear_solve_exact: nonlinear equation");
                    found = name;
                    found_exp = e;
                } else {
                    rest[name] = e;
                }
            }
            (void)found_exp;
            CPoly piece;
            piece.add_term(rest, coef);
            if (found.empty())
                constant_part += piece;
            else
                row.a[index[found]] += FracElem(piece);
        }
        row.rhs0 = FracElem(constant_part);
        rows.push_back(std::move(row));
    }

    // forward elimination with constant-pivot preference
    std::vector<std::size_t> pivot_col;   // per eliminated row
    std::vector<std::size_t> row_order;   // rows used as pivots, in order
    std::vector<bool> used(rows.size(), false);
    std::vector<bool> solved_col(nu, false);
    for (;;) {
        // choose next pivot: prefer rows with a rational nonzero coefficient
        std::size_t best_row = rows.size(), best_col = nu;
        int best_kind = 2;  // 0 = rational pivot, 1 = symbolic pivot
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r]) continue;
            for (std::size_t c = 0; c < nu; ++c) {
                if (solved_col[c] || rows[r].a[c].is_zero()) continue;
                int kind = rows[r].a[c].is_rational() ? 0 : 1;
                if (kind < best_kind) {
                    best_kind = kind;
                    best_row = r;
                    best_col = c;
                }
                if (best_kind == 0) break;
            }
            if (best_kind == 0) break;
        }
        if (best_row == rows.size()) break;
        used[best_row] = true;
        solved_col[best_col] = true;
        pivot_col.push_back(best_col);
        row_order.push_back(best_row);
        const FracElem pivot = rows[best_row].a[best_col];
        if (!pivot.is_rational()) {
            result.assumptions.insert(pivot.num().primitive_part());
            if (!pivot.den().is_constant())
                result.assumptions.insert(pivot.den().primitive_part());
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == best_row || rows[r].a[best_col].is_zero()) continue;
            FracElem factor = rows[r].a[best_col] / pivot;
            for (std::size_t c = 0; c < nu; ++c)
                rows[r].a[c] -= factor * rows[best_row].a[c];
            rows[r].rhs0 -= factor * rows[best_row].rhs0;
            rows[r].a[best_col] = FracElem(Rational(0));
        }
    }

    // inconsistency: a fully reduced row 0 = nonzero
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (used[r]) continue;
        bool all_zero = std::all_of(rows[r].a.begin(), rows[r].a.end(),
                                    [](const FracElem& f) { return f.is_zero(); });
        if (all_zero && !rows[r].rhs0.is_zero()) {
            result.outcome = Inconsistent{};
            if (!rows[r].rhs0.is_rational())
                result.assumptions.insert(rows[r].rhs0.num().primitive_part());
            return result;
        }
    }

    Assignment assignment;
    for (std::size_t c = 0; c < nu; ++c)
        if (!solved_col[c]) result.free.insert(unknowns.names[c]);
    for (std::size_t k = 0; k < row_order.size(); ++k) {
        const Row& row = rows[row_order[k]];
        std::size_t c = pivot_col[k];
        // row:  a_c * u_c + sum_{free f} a_f u_f + rhs0 = 0
        FracElem value = -row.rhs0;
        for (std::size_t f = 0; f < nu; ++f) {
            if (f == c || row.a[f].is_zero()) continue;
            value -= row.a[f] * FracElem::parameter(unknowns.names[f]);
        }
        value /= row.a[c];
        for (const auto& a : value.assumptions()) result.assumptions.insert(a);
        assignment.values[unknowns.names[c]] = value;
    }
    result.outcome = std::move(assignment);
    return result;
}

// ---------------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------------

CPoly normal_form(const CPoly& f, const std::vector<CPoly>& basis, const MonoOrder& order) {
    CPoly r;
    CPoly work = f;
    while (!work.is_zero()) {
        const ParamMono lm = work.leading_monomial(order);
        const Rational lc = work.terms().at(lm);
        bool reduced = false;
        for (const CPoly& g : basis) {
            if (g.is_zero()) continue;
            const ParamMono& lmg = g.leading_monomial(order);
            if (!mono_divides(lmg, lm)) continue;
            CPoly factor;
            factor.add_term(mono_div(lm, lmg), lc / g.terms().at(lmg));
            work -= factor * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            CPoly head;
            head.add_term(lm, lc);
            r += head;
            work -= head;
        }
    }
    return r;
}

namespace {

CPoly s_polynomial(const CPoly& f, const CPoly& g, const MonoOrder& order) {
    const ParamMono& lmf = f.leading_monomial(order);
    const ParamMono& lmg = g.leading_monomial(order);
    ParamMono l = mono_lcm(lmf, lmg);
    CPoly mf, mg;
    mf.add_term(mono_div(l, lmf), Rational(1) / f.terms().at(lmf));
    mg.add_term(mono_div(l, lmg), Rational(1) / g.terms().at(lmg));
    return mf * f - mg * g;
}

bool coprime_leading(const ParamMono& a, const ParamMono& b) {
    for (const auto& [name, e] : a)
        if (b.count(name)) return false;
    return true;
}

}  // namespace

GroebnerResult groebner_basis(std::vector<CPoly> gens, const MonoOrder& order,
                              const GroebnerCaps& caps) {
    std::vector<CPoly> basis;
    for (CPoly& g : gens)
        if (!g.is_zero()) basis.push_back(g.primitive_part());
    if (basis.empty()) return Basis{};

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > caps.max_pairs) return CapReached{};
        auto [i, j] = pairs.front();
        pairs.pop_front();
        if (coprime_leading(basis[i].leading_monomial(order), basis[j].leading_monomial(order)))
            continue;  // Buchberger's first criterion
        CPoly s = s_polynomial(basis[i], basis[j], order);
        CPoly r = normal_form(s, basis, order);
        if (r.is_zero()) continue;
        if (r.total_degree() > caps.max_degree) return CapReached{};
        r = r.primitive_part();
        std::size_t k = basis.size();
        for (std::size_t idx = 0; idx < k; ++idx) pairs.emplace_back(idx, k);
        basis.push_back(std::move(r));
    }

    // auto-reduce: each element reduced against the others, zero dropped
    for (;;) {
        bool changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<CPoly> others;
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            CPoly r = normal_form(basis[i], others, order);
            if (r != basis[i]) {
                changed = true;
                if (r.is_zero()) {
                    basis.erase(basis.begin() + static_cast<long>(i));
                    --i;
                } else {
                    basis[i] = r.primitive_part();
                }
            }
        }
        if (!changed) break;
    }
    std::sort(basis.begin(), basis.end(), [&](const CPoly& a, const CPoly& b) {
        return order.compare(a.leading_monomial(order), b.leading_monomial(order)) < 0;
    });
    return Basis{std::move(basis)};
}

Ternary ideal_contains_one(const std::vector<CPoly>& gens, const GroebnerCaps& caps) {
    MonoOrder order{MonoOrderKind::DegLex, {}};
    GroebnerResult res = groebner_basis(gens, order, caps);
    if (std::holds_alternative<CapReached>(res)) return Ternary::Unknown;
    for (const CPoly& g : std::get<Basis>(res).polys)
        if (g.is_constant() && !g.is_zero()) return Ternary::True;
    return Ternary::False;
}

GroebnerCaps groebner_caps_from_env() {
    GroebnerCaps caps;
    if (const char* env = std::getenv("WEYLFORGE_GROEBNER_CAPS")) {
        std::string s(env);
        auto comma = s.find(',');
        if (comma != std::string::npos) {
            try {
                caps.max_pairs = std::stoul(s.substr(0, comma));
                caps.max_degree = static_cast<unsigned>(std::stoul(s.substr(comma + 1)));
            } catch (const std::exception&) {
                // malformed override: keep defaults
            }
        }
    }
    return caps;
}

}  // namespace weylforge
