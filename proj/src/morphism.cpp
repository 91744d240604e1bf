#include "weylforge/morphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylforge {

Endomorphism Endomorphism::identity(const SignaturePtr& sig) {
    Endomorphism e{sig, {}};
    for (int i = 0; i < sig->n(); ++i) e.images.push_back(NCPoly::generator(sig, i));
    return e;
}

bool endo_check(const Endomorphism& e) {
    const Signature& sig = *e.sig;
    if (e.images.size() != static_cast<std::size_t>(sig.n())) return false;
    for (int i = 0; i < sig.n(); ++i) {
        for (int j = i + 1; j < sig.n(); ++j) {
            NCPoly c = commutator(e.images[j], e.images[i]);
            if (c != NCPoly::scalar(e.sig, sig.d(i, j))) return false;
        }
    }
    return true;
}

NCPoly endo_apply(const Endomorphism& e, const NCPoly& f) {
    if (!(*e.sig == *f.sig())) throw std::invalid_argument("endo_apply: signature mismatch");
    const int n = e.sig->n();
    // memoized image powers, built by binary exponentiation per variable
    std::vector<std::map<unsigned, NCPoly>> powers(static_cast<std::size_t>(n));
    auto image_pow = [&](int i, unsigned k) -> const NCPoly& {
        auto& cache = powers[static_cast<std::size_t>(i)];
        auto it = cache.find(k);
        if (it == cache.end())
            it = cache.emplace(k, nc_pow(e.images[static_cast<std::size_t>(i)], k)).first;
        return it->second;
    };
    NCPoly out(f.sig());
    for (const auto& [exp, c] : f.terms()) {
        NCPoly term = NCPoly::scalar(e.sig, c);
        for (int i = 0; i < n; ++i)
            if (exp[static_cast<std::size_t>(i)] > 0)
                term = nc_mul(term, image_pow(i, exp[static_cast<std::size_t>(i)]));
        out += term;
    }
    return out;
}

Endomorphism endo_compose(const Endomorphism& outer, const Endomorphism& inner) {
    if (!(*outer.sig == *inner.sig)) throw std::invalid_argument("endo_compose: signature mismatch");
    Endomorphism out{outer.sig, {}};
    for (const NCPoly& im : inner.images) out.images.push_back(endo_apply(outer, im));
    return out;
}

Endomorphism elementary(ElementaryKind kind, unsigned exponent, const FracElem& lambda) {
    SignaturePtr sig = Signature::weyl();
    NCPoly t = NCPoly::generator(sig, 0);
    NCPoly x = NCPoly::generator(sig, 1);
    if (kind == ElementaryKind::Phi) {
        NCPoly img_t = t + NCPoly::generator(sig, 1, exponent).scaled(lambda);
        return Endomorphism{sig, {img_t, x}};
    }
    NCPoly img_x = x + NCPoly::generator(sig, 0, exponent).scaled(lambda);
    return Endomorphism{sig, {t, img_x}};
}

Endomorphism word_evaluate(const ElementaryWord& w) {
    Endomorphism acc = Endomorphism::identity(Signature::weyl());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        acc = endo_compose(elementary(it->kind, it->exponent, it->lambda), acc);
    return acc;
}

bool verify_factorization(const ElementaryWord& w, const Endomorphism& target) {
    return word_evaluate(w) == target;
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

/// Equations "coefficient = 0" for every term of `poly`, denominators cleared
/// (each coefficient's numerator must be affine in the ansatz unknowns).
void append_cleared_equations(const NCPoly& poly, EqSystem& sys) {
    for (const auto& [e, c] : poly.terms()) sys.equations.push_back(c.num());
}

}  // namespace

InverseResult endo_invert_ansatz(const Endomorphism& e, const std::vector<unsigned>& bounds) {
    InverseResult result;
    result.bounds = bounds;
    const SignaturePtr& sig = e.sig;
    const int n = sig->n();
    if (bounds.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("endo_invert_ansatz: one degree cap per variable");

    std::vector<ExpVec> monos;
    ExpVec cur(static_cast<std::size_t>(n), 0);
    enumerate_bounded(bounds, cur, 0, monos);

    // images of the ansatz monomials under e, shared by the n subsystems
    std::vector<NCPoly> mono_images;
    mono_images.reserve(monos.size());
    for (const ExpVec& m : monos)
        mono_images.push_back(endo_apply(e, NCPoly::monomial(sig, m, FracElem(Rational(1)))));

    std::vector<NCPoly> preimages;
    for (int i = 0; i < n; ++i) {
        UnknownCatalog catalog;
        NCPoly residual = -NCPoly::generator(sig, i);
        for (std::size_t k = 0; k < monos.size(); ++k) {
            std::string name = "u" + std::to_string(k);
            catalog.names.push_back(name);
            residual += mono_images[k].scaled(FracElem::parameter(name));
        }
        EqSystem sys;
        append_cleared_equations(residual, sys);
        SolveResult sol = linear_solve_exact(sys, catalog);
        if (!sol.is_assignment()) return result;  // NotFoundWithinBounds
        NCPoly q(sig);
        for (std::size_t k = 0; k < monos.size(); ++k) {
            auto it = sol.assignment().values.find(catalog.names[k]);
            FracElem value =
                it != sol.assignment().values.end() ? it->second : FracElem(Rational(0));
            // free unknowns are set to zero
            for (const std::string& freev : sol.free) {
                std::map<std::string, Rational> zero{{freev, Rational(0)}};
                value = value.substitute(zero);
            }
            q.add_term(monos[k], value);
        }
        preimages.push_back(std::move(q));
    }

    Endomorphism candidate{sig, std::move(preimages)};
    if (!endo_check(candidate)) return result;
    Endomorphism id = Endomorphism::identity(sig);
    if (!(endo_compose(e, candidate) == id) || !(endo_compose(candidate, e) == id))
        return result;
    result.found = std::move(candidate);
    return result;
}

LinearPartRank linear_part_rank(const Endomorphism& e) {
    const int n = e.sig->n();
    for (const NCPoly& im : e.images) {
        if (im.degree() > 1)
            throw std::invalid_argument("linear_part_rank: image of degree > 1");
        ExpVec zero(static_cast<std::size_t>(n), 0);
        if (im.terms().count(zero))
            throw std::invalid_argument("linear_part_rank: image has a constant term");
    }
    // Gaussian elimination over the fraction field
    std::vector<std::vector<FracElem>> m(static_cast<std::size_t>(n),
                                         std::vector<FracElem>(static_cast<std::size_t>(n),
                                                               FracElem(Rational(0))));
    for (int i = 0; i < n; ++i)
        for (const auto& [exp, c] : e.images[static_cast<std::size_t>(i)].terms())
            for (int j = 0; j < n; ++j)
                if (exp[static_cast<std::size_t>(j)] == 1)
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
    unsigned rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < static_cast<std::size_t>(n) && row < static_cast<std::size_t>(n);
         ++col) {
        std::size_t pivot = row;
        while (pivot < static_cast<std::size_t>(n) && m[pivot][col].is_zero()) ++pivot;
        if (pivot == static_cast<std::size_t>(n)) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = row + 1; r < static_cast<std::size_t>(n); ++r) {
            if (m[r][col].is_zero()) continue;
            FracElem factor = m[r][col] / m[row][col];
            for (std::size_t c2 = col; c2 < static_cast<std::size_t>(n); ++c2)
                m[r][c2] -= factor * m[row][c2];
        }
        ++row;
        ++rank;
    }
    return {rank, rank == static_cast<unsigned>(n)};
}

// ---------------------------------------------------------------------------
// Factorization parameter solving
// ---------------------------------------------------------------------------

namespace {

/// One triangular step: find an equation univariate and affine in a single
/// unknown with rational coefficients, solve it, substitute everywhere.
bool triangular_step(std::vector<CPoly>& eqs, std::vector<std::string>& remaining,
                     std::map<std::string, FracElem>& values, bool& inconsistent) {
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        const CPoly& eq = eqs[i];
        if (eq.is_zero()) continue;
        if (eq.is_constant()) {
            inconsistent = true;
            return false;
        }
        std::string only;
        bool affine = true;
        for (const auto& [mono, c] : eq.terms()) {
            for (const auto& [name, exp] : mono) {
                if (std::find(remaining.begin(), remaining.end(), name) == remaining.end())
                    continue;  // free symbolic parameter, rides along
                if (exp > 1 || (!only.empty() && only != name)) {
                    affine = false;
                    break;
                }
                only = name;
            }
            if (!affine) break;
        }
        if (!affine || only.empty()) continue;
        // eq = a*u + b with a, b free of u
        CPoly a, b;
        for (const auto& [mono, c] : eq.terms()) {
            auto it = mono.find(only);
            if (it == mono.end()) {
                b.add_term(mono, c);
            } else {
                ParamMono rest = mono;
                rest.erase(only);
                a.add_term(rest, c);
            }
        }
        if (a.is_zero()) continue;
        FracElem value = FracElem(-b) / FracElem(a);
        values[only] = value;
        remaining.erase(std::find(remaining.begin(), remaining.end(), only));
        // substitute: u -> value in every equation, clearing denominators
        for (CPoly& other : eqs) {
            if (!other.depends_on(only)) continue;
            // split by power of u; multiply through by den^maxdeg
            unsigned dmax = other.degree_in(only);
            CPoly acc;
            for (const auto& [mono, c] : other.terms()) {
                unsigned k = 0;
                ParamMono rest = mono;
                auto it = rest.find(only);
                if (it != rest.end()) {
                    k = it->second;
                    rest.erase(it);
                }
                CPoly piece;
                piece.add_term(rest, c);
                for (unsigned s = 0; s < k; ++s) piece = piece * value.num();
                for (unsigned s = k; s < dmax; ++s) piece = piece * value.den();
                acc += piece;
            }
            other = acc;
        }
        return true;
    }
    return false;
}

}  // namespace

SolveResult solve_factorization_params(const ElementaryWord& tmpl,
                                       const std::vector<std::string>& unknown_names,
                                       const Endomorphism& target, const GroebnerCaps& caps) {
    SolveResult result;
    Endomorphism composed = word_evaluate(tmpl);
    if (!(*composed.sig == *target.sig)) {
        result.outcome = Inconsistent{};
        return result;
    }
    EqSystem sys;
    for (std::size_t i = 0; i < composed.images.size(); ++i) {
        NCPoly residual = composed.images[i] - target.images[i];
        for (const auto& [e, c] : residual.terms()) sys.equations.push_back(c.num());
    }
    std::vector<CPoly> eqs = sys.equations;
    std::vector<std::string> remaining = unknown_names;
    std::map<std::string, FracElem> values;
    bool inconsistent = false;
    while (triangular_step(eqs, remaining, values, inconsistent)) {
    }
    if (inconsistent) {
        result.outcome = Inconsistent{};
        return result;
    }
    bool residue = std::any_of(eqs.begin(), eqs.end(), [](const CPoly& e) { return !e.is_zero(); });
    for (const CPoly& e : eqs) {
        if (e.is_constant() && !e.is_zero()) {
            result.outcome = Inconsistent{};
            return result;
        }
    }
    if (!residue) {
        Assignment assignment;
        for (const auto& [name, value] : values) {
            assignment.values[name] = value;
            for (const auto& a : value.assumptions()) result.assumptions.insert(a);
        }
        for (const std::string& name : remaining) result.free.insert(name);
        // substitute back into the original system: every equation must vanish
        for (const CPoly& eq : sys.equations) {
            if (!substitute_frac(eq, assignment.values).is_zero())
                throw std::logic_error("solve_factorization_params: assignment check failed");
        }
        result.outcome = std::move(assignment);
        return result;
    }
    std::vector<CPoly> gens;
    for (const CPoly& e : eqs)
        if (!e.is_zero()) gens.push_back(e);
    Ternary one = ideal_contains_one(gens, caps);
    if (one == Ternary::True)
        result.outcome = Inconsistent{};
    else
        result.outcome = Unknown{};
    return result;
}

}  // namespace weylforge
