// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria.

#include "weylforge/fixtures.hpp"
#include "weylforge/json_io.hpp"
#include "weylforge/parser.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace weylforge;

namespace {

std::mt19937 rng(20240612);

NCPoly wparse(const std::string& s) { return parse_expression(s, Signature::weyl()); }

Rational random_rational(bool nonzero = false) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    Rational r(num(rng), static_cast<unsigned long>(den(rng)));
    while (nonzero && r.is_zero()) r = Rational(num(rng), static_cast<unsigned long>(den(rng)));
    return r;
}

NCPoly random_weyl_poly(unsigned nmax, unsigned mmax) {
    std::uniform_int_distribution<unsigned> nd(0, nmax), md(0, mmax);
    std::uniform_int_distribution<int> nterms(1, 5);
    NCPoly out(Signature::weyl());
    for (int i = nterms(rng); i > 0; --i)
        out.add_term(ExpVec{md(rng), nd(rng)}, FracElem(random_rational()));
    return out;
}

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

int failures = 0;

void criterion(int number, const std::string& label, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        body();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << "CRITERION " << number << (ok ? " PASS" : " FAIL") << " [" << ms << " ms] "
              << label;
    if (!ok) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
}

// shorthand equation parser for the golden (2,2) comparison
CPoly shorthand(const std::string& text) {
    CPoly out;
    std::size_t i = 0;
    int sign = 1;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        if (i >= text.size()) break;
        if (text[i] == '+') { sign = 1; ++i; continue; }
        if (text[i] == '-') { sign = -1; ++i; continue; }
        long coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            coeff = std::stol(text.substr(i, j - i));
            i = j;
        }
        ParamMono mono;
        while (true) {
            while (i < text.size() && text[i] == ' ') ++i;
            if (i >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i]))) break;
            std::size_t j = i;
            while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
            mono[text.substr(i, j - i)] += 1;
            i = j;
        }
        out.add_term(mono, Rational(coeff * sign));
        sign = 1;
    }
    return out;
}

std::multiset<CPoly> normalized(const std::vector<CPoly>& eqs) {
    std::multiset<CPoly> out;
    for (const CPoly& eq : eqs) out.insert(eq.primitive_part());
    return out;
}

// iterated single-relation rewriting oracle (as in the unit tests)
void rewrite_insert_letter(const SignaturePtr& sig, const ExpVec& e, const FracElem& c, int i,
                           NCPoly& acc) {
    int jstar = -1;
    for (int j = sig->n() - 1; j > i; --j)
        if (e[static_cast<std::size_t>(j)] > 0) { jstar = j; break; }
    if (jstar < 0) {
        ExpVec done = e;
        done[static_cast<std::size_t>(i)] += 1;
        acc.add_term(done, c);
        return;
    }
    ExpVec peeled = e;
    peeled[static_cast<std::size_t>(jstar)] -= 1;
    acc.add_term(peeled, c * sig->d(i, jstar));
    NCPoly inner(sig);
    rewrite_insert_letter(sig, peeled, c, i, inner);
    for (const auto& [ei, ci] : inner.terms()) {
        ExpVec back = ei;
        back[static_cast<std::size_t>(jstar)] += 1;
        acc.add_term(back, ci);
    }
}

NCPoly rewrite_mul(const NCPoly& f, const NCPoly& g) {
    NCPoly out(f.sig());
    for (const auto& [e, c] : g.terms()) {
        NCPoly cur = f.scaled(c);
        for (int i = 0; i < f.sig()->n(); ++i)
            for (unsigned k = 0; k < e[static_cast<std::size_t>(i)]; ++k) {
                NCPoly next(f.sig());
                for (const auto& [ef, cf] : cur.terms())
                    rewrite_insert_letter(f.sig(), ef, cf, i, next);
                cur = std::move(next);
            }
        out += cur;
    }
    return out;
}

std::map<std::string, Rational> random_lambda_env(unsigned count) {
    std::map<std::string, Rational> out;
    for (unsigned k = 0; k < count; ++k) out["l" + std::to_string(k)] = random_rational(true);
    return out;
}

// Factorization words for the xdeg1 families (m = 1 has its own literal
// parametrization; m >= 2 follow the closed form).
ElementaryWord xdeg1_word(unsigned m, int word_case, const std::map<std::string, Rational>& l) {
    auto L = [&](unsigned k) { return FracElem(l.at("l" + std::to_string(k))); };
    ElementaryWord w;
    if (word_case == 1) {
        w.letters.push_back({ElementaryKind::Psi, 1,
                             (L(0) * L(1) - L(m + 1) + FracElem(Rational(1))) / (L(0) * L(m + 1))});
        for (unsigned j = 2; j <= m; ++j)
            w.letters.push_back({ElementaryKind::Psi, j, L(j) / L(m + 1)});
        w.letters.push_back({ElementaryKind::Phi, 1, L(0)});
        w.letters.push_back({ElementaryKind::Psi, 1, (L(m + 1) - FracElem(Rational(1))) / L(0)});
    } else if (m == 1) {
        w.letters.push_back({ElementaryKind::Psi, 1, -L(0) * L(1) + L(1)});
        w.letters.push_back({ElementaryKind::Phi, 1, -L(1).inverse()});
        w.letters.push_back({ElementaryKind::Psi, 1, L(1)});
    } else {
        w.letters.push_back({ElementaryKind::Psi, 1, (L(0) - FracElem(Rational(1))) / L(m)});
        for (unsigned j = 2; j <= m; ++j)
            w.letters.push_back({ElementaryKind::Psi, j, L(j - 1) / L(m)});
        w.letters.push_back({ElementaryKind::Phi, 1, L(m)});
        w.letters.push_back({ElementaryKind::Psi, 1, -L(m).inverse()});
    }
    return w;
}

// Factorization words for the tdeg1 families (closed forms).
ElementaryWord tdeg1_word(unsigned n, int word_case, const std::map<std::string, Rational>& l) {
    auto L = [&](unsigned k) { return FracElem(l.at("l" + std::to_string(k))); };
    ElementaryWord w;
    if (word_case == 1) {
        w.letters.push_back({ElementaryKind::Phi, 1,
                             (L(1) * L(n + 1) - L(0) + FracElem(Rational(1))) / (L(0) * L(n + 1))});
        for (unsigned j = 2; j <= n; ++j)
            w.letters.push_back({ElementaryKind::Phi, j, L(j) / L(0)});
        w.letters.push_back({ElementaryKind::Psi, 1, L(n + 1)});
        w.letters.push_back({ElementaryKind::Phi, 1, (L(0) - FracElem(Rational(1))) / L(n + 1)});
    } else {
        w.letters.push_back({ElementaryKind::Phi, 1, -L(0) * L(1) + L(0)});
        for (unsigned j = 2; j <= n; ++j)
            w.letters.push_back({ElementaryKind::Phi, j, -L(0) * L(j)});
        w.letters.push_back({ElementaryKind::Psi, 1, -L(0).inverse()});
        w.letters.push_back({ElementaryKind::Phi, 1, L(0)});
    }
    return w;
}

const FixtureRecord& fixture_by_id(const std::vector<FixtureRecord>& all, const std::string& id) {
    for (const auto& r : all)
        if (r.id == id) return r;
    throw Failure("fixture " + id + " not found");
}

}  // namespace

int main() {
    std::vector<FixtureRecord> corpus = load_fixture_dir(WEYLFORGE_FIXTURE_DIR);
    SignaturePtr weyl = Signature::weyl();

    criterion(1, "relation sanity: [x,t] = 1 and (t, t+x) verifies", [&] {
        NCPoly t = wparse("t"), x = wparse("x");
        require(commutator(x, t) == NCPoly::scalar(weyl, FracElem(Rational(1))), "[x,t] != 1");
        require(check_dixmier_pair(t, wparse("t+x")), "(t, t+x) did not verify");
        require(commutator(wparse("t+x"), t) == NCPoly::scalar(weyl, FracElem(Rational(1))),
                "[t+x, t] != 1");
    });

    criterion(2, "linear example p=3t+4x, q=2t+3x end to end", [&] {
        NCPoly p = wparse("3t+4x"), q = wparse("2t+3x");
        require(check_dixmier_pair(p, q), "pair check failed");
        IdentityBattery b = build_identity_battery(decompose_pair(p, q));
        require(b.residuals.size() == 2 && b.residuals[0].is_zero() && b.residuals[1].is_zero(),
                "battery residuals not [0,0]");
        LinearPartRank r = linear_part_rank(Endomorphism{weyl, {p, q}});
        require(r.rank == 2 && r.surjective_linear, "rank != 2");
        auto m = build_condition_iii_matrix(p, q);
        require(m.has_value(), "condition (ii) failed unexpectedly");
        auto inv = left_inverse_ansatz(*m, {1, 1});
        require(inv.has_value(), "no inverse found");
        NCMatrix expected = NCMatrix::from_entries(
            2, 2, {wparse("3"), wparse("-4"), wparse("-2"), wparse("3")});
        require(*inv == expected, "inverse is not [[3,-4],[-2,3]]");
        auto [tr, xr] = recover_generators(p, q, *inv);
        require(tr == wparse("t") && xr == wparse("x"), "generators not recovered");
        // t = 3p - 4q and x = -2p + 3q, checked directly
        require(p.scaled(FracElem(Rational(3))) - q.scaled(FracElem(Rational(4))) == wparse("t"),
                "t != 3p - 4q");
        require(q.scaled(FracElem(Rational(3))) - p.scaled(FracElem(Rational(2))) == wparse("x"),
                "x != -2p + 3q");
    });

    criterion(3, "golden (2,2) system matches the fifteen pinned equations", [&] {
        auto [catalog, sys] = generate_dixmier_system(2, 2);
        require(sys.equations.size() == 15, "expected 15 equations, got " +
                                                std::to_string(sys.equations.size()));
        std::vector<CPoly> golden = {
            shorthand("p01 q10 + 2 p02 q20 - p10 q01 - 2 p20 q02 - 1"),
            shorthand("- 2 p21 q02 - 2 p10 q02 + 2 q21 p02 + 2 q10 p02 - p11 q01 + p01 q11"),
            shorthand("- 2 p22 q02 - 2 p11 q02 + 2 q22 p02 + 2 q11 p02 - p12 q01 + p01 q12"),
            shorthand("- 2 p12 q02 + 2 p02 q12"),
            shorthand("- 2 q12 p20 - 2 q01 p20 + 2 p12 q20 + 2 p01 q20 - p10 q11 + p11 q10"),
            shorthand("- 2 q12 p21 - 2 q01 p21 + 2 q21 p12 + 2 q10 p12 - 4 p20 q02 - 2 p10 q12 "
                      "+ 4 p02 q20 + 2 p01 q21"),
            shorthand("- 2 q12 p22 - 2 q01 p22 + 2 q22 p12 + q11 p12 - 4 p21 q02 - p11 q12 "
                      "+ 4 p02 q21 + 2 p01 q22"),
            shorthand("- 4 p22 q02 + 4 p02 q22"),
            shorthand("- 2 q22 p20 - 2 q11 p20 + 2 p22 q20 + 2 p11 q20 - p10 q21 + p21 q10"),
            shorthand("2 q21 p22 + 2 q10 p22 - 2 q22 p21 - q11 p21 - 4 p20 q12 + 4 p12 q20 "
                      "+ p11 q21 - 2 p10 q22"),
            shorthand("- 3 p21 q12 + 3 p12 q21"),
            shorthand("- 2 p22 q12 + 2 p12 q22"),
            shorthand("- 2 p20 q21 + 2 p21 q20"),
            shorthand("4 p22 q20 - 4 p20 q22"),
            shorthand("2 p22 q21 - 2 p21 q22"),
        };
        require(normalized(sys.equations) == normalized(golden),
                "equation multisets differ from the golden system");
    });

    criterion(4, "battery <-> commutator equivalence (500 random + 50 perturbed)", [&] {
        for (int trial = 0; trial < 500; ++trial) {
            NCPoly p = random_weyl_poly(3, 3), q = random_weyl_poly(3, 3);
            bool direct = check_dixmier_pair(p, q);
            bool battery = build_identity_battery(decompose_pair(p, q)).all_zero();
            require(direct == battery, "disagreement on a random pair");
        }
        std::uniform_int_distribution<unsigned> msel(1, 4);
        for (int trial = 0; trial < 50; ++trial) {
            unsigned m = msel(rng);
            auto env = random_lambda_env(m + 2);
            auto [p, q] = family_instantiate({"xdeg1.case1", m}, env);
            require(build_identity_battery(decompose_pair(p, q)).all_zero(),
                    "known pair rejected");
            NCPoly bad = p;
            bad.add_term(ExpVec{trial % 2 ? 1u : 0u, 1u}, FracElem(Rational(1, 9)));
            IdentityBattery b = build_identity_battery(decompose_pair(bad, q));
            require(!b.all_zero(), "perturbed pair accepted by the battery");
            require(!check_dixmier_pair(bad, q), "perturbed pair accepted by the commutator");
        }
    });

    criterion(5, "type I-IV families at 20 random parameter sets each", [&] {
        std::uniform_int_distribution<int> degd(0, 3), coeff(-3, 3);
        for (const std::string& id : {"type1", "type2", "type3", "type4"}) {
            for (int trial = 0; trial < 20; ++trial) {
                std::map<std::string, Rational> params{{"alpha", random_rational(true)},
                                                       {"lambda", random_rational(true)}};
                CPoly f;
                int deg = degd(rng);
                for (int k = 0; k <= deg; ++k)
                    f += CPoly(Parameter{"u"}, static_cast<unsigned>(k), Rational(coeff(rng)));
                auto [p, q] = family_instantiate({id, 0}, params, f);
                require(check_dixmier_pair(p, q), id + " pair failed");
                FamilyMatrices fm = family_matrices({id, 0}, params, f);
                NCMatrix m = NCMatrix::from_entries(2, 2, fm.matrix);
                NCMatrix inv = NCMatrix::from_entries(2, 2, fm.inverse);
                NCMatrix id2 = NCMatrix::identity(2, weyl);
                require(mat_mul(m, inv) == id2 && mat_mul(inv, m) == id2,
                        id + " matrix/inverse product failed");
            }
        }
    });

    criterion(6, "pair families: closed forms m=1..7 / n=2..7 and literal fixtures", [&] {
        for (unsigned m = 1; m <= 7; ++m) {
            for (int set = 0; set < 3; ++set) {
                auto env = random_lambda_env(m + 2);
                for (const std::string& id : {"xdeg1.case1", "xdeg1.case2"}) {
                    auto [p, q] = family_instantiate({id, m}, env);
                    require(check_dixmier_pair(p, q), id + " m=" + std::to_string(m));
                    FamilyMatrices fm = family_matrices({id, m}, env);
                    NCMatrix mm = NCMatrix::from_entries(2, 2, fm.matrix);
                    NCMatrix inv = NCMatrix::from_entries(2, 2, fm.inverse);
                    NCMatrix id2 = NCMatrix::identity(2, weyl);
                    require(mat_mul(mm, inv) == id2 && mat_mul(inv, mm) == id2,
                            id + " matrix product m=" + std::to_string(m));
                }
            }
        }
        for (unsigned n = 2; n <= 7; ++n) {
            for (int set = 0; set < 3; ++set) {
                auto env = random_lambda_env(n + 2);
                for (const std::string& id : {"tdeg1.case1", "tdeg1.case2"}) {
                    auto [p, q] = family_instantiate({id, n}, env);
                    require(check_dixmier_pair(p, q), id + " n=" + std::to_string(n));
                    FamilyMatrices fm = family_matrices({id, n}, env);
                    NCMatrix mm = NCMatrix::from_entries(2, 2, fm.matrix);
                    NCMatrix inv = NCMatrix::from_entries(2, 2, fm.inverse);
                    NCMatrix id2 = NCMatrix::identity(2, weyl);
                    require(mat_mul(mm, inv) == id2 && mat_mul(inv, mm) == id2,
                            id + " matrix product n=" + std::to_string(n));
                }
            }
        }
        for (const std::string& id :
             {"pair-n2m2.case1", "pair-n2m2.case2", "pair-n2m2.case3", "pair-n2m2.case4",
              "pair-n5m2.swap", "pair-n6m2.dense"}) {
            FixtureOutcome outcome = run_fixture(fixture_by_id(corpus, id));
            require(outcome.passed, id + ": " + outcome.detail);
        }
    });

    criterion(7, "scaling-automorphism factorization at mu in {2, 3, -1/2}", [&] {
        for (Rational mu : {Rational(2), Rational(3), Rational(-1, 2)}) {
            ElementaryWord w;
            w.letters.push_back({ElementaryKind::Psi, 1, FracElem(mu - mu * mu)});
            w.letters.push_back({ElementaryKind::Phi, 1, FracElem(-mu.inverse())});
            w.letters.push_back({ElementaryKind::Psi, 1, FracElem(mu - Rational(1))});
            w.letters.push_back({ElementaryKind::Phi, 1, FracElem(Rational(1))});
            Endomorphism e = word_evaluate(w);
            NCPoly mt = NCPoly::generator(weyl, 0).scaled(FracElem(mu));
            NCPoly xm = NCPoly::generator(weyl, 1).scaled(FracElem(mu.inverse()));
            require(e.images[0] == mt && e.images[1] == xm, "word does not give (mu t, x/mu)");
            require(verify_factorization(w, Endomorphism{weyl, {mt, xm}}),
                    "factorization rejected");
        }
    });

    criterion(8, "factorization words: xdeg1 m=1..7, tdeg1 n=2..7, literal fixtures", [&] {
        for (unsigned m = 1; m <= 7; ++m) {
            for (int set = 0; set < 3; ++set) {
                auto env = random_lambda_env(m + 2);
                for (int c : {1, 2}) {
                    auto [p, q] = family_instantiate(
                        {c == 1 ? "xdeg1.case1" : "xdeg1.case2", m}, env);
                    require(verify_factorization(xdeg1_word(m, c, env),
                                                 Endomorphism{weyl, {p, q}}),
                            "xdeg1 word case " + std::to_string(c) + " m=" + std::to_string(m));
                }
            }
        }
        for (unsigned n = 2; n <= 7; ++n) {
            for (int set = 0; set < 3; ++set) {
                auto env = random_lambda_env(n + 2);
                for (int c : {1, 2}) {
                    auto [p, q] = family_instantiate(
                        {c == 1 ? "tdeg1.case1" : "tdeg1.case2", n}, env);
                    require(verify_factorization(tdeg1_word(n, c, env),
                                                 Endomorphism{weyl, {p, q}}),
                            "tdeg1 word case " + std::to_string(c) + " n=" + std::to_string(n));
                }
            }
        }
        for (const std::string& id : {"word-n2m2.case1", "word-n2m2.case2", "word-n2m2.case3",
                                      "word-n2m2.case4"}) {
            FixtureOutcome outcome = run_fixture(fixture_by_id(corpus, id));
            require(outcome.passed, id + ": " + outcome.detail);
        }
    });

    criterion(9, "inversion: ansatz recovers the known inverses and round-trips", [&] {
        InverseResult inv = endo_invert_ansatz(Endomorphism{weyl, {wparse("t"), wparse("t+x")}},
                                               {1, 1});
        require(inv.found.has_value(), "(t, t+x) not inverted");
        require(inv.found->images[0] == wparse("t") && inv.found->images[1] == wparse("x-t"),
                "expected (t, x-t)");

        Endomorphism phi21 = elementary(ElementaryKind::Phi, 2, FracElem(Rational(1)));
        inv = endo_invert_ansatz(phi21, {1, 2});
        require(inv.found.has_value() &&
                    *inv.found == elementary(ElementaryKind::Phi, 2, FracElem(Rational(-1))),
                "Phi_{2,1} inverse is not Phi_{2,-1}");
        require(!endo_invert_ansatz(phi21, {1, 1}).found.has_value(),
                "bounds (1,1) should fail for Phi_{2,1}");

        // the quadratic parametric pair, instantiated at rationals
        std::map<std::string, Rational> env{{"l0", Rational(2)}, {"l1", Rational(3)},
                                            {"l2", Rational(1, 2)}, {"l3", Rational(5)}};
        const Json& pair = fixture_by_id(corpus, "parametric-quadratic.pair").raw;
        const Json& ipair = fixture_by_id(corpus, "parametric-quadratic.inverse-pair").raw;
        NCPoly p = wparse(pair.at("p").get<std::string>()).substitute_params(env);
        NCPoly q = wparse(pair.at("q").get<std::string>()).substitute_params(env);
        Endomorphism alpha{weyl, {p, q}};
        require(endo_check(alpha), "parametric pair is not an endomorphism");
        InverseResult found = endo_invert_ansatz(alpha, {2, 2});
        require(found.found.has_value(), "parametric case not inverted at bounds (2,2)");
        NCPoly ip = wparse(ipair.at("p").get<std::string>()).substitute_params(env);
        NCPoly iq = wparse(ipair.at("q").get<std::string>()).substitute_params(env);
        require(found.found->images[0] == ip && found.found->images[1] == iq,
                "inverse differs from the known one");
        Endomorphism id = Endomorphism::identity(weyl);
        require(endo_compose(alpha, *found.found) == id &&
                    endo_compose(*found.found, alpha) == id,
                "compositions are not the identity");
    });

    criterion(10, "skew suite: CSD3 completion, generator systems, CSD3/CSD4 families", [&] {
        // Example 5.29, symbolic d
        SignaturePtr sym = Signature::csd(3, {FracElem::parameter("d12"),
                                              FracElem::parameter("d13"),
                                              FracElem::parameter("d23")});
        NCPoly x1 = NCPoly::generator(sym, 0), x2 = NCPoly::generator(sym, 1);
        NCPoly p3 =
            x1.scaled(-sym->d(1, 2) / sym->d(0, 1)) + x2.scaled(sym->d(0, 2) / sym->d(0, 1));
        require(check_skew_tuple({x1, x2, p3}, sym), "CSD3 completion tuple failed");
        LinearPartRank r = linear_part_rank(Endomorphism{sym, {x1, x2, p3}});
        require(r.rank == 2 && !r.surjective_linear, "CSD3 completion rank != 2");

        // generator-completion system, n = 3 symbolic
        SkewLinearSystem skewsys = build_skew_linear_system(sym);
        UnknownCatalog cat{{"a1", "a2"}};
        EqSystem eqs;
        for (std::size_t i = 0; i < skewsys.M.size(); ++i) {
            CPoly eq;
            for (std::size_t k = 0; k < skewsys.M.size(); ++k)
                eq += skewsys.M[i][k].num() * CPoly::variable(cat.names[k]);
            eq -= skewsys.b[i].num();
            eqs.equations.push_back(eq);
        }
        SolveResult sol = linear_solve_exact(eqs, cat);
        require(sol.is_assignment(), "n=3 symbolic solve failed");
        require(sol.assignment().values.at("a1") ==
                        -FracElem::parameter("d23") / FracElem::parameter("d12") &&
                    sol.assignment().values.at("a2") ==
                        FracElem::parameter("d13") / FracElem::parameter("d12"),
                "n=3 solution differs");
        require(sol.assumptions == std::set<CPoly>{CPoly::variable("d12")},
                "assumption set is not {d12}");

        // n = 4, all d = 1: inconsistent
        std::vector<FracElem> ones(6, FracElem(Rational(1)));
        SkewLinearSystem skew4 = build_skew_linear_system(Signature::csd(4, ones));
        UnknownCatalog cat4{{"a1", "a2", "a3"}};
        EqSystem eqs4;
        for (std::size_t i = 0; i < skew4.M.size(); ++i) {
            CPoly eq;
            for (std::size_t k = 0; k < skew4.M.size(); ++k)
                eq += CPoly::variable(cat4.names[k]).scaled(skew4.M[i][k].rational_value());
            eq -= CPoly(skew4.b[i].rational_value());
            eqs4.equations.push_back(eq);
        }
        require(linear_solve_exact(eqs4, cat4).is_inconsistent(), "n=4 all-ones not inconsistent");

        // Case 14 at d = (2,3,2), three rational lambda sets (fixture corpus)
        FixtureOutcome linfam = run_fixture(fixture_by_id(corpus, "csd3-linear-family.d232"));
        require(linfam.passed, "csd3 linear family: " + linfam.detail);

        // CSD4 example: instantiated P1..P4 tuple, inverted, identity both ways
        const Json& raw = fixture_by_id(corpus, "csd4-linear-auto.instantiated").raw;
        SignaturePtr s4 = signature_from_json(raw.at("algebra"));
        std::vector<NCPoly> ps;
        for (const Json& text : raw.at("polys"))
            ps.push_back(parse_expression(text.get<std::string>(), s4));
        require(check_skew_tuple(ps, s4), "CSD4 tuple failed");
        Endomorphism e{s4, ps};
        InverseResult inv4 = endo_invert_ansatz(e, {1, 1, 1, 1});
        require(inv4.found.has_value(), "CSD4 inverse not found");
        Endomorphism id4 = Endomorphism::identity(s4);
        require(endo_compose(e, *inv4.found) == id4 && endo_compose(*inv4.found, e) == id4,
                "CSD4 compositions are not the identity");
    });

    criterion(11, "center: scalars exactly, 200 random nonconstant polynomials", [&] {
        SignaturePtr s3 = Signature::csd(
            3, {FracElem(Rational(2)), FracElem(Rational(3)), FracElem(Rational(2))});
        require(is_central(NCPoly::scalar(s3, FracElem(Rational(5)))), "scalar not central");
        require(is_central(NCPoly::zero(s3)), "zero not central");
        std::uniform_int_distribution<unsigned> deg(0, 3);
        std::uniform_int_distribution<int> nterms(1, 4);
        int tested = 0;
        while (tested < 200) {
            NCPoly f(s3);
            for (int i = nterms(rng); i > 0; --i)
                f.add_term(ExpVec{deg(rng), deg(rng), deg(rng)}, FracElem(random_rational()));
            if (f.is_scalar()) continue;
            require(!is_central(f), "nonconstant polynomial reported central");
            ++tested;
        }
    });

    criterion(12, "multiplication oracle: closed form vs rewriting, 500 monomial pairs", [&] {
        SignaturePtr s3 = Signature::csd(
            3, {FracElem(Rational(2)), FracElem(Rational(3)), FracElem(Rational(2))});
        std::uniform_int_distribution<unsigned> d(0, 6);
        for (int trial = 0; trial < 500; ++trial) {
            ExpVec a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)};
            NCPoly fa = NCPoly::monomial(s3, a, FracElem(Rational(1)));
            NCPoly fb = NCPoly::monomial(s3, b, FracElem(Rational(1)));
            require(nc_mul(fa, fb) == rewrite_mul(fa, fb), "product mismatch");
        }
    });

    criterion(13, "groebner: S-poly reduction, lex example, ideal membership of 1", [&] {
        MonoOrder lex{MonoOrderKind::Lex, {"x", "y"}};
        CPoly x = CPoly::variable("x"), y = CPoly::variable("y");
        GroebnerResult res = groebner_basis({x * x + y * y - CPoly(Rational(1)), x - y}, lex);
        require(std::holds_alternative<Basis>(res), "cap reached unexpectedly");
        const auto& basis = std::get<Basis>(res).polys;
        require(normalized(basis) ==
                    normalized({x - y, (y * y).scaled(Rational(2)) - CPoly(Rational(1))}),
                "lex basis differs from {x - y, 2y^2 - 1}");
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                ParamMono l = mono_lcm(basis[i].leading_monomial(lex),
                                       basis[j].leading_monomial(lex));
                CPoly mi, mj;
                mi.add_term(mono_div(l, basis[i].leading_monomial(lex)),
                            Rational(1) / basis[i].leading_coefficient(lex));
                mj.add_term(mono_div(l, basis[j].leading_monomial(lex)),
                            Rational(1) / basis[j].leading_coefficient(lex));
                require(normal_form(mi * basis[i] - mj * basis[j], basis, lex).is_zero(),
                        "an S-polynomial does not reduce to zero");
            }
        require(ideal_contains_one({x, x + CPoly(Rational(1))}) == Ternary::True,
                "ideal_contains_one({x, x+1}) != True");
    });

    criterion(14, "parser round-trip on 1000 random canonical polynomials", [&] {
        require(format_canonical(wparse("x*t")) == "t*x + 1", "x*t example");
        require(format_canonical(wparse("(t+x)^2")) == "t^2 + 2*t*x + x^2 + 1",
                "(t+x)^2 example");
        require(format_canonical(wparse("3/2 * t")) == "3/2*t", "3/2*t example");
        SignaturePtr s3 = Signature::csd(
            3, {FracElem(Rational(2)), FracElem(Rational(3)), FracElem(Rational(2))});
        std::uniform_int_distribution<unsigned> deg(0, 4);
        std::uniform_int_distribution<int> nterms(0, 5);
        for (int trial = 0; trial < 1000; ++trial) {
            SignaturePtr sig = trial % 2 ? s3 : weyl;
            NCPoly f(sig);
            for (int i = nterms(rng); i > 0; --i) {
                ExpVec e(static_cast<std::size_t>(sig->n()), 0);
                for (auto& v : e) v = deg(rng);
                f.add_term(e, FracElem(random_rational()));
            }
            require(parse_expression(format_canonical(f), sig) == f, "round trip failed");
        }
    });

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria FAILED")
              << std::endl;
    return failures;
}
