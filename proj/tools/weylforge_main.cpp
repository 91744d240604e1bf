// weylforge — exact computation in the first Weyl algebra A_1(K) and the
// skew PBW extension CSD_n(K): Dixmier pair/tuple verification, identity
// batteries, endomorphism tools, symbolic coefficient systems, and the
// fixture corpus runner.

#include "weylforge/fixtures.hpp"
#include "weylforge/json_io.hpp"
#include "weylforge/parser.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace weylforge;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct AlgebraOpts {
    int n = 2;
    std::string d_csv = "1";

    SignaturePtr make() const {
        std::vector<FracElem> d;
        std::stringstream ss(d_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw std::runtime_error("--d: empty entry");
            if (auto r = Rational::parse(item))
                d.push_back(FracElem(*r));
            else
                d.push_back(FracElem::parameter(item));
        }
        if (n == 2 && d.size() == 1 && d[0].is_rational() && d[0].rational_value().is_one())
            return Signature::weyl();
        return Signature::csd(n, std::move(d));
    }
};

void add_algebra_opts(CLI::App* cmd, AlgebraOpts& alg) {
    cmd->add_option("--n", alg.n, "number of generators (default 2 = A_1)");
    cmd->add_option("--d", alg.d_csv,
                    "comma-separated d_ij constants, row-major upper triangle; "
                    "rationals or symbolic names (default 1)");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<unsigned> parse_bounds(const std::string& csv) {
    std::vector<unsigned> out;
    for (const auto& item : split(csv, ','))
        out.push_back(static_cast<unsigned>(std::stoul(item)));
    return out;
}

std::vector<NCPoly> parse_polys(const std::string& text, const SignaturePtr& sig) {
    std::vector<NCPoly> out;
    for (const auto& item : split(text, ';')) out.push_back(parse_expression(item, sig));
    return out;
}

Endomorphism parse_endo(const std::string& text, const SignaturePtr& sig) {
    Endomorphism e{sig, parse_polys(text, sig)};
    if (e.images.size() != static_cast<std::size_t>(sig->n()))
        throw std::runtime_error("expected " + std::to_string(sig->n()) +
                                 " semicolon-separated generator images");
    return e;
}

std::map<std::string, Rational> parse_params(const std::string& text) {
    std::map<std::string, Rational> out;
    for (const auto& item : split(text, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::runtime_error("expected name=value: " + item);
        auto r = Rational::parse(item.substr(eq + 1));
        if (!r) throw std::runtime_error("malformed rational in " + item);
        out[item.substr(0, eq)] = *r;
    }
    return out;
}

void emit(bool json, const Json& payload, const std::string& text) {
    if (json)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

int outcome_code(const SolveResult& result) {
    if (result.is_assignment()) return kExitTrue;
    if (result.is_inconsistent()) return kExitFalse;
    return kExitCap;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Weyl-algebra and skew PBW computation"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    int exit_code = kExitTrue;

    // ---- verify-pair ----
    {
        auto* cmd = app.add_subcommand("verify-pair", "check qp = pq + 1 in A_1");
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--q", *q)->required();
        cmd->callback([&, p, q] {
            SignaturePtr w = Signature::weyl();
            NCPoly pp = parse_expression(*p, w), qq = parse_expression(*q, w);
            NCPoly residual =
                commutator(qq, pp) - NCPoly::scalar(w, FracElem(Rational(1)));
            bool ok = residual.is_zero();
            Json j;
            j["dixmier"] = ok;
            j["commutator"] = format_canonical(commutator(qq, pp));
            emit(json, j,
                 ok ? "DIXMIER" : "NOT DIXMIER: [q,p] = " + format_canonical(commutator(qq, pp)));
            exit_code = ok ? kExitTrue : kExitFalse;
        });
    }

    // ---- commutator ----
    {
        auto* cmd = app.add_subcommand("commutator", "[f,g] = fg - gf");
        auto alg = std::make_shared<AlgebraOpts>();
        auto f = std::make_shared<std::string>();
        auto g = std::make_shared<std::string>();
        add_algebra_opts(cmd, *alg);
        cmd->add_option("--f", *f)->required();
        cmd->add_option("--g", *g)->required();
        cmd->callback([&, alg, f, g] {
            SignaturePtr sig = alg->make();
            NCPoly c = commutator(parse_expression(*f, sig), parse_expression(*g, sig));
            emit(json, Json(format_canonical(c)), format_canonical(c));
        });
    }

    // ---- mass ----
    {
        auto* cmd = app.add_subcommand("mass", "number of nonzero graded components in A_1");
        auto f = std::make_shared<std::string>();
        cmd->add_option("--f", *f)->required();
        cmd->callback([&, f] {
            unsigned m = mass(parse_expression(*f, Signature::weyl()));
            emit(json, Json(m), std::to_string(m));
        });
    }

    // ---- is-central ----
    {
        auto* cmd = app.add_subcommand("is-central", "does f commute with every generator");
        auto alg = std::make_shared<AlgebraOpts>();
        auto f = std::make_shared<std::string>();
        add_algebra_opts(cmd, *alg);
        cmd->add_option("--f", *f)->required();
        cmd->callback([&, alg, f] {
            bool central = is_central(parse_expression(*f, alg->make()));
            emit(json, Json(central), central ? "CENTRAL" : "NOT CENTRAL");
            exit_code = central ? kExitTrue : kExitFalse;
        });
    }

    // ---- identities ----
    {
        auto* cmd = app.add_subcommand("identities", "determinant-identity battery residuals");
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--q", *q)->required();
        cmd->callback([&, p, q] {
            SignaturePtr w = Signature::weyl();
            IdentityBattery b = build_identity_battery(
                decompose_pair(parse_expression(*p, w), parse_expression(*q, w)));
            std::ostringstream os;
            for (std::size_t s = 0; s < b.residuals.size(); ++s)
                os << "residual[" << s << "] = " << b.residuals[s].str() << "\n";
            os << (b.all_zero() ? "ALL ZERO (Dixmier pair)" : "NONZERO RESIDUALS");
            emit(json, to_json(b), os.str());
            exit_code = b.all_zero() ? kExitTrue : kExitFalse;
        });
    }

    // ---- verify-tuple ----
    {
        auto* cmd = app.add_subcommand("verify-tuple", "check [p_j,p_i] = d_ij for all i < j");
        auto alg = std::make_shared<AlgebraOpts>();
        auto polys = std::make_shared<std::string>();
        add_algebra_opts(cmd, *alg);
        cmd->add_option("--polys", *polys, "semicolon-separated p_1;..;p_n")->required();
        cmd->callback([&, alg, polys] {
            SignaturePtr sig = alg->make();
            bool ok = check_skew_tuple(parse_polys(*polys, sig), sig);
            emit(json, Json(ok), ok ? "SKEW DIXMIER" : "NOT A SKEW TUPLE");
            exit_code = ok ? kExitTrue : kExitFalse;
        });
    }

    // ---- skew-system ----
    {
        auto* cmd = app.add_subcommand("skew-system",
                                       "skew-symmetric linear system completing the generators");
        auto alg = std::make_shared<AlgebraOpts>();
        add_algebra_opts(cmd, *alg);
        cmd->callback([&, alg] {
            SkewLinearSystem sys = build_skew_linear_system(alg->make());
            std::ostringstream os;
            for (const auto& row : sys.M) {
                for (const auto& e : row) os << e.str() << "  ";
                os << "\n";
            }
            os << "b = (";
            for (std::size_t i = 0; i < sys.b.size(); ++i)
                os << (i ? ", " : "") << sys.b[i].str();
            os << ")";
            emit(json, to_json(sys), os.str());
        });
    }

    // ---- gen-system ----
    {
        auto* cmd = app.add_subcommand("gen-system", "coefficient system for [q,p] = 1");
        auto n = std::make_shared<unsigned>(1);
        auto m = std::make_shared<unsigned>(1);
        cmd->add_option("--n", *n, "x-degree bound")->required();
        cmd->add_option("--m", *m, "t-degree bound")->required();
        cmd->callback([&, n, m] {
            auto [catalog, sys] = generate_dixmier_system(*n, *m);
            std::ostringstream os;
            for (const CPoly& eq : sys.equations) os << eq.str() << " = 0\n";
            os << sys.equations.size() << " equations, " << catalog.names.size() << " unknowns";
            emit(json, to_json(catalog, sys), os.str());
        });
    }

    // ---- gen-skew-system ----
    {
        auto* cmd = app.add_subcommand("gen-skew-system",
                                       "coefficient system for [p_j,p_i] = d_ij");
        auto alg = std::make_shared<AlgebraOpts>();
        auto bounds = std::make_shared<std::string>();
        add_algebra_opts(cmd, *alg);
        cmd->add_option("--bounds", *bounds, "per-variable degree caps, e.g. 1,1,1")->required();
        cmd->callback([&, alg, bounds] {
            auto [catalog, sys] = generate_skew_system(alg->make(), parse_bounds(*bounds));
            std::ostringstream os;
            for (const CPoly& eq : sys.equations) os << eq.str() << " = 0\n";
            os << sys.equations.size() << " equations, " << catalog.names.size() << " unknowns";
            emit(json, to_json(catalog, sys), os.str());
        });
    }

    // ---- solve-linear ----
    {
        auto* cmd = app.add_subcommand(
            "solve-linear", "exact Gaussian elimination over the parameter fraction field");
        auto alg = std::make_shared<AlgebraOpts>();
        auto eqs = std::make_shared<std::string>();
        auto unknowns = std::make_shared<std::string>();
        auto skew = std::make_shared<bool>(false);
        add_algebra_opts(cmd, *alg);
        cmd->add_option("--equations", *eqs, "semicolon-separated polynomials set to 0");
        cmd->add_option("--unknowns", *unknowns, "comma-separated unknown names");
        cmd->add_flag("--skew", *skew, "solve the generator-completion system of the algebra");
        cmd->callback([&, alg, eqs, unknowns, skew] {
            UnknownCatalog catalog;
            EqSystem sys;
            SignaturePtr sig = alg->make();
            if (*skew) {
                SkewLinearSystem skewsys = build_skew_linear_system(sig);
                for (std::size_t k = 1; k < static_cast<std::size_t>(sig->n()); ++k)
                    catalog.names.push_back("a" + std::to_string(k));
                for (std::size_t i = 0; i < skewsys.M.size(); ++i) {
                    CPoly eq;
                    for (std::size_t k = 0; k < skewsys.M.size(); ++k)
                        eq += skewsys.M[i][k].num() * CPoly::variable(catalog.names[k]);
                    eq -= skewsys.b[i].num();
                    sys.equations.push_back(eq);
                }
            } else {
                catalog.names = split(*unknowns, ',');
                for (const auto& text : split(*eqs, ';')) {
                    NCPoly poly = parse_expression(text, sig);
                    if (!poly.is_scalar())
                        throw std::runtime_error("equations must be scalar (parameters only)");
                    sys.equations.push_back(poly.scalar_value().num());
                }
            }
            SolveResult result = linear_solve_exact(sys, catalog);
            std::ostringstream os;
            if (result.is_assignment()) {
                for (const auto& [name, value] : result.assignment().values)
                    os << name << " = " << value.str() << "\n";
                for (const auto& f : result.free) os << f << " free\n";
            } else if (result.is_inconsistent()) {
                os << "INCONSISTENT\n";
            }
            for (const auto& a : result.assumptions) os << "assuming " << a.str() << " != 0\n";
            emit(json, to_json(result), os.str());
            exit_code = outcome_code(result);
        });
    }

    // ---- groebner ----
    {
        auto* cmd = app.add_subcommand("groebner", "capped Buchberger basis");
        auto gens = std::make_shared<std::string>();
        auto order_name = std::make_shared<std::string>("deglex");
        auto vars = std::make_shared<std::string>();
        add_algebra_opts(cmd, *std::make_shared<AlgebraOpts>());
        cmd->add_option("--gens", *gens, "semicolon-separated generators")->required();
        cmd->add_option("--order", *order_name, "lex or deglex");
        cmd->add_option("--vars", *vars, "variable precedence, e.g. x,y");
        cmd->callback([&, gens, order_name, vars] {
            SignaturePtr w = Signature::weyl();
            std::vector<CPoly> g;
            for (const auto& text : split(*gens, ';')) {
                NCPoly poly = parse_expression(text, w);
                if (!poly.is_scalar())
                    throw std::runtime_error("generators must be scalar (parameters only)");
                g.push_back(poly.scalar_value().num());
            }
            MonoOrder order{*order_name == "lex" ? MonoOrderKind::Lex : MonoOrderKind::DegLex,
                            split(*vars, ',')};
            GroebnerResult res = groebner_basis(g, order, groebner_caps_from_env());
            if (std::holds_alternative<CapReached>(res)) {
                emit(json, Json{{"outcome", "cap-reached"}}, "CAP REACHED");
                exit_code = kExitCap;
                return;
            }
            Json body;
            body["outcome"] = "basis";
            Json list = Json::array();
            std::ostringstream os;
            for (const CPoly& b : std::get<Basis>(res).polys) {
                list.push_back(b.str());
                os << b.str() << "\n";
            }
            body["basis"] = std::move(list);
            emit(json, body, os.str());
        });
    }

    // ---- endo-check / endo-apply / endo-compose / endo-invert ----
    {
        auto* cmd = app.add_subcommand("endo-check", "is the generator-image tuple well-defined");
        auto alg = std::make_shared<AlgebraOpts>();
        auto images = std::make_shared<std::string>();
        add_algebra_opts(cmd, *alg);
        cmd->add_option("--images", *images, "semicolon-separated images of x_1..x_n")->required();
        cmd->callback([&, alg, images] {
            bool ok = endo_check(parse_endo(*images, alg->make()));
            emit(json, Json(ok), ok ? "WELL-DEFINED" : "NOT AN ENDOMORPHISM");
            exit_code = ok ? kExitTrue : kExitFalse;
        });
    }
    {
        auto* cmd = app.add_subcommand("endo-apply", "apply an endomorphism to a polynomial");
        auto alg = std::make_shared<AlgebraOpts>();
        auto images = std::make_shared<std::string>();
        auto f = std::make_shared<std::string>();
        add_algebra_opts(cmd, *alg);
        cmd->add_option("--images", *images)->required();
        cmd->add_option("--f", *f)->required();
        cmd->callback([&, alg, images, f] {
            SignaturePtr sig = alg->make();
            Endomorphism e = parse_endo(*images, sig);
            if (!endo_check(e)) throw std::runtime_error("images do not define an endomorphism");
            NCPoly value = endo_apply(e, parse_expression(*f, sig));
            emit(json, Json(format_canonical(value)), format_canonical(value));
        });
    }
    {
        auto* cmd = app.add_subcommand("endo-compose", "(outer o inner)(x_i) = outer(inner(x_i))");
        auto alg = std::make_shared<AlgebraOpts>();
        auto outer = std::make_shared<std::string>();
        auto inner = std::make_shared<std::string>();
        add_algebra_opts(cmd, *alg);
        cmd->add_option("--outer", *outer)->required();
        cmd->add_option("--inner", *inner)->required();
        cmd->callback([&, alg, outer, inner] {
            SignaturePtr sig = alg->make();
            Endomorphism c = endo_compose(parse_endo(*outer, sig), parse_endo(*inner, sig));
            std::ostringstream os;
            for (const NCPoly& im : c.images) os << format_canonical(im) << "\n";
            emit(json, to_json(c), os.str());
        });
    }
    {
        auto* cmd = app.add_subcommand("endo-invert", "bounded-ansatz inverse search");
        auto alg = std::make_shared<AlgebraOpts>();
        auto images = std::make_shared<std::string>();
        auto bounds = std::make_shared<std::string>();
        add_algebra_opts(cmd, *alg);
        cmd->add_option("--images", *images)->required();
        cmd->add_option("--bounds", *bounds, "per-variable degree caps, e.g. 1,2")->required();
        cmd->callback([&, alg, images, bounds] {
            SignaturePtr sig = alg->make();
            Endomorphism e = parse_endo(*images, sig);
            if (!endo_check(e)) throw std::runtime_error("images do not define an endomorphism");
            InverseResult inv = endo_invert_ansatz(e, parse_bounds(*bounds));
            if (!inv.found) {
                emit(json, Json{{"outcome", "not-found-within-bounds"}},
                     "NOT FOUND WITHIN BOUNDS");
                exit_code = kExitFalse;
                return;
            }
            Json body = to_json(*inv.found);
            body["outcome"] = "found";
            std::ostringstream os;
            for (const NCPoly& im : inv.found->images) os << format_canonical(im) << "\n";
            emit(json, body, os.str());
        });
    }

    // ---- word-eval / verify-factorization / solve-factorization ----
    {
        auto* cmd = app.add_subcommand("word-eval", "evaluate an elementary word (A_1)");
        auto word = std::make_shared<std::string>();
        cmd->add_option("--word", *word, "e.g. \"Psi(1,2) Phi(1,-1/2)\"")->required();
        cmd->callback([&, word] {
            Endomorphism e = word_evaluate(parse_word(*word));
            std::ostringstream os;
            os << "t -> " << format_canonical(e.images[0]) << "\n"
               << "x -> " << format_canonical(e.images[1]);
            emit(json, to_json(e), os.str());
        });
    }
    {
        auto* cmd = app.add_subcommand("verify-factorization",
                                       "does the word evaluate to the target images");
        auto word = std::make_shared<std::string>();
        auto images = std::make_shared<std::string>();
        cmd->add_option("--word", *word)->required();
        cmd->add_option("--images", *images, "target t-image;x-image")->required();
        cmd->callback([&, word, images] {
            Endomorphism target = parse_endo(*images, Signature::weyl());
            bool ok = verify_factorization(parse_word(*word), target);
            emit(json, Json(ok), ok ? "FACTORIZATION VERIFIED" : "MISMATCH");
            exit_code = ok ? kExitTrue : kExitFalse;
        });
    }
    {
        auto* cmd = app.add_subcommand("solve-factorization",
                                       "match a template word against target images");
        auto word = std::make_shared<std::string>();
        auto unknowns = std::make_shared<std::string>();
        auto images = std::make_shared<std::string>();
        cmd->add_option("--word", *word, "template with symbolic lambdas")->required();
        cmd->add_option("--unknowns", *unknowns, "comma-separated lambda names")->required();
        cmd->add_option("--images", *images)->required();
        cmd->callback([&, word, unknowns, images] {
            Endomorphism target = parse_endo(*images, Signature::weyl());
            SolveResult result = solve_factorization_params(parse_word(*word),
                                                            split(*unknowns, ','), target);
            std::ostringstream os;
            if (result.is_assignment())
                for (const auto& [name, value] : result.assignment().values)
                    os << name << " = " << value.str() << "\n";
            else
                os << (result.is_inconsistent() ? "INCONSISTENT" : "UNKNOWN") << "\n";
            emit(json, to_json(result), os.str());
            exit_code = outcome_code(result);
        });
    }

    // ---- cond3-matrix / left-inverse / recover-generators ----
    {
        auto* cmd = app.add_subcommand("cond3-matrix", "condition-(iii) matrix of a pair");
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--q", *q)->required();
        cmd->callback([&, p, q] {
            SignaturePtr w = Signature::weyl();
            auto m = build_condition_iii_matrix(parse_expression(*p, w),
                                                parse_expression(*q, w));
            if (!m) {
                emit(json, Json{{"outcome", "inapplicable"}},
                     "INAPPLICABLE: t does not divide both x^0 parts");
                exit_code = kExitFalse;
                return;
            }
            Json body;
            body["outcome"] = "matrix";
            body["matrix"] = to_json(*m);
            std::ostringstream os;
            os << "[" << format_canonical(m->at(0, 0)) << ", " << format_canonical(m->at(0, 1))
               << "]\n[" << format_canonical(m->at(1, 0)) << ", "
               << format_canonical(m->at(1, 1)) << "]";
            emit(json, body, os.str());
        });
    }
    {
        auto* cmd = app.add_subcommand("left-inverse", "bounded-ansatz left inverse of a matrix");
        auto alg = std::make_shared<AlgebraOpts>();
        auto entries = std::make_shared<std::string>();
        auto rows = std::make_shared<unsigned>(2);
        auto bounds = std::make_shared<std::string>();
        add_algebra_opts(cmd, *alg);
        cmd->add_option("--entries", *entries, "row-major, semicolon-separated")->required();
        cmd->add_option("--rows", *rows);
        cmd->add_option("--bounds", *bounds, "per-variable degree caps")->required();
        cmd->callback([&, alg, entries, rows, bounds] {
            SignaturePtr sig = alg->make();
            std::vector<NCPoly> cells = parse_polys(*entries, sig);
            NCMatrix m = NCMatrix::from_entries(*rows, cells.size() / *rows, cells);
            auto inv = left_inverse_ansatz(m, parse_bounds(*bounds));
            if (!inv) {
                emit(json, Json{{"outcome", "not-found-within-bounds"}},
                     "NOT FOUND WITHIN BOUNDS");
                exit_code = kExitFalse;
                return;
            }
            Json body;
            body["outcome"] = "found";
            body["inverse"] = to_json(*inv);
            std::ostringstream os;
            for (std::size_t r = 0; r < inv->rows(); ++r) {
                for (std::size_t c = 0; c < inv->cols(); ++c)
                    os << format_canonical(inv->at(r, c)) << (c + 1 < inv->cols() ? ", " : "");
                os << "\n";
            }
            emit(json, body, os.str());
        });
    }
    {
        auto* cmd = app.add_subcommand("recover-generators",
                                       "express t and x in terms of a Dixmier pair");
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        auto bounds = std::make_shared<std::string>("2,2");
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--bounds", *bounds, "caps for the inverse search (default 2,2)");
        cmd->callback([&, p, q, bounds] {
            SignaturePtr w = Signature::weyl();
            NCPoly pp = parse_expression(*p, w), qq = parse_expression(*q, w);
            auto m = build_condition_iii_matrix(pp, qq);
            if (!m) {
                emit(json, Json{{"outcome", "inapplicable"}}, "INAPPLICABLE");
                exit_code = kExitFalse;
                return;
            }
            auto inv = left_inverse_ansatz(*m, parse_bounds(*bounds));
            if (!inv) {
                emit(json, Json{{"outcome", "not-found-within-bounds"}},
                     "NO INVERSE WITHIN BOUNDS");
                exit_code = kExitFalse;
                return;
            }
            auto [t_expr, x_expr] = recover_generators(pp, qq, *inv);
            Json body;
            body["outcome"] = "recovered";
            body["inverse"] = to_json(*inv);
            body["t"] = format_canonical(t_expr);
            body["x"] = format_canonical(x_expr);
            emit(json, body,
                 "t = " + format_canonical(t_expr) + "\nx = " + format_canonical(x_expr));
        });
    }

    // ---- family ----
    {
        auto* cmd = app.add_subcommand("family", "instantiate a closed-form Dixmier family");
        auto id = std::make_shared<std::string>();
        auto size = std::make_shared<unsigned>(0);
        auto params = std::make_shared<std::string>();
        auto fdata = std::make_shared<std::string>();
        auto matrices = std::make_shared<bool>(false);
        cmd->add_option("--id", *id, "type1..4, xdeg1.case1/2 (x-degree 1), tdeg1.case1/2 (t-degree 1)")->required();
        cmd->add_option("--size", *size, "t-degree m for xdeg1, x-degree n for tdeg1");
        cmd->add_option("--params", *params, "e.g. l0=1,l1=1,l2=2 or alpha=1,lambda=1");
        cmd->add_option("--free-poly", *fdata, "free polynomial in the parameter u, e.g. 1+u^2");
        cmd->add_flag("--matrices", *matrices, "also print the condition-(iii) matrix pair");
        cmd->callback([&, id, size, params, fdata, matrices] {
            CPoly f;
            if (!fdata->empty()) {
                NCPoly poly = parse_expression(*fdata, Signature::weyl());
                if (!poly.is_scalar() || !poly.scalar_value().is_polynomial())
                    throw std::runtime_error("free polynomial must be scalar in u");
                f = poly.scalar_value().polynomial_value();
            }
            FamilySpec spec{*id, *size};
            auto env = parse_params(*params);
            auto [p, q] = family_instantiate(spec, env, f);
            Json body;
            body["p"] = format_canonical(p);
            body["q"] = format_canonical(q);
            std::ostringstream os;
            os << "p = " << format_canonical(p) << "\nq = " << format_canonical(q);
            if (*matrices) {
                FamilyMatrices fm = family_matrices(spec, env, f);
                body["matrix"] = to_json(NCMatrix::from_entries(2, 2, fm.matrix));
                body["inverse"] = to_json(NCMatrix::from_entries(2, 2, fm.inverse));
            }
            emit(json, body, os.str());
        });
    }

    // ---- fixtures ----
    {
        auto* cmd = app.add_subcommand("fixtures", "run the table/example fixture corpus");
        auto run = cmd->add_subcommand("run", "execute every fixture");
        auto dir = std::make_shared<std::string>("data/fixtures");
        auto file = std::make_shared<std::string>();
        run->add_option("--dir", *dir, "fixture directory (default data/fixtures)");
        run->add_option("--file", *file, "single fixture file");
        run->callback([&, dir, file] {
            std::vector<FixtureRecord> fixtures = file->empty() ? load_fixture_dir(*dir)
                                                                : load_fixture_file(*file);
            Json results = Json::array();
            bool all = true;
            for (const auto& record : fixtures) {
                FixtureOutcome outcome = run_fixture(record);
                all = all && outcome.passed;
                Json item;
                item["id"] = outcome.id;
                item["passed"] = outcome.passed;
                if (!outcome.passed) item["detail"] = outcome.detail;
                results.push_back(std::move(item));
                if (!json)
                    std::cout << (outcome.passed ? "PASS " : "FAIL ") << outcome.id
                              << (outcome.passed ? "" : "  (" + outcome.detail + ")") << "\n";
            }
            if (json) std::cout << results.dump(2) << "\n";
            exit_code = all ? kExitTrue : kExitFalse;
        });
        cmd->require_subcommand(1);
    }

    // --json is accepted before or after the subcommand name
    std::function<void(CLI::App*)> propagate_json = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands([](CLI::App*) { return true; })) {
            sub->add_flag("--json", json, "machine-readable output");
            propagate_json(sub);
        }
    };
    propagate_json(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
