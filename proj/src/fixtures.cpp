#include "weylforge/fixtures.hpp"

#include "weylforge/parser.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace weylforge {

std::vector<FixtureRecord> load_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file " + path);
    Json doc = Json::parse(in);
    std::vector<FixtureRecord> out;
    for (const Json& item : doc) {
        FixtureRecord rec;
        rec.id = item.at("id").get<std::string>();
        rec.raw = item;
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<FixtureRecord> load_fixture_dir(const std::string& dir) {
    std::vector<std::string> paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".json") paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());
    std::vector<FixtureRecord> out;
    for (const auto& p : paths) {
        auto batch = load_fixture_file(p);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

SignaturePtr signature_from_json(const Json& desc) {
    if (!desc.contains("n")) return Signature::weyl();
    int n = desc.at("n").get<int>();
    std::vector<FracElem> d;
    for (const Json& item : desc.at("d")) {
        std::string text = item.get<std::string>();
        if (auto r = Rational::parse(text))
            d.push_back(FracElem(*r));
        else
            d.push_back(FracElem::parameter(text));
    }
    if (n == 2 && d.size() == 1 && d[0].is_rational() && d[0].rational_value().is_one())
        return Signature::weyl();
    return Signature::csd(n, std::move(d));
}

ElementaryWord parse_word(const std::string& text) {
    ElementaryWord word;
    SignaturePtr sig = Signature::weyl();
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ';'))
            ++i;
    };
    skip();
    while (i < text.size()) {
        ElementaryKind kind;
        if (text.compare(i, 3, "Phi") == 0) {
            kind = ElementaryKind::Phi;
            i += 3;
        } else if (text.compare(i, 3, "Psi") == 0) {
            kind = ElementaryKind::Psi;
            i += 3;
        } else {
            throw std::runtime_error("parse_word: expected Phi or Psi at position " +
                                     std::to_string(i));
        }
        skip();
        if (i >= text.size() || text[i] != '(')
            throw std::runtime_error("parse_word: expected '('");
        std::size_t depth = 1, start = ++i;
        std::size_t comma = std::string::npos;
        while (i < text.size() && depth > 0) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') --depth;
            if (text[i] == ',' && depth == 1 && comma == std::string::npos) comma = i;
            ++i;
        }
        if (depth != 0 || comma == std::string::npos)
            throw std::runtime_error("parse_word: malformed letter arguments");
        std::string exp_text = text.substr(start, comma - start);
        std::string lam_text = text.substr(comma + 1, i - 1 - (comma + 1));
        unsigned exponent = static_cast<unsigned>(std::stoul(exp_text));
        NCPoly lam = parse_expression(lam_text, sig);
        if (!lam.is_scalar()) throw std::runtime_error("parse_word: lambda must be a constant");
        word.letters.push_back({kind, exponent, lam.scalar_value()});
        skip();
    }
    return word;
}

namespace {

std::map<std::string, Rational> parse_env(const Json& obj) {
    std::map<std::string, Rational> env;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        auto r = Rational::parse(it.value().get<std::string>());
        if (!r) throw std::runtime_error("fixture: malformed rational " +
                                         it.value().get<std::string>());
        env[it.key()] = *r;
    }
    return env;
}

FracElem substitute_letter(const FracElem& lambda, const std::map<std::string, Rational>& env) {
    return lambda.substitute(env);
}

struct CheckFail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

NCMatrix parse_matrix(const Json& rows, const SignaturePtr& sig,
                      const std::map<std::string, Rational>& env) {
    std::vector<NCPoly> entries;
    std::size_t ncols = 0;
    for (const Json& row : rows) {
        ncols = row.size();
        for (const Json& cell : row)
            entries.push_back(
                parse_expression(cell.get<std::string>(), sig).substitute_params(env));
    }
    return NCMatrix::from_entries(rows.size(), ncols, std::move(entries));
}

void check_one(const FixtureRecord& record, const std::map<std::string, Rational>& env_in) {
    const Json& raw = record.raw;
    SignaturePtr sig = signature_from_json(raw.value("algebra", Json::object()));
    std::string kind = raw.at("kind").get<std::string>();
    // auxiliary scalar definitions, evaluated in order on top of the instantiation
    std::map<std::string, Rational> env = env_in;
    if (raw.contains("defs")) {
        if (env_in.empty())
            throw CheckFail("defs require a rational instantiation, not a symbolic run");
        for (auto it = raw.at("defs").begin(); it != raw.at("defs").end(); ++it) {
            NCPoly value =
                parse_expression(it.value().get<std::string>(), sig).substitute_params(env);
            if (!value.is_scalar() || !value.scalar_value().is_rational())
                throw CheckFail("def " + it.key() + " did not evaluate to a rational");
            env[it.key()] = value.scalar_value().rational_value();
        }
    }
    if (kind == "pair") {
        NCPoly p = parse_expression(raw.at("p").get<std::string>(), sig).substitute_params(env);
        NCPoly q = parse_expression(raw.at("q").get<std::string>(), sig).substitute_params(env);
        if (!check_dixmier_pair(p, q)) throw CheckFail("pair check failed");
        if (raw.contains("matrix")) {
            NCMatrix m = parse_matrix(raw.at("matrix"), sig, env);
            NCMatrix inv = parse_matrix(raw.at("inverse"), sig, env);
            NCMatrix id = NCMatrix::identity(m.rows(), sig);
            if (!(mat_mul(m, inv) == id)) throw CheckFail("matrix*inverse != I");
            if (!(mat_mul(inv, m) == id)) throw CheckFail("inverse*matrix != I");
        }
    } else if (kind == "tuple") {
        std::vector<NCPoly> polys;
        for (const Json& text : raw.at("polys"))
            polys.push_back(
                parse_expression(text.get<std::string>(), sig).substitute_params(env));
        if (!check_skew_tuple(polys, sig)) throw CheckFail("tuple check failed");
    } else if (kind == "word") {
        NCPoly p = parse_expression(raw.at("p").get<std::string>(), sig).substitute_params(env);
        NCPoly q = parse_expression(raw.at("q").get<std::string>(), sig).substitute_params(env);
        ElementaryWord word = parse_word(raw.at("word").get<std::string>());
        for (auto& letter : word.letters) letter.lambda = substitute_letter(letter.lambda, env);
        Endomorphism target{sig, {p, q}};
        if (!verify_factorization(word, target)) throw CheckFail("word does not match target");
    } else {
        throw CheckFail("unknown fixture kind " + kind);
    }
}

}  // namespace

FixtureOutcome run_fixture(const FixtureRecord& record) {
    FixtureOutcome outcome;
    outcome.id = record.id;
    try {
        bool ran = false;
        if (record.raw.value("symbolic", false)) {
            check_one(record, {});
            ran = true;
        }
        if (record.raw.contains("instantiations")) {
            for (const Json& inst : record.raw.at("instantiations")) {
                check_one(record, parse_env(inst));
                ran = true;
            }
        }
        if (!ran) throw CheckFail("fixture has neither symbolic flag nor instantiations");
        outcome.passed = true;
    } catch (const std::exception& ex) {
        outcome.passed = false;
        outcome.detail = ex.what();
    }
    return outcome;
}

}  // namespace weylforge
