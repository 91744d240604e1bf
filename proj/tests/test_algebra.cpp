#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylforge/algebra.hpp"
#include "weylforge/parser.hpp"

#include <random>

using namespace weylforge;

namespace {

std::mt19937 rng(987654);

NCPoly wparse(const std::string& s) { return parse_expression(s, Signature::weyl()); }

SignaturePtr csd3_rational() {
    static SignaturePtr sig = Signature::csd(
        3, {FracElem(Rational(2)), FracElem(Rational(3)), FracElem(Rational(2))});
    return sig;
}

Rational random_rational() {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    return Rational(num(rng), static_cast<unsigned long>(den(rng)));
}

NCPoly random_ncpoly(const SignaturePtr& sig, unsigned max_deg, unsigned max_terms,
                     bool allow_zero = true) {
    std::uniform_int_distribution<unsigned> nterms(allow_zero ? 0 : 1, max_terms);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    NCPoly out(sig);
    unsigned k = nterms(rng);
    for (unsigned i = 0; i < k; ++i) {
        ExpVec e(static_cast<std::size_t>(sig->n()), 0);
        unsigned budget = max_deg;
        for (auto& x : e) {
            unsigned v = deg(rng) % (budget + 1);
            x = v;
            budget -= v;
        }
        out.add_term(e, FracElem(random_rational()));
    }
    return out;
}

/// Test-only oracle: x^e * x_i by iterated application of the single defining
/// relation, one letter at a time. With j* the largest index > i present,
///   x^e x_i = x^(e - d_j*) x_i x_j* + d_{i,j*} x^(e - d_j*).
void rewrite_insert_letter(const SignaturePtr& sig, const ExpVec& e, const FracElem& c, int i,
                           NCPoly& acc) {
    int jstar = -1;
    for (int j = sig->n() - 1; j > i; --j)
        if (e[static_cast<std::size_t>(j)] > 0) {
            jstar = j;
            break;
        }
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
        for (int i = 0; i < f.sig()->n(); ++i) {
            for (unsigned k = 0; k < e[static_cast<std::size_t>(i)]; ++k) {
                NCPoly next(f.sig());
                for (const auto& [ef, cf] : cur.terms())
                    rewrite_insert_letter(f.sig(), ef, cf, i, next);
                cur = std::move(next);
            }
        }
        out += cur;
    }
    return out;
}

}  // namespace

TEST_CASE("defining relation and basic products") {
    SignaturePtr w = Signature::weyl();
    NCPoly t = NCPoly::generator(w, 0), x = NCPoly::generator(w, 1);
    CHECK(nc_mul(x, t) == wparse("t*x + 1"));
    CHECK(nc_mul(t + x, t) == wparse("t^2 + t*x + 1"));
    CHECK(nc_mul(x, nc_mul(t, t)) == wparse("t^2*x + 2*t"));

    SignaturePtr s3 = Signature::csd(
        3, {FracElem::parameter("d12"), FracElem::parameter("d13"), FracElem::parameter("d23")});
    NCPoly x1 = NCPoly::generator(s3, 0), x2 = NCPoly::generator(s3, 1);
    NCPoly expect = NCPoly::monomial(s3, {1, 1, 0}, FracElem(Rational(1)));
    expect.add_term({0, 0, 0}, FracElem::parameter("d12"));
    CHECK(nc_mul(x2, x1) == expect);
}

TEST_CASE("commutator examples") {
    SignaturePtr w = Signature::weyl();
    NCPoly t = NCPoly::generator(w, 0), x = NCPoly::generator(w, 1);
    CHECK(commutator(x, t) == NCPoly::scalar(w, FracElem(Rational(1))));
    CHECK(commutator(t, t).is_zero());
    CHECK(commutator(t + x, t) == NCPoly::scalar(w, FracElem(Rational(1))));
}

TEST_CASE("leading data under deglex") {
    NCPoly f = wparse("t + x^2");
    LeadingData ld = leading_data(f);
    CHECK(ld.lm == ExpVec{0, 2});
    CHECK(ld.deg == 2);

    ld = leading_data(wparse("t*x + t^2"));
    CHECK(ld.lm == ExpVec{2, 0});  // (2,0) beats (1,1) leftmost

    ld = leading_data(wparse("5"));
    CHECK(ld.lm == ExpVec{0, 0});
    CHECK(ld.deg == 0);
    CHECK(ld.lc.rational_value() == Rational(5));

    CHECK_THROWS(leading_data(NCPoly::zero(Signature::weyl())));
}

TEST_CASE("mass examples") {
    CHECK(mass(wparse("t + x")) == 2);
    CHECK(mass(wparse("1")) == 1);
    CHECK(mass(wparse("t*x + 3")) == 1);
    CHECK_THROWS(mass(NCPoly::zero(Signature::weyl())));
}

TEST_CASE("centrality") {
    CHECK(is_central(wparse("5")));
    CHECK(!is_central(wparse("t")));
    SignaturePtr s3 = csd3_rational();
    CHECK(!is_central(NCPoly::generator(s3, 0)));
    CHECK(is_central(NCPoly::scalar(s3, FracElem(Rational(7, 3)))));
}

TEST_CASE("closed form equals iterated rewriting on random monomials") {
    SignaturePtr s3 = csd3_rational();
    std::uniform_int_distribution<unsigned> d(0, 6);
    for (int trial = 0; trial < 120; ++trial) {
        ExpVec a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)};
        NCPoly fa = NCPoly::monomial(s3, a, FracElem(Rational(1)));
        NCPoly fb = NCPoly::monomial(s3, b, FracElem(Rational(1)));
        CHECK(nc_mul(fa, fb) == rewrite_mul(fa, fb));
    }
}

TEST_CASE("associativity on random triples in CSD3") {
    SignaturePtr s3 = csd3_rational();
    for (int trial = 0; trial < 40; ++trial) {
        NCPoly f = random_ncpoly(s3, 3, 3);
        NCPoly g = random_ncpoly(s3, 3, 3);
        NCPoly h = random_ncpoly(s3, 3, 3);
        CHECK(nc_mul(nc_mul(f, g), h) == nc_mul(f, nc_mul(g, h)));
    }
}

TEST_CASE("degree bound and commutator degree drop") {
    SignaturePtr s3 = csd3_rational();
    for (int trial = 0; trial < 60; ++trial) {
        NCPoly f = random_ncpoly(s3, 4, 3, false);
        NCPoly g = random_ncpoly(s3, 4, 3, false);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(nc_mul(f, g).degree() == f.degree() + g.degree());
        if (f.degree() >= 1 && g.degree() >= 1) {
            NCPoly c = commutator(f, g);
            if (!c.is_zero()) CHECK(c.degree() < f.degree() + g.degree());
        }
    }
}

TEST_CASE("central random candidates are scalars") {
    SignaturePtr s3 = csd3_rational();
    for (int trial = 0; trial < 60; ++trial) {
        NCPoly f = random_ncpoly(s3, 3, 4, false);
        if (f.is_zero()) continue;
        if (is_central(f)) CHECK(f.is_scalar());
        if (!f.is_scalar()) CHECK(!is_central(f));
    }
}

TEST_CASE("lm is monotone under one-sided products") {
    SignaturePtr s3 = csd3_rational();
    std::uniform_int_distribution<unsigned> d(0, 3);
    for (int trial = 0; trial < 80; ++trial) {
        ExpVec a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)};
        ExpVec g{d(rng), d(rng), d(rng)}, l{d(rng), d(rng), d(rng)};
        if (deglex_compare(a, b) <= 0) continue;
        auto mono = [&](const ExpVec& e) {
            return NCPoly::monomial(s3, e, FracElem(Rational(1)));
        };
        NCPoly lhs = nc_mul(nc_mul(mono(g), mono(a)), mono(l));
        NCPoly rhs = nc_mul(nc_mul(mono(g), mono(b)), mono(l));
        CHECK(deglex_compare(leading_data(lhs).lm, leading_data(rhs).lm) > 0);
    }
}

TEST_CASE("signature accessors and errors") {
    SignaturePtr s3 = csd3_rational();
    CHECK(s3->d(0, 1).rational_value() == Rational(2));
    CHECK(s3->d(1, 2).rational_value() == Rational(2));
    CHECK(s3->d(0, 2).rational_value() == Rational(3));
    CHECK_THROWS(s3->d(1, 1));
    CHECK_THROWS(Signature::csd(3, {FracElem(Rational(0)), FracElem(Rational(1)),
                                    FracElem(Rational(1))}));
    // signature mismatch
    NCPoly a = NCPoly::generator(Signature::weyl(), 0);
    NCPoly b = NCPoly::generator(s3, 0);
    CHECK_THROWS(nc_mul(a, b));
}
