#include <doctest.h>

#include <random>

#include "ixmult/monomial.hpp"
#include "ixmult/order.hpp"
#include "ixmult/polynomial.hpp"
#include "ixmult/rational.hpp"
#include "ixmult/ring.hpp"
#include "ixmult/ring_map.hpp"
#include "test_util.hpp"

using namespace ixm;
using tst::P;

TEST_CASE("rational canonical form") {
    CHECK(Rational::from_string("2/4").str() == "1/2");
    CHECK(Rational::from_string("-6/3") == Rational(-2));
    CHECK(Rational::from_string("+7") == Rational(7));
    CHECK(Rational::from_string("0/5").str() == "0");
    CHECK(Rational(4, -6).str() == "-2/3");  // denominator normalized positive
    CHECK_THROWS_AS(Rational(1, 0), UserError);
    CHECK_THROWS_AS(Rational::from_string("1/0"), UserError);
    CHECK_THROWS_AS(Rational::from_string(""), UserError);
    CHECK_THROWS_AS(Rational::from_string("1//2"), UserError);
    CHECK_THROWS_AS(Rational::from_string("a"), UserError);
    CHECK_THROWS_AS(Rational::from_string("1 2"), UserError);
}

TEST_CASE("rational arithmetic") {
    Rational half(1, 2), third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(half - third == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == half);
    CHECK(half / Rational(1, 4) == Rational(2));
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(half / Rational(0), InternalError);
}

TEST_CASE("monomial divisibility, lcm, gcd, coprime") {
    Monomial a{2, 1, 0}, b{1, 2, 0}, c{0, 0, 3};
    CHECK(a.degree() == 3);
    CHECK(Monomial::lcm(a, b) == Monomial{2, 2, 0});
    CHECK(Monomial::gcd(a, b) == Monomial{1, 1, 0});
    CHECK(Monomial::coprime(a, c));
    CHECK(!Monomial::coprime(a, b));
    CHECK(Monomial::gcd(a, b).divides(a));
    CHECK(a.divides(Monomial::lcm(a, b)));
    CHECK(!a.divides(b));
    CHECK((Monomial::lcm(a, b) / a) == Monomial{0, 1, 0});
    CHECK_THROWS_AS(b / a, InternalError);         // not divisible
    CHECK_THROWS_AS(Monomial({-1}), StructuralError);
    CHECK_THROWS_AS(a.divides(Monomial{1, 1}), StructuralError);  // length mismatch
}

TEST_CASE("monomial exponent overflow is caught") {
    Monomial big({kMaxExponent});
    CHECK_THROWS_AS(big * big, InternalError);
}

TEST_CASE("monomial order examples") {
    auto dp = MonomialOrder::degrevlex();
    auto ds = MonomialOrder::negdegrevlex();
    auto lx = MonomialOrder::lex();
    // x^2 y vs x y^2 at equal degree: higher x-weight wins under degrevlex
    CHECK(cmp_monomials(dp, Monomial{2, 1}, Monomial{1, 2}) == Cmp::Greater);
    // local order: 1 beats x
    CHECK(cmp_monomials(ds, Monomial{0}, Monomial{1}) == Cmp::Greater);
    CHECK(cmp_monomials(dp, Monomial{2, 1}, Monomial{2, 1}) == Cmp::Equal);
    CHECK(cmp_monomials(lx, Monomial{1, 0}, Monomial{0, 5}) == Cmp::Greater);
    // ds ties at equal degree break like degrevlex
    CHECK(cmp_monomials(ds, Monomial{2, 1}, Monomial{1, 2}) == Cmp::Greater);

    auto blk = MonomialOrder::block({{OrderKind::DegRevLex, 1}, {OrderKind::DegRevLex, 2}});
    CHECK(cmp_monomials(blk, Monomial{0, 5, 5}, Monomial{1, 0, 0}) == Cmp::Less);
    CHECK(cmp_monomials(blk, Monomial{1, 0, 0}, Monomial{1, 2, 0}) == Cmp::Less);

    CHECK(dp.is_global());
    CHECK(lx.is_global());
    CHECK(blk.is_global());
    CHECK(!dp.is_local());
    CHECK(ds.is_local());
    CHECK(!ds.is_global());

    CHECK_THROWS_AS(MonomialOrder::block({{OrderKind::Block, 2}}), StructuralError);
    CHECK_THROWS_AS(cmp_monomials(blk, Monomial{1, 0}, Monomial{0, 1}), StructuralError);
}

TEST_CASE("order properties: trichotomy, multiplicativity, globality") {
    std::mt19937 rng(20260815);
    std::vector<MonomialOrder> orders = {
        MonomialOrder::lex(), MonomialOrder::degrevlex(), MonomialOrder::negdegrevlex(),
        MonomialOrder::block({{OrderKind::DegRevLex, 2}, {OrderKind::NegDegRevLex, 2}})};
    const int nvars = 4;
    const Monomial one(nvars);
    for (const auto& ord : orders) {
        for (int it = 0; it < 25; ++it) {
            Monomial a = tst::random_monomial(rng, nvars, 4);
            Monomial b = tst::random_monomial(rng, nvars, 4);
            Monomial c = tst::random_monomial(rng, nvars, 4);
            Cmp ab = cmp_monomials(ord, a, b);
            Cmp ba = cmp_monomials(ord, b, a);
            // antisymmetry and Equal iff identical exponents
            if (ab == Cmp::Equal) {
                CHECK(a == b);
                CHECK(ba == Cmp::Equal);
            } else {
                CHECK(ab != ba);
            }
            // multiplicative: comparison invariant under scaling by c
            CHECK(cmp_monomials(ord, a * c, b * c) == ab);
            // transitivity spot check
            Cmp bc = cmp_monomials(ord, b, c);
            if (ab == Cmp::Greater && bc == Cmp::Greater)
                CHECK(cmp_monomials(ord, a, c) == Cmp::Greater);
        }
        // global: every variable beats 1; local: 1 beats every variable
        for (int i = 0; i < nvars; ++i) {
            std::vector<Exponent> e(nvars, 0);
            e[static_cast<std::size_t>(i)] = 1;
            Cmp cv = cmp_monomials(ord, Monomial(e), one);
            if (ord.is_global()) CHECK(cv == Cmp::Greater);
            if (ord.is_local()) CHECK(cv == Cmp::Less);
        }
    }
}

TEST_CASE("ring construction rejects bad variable lists") {
    CHECK_THROWS_AS(PolyRing::make({"x", "x"}), StructuralError);
    CHECK_THROWS_AS(PolyRing::make({""}), StructuralError);
    auto R = tst::ring_dp({"x", "y"});
    CHECK(R->nvars() == 2);
    CHECK(R->var_index("y") == 1);
    CHECK(!R->var_index("z"));
    CHECK(R->str() == "Q[x,y]");
}

TEST_CASE("polynomial arithmetic examples") {
    auto R = tst::ring_dp({"x", "y"});
    CHECK(P(R, "y") + P(R, "-y + x") == P(R, "x"));
    CHECK(P(R, "(x+1)*(x-1)") == P(R, "x^2 - 1"));
    CHECK((P(R, "x + y") * Polynomial::zero(R)).is_zero());
    CHECK((P(R, "x^2 + y") - P(R, "x^2 + y")).is_zero());
    CHECK(P(R, "x^2 + 2*x*y + y^2") == P(R, "x + y").pow(2));
    CHECK(P(R, "y - x^3 + x^2").total_degree() == 3);
    CHECK(Polynomial::zero(R).total_degree() == -1);

    auto S = tst::ring_dp({"x", "y", "z", "w"});
    CHECK(P(S, "x*z - y*w").is_homogeneous());
    CHECK(!P(S, "y - x^3 + x^2").is_homogeneous());
    CHECK(Polynomial::zero(S).is_homogeneous());

    // lead term of the cubic under degrevlex is -x^3
    Polynomial f = P(R, "y - x^3 + x^2");
    CHECK(f.lead_monomial() == Monomial{3, 0});
    CHECK(f.lead_coeff() == Rational(-1));
    CHECK(f.evaluate({Rational(1), Rational(0)}) == Rational(0));
    CHECK(f.evaluate({Rational(2), Rational(1)}) == Rational(-3));
    CHECK_THROWS_AS(Polynomial::zero(R).lead_term(), InternalError);
    CHECK_THROWS_AS(f.evaluate({Rational(1)}), StructuralError);
}

TEST_CASE("polynomial terms stay canonical and arithmetic satisfies ring axioms") {
    std::mt19937 rng(424242);
    auto R = tst::ring_dp({"x", "y", "z"});
    for (int it = 0; it < 25; ++it) {
        Polynomial f = tst::random_poly(rng, R, 5, 3);
        Polynomial g = tst::random_poly(rng, R, 5, 3);
        Polynomial h = tst::random_poly(rng, R, 5, 3);
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f - f).is_zero());
        CHECK(f * P(R, "1") == f);
        // canonical storage: strictly descending, no zero coefficients
        const Polynomial fgh = f * g + h;
        const auto& ts = fgh.terms();
        for (std::size_t i = 0; i < ts.size(); ++i) {
            CHECK(!ts[i].coeff.is_zero());
            if (i + 1 < ts.size())
                CHECK(cmp_monomials(R->order(), ts[i].mono, ts[i + 1].mono) == Cmp::Greater);
        }
    }
}

TEST_CASE("polynomials from different rings do not mix") {
    auto R = tst::ring_dp({"x", "y"});
    auto S = tst::ring_dp({"x", "y", "z"});
    CHECK_THROWS_AS(P(R, "x") + P(S, "x"), StructuralError);
}

TEST_CASE("ring map examples") {
    auto R = tst::ring_dp({"x", "y"});
    // translate x -> x + 1: carries the cubic's (1,0) behavior to the origin
    RingMap shift(R, R, {P(R, "x + 1"), P(R, "y")});
    CHECK(shift.apply(P(R, "y - x^3 + x^2")) == P(R, "y - x^3 - 2*x^2 - x"));
    CHECK(RingMap::identity(R).apply(P(R, "y - x^3 + x^2")) == P(R, "y - x^3 + x^2"));

    auto XZW = tst::ring_dp({"x", "z", "w"});
    auto ZW = tst::ring_dp({"z", "w"});
    RingMap dehom(XZW, ZW, {P(ZW, "1"), P(ZW, "z"), P(ZW, "w")});
    CHECK(dehom.apply(P(XZW, "x*z - x*w")) == P(ZW, "z - w"));

    CHECK_THROWS_AS(RingMap(R, R, {P(R, "x")}), StructuralError);  // one image missing
}

TEST_CASE("ring maps are homomorphisms on random inputs") {
    std::mt19937 rng(777);
    auto R = tst::ring_dp({"x", "y"});
    for (int it = 0; it < 20; ++it) {
        RingMap m(R, R,
                  {tst::random_poly(rng, R, 3, 2), tst::random_poly(rng, R, 3, 2)});
        Polynomial f = tst::random_poly(rng, R, 4, 3);
        Polynomial g = tst::random_poly(rng, R, 4, 3);
        CHECK(m.apply(f * g) == m.apply(f) * m.apply(g));
        CHECK(m.apply(f + g) == m.apply(f) + m.apply(g));
    }
}
