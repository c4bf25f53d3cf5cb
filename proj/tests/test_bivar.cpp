#include <doctest.h>

#include <algorithm>
#include <polydec/bivar.hpp>
#include <polydec/rng.hpp>

using namespace polydec;

static Poly random_poly(const Field& f, int deg, Rng& rng) {
    std::vector<Fel> c(deg + 1);
    for (auto& x : c) x = static_cast<Fel>(rng.below(f.size()));
    return Poly(f, std::move(c));
}

TEST_CASE("bivariate hasse derivatives") {
    Field f5 = Field::prime(5);
    BiPoly xy(f5);
    xy.set(1, 1, 1);
    BiPoly d = xy.hasse(1, 1);
    CHECK(d.get(0, 0) == 1);
    CHECK(d.terms().size() == 1);

    BiPoly x2y(f5);
    x2y.set(2, 1, 1);
    CHECK(x2y.hasse(0, 0).terms() == x2y.terms());
}

TEST_CASE("multiplicity of (Y - X)^2 on the diagonal") {
    Field f5 = Field::prime(5);
    BiPoly ymx = BiPoly::y_minus(Poly::x(f5));
    BiPoly q = ymx * ymx;
    for (Fel a = 0; a < 5; ++a) CHECK(q.multiplicity_at(a, a, 10) == 2);
    CHECK(q.multiplicity_at(0, 1, 10) == 0);
}

TEST_CASE("substitution") {
    Field f7 = Field::prime(7);
    Poly sq(f7, {0, 0, 1});

    SUBCASE("bivariate: Y - X^2 at f = X^2 vanishes") {
        BiPoly q = BiPoly::y_minus(sq);
        CHECK(q.substitute(sq).is_zero());
    }
    SUBCASE("linear operator picks a hasse derivative") {
        LinYPoly q(Poly::zero(f7), {Poly::zero(f7), Poly::constant(f7, 1)});
        CHECK(q.substitute(sq) == Poly(f7, {0, 2}));
    }
    SUBCASE("planted operator annihilates its solution") {
        LinYPoly q(Poly(f7, {0, 0, 4}),  // -3 X^2
                   {Poly::constant(f7, 1), Poly::x(f7)});
        CHECK(q.substitute(sq).is_zero());
    }
}

TEST_CASE("derivative operator tau") {
    Field f7 = Field::prime(7);
    Rng rng(12);
    Poly b0 = random_poly(f7, 4, rng);
    LinYPoly q(Poly::zero(f7), {b0});

    SUBCASE("order zero is the identity") { CHECK(q.tau(0) == q); }

    SUBCASE("first derivative of B_0 Y_0") {
        LinYPoly d = q.tau(1);
        CHECK(d.a().is_zero());
        CHECK(d.b(0) == b0.hasse(1));
        CHECK(d.b(1) == b0);
    }

    SUBCASE("linearity") {
        Field f13 = Field::prime(13);
        Rng r2(77);
        for (int trial = 0; trial < 20; ++trial) {
            LinYPoly q1(random_poly(f13, 4, r2), {random_poly(f13, 3, r2), random_poly(f13, 3, r2)});
            LinYPoly q2(random_poly(f13, 4, r2), {random_poly(f13, 3, r2), random_poly(f13, 3, r2)});
            LinYPoly sum(q1.a() + q2.a(), {q1.b(0) + q2.b(0), q1.b(1) + q2.b(1)});
            for (uint32_t j = 0; j <= 2; ++j) {
                LinYPoly lhs = sum.tau(j);
                LinYPoly t1 = q1.tau(j), t2 = q2.tau(j);
                CHECK(lhs.a() == t1.a() + t2.a());
                for (size_t l = 0; l < lhs.num_y(); ++l) CHECK(lhs.b(l) == t1.b(l) + t2.b(l));
            }
        }
    }

    SUBCASE("chain identity against substitution") {
        Field f13 = Field::prime(13);
        Rng r2(101);
        for (int trial = 0; trial < 100; ++trial) {
            size_t r = 1 + r2.below(3);
            std::vector<Poly> bs;
            for (size_t l = 0; l < r; ++l) bs.push_back(random_poly(f13, 3, r2));
            LinYPoly q(random_poly(f13, 5, r2), std::move(bs));
            Poly f = random_poly(f13, 4, r2);
            uint32_t j = static_cast<uint32_t>(r2.below(4));
            CHECK(q.tau(j).substitute(f) == q.substitute(f).hasse(j));
        }
    }
}

TEST_CASE("weighted degree of the linear operator form") {
    Field f7 = Field::prime(7);
    LinYPoly q(Poly(f7, {0, 0, 0, 1}), {Poly(f7, {1}), Poly(f7, {0, 1})});
    CHECK(q.wdeg(3) == 4);  // max(3, 0 + 3, 1 + 3)
}

TEST_CASE("roots of bivariate polynomials") {
    Field f5 = Field::prime(5);
    Poly x = Poly::x(f5);

    SUBCASE("factored form") {
        BiPoly q = BiPoly::y_minus(x) * BiPoly::y_minus(x.scale(2));
        auto roots = rr_roots(q, 2);
        REQUIRE(roots.size() == 2);
        CHECK(std::find(roots.begin(), roots.end(), x) != roots.end());
        CHECK(std::find(roots.begin(), roots.end(), x.scale(2)) != roots.end());
    }

    SUBCASE("no polynomial square root of X") {
        BiPoly q(f5);
        q.set(0, 2, 1);
        q.set(1, 0, f5.neg(1));  // Y^2 - X
        CHECK(rr_roots(q, 2).empty());
    }

    SUBCASE("zero polynomial is rejected") {
        CHECK_THROWS_AS(rr_roots(BiPoly(f5), 2), ZeroPolynomialError);
    }

    SUBCASE("random planted factors, cross-checked exhaustively") {
        Field f7 = Field::prime(7);
        Rng rng(55);
        for (int trial = 0; trial < 15; ++trial) {
            uint32_t k = 2 + static_cast<uint32_t>(rng.below(2));  // 2 or 3
            std::vector<Poly> planted;
            for (int i = 0; i < 2; ++i) {
                Poly f = random_poly(f7, static_cast<int>(k) - 1, rng);
                if (std::find(planted.begin(), planted.end(), f) == planted.end())
                    planted.push_back(f);
            }
            BiPoly q(f7);
            q.set(1, 0, 1);
            BiPoly y2(f7);
            y2.set(0, 2, 1);
            q = q + y2;  // Y^2 + X, an irreducible tail
            for (const auto& f : planted) q = q * BiPoly::y_minus(f);

            auto roots = rr_roots(q, k);
            CHECK(roots.size() <= static_cast<size_t>(q.deg_y()));

            // exhaustive reference over all degree-<k polynomials
            uint64_t total = 1;
            for (uint32_t i = 0; i < k; ++i) total *= 7;
            std::vector<Poly> expected;
            for (uint64_t idx = 0; idx < total; ++idx) {
                std::vector<Fel> c(k);
                uint64_t v = idx;
                for (uint32_t i = 0; i < k; ++i) {
                    c[i] = static_cast<Fel>(v % 7);
                    v /= 7;
                }
                Poly f(f7, std::move(c));
                if (q.substitute(f).is_zero()) expected.push_back(f);
            }
            std::sort(expected.begin(), expected.end(), poly_lex_less);
            CHECK(roots == expected);
        }
    }
}
