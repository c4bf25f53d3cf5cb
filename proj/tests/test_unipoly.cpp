#include <doctest.h>

#include <polydec/rng.hpp>
#include <polydec/unipoly.hpp>

using namespace polydec;

static Poly random_poly(const Field& f, int deg, Rng& rng) {
    std::vector<Fel> c(deg + 1);
    for (auto& x : c) x = static_cast<Fel>(rng.below(f.size()));
    return Poly(f, std::move(c));
}

TEST_CASE("arithmetic basics") {
    Field f5 = Field::prime(5);
    Poly x = Poly::x(f5);
    Poly one = Poly::constant(f5, 1);

    SUBCASE("divrem factors X^2 - 1 by X - 1") {
        Poly num = x * x - one;
        Poly den = x - one;
        auto [q, r] = num.divrem(den);
        CHECK(q == x + one);
        CHECK(r.is_zero());
    }
    SUBCASE("product of linear factors") {
        Poly prod = (x + one) * (x + Poly::constant(f5, 2));
        CHECK(prod == Poly(f5, {2, 3, 1}));
    }
    SUBCASE("taylor shift is binomial expansion") {
        Poly sq = x * x;
        CHECK(sq.taylor_shift(1) == Poly(f5, {1, 2, 1}));
    }
    SUBCASE("gcd is monic") {
        Poly a = (x - one) * (x - Poly::constant(f5, 2)).scale(3);
        Poly b = (x - one) * (x - Poly::constant(f5, 3));
        CHECK(a.gcd(b) == x - one);
    }
    SUBCASE("division by zero throws") {
        CHECK_THROWS_AS(x.divrem(Poly(f5)), DivisionByZeroError);
    }
}

TEST_CASE("evaluation") {
    Field f7 = Field::prime(7);
    Poly f = Poly(f7, {1, 1});  // X + 1
    std::vector<Fel> pts{0, 1, 2, 3, 4, 5, 6};
    CHECK(f.eval_many(pts) == std::vector<Fel>{1, 2, 3, 4, 5, 6, 0});
    CHECK(Poly(f7).eval_many(pts) == std::vector<Fel>(7, 0));

    Field f5 = Field::prime(5);
    CHECK(Poly(f5, {0, 0, 0, 1}).eval(2) == 3);  // 8 mod 5
}

TEST_CASE("interpolation") {
    Field f5 = Field::prime(5);
    CHECK(Poly::interpolate(f5, {0, 1, 2}, {1, 2, 3}) == Poly(f5, {1, 1}));
    CHECK(Poly::interpolate(f5, {3}, {4}) == Poly::constant(f5, 4));
    CHECK_THROWS_AS(Poly::interpolate(f5, {1, 1}, {0, 0}), DuplicatePointError);

    Field f7 = Field::prime(7);
    Poly f(f7, {1, 0, 1});  // X^2 + 1
    std::vector<Fel> pts{0, 2, 4, 6};
    CHECK(Poly::interpolate(f7, pts, f.eval_many(pts)) == f);

    // interpolate o eval is the identity on low-degree polynomials
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        Poly g = random_poly(f7, 3, rng);
        std::vector<Fel> xs{1, 3, 5, 6};
        CHECK(Poly::interpolate(f7, xs, g.eval_many(xs)) == g);
    }
}

TEST_CASE("hasse derivatives") {
    Field f5 = Field::prime(5);
    CHECK(Poly(f5, {0, 0, 0, 1}).hasse(2) == Poly(f5, {0, 3}));  // C(3,2) = 3

    // X^p over F_p: first derivative vanishes, p-th is 1
    Poly xp = Poly::monomial(f5, 5, 1);
    CHECK(xp.hasse(1).is_zero());
    CHECK(xp.hasse(5) == Poly::constant(f5, 1));

    Field f7 = Field::prime(7);
    Rng rng(5);
    SUBCASE("product rule") {
        for (int trial = 0; trial < 30; ++trial) {
            Poly f = random_poly(f7, 5, rng), g = random_poly(f7, 4, rng);
            for (uint32_t i = 0; i <= 4; ++i) {
                Poly lhs = (f * g).hasse(i);
                Poly rhs(f7);
                for (uint32_t k = 0; k <= i; ++k) rhs = rhs + f.hasse(k) * g.hasse(i - k);
                CHECK(lhs == rhs);
            }
        }
    }
    SUBCASE("iterative application") {
        for (int trial = 0; trial < 30; ++trial) {
            Poly f = random_poly(f7, 6, rng);
            for (uint32_t i = 0; i <= 3; ++i)
                for (uint32_t j = 0; j <= 3; ++j) {
                    Poly lhs = f.hasse(i).hasse(j);
                    Poly rhs = f.hasse(i + j).scale(f7.scalar(binom_mod_p(i + j, i, 7)));
                    CHECK(lhs == rhs);
                }
        }
    }
}

TEST_CASE("hasse blocks") {
    Field f7 = Field::prime(7);
    Poly sq = Poly(f7, {0, 0, 1});
    for (Fel a = 0; a < 7; ++a) {
        auto blk = sq.hasse_block(a, 2);
        CHECK(blk[0] == f7.mul(a, a));
        CHECK(blk[1] == f7.mul(2, a));
    }
    auto zero = Poly(f7).hasse_block(3, 3);
    CHECK(zero == std::vector<Fel>{0, 0, 0});

    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        Poly f = random_poly(f7, 5, rng);
        Fel a = static_cast<Fel>(rng.below(7));
        auto blk = f.hasse_block(a, 4);
        for (uint32_t i = 0; i < 4; ++i) CHECK(blk[i] == f.hasse(i).eval(a));
    }
}

TEST_CASE("multiplicity of roots") {
    Field f7 = Field::prime(7);
    Poly x = Poly::x(f7);
    Poly lin = x - Poly::constant(f7, 1);
    CHECK((lin * lin * lin).multiplicity_at(1) == 3);
    CHECK(x.multiplicity_at(1) == 0);
    CHECK(Poly(f7).multiplicity_at(1) == Poly::kInfiniteMultiplicity);

    // total multiplicity across the field is bounded by the degree
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        Poly f = random_poly(f7, 5, rng);
        if (f.is_zero()) continue;
        int total = 0;
        for (Fel a = 0; a < 7; ++a) total += f.multiplicity_at(a);
        CHECK(total <= f.deg());
    }
}

TEST_CASE("karatsuba path agrees with direct evaluation") {
    Field f = Field::prime(101);
    Rng rng(31);
    Poly a = random_poly(f, 200, rng), b = random_poly(f, 173, rng);
    Poly prod = a * b;
    CHECK(prod.deg() == a.deg() + b.deg());
    for (int trial = 0; trial < 20; ++trial) {
        Fel x = static_cast<Fel>(rng.below(101));
        CHECK(prod.eval(x) == f.mul(a.eval(x), b.eval(x)));
    }
}

TEST_CASE("extension-field polynomials") {
    Field f9 = Field::extension(3, 2, std::nullopt, 9);
    Rng rng(3);
    Poly a = random_poly(f9, 6, rng), b = random_poly(f9, 5, rng);
    auto [q, r] = a.divrem(b);
    CHECK(q * b + r == a);
    CHECK(r.deg() < b.deg());
    Fel pt = static_cast<Fel>(rng.below(9));
    CHECK((a * b).eval(pt) == f9.mul(a.eval(pt), b.eval(pt)));
}

TEST_CASE("text round trip") {
    Field f4 = Field::extension(2, 2, std::vector<uint32_t>{1, 1, 1});
    Poly f(f4, {3, 0, 2});
    CHECK(f.to_text() == "1,1 0,0 0,1");
    CHECK(Poly::from_text(f4, f.to_text()) == f);
    CHECK(Poly(f4).to_text() == "0");
    CHECK(Poly::from_text(f4, "0").is_zero());
}
