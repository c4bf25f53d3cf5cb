#include <doctest.h>

#include <cmath>
#include <polydec/rm.hpp>
#include <polydec/rng.hpp>

using namespace polydec;

TEST_CASE("encoding and point order") {
    Field f5 = Field::prime(5);
    RMSpec spec(f5, 2, 3);
    CHECK(spec.block_length() == 25);

    MPoly x1(f5, 2);
    x1.set({1, 0}, 1);
    auto table = rm_encode(spec, x1);
    for (uint64_t idx = 0; idx < 25; ++idx) {
        auto pt = rm_point_at(spec, idx);
        CHECK(table[idx] == pt[0]);
        CHECK(rm_index_of(spec, pt) == idx);
    }

    MPoly c(f5, 2);
    c.set({0, 0}, 3);
    auto ct = rm_encode(spec, c);
    CHECK(std::all_of(ct.begin(), ct.end(), [](Fel v) { return v == 3; }));
}

TEST_CASE("zero fraction of a random nonzero polynomial is near the degree bound") {
    Field f11 = Field::prime(11);
    RMSpec spec(f11, 2, 4);
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        MPoly f = MPoly::random(f11, 2, 4, rng);
        if (f.is_zero()) continue;
        auto table = rm_encode(spec, f);
        int zeros = 0;
        for (Fel v : table) zeros += v == 0;
        // at most d q^{m-1} roots with d = 3
        CHECK(zeros <= 3 * 11);
    }
}

TEST_CASE("line restriction") {
    Field f7 = Field::prime(7);
    MPoly xy(f7, 2);
    xy.set({1, 1}, 1);

    SUBCASE("diagonal restriction of X1 X2 is T^2") {
        Poly r = xy.restrict_line({0, 0}, {1, 1});
        CHECK(r == Poly(f7, {0, 0, 1}));
    }

    SUBCASE("restriction degree never exceeds the total degree") {
        Rng rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            MPoly f = MPoly::random(f7, 2, 4, rng);
            std::vector<Fel> a{static_cast<Fel>(rng.below(7)), static_cast<Fel>(rng.below(7))};
            std::vector<Fel> u{static_cast<Fel>(rng.below(7)), static_cast<Fel>(rng.below(7))};
            if (u[0] == 0 && u[1] == 0) continue;
            CHECK(f.restrict_line(a, u).deg() <= std::max(f.total_deg(), -1));
        }
    }

    SUBCASE("zero direction is rejected") {
        CHECK_THROWS_AS(xy.restrict_line({1, 1}, {0, 0}), ZeroDirectionError);
    }

    SUBCASE("derivatives along the line match directional derivatives") {
        Rng rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            MPoly f = MPoly::random(f7, 2, 4, rng);
            std::vector<Fel> a{static_cast<Fel>(rng.below(7)), static_cast<Fel>(rng.below(7))};
            std::vector<Fel> u{static_cast<Fel>(rng.below(7)), static_cast<Fel>(rng.below(7))};
            if (u[0] == 0 && u[1] == 0) continue;
            Poly restr = f.restrict_line(a, u);
            for (Fel t = 0; t < 7; ++t) {
                std::vector<Fel> pt{f7.add(a[0], f7.mul(t, u[0])), f7.add(a[1], f7.mul(t, u[1]))};
                // first-order chain rule
                Fel lhs = restr.hasse(1).eval(t);
                Fel rhs = 0;
                rhs = f7.add(rhs, f7.mul(f.hasse({1, 0}).eval(pt), u[0]));
                rhs = f7.add(rhs, f7.mul(f.hasse({0, 1}).eval(pt), u[1]));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("multiplicity budget over the whole domain") {
    Field f7 = Field::prime(7);
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        MPoly f = MPoly::random(f7, 2, 4, rng);
        if (f.is_zero()) continue;
        int d = f.total_deg();
        int total = 0;
        for (Fel x = 0; x < 7; ++x)
            for (Fel y = 0; y < 7; ++y) total += f.multiplicity_at({x, y}, 8);
        CHECK(total <= d * 7);
    }
}

TEST_CASE("planted oracles count queries and corrupt deterministically") {
    Field f5 = Field::prime(5);
    RMSpec spec(f5, 2, 2);
    Rng rng(3);
    MPoly f = MPoly::random(f5, 2, 2, rng);

    RMCorruption noise;
    noise.kind = RMCorruption::Kind::Count;
    noise.count = 4;
    WordOracle a = make_planted_oracle(spec, f, noise, 99);
    WordOracle b = make_planted_oracle(spec, f, noise, 99);
    int diffs = 0;
    for (uint64_t idx = 0; idx < 25; ++idx) {
        auto pt = rm_point_at(spec, idx);
        Fel va = a.query(pt);
        CHECK(va == b.query(pt));
        if (va != f.eval(pt)) ++diffs;
    }
    CHECK(diffs == 4);
    CHECK(a.queries() == 25);
    a.reset_queries();
    CHECK(a.queries() == 0);
}

TEST_CASE("local correction") {
    Field f16 = Field::extension(2, 4, std::nullopt, 5);
    RMSpec spec(f16, 2, 4);
    Rng rng(17);
    MPoly f = MPoly::random(f16, 2, 4, rng);

    SUBCASE("uncorrupted words always correct") {
        WordOracle oracle = make_planted_oracle(spec, f, {}, 1);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Fel> a{static_cast<Fel>(rng.below(16)), static_cast<Fel>(rng.below(16))};
            oracle.reset_queries();
            auto got = rm_local_correct(spec, oracle, a, rng.next());
            CHECK(oracle.queries() == 16);
            REQUIRE(got.has_value());
            CHECK(*got == f.eval(a));
        }
    }

    SUBCASE("eight corrupted points still correct most of the time") {
        RMCorruption noise;
        noise.kind = RMCorruption::Kind::Count;
        noise.count = 8;
        LocalStats stats = estimate_local_success(spec, LocalDecoderKind::Correct, f, noise, 300, 21);
        CHECK(stats.success_rate >= 0.70);
        CHECK(stats.max_queries == 16);
        CHECK(stats.mean_queries == 16.0);
    }

    SUBCASE("corruption concentrated on one line through the target") {
        // adversarial placement: all errors on a single line through a
        std::vector<Fel> a{3, 7};
        RMCorruption noise;
        noise.kind = RMCorruption::Kind::Explicit;
        for (uint64_t t = 1; t < 9; ++t) {
            std::vector<Fel> pt{f16.add(a[0], f16.mul(static_cast<Fel>(t), 1)),
                                f16.add(a[1], f16.mul(static_cast<Fel>(t), 5))};
            uint64_t idx = rm_index_of(spec, pt);
            noise.overrides.push_back({idx, f16.add(f.eval(pt), 1)});
        }
        WordOracle oracle = make_planted_oracle(spec, f, noise, 2);
        int good = 0;
        for (int trial = 0; trial < 300; ++trial) {
            auto got = rm_local_correct(spec, oracle, a, split_seed(23, trial));
            good += (got && *got == f.eval(a)) ? 1 : 0;
        }
        CHECK(good >= 210);  // the bad direction is hit with probability ~1/q
    }
}

TEST_CASE("local list decoding with value advice") {
    Field f31 = Field::prime(31);
    RMSpec spec(f31, 2, 3);
    Rng rng(29);
    MPoly f = MPoly::random(f31, 2, 3, rng);

    SUBCASE("advice list has one record per field value") {
        WordOracle oracle = make_planted_oracle(spec, f, {}, 4);
        auto advs = rm_local_list(spec, oracle, 4.0, 0.5, 31);
        CHECK(advs.size() == 31);
        bool has_truth = false;
        for (const auto& adv : advs)
            if (adv.guess[0] == f.eval(adv.anchor)) has_truth = true;
        CHECK(has_truth);
    }

    SUBCASE("uncorrupted oracle with true advice decodes almost every point") {
        WordOracle oracle = make_planted_oracle(spec, f, {}, 4);
        Rng r2(37);
        std::vector<Fel> b{static_cast<Fel>(r2.below(31)), static_cast<Fel>(r2.below(31))};
        LocalAdvice adv;
        adv.anchor = b;
        adv.guess = {f.eval(b)};
        adv.sigma = 4.0;
        int good = 0, total = 0;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Fel> a{static_cast<Fel>(r2.below(31)), static_cast<Fel>(r2.below(31))};
            if (a == b) continue;
            oracle.reset_queries();
            auto got = run_local_algorithm(spec, oracle, adv, a);
            CHECK(oracle.queries() == 31);
            ++total;
            good += (got && *got == f.eval(a)) ? 1 : 0;
        }
        CHECK(good >= total * 95 / 100);
    }

    SUBCASE("wrong advice rarely produces the planted value") {
        WordOracle oracle = make_planted_oracle(spec, f, {}, 4);
        Rng r2(41);
        std::vector<Fel> b{static_cast<Fel>(r2.below(31)), static_cast<Fel>(r2.below(31))};
        LocalAdvice adv;
        adv.anchor = b;
        adv.guess = {f31.add(f.eval(b), 1)};
        adv.sigma = 4.0;
        int collide = 0, total = 0;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Fel> a{static_cast<Fel>(r2.below(31)), static_cast<Fel>(r2.below(31))};
            if (a == b) continue;
            ++total;
            auto got = run_local_algorithm(spec, oracle, adv, a);
            collide += (got && *got == f.eval(a)) ? 1 : 0;
        }
        CHECK(collide <= total * 3 / 10);
    }

    SUBCASE("anchor point itself signals no output") {
        WordOracle oracle = make_planted_oracle(spec, f, {}, 4);
        LocalAdvice adv;
        adv.anchor = {5, 6};
        adv.guess = {0};
        CHECK(!run_local_algorithm(spec, oracle, adv, {5, 6}).has_value());
    }

    SUBCASE("ten percent corruption still decodes most points") {
        RMCorruption noise;
        noise.kind = RMCorruption::Kind::Rate;
        noise.rate = 0.10;
        LocalHarnessParams params;
        params.sigma = 4.0;
        LocalStats stats =
            estimate_local_success(spec, LocalDecoderKind::ListBasic, f, noise, 3, 43, params);
        CHECK(stats.success_rate >= 0.85);
        CHECK(stats.max_queries == 31);
    }
}

TEST_CASE("local list decoding with derivative advice") {
    Field f11 = Field::prime(11);
    RMSpec spec(f11, 2, 3);
    Rng rng(47);
    MPoly f = MPoly::random(f11, 2, 3, rng);
    WordOracle oracle = make_planted_oracle(spec, f, {}, 6);

    uint32_t s = 2;
    double gamma = 1.0;
    uint32_t r = johnson_direction_count(spec, s, gamma);
    CHECK(r <= 11);

    oracle.reset_queries();
    auto advs = rm_local_list_johnson(spec, oracle, s, gamma, 0.5, 53);
    CHECK(oracle.queries() == static_cast<uint64_t>(r) * r * 11);

    // the true derivative block appears and the list respects (r/s)^s
    REQUIRE(!advs.empty());
    auto index_set = derivative_index_set(2, s);
    std::vector<Fel> truth;
    for (const auto& e : index_set) truth.push_back(f.hasse(e).eval(advs[0].anchor));
    bool hit = false;
    for (const auto& adv : advs) hit |= adv.guess == truth;
    CHECK(hit);
    double cap = std::pow(static_cast<double>(r) / s, static_cast<double>(s));
    CHECK(static_cast<double>(advs.size()) <= cap);

    // with a clean oracle the derivative advice decodes correctly
    for (const auto& adv : advs) {
        if (!(adv.guess == truth)) continue;
        int good = 0, total = 0;
        Rng r2(59);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Fel> a{static_cast<Fel>(r2.below(11)), static_cast<Fel>(r2.below(11))};
            if (a == adv.anchor) continue;
            ++total;
            auto got = run_local_algorithm(spec, oracle, adv, a);
            good += (got && *got == f.eval(a)) ? 1 : 0;
        }
        CHECK(good >= total * 9 / 10);
    }
}

TEST_CASE("composition with the local corrector") {
    Field f16 = Field::extension(2, 4, std::nullopt, 5);
    RMSpec spec(f16, 2, 4);
    Rng rng(61);
    MPoly f = MPoly::random(f16, 2, 4, rng);

    RMCorruption noise;
    noise.kind = RMCorruption::Kind::Count;
    noise.count = 8;
    LocalHarnessParams params;
    params.sigma = 2.0;
    LocalStats stats =
        estimate_local_success(spec, LocalDecoderKind::Composed, f, noise, 60, 67, params);
    CHECK(stats.success_rate >= 0.70);
    CHECK(stats.max_queries == 16 * 16);
    CHECK(stats.mean_queries == 256.0);
}
