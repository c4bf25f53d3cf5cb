#include <doctest.h>

#include <polydec/analysis.hpp>
#include <polydec/channel.hpp>
#include <polydec/rng.hpp>
#include <polydec/rs.hpp>

using namespace polydec;

static std::vector<Fel> first_points(const Field& f, size_t n) {
    std::vector<Fel> pts(n);
    for (size_t i = 0; i < n; ++i) pts[i] = static_cast<Fel>(i);
    return pts;
}

static Poly random_message(const RSSpec& spec, Rng& rng) {
    std::vector<Fel> c(spec.k);
    for (auto& x : c) x = static_cast<Fel>(rng.below(spec.field->size()));
    return Poly(*spec.field, std::move(c));
}

static std::vector<Fel> random_word(const RSSpec& spec, Rng& rng) {
    std::vector<Fel> w(spec.n());
    for (auto& x : w) x = static_cast<Fel>(rng.below(spec.field->size()));
    return w;
}

static bool same_messages(const DecodeOutcome& a, const DecodeOutcome& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (size_t i = 0; i < a.entries.size(); ++i)
        if (!(a.entries[i].message == b.entries[i].message) ||
            a.entries[i].agreement != b.entries[i].agreement)
            return false;
    return true;
}

TEST_CASE("encoding") {
    Field f7 = Field::prime(7);
    RSSpec spec(f7, first_points(f7, 7), 2);
    CHECK(rs_encode(spec, Poly(f7, {1, 1})) == std::vector<Fel>{1, 2, 3, 4, 5, 6, 0});
    CHECK(rs_encode(spec, Poly(f7)) == std::vector<Fel>(7, 0));
    CHECK_THROWS_AS(rs_encode(spec, Poly(f7, {0, 0, 1})), DegreeTooLargeError);

    Rng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        Poly f = random_message(spec, rng), g = random_message(spec, rng);
        auto cf = rs_encode(spec, f), cg = rs_encode(spec, g), cs = rs_encode(spec, f + g);
        for (size_t i = 0; i < 7; ++i) CHECK(cs[i] == f7.add(cf[i], cg[i]));
    }
}

TEST_CASE("unique decoding") {
    Field f7 = Field::prime(7);
    RSSpec spec(f7, first_points(f7, 7), 3);

    SUBCASE("planted message with two errors") {
        Poly f(f7, {0, 0, 1});
        Rng rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            BlockWord word;
            for (Fel sym : rs_encode(spec, f)) word.push_back({sym});
            corrupt_count(f7, word, 2, rng.next());
            std::vector<Fel> w;
            for (auto& b : word) w.push_back(b[0]);
            DecodeOutcome out = rs_unique_decode(spec, w);
            REQUIRE(out.entries.size() == 1);
            CHECK(out.entries[0].message == f);
        }
    }

    SUBCASE("zero errors decodes with full agreement") {
        Poly f(f7, {3, 1, 5});
        DecodeOutcome out = rs_unique_decode(spec, rs_encode(spec, f));
        REQUIRE(out.entries.size() == 1);
        CHECK(out.entries[0].agreement == 7);
    }

    SUBCASE("agrees with the exhaustive nearest-codeword scan") {
        BruteForceRS oracle(spec);
        Rng rng(11);
        int saw_empty = 0;
        for (int trial = 0; trial < 60; ++trial) {
            auto w = random_word(spec, rng);
            DecodeOutcome mine = rs_unique_decode(spec, w);
            DecodeOutcome ref = oracle.list(w, 5);  // ceil((7+3)/2)
            CHECK(same_messages(mine, ref));
            saw_empty += ref.entries.empty();
        }
        CHECK(saw_empty > 0);  // far words do occur and return the empty outcome
    }
}

TEST_CASE("list decoding beyond the unique radius") {
    Field f17 = Field::prime(17);

    SUBCASE("two heavy constants") {
        RSSpec spec(f17, first_points(f17, 16), 1);
        std::vector<Fel> w(16);
        for (int i = 0; i < 7; ++i) w[i] = 2;
        for (int i = 7; i < 14; ++i) w[i] = 5;
        w[14] = 9;
        w[15] = 11;
        DecodeOutcome out = rs_sudan_decode(spec, w);  // t = floor(sqrt(32)) + 1 = 6
        CHECK(out.contains(Poly::constant(f17, 2)));
        CHECK(out.contains(Poly::constant(f17, 5)));
        CHECK(same_messages(out, brute_force_list(spec, w, 6)));
    }

    SUBCASE("codeword input appears with full agreement") {
        RSSpec spec(f17, first_points(f17, 16), 2);
        Poly f(f17, {4, 9});
        DecodeOutcome out = rs_sudan_decode(spec, rs_encode(spec, f));
        REQUIRE(out.contains(f));
        CHECK(out.entries[0].agreement == 16);
    }

    SUBCASE("matches the exhaustive oracle on random words") {
        RSSpec spec(f17, first_points(f17, 16), 2);
        BruteForceRS oracle(spec);
        Rng rng(13);
        int t = static_cast<int>(isqrt_u64(2ull * 2 * 16)) + 1;
        for (int trial = 0; trial < 20; ++trial) {
            auto w = random_word(spec, rng);
            CHECK(same_messages(rs_sudan_decode(spec, w), oracle.list(w, t)));
        }
    }
}

TEST_CASE("list decoding with interpolation multiplicities") {
    Field f17 = Field::prime(17);
    RSSpec spec(f17, first_points(f17, 16), 4);
    int t = 9;  // floor(sqrt(64)) + 1

    SUBCASE("two planted codewords at agreement 9 sharing two positions") {
        Poly f1(f17, {1, 2, 3, 4});
        Poly f2 = f1 + Poly(f17, {0, 0, 0, 0});  // placeholder, replaced below
        // f2 - f1 = X(X-1) so the two messages agree exactly at points 0, 1
        f2 = f1 + Poly(f17, {0, 16, 1});
        auto c1 = rs_encode(spec, f1), c2 = rs_encode(spec, f2);
        CHECK(c1[0] == c2[0]);
        CHECK(c1[1] == c2[1]);
        std::vector<Fel> w(16);
        for (int i = 0; i < 9; ++i) w[i] = c1[i];
        for (int i = 9; i < 16; ++i) w[i] = c2[i];
        CHECK(rs_agreement(spec, w, f1) == 9);
        CHECK(rs_agreement(spec, w, f2) == 9);
        DecodeOutcome out = rs_gs_decode(spec, w);
        CHECK(out.contains(f1));
        CHECK(out.contains(f2));
    }

    SUBCASE("multiplicity override degenerates gracefully on codewords") {
        Poly f(f17, {5, 0, 2, 1});
        DecodeOutcome out = rs_gs_decode(spec, rs_encode(spec, f), 1);
        CHECK(out.contains(f));
    }

    SUBCASE("interpolant vanishes to the requested order at every point") {
        Rng rng(3);
        auto w = random_word(spec, rng);
        uint32_t r = gs_pick_r(spec, t, true);
        uint64_t d2 = 64ull * r * (r + 1);
        uint64_t d = isqrt_u64(d2);
        if (d * d < d2) ++d;
        BiPoly q = gs_interpolate(spec, w, r, static_cast<int>(d));
        CHECK(q.wdeg(4) <= static_cast<int>(d));
        for (size_t i = 0; i < spec.n(); ++i)
            CHECK(q.multiplicity_at(spec.points[i], w[i], r + 1) >= static_cast<int>(r));

        // partial-agreement message: the substituted univariate vanishes to
        // order >= r at every agreement point
        Poly f(f17, {2, 3, 0, 1});
        auto cw = rs_encode(spec, f);
        std::vector<Fel> w2 = cw;
        BlockWord blocks;
        for (Fel sym : w2) blocks.push_back({sym});
        corrupt_count(f17, blocks, 12, 55);
        for (size_t i = 0; i < 16; ++i) w2[i] = blocks[i][0];
        BiPoly q2 = gs_interpolate(spec, w2, r, static_cast<int>(d));
        Poly pf = q2.substitute(f);
        for (size_t i = 0; i < spec.n(); ++i) {
            if (cw[i] != w2[i]) continue;
            if (pf.is_zero()) break;
            CHECK(pf.multiplicity_at(spec.points[i]) >= static_cast<int>(r));
        }
    }

    SUBCASE("matches the exhaustive oracle on random words") {
        BruteForceRS oracle(spec);
        Rng rng(29);
        for (int trial = 0; trial < 3; ++trial) {
            auto w = random_word(spec, rng);
            CHECK(same_messages(rs_gs_decode(spec, w), oracle.list(w, t)));
        }
    }

    SUBCASE("list sizes respect the distance-based bound") {
        // relative distance (n-k+1)/n, operating radius 1 - t/n
        Rational delta(13, 16), alpha(16 - t, 16);
        long long bound = johnson_list_bound(delta, alpha).floor();
        Rng rng(31);
        for (int trial = 0; trial < 10; ++trial) {
            auto w = random_word(spec, rng);
            CHECK(static_cast<long long>(rs_gs_decode(spec, w).entries.size()) <= bound);
        }
    }

    SUBCASE("at most one entry within the unique-decoding ball") {
        Rng rng(37);
        int e = (16 - 4 + 1) / 2 - 1;  // strictly below half the distance
        for (int trial = 0; trial < 10; ++trial) {
            Poly f = random_message(spec, rng);
            BlockWord word;
            for (Fel sym : rs_encode(spec, f)) word.push_back({sym});
            corrupt_count(f17, word, e, rng.next());
            std::vector<Fel> w;
            for (auto& b : word) w.push_back(b[0]);
            DecodeOutcome out = rs_gs_decode(spec, w);
            int close = 0;
            for (const auto& entry : out.entries)
                if (entry.agreement >= 16 - e) ++close;
            CHECK(close <= 1);
        }
    }
}

TEST_CASE("decoders are deterministic") {
    Field f17 = Field::prime(17);
    RSSpec spec(f17, first_points(f17, 16), 2);
    Rng rng(41);
    auto w = random_word(spec, rng);
    DecodeOutcome a = rs_sudan_decode(spec, w), b = rs_sudan_decode(spec, w);
    REQUIRE(a.entries.size() == b.entries.size());
    for (size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].message == b.entries[i].message);
        CHECK(a.entries[i].codeword == b.entries[i].codeword);
    }
}
