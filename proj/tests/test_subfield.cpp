#include <doctest.h>

#include <map>
#include <polydec/analysis.hpp>
#include <polydec/channel.hpp>
#include <polydec/rng.hpp>
#include <set>

using namespace polydec;

static bool same_messages(const DecodeOutcome& a, const DecodeOutcome& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (size_t i = 0; i < a.entries.size(); ++i)
        if (!(a.entries[i].message == b.entries[i].message) ||
            a.entries[i].agreement != b.entries[i].agreement)
            return false;
    return true;
}

TEST_CASE("coefficientwise frobenius twist") {
    Field f2 = Field::prime(2);
    Field f4 = Field::extension_of(f2, 2, 1);
    // alpha X -> alpha^2 X
    Fel alpha = 2;
    Poly f(f4, {0, alpha});
    Poly tw = frob_twist(f, 1);
    CHECK(tw.coeff(1) == f4.mul(alpha, alpha));

    Field f5 = Field::prime(5);
    Field f25 = Field::extension_of(f5, 2, 3);
    Rng rng(4);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Fel> c(3);
        for (auto& x : c) x = static_cast<Fel>(rng.below(25));
        Poly g(f25, std::move(c));
        // sigma^s is the identity
        CHECK(frob_twist(g, 2) == g);
        // twisting commutes with evaluation at base-field points
        Fel a = f25.embed_base(f5, static_cast<Fel>(rng.below(5)));
        CHECK(f25.pow(g.eval(a), 5) == frob_twist(g, 1).eval(a));
    }
}

TEST_CASE("flattening is an F_q-linear bijection") {
    Field f5 = Field::prime(5);
    Field f25 = Field::extension_of(f5, 2, 3);
    ExtTower tw(f5, f25);
    std::set<std::vector<Fel>> images;
    for (Fel x = 0; x < 25; ++x) {
        auto flat = tw.flatten(x);
        CHECK(tw.unflatten(flat) == x);
        images.insert(flat);
    }
    CHECK(images.size() == 25);
    // linear over the base field
    for (Fel x = 0; x < 25; ++x)
        for (Fel c = 0; c < 5; ++c) {
            Fel cx = f25.mul(f25.embed_base(f5, c), x);
            auto fx = tw.flatten(x);
            for (auto& v : fx) v = f5.mul(v, c);
            CHECK(tw.flatten(cx) == fx);
        }
}

TEST_CASE("tower matrices represent multiplication and frobenius") {
    Field f4 = Field::extension(2, 2, std::vector<uint32_t>{1, 1, 1});
    Field f16 = Field::extension_of(f4, 2, 5);
    ExtTower tw(f4, f16);
    for (Fel c = 0; c < 16; ++c) {
        Matrix mc = tw.mult_matrix(c);
        Matrix fr = tw.frob_matrix(1);
        for (Fel x = 0; x < 16; ++x) {
            CHECK(mc.apply(tw.flatten(x)) == tw.flatten(f16.mul(c, x)));
            CHECK(fr.apply(tw.flatten(x)) == tw.flatten(f16.frobenius(x, 1)));
        }
    }
}

TEST_CASE("subfield-evaluation list decoding") {
    Field f5 = Field::prime(5);
    Field f25 = Field::extension_of(f5, 2, 3);
    SubfieldRSSpec spec(f5, f25, {0, 1, 2, 3, 4}, 2, 2);
    CHECK(subfield_threshold(spec) == 3);
    BruteForceSubfield oracle(spec);
    Rng rng(8);

    SUBCASE("planted message with two errors") {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Fel> c{static_cast<Fel>(rng.below(25)), static_cast<Fel>(rng.below(25))};
            Poly f(f25, std::move(c));
            auto w = subfield_encode(spec, f);
            BlockWord blocks;
            for (Fel sym : w) blocks.push_back({sym});
            corrupt_count(f25, blocks, 2, rng.next());
            for (size_t i = 0; i < w.size(); ++i) w[i] = blocks[i][0];
            DecodeOutcome out = subfield_decode(spec, w);
            CHECK(out.contains(f));
            CHECK(same_messages(out, oracle.list(w, 3)));
        }
    }

    SUBCASE("exact codeword appears") {
        Poly f(f25, {7, 13});
        CHECK(subfield_decode(spec, subfield_encode(spec, f)).contains(f));
    }

    SUBCASE("oracle equality and dimension bound on random words") {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Fel> w(5);
            for (auto& x : w) x = static_cast<Fel>(rng.below(25));
            DecodeOutcome out = subfield_decode(spec, w);
            CHECK(same_messages(out, oracle.list(w, 3)));
            REQUIRE(out.solution_space.has_value());
            if (!out.solution_space->empty)
                CHECK(out.solution_space->dim() <= 2);  // (r-1) k
        }
    }

    SUBCASE("operator identity holds for every listed message") {
        std::vector<Fel> w(5);
        for (auto& x : w) x = static_cast<Fel>(rng.below(25));
        LinYPoly q = subfield_interpolate(spec, w);
        DecodeOutcome out = subfield_decode(spec, w);
        for (const auto& e : out.entries) {
            Poly acc = q.a();
            for (uint32_t l = 0; l < spec.r; ++l) acc = acc + q.b(l) * frob_twist(e.message, l);
            CHECK(acc.is_zero());
        }
    }

    SUBCASE("coefficient steps range over cosets of a fixed subspace") {
        // periodic structure of the solution space, checked exhaustively
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Fel> w(5);
            for (auto& x : w) x = static_cast<Fel>(rng.below(25));
            DecodeOutcome out = subfield_decode(spec, w);
            REQUIRE(out.solution_space.has_value());
            if (out.solution_space->empty) continue;
            auto members = enumerate_affine(*out.solution_space, 100000);
            // group flattened coefficient 1 by coefficient 0 (prefix)
            std::map<std::vector<Fel>, std::vector<std::vector<Fel>>> groups;
            for (const auto& m : members)
                groups[std::vector<Fel>(m.begin(), m.begin() + 2)].push_back(
                    std::vector<Fel>(m.begin() + 2, m.end()));
            // all nonempty difference sets must span the same subspace of
            // dimension <= r - 1 = 1
            std::set<std::vector<Fel>> diffs;
            for (auto& [prefix, vals] : groups) {
                for (const auto& v : vals) {
                    std::vector<Fel> d(2);
                    for (int i = 0; i < 2; ++i) d[i] = f5.sub(v[i], vals[0][i]);
                    diffs.insert(d);
                }
            }
            CHECK(diffs.size() <= 5);  // a subspace of dimension <= 1
        }
    }
}

TEST_CASE("subspace designs") {
    Field f13 = Field::prime(13);

    SUBCASE("orbit construction at q=13, d=2, r=1, s=5, k=10") {
        SubspaceDesign design = subspace_design_build(f13, 5, 1, 2, 10);
        CHECK(design.t_bound() == 2);
        for (uint32_t i = 0; i < 10; ++i) {
            CHECK(design.dim(i) == 1);  // s - 2rd = 5 - 4
            for (const auto& b : design.bases[i]) CHECK(design.member(i, b));
        }
        // sampled design property: random 1-dimensional subspaces
        Rng rng(2);
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<Fel> v(5);
            bool nonzero = false;
            for (auto& x : v) {
                x = static_cast<Fel>(rng.below(13));
                nonzero |= x != 0;
            }
            if (!nonzero) continue;
            CHECK(design_intersection_sum(design, {v}) <= 2);
        }
    }

    SUBCASE("degenerate variant with base-field points has codimension 2") {
        SubspaceDesign design = subspace_design_build(f13, 5, 1, 1, 3);
        for (uint32_t i = 0; i < 3; ++i) CHECK(design.dim(i) == 3);  // s - 2
    }

    SUBCASE("parameter checks") {
        CHECK_THROWS_AS(subspace_design_build(f13, 25, 1, 2, 10), ParameterViolationError);
        Field f5 = Field::prime(5);
        CHECK_THROWS_AS(subspace_design_build(f5, 5, 3, 2, 10), ParameterViolationError);
    }
}

TEST_CASE("evasive subcode decoding") {
    Field f13 = Field::prime(13);
    Field big = Field::extension_of(f13, 5, 7);
    std::vector<Fel> pts(13);
    for (int i = 0; i < 13; ++i) pts[i] = static_cast<Fel>(i);
    SubfieldRSSpec spec(f13, big, pts, 10, 2);
    SubspaceDesign design = subspace_design_build(f13, 5, 1, 2, 10);
    ExtTower tw(f13, big);

    auto subcode_message = [&](Rng& rng) {
        std::vector<Fel> coeffs(10);
        for (uint32_t i = 0; i < 10; ++i) {
            // random element of H_{i+1}
            std::vector<Fel> v(5, 0);
            for (const auto& b : design.bases[i]) {
                Fel c = static_cast<Fel>(rng.below(13));
                for (int j = 0; j < 5; ++j) v[j] = f13.add(v[j], f13.mul(c, b[j]));
            }
            coeffs[i] = tw.unflatten(v);
        }
        return Poly(big, std::move(coeffs));
    };

    SUBCASE("round trip with two corrupted positions") {
        Rng rng(11);
        for (int trial = 0; trial < 5; ++trial) {
            Poly f = subcode_message(rng);
            auto w = subfield_encode(spec, f);
            BlockWord blocks;
            for (Fel sym : w) blocks.push_back({sym});
            corrupt_count(big, blocks, 2, rng.next());
            for (size_t i = 0; i < w.size(); ++i) w[i] = blocks[i][0];
            DecodeOutcome out = evasive_subcode_decode(spec, design, w);
            CHECK(out.contains(f));
            // every listed message stays inside the subcode
            for (const auto& e : out.entries)
                for (uint32_t i = 0; i < 10; ++i)
                    CHECK(design.member(i, tw.flatten(e.message.coeff(i))));
        }
    }

    SUBCASE("intersection dimension never exceeds the design bound") {
        Rng rng(13);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Fel> w(13);
            for (auto& x : w) x = static_cast<Fel>(rng.below(big.size()));
            DecodeOutcome out = evasive_subcode_decode(spec, design, w);
            REQUIRE(out.solution_space.has_value());
            if (!out.solution_space->empty)
                CHECK(out.solution_space->dim() <= static_cast<size_t>(design.t_bound()));
        }
    }

    SUBCASE("subcode rate matches the dimension count") {
        size_t dim_sum = 0;
        for (uint32_t i = 0; i < 10; ++i) dim_sum += design.dim(i);
        CHECK(dim_sum == 10);  // k * (s - codim)/... each H_i has dimension 1
        // rate = sum dim(H_i) / (s k) = 1 - codim/s
        CHECK(Rational(static_cast<long long>(dim_sum), 50) == Rational(1) - Rational(4, 5));
    }

    SUBCASE("mismatched design is rejected") {
        SubfieldRSSpec wrong(f13, big, pts, 10, 3);
        std::vector<Fel> w(13, 0);
        CHECK_THROWS_AS(evasive_subcode_decode(wrong, design, w), DesignMismatchError);
    }
}
