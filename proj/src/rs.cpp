#include "polydec/rs.hpp"

#include <algorithm>
#include <cmath>

namespace polydec {

RSSpec::RSSpec(const Field& f, std::vector<Fel> pts, uint32_t degree_bound)
    : field(&f), points(std::move(pts)), k(degree_bound) {
    size_t n = points.size();
    if (k < 1 || k >= n) throw ParameterViolationError("need 1 <= k < n");
    if (n > f.size()) throw ParameterViolationError("more points than field elements");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j]) throw DuplicatePointError("evaluation points must be distinct");
}

bool DecodeOutcome::contains(const Poly& msg) const {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const DecodeEntry& e) { return e.message == msg; });
}

void sort_entries(std::vector<DecodeEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const DecodeEntry& a, const DecodeEntry& b) {
        if (a.agreement != b.agreement) return a.agreement > b.agreement;
        return poly_lex_less(a.message, b.message);
    });
}

uint64_t isqrt_u64(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<Fel> rs_encode(const RSSpec& spec, const Poly& f) {
    if (f.deg() >= static_cast<int>(spec.k))
        throw DegreeTooLargeError("message degree exceeds the code bound");
    return f.eval_many(spec.points);
}

int rs_agreement(const RSSpec& spec, const std::vector<Fel>& w, const Poly& f) {
    int agree = 0;
    for (size_t i = 0; i < spec.n(); ++i)
        if (f.eval(spec.points[i]) == w[i]) ++agree;
    return agree;
}

namespace {

DecodeEntry make_entry(const RSSpec& spec, const std::vector<Fel>& w, Poly f) {
    DecodeEntry e{std::move(f), {}, 0};
    auto cw = rs_encode(spec, e.message);
    e.codeword.reserve(cw.size());
    for (size_t i = 0; i < cw.size(); ++i) {
        if (cw[i] == w[i]) ++e.agreement;
        e.codeword.push_back({cw[i]});
    }
    return e;
}

// monomials (i, j) with i + k*j <= wdeg_bound, ascending in weighted degree,
// ties broken by ascending Y-degree; this order fixes which nullspace vector
// elimination selects
std::vector<std::pair<uint32_t, uint32_t>> monomials_wdeg(int wdeg_bound, uint32_t k) {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (int w = 0; w <= wdeg_bound; ++w)
        for (int j = 0; static_cast<int>(k) * j <= w; ++j) out.push_back({w - k * j, j});
    return out;
}

size_t count_monomials(int wdeg_bound, uint32_t k) {
    size_t c = 0;
    for (int j = 0; k * static_cast<uint32_t>(j) <= static_cast<uint32_t>(wdeg_bound); ++j)
        c += wdeg_bound - k * j + 1;
    return wdeg_bound < 0 ? 0 : c;
}

BiPoly interpolate_nullspace(const RSSpec& spec, const std::vector<Fel>& w, uint32_t r,
                             int wdeg_bound) {
    const Field& F = *spec.field;
    auto mono = monomials_wdeg(wdeg_bound, spec.k);
    size_t per_point = static_cast<size_t>(r) * (r + 1) / 2;
    Matrix m(F, spec.n() * per_point, mono.size());
    size_t row = 0;
    for (size_t i = 0; i < spec.n(); ++i) {
        Fel a = spec.points[i], y = w[i];
        // power tables for this point
        std::vector<Fel> apow(wdeg_bound + 2), ypow(wdeg_bound / spec.k + 2);
        apow[0] = F.one();
        for (size_t t = 1; t < apow.size(); ++t) apow[t] = F.mul(apow[t - 1], a);
        ypow[0] = F.one();
        for (size_t t = 1; t < ypow.size(); ++t) ypow[t] = F.mul(ypow[t - 1], y);
        for (uint32_t u = 0; u < r; ++u) {
            for (uint32_t v = 0; u + v < r; ++v) {
                for (size_t c = 0; c < mono.size(); ++c) {
                    auto [ie, je] = mono[c];
                    if (ie < u || je < v) continue;
                    uint64_t p = F.characteristic();
                    uint32_t bin = static_cast<uint32_t>(
                        (static_cast<uint64_t>(binom_mod_p(ie, u, p)) * binom_mod_p(je, v, p)) % p);
                    if (bin == 0) continue;
                    Fel val = F.mul(F.scalar(bin), F.mul(apow[ie - u], ypow[je - v]));
                    m.at(row, c) = val;
                }
                ++row;
            }
        }
    }
    AffineSpace sol = solve_affine(m, std::vector<Fel>(m.rows(), 0));
    if (sol.basis.empty())
        throw InterpolationFailedError("interpolation system has only the zero solution");
    BiPoly q(F);
    const auto& vec = sol.basis[0];
    for (size_t c = 0; c < mono.size(); ++c)
        if (vec[c]) q.set(mono[c].first, mono[c].second, vec[c]);
    return q;
}

DecodeOutcome roots_and_filter(const RSSpec& spec, const std::vector<Fel>& w, const BiPoly& q,
                               int t) {
    DecodeOutcome out;
    for (const Poly& f : rr_roots(q, spec.k)) {
        DecodeEntry e = make_entry(spec, w, f);
        if (e.agreement >= t) out.entries.push_back(std::move(e));
    }
    sort_entries(out.entries);
    return out;
}

}  // namespace

BiPoly sudan_interpolate(const RSSpec& spec, const std::vector<Fel>& w, int wdeg_bound) {
    return interpolate_nullspace(spec, w, 1, wdeg_bound);
}

BiPoly gs_interpolate(const RSSpec& spec, const std::vector<Fel>& w, uint32_t r, int wdeg_bound) {
    return interpolate_nullspace(spec, w, r, wdeg_bound);
}

DecodeOutcome rs_unique_decode(const RSSpec& spec, const std::vector<Fel>& w) {
    const Field& F = *spec.field;
    size_t n = spec.n();
    if (w.size() != n) throw DimensionMismatchError("received word length != n");
    int t = static_cast<int>((n + spec.k + 1) / 2);  // ceil((n + k) / 2)

    // Q = A(X) + B(X) Y with deg A <= t-1, deg B <= t-k; the homogeneous
    // system has n constraints and at least n+1 unknowns
    size_t acoef = t, bcoef = t - spec.k + 1;
    Matrix m(F, n, acoef + bcoef);
    for (size_t i = 0; i < n; ++i) {
        Fel ap = F.one();
        for (size_t c = 0; c < acoef; ++c) {
            m.at(i, c) = ap;
            ap = F.mul(ap, spec.points[i]);
        }
        Fel bp = w[i];
        for (size_t c = 0; c < bcoef; ++c) {
            m.at(i, acoef + c) = bp;
            bp = F.mul(bp, spec.points[i]);
        }
    }
    AffineSpace sol = solve_affine(m, std::vector<Fel>(n, 0));
    if (sol.basis.empty())
        throw InterpolationFailedError("interpolation system has only the zero solution");
    const auto& vec = sol.basis[0];
    Poly a(F, std::vector<Fel>(vec.begin(), vec.begin() + acoef));
    Poly b(F, std::vector<Fel>(vec.begin() + acoef, vec.end()));

    DecodeOutcome out;
    if (b.is_zero()) return out;
    auto [quot, rem] = (-a).divrem(b);
    if (!rem.is_zero() || quot.deg() >= static_cast<int>(spec.k)) return out;
    DecodeEntry e = make_entry(spec, w, quot);
    if (e.agreement < t) return out;
    out.entries.push_back(std::move(e));
    return out;
}

DecodeOutcome rs_sudan_decode(const RSSpec& spec, const std::vector<Fel>& w) {
    size_t n = spec.n();
    if (w.size() != n) throw DimensionMismatchError("received word length != n");
    int t = static_cast<int>(isqrt_u64(2ULL * spec.k * n)) + 1;
    BiPoly q = sudan_interpolate(spec, w, t - 1);
    return roots_and_filter(spec, w, q, t);
}

uint32_t gs_pick_r(const RSSpec& spec, int t, bool default_threshold) {
    uint64_t nk = static_cast<uint64_t>(spec.n()) * spec.k;
    for (uint32_t r = 1;; ++r) {
        if (default_threshold) {
            // smallest r whose degree bound stays below t*r
            uint64_t d2 = nk * r * (r + 1);
            uint64_t d = isqrt_u64(d2);
            if (d * d < d2) ++d;  // ceil(sqrt())
            if (d < static_cast<uint64_t>(t) * r) return r;
        } else {
            // smallest r for which degree bound t*r - 1 leaves the system
            // underdetermined
            size_t unknowns = count_monomials(t * static_cast<int>(r) - 1, spec.k);
            size_t constraints = spec.n() * static_cast<size_t>(r) * (r + 1) / 2;
            if (unknowns > constraints) return r;
        }
        if (r > 4096) throw ParameterViolationError("no workable interpolation multiplicity");
    }
}

DecodeOutcome rs_gs_decode(const RSSpec& spec, const std::vector<Fel>& w,
                           std::optional<uint32_t> r, std::optional<int> agreement_threshold) {
    size_t n = spec.n();
    if (w.size() != n) throw DimensionMismatchError("received word length != n");
    uint64_t nk = static_cast<uint64_t>(n) * spec.k;
    int t_default = static_cast<int>(isqrt_u64(nk)) + 1;
    int t = agreement_threshold.value_or(t_default);
    bool default_t = !agreement_threshold || t == t_default;
    uint32_t mult = r ? *r : gs_pick_r(spec, t, default_t);

    int wdeg_bound;
    if (default_t) {
        // an explicitly supplied small r keeps this degree bound and simply
        // decodes a smaller radius than the threshold promises
        uint64_t d2 = nk * mult * (mult + 1);
        uint64_t d = isqrt_u64(d2);
        if (d * d < d2) ++d;
        wdeg_bound = static_cast<int>(d);
    } else {
        wdeg_bound = t * static_cast<int>(mult) - 1;
    }
    BiPoly q = gs_interpolate(spec, w, mult, wdeg_bound);
    return roots_and_filter(spec, w, q, t);
}

}  // namespace polydec
