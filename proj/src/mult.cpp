#include "polydec/mult.hpp"

#include <algorithm>
#include <cmath>

#include "polydec/rng.hpp"

namespace polydec {

MultSpec::MultSpec(const Field& f, std::vector<Fel> pts, uint32_t degree_bound,
                   uint32_t mult_param)
    : field(&f), points(std::move(pts)), k(degree_bound), s(mult_param) {
    size_t n = points.size();
    if (s < 1 || k < 1) throw ParameterViolationError("need k >= 1 and s >= 1");
    if (k >= s * n) throw ParameterViolationError("need k < s*n");
    if (std::max(k, s) > f.characteristic())
        throw ParameterViolationError("need max(k, s) <= field characteristic");
    if (n > f.size()) throw ParameterViolationError("more points than field elements");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j]) throw DuplicatePointError("evaluation points must be distinct");
}

MultWord mult_encode(const MultSpec& spec, const Poly& f) {
    if (f.deg() >= static_cast<int>(spec.k))
        throw DegreeTooLargeError("message degree exceeds the code bound");
    MultWord w;
    w.reserve(spec.n());
    for (Fel a : spec.points) w.push_back(f.hasse_block(a, spec.s));
    return w;
}

int mult_agreement(const MultSpec& spec, const MultWord& w, const Poly& f) {
    int agree = 0;
    for (size_t i = 0; i < spec.n(); ++i)
        if (f.hasse_block(spec.points[i], spec.s) == w[i]) ++agree;
    return agree;
}

int mult_list_threshold(const MultSpec& spec) {
    uint64_t num = spec.n() + static_cast<uint64_t>(spec.s) * (spec.k - 1) + 1;
    return static_cast<int>((num + spec.s) / (spec.s + 1));  // ceil(num / (s+1))
}

int mult_cap_threshold(const MultSpec& spec, uint32_t r) {
    uint64_t m = spec.s - r + 1;
    uint64_t num = m * spec.n() + static_cast<uint64_t>(r) * (spec.k - 1) + 1;
    uint64_t den = m * (r + 1);
    return static_cast<int>((num + den - 1) / den);
}

namespace {

LinYPoly unpack_operator(const Field& F, const std::vector<Fel>& vec, size_t acoef, size_t bcoef,
                         size_t r) {
    Poly a(F, std::vector<Fel>(vec.begin(), vec.begin() + acoef));
    std::vector<Poly> bs;
    for (size_t l = 0; l < r; ++l)
        bs.emplace_back(F, std::vector<Fel>(vec.begin() + acoef + l * bcoef,
                                            vec.begin() + acoef + (l + 1) * bcoef));
    return LinYPoly(std::move(a), std::move(bs));
}

DecodeEntry make_entry(const MultSpec& spec, const MultWord& w, Poly f) {
    DecodeEntry e{std::move(f), {}, 0};
    e.codeword = mult_encode(spec, e.message);
    for (size_t i = 0; i < e.codeword.size(); ++i)
        if (e.codeword[i] == w[i]) ++e.agreement;
    return e;
}

DecodeOutcome decode_via_space(const MultSpec& spec, const MultWord& w, const LinYPoly& q, int t,
                               uint64_t cap) {
    const Field& F = *spec.field;
    AffineSpace space = diff_solution_space(q, spec.k);
    uint64_t count = space.empty ? 0 : 1;
    for (size_t i = 0; i < space.dim(); ++i) {
        count *= F.size();
        if (count > cap)
            throw SolutionSpaceTooLargeError("solution space exceeds the enumeration cap",
                                             std::move(space));
    }
    DecodeOutcome out;
    if (!space.empty) {
        for (const auto& coeffs : enumerate_affine(space, cap)) {
            DecodeEntry e = make_entry(spec, w, Poly(F, coeffs));
            if (e.agreement >= t) out.entries.push_back(std::move(e));
        }
    }
    sort_entries(out.entries);
    out.solution_space = std::move(space);
    return out;
}

}  // namespace

LinYPoly mult_list_interpolate(const MultSpec& spec, const MultWord& w) {
    const Field& F = *spec.field;
    int t = mult_list_threshold(spec);
    size_t acoef = t;
    size_t bcoef = t - static_cast<int>(spec.k) + 1 > 0 ? t - spec.k + 1 : 0;
    Matrix m(F, spec.n(), acoef + spec.s * bcoef);
    for (size_t i = 0; i < spec.n(); ++i) {
        Fel a = spec.points[i];
        Fel ap = F.one();
        for (size_t c = 0; c < acoef; ++c) {
            m.at(i, c) = ap;
            ap = F.mul(ap, a);
        }
        for (uint32_t l = 0; l < spec.s; ++l) {
            Fel bp = w[i][l];
            for (size_t c = 0; c < bcoef; ++c) {
                m.at(i, acoef + l * bcoef + c) = bp;
                bp = F.mul(bp, a);
            }
        }
    }
    AffineSpace sol = solve_affine(m, std::vector<Fel>(m.rows(), 0));
    if (sol.basis.empty())
        throw InterpolationFailedError("interpolation system has only the zero solution");
    return unpack_operator(F, sol.basis[0], acoef, bcoef, spec.s);
}

LinYPoly mult_cap_interpolate(const MultSpec& spec, const MultWord& w, uint32_t r) {
    const Field& F = *spec.field;
    uint64_t p = F.characteristic();
    if (r < 1 || r > spec.s) throw ParameterViolationError("need 1 <= r <= s");
    int t = mult_cap_threshold(spec, r);
    uint32_t mparam = spec.s - r + 1;
    size_t acoef = static_cast<size_t>(mparam) * t;
    long bc = static_cast<long>(mparam) * t - spec.k + 1;
    size_t bcoef = bc > 0 ? static_cast<size_t>(bc) : 0;

    Matrix sys(F, spec.n() * mparam, acoef + r * bcoef);
    size_t row = 0;
    for (size_t i = 0; i < spec.n(); ++i) {
        Fel a = spec.points[i];
        std::vector<Fel> apow(acoef + 1);
        apow[0] = F.one();
        for (size_t x = 1; x < apow.size(); ++x) apow[x] = F.mul(apow[x - 1], a);
        for (uint32_t j = 0; j <= spec.s - r; ++j, ++row) {
            // A^{(j)}(a): column of A_m carries C(m, j) a^{m-j}
            for (size_t mm = j; mm < acoef; ++mm) {
                uint32_t bin = binom_mod_p(mm, j, p);
                if (bin) sys.at(row, mm) = F.mul(F.scalar(bin), apow[mm - j]);
            }
            // B_l columns: sum_h C(h+l, l) C(m, j-h) a^{m-j+h} w_{i,h+l}
            for (uint32_t l = 0; l < r; ++l) {
                for (size_t mm = 0; mm < bcoef; ++mm) {
                    Fel acc = 0;
                    for (uint32_t h = 0; h <= j; ++h) {
                        if (mm + h < j) continue;
                        uint32_t b1 = binom_mod_p(h + l, l, p);
                        uint32_t b2 = binom_mod_p(mm, j - h, p);
                        uint64_t b = (static_cast<uint64_t>(b1) * b2) % p;
                        if (!b) continue;
                        Fel term = F.mul(F.scalar(b), F.mul(apow[mm - j + h], w[i][h + l]));
                        acc = F.add(acc, term);
                    }
                    if (acc) sys.at(row, acoef + l * bcoef + mm) = acc;
                }
            }
        }
    }
    AffineSpace sol = solve_affine(sys, std::vector<Fel>(sys.rows(), 0));
    if (sol.basis.empty())
        throw InterpolationFailedError("interpolation system has only the zero solution");
    return unpack_operator(F, sol.basis[0], acoef, bcoef, r);
}

AffineSpace diff_solution_space(const LinYPoly& q, uint32_t k) {
    if (q.is_zero()) throw ZeroPolynomialError("operator is identically zero");
    const Field& F = q.field();
    uint64_t p = F.characteristic();
    if (std::max<uint64_t>(k, q.num_y()) > p)
        throw ParameterViolationError("need max(k, Y count) <= characteristic");
    int maxdeg = q.a().deg();
    for (size_t l = 0; l < q.num_y(); ++l)
        if (!q.b(l).is_zero())
            maxdeg = std::max(maxdeg, q.b(l).deg() + static_cast<int>(k) - 1 - static_cast<int>(l));
    size_t rows = maxdeg >= 0 ? static_cast<size_t>(maxdeg + 1) : 0;

    // coefficient of X^m in A + sum_l B_l f^{(l)} as a linear form in f's
    // coefficients: entry(m, i) = sum_l C(i, l) B_l[m - i + l]
    Matrix sys(F, rows, k);
    std::vector<Fel> rhs(rows, 0);
    for (size_t m = 0; m < rows; ++m) {
        rhs[m] = F.neg(q.a().coeff(m));
        for (uint32_t i = 0; i < k; ++i) {
            Fel acc = 0;
            for (size_t l = 0; l < q.num_y() && l <= i; ++l) {
                long idx = static_cast<long>(m) - static_cast<long>(i) + static_cast<long>(l);
                if (idx < 0 || idx > q.b(l).deg()) continue;
                uint32_t bin = binom_mod_p(i, l, p);
                if (!bin) continue;
                acc = F.add(acc, F.mul(F.scalar(bin), q.b(l).coeff(idx)));
            }
            if (acc) sys.at(m, i) = acc;
        }
    }
    return solve_affine(sys, rhs);
}

DecodeOutcome mult_list_decode(const MultSpec& spec, const MultWord& w, uint64_t cap) {
    if (w.size() != spec.n()) throw DimensionMismatchError("received word block count != n");
    LinYPoly q = mult_list_interpolate(spec, w);
    return decode_via_space(spec, w, q, mult_list_threshold(spec), cap);
}

DecodeOutcome mult_cap_decode(const MultSpec& spec, const MultWord& w, uint32_t r, uint64_t cap) {
    if (w.size() != spec.n()) throw DimensionMismatchError("received word block count != n");
    LinYPoly q = mult_cap_interpolate(spec, w, r);
    return decode_via_space(spec, w, q, mult_cap_threshold(spec, r), cap);
}

int prune_sample_count(size_t r, double delta, double eps) {
    if (r == 0) return 0;
    double x = static_cast<double>(r) / (eps * (1.0 - delta));
    return static_cast<int>(std::ceil(3.0 * x * std::log(x)));
}

std::vector<Poly> prune_list(const MultSpec& spec, const AffineSpace& space, const MultWord& w,
                             int agreement_threshold, double delta, double eps, uint64_t seed,
                             int repetitions) {
    if (!(eps < delta)) throw ParameterViolationError("need eps < delta");
    const Field& F = *spec.field;
    std::vector<Poly> out;
    if (space.empty) return out;
    auto push_unique = [&](Poly f) {
        if (mult_agreement(spec, w, f) < agreement_threshold) return;
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
    };
    if (space.dim() == 0) {
        push_unique(Poly(F, space.particular));
        return out;
    }

    int t = std::max(1, prune_sample_count(space.dim(), delta, eps));
    uint64_t p = F.characteristic();
    for (int rep = 0; rep < repetitions; ++rep) {
        Rng rng(split_seed(seed, static_cast<uint64_t>(rep)));
        // agreement with w on the sampled blocks, as linear constraints on
        // the message coefficients
        Matrix cons(F, static_cast<size_t>(t) * spec.s, spec.k);
        std::vector<Fel> rhs(cons.rows());
        for (int smp = 0; smp < t; ++smp) {
            size_t i = static_cast<size_t>(rng.below(spec.n()));
            Fel a = spec.points[i];
            for (uint32_t d = 0; d < spec.s; ++d) {
                size_t row = static_cast<size_t>(smp) * spec.s + d;
                std::vector<Fel> apow(spec.k, 0);
                Fel ap = F.one();
                for (uint32_t j = d; j < spec.k; ++j) {
                    apow[j] = ap;
                    ap = F.mul(ap, a);
                }
                for (uint32_t j = d; j < spec.k; ++j) {
                    uint32_t bin = binom_mod_p(j, d, p);
                    if (bin) cons.at(row, j) = F.mul(F.scalar(bin), apow[j]);
                }
                rhs[row] = w[i][d];
            }
        }
        AffineSpace hit = intersect_affine(space, cons, rhs);
        if (!hit.empty && hit.dim() == 0) push_unique(Poly(F, hit.particular));
    }
    std::sort(out.begin(), out.end(), poly_lex_less);
    return out;
}

}  // namespace polydec
