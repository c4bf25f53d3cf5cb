#include "polydec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace polydec {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw DivisionByZeroError("rational division by zero");
    return Rational(num * o.den, den * o.num);
}
bool Rational::operator<(const Rational& o) const { return num * o.den < o.num * den; }
bool Rational::operator<=(const Rational& o) const { return num * o.den <= o.num * den; }

long long Rational::floor() const {
    long long q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

std::string Rational::to_text() const {
    std::ostringstream os;
    os << num << "/" << den;
    return os.str();
}

Rational johnson_list_bound(const Rational& delta, const Rational& alpha) {
    Rational one(1);
    if (!(Rational(0) < alpha) || !(alpha < one))
        throw RadiusOutOfRangeError("radius must lie in (0, 1)");
    Rational denom = (one - alpha) * (one - alpha) - (one - delta);
    if (!(Rational(0) < denom))
        throw RadiusOutOfRangeError("radius is not below the distance-based threshold");
    return (delta - alpha) / denom;
}

Rational rational_log_upper(uint64_t base, uint64_t x, long long precision_den) {
    if (base < 2 || x < 1) throw ParameterViolationError("log arguments out of range");
    if (x == 1) return Rational(0);
    // a/b >= log_base(x) with b = precision_den: smallest integer a with
    // b*log(x) <= a*log(base); the float estimate is nudged up one step so
    // the inequality always holds
    long double v = precision_den * std::log(static_cast<long double>(x)) /
                    std::log(static_cast<long double>(base));
    long long a = static_cast<long long>(std::floor(v)) + 1;
    return Rational(a, precision_den);
}

Rational gen_singleton_radius(uint64_t list_size, uint64_t n, uint64_t sigma_size,
                              const Rational& rate) {
    if (list_size < 1) throw ParameterViolationError("list size must be >= 1");
    Rational l(static_cast<long long>(list_size));
    Rational frac = l / (l + Rational(1));
    Rational o = rational_log_upper(sigma_size, list_size) / Rational(static_cast<long long>(n));
    return frac * (Rational(1) - rate + o);
}

namespace {

// message with index idx: little-endian base-q coefficient vector
Poly message_from_index(const Field& f, uint32_t k, uint64_t idx) {
    std::vector<Fel> c(k);
    for (uint32_t i = 0; i < k; ++i) {
        c[i] = static_cast<Fel>(idx % f.size());
        idx /= f.size();
    }
    return Poly(f, std::move(c));
}

uint64_t checked_message_count(uint64_t q, uint32_t k, uint64_t cap) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < k; ++i) {
        if (count > cap / q + 1) throw TooLargeError("message space exceeds the oracle cap");
        count *= q;
        if (count > cap) throw TooLargeError("message space exceeds the oracle cap");
    }
    return count;
}

}  // namespace

BruteForceRS::BruteForceRS(const RSSpec& spec, uint64_t cap) : spec_(&spec) {
    count_ = checked_message_count(spec.field->size(), spec.k, cap);
    size_t n = spec.n();
    table_.resize(count_ * n);
    for (uint64_t idx = 0; idx < count_; ++idx) {
        Poly f = message_from_index(*spec.field, spec.k, idx);
        auto cw = rs_encode(spec, f);
        std::copy(cw.begin(), cw.end(), table_.begin() + idx * n);
    }
}

DecodeOutcome BruteForceRS::list(const std::vector<Fel>& w, int threshold) const {
    size_t n = spec_->n();
    DecodeOutcome out;
    for (uint64_t idx = 0; idx < count_; ++idx) {
        int agree = 0;
        for (size_t i = 0; i < n; ++i)
            if (table_[idx * n + i] == w[i]) ++agree;
        if (agree < threshold) continue;
        DecodeEntry e{message_from_index(*spec_->field, spec_->k, idx), {}, agree};
        for (size_t i = 0; i < n; ++i) e.codeword.push_back({table_[idx * n + i]});
        out.entries.push_back(std::move(e));
    }
    sort_entries(out.entries);
    return out;
}

BruteForceMult::BruteForceMult(const MultSpec& spec, uint64_t cap) : spec_(&spec) {
    count_ = checked_message_count(spec.field->size(), spec.k, cap);
    size_t n = spec.n(), s = spec.s;
    table_.resize(count_ * n * s);
    for (uint64_t idx = 0; idx < count_; ++idx) {
        Poly f = message_from_index(*spec.field, spec.k, idx);
        MultWord w = mult_encode(spec, f);
        for (size_t i = 0; i < n; ++i)
            std::copy(w[i].begin(), w[i].end(), table_.begin() + (idx * n + i) * s);
    }
}

DecodeOutcome BruteForceMult::list(const MultWord& w, int threshold) const {
    size_t n = spec_->n(), s = spec_->s;
    DecodeOutcome out;
    for (uint64_t idx = 0; idx < count_; ++idx) {
        int agree = 0;
        for (size_t i = 0; i < n; ++i) {
            bool eq = true;
            for (size_t d = 0; d < s; ++d)
                if (table_[(idx * n + i) * s + d] != w[i][d]) {
                    eq = false;
                    break;
                }
            if (eq) ++agree;
        }
        if (agree < threshold) continue;
        DecodeEntry e{message_from_index(*spec_->field, spec_->k, idx), {}, agree};
        for (size_t i = 0; i < n; ++i)
            e.codeword.emplace_back(table_.begin() + (idx * n + i) * s,
                                    table_.begin() + (idx * n + i + 1) * s);
        out.entries.push_back(std::move(e));
    }
    sort_entries(out.entries);
    return out;
}

BruteForceSubfield::BruteForceSubfield(const SubfieldRSSpec& spec, uint64_t cap) : spec_(&spec) {
    count_ = checked_message_count(spec.ext->size(), spec.k, cap);
    size_t n = spec.n();
    table_.resize(count_ * n);
    for (uint64_t idx = 0; idx < count_; ++idx) {
        Poly f = message_from_index(*spec.ext, spec.k, idx);
        auto cw = subfield_encode(spec, f);
        std::copy(cw.begin(), cw.end(), table_.begin() + idx * n);
    }
}

DecodeOutcome BruteForceSubfield::list(const std::vector<Fel>& w, int threshold) const {
    size_t n = spec_->n();
    DecodeOutcome out;
    for (uint64_t idx = 0; idx < count_; ++idx) {
        int agree = 0;
        for (size_t i = 0; i < n; ++i)
            if (table_[idx * n + i] == w[i]) ++agree;
        if (agree < threshold) continue;
        DecodeEntry e{message_from_index(*spec_->ext, spec_->k, idx), {}, agree};
        for (size_t i = 0; i < n; ++i) e.codeword.push_back({table_[idx * n + i]});
        out.entries.push_back(std::move(e));
    }
    sort_entries(out.entries);
    return out;
}

DecodeOutcome brute_force_list(const RSSpec& spec, const std::vector<Fel>& w, int threshold,
                               uint64_t cap) {
    return BruteForceRS(spec, cap).list(w, threshold);
}
DecodeOutcome brute_force_list(const MultSpec& spec, const MultWord& w, int threshold,
                               uint64_t cap) {
    return BruteForceMult(spec, cap).list(w, threshold);
}
DecodeOutcome brute_force_list(const SubfieldRSSpec& spec, const std::vector<Fel>& w,
                               int threshold, uint64_t cap) {
    return BruteForceSubfield(spec, cap).list(w, threshold);
}

long long Hypergraph::weight() const {
    long long total = 0;
    for (const auto& e : edges)
        total += std::max<long long>(static_cast<long long>(e.size()) - 1, 0);
    return total;
}

Hypergraph agreement_hypergraph(const std::vector<std::vector<std::vector<Fel>>>& words,
                                const std::vector<std::vector<Fel>>& w) {
    Hypergraph h;
    h.vertex_count = words.size();
    for (const auto& c : words)
        if (c.size() != w.size()) throw LengthMismatchError("word lengths differ");
    h.edges.resize(w.size());
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = 0; j < words.size(); ++j)
            if (words[j][i] == w[i]) h.edges[i].push_back(static_cast<int>(j));
    return h;
}

bool gzp_check(const std::vector<std::vector<int>>& zero_sets) {
    size_t k = zero_sets.size();
    if (k > 20) throw TooManySetsError("at most 20 sets supported");
    std::vector<std::vector<int>> sorted(zero_sets);
    for (auto& s : sorted) std::sort(s.begin(), s.end());
    for (uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> inter;
        bool first = true;
        for (size_t j = 0; j < k; ++j) {
            if (!(mask & (1u << j))) continue;
            if (first) {
                inter = sorted[j];
                first = false;
            } else {
                std::vector<int> next;
                std::set_intersection(inter.begin(), inter.end(), sorted[j].begin(),
                                      sorted[j].end(), std::back_inserter(next));
                inter = std::move(next);
            }
        }
        size_t popcount = static_cast<size_t>(__builtin_popcount(mask));
        if (inter.size() > k - popcount) return false;
    }
    return true;
}

Poly subspace_poly(const Field& f2m, const std::vector<Fel>& basis) {
    if (f2m.characteristic() != 2) throw NotF2BasisError("field must have characteristic 2");
    // packed values over characteristic 2 add by xor, so rank checks reduce
    // to bit elimination
    std::vector<Fel> reduced;
    for (Fel v : basis) {
        Fel x = v;
        for (Fel r : reduced) {
            int hb = 31;
            while (hb >= 0 && !((r >> hb) & 1)) --hb;
            if (hb >= 0 && ((x >> hb) & 1)) x ^= r;
        }
        if (x == 0) throw NotF2BasisError("basis vectors are dependent over F_2");
        reduced.push_back(x);
    }
    size_t dim = basis.size();
    std::vector<Fel> members;
    members.reserve(1ull << dim);
    for (uint64_t mask = 0; mask < (1ull << dim); ++mask) {
        Fel v = 0;
        for (size_t j = 0; j < dim; ++j)
            if (mask & (1ull << j)) v ^= basis[j];
        members.push_back(v);
    }
    Poly prod = Poly::constant(f2m, f2m.one());
    for (Fel v : members) prod = prod * Poly(f2m, {v, f2m.one()});  // -v == v here

    // verify the linearized sparse shape (all exponents powers of two) and
    // the root set
    for (int i = 0; i <= prod.deg(); ++i) {
        if (prod.coeff(i) == 0) continue;
        if (i == 0 || (i & (i - 1)) != 0)
            throw Error("internal: subspace polynomial is not linearized");
    }
    for (Fel v : members)
        if (prod.eval(v) != 0) throw Error("internal: subspace member is not a root");
    return prod;
}

std::vector<std::vector<Fel>> all_f2_subspaces(const Field& f2m, uint32_t d) {
    uint32_t m = f2m.degree();
    if (f2m.characteristic() != 2 || m > 8) throw TooLargeError("subspace scan limited to m <= 8");
    if (d > m) throw DimensionOutOfRangeError("subspace dimension exceeds m");
    std::vector<std::vector<Fel>> out;
    // enumerate reduced echelon d x m matrices over F_2: choose pivot
    // columns, then free entries right of each pivot and off the pivot
    // columns
    std::vector<uint32_t> comb(d);
    std::iota(comb.begin(), comb.end(), 0);
    auto emit = [&](const std::vector<uint32_t>& piv) {
        std::vector<std::pair<uint32_t, uint32_t>> free_slots;  // (row, col)
        std::vector<bool> is_piv(m, false);
        for (uint32_t c : piv) is_piv[c] = true;
        for (uint32_t r = 0; r < d; ++r)
            for (uint32_t c = piv[r] + 1; c < m; ++c)
                if (!is_piv[c]) free_slots.push_back({r, c});
        for (uint64_t mask = 0; mask < (1ull << free_slots.size()); ++mask) {
            std::vector<Fel> rows(d, 0);
            for (uint32_t r = 0; r < d; ++r) rows[r] = static_cast<Fel>(1u << piv[r]);
            for (size_t s = 0; s < free_slots.size(); ++s)
                if (mask & (1ull << s)) rows[free_slots[s].first] |= 1u << free_slots[s].second;
            out.push_back(rows);
        }
    };
    if (d == 0) {
        out.push_back({});
        return out;
    }
    for (;;) {
        emit(comb);
        // next combination
        int i = static_cast<int>(d) - 1;
        while (i >= 0 && comb[i] == m - d + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (uint32_t j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

std::string LimitationWitness::report() const {
    std::ostringstream os;
    os << "subspace_count=" << subspace_count << "\n";
    os << "group_size=" << group_size << "\n";
    os << "family_size=" << family.size() << "\n";
    os << "max_degree=" << max_degree << "\n";
    os << "min_agreement=" << min_agreement << "\n";
    return os.str();
}

LimitationWitness limitation_witness(const Field& f2m, uint32_t d, uint32_t t) {
    uint32_t m = f2m.degree();
    if (!(1 <= t && t < d && d <= m))
        throw DimensionOutOfRangeError("need 1 <= t < d <= m");
    auto subspaces = all_f2_subspaces(f2m, d);

    // key: coefficients of the subspace polynomial at exponents 2^(t+1)..2^(d-1)
    std::map<std::vector<Fel>, std::vector<Poly>> groups;
    for (const auto& basis : subspaces) {
        Poly pv = subspace_poly(f2m, basis);
        std::vector<Fel> key;
        for (uint32_t i = t + 1; i < d; ++i) key.push_back(pv.coeff(1u << i));
        groups[key].push_back(pv);
    }
    auto best = groups.begin();
    for (auto it = groups.begin(); it != groups.end(); ++it)
        if (it->second.size() > best->second.size()) best = it;

    // shared sparse tail, leading term included so differences stay low degree
    Poly tail = Poly::monomial(f2m, 1u << d, f2m.one());
    {
        uint32_t idx = 0;
        for (uint32_t i = t + 1; i < d; ++i, ++idx)
            tail = tail + Poly::monomial(f2m, 1u << i, best->first[idx]);
    }

    LimitationWitness out;
    out.subspace_count = subspaces.size();
    out.group_size = best->second.size();
    std::vector<Fel> pts;
    for (uint64_t x = 0; x < f2m.size(); ++x) pts.push_back(static_cast<Fel>(x));
    out.received = tail.eval_many(pts);
    out.min_agreement = INT32_MAX;
    for (const auto& pv : best->second) {
        Poly member = tail - pv;
        out.max_degree = std::max(out.max_degree, member.deg());
        // member agrees with the received word on every root of pv
        int agree = 0;
        for (uint64_t x = 0; x < f2m.size(); ++x)
            if (pv.eval(static_cast<Fel>(x)) == 0 &&
                member.eval(static_cast<Fel>(x)) == out.received[x])
                ++agree;
        out.min_agreement = std::min(out.min_agreement, agree);
        out.family.push_back(std::move(member));
    }
    return out;
}

namespace {

Poly poly_matrix_det(const Field& F, const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly det(F);
    for (size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (size_t j = 0; j < n; ++j)
                if (j != col) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][col] * poly_matrix_det(F, minor);
        det = (col % 2 == 0) ? det + term : det - term;
    }
    return det;
}

}  // namespace

std::string WronskianReport::report() const {
    std::ostringstream os;
    os << "det_nonzero=" << (det_nonzero ? 1 : 0) << "\n";
    os << "det_degree=" << det_degree << "\n";
    os << "dim_sum=" << dim_sum << "\n";
    os << "bound=" << bound.to_text() << "\n";
    os << "ok=" << (ok ? 1 : 0) << "\n";
    return os.str();
}

WronskianReport wronskian_bound_check(const MultSpec& spec, const std::vector<Poly>& polys) {
    const Field& F = *spec.field;
    size_t r = polys.size();
    if (r == 0 || r > spec.s) throw ParameterViolationError("need 1 <= r <= s polynomials");
    for (const auto& f : polys)
        if (f.deg() >= static_cast<int>(spec.k))
            throw DegreeTooLargeError("polynomial degree exceeds the code bound");
    // linear independence of the coefficient vectors
    Matrix coef(F, r, spec.k);
    for (size_t i = 0; i < r; ++i)
        for (uint32_t j = 0; j < spec.k; ++j) coef.at(i, j) = polys[i].coeff(j);
    {
        // rank via the nullspace of the transpose: dependent iff some
        // combination of the rows vanishes
        Matrix tr(F, spec.k, r);
        for (size_t i = 0; i < r; ++i)
            for (uint32_t j = 0; j < spec.k; ++j) tr.at(j, i) = coef.at(i, j);
        AffineSpace null = solve_affine(tr, std::vector<Fel>(spec.k, 0));
        if (null.dim() > 0) throw LinearlyDependentError("input polynomials are dependent");
    }

    std::vector<std::vector<Poly>> w(r, std::vector<Poly>(r, Poly(F)));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) w[i][j] = polys[j].hasse(static_cast<uint32_t>(i));
    Poly det = poly_matrix_det(F, w);

    WronskianReport rep;
    rep.det_nonzero = !det.is_zero();
    rep.det_degree = det.deg();
    rep.bound = Rational(static_cast<long long>(r) * spec.k,
                         static_cast<long long>(spec.s) - static_cast<long long>(r) + 1);
    for (size_t i = 0; i < spec.n(); ++i) {
        // lambda combinations whose combined polynomial has a full-order
        // zero block at point i
        Matrix sys(F, spec.s, r);
        for (uint32_t l = 0; l < spec.s; ++l)
            for (size_t j = 0; j < r; ++j) sys.at(l, j) = polys[j].hasse(l).eval(spec.points[i]);
        AffineSpace null = solve_affine(sys, std::vector<Fel>(spec.s, 0));
        rep.per_point_dims.push_back(null.dim());
        rep.dim_sum += static_cast<long long>(null.dim());
    }
    rep.ok = rep.det_nonzero && Rational(rep.dim_sum) <= rep.bound;
    return rep;
}

}  // namespace polydec
