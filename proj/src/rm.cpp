#include "polydec/rm.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace polydec {

RMSpec::RMSpec(const Field& f, uint32_t variables, uint32_t degree_bound)
    : field(&f), m(variables), k(degree_bound) {
    if (m < 1) throw ParameterViolationError("need at least one variable");
    if (k < 1 || k >= f.size()) throw ParameterViolationError("need 1 <= k < q");
}

uint64_t RMSpec::block_length() const {
    uint64_t total = 1;
    for (uint32_t i = 0; i < m; ++i) total *= field->size();
    return total;
}

void MPoly::set(const std::vector<uint32_t>& exp, Fel c) {
    if (exp.size() != m_) throw DimensionMismatchError("exponent arity mismatch");
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

Fel MPoly::get(const std::vector<uint32_t>& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

int MPoly::total_deg() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int w = 0;
        for (uint32_t x : e) w += static_cast<int>(x);
        d = std::max(d, w);
    }
    return d;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly out(*f_, m_);
    out.terms_ = terms_;
    for (const auto& [e, c] : o.terms_) {
        Fel v = f_->add(out.get(e), c);
        out.set(e, v);
    }
    return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly out(*f_, m_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<uint32_t> e(m_);
            for (uint32_t i = 0; i < m_; ++i) e[i] = e1[i] + e2[i];
            out.set(e, f_->add(out.get(e), f_->mul(c1, c2)));
        }
    return out;
}

Fel MPoly::eval(const std::vector<Fel>& point) const {
    Fel acc = 0;
    for (const auto& [e, c] : terms_) {
        Fel term = c;
        for (uint32_t i = 0; i < m_; ++i)
            if (e[i]) term = f_->mul(term, f_->pow(point[i], e[i]));
        acc = f_->add(acc, term);
    }
    return acc;
}

MPoly MPoly::hasse(const std::vector<uint32_t>& order) const {
    uint64_t p = f_->characteristic();
    MPoly out(*f_, m_);
    for (const auto& [e, c] : terms_) {
        uint64_t bin = 1;
        std::vector<uint32_t> ne(m_);
        bool ok = true;
        for (uint32_t i = 0; i < m_ && ok; ++i) {
            if (e[i] < order[i]) {
                ok = false;
                break;
            }
            bin = (bin * binom_mod_p(e[i], order[i], p)) % p;
            ne[i] = e[i] - order[i];
        }
        if (!ok || bin == 0) continue;
        out.set(ne, f_->add(out.get(ne), f_->mul(c, f_->scalar(bin))));
    }
    return out;
}

namespace {

void enum_exponents(uint32_t m, uint32_t weight, std::vector<uint32_t>& cur, uint32_t pos,
                    std::vector<std::vector<uint32_t>>& out) {
    if (pos + 1 == m) {
        cur[pos] = weight;
        out.push_back(cur);
        return;
    }
    for (uint32_t w = 0; w <= weight; ++w) {
        cur[pos] = w;
        enum_exponents(m, weight - w, cur, pos + 1, out);
    }
}

std::vector<std::vector<uint32_t>> exponents_of_weight(uint32_t m, uint32_t weight) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> cur(m);
    enum_exponents(m, weight, cur, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

int MPoly::multiplicity_at(const std::vector<Fel>& point, int cap) const {
    for (int s = 0; s < cap; ++s) {
        for (const auto& e : exponents_of_weight(m_, static_cast<uint32_t>(s)))
            if (hasse(e).eval(point) != 0) return s;
    }
    return cap;
}

Poly MPoly::restrict_line(const std::vector<Fel>& a, const std::vector<Fel>& u) const {
    bool zero_dir = std::all_of(u.begin(), u.end(), [](Fel x) { return x == 0; });
    if (zero_dir) throw ZeroDirectionError("line direction is zero");
    Poly acc(*f_);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(*f_, c);
        for (uint32_t i = 0; i < m_; ++i) {
            if (e[i] == 0) continue;
            Poly lin(*f_, {a[i], u[i]});  // a_i + u_i T
            for (uint32_t t = 0; t < e[i]; ++t) term = term * lin;
        }
        acc = acc + term;
    }
    return acc;
}

MPoly MPoly::random(const Field& f, uint32_t m, uint32_t degree_bound, Rng& rng) {
    MPoly out(f, m);
    for (uint32_t w = 0; w < degree_bound; ++w)
        for (const auto& e : exponents_of_weight(m, w))
            out.set(e, static_cast<Fel>(rng.below(f.size())));
    return out;
}

std::vector<Fel> rm_point_at(const RMSpec& spec, uint64_t index) {
    uint64_t q = spec.field->size();
    std::vector<Fel> pt(spec.m);
    for (uint32_t i = spec.m; i-- > 0;) {
        pt[i] = static_cast<Fel>(index % q);
        index /= q;
    }
    return pt;
}

uint64_t rm_index_of(const RMSpec& spec, const std::vector<Fel>& point) {
    uint64_t q = spec.field->size(), idx = 0;
    for (uint32_t i = 0; i < spec.m; ++i) idx = idx * q + point[i];
    return idx;
}

std::vector<Fel> rm_encode(const RMSpec& spec, const MPoly& f) {
    if (f.total_deg() >= static_cast<int>(spec.k))
        throw DegreeTooLargeError("polynomial degree exceeds the code bound");
    uint64_t total = spec.block_length();
    std::vector<Fel> table(total);
    for (uint64_t idx = 0; idx < total; ++idx) table[idx] = f.eval(rm_point_at(spec, idx));
    return table;
}

WordOracle make_table_oracle(const RMSpec& spec, std::vector<Fel> table) {
    if (table.size() != spec.block_length())
        throw DimensionMismatchError("table length != q^m");
    const RMSpec s = spec;
    return WordOracle(*spec.field, spec.m, [s, tab = std::move(table)](const std::vector<Fel>& p) {
        return tab[rm_index_of(s, p)];
    });
}

WordOracle make_planted_oracle(const RMSpec& spec, const MPoly& planted,
                               const RMCorruption& corruption, uint64_t seed) {
    const RMSpec s = spec;
    const Field& F = *spec.field;
    uint64_t q = F.size();

    std::map<uint64_t, Fel> overrides;
    switch (corruption.kind) {
        case RMCorruption::Kind::None:
        case RMCorruption::Kind::Rate:
            break;
        case RMCorruption::Kind::Count: {
            // distinct corrupted positions drawn without replacement
            Rng rng(split_seed(seed, 0x706f73));
            std::set<uint64_t> picked;
            while (picked.size() < corruption.count)
                picked.insert(rng.below(spec.block_length()));
            for (uint64_t idx : picked) {
                Fel truth = planted.eval(rm_point_at(spec, idx));
                Fel off = static_cast<Fel>(1 + rng.below(q - 1));
                overrides[idx] = F.add(truth, off);
            }
            break;
        }
        case RMCorruption::Kind::Explicit:
            for (const auto& [idx, sym] : corruption.overrides) overrides[idx] = sym;
            break;
    }

    double rate = corruption.rate;
    bool use_rate = corruption.kind == RMCorruption::Kind::Rate;
    return WordOracle(F, spec.m, [s, planted, overrides = std::move(overrides), use_rate, rate,
                                  seed, q, &F](const std::vector<Fel>& p) {
        uint64_t idx = rm_index_of(s, p);
        if (use_rate) {
            // per-point pseudorandom corruption, stable across queries
            uint64_t h = split_seed(seed, idx);
            double unit = static_cast<double>(h >> 11) * 0x1.0p-53;
            Fel truth = planted.eval(p);
            if (unit < rate) {
                uint64_t h2 = split_seed(seed ^ 0x5eedULL, idx);
                return F.add(truth, static_cast<Fel>(1 + h2 % (q - 1)));
            }
            return truth;
        }
        auto it = overrides.find(idx);
        if (it != overrides.end()) return it->second;
        return planted.eval(p);
    });
}

std::vector<std::vector<uint32_t>> derivative_index_set(uint32_t m, uint32_t s) {
    std::vector<std::vector<uint32_t>> out;
    for (uint32_t w = 0; w < s; ++w) {
        auto block = exponents_of_weight(m, w);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::vector<Fel> restrict_block(const Field& f, const std::vector<std::vector<uint32_t>>& index_set,
                                const std::vector<Fel>& v, const std::vector<Fel>& u, uint32_t s) {
    std::vector<Fel> out(s, 0);
    for (size_t t = 0; t < index_set.size(); ++t) {
        const auto& e = index_set[t];
        uint32_t w = 0;
        Fel mono = f.one();
        for (size_t i = 0; i < e.size(); ++i) {
            w += e[i];
            if (e[i]) mono = f.mul(mono, f.pow(u[i], e[i]));
        }
        out[w] = f.add(out[w], f.mul(v[t], mono));
    }
    return out;
}

namespace {

std::vector<Fel> all_field_points(const Field& f) {
    std::vector<Fel> pts(f.size());
    for (uint64_t i = 0; i < f.size(); ++i) pts[i] = static_cast<Fel>(i);
    return pts;
}

// w restricted to the line a + T u, T running over the field in canonical
// order; exactly q oracle queries
std::vector<Fel> fetch_line(const RMSpec& spec, const WordOracle& oracle,
                            const std::vector<Fel>& a, const std::vector<Fel>& u) {
    const Field& F = *spec.field;
    std::vector<Fel> w(F.size());
    std::vector<Fel> pt(spec.m);
    for (uint64_t t = 0; t < F.size(); ++t) {
        for (uint32_t i = 0; i < spec.m; ++i)
            pt[i] = F.add(a[i], F.mul(static_cast<Fel>(t), u[i]));
        w[t] = oracle.query(pt);
    }
    return w;
}

std::vector<Fel> random_point(const RMSpec& spec, Rng& rng) {
    std::vector<Fel> p(spec.m);
    for (auto& x : p) x = static_cast<Fel>(rng.below(spec.field->size()));
    return p;
}

int line_threshold(const RMSpec& spec, double blowup) {
    double q = static_cast<double>(spec.field->size());
    return static_cast<int>(std::ceil(q * std::sqrt(blowup * (1.0 - spec.k / q))));
}

}  // namespace

std::optional<Fel> rm_local_correct(const RMSpec& spec, const WordOracle& oracle,
                                    const std::vector<Fel>& a, uint64_t seed) {
    const Field& F = *spec.field;
    Rng rng(seed);
    std::vector<Fel> b = random_point(spec, rng);
    while (b == a) b = random_point(spec, rng);
    std::vector<Fel> dir(spec.m);
    for (uint32_t i = 0; i < spec.m; ++i) dir[i] = F.sub(b[i], a[i]);
    std::vector<Fel> w = fetch_line(spec, oracle, a, dir);
    RSSpec line(F, all_field_points(F), spec.k);
    DecodeOutcome out = rs_unique_decode(line, w);
    if (out.entries.empty()) return std::nullopt;
    // the decoder's threshold is ceil((q + k)/2) = ceil((1 - delta/2) q)
    return out.entries[0].message.coeff(0);
}

std::vector<LocalAdvice> rm_local_list(const RMSpec& spec, const WordOracle& oracle, double sigma,
                                       double xi, uint64_t seed) {
    (void)oracle;
    Rng rng(seed);
    std::vector<Fel> b = random_point(spec, rng);
    std::vector<LocalAdvice> out;
    for (uint64_t v = 0; v < spec.field->size(); ++v) {
        LocalAdvice adv;
        adv.anchor = b;
        adv.guess = {static_cast<Fel>(v)};
        adv.s = 1;
        adv.sigma = sigma;
        adv.xi = xi;
        out.push_back(std::move(adv));
    }
    return out;
}

std::optional<Fel> run_local_algorithm(const RMSpec& spec, const WordOracle& oracle,
                                       const LocalAdvice& advice, const std::vector<Fel>& a) {
    const Field& F = *spec.field;
    if (a == advice.anchor) return std::nullopt;
    std::vector<Fel> dir(spec.m);
    for (uint32_t i = 0; i < spec.m; ++i) dir[i] = F.sub(advice.anchor[i], a[i]);
    std::vector<Fel> w = fetch_line(spec, oracle, a, dir);
    RSSpec line(F, all_field_points(F), spec.k);
    double blowup = advice.s > 1 ? 1.0 + advice.gamma : advice.sigma;
    int t = line_threshold(spec, blowup);
    DecodeOutcome out = rs_gs_decode(line, w, std::nullopt, t);

    std::optional<Poly> unique;
    auto index_set = derivative_index_set(spec.m, advice.s);
    for (const auto& e : out.entries) {
        bool matches;
        if (advice.s == 1) {
            matches = e.message.eval(F.one()) == advice.guess[0];
        } else {
            std::vector<Fel> want = restrict_block(F, index_set, advice.guess, dir, advice.s);
            matches = e.message.hasse_block(F.one(), advice.s) == want;
        }
        if (matches) {
            if (unique) return std::nullopt;  // ambiguous
            unique = e.message;
        }
    }
    if (!unique) return std::nullopt;
    return unique->coeff(0);
}

uint32_t johnson_direction_count(const RMSpec& spec, uint32_t s, double gamma) {
    double q = static_cast<double>(spec.field->size());
    double delta = 1.0 - spec.k / q;
    double r = std::ceil(8.0 * delta * s / (gamma * (1.0 - delta)));
    // a direction set larger than the field is impossible at desk scale
    return static_cast<uint32_t>(std::min(r, q));
}

std::vector<LocalAdvice> rm_local_list_johnson(const RMSpec& spec, const WordOracle& oracle,
                                               uint32_t s, double gamma, double xi, uint64_t seed,
                                               uint64_t work_cap) {
    const Field& F = *spec.field;
    uint64_t q = F.size();
    uint32_t r = johnson_direction_count(spec, s, gamma);
    Rng rng(seed);
    std::vector<Fel> b = random_point(spec, rng);
    int t = line_threshold(spec, 1.0 + gamma);
    RSSpec line(F, all_field_points(F), spec.k);

    // direction offsets: all of U^m for U = the first r field elements
    uint64_t dirs = 1;
    for (uint32_t i = 0; i < spec.m; ++i) dirs *= r;

    std::vector<Fel> u0;
    for (;;) {
        u0 = random_point(spec, rng);
        bool zero_hit = false;
        for (uint64_t di = 0; di < dirs && !zero_hit; ++di) {
            uint64_t x = di;
            bool all_zero = true;
            for (uint32_t i = 0; i < spec.m; ++i) {
                Fel u = static_cast<Fel>(x % r);
                x /= r;
                if (F.add(u0[i], u) != 0) all_zero = false;
            }
            zero_hit = all_zero;
        }
        if (!zero_hit) break;
    }

    // decoded derivative blocks per direction
    std::vector<std::vector<Fel>> directions;
    std::vector<std::vector<std::vector<Fel>>> blocks;  // per direction, list of s-blocks
    for (uint64_t di = 0; di < dirs; ++di) {
        uint64_t x = di;
        std::vector<Fel> dir(spec.m);
        for (uint32_t i = 0; i < spec.m; ++i) {
            dir[i] = F.add(u0[i], static_cast<Fel>(x % r));
            x /= r;
        }
        std::vector<Fel> w = fetch_line(spec, oracle, b, dir);
        DecodeOutcome out = rs_gs_decode(line, w, std::nullopt, t);
        std::vector<std::vector<Fel>> sblocks;
        for (const auto& e : out.entries) {
            std::vector<Fel> blk(s);
            for (uint32_t i = 0; i < s; ++i) blk[i] = e.message.coeff(i);
            sblocks.push_back(std::move(blk));
        }
        directions.push_back(std::move(dir));
        blocks.push_back(std::move(sblocks));
    }

    // assemble candidate blocks order by order, then filter jointly
    auto index_set = derivative_index_set(spec.m, s);
    std::vector<std::vector<std::vector<Fel>>> per_order;  // per order, surviving components
    size_t offset = 0;
    for (uint32_t ord = 0; ord < s; ++ord) {
        size_t width = exponents_of_weight(spec.m, ord).size();
        uint64_t candidates = 1;
        for (size_t i = 0; i < width; ++i) {
            candidates *= q;
            if (candidates > work_cap)
                throw AdviceSpaceTooLargeError("too many candidate derivative components");
        }
        std::vector<std::vector<Fel>> keep;
        for (uint64_t ci = 0; ci < candidates; ++ci) {
            std::vector<Fel> comp(width);
            uint64_t x = ci;
            for (size_t i = 0; i < width; ++i) {
                comp[i] = static_cast<Fel>(x % q);
                x /= q;
            }
            size_t hits = 0;
            for (uint64_t di = 0; di < dirs; ++di) {
                Fel val = 0;
                for (size_t i = 0; i < width; ++i) {
                    Fel mono = F.one();
                    const auto& e = index_set[offset + i];
                    for (uint32_t xi2 = 0; xi2 < spec.m; ++xi2)
                        if (e[xi2]) mono = F.mul(mono, F.pow(directions[di][xi2], e[xi2]));
                    val = F.add(val, F.mul(comp[i], mono));
                }
                for (const auto& blk : blocks[di])
                    if (blk[ord] == val) {
                        ++hits;
                        break;
                    }
            }
            if (2 * hits >= dirs) keep.push_back(std::move(comp));
        }
        per_order.push_back(std::move(keep));
        offset += width;
    }

    uint64_t combos = 1;
    for (const auto& po : per_order) {
        combos *= std::max<size_t>(po.size(), 1);
        if (combos > work_cap) throw AdviceSpaceTooLargeError("too many advice combinations");
    }

    std::vector<LocalAdvice> out;
    std::vector<size_t> pick(s, 0);
    bool any_empty = std::any_of(per_order.begin(), per_order.end(),
                                 [](const auto& po) { return po.empty(); });
    if (any_empty) return out;
    for (;;) {
        std::vector<Fel> v;
        for (uint32_t ord = 0; ord < s; ++ord)
            v.insert(v.end(), per_order[ord][pick[ord]].begin(), per_order[ord][pick[ord]].end());
        // joint majority filter on the full block
        size_t hits = 0;
        for (uint64_t di = 0; di < dirs; ++di) {
            auto want = restrict_block(F, index_set, v, directions[di], s);
            for (const auto& blk : blocks[di])
                if (blk == want) {
                    ++hits;
                    break;
                }
        }
        if (2 * hits >= dirs) {
            LocalAdvice adv;
            adv.anchor = b;
            adv.guess = std::move(v);
            adv.s = s;
            adv.gamma = gamma;
            adv.xi = xi;
            out.push_back(std::move(adv));
        }
        // advance the odometer
        uint32_t ord = 0;
        while (ord < s) {
            if (++pick[ord] < per_order[ord].size()) break;
            pick[ord] = 0;
            ++ord;
        }
        if (ord == s) break;
    }
    return out;
}

std::string LocalStats::report() const {
    std::ostringstream os;
    os << "trials=" << trials << "\n";
    os << "success_rate=" << success_rate << "\n";
    os << "advice_hit_rate=" << advice_hit_rate << "\n";
    os << "mean_list_size=" << mean_list_size << "\n";
    os << "mean_queries=" << mean_queries << "\n";
    os << "max_queries=" << max_queries << "\n";
    return os.str();
}

LocalStats estimate_local_success(const RMSpec& spec, LocalDecoderKind kind, const MPoly& planted,
                                  const RMCorruption& corruption, int trials, uint64_t seed,
                                  const LocalHarnessParams& params) {
    const Field& F = *spec.field;
    LocalStats stats;
    stats.trials = trials;
    uint64_t q = F.size();
    double success_acc = 0, advice_acc = 0, query_acc = 0, list_acc = 0;
    uint64_t query_events = 0;

    for (int trial = 0; trial < trials; ++trial) {
        uint64_t tseed = split_seed(seed, trial);
        WordOracle oracle = make_planted_oracle(spec, planted, corruption, split_seed(tseed, 1));
        Rng rng(split_seed(tseed, 2));

        switch (kind) {
            case LocalDecoderKind::Correct: {
                std::vector<Fel> a = random_point(spec, rng);
                oracle.reset_queries();
                auto got = rm_local_correct(spec, oracle, a, split_seed(tseed, 3));
                success_acc += (got && *got == planted.eval(a)) ? 1.0 : 0.0;
                query_acc += static_cast<double>(oracle.queries());
                stats.max_queries = std::max(stats.max_queries, oracle.queries());
                ++query_events;
                break;
            }
            case LocalDecoderKind::ListBasic: {
                // evaluate the advice carrying the planted value over every
                // point of the domain
                std::vector<Fel> b = random_point(spec, rng);
                LocalAdvice adv;
                adv.anchor = b;
                adv.guess = {planted.eval(b)};
                adv.s = 1;
                adv.sigma = params.sigma;
                adv.xi = params.xi;
                advice_acc += 1.0;
                uint64_t good = 0;
                for (uint64_t idx = 0; idx < spec.block_length(); ++idx) {
                    std::vector<Fel> a = rm_point_at(spec, idx);
                    if (a == b) {
                        ++good;  // the anchor value is the advice itself
                        continue;
                    }
                    oracle.reset_queries();
                    auto got = run_local_algorithm(spec, oracle, adv, a);
                    query_acc += static_cast<double>(oracle.queries());
                    stats.max_queries = std::max(stats.max_queries, oracle.queries());
                    ++query_events;
                    if (got && *got == planted.eval(a)) ++good;
                }
                success_acc += static_cast<double>(good) / static_cast<double>(spec.block_length());
                break;
            }
            case LocalDecoderKind::ListJohnson: {
                oracle.reset_queries();
                auto advs = rm_local_list_johnson(spec, oracle, params.s, params.gamma, params.xi,
                                                  split_seed(tseed, 3));
                query_acc += static_cast<double>(oracle.queries());
                stats.max_queries = std::max(stats.max_queries, oracle.queries());
                ++query_events;
                list_acc += static_cast<double>(advs.size());
                // true derivative block at the shared anchor
                if (!advs.empty()) {
                    auto index_set = derivative_index_set(spec.m, params.s);
                    std::vector<Fel> truth;
                    for (const auto& e : index_set)
                        truth.push_back(planted.hasse(e).eval(advs[0].anchor));
                    bool hit = std::any_of(advs.begin(), advs.end(),
                                           [&](const LocalAdvice& a) { return a.guess == truth; });
                    advice_acc += hit ? 1.0 : 0.0;
                    success_acc += hit ? 1.0 : 0.0;
                }
                break;
            }
            case LocalDecoderKind::Composed: {
                std::vector<Fel> b = random_point(spec, rng);
                LocalAdvice adv;
                adv.anchor = b;
                adv.guess = {planted.eval(b)};
                adv.s = 1;
                adv.sigma = params.sigma;
                adv.xi = params.xi;
                // inner approximate decoder exposed as a word oracle; failed
                // inner decodes answer with the zero symbol
                WordOracle inner(F, spec.m, [&](const std::vector<Fel>& p) {
                    auto got = run_local_algorithm(spec, oracle, adv, p);
                    return got ? *got : F.zero();
                });
                std::vector<Fel> a = random_point(spec, rng);
                oracle.reset_queries();
                auto got = rm_local_correct(spec, inner, a, split_seed(tseed, 4));
                success_acc += (got && *got == planted.eval(a)) ? 1.0 : 0.0;
                query_acc += static_cast<double>(oracle.queries());
                stats.max_queries = std::max(stats.max_queries, oracle.queries());
                ++query_events;
                break;
            }
        }
    }

    stats.success_rate = trials ? success_acc / trials : 0.0;
    stats.advice_hit_rate = trials ? advice_acc / trials : 0.0;
    stats.mean_list_size = trials ? list_acc / trials : 0.0;
    stats.mean_queries = query_events ? query_acc / static_cast<double>(query_events) : 0.0;
    (void)q;
    return stats;
}

}  // namespace polydec
