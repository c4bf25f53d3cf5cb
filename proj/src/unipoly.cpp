#include "polydec/unipoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace polydec {

namespace {

struct FactTables {
    std::vector<uint64_t> fact, inv_fact;
};

// factorial tables per prime, built lazily
const FactTables& tables_for(uint64_t p) {
    static std::map<uint64_t, FactTables> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    FactTables t;
    t.fact.resize(p);
    t.inv_fact.resize(p);
    t.fact[0] = 1;
    for (uint64_t i = 1; i < p; ++i)
        t.fact[i] = static_cast<uint64_t>((static_cast<unsigned __int128>(t.fact[i - 1]) * i) % p);
    // inverse factorials via Fermat on the top value, then descend
    uint64_t inv = 1, base = t.fact[p - 1], e = p - 2;
    while (e) {
        if (e & 1) inv = static_cast<uint64_t>((static_cast<unsigned __int128>(inv) * base) % p);
        base = static_cast<uint64_t>((static_cast<unsigned __int128>(base) * base) % p);
        e >>= 1;
    }
    t.inv_fact[p - 1] = inv;
    for (uint64_t i = p - 1; i > 0; --i)
        t.inv_fact[i - 1] =
            static_cast<uint64_t>((static_cast<unsigned __int128>(t.inv_fact[i]) * i) % p);
    return cache.emplace(p, std::move(t)).first->second;
}

uint64_t binom_small(uint64_t n, uint64_t k, uint64_t p, const FactTables& t) {
    if (k > n) return 0;
    unsigned __int128 r = t.fact[n];
    r = (r * t.inv_fact[k]) % p;
    r = (r * t.inv_fact[n - k]) % p;
    return static_cast<uint64_t>(r);
}

constexpr int kKaratsubaCutoff = 64;

std::vector<Fel> school_mul(const Field& F, const std::vector<Fel>& a, const std::vector<Fel>& b) {
    std::vector<Fel> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j]) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return out;
}

std::vector<Fel> kara_mul(const Field& F, std::vector<Fel> a, std::vector<Fel> b) {
    if (static_cast<int>(std::min(a.size(), b.size())) <= kKaratsubaCutoff)
        return school_mul(F, a, b);
    size_t h = (std::max(a.size(), b.size()) + 1) / 2;
    a.resize(std::max(a.size(), 2 * h), 0);
    b.resize(std::max(b.size(), 2 * h), 0);
    std::vector<Fel> a0(a.begin(), a.begin() + h), a1(a.begin() + h, a.end());
    std::vector<Fel> b0(b.begin(), b.begin() + h), b1(b.begin() + h, b.end());
    auto z0 = kara_mul(F, a0, b0);
    auto z2 = kara_mul(F, a1, b1);
    std::vector<Fel> as(h, 0), bs(h, 0);
    for (size_t i = 0; i < h; ++i) {
        as[i] = F.add(a0[i], i < a1.size() ? a1[i] : 0);
        bs[i] = F.add(b0[i], i < b1.size() ? b1[i] : 0);
    }
    auto z1 = kara_mul(F, as, bs);
    z1.resize(std::max({z1.size(), z0.size(), z2.size()}), 0);
    for (size_t i = 0; i < z1.size(); ++i) {
        Fel v = z1[i];
        if (i < z0.size()) v = F.sub(v, z0[i]);
        if (i < z2.size()) v = F.sub(v, z2[i]);
        z1[i] = v;
    }
    std::vector<Fel> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < z0.size() && i < out.size(); ++i) out[i] = F.add(out[i], z0[i]);
    for (size_t i = 0; i < z1.size() && i + h < out.size(); ++i)
        out[i + h] = F.add(out[i + h], z1[i]);
    for (size_t i = 0; i < z2.size() && i + 2 * h < out.size(); ++i)
        out[i + 2 * h] = F.add(out[i + 2 * h], z2[i]);
    return out;
}

}  // namespace

uint32_t binom_mod_p(uint64_t n, uint64_t k, uint64_t p) {
    if (k > n) return 0;
    const FactTables& t = tables_for(p);
    uint64_t r = 1;
    while (n || k) {
        uint64_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        r = static_cast<uint64_t>(
            (static_cast<unsigned __int128>(r) * binom_small(nd, kd, p, t)) % p);
        n /= p;
        k /= p;
    }
    return static_cast<uint32_t>(r);
}

Poly Poly::monomial(const Field& f, uint32_t e, Fel c) {
    if (c == 0) return Poly(f);
    std::vector<Fel> v(e + 1, 0);
    v[e] = c;
    return Poly(f, std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
    check_field(o);
    std::vector<Fel> v(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = f_->add(coeff(i), o.coeff(i));
    return Poly(*f_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    check_field(o);
    std::vector<Fel> v(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = f_->sub(coeff(i), o.coeff(i));
    return Poly(*f_, std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Fel> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = f_->neg(c_[i]);
    return Poly(*f_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    check_field(o);
    if (is_zero() || o.is_zero()) return Poly(*f_);
    return Poly(*f_, kara_mul(*f_, c_, o.c_));
}

Poly Poly::scale(Fel c) const {
    if (c == 0) return Poly(*f_);
    std::vector<Fel> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = f_->mul(c_[i], c);
    return Poly(*f_, std::move(v));
}

Poly Poly::shift_up(uint32_t k) const {
    if (is_zero()) return *this;
    std::vector<Fel> v(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), v.begin() + k);
    return Poly(*f_, std::move(v));
}

Poly Poly::mod_xpow(uint32_t k) const {
    if (c_.size() <= k) return *this;
    return Poly(*f_, std::vector<Fel>(c_.begin(), c_.begin() + k));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& g) const {
    check_field(g);
    if (g.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (deg() < g.deg()) return {Poly(*f_), *this};
    std::vector<Fel> rem = c_;
    std::vector<Fel> quo(deg() - g.deg() + 1, 0);
    Fel lead_inv = f_->inv(g.lead());
    for (size_t i = rem.size(); i-- > 0 && static_cast<int>(i) >= g.deg();) {
        Fel c = f_->mul(rem[i], lead_inv);
        if (c == 0) continue;
        size_t shift = i - g.deg();
        quo[shift] = c;
        for (int j = 0; j <= g.deg(); ++j)
            rem[shift + j] = f_->sub(rem[shift + j], f_->mul(c, g.coeff(j)));
    }
    return {Poly(*f_, std::move(quo)), Poly(*f_, std::move(rem))};
}

Poly Poly::gcd(const Poly& o) const {
    check_field(o);
    Poly a = *this, b = o;
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = a.scale(f_->inv(a.lead()));
    return a;
}

Fel Poly::eval(Fel a) const {
    Fel acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, a), c_[i]);
    return acc;
}

std::vector<Fel> Poly::eval_many(const std::vector<Fel>& pts) const {
    std::vector<Fel> out(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) out[i] = eval(pts[i]);
    return out;
}

Poly Poly::taylor_shift(Fel a) const {
    // divided-difference style: repeatedly divide by (X - (-a))... we use the
    // synthetic-division form: f(X + a) coefficients are the successive
    // remainders of division by (X - (-a))? Simpler: c_j' = sum_i c_i C(i,j) a^{i-j}
    if (a == 0 || is_zero()) return *this;
    size_t n = c_.size();
    // Horner-style: process from the top, multiplying the running polynomial
    // by (X + a) and adding the next coefficient
    std::vector<Fel> out;
    out.reserve(n);
    for (size_t i = n; i-- > 0;) {
        // out := out * (X + a) + c_i
        out.push_back(0);
        for (size_t j = out.size(); j-- > 1;)
            out[j] = f_->add(out[j - 1], f_->mul(out[j], a));
        out[0] = f_->mul(out[0], a);
        out[0] = f_->add(out[0], c_[i]);
    }
    return Poly(*f_, std::move(out));
}

Poly Poly::hasse(uint32_t i) const {
    if (i == 0) return *this;
    if (static_cast<int>(i) > deg()) return Poly(*f_);
    uint64_t p = f_->characteristic();
    std::vector<Fel> v(c_.size() - i, 0);
    for (size_t n = i; n < c_.size(); ++n) {
        uint32_t b = binom_mod_p(n, i, p);
        if (b && c_[n]) v[n - i] = f_->mul(c_[n], f_->scalar(b));
    }
    return Poly(*f_, std::move(v));
}

std::vector<Fel> Poly::hasse_block(Fel a, uint32_t s) const {
    Poly shifted = taylor_shift(a);
    std::vector<Fel> out(s, 0);
    for (uint32_t i = 0; i < s; ++i) out[i] = shifted.coeff(i);
    return out;
}

int Poly::multiplicity_at(Fel a) const {
    if (is_zero()) return kInfiniteMultiplicity;
    Poly shifted = taylor_shift(a);
    int s = 0;
    while (shifted.coeff(s) == 0) ++s;
    return s;
}

Poly Poly::interpolate(const Field& f, const std::vector<Fel>& points,
                       const std::vector<Fel>& values) {
    if (points.size() != values.size())
        throw DimensionMismatchError("interpolation point/value count mismatch");
    size_t n = points.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j]) throw DuplicatePointError("repeated interpolation point");
    // full product tree-free O(n^2) Lagrange: M(X) = prod (X - a_i), weights
    // w_i = 1 / prod_{j != i} (a_i - a_j), result = sum_i v_i w_i M/(X - a_i)
    Poly m = Poly::constant(f, f.one());
    for (size_t i = 0; i < n; ++i)
        m = m * Poly(f, {f.neg(points[i]), f.one()});
    Poly acc(f);
    for (size_t i = 0; i < n; ++i) {
        if (values[i] == 0) continue;
        Fel w = f.one();
        for (size_t j = 0; j < n; ++j)
            if (j != i) w = f.mul(w, f.sub(points[i], points[j]));
        Poly basis = m.divrem(Poly(f, {f.neg(points[i]), f.one()})).first;
        acc = acc + basis.scale(f.mul(values[i], f.inv(w)));
    }
    return acc;
}

std::string Poly::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ' ';
        os << f_->to_text(c_[i]);
    }
    return os.str();
}

Poly Poly::from_text(const Field& f, const std::string& s) {
    std::istringstream is(s);
    std::string tok;
    std::vector<Fel> v;
    while (is >> tok) v.push_back(f.from_text(tok));
    return Poly(f, std::move(v));
}

XgcdResult poly_xgcd(const Poly& a, const Poly& b) {
    const Field& F = a.field();
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::constant(F, F.one()), u1(F);
    Poly v0(F), v1 = Poly::constant(F, F.one());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        Poly nu = u0 - q * u1, nv = v0 - q * v1;
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = nu;
        v0 = v1;
        v1 = nv;
    }
    if (!r0.is_zero()) {
        Fel inv = F.inv(r0.lead());
        r0 = r0.scale(inv);
        u0 = u0.scale(inv);
        v0 = v0.scale(inv);
    }
    return {r0, u0, v0};
}

bool poly_lex_less(const Poly& a, const Poly& b) {
    size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    for (size_t i = 0; i < n; ++i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

}  // namespace polydec
