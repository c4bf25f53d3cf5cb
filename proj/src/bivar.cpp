#include "polydec/bivar.hpp"

#include <algorithm>

namespace polydec {

BiPoly BiPoly::from_terms(const Field& f, std::map<Exp, Fel> terms) {
    BiPoly q(f);
    for (auto& [e, c] : terms)
        if (c != 0) q.terms_.emplace(e, c);
    return q;
}

BiPoly BiPoly::y_minus(const Poly& f) {
    BiPoly q(f.field());
    q.set(0, 1, f.field().one());
    for (int i = 0; i <= f.deg(); ++i)
        q.set(static_cast<uint32_t>(i), 0, f.field().neg(f.coeff(i)));
    return q;
}

void BiPoly::set(uint32_t i, uint32_t j, Fel c) {
    if (c == 0)
        terms_.erase({i, j});
    else
        terms_[{i, j}] = c;
}

Fel BiPoly::get(uint32_t i, uint32_t j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? 0 : it->second;
}

int BiPoly::deg_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.first));
    return d;
}

int BiPoly::deg_y() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.second));
    return d;
}

int BiPoly::wdeg(uint32_t k) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.first + k * e.second));
    return d;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly q(*f_);
    q.terms_ = terms_;
    for (const auto& [e, c] : o.terms_) {
        Fel v = f_->add(q.get(e.first, e.second), c);
        q.set(e.first, e.second, v);
    }
    return q;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly q(*f_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp e{e1.first + e2.first, e1.second + e2.second};
            Fel v = f_->add(q.get(e.first, e.second), f_->mul(c1, c2));
            q.set(e.first, e.second, v);
        }
    return q;
}

BiPoly BiPoly::scale(Fel c) const {
    BiPoly q(*f_);
    if (c == 0) return q;
    for (const auto& [e, v] : terms_) q.terms_[e] = f_->mul(v, c);
    return q;
}

Fel BiPoly::eval(Fel x, Fel y) const {
    Fel acc = 0;
    for (const auto& [e, c] : terms_)
        acc = f_->add(acc, f_->mul(c, f_->mul(f_->pow(x, e.first), f_->pow(y, e.second))));
    return acc;
}

BiPoly BiPoly::hasse(uint32_t u, uint32_t v) const {
    uint64_t p = f_->characteristic();
    BiPoly q(*f_);
    for (const auto& [e, c] : terms_) {
        if (e.first < u || e.second < v) continue;
        uint32_t b = static_cast<uint32_t>(
            (static_cast<uint64_t>(binom_mod_p(e.first, u, p)) * binom_mod_p(e.second, v, p)) % p);
        if (b == 0) continue;
        Fel nv = f_->add(q.get(e.first - u, e.second - v), f_->mul(c, f_->scalar(b)));
        q.set(e.first - u, e.second - v, nv);
    }
    return q;
}

int BiPoly::multiplicity_at(Fel x, Fel y, int cap) const {
    for (int s = 0; s < cap; ++s) {
        for (int u = 0; u <= s; ++u) {
            if (hasse(u, s - u).eval(x, y) != 0) return s;
        }
    }
    return cap;
}

Poly BiPoly::substitute(const Poly& f) const {
    if (!f_->same(f.field())) throw FieldMismatchError("substitute: field mismatch");
    int dy = deg_y();
    if (dy < 0) return Poly(*f_);
    // Horner in Y with polynomial coefficients
    Poly acc = y_coeff(dy);
    for (int j = dy - 1; j >= 0; --j) acc = acc * f + y_coeff(j);
    return acc;
}

Poly BiPoly::y_coeff(uint32_t j) const {
    std::vector<Fel> v;
    for (const auto& [e, c] : terms_) {
        if (e.second != j) continue;
        if (v.size() <= e.first) v.resize(e.first + 1, 0);
        v[e.first] = c;
    }
    return Poly(*f_, std::move(v));
}

bool LinYPoly::is_zero() const {
    if (!a_.is_zero()) return false;
    for (const auto& b : b_)
        if (!b.is_zero()) return false;
    return true;
}

int LinYPoly::wdeg(uint32_t k) const {
    int d = a_.deg();
    for (const auto& b : b_)
        if (!b.is_zero()) d = std::max(d, b.deg() + static_cast<int>(k));
    return d;
}

Fel LinYPoly::eval(Fel x, const std::vector<Fel>& ys) const {
    const Field& F = field();
    Fel acc = a_.eval(x);
    for (size_t l = 0; l < b_.size(); ++l)
        acc = F.add(acc, F.mul(b_[l].eval(x), l < ys.size() ? ys[l] : 0));
    return acc;
}

Poly LinYPoly::substitute(const Poly& f) const {
    Poly acc = a_;
    for (size_t l = 0; l < b_.size(); ++l) {
        if (b_[l].is_zero()) continue;
        acc = acc + b_[l] * f.hasse(static_cast<uint32_t>(l));
    }
    return acc;
}

LinYPoly LinYPoly::tau(uint32_t j) const {
    if (j == 0) return *this;
    const Field& F = field();
    uint64_t p = F.characteristic();
    size_t r = b_.size();
    LinYPoly out(F, r + j);
    out.a() = a_.hasse(j);
    for (size_t l = 0; l < r; ++l) {
        if (b_[l].is_zero()) continue;
        for (uint32_t h = 0; h <= j; ++h) {
            uint32_t bin = binom_mod_p(h + l, l, p);
            if (bin == 0) continue;
            Poly term = b_[l].hasse(j - h).scale(F.scalar(bin));
            out.b(l + h) = out.b(l + h) + term;
        }
    }
    return out;
}

namespace {

// strip the largest power of X dividing q
BiPoly strip_x(const BiPoly& q) {
    uint32_t v = UINT32_MAX;
    for (const auto& [e, c] : q.terms()) v = std::min(v, e.first);
    if (v == 0 || q.is_zero()) return q;
    BiPoly out(q.field());
    for (const auto& [e, c] : q.terms()) out.set(e.first - v, e.second, c);
    return out;
}

// Q(X, X*Y + y0)
BiPoly shift_scale_y(const BiPoly& q, Fel y0) {
    const Field& F = q.field();
    uint64_t p = F.characteristic();
    BiPoly out(F);
    for (const auto& [e, c] : q.terms()) {
        // Y^j -> (X*Y + y0)^j = sum_t C(j,t) X^t Y^t y0^{j-t}
        for (uint32_t t = 0; t <= e.second; ++t) {
            uint32_t bin = binom_mod_p(e.second, t, p);
            if (bin == 0) continue;
            Fel coef = F.mul(c, F.mul(F.scalar(bin), F.pow(y0, e.second - t)));
            if (coef == 0) continue;
            Fel nv = F.add(out.get(e.first + t, t), coef);
            out.set(e.first + t, t, nv);
        }
    }
    return out;
}

void rr_recurse(const BiPoly& q, uint32_t k, uint32_t depth, std::vector<Fel>& prefix,
                std::vector<std::vector<Fel>>& candidates, size_t cand_cap) {
    if (candidates.size() >= cand_cap)
        throw Error("rr_roots: candidate count exceeded the branching bound");
    const Field& F = q.field();
    if (q.is_zero()) {
        // every completion works; record the zero completion and let the
        // verification pass keep it
        std::vector<Fel> c = prefix;
        c.resize(k, 0);
        candidates.push_back(std::move(c));
        return;
    }
    BiPoly qs = strip_x(q);
    // roots of Q(0, Y) by scanning the field
    Poly q0(F);
    {
        std::vector<Fel> v;
        for (const auto& [e, c] : qs.terms()) {
            if (e.first != 0) continue;
            if (v.size() <= e.second) v.resize(e.second + 1, 0);
            v[e.second] = c;
        }
        q0 = Poly(F, std::move(v));
    }
    for (uint64_t cand = 0; cand < F.size(); ++cand) {
        Fel y0 = static_cast<Fel>(cand);
        if (q0.eval(y0) != 0) continue;
        prefix.push_back(y0);
        if (depth + 1 == k) {
            candidates.push_back(prefix);
        } else {
            rr_recurse(shift_scale_y(qs, y0), k, depth + 1, prefix, candidates, cand_cap);
        }
        prefix.pop_back();
        if (candidates.size() >= cand_cap) return;
    }
}

}  // namespace

std::vector<Poly> rr_roots(const BiPoly& q, uint32_t k) {
    if (q.is_zero()) throw ZeroPolynomialError("rr_roots of the zero polynomial");
    const Field& F = q.field();
    std::vector<std::vector<Fel>> candidates;
    std::vector<Fel> prefix;
    // the candidate count before verification stays near deg_Y; a generous
    // cap turns any violation of that bound into a loud failure
    size_t cap = std::max<size_t>(4096, static_cast<size_t>(q.deg_y() + 1) * (k + 1));
    rr_recurse(q, k, 0, prefix, candidates, cap);
    std::vector<Poly> out;
    for (auto& c : candidates) {
        Poly f(F, std::move(c));
        if (f.deg() >= static_cast<int>(k)) continue;
        if (!q.substitute(f).is_zero()) continue;
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), poly_lex_less);
    return out;
}

}  // namespace polydec
