#include "polydec/lattice.hpp"

#include <algorithm>
#include <optional>

namespace polydec {

PolyLatticeBasis::PolyLatticeBasis(const Field& f, std::vector<std::vector<Poly>> columns)
    : field(&f), cols(std::move(columns)) {
    for (const auto& c : cols)
        if (c.size() != cols.size())
            throw DimensionMismatchError("lattice basis must be square");
}

int degree_norm(const std::vector<Poly>& v) {
    int d = -1;
    for (const auto& p : v) d = std::max(d, p.deg());
    return d;
}

namespace {

Poly poly_det(const Field& F, const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 0) return Poly::constant(F, F.one());
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
        Poly term = m[0][col] * poly_det(F, minor);
        det = (col % 2 == 0) ? det + term : det - term;
    }
    return det;
}

std::vector<std::vector<Poly>> as_rows(const PolyLatticeBasis& b) {
    size_t m = b.rank();
    std::vector<std::vector<Poly>> rows(m, std::vector<Poly>(m, Poly(*b.field)));
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < m; ++i) rows[i][j] = b.cols[j][i];
    return rows;
}

// pivot: the largest-degree entry, ties to the highest index
int pivot_index(const std::vector<Poly>& v) {
    int best = -1, bestdeg = -1;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].deg() >= bestdeg && !v[i].is_zero()) {
            bestdeg = v[i].deg();
            best = static_cast<int>(i);
        }
    }
    return best;
}

}  // namespace

Poly lattice_det(const PolyLatticeBasis& basis) { return poly_det(*basis.field, as_rows(basis)); }

bool lattice_member(const PolyLatticeBasis& basis, const std::vector<Poly>& v) {
    const Field& F = *basis.field;
    size_t m = basis.rank();
    if (v.size() != m) return false;
    Poly det = lattice_det(basis);
    if (det.is_zero()) throw SingularBasisError("basis is not full rank");
    // Cramer: g_j = det(basis with column j replaced by v) / det
    std::vector<Poly> g;
    for (size_t j = 0; j < m; ++j) {
        PolyLatticeBasis mod = basis;
        mod.cols[j] = v;
        auto [quot, rem] = poly_det(F, as_rows(mod)).divrem(det);
        if (!rem.is_zero()) return false;
        g.push_back(quot);
    }
    std::vector<Poly> recon(m, Poly(F));
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < m; ++i) recon[i] = recon[i] + g[j] * basis.cols[j][i];
    return recon == v;
}

std::vector<Poly> short_vector(const PolyLatticeBasis& basis) {
    const Field& F = *basis.field;
    size_t m = basis.rank();
    std::vector<std::vector<Poly>> cols = basis.cols;

    // Mulders-Storjohann: while two columns share a pivot row, cancel the
    // leading term of the larger against the smaller
    for (;;) {
        std::vector<int> piv(m);
        for (size_t j = 0; j < m; ++j) {
            piv[j] = pivot_index(cols[j]);
            if (piv[j] < 0) throw SingularBasisError("basis column reduced to zero");
        }
        bool changed = false;
        for (size_t j1 = 0; j1 < m && !changed; ++j1) {
            for (size_t j2 = 0; j2 < m && !changed; ++j2) {
                if (j1 == j2 || piv[j1] != piv[j2]) continue;
                size_t hi = j1, lo = j2;
                if (cols[hi][piv[j1]].deg() < cols[lo][piv[j2]].deg()) std::swap(hi, lo);
                const Poly& phi = cols[hi][piv[j1]];
                const Poly& plo = cols[lo][piv[j1]];
                Fel c = F.div(phi.lead(), plo.lead());
                uint32_t shift = static_cast<uint32_t>(phi.deg() - plo.deg());
                Poly factor = Poly::monomial(F, shift, c);
                for (size_t i = 0; i < m; ++i) cols[hi][i] = cols[hi][i] - factor * cols[lo][i];
                changed = true;
            }
        }
        if (!changed) break;
    }

    size_t best = 0;
    for (size_t j = 1; j < m; ++j)
        if (degree_norm(cols[j]) < degree_norm(cols[best])) best = j;
    return cols[best];
}

BiPoly fast_gs_interpolate(const RSSpec& spec, const std::vector<Fel>& w, uint32_t ell) {
    if (ell < 1) throw ParameterViolationError("interpolation multiplicity must be >= 1");
    const Field& F = *spec.field;
    size_t n = spec.n();
    if (w.size() != n) throw DimensionMismatchError("received word length != n");

    // rank m balancing the two degree contributions
    uint64_t x = static_cast<uint64_t>(n) * ell * (ell + 1);
    uint64_t m0 = isqrt_u64((x + spec.k - 1) / spec.k);
    while (m0 * m0 * spec.k < x) ++m0;
    size_t m = std::max<size_t>(m0 + 1, ell + 1);

    Poly r = Poly::interpolate(F, spec.points, w);
    Poly z = Poly::constant(F, F.one());
    for (Fel a : spec.points) z = z * Poly(F, {F.neg(a), F.one()});
    std::vector<Poly> zpow{Poly::constant(F, F.one())};
    for (uint32_t e = 1; e <= ell; ++e) zpow.push_back(zpow.back() * z);

    // substituted generators (Y X^k - R)^j [* Z^(ell-j) for j < ell], stored
    // as coefficient vectors in Y
    uint64_t p = F.characteristic();
    std::vector<Poly> rpow{Poly::constant(F, F.one())};
    for (size_t e = 1; e < m; ++e) rpow.push_back(rpow.back() * r);
    std::vector<std::vector<Poly>> cols;
    for (size_t j = 0; j < m; ++j) {
        std::vector<Poly> col(m, Poly(F));
        for (size_t t = 0; t <= j; ++t) {
            uint32_t bin = binom_mod_p(j, t, p);
            if (!bin) continue;
            Poly coef = rpow[j - t].scale(F.scalar(bin));
            if ((j - t) % 2 == 1) coef = -coef;
            col[t] = coef.shift_up(static_cast<uint32_t>(spec.k * t));
        }
        if (j < ell)
            for (size_t t = 0; t <= j; ++t) col[t] = col[t] * zpow[ell - j];
        cols.push_back(std::move(col));
    }

    std::vector<Poly> v = short_vector(PolyLatticeBasis(F, std::move(cols)));

    // undo the X^k substitution: the Y^t coefficient is divisible by X^(k t)
    BiPoly q(F);
    for (size_t t = 0; t < m; ++t) {
        if (v[t].is_zero()) continue;
        auto [quot, rem] = v[t].divrem(Poly::monomial(F, static_cast<uint32_t>(spec.k * t), F.one()));
        if (!rem.is_zero()) throw Error("internal: short vector escaped the weighted sublattice");
        for (int i = 0; i <= quot.deg(); ++i)
            if (quot.coeff(i)) q.set(static_cast<uint32_t>(i), static_cast<uint32_t>(t), quot.coeff(i));
    }
    if (q.is_zero()) throw Error("internal: short vector was zero");
    return q;
}

LinYPoly fast_mult_interpolate(const MultSpec& spec, const MultWord& w, uint32_t r) {
    const Field& F = *spec.field;
    if (r < 1 || r > spec.s) throw ParameterViolationError("need 1 <= r <= s");
    if (w.size() != spec.n()) throw DimensionMismatchError("received word block count != n");
    uint64_t p = F.characteristic();

    // Hermite carriers: R_l congruent to the local derivative expansion
    // modulo (X - a_i)^(s - l), combined by chinese remaindering
    std::vector<Poly> carriers;
    for (uint32_t l = 0; l < r; ++l) {
        Poly acc(F);
        Poly modulus = Poly::constant(F, F.one());
        uint32_t e = spec.s - l;
        for (size_t i = 0; i < spec.n(); ++i) {
            Fel a = spec.points[i];
            Poly shift_lin(F, {F.neg(a), F.one()});  // X - a
            Poly mi = Poly::constant(F, F.one());
            for (uint32_t t = 0; t < e; ++t) mi = mi * shift_lin;
            // local target sum_j C(l+j, j) w_{i, l+j} (X - a)^j
            Poly target(F);
            Poly pw = Poly::constant(F, F.one());
            for (uint32_t j = 0; j < e; ++j) {
                uint32_t bin = binom_mod_p(l + j, j, p);
                Fel c = F.mul(F.scalar(bin), w[i][l + j]);
                target = target + pw.scale(c);
                pw = pw * shift_lin;
            }
            if (i == 0) {
                acc = target.divrem(mi).second;
                modulus = mi;
                continue;
            }
            // acc' = acc + modulus * ((target - acc)/modulus mod mi)
            Poly delta = (target - acc).divrem(mi).second;
            XgcdResult x = poly_xgcd(modulus, mi);
            if (x.g.deg() != 0) throw Error("internal: carriers share a modulus factor");
            Poly lift = (delta * x.u).divrem(mi).second;
            acc = acc + modulus * lift;
            modulus = modulus * mi;
            acc = acc.divrem(modulus).second;
        }
        carriers.push_back(acc);
    }

    // lattice of operators annihilating the carriers to order s - r at the
    // points; coordinates: Y_0..Y_{r-1}, then the Y-free entry
    Poly z = Poly::constant(F, F.one());
    for (Fel a : spec.points) z = z * Poly(F, {F.neg(a), F.one()});
    Poly zs = Poly::constant(F, F.one());
    for (uint32_t t = 0; t < spec.s - r + 1; ++t) zs = zs * z;

    std::vector<std::vector<Poly>> cols;
    for (uint32_t l = 0; l < r; ++l) {
        std::vector<Poly> col(r + 1, Poly(F));
        col[l] = Poly::constant(F, F.one());
        col[r] = -carriers[l];
        cols.push_back(std::move(col));
    }
    {
        std::vector<Poly> col(r + 1, Poly(F));
        col[r] = zs;
        cols.push_back(std::move(col));
    }
    std::vector<Poly> v = short_vector(PolyLatticeBasis(F, std::move(cols)));
    std::vector<Poly> bs(v.begin(), v.begin() + r);
    return LinYPoly(v[r], std::move(bs));
}

namespace {

// unique g with E + C g + X D g' = 0 mod X^K, all leaf divisions
// invertible; K a power of two
Poly solve_order1(const Field& F, const Poly& e, const Poly& c, const Poly& d, uint32_t cap) {
    if (cap == 1) return Poly::constant(F, F.div(F.neg(e.coeff(0)), c.coeff(0)));
    uint32_t h = cap / 2;
    Poly g0 = solve_order1(F, e.mod_xpow(h), c.mod_xpow(h), d.mod_xpow(h), h);
    Poly s = (e + c * g0 + (d * g0.hasse(1)).shift_up(1)).mod_xpow(cap);
    // s vanishes mod X^h by construction of g0
    std::vector<Fel> shifted;
    for (int i = h; i <= s.deg(); ++i) shifted.push_back(s.coeff(i));
    Poly e1(F, std::move(shifted));
    Poly c1 = c + d.scale(F.scalar(h));
    Poly g1 = solve_order1(F, e1.mod_xpow(h), c1.mod_xpow(h), d.mod_xpow(h), h);
    return g0 + g1.shift_up(h);
}

// unique f with E + C f = 0 mod X^K, C(0) != 0
Poly solve_order0(const Field& F, const Poly& e, const Poly& c, uint32_t cap) {
    if (cap == 1) return Poly::constant(F, F.div(F.neg(e.coeff(0)), c.coeff(0)));
    uint32_t h = cap / 2;
    Poly f0 = solve_order0(F, e.mod_xpow(h), c.mod_xpow(h), h);
    Poly s = (e + c * f0).mod_xpow(cap);
    std::vector<Fel> shifted;
    for (int i = h; i <= s.deg(); ++i) shifted.push_back(s.coeff(i));
    Poly e1(F, std::move(shifted));
    Poly f1 = solve_order0(F, e1.mod_xpow(h), c.mod_xpow(h), h);
    return f0 + f1.shift_up(h);
}

uint32_t next_pow2(uint32_t v) {
    uint32_t k = 1;
    while (k < v) k <<= 1;
    return k;
}

AffineSpace empty_space(const Field& F, uint32_t k) {
    AffineSpace s;
    s.field = &F;
    s.ambient_dim = k;
    s.empty = true;
    return s;
}

AffineSpace point_space(const Field& F, uint32_t k, const Poly& f) {
    AffineSpace s;
    s.field = &F;
    s.ambient_dim = k;
    s.particular.assign(k, 0);
    for (uint32_t i = 0; i < k; ++i) s.particular[i] = f.coeff(i);
    return s;
}

std::optional<Fel> find_nonvanishing(const Field& F, const Poly& b) {
    for (uint64_t a = 0; a < F.size(); ++a)
        if (b.eval(static_cast<Fel>(a)) != 0) return static_cast<Fel>(a);
    return std::nullopt;
}

}  // namespace

AffineSpace fast_diff_solve(const LinYPoly& q, uint32_t k) {
    if (q.is_zero()) throw ZeroPolynomialError("operator is identically zero");
    const Field& F = q.field();
    uint64_t p = F.characteristic();

    int top = -1;
    for (size_t l = q.num_y(); l-- > 0;) {
        if (!q.b(l).is_zero()) {
            top = static_cast<int>(l);
            break;
        }
    }
    if (top < 0) return empty_space(F, k);  // A = 0 has no solutions since A != 0
    if (top >= 2 || k <= 2) return diff_solution_space(q, k);

    if (top == 0) {
        const Poly& b = q.b(0);
        auto shift = find_nonvanishing(F, b);
        if (!shift) return diff_solution_space(q, k);
        uint32_t cap = next_pow2(k);
        Poly e = q.a().taylor_shift(*shift).mod_xpow(cap);
        Poly c = b.taylor_shift(*shift);
        Poly fbar = solve_order0(F, e, c.mod_xpow(cap), cap).mod_xpow(k);
        Poly f = fbar.taylor_shift(F.neg(*shift));
        if ((q.a() + f * b).is_zero() && f.deg() < static_cast<int>(k)) return point_space(F, k, f);
        return empty_space(F, k);
    }

    // one derivative: solve twice with constant terms 0 and 1, then cut the
    // affine line down to the exact solution set
    const Poly& b1 = q.b(1);
    auto shift = find_nonvanishing(F, b1);
    uint32_t cap = next_pow2(k - 1);
    if (!shift || cap >= p || std::max<uint64_t>(k, 2) > p) return diff_solution_space(q, k);

    Poly a = q.a().taylor_shift(*shift);
    Poly b0 = q.b(0).taylor_shift(*shift);
    Poly b1s = b1.taylor_shift(*shift);
    Poly c = b0.shift_up(1) + b1s;  // X B_0 + B_1, unit constant term

    auto candidate = [&](Fel alpha) {
        Poly e = a + b0.scale(alpha);
        Poly g = solve_order1(F, e.mod_xpow(cap), c, b1s, cap);
        Poly fbar = (Poly::constant(F, alpha) + g.shift_up(1)).mod_xpow(k);
        return fbar.taylor_shift(F.neg(*shift));
    };
    auto residual = [&](const Poly& f) { return q.a() + f * q.b(0) + f.hasse(1) * q.b(1); };

    Poly f0 = candidate(0), f1 = candidate(F.one());
    Poly rho0 = residual(f0), rho1 = residual(f1);
    Poly dir = f1 - f0;
    if (rho0 == rho1) {
        if (!rho0.is_zero()) return empty_space(F, k);
        AffineSpace s = point_space(F, k, f0);
        std::vector<Fel> basis(k, 0);
        for (uint32_t i = 0; i < k; ++i) basis[i] = dir.coeff(i);
        s.basis.push_back(std::move(basis));
        return s;
    }
    Poly ddiff = rho1 - rho0;
    int idx = ddiff.deg();
    Fel lambda = F.div(F.neg(rho0.coeff(idx)), ddiff.coeff(idx));
    Poly f = f0 + dir.scale(lambda);
    if (residual(f).is_zero() && f.deg() < static_cast<int>(k)) return point_space(F, k, f);
    return empty_space(F, k);
}

}  // namespace polydec
