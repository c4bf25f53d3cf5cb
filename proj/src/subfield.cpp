#include "polydec/subfield.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace polydec {

ExtTower::ExtTower(const Field& base, const Field& ext) : base_(&base), ext_(&ext) {
    if (ext.characteristic() != base.characteristic())
        throw FieldMismatchError("tower fields have different characteristics");
    if (ext.base_order() != base.size())
        throw FieldMismatchError("extension was not built over this base field");
    s_ = ext.base_steps();
    uint64_t p = base.characteristic();
    uint32_t d0 = base.degree();
    uint32_t bigd = ext.degree();
    pfield_ = std::make_unique<Field>(Field::prime(p));

    // T maps base-field coordinate digits to extension digits: column (j, i)
    // holds the digits of embed(alpha^i) * gamma^j, where alpha and gamma
    // generate the base and extension fields
    Matrix t(*pfield_, bigd, bigd);
    Fel gamma = bigd > 1 ? ext.pack({0, 1}) : ext.one();
    std::vector<Fel> gamma_pow(s_);
    gamma_pow[0] = ext.one();
    for (uint32_t j = 1; j < s_; ++j) gamma_pow[j] = ext.mul(gamma_pow[j - 1], gamma);
    for (uint32_t j = 0; j < s_; ++j) {
        for (uint32_t i = 0; i < d0; ++i) {
            std::vector<uint32_t> digits(d0, 0);
            digits[i] = 1;
            Fel basis_el = ext.mul(ext.embed_base(base, base.pack(digits)), gamma_pow[j]);
            auto col = ext.unpack(basis_el);
            for (uint32_t row = 0; row < bigd; ++row)
                t.at(row, j * d0 + i) = static_cast<Fel>(col[row]);
        }
    }
    // invert T column by column
    tinv_.assign(bigd, std::vector<Fel>(bigd, 0));
    for (uint32_t c = 0; c < bigd; ++c) {
        std::vector<Fel> e(bigd, 0);
        e[c] = 1;
        AffineSpace sol = solve_affine(t, e);
        if (sol.empty || sol.dim() != 0)
            throw Error("internal: tower basis matrix is singular");
        for (uint32_t row = 0; row < bigd; ++row) tinv_[row][c] = sol.particular[row];
    }
}

std::vector<Fel> ExtTower::flatten(Fel x) const {
    uint32_t d0 = base_->degree(), bigd = ext_->degree();
    auto digits = ext_->unpack(x);
    std::vector<Fel> coords(bigd, 0);
    const Field& P = *pfield_;
    for (uint32_t row = 0; row < bigd; ++row) {
        Fel acc = 0;
        for (uint32_t c = 0; c < bigd; ++c)
            if (tinv_[row][c] && digits[c])
                acc = P.add(acc, P.mul(tinv_[row][c], static_cast<Fel>(digits[c])));
        coords[row] = acc;
    }
    std::vector<Fel> out(s_);
    for (uint32_t j = 0; j < s_; ++j) {
        std::vector<uint32_t> digs(d0);
        for (uint32_t i = 0; i < d0; ++i) digs[i] = coords[j * d0 + i];
        out[j] = base_->pack(digs);
    }
    return out;
}

Fel ExtTower::unflatten(const std::vector<Fel>& v) const {
    Fel gamma = ext_->degree() > 1 ? ext_->pack({0, 1}) : ext_->one();
    Fel acc = 0;
    for (size_t j = v.size(); j-- > 0;) {
        acc = ext_->mul(acc, gamma);
        acc = ext_->add(acc, ext_->embed_base(*base_, v[j]));
    }
    return acc;
}

Matrix ExtTower::mult_matrix(Fel c) const {
    Matrix m(*base_, s_, s_);
    for (uint32_t j = 0; j < s_; ++j) {
        std::vector<Fel> e(s_, 0);
        e[j] = base_->one();
        auto col = flatten(ext_->mul(c, unflatten(e)));
        for (uint32_t i = 0; i < s_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Matrix ExtTower::frob_matrix(uint32_t l) const {
    Matrix m(*base_, s_, s_);
    for (uint32_t j = 0; j < s_; ++j) {
        std::vector<Fel> e(s_, 0);
        e[j] = base_->one();
        auto col = flatten(ext_->frobenius(unflatten(e), l));
        for (uint32_t i = 0; i < s_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Poly frob_twist(const Poly& f, uint32_t j) {
    const Field& F = f.field();
    std::vector<Fel> c(f.coeffs());
    for (auto& x : c) x = F.frobenius(x, j);
    return Poly(F, std::move(c));
}

SubfieldRSSpec::SubfieldRSSpec(const Field& base_f, const Field& ext_f,
                               std::vector<Fel> base_points, uint32_t degree_bound,
                               uint32_t decode_order)
    : base(&base_f), ext(&ext_f), k(degree_bound), r(decode_order) {
    tower = std::make_shared<ExtTower>(base_f, ext_f);
    size_t n = base_points.size();
    if (k < 1 || k >= n) throw ParameterViolationError("need 1 <= k < n");
    if (r < 1 || r > ext_f.base_steps()) throw ParameterViolationError("need 1 <= r <= s");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (base_points[i] == base_points[j])
                throw DuplicatePointError("evaluation points must be distinct");
    points.reserve(n);
    for (Fel a : base_points) points.push_back(ext_f.embed_base(base_f, a));
}

int subfield_threshold(const SubfieldRSSpec& spec) {
    uint64_t num = spec.n() + static_cast<uint64_t>(spec.r) * (spec.k - 1) + 1;
    return static_cast<int>((num + spec.r) / (spec.r + 1));  // ceil
}

std::vector<Fel> subfield_encode(const SubfieldRSSpec& spec, const Poly& f) {
    if (!f.field().same(*spec.ext)) throw FieldMismatchError("message must live in the extension");
    if (f.deg() >= static_cast<int>(spec.k))
        throw DegreeTooLargeError("message degree exceeds the code bound");
    return f.eval_many(spec.points);
}

int subfield_agreement(const SubfieldRSSpec& spec, const std::vector<Fel>& w, const Poly& f) {
    int agree = 0;
    for (size_t i = 0; i < spec.n(); ++i)
        if (f.eval(spec.points[i]) == w[i]) ++agree;
    return agree;
}

LinYPoly subfield_interpolate(const SubfieldRSSpec& spec, const std::vector<Fel>& w) {
    const Field& E = *spec.ext;
    int t = subfield_threshold(spec);
    size_t acoef = t;
    size_t bcoef = t - static_cast<int>(spec.k) + 1 > 0 ? t - spec.k + 1 : 0;
    Matrix m(E, spec.n(), acoef + spec.r * bcoef);
    for (size_t i = 0; i < spec.n(); ++i) {
        Fel a = spec.points[i];
        Fel ap = E.one();
        for (size_t c = 0; c < acoef; ++c) {
            m.at(i, c) = ap;
            ap = E.mul(ap, a);
        }
        Fel y = w[i];
        for (uint32_t l = 0; l < spec.r; ++l) {
            Fel bp = y;  // w_i^(q^l)
            for (size_t c = 0; c < bcoef; ++c) {
                m.at(i, acoef + l * bcoef + c) = bp;
                bp = E.mul(bp, a);
            }
            y = E.frobenius(y, 1);
        }
    }
    AffineSpace sol = solve_affine(m, std::vector<Fel>(m.rows(), 0));
    if (sol.basis.empty())
        throw InterpolationFailedError("interpolation system has only the zero solution");
    const auto& vec = sol.basis[0];
    Poly a(E, std::vector<Fel>(vec.begin(), vec.begin() + acoef));
    std::vector<Poly> bs;
    for (uint32_t l = 0; l < spec.r; ++l)
        bs.emplace_back(E, std::vector<Fel>(vec.begin() + acoef + l * bcoef,
                                            vec.begin() + acoef + (l + 1) * bcoef));
    return LinYPoly(std::move(a), std::move(bs));
}

AffineSpace subfield_solution_space(const SubfieldRSSpec& spec, const LinYPoly& q) {
    if (q.is_zero()) throw ZeroPolynomialError("operator is identically zero");
    const Field& B = *spec.base;
    const ExtTower& tw = *spec.tower;
    uint32_t s = tw.steps();
    int maxdeg = q.a().deg();
    for (size_t l = 0; l < q.num_y(); ++l)
        if (!q.b(l).is_zero()) maxdeg = std::max(maxdeg, q.b(l).deg() + static_cast<int>(spec.k) - 1);
    size_t xrows = maxdeg >= 0 ? static_cast<size_t>(maxdeg + 1) : 0;

    std::vector<Matrix> frob;
    for (uint32_t l = 0; l < q.num_y(); ++l) frob.push_back(tw.frob_matrix(l));

    // coefficient of X^m in A + sum_l B_l sigma^l(f) is an F_q-linear map of
    // the flattened coefficients: block(m, j) = sum_l mult(B_l[m-j]) frob_l
    Matrix sys(B, xrows * s, spec.k * s);
    std::vector<Fel> rhs(sys.rows(), 0);
    for (size_t m = 0; m < xrows; ++m) {
        auto acoef = tw.flatten(q.a().coeff(m));
        for (uint32_t row = 0; row < s; ++row) rhs[m * s + row] = B.neg(acoef[row]);
        for (uint32_t j = 0; j < spec.k; ++j) {
            // accumulate the s x s block
            Matrix block(B, s, s);
            bool nonzero = false;
            for (size_t l = 0; l < q.num_y(); ++l) {
                if (m < j) continue;
                Fel c = q.b(l).coeff(m - j);
                if (c == 0) continue;
                nonzero = true;
                Matrix mc = tw.mult_matrix(c);
                for (uint32_t a2 = 0; a2 < s; ++a2)
                    for (uint32_t b2 = 0; b2 < s; ++b2) {
                        Fel acc = block.at(a2, b2);
                        for (uint32_t c2 = 0; c2 < s; ++c2)
                            acc = B.add(acc, B.mul(mc.at(a2, c2), frob[l].at(c2, b2)));
                        block.at(a2, b2) = acc;
                    }
            }
            if (!nonzero) continue;
            for (uint32_t a2 = 0; a2 < s; ++a2)
                for (uint32_t b2 = 0; b2 < s; ++b2) sys.at(m * s + a2, j * s + b2) = block.at(a2, b2);
        }
    }
    return solve_affine(sys, rhs);
}

namespace {

Poly poly_from_flat(const SubfieldRSSpec& spec, const std::vector<Fel>& flat) {
    const ExtTower& tw = *spec.tower;
    uint32_t s = tw.steps();
    std::vector<Fel> coeffs(spec.k);
    for (uint32_t j = 0; j < spec.k; ++j) {
        std::vector<Fel> block(flat.begin() + j * s, flat.begin() + (j + 1) * s);
        coeffs[j] = tw.unflatten(block);
    }
    return Poly(*spec.ext, std::move(coeffs));
}

DecodeOutcome outcome_from_space(const SubfieldRSSpec& spec, const std::vector<Fel>& w,
                                 AffineSpace space, int t, uint64_t cap) {
    uint64_t count = space.empty ? 0 : 1;
    for (size_t i = 0; i < space.dim(); ++i) {
        count *= spec.base->size();
        if (count > cap)
            throw SolutionSpaceTooLargeError("solution space exceeds the enumeration cap",
                                             std::move(space));
    }
    DecodeOutcome out;
    if (!space.empty) {
        for (const auto& flat : enumerate_affine(space, cap)) {
            Poly f = poly_from_flat(spec, flat);
            DecodeEntry e{f, {}, subfield_agreement(spec, w, f)};
            if (e.agreement < t) continue;
            for (Fel sym : subfield_encode(spec, f)) e.codeword.push_back({sym});
            out.entries.push_back(std::move(e));
        }
    }
    sort_entries(out.entries);
    out.solution_space = std::move(space);
    return out;
}

}  // namespace

DecodeOutcome subfield_decode(const SubfieldRSSpec& spec, const std::vector<Fel>& w,
                              uint64_t cap) {
    if (w.size() != spec.n()) throw DimensionMismatchError("received word length != n");
    LinYPoly q = subfield_interpolate(spec, w);
    AffineSpace space = subfield_solution_space(spec, q);
    return outcome_from_space(spec, w, std::move(space), subfield_threshold(spec), cap);
}

bool SubspaceDesign::member(size_t i, const std::vector<Fel>& x) const {
    auto img = constraints[i].apply(x);
    return std::all_of(img.begin(), img.end(), [](Fel v) { return v == 0; });
}

std::string SubspaceDesign::to_text() const {
    std::ostringstream os;
    os << "s=" << s << " r=" << r << " d=" << d << " k=" << k << "\n";
    for (uint32_t i = 0; i < k; ++i) {
        os << "subspace " << i << " dim=" << bases[i].size() << "\n";
        for (const auto& v : bases[i]) {
            for (uint32_t j = 0; j < s; ++j) os << (j ? " " : "") << base->to_text(v[j]);
            os << "\n";
        }
    }
    return os.str();
}

SubspaceDesign subspace_design_build(const Field& base, uint32_t s, uint32_t r, uint32_t d,
                                     uint32_t k, uint64_t seed) {
    uint64_t q = base.size();
    if (d != 1 && !is_prime_u64(d)) throw ParameterViolationError("orbit degree d must be prime");
    if (!(s < 2 * r * k)) throw ParameterViolationError("need s < 2rk");
    if (std::max<uint64_t>(2 * r, s) >= base.characteristic())
        throw ParameterViolationError("need max(2r, s) < characteristic");
    if (d == 1) {
        if (k > q) throw ParameterViolationError("too many subspaces for the base field");
    } else {
        uint64_t qd = 1;
        for (uint32_t i = 0; i < d; ++i) qd *= q;
        if (k > (qd - q) / d)
            throw ParameterViolationError("too many subspaces for this orbit field");
    }

    // the degenerate d = 1 variant places the points in the base field itself
    std::optional<Field> ext_store;
    const Field& ext = d == 1 ? base : *(ext_store = Field::extension_of(base, d, seed));
    std::optional<ExtTower> tower;
    if (d > 1) tower.emplace(base, ext);
    uint64_t p = base.characteristic();

    // greedy orbit-disjoint point selection in canonical order
    std::vector<Fel> pts;
    std::set<Fel> used;
    for (uint64_t cand = 0; cand < ext.size() && pts.size() < k; ++cand) {
        Fel a = static_cast<Fel>(cand);
        if (d > 1 && ext.in_base_subfield(a)) continue;
        std::vector<Fel> orbit;
        Fel cur = a;
        bool clash = false;
        for (uint32_t l = 0; l < d; ++l) {
            if (used.count(cur)) clash = true;
            orbit.push_back(cur);
            cur = ext.frobenius(cur, 1);
        }
        if (clash) continue;
        pts.push_back(a);
        used.insert(orbit.begin(), orbit.end());
    }
    if (pts.size() < k) throw ParameterViolationError("could not find enough disjoint orbits");

    SubspaceDesign design;
    design.base = &base;
    design.s = s;
    design.r = r;
    design.d = d;
    design.k = k;
    for (uint32_t i = 0; i < k; ++i) {
        // vanishing of all Hasse derivatives of order < 2r at pts[i]; the
        // conditions at the Frobenius conjugates follow automatically for
        // polynomials with base-field coefficients
        Matrix cons(base, 2 * r * d, s);
        for (uint32_t j = 0; j < 2 * r; ++j) {
            std::vector<Fel> apow(s, 0);
            Fel ap = ext.one();
            for (uint32_t idx = j; idx < s; ++idx) {
                apow[idx] = ap;
                ap = ext.mul(ap, pts[i]);
            }
            for (uint32_t idx = j; idx < s; ++idx) {
                uint32_t bin = binom_mod_p(idx, j, p);
                if (!bin) continue;
                Fel val = ext.mul(ext.scalar(bin), apow[idx]);
                if (d == 1) {
                    cons.at(j, idx) = val;
                } else {
                    auto col = tower->flatten(val);
                    for (uint32_t row = 0; row < d; ++row) cons.at(j * d + row, idx) = col[row];
                }
            }
        }
        AffineSpace null = solve_affine(cons, std::vector<Fel>(cons.rows(), 0));
        design.bases.push_back(null.basis);
        design.constraints.push_back(std::move(cons));
    }
    return design;
}

size_t design_intersection_sum(const SubspaceDesign& design,
                               const std::vector<std::vector<Fel>>& vhat_basis) {
    const Field& B = *design.base;
    AffineSpace vhat;
    vhat.field = &B;
    vhat.ambient_dim = design.s;
    vhat.particular.assign(design.s, 0);
    vhat.basis = vhat_basis;
    size_t total = 0;
    for (uint32_t i = 0; i < design.k; ++i) {
        AffineSpace inter =
            intersect_affine(vhat, design.constraints[i], std::vector<Fel>(design.constraints[i].rows(), 0));
        if (!inter.empty) total += inter.dim();
    }
    return total;
}

DecodeOutcome evasive_subcode_decode(const SubfieldRSSpec& spec, const SubspaceDesign& design,
                                     const std::vector<Fel>& w, uint64_t cap) {
    if (w.size() != spec.n()) throw DimensionMismatchError("received word length != n");
    uint32_t s = spec.tower->steps();
    if (design.s != s || design.k != spec.k || design.r + 1 != spec.r)
        throw DesignMismatchError("design parameters do not match the decode order");
    const Field& B = *spec.base;

    LinYPoly q = subfield_interpolate(spec, w);
    AffineSpace v = subfield_solution_space(spec, q);

    // one more solve: intersect with H_1 x ... x H_k, block-diagonal rows
    size_t rows_per = design.constraints[0].rows();
    Matrix wcons(B, rows_per * spec.k, spec.k * s);
    for (uint32_t i = 0; i < spec.k; ++i)
        for (size_t a2 = 0; a2 < rows_per; ++a2)
            for (uint32_t b2 = 0; b2 < s; ++b2)
                wcons.at(i * rows_per + a2, i * s + b2) = design.constraints[i].at(a2, b2);
    AffineSpace vw = intersect_affine(v, wcons, std::vector<Fel>(wcons.rows(), 0));
    return outcome_from_space(spec, w, std::move(vw), subfield_threshold(spec), cap);
}

}  // namespace polydec
