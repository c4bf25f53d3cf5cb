#include "polydec/linalg.hpp"

#include <algorithm>

namespace polydec {

Matrix Matrix::identity(const Field& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

std::vector<Fel> Matrix::apply(const std::vector<Fel>& x) const {
    if (x.size() != cols_) throw DimensionMismatchError("matrix-vector size mismatch");
    std::vector<Fel> out(rows_, 0);
    for (size_t i = 0; i < rows_; ++i) {
        Fel acc = 0;
        for (size_t j = 0; j < cols_; ++j)
            if (a_[i * cols_ + j] && x[j]) acc = f_->add(acc, f_->mul(a_[i * cols_ + j], x[j]));
        out[i] = acc;
    }
    return out;
}

std::vector<Fel> AffineSpace::member(const std::vector<Fel>& coords) const {
    std::vector<Fel> v = particular;
    for (size_t b = 0; b < basis.size(); ++b) {
        if (b >= coords.size() || coords[b] == 0) continue;
        for (size_t i = 0; i < ambient_dim; ++i)
            v[i] = field->add(v[i], field->mul(coords[b], basis[b][i]));
    }
    return v;
}

AffineSpace solve_affine(const Matrix& m, const std::vector<Fel>& rhs) {
    if (rhs.size() != m.rows()) throw DimensionMismatchError("rhs length != row count");
    const Field& F = m.field();
    size_t R = m.rows(), C = m.cols();

    // augmented working copy
    std::vector<std::vector<Fel>> a(R, std::vector<Fel>(C + 1, 0));
    bool homogeneous = true;
    for (size_t i = 0; i < R; ++i) {
        for (size_t j = 0; j < C; ++j) a[i][j] = m.at(i, j);
        a[i][C] = rhs[i];
        if (rhs[i]) homogeneous = false;
    }

    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < C && row < R; ++col) {
        size_t pr = row;
        while (pr < R && a[pr][col] == 0) ++pr;
        if (pr == R) continue;
        std::swap(a[row], a[pr]);
        Fel inv = F.inv(a[row][col]);
        for (size_t j = col; j <= C; ++j) a[row][j] = F.mul(a[row][j], inv);
        for (size_t i = 0; i < R; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Fel c = a[i][col];
            for (size_t j = col; j <= C; ++j) a[i][j] = F.sub(a[i][j], F.mul(c, a[row][j]));
        }
        pivot_col.push_back(col);
        ++row;
    }

    AffineSpace out;
    out.field = &F;
    out.ambient_dim = C;

    // inconsistent iff a zero row has nonzero rhs
    for (size_t i = row; i < R; ++i) {
        if (a[i][C] != 0) {
            out.empty = true;
            return out;
        }
    }

    std::vector<bool> is_pivot(C, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    out.particular.assign(C, 0);
    if (!homogeneous) {
        for (size_t r2 = 0; r2 < pivot_col.size(); ++r2) out.particular[pivot_col[r2]] = a[r2][C];
    }
    for (size_t col = 0; col < C; ++col) {
        if (is_pivot[col]) continue;
        std::vector<Fel> b(C, 0);
        b[col] = F.one();
        for (size_t r2 = 0; r2 < pivot_col.size(); ++r2) b[pivot_col[r2]] = F.neg(a[r2][col]);
        out.basis.push_back(std::move(b));
    }
    return out;
}

std::vector<std::vector<Fel>> enumerate_affine(const AffineSpace& s, uint64_t cap) {
    if (s.empty) return {};
    uint64_t q = s.field->size();
    uint64_t total = 1;
    for (size_t i = 0; i < s.basis.size(); ++i) {
        if (total > cap / q + 1) throw TooLargeError("affine space too large to enumerate");
        total *= q;
        if (total > cap) throw TooLargeError("affine space too large to enumerate");
    }
    std::vector<std::vector<Fel>> out;
    out.reserve(total);
    std::vector<Fel> coords(s.basis.size(), 0);
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t x = idx;
        for (size_t b = s.basis.size(); b-- > 0;) {
            coords[b] = static_cast<Fel>(x % q);
            x /= q;
        }
        out.push_back(s.member(coords));
    }
    return out;
}

AffineSpace intersect_affine(const AffineSpace& s, const Matrix& m, const std::vector<Fel>& rhs) {
    const Field& F = *s.field;
    AffineSpace out;
    out.field = &F;
    out.ambient_dim = s.ambient_dim;
    if (s.empty) {
        out.empty = true;
        return out;
    }
    // rows of m applied to (particular + sum l_b basis_b) = rhs becomes a
    // system in the lambda coordinates
    size_t nb = s.basis.size();
    Matrix sys(F, m.rows(), nb);
    std::vector<Fel> srhs(m.rows());
    std::vector<Fel> mp = m.apply(s.particular);
    std::vector<std::vector<Fel>> mb(nb);
    for (size_t b = 0; b < nb; ++b) mb[b] = m.apply(s.basis[b]);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t b = 0; b < nb; ++b) sys.at(i, b) = mb[b][i];
        srhs[i] = F.sub(rhs[i], mp[i]);
    }
    AffineSpace lam = solve_affine(sys, srhs);
    if (lam.empty) {
        out.empty = true;
        return out;
    }
    out.particular = s.member(lam.particular);
    for (const auto& lb : lam.basis) {
        // direction vectors map through the basis without the particular part
        std::vector<Fel> v(s.ambient_dim, 0);
        for (size_t b = 0; b < nb; ++b) {
            if (lb[b] == 0) continue;
            for (size_t i = 0; i < s.ambient_dim; ++i)
                v[i] = F.add(v[i], F.mul(lb[b], s.basis[b][i]));
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

namespace {

// reduced row-echelon canonical form of a span, for set comparison
std::vector<std::vector<Fel>> rref_span(const Field& F, std::vector<std::vector<Fel>> rows) {
    size_t R = rows.size();
    if (R == 0) return rows;
    size_t C = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < C && r < R; ++c) {
        size_t pr = r;
        while (pr < R && rows[pr][c] == 0) ++pr;
        if (pr == R) continue;
        std::swap(rows[r], rows[pr]);
        Fel inv = F.inv(rows[r][c]);
        for (size_t j = 0; j < C; ++j) rows[r][j] = F.mul(rows[r][j], inv);
        for (size_t i = 0; i < R; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Fel f = rows[i][c];
            for (size_t j = 0; j < C; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

bool in_span(const Field& F, const std::vector<std::vector<Fel>>& rref, std::vector<Fel> v) {
    for (const auto& row : rref) {
        size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        if (lead == row.size()) continue;
        if (v[lead] != 0) {
            Fel c = v[lead];
            for (size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(c, row[j]));
        }
    }
    return std::all_of(v.begin(), v.end(), [](Fel x) { return x == 0; });
}

}  // namespace

bool affine_equal(const AffineSpace& a, const AffineSpace& b) {
    if (a.empty || b.empty) return a.empty == b.empty;
    if (a.ambient_dim != b.ambient_dim) return false;
    const Field& F = *a.field;
    auto ra = rref_span(F, a.basis);
    auto rb = rref_span(F, b.basis);
    if (ra.size() != rb.size()) return false;
    for (const auto& row : ra)
        if (!in_span(F, rb, row)) return false;
    std::vector<Fel> diff(a.ambient_dim);
    for (size_t i = 0; i < a.ambient_dim; ++i) diff[i] = F.sub(a.particular[i], b.particular[i]);
    return in_span(F, rb, diff);
}

}  // namespace polydec
