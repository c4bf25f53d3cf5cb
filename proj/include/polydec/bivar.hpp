#ifndef POLYDEC_BIVAR_HPP
#define POLYDEC_BIVAR_HPP

#include <map>
#include <utility>
#include <vector>

#include "polydec/unipoly.hpp"

namespace polydec {

// Sparse bivariate polynomial Q(X, Y); no zero coefficients are stored.
class BiPoly {
public:
    using Exp = std::pair<uint32_t, uint32_t>;  // (X exponent, Y exponent)

    explicit BiPoly(const Field& f) : f_(&f) {}

    static BiPoly from_terms(const Field& f, std::map<Exp, Fel> terms);
    // (Y - f(X)) as a convenience factor builder
    static BiPoly y_minus(const Poly& f);

    const Field& field() const { return *f_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, Fel>& terms() const { return terms_; }

    void set(uint32_t i, uint32_t j, Fel c);
    Fel get(uint32_t i, uint32_t j) const;

    int deg_x() const;
    int deg_y() const;
    // (1, k)-weighted degree: max i + k*j over nonzero terms; -1 when zero
    int wdeg(uint32_t k) const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly scale(Fel c) const;

    Fel eval(Fel x, Fel y) const;
    // Hasse derivative Q^{(u,v)}
    BiPoly hasse(uint32_t u, uint32_t v) const;
    // largest s with Q^{(u,v)}(x, y) = 0 for all u + v < s (capped at cap)
    int multiplicity_at(Fel x, Fel y, int cap) const;

    // Q(X, f(X))
    Poly substitute(const Poly& f) const;

    // coefficient of Y^j as a univariate in X
    Poly y_coeff(uint32_t j) const;

private:
    const Field* f_;
    std::map<Exp, Fel> terms_;
};

// Q depending linearly on Y_0..Y_{r-1}: Q = A(X) + sum_l B_l(X) * Y_l.
class LinYPoly {
public:
    LinYPoly(Poly a, std::vector<Poly> b) : a_(std::move(a)), b_(std::move(b)) {}
    explicit LinYPoly(const Field& f, size_t r = 0)
        : a_(Poly::zero(f)), b_(r, Poly::zero(f)) {}

    const Field& field() const { return a_.field(); }
    size_t num_y() const { return b_.size(); }
    const Poly& a() const { return a_; }
    const Poly& b(size_t l) const { return b_[l]; }
    Poly& a() { return a_; }
    Poly& b(size_t l) { return b_[l]; }

    bool is_zero() const;
    // max(deg A, max_l deg B_l + k) -- the (1, k, ..., k)-weighted degree
    int wdeg(uint32_t k) const;

    // value at (x, y_0, ..., y_{r-1})
    Fel eval(Fel x, const std::vector<Fel>& ys) const;

    // A + sum_l B_l * f^{(l)}, i.e. Y_l bound to the l-th Hasse derivative
    Poly substitute(const Poly& f) const;

    // j-th derivative operator: maps r-variable operators to (r+j)-variable
    // ones so that substitute(tau(Q, j), f) = substitute(Q, f).hasse(j)
    LinYPoly tau(uint32_t j) const;

    bool operator==(const LinYPoly& o) const { return a_ == o.a_ && b_ == o.b_; }

private:
    Poly a_;
    std::vector<Poly> b_;
};

// All f with deg f < k and Q(X, f(X)) = 0, by the Roth--Ruckenstein
// recursion with a final verification pass.  Output size <= deg_Y(Q).
std::vector<Poly> rr_roots(const BiPoly& q, uint32_t k);

}  // namespace polydec

#endif
