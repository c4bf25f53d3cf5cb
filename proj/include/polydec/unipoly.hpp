#ifndef POLYDEC_UNIPOLY_HPP
#define POLYDEC_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "polydec/gf.hpp"

namespace polydec {

// C(n, k) mod p via Lucas' rule, with per-prime factorial tables
uint32_t binom_mod_p(uint64_t n, uint64_t k, uint64_t p);

// Univariate polynomial over a Field; little-endian coefficients with no
// trailing zeros (the zero polynomial has an empty coefficient vector and
// degree -1).
class Poly {
public:
    explicit Poly(const Field& f) : f_(&f) {}
    Poly(const Field& f, std::vector<Fel> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(const Field& f, Fel c) { return Poly(f, {c}); }
    static Poly monomial(const Field& f, uint32_t e, Fel c);
    static Poly x(const Field& f) { return monomial(f, 1, f.one()); }

    const Field& field() const { return *f_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Fel coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Fel lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<Fel>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return f_->same(*o.f_) && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scale(Fel c) const;
    Poly shift_up(uint32_t k) const;  // multiply by X^k
    Poly mod_xpow(uint32_t k) const;  // truncate to degree < k

    // quotient and remainder with deg(rem) < deg(g)
    std::pair<Poly, Poly> divrem(const Poly& g) const;
    Poly gcd(const Poly& o) const;  // monic gcd

    Fel eval(Fel a) const;  // Horner
    std::vector<Fel> eval_many(const std::vector<Fel>& pts) const;

    Poly taylor_shift(Fel a) const;  // f(X + a)
    Poly hasse(uint32_t i) const;    // i-th Hasse derivative
    // (f(a), f^{(1)}(a), ..., f^{(s-1)}(a)) via a Taylor shift to a
    std::vector<Fel> hasse_block(Fel a, uint32_t s) const;

    static constexpr int kInfiniteMultiplicity = INT32_MAX;
    // largest s with f^{(i)}(a) = 0 for all i < s; kInfiniteMultiplicity for
    // the zero polynomial
    int multiplicity_at(Fel a) const;

    // unique polynomial of degree < n through n distinct points (Lagrange
    // with precomputed barycentric-style weights)
    static Poly interpolate(const Field& f, const std::vector<Fel>& points,
                            const std::vector<Fel>& values);

    // text form: space-separated little-endian element texts; zero is "0"
    std::string to_text() const;
    static Poly from_text(const Field& f, const std::string& s);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check_field(const Poly& o) const {
        if (!f_->same(*o.f_)) throw FieldMismatchError("polynomials over different fields");
    }

    const Field* f_;
    std::vector<Fel> c_;
};

// deterministic ordering used when sorting decoder outputs: compares the
// coefficient sequences position by position
bool poly_lex_less(const Poly& a, const Poly& b);

// g = gcd(a, b) monic, with u*a + v*b = g
struct XgcdResult {
    Poly g, u, v;
};
XgcdResult poly_xgcd(const Poly& a, const Poly& b);

}  // namespace polydec

#endif
