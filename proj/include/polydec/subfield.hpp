#ifndef POLYDEC_SUBFIELD_HPP
#define POLYDEC_SUBFIELD_HPP

#include <memory>

#include "polydec/mult.hpp"

namespace polydec {

// F_{q^s} viewed as an s-dimensional vector space over its designated base
// subfield F_q, with the flattening fixed little-endian in the power basis of
// the extension generator.
class ExtTower {
public:
    ExtTower(const Field& base, const Field& ext);

    const Field& base() const { return *base_; }
    const Field& ext() const { return *ext_; }
    uint32_t steps() const { return s_; }

    std::vector<Fel> flatten(Fel x) const;
    Fel unflatten(const std::vector<Fel>& v) const;

    // s x s matrices over the base field for the F_q-linear maps y -> c*y
    // and y -> y^(q^l)
    Matrix mult_matrix(Fel c) const;
    Matrix frob_matrix(uint32_t l) const;

private:
    const Field* base_;
    const Field* ext_;
    uint32_t s_;
    std::unique_ptr<Field> pfield_;        // F_p, scratch field for digit solves
    std::vector<std::vector<Fel>> tinv_;   // inverse of the digit-basis matrix, over F_p
};

// coefficientwise q^j-th power: sigma^j(f), satisfying sigma(f)(a) = f(a)^q
// for a in the base subfield
Poly frob_twist(const Poly& f, uint32_t j);

struct SubfieldRSSpec {
    // `ext` must be built from `base` via Field::extension_of; points are
    // given in the base field and embedded.
    SubfieldRSSpec(const Field& base, const Field& ext, std::vector<Fel> base_points,
                   uint32_t degree_bound, uint32_t decode_order);

    const Field* base;
    const Field* ext;
    std::shared_ptr<ExtTower> tower;
    std::vector<Fel> points;  // embedded into ext
    uint32_t k;
    uint32_t r;

    size_t n() const { return points.size(); }
};

int subfield_threshold(const SubfieldRSSpec& spec);

std::vector<Fel> subfield_encode(const SubfieldRSSpec& spec, const Poly& f);
int subfield_agreement(const SubfieldRSSpec& spec, const std::vector<Fel>& w, const Poly& f);

LinYPoly subfield_interpolate(const SubfieldRSSpec& spec, const std::vector<Fel>& w);

// All f over F_{q^s} of degree < k with A + sum_l B_l sigma^l(f) = 0, as an
// affine space over F_q in the k*s flattened coefficients.
AffineSpace subfield_solution_space(const SubfieldRSSpec& spec, const LinYPoly& q);

// All f over the extension field with deg f < k and agreement >=
// subfield_threshold(spec).
DecodeOutcome subfield_decode(const SubfieldRSSpec& spec, const std::vector<Fel>& w,
                              uint64_t cap = 100000);

// Collection H_1..H_k of subspaces of F_q^s with bounded total intersection
// against any low-dimensional subspace: sum_i dim(V ^ H_i) <= floor(s/d) for
// every r-dimensional V.
struct SubspaceDesign {
    const Field* base = nullptr;
    uint32_t s = 0, r = 0, d = 0, k = 0;
    std::vector<Matrix> constraints;                  // x in H_i iff constraints[i] * x = 0
    std::vector<std::vector<std::vector<Fel>>> bases; // basis vectors per H_i

    int t_bound() const { return static_cast<int>(s / d); }
    size_t dim(size_t i) const { return bases[i].size(); }
    bool member(size_t i, const std::vector<Fel>& x) const;

    std::string to_text() const;
};

// Subspaces H_i of polynomials of degree < s vanishing to order 2r at a point
// of F_{q^d} \ F_q (one Frobenius orbit per i); d must be prime.
SubspaceDesign subspace_design_build(const Field& base, uint32_t s, uint32_t r, uint32_t d,
                                     uint32_t k, uint64_t seed = 1);

// sum_i dim(span(vhat_basis) ^ H_i)
size_t design_intersection_sum(const SubspaceDesign& design,
                               const std::vector<std::vector<Fel>>& vhat_basis);

// Decoding restricted to the subcode whose message coefficient i lies in
// H_{i+1}: intersects the decoder's solution space with H_1 x ... x H_k,
// which has dimension at most t_bound().
DecodeOutcome evasive_subcode_decode(const SubfieldRSSpec& spec, const SubspaceDesign& design,
                                     const std::vector<Fel>& w, uint64_t cap = 100000);

}  // namespace polydec

#endif
