#ifndef POLYDEC_LATTICE_HPP
#define POLYDEC_LATTICE_HPP

#include "polydec/mult.hpp"

namespace polydec {

// Full-rank lattice over F[X]: generated by m columns, each a vector of m
// polynomials (entry i of a column is the coefficient of Y^i when the
// generator is read as a univariate in Y).
struct PolyLatticeBasis {
    PolyLatticeBasis(const Field& f, std::vector<std::vector<Poly>> columns);

    const Field* field;
    std::vector<std::vector<Poly>> cols;

    size_t rank() const { return cols.size(); }
};

// max entry degree (-1 for the zero vector)
int degree_norm(const std::vector<Poly>& v);

Poly lattice_det(const PolyLatticeBasis& basis);

// whether v = sum_j g_j * col_j for polynomials g_j (Cramer solve)
bool lattice_member(const PolyLatticeBasis& basis, const std::vector<Poly>& v);

// Nonzero lattice vector v with degree_norm(v) <= floor(deg(det)/m), found by
// iterative weak Popov reduction; throws SingularBasisError on dependent
// generators.
std::vector<Poly> short_vector(const PolyLatticeBasis& basis);

// Interpolation through a rank-m lattice: nonzero Q with (1,k)-weighted
// degree at most ceil(sqrt(n k (ell+1) ell)) vanishing to order ell at every
// (a_i, w_i).
BiPoly fast_gs_interpolate(const RSSpec& spec, const std::vector<Fel>& w, uint32_t ell);

// Hermite interpolation of the derivative carriers followed by a rank-(r+1)
// short vector: nonzero operator Q with deg_X <= floor(n(s-r+1)/(r+1))
// satisfying tau^(j)(Q)(a_i, w_i) = 0 for all i and 0 <= j <= s-r.
LinYPoly fast_mult_interpolate(const MultSpec& spec, const MultWord& w, uint32_t r);

// Divide-and-conquer solver for operators with at most two Y variables;
// computes the same set as diff_solution_space(q, k).  Operators with more
// variables, or parameters outside the halving recursion's reach, fall back
// to the dense solver.
AffineSpace fast_diff_solve(const LinYPoly& q, uint32_t k);

}  // namespace polydec

#endif
