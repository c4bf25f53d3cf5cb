#ifndef POLYDEC_MULT_HPP
#define POLYDEC_MULT_HPP

#include "polydec/rs.hpp"

namespace polydec {

// Univariate multiplicity code: each codeword block carries the first s
// Hasse derivatives of the message polynomial at one evaluation point.
struct MultSpec {
    MultSpec(const Field& f, std::vector<Fel> pts, uint32_t degree_bound, uint32_t mult_param);

    const Field* field;
    std::vector<Fel> points;
    uint32_t k;
    uint32_t s;

    size_t n() const { return points.size(); }
};

// n blocks of s field elements
using MultWord = std::vector<std::vector<Fel>>;

MultWord mult_encode(const MultSpec& spec, const Poly& f);

// number of blocks where the encoding of f matches w
int mult_agreement(const MultSpec& spec, const MultWord& w, const Poly& f);

// agreement thresholds of the two decoders
int mult_list_threshold(const MultSpec& spec);
int mult_cap_threshold(const MultSpec& spec, uint32_t r);

// interpolation steps, exposed for cross-checking
LinYPoly mult_list_interpolate(const MultSpec& spec, const MultWord& w);
LinYPoly mult_cap_interpolate(const MultSpec& spec, const MultWord& w, uint32_t r);

// All f of degree < k with substitute(q, f) = 0, as an affine space in the k
// message coefficients; dimension is at most (number of Y variables) - 1.
AffineSpace diff_solution_space(const LinYPoly& q, uint32_t k);

// List decoding beyond the unique radius: all f with block agreement >=
// mult_list_threshold(spec).  Throws SolutionSpaceTooLargeError (carrying the
// solution space) when the space has more than `cap` members.
DecodeOutcome mult_list_decode(const MultSpec& spec, const MultWord& w, uint64_t cap = 100000);

// List decoding with interpolation multiplicities, radius controlled by r in
// [1, s]; r = s reproduces mult_list_decode's threshold.
DecodeOutcome mult_cap_decode(const MultSpec& spec, const MultWord& w, uint32_t r,
                              uint64_t cap = 100000);

// Randomized list extractor for solution spaces too large to enumerate: each
// repetition samples enough blocks to isolate at most one member of `space`
// consistent with w there, and the union over repetitions is returned.
// Deterministic given seed; members below agreement_threshold are dropped.
std::vector<Poly> prune_list(const MultSpec& spec, const AffineSpace& space, const MultWord& w,
                             int agreement_threshold, double delta, double eps, uint64_t seed,
                             int repetitions);

// sample count used by one Prune repetition for a dimension-r space
int prune_sample_count(size_t r, double delta, double eps);

}  // namespace polydec

#endif
