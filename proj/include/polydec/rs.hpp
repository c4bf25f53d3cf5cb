#ifndef POLYDEC_RS_HPP
#define POLYDEC_RS_HPP

#include <optional>

#include "polydec/bivar.hpp"
#include "polydec/linalg.hpp"

namespace polydec {

struct RSSpec {
    RSSpec(const Field& f, std::vector<Fel> pts, uint32_t degree_bound);

    const Field* field;
    std::vector<Fel> points;
    uint32_t k;

    size_t n() const { return points.size(); }
};

// One decoded candidate: the message polynomial, its codeword (n blocks of
// symbols; block width 1 except for multiplicity codes), and the number of
// positions agreeing with the received word.
struct DecodeEntry {
    Poly message;
    std::vector<std::vector<Fel>> codeword;
    int agreement = 0;
};

struct DecodeOutcome {
    std::vector<DecodeEntry> entries;
    std::optional<AffineSpace> solution_space;

    bool contains(const Poly& msg) const;
};

// descending agreement, ties by lexicographic message
void sort_entries(std::vector<DecodeEntry>& entries);

uint64_t isqrt_u64(uint64_t n);

std::vector<Fel> rs_encode(const RSSpec& spec, const Poly& f);

int rs_agreement(const RSSpec& spec, const std::vector<Fel>& w, const Poly& f);

// Unique decoding: returns the single f with agreement >= ceil((n+k)/2) when
// it exists, otherwise an empty outcome.
DecodeOutcome rs_unique_decode(const RSSpec& spec, const std::vector<Fel>& w);

// List decoding beyond the unique radius: all f with agreement >=
// floor(sqrt(2kn)) + 1.
DecodeOutcome rs_sudan_decode(const RSSpec& spec, const std::vector<Fel>& w);

// List decoding up to the Johnson radius with interpolation multiplicities:
// all f with agreement >= t, default t = floor(sqrt(nk)) + 1.  When r is
// absent the smallest workable multiplicity is chosen (see gs_pick_r).
DecodeOutcome rs_gs_decode(const RSSpec& spec, const std::vector<Fel>& w,
                           std::optional<uint32_t> r = std::nullopt,
                           std::optional<int> agreement_threshold = std::nullopt);

// interpolation multiplicity used by rs_gs_decode for a given threshold
uint32_t gs_pick_r(const RSSpec& spec, int t, bool default_threshold);

// The two interpolation steps, exposed for cross-checking against the
// lattice-based interpolators.
BiPoly sudan_interpolate(const RSSpec& spec, const std::vector<Fel>& w, int wdeg_bound);
BiPoly gs_interpolate(const RSSpec& spec, const std::vector<Fel>& w, uint32_t r, int wdeg_bound);

}  // namespace polydec

#endif
