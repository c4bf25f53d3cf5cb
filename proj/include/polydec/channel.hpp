#ifndef POLYDEC_CHANNEL_HPP
#define POLYDEC_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "polydec/gf.hpp"

namespace polydec {

// Block word: n positions, each a tuple of symbols (width 1 for plain codes).
using BlockWord = std::vector<std::vector<Fel>>;

// Every corrupted position is replaced by a uniformly random *different*
// tuple; all models are deterministic given the seed and report exactly the
// changed positions.
std::vector<size_t> corrupt_random_rate(const Field& f, BlockWord& word, double rate,
                                        uint64_t seed);
std::vector<size_t> corrupt_count(const Field& f, BlockWord& word, size_t errors, uint64_t seed);
std::vector<size_t> corrupt_burst(const Field& f, BlockWord& word, size_t length, uint64_t seed);
std::vector<size_t> corrupt_explicit(const Field& f, BlockWord& word,
                                     const std::vector<size_t>& positions, uint64_t seed);

}  // namespace polydec

#endif
