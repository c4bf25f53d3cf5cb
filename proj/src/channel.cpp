#include "polydec/channel.hpp"

#include <algorithm>

#include "polydec/errors.hpp"
#include "polydec/rng.hpp"

namespace polydec {

namespace {

void flip_symbol(const Field& f, std::vector<Fel>& block, Rng& rng) {
    std::vector<Fel> fresh(block.size());
    do {
        for (auto& x : fresh) x = static_cast<Fel>(rng.below(f.size()));
    } while (fresh == block);
    block = std::move(fresh);
}

}  // namespace

std::vector<size_t> corrupt_random_rate(const Field& f, BlockWord& word, double rate,
                                        uint64_t seed) {
    if (rate < 0.0 || rate > 1.0) throw ParameterViolationError("rate must lie in [0, 1]");
    Rng rng(seed);
    std::vector<size_t> positions;
    for (size_t i = 0; i < word.size(); ++i) {
        if (rng.unit() < rate) {
            flip_symbol(f, word[i], rng);
            positions.push_back(i);
        }
    }
    return positions;
}

std::vector<size_t> corrupt_count(const Field& f, BlockWord& word, size_t errors, uint64_t seed) {
    if (errors > word.size()) throw BadPositionsError("more errors than positions");
    Rng rng(seed);
    std::vector<size_t> idx(word.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    // partial Fisher-Yates for the first `errors` slots
    for (size_t i = 0; i < errors; ++i) {
        size_t j = i + static_cast<size_t>(rng.below(idx.size() - i));
        std::swap(idx[i], idx[j]);
    }
    std::vector<size_t> positions(idx.begin(), idx.begin() + errors);
    std::sort(positions.begin(), positions.end());
    for (size_t i : positions) flip_symbol(f, word[i], rng);
    return positions;
}

std::vector<size_t> corrupt_burst(const Field& f, BlockWord& word, size_t length, uint64_t seed) {
    if (length > word.size()) throw BadPositionsError("burst longer than the word");
    Rng rng(seed);
    size_t start = length == word.size() ? 0 : static_cast<size_t>(rng.below(word.size() - length + 1));
    std::vector<size_t> positions;
    for (size_t i = start; i < start + length; ++i) {
        flip_symbol(f, word[i], rng);
        positions.push_back(i);
    }
    return positions;
}

std::vector<size_t> corrupt_explicit(const Field& f, BlockWord& word,
                                     const std::vector<size_t>& positions, uint64_t seed) {
    Rng rng(seed);
    for (size_t i : positions) {
        if (i >= word.size()) throw BadPositionsError("position out of range");
        flip_symbol(f, word[i], rng);
    }
    return positions;
}

}  // namespace polydec
