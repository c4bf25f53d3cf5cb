#ifndef POLYDEC_RNG_HPP
#define POLYDEC_RNG_HPP

#include <cstdint>

namespace polydec {

// splitmix64: the usual finalizer-style generator, used both as a stream
// source and to split one master seed into independent per-trial seeds.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-mode split: stream `counter` derived from `seed`, independent of
// how many draws other streams consumed.
inline uint64_t split_seed(uint64_t seed, uint64_t counter) {
    uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (counter + 1));
    splitmix64(s);
    return splitmix64(s);
}

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {
        // burn a couple of outputs so small seeds decorrelate
        splitmix64(state_);
        splitmix64(state_);
    }

    uint64_t next() { return splitmix64(state_); }

    // uniform in [0, bound), bound >= 1; rejection keeps it unbiased
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_;
};

}  // namespace polydec

#endif
