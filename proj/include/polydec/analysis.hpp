#ifndef POLYDEC_ANALYSIS_HPP
#define POLYDEC_ANALYSIS_HPP

#include "polydec/subfield.hpp"

namespace polydec {

// exact rational arithmetic for the bound calculators; numerators and
// denominators stay tiny at desk scale
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    long long floor() const;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_text() const;
};

// List-size bound at radius alpha for a code of relative distance delta:
// (delta - alpha) / ((1 - alpha)^2 - (1 - delta)).  Throws RadiusOutOfRange
// when alpha is not strictly below 1 - sqrt(1 - delta).
Rational johnson_list_bound(const Rational& delta, const Rational& alpha);

// Radius ceiling L/(L+1) * (1 - R + o) for list size L, where the slack term
// o upper-bounds log_sigma(L)/n by an exact rational.
Rational gen_singleton_radius(uint64_t list_size, uint64_t n, uint64_t sigma_size,
                              const Rational& rate);

// exact rational upper bound on log_base(x)
Rational rational_log_upper(uint64_t base, uint64_t x, long long precision_den = 64);

// --- exhaustive decoding oracles -----------------------------------------

// Enumerates the entire message space once (throws TooLargeError above cap)
// and answers agreement-threshold list queries against the cached codewords.
class BruteForceRS {
public:
    explicit BruteForceRS(const RSSpec& spec, uint64_t cap = 1000000);
    DecodeOutcome list(const std::vector<Fel>& w, int threshold) const;
    uint64_t message_count() const { return count_; }

private:
    const RSSpec* spec_;
    uint64_t count_;
    std::vector<Fel> table_;  // count_ * n symbols
};

class BruteForceMult {
public:
    explicit BruteForceMult(const MultSpec& spec, uint64_t cap = 1000000);
    DecodeOutcome list(const MultWord& w, int threshold) const;
    uint64_t message_count() const { return count_; }

private:
    const MultSpec* spec_;
    uint64_t count_;
    std::vector<Fel> table_;  // count_ * n * s entries
};

class BruteForceSubfield {
public:
    explicit BruteForceSubfield(const SubfieldRSSpec& spec, uint64_t cap = 1000000);
    DecodeOutcome list(const std::vector<Fel>& w, int threshold) const;
    uint64_t message_count() const { return count_; }

private:
    const SubfieldRSSpec* spec_;
    uint64_t count_;
    std::vector<Fel> table_;
};

// one-shot conveniences
DecodeOutcome brute_force_list(const RSSpec& spec, const std::vector<Fel>& w, int threshold,
                               uint64_t cap = 1000000);
DecodeOutcome brute_force_list(const MultSpec& spec, const MultWord& w, int threshold,
                               uint64_t cap = 1000000);
DecodeOutcome brute_force_list(const SubfieldRSSpec& spec, const std::vector<Fel>& w,
                               int threshold, uint64_t cap = 1000000);

// --- combinatorial structures ---------------------------------------------

struct Hypergraph {
    size_t vertex_count = 0;                // l + 1 candidates
    std::vector<std::vector<int>> edges;    // one edge per position

    long long weight() const;
};

// edge i collects the candidate words agreeing with w at position i; words
// and w are block words (block width 1 for plain symbols)
Hypergraph agreement_hypergraph(const std::vector<std::vector<std::vector<Fel>>>& words,
                                const std::vector<std::vector<Fel>>& w);

// generic zero pattern: every nonempty subset J of the sets satisfies
// |intersection| <= k - |J|; k = sets.size() <= 20
bool gzp_check(const std::vector<std::vector<int>>& zero_sets);

// Product of (X - v) over an F_2-linear subspace V given by a basis inside
// F_{2^m}; the result is verified to be a sparse linearized polynomial with
// root set exactly V.
Poly subspace_poly(const Field& f2m, const std::vector<Fel>& basis);

// enumerate basis sets (reduced echelon form) of all dim-d F_2-subspaces
std::vector<std::vector<Fel>> all_f2_subspaces(const Field& f2m, uint32_t d);

struct LimitationWitness {
    std::vector<Fel> received;   // evaluation table of the shared sparse tail
    std::vector<Poly> family;    // low-degree polynomials agreeing on whole subspaces
    size_t group_size = 0;
    int max_degree = 0;
    int min_agreement = 0;       // over family members, each on its own subspace
    size_t subspace_count = 0;
    std::string report() const;
};

// Pigeonhole witness that many low-degree words crowd one center: groups all
// dim-d subspaces of F_{2^m} by the shared high coefficients of their
// subspace polynomials (orders 2^(t+1)..2^(d-1)) and subtracts the common
// sparse tail.
LimitationWitness limitation_witness(const Field& f2m, uint32_t d, uint32_t t);

struct WronskianReport {
    bool det_nonzero = false;
    int det_degree = -1;
    std::vector<size_t> per_point_dims;
    long long dim_sum = 0;
    Rational bound;
    bool ok = false;
    std::string report() const;
};

// Builds the r x r matrix of Hasse derivatives of the given linearly
// independent polynomials, checks its determinant is nonzero, and verifies
// sum_i dim(A_i ^ V) <= r*k/(s-r+1) where A_i is the subcode vanishing on
// block i.
WronskianReport wronskian_bound_check(const MultSpec& spec, const std::vector<Poly>& polys);

}  // namespace polydec

#endif
