#ifndef POLYDEC_RM_HPP
#define POLYDEC_RM_HPP

#include <functional>
#include <map>
#include <optional>

#include "polydec/rng.hpp"
#include "polydec/rs.hpp"

namespace polydec {

struct RMSpec {
    RMSpec(const Field& f, uint32_t variables, uint32_t degree_bound);

    const Field* field;
    uint32_t m;
    uint32_t k;

    uint64_t block_length() const;
    // relative distance 1 - k/q as a double (exact ratio of integers)
    double rel_distance() const {
        return 1.0 - static_cast<double>(k) / static_cast<double>(field->size());
    }
};

// Sparse multivariate polynomial; exponent vectors of fixed arity m.
class MPoly {
public:
    MPoly(const Field& f, uint32_t m) : f_(&f), m_(m) {}

    const Field& field() const { return *f_; }
    uint32_t arity() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<uint32_t>, Fel>& terms() const { return terms_; }

    void set(const std::vector<uint32_t>& exp, Fel c);
    Fel get(const std::vector<uint32_t>& exp) const;
    int total_deg() const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;

    Fel eval(const std::vector<Fel>& point) const;
    MPoly hasse(const std::vector<uint32_t>& order) const;
    // largest s such that every derivative of weight < s vanishes at the
    // point (capped)
    int multiplicity_at(const std::vector<Fel>& point, int cap) const;

    // f(a + T u) as a univariate in T
    Poly restrict_line(const std::vector<Fel>& a, const std::vector<Fel>& u) const;

    // uniform random polynomial of total degree < degree_bound
    static MPoly random(const Field& f, uint32_t m, uint32_t degree_bound, Rng& rng);

    bool operator==(const MPoly& o) const { return m_ == o.m_ && terms_ == o.terms_; }

private:
    const Field* f_;
    uint32_t m_;
    std::map<std::vector<uint32_t>, Fel> terms_;
};

// points of F_q^m in lexicographic order (first coordinate most significant)
std::vector<Fel> rm_point_at(const RMSpec& spec, uint64_t index);
uint64_t rm_index_of(const RMSpec& spec, const std::vector<Fel>& point);

std::vector<Fel> rm_encode(const RMSpec& spec, const MPoly& f);

// Query access to a received word with an exact query counter.
class WordOracle {
public:
    WordOracle(const Field& f, uint32_t m, std::function<Fel(const std::vector<Fel>&)> fn)
        : f_(&f), m_(m), fn_(std::move(fn)) {}

    Fel query(const std::vector<Fel>& point) const {
        ++count_;
        return fn_(point);
    }
    uint64_t queries() const { return count_; }
    void reset_queries() const { count_ = 0; }

    const Field& field() const { return *f_; }
    uint32_t arity() const { return m_; }

private:
    const Field* f_;
    uint32_t m_;
    std::function<Fel(const std::vector<Fel>&)> fn_;
    mutable uint64_t count_ = 0;
};

WordOracle make_table_oracle(const RMSpec& spec, std::vector<Fel> table);

struct RMCorruption {
    enum class Kind { None, Rate, Count, Explicit } kind = Kind::None;
    double rate = 0.0;
    uint64_t count = 0;
    std::vector<std::pair<uint64_t, Fel>> overrides;  // (point index, symbol)
};

// Planted codeword plus seeded corruption, generated on demand so the q^m
// table never has to be materialized.
WordOracle make_planted_oracle(const RMSpec& spec, const MPoly& planted,
                               const RMCorruption& corruption, uint64_t seed);

// One advice record of a local list decoder: an anchor point and a guessed
// value (basic) or a guessed derivative block indexed by all exponent
// vectors of weight < s (derivative variant).
struct LocalAdvice {
    std::vector<Fel> anchor;
    std::vector<Fel> guess;
    uint32_t s = 1;
    double sigma = 2.0;   // radius blow-up of the basic variant
    double gamma = 0.0;   // radius slack of the derivative variant
    double xi = 0.0;
};

// exponent vectors of weight < s in (weight, lex) order; indexes LocalAdvice
// guesses of the derivative variant
std::vector<std::vector<uint32_t>> derivative_index_set(uint32_t m, uint32_t s);

// restriction of a derivative block to a direction: component i is
// sum_{wt(e)=i} v_e u^e
std::vector<Fel> restrict_block(const Field& f, const std::vector<std::vector<uint32_t>>& index_set,
                                const std::vector<Fel>& v, const std::vector<Fel>& u, uint32_t s);

// Single-point correction: decodes w(a) through a random line when the word
// is within roughly an eighth of the distance; exactly q queries.
std::optional<Fel> rm_local_correct(const RMSpec& spec, const WordOracle& oracle,
                                    const std::vector<Fel>& a, uint64_t seed);

// Emits q advice records sharing one random anchor; each is evaluated with
// run_local_algorithm.
std::vector<LocalAdvice> rm_local_list(const RMSpec& spec, const WordOracle& oracle, double sigma,
                                       double xi, uint64_t seed);

// Runs one advice record at one point: list decodes the anchor line and
// keeps the unique candidate matching the guess; exactly q queries.
std::optional<Fel> run_local_algorithm(const RMSpec& spec, const WordOracle& oracle,
                                       const LocalAdvice& advice, const std::vector<Fel>& a);

// Derivative-advice variant: assembles the candidate set V from r^m decoded
// lines through the anchor (r^m * q queries) and returns one advice per
// member of V.
std::vector<LocalAdvice> rm_local_list_johnson(const RMSpec& spec, const WordOracle& oracle,
                                               uint32_t s, double gamma, double xi, uint64_t seed,
                                               uint64_t work_cap = 1000000);

// size r of the direction set used by the derivative variant (capped at q)
uint32_t johnson_direction_count(const RMSpec& spec, uint32_t s, double gamma);

enum class LocalDecoderKind { Correct, ListBasic, ListJohnson, Composed };

struct LocalHarnessParams {
    double sigma = 4.0;
    double gamma = 1.0;
    double xi = 0.5;
    uint32_t s = 2;
};

struct LocalStats {
    uint64_t trials = 0;
    double success_rate = 0.0;
    double advice_hit_rate = 0.0;
    double mean_list_size = 0.0;
    double mean_queries = 0.0;
    uint64_t max_queries = 0;
    std::string report() const;
};

// Monte-Carlo harness around the local decoders; per-trial seeds are derived
// from the master seed by counter-mode splitting, and corruption is re-drawn
// per trial.  Composed mode chains a basic-advice algorithm through the local
// corrector, multiplying the query counts.
LocalStats estimate_local_success(const RMSpec& spec, LocalDecoderKind kind, const MPoly& planted,
                                  const RMCorruption& corruption, int trials, uint64_t seed,
                                  const LocalHarnessParams& params = {});

}  // namespace polydec

#endif
