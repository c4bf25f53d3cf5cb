#ifndef POLYDEC_GF_HPP
#define POLYDEC_GF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polydec/errors.hpp"

namespace polydec {

// A field element is a packed little-endian base-p digit vector: the element
// with coefficients (c_0, ..., c_{d-1}) in the modulus basis is stored as the
// integer sum c_i * p^i, so packed values range over [0, q).  Equality of
// packed values is coefficientwise equality and every value is canonical.
using Fel = uint32_t;

// Exact arithmetic in F_{p^d}.  Immutable once constructed; all element
// operations are const and pure, so a Field may be shared freely across
// threads.  Elements do not carry a field reference; callers keep the Field
// alive for as long as elements derived from it are in use.
class Field {
public:
    // F_p
    static Field prime(uint64_t p);

    // F_{p^d}.  If modulus (monic, length d+1, coefficients mod p) is absent
    // and d > 1, a monic irreducible modulus is found by seeded random search
    // with an irreducibility test; the search is deterministic given seed.
    static Field extension(uint64_t p, uint32_t d,
                           std::optional<std::vector<uint32_t>> modulus = std::nullopt,
                           uint64_t seed = 1);

    // F_{q^steps} containing `base` = F_q as a designated subfield: the
    // returned field has base_order() == base.size() and embeds base-field
    // elements canonically via embed_base().
    static Field extension_of(const Field& base, uint32_t steps, uint64_t seed = 1);

    uint64_t characteristic() const { return p_; }
    uint32_t degree() const { return d_; }
    uint64_t size() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    // Order q_base of the designated base subfield (p unless built by
    // extension_of) and the extension step count size() == q_base^steps.
    uint64_t base_order() const { return base_order_; }
    uint32_t base_steps() const { return base_steps_; }

    bool same(const Field& o) const {
        return p_ == o.p_ && d_ == o.d_ && modulus_ == o.modulus_;
    }

    Fel zero() const { return 0; }
    Fel one() const { return d_ == 0 ? 0 : 1; }
    // integer scalar c -> the constant (c mod p)
    Fel scalar(uint64_t c) const { return static_cast<Fel>(c % p_); }

    Fel add(Fel a, Fel b) const;
    Fel sub(Fel a, Fel b) const;
    Fel neg(Fel a) const;
    Fel mul(Fel a, Fel b) const;
    Fel inv(Fel a) const;
    Fel div(Fel a, Fel b) const;
    Fel pow(Fel a, uint64_t e) const;

    // a^(base_order^j); with base_order == p and j == degree() this is the
    // identity map
    Fel frobenius(Fel a, uint32_t j) const;

    // true when a lies in the designated base subfield, i.e. a^q_base == a
    bool in_base_subfield(Fel a) const;

    // Canonical embedding of an element of the designated base subfield
    // (packed in `base`'s own representation).  `base` must be the field this
    // one was built from via extension_of (or F_p for a plain extension).
    Fel embed_base(const Field& base, Fel a) const;

    std::vector<uint32_t> unpack(Fel a) const;
    Fel pack(const std::vector<uint32_t>& digits) const;

    // text form: comma-separated little-endian residues, e.g. "1,1"
    std::string to_text(Fel a) const;
    Fel from_text(const std::string& s) const;

private:
    Field() = default;
    void init_tables();

    uint64_t p_ = 0;
    uint32_t d_ = 0;
    uint64_t q_ = 0;
    std::vector<uint32_t> modulus_;            // length d+1, monic; empty for d == 1
    std::vector<std::vector<uint32_t>> red_;   // red_[t] = digits of X^{d+t} mod modulus
    uint64_t base_order_ = 0;
    uint32_t base_steps_ = 1;
    std::vector<Fel> beta_pow_;                // images of base-generator powers, for embed_base
    std::vector<Fel> mul_table_, inv_table_;   // populated for small q only

    Fel mul_generic(Fel a, Fel b) const;
};

bool is_prime_u64(uint64_t n);

}  // namespace polydec

#endif
