#include "polydec/gf.hpp"

#include <algorithm>
#include <sstream>

#include "polydec/rng.hpp"

namespace polydec {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// --- dense polynomial helpers over F_p, used only for modulus validation ---

using PVec = std::vector<uint64_t>;  // little-endian coefficients mod p

void ptrim(PVec& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& mod, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PVec prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + mulmod_u64(a[i], b[j], p)) % p;
    }
    // reduce mod the monic modulus
    size_t d = mod.size() - 1;
    for (size_t i = prod.size(); i-- > d;) {
        uint64_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (size_t j = 0; j < d; ++j)
            prod[i - d + j] = (prod[i - d + j] + mulmod_u64(c, p - mod[j] % p, p)) % p;
    }
    prod.resize(d);
    ptrim(prod);
    return prod;
}

PVec ppowmod(PVec base, uint64_t e, const PVec& mod, uint64_t p) {
    PVec r{1};
    while (e) {
        if (e & 1) r = pmulmod(r, base, mod, p);
        base = pmulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

PVec pgcd(PVec a, PVec b, uint64_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b, with b made monic on the fly
        uint64_t lead_inv = powmod_u64(b.back(), p - 2, p);
        while (a.size() >= b.size() && !a.empty()) {
            uint64_t c = mulmod_u64(a.back(), lead_inv, p);
            size_t shift = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                a[shift + j] = (a[shift + j] + mulmod_u64(c, p - b[j] % p, p)) % p;
            ptrim(a);
        }
        std::swap(a, b);
    }
    return a;
}

// f monic of degree d over F_p; irreducible iff gcd(X^{p^i} - X, f) = 1 for
// all 1 <= i <= d/2
bool irreducible(const std::vector<uint32_t>& f, uint64_t p) {
    size_t d = f.size() - 1;
    if (d == 1) return true;
    PVec mod(f.begin(), f.end());
    PVec xp{0, 1};  // X
    for (size_t i = 1; i <= d / 2; ++i) {
        xp = ppowmod(xp, p, mod, p);  // X^{p^i} mod f
        PVec g = xp;
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;  // X^{p^i} - X
        ptrim(g);
        PVec gc = pgcd(g, mod, p);
        if (!(gc.size() == 1)) return false;
    }
    return true;
}

constexpr uint64_t kMulTableMaxQ = 512;

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % sp == 0) return n == sp;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(uint64_t p) {
    if (!is_prime_u64(p)) throw NotPrimeError("field characteristic must be prime");
    if (p > (1ULL << 31)) throw TooLargeError("field size above 2^31 is unsupported");
    Field f;
    f.p_ = p;
    f.d_ = 1;
    f.q_ = p;
    f.base_order_ = p;
    f.base_steps_ = 1;
    f.init_tables();
    return f;
}

Field Field::extension(uint64_t p, uint32_t d, std::optional<std::vector<uint32_t>> modulus,
                       uint64_t seed) {
    if (!is_prime_u64(p)) throw NotPrimeError("field characteristic must be prime");
    if (d < 1) throw DegreeMismatchError("extension degree must be >= 1");
    if (d == 1) {
        if (modulus && modulus->size() != 2)
            throw DegreeMismatchError("modulus degree does not match extension degree");
        return prime(p);
    }
    uint64_t q = 1;
    for (uint32_t i = 0; i < d; ++i) {
        q *= p;
        if (q > (1ULL << 31)) throw TooLargeError("field size above 2^31 is unsupported");
    }

    std::vector<uint32_t> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != d + 1) throw DegreeMismatchError("modulus must have degree d");
        for (auto& c : mod) c %= p;
        if (mod.back() != 1) throw DegreeMismatchError("modulus must be monic");
        if (!irreducible(mod, p)) throw NotIrreducibleError("modulus is reducible");
    } else {
        // seeded uniform random monic candidates until one passes the test
        Rng rng(seed);
        for (;;) {
            mod.assign(d + 1, 0);
            mod[d] = 1;
            for (uint32_t i = 0; i < d; ++i) mod[i] = static_cast<uint32_t>(rng.below(p));
            if (mod[0] == 0) continue;  // divisible by X
            if (irreducible(mod, p)) break;
        }
    }

    Field f;
    f.p_ = p;
    f.d_ = d;
    f.q_ = q;
    f.modulus_ = mod;
    f.base_order_ = p;
    f.base_steps_ = d;
    // reduction rows: X^{d+t} mod modulus for t = 0..d-2
    std::vector<std::vector<uint32_t>> red;
    std::vector<uint32_t> cur(d);
    for (uint32_t j = 0; j < d; ++j) cur[j] = static_cast<uint32_t>((p - mod[j]) % p);  // X^d
    red.push_back(cur);
    for (uint32_t t = 1; t + 1 < d; ++t) {
        std::vector<uint32_t> nxt(d, 0);
        uint32_t carry = cur[d - 1];
        for (uint32_t j = d; j-- > 1;) nxt[j] = cur[j - 1];
        nxt[0] = 0;
        if (carry) {
            for (uint32_t j = 0; j < d; ++j)
                nxt[j] = static_cast<uint32_t>((nxt[j] + mulmod_u64(carry, (p - mod[j]) % p, p)) % p);
        }
        red.push_back(nxt);
        cur = nxt;
    }
    f.red_ = std::move(red);
    f.init_tables();
    return f;
}

Field Field::extension_of(const Field& base, uint32_t steps, uint64_t seed) {
    if (steps < 1) throw DegreeMismatchError("extension step count must be >= 1");
    uint32_t d = base.d_ * steps;
    Field big = extension(base.p_, d, std::nullopt, seed);
    big.base_order_ = base.q_;
    big.base_steps_ = steps;
    if (base.d_ > 1) {
        // locate an image of the base generator: a root of base.modulus_ in
        // the big field, found by scanning in canonical order
        Fel beta = 0;
        bool found = false;
        for (uint64_t cand = 0; cand < big.q_; ++cand) {
            // Horner with constant (prime-subfield) coefficients
            Fel acc = 0;
            for (size_t i = base.modulus_.size(); i-- > 0;) {
                acc = big.mul(acc, static_cast<Fel>(cand));
                acc = big.add(acc, big.scalar(base.modulus_[i]));
            }
            if (acc == 0) {
                beta = static_cast<Fel>(cand);
                found = true;
                break;
            }
        }
        if (!found) throw Error("internal: no root of base modulus in extension");
        big.beta_pow_.resize(base.d_);
        big.beta_pow_[0] = big.one();
        for (uint32_t i = 1; i < base.d_; ++i) big.beta_pow_[i] = big.mul(big.beta_pow_[i - 1], beta);
    }
    return big;
}

void Field::init_tables() {
    if (q_ > kMulTableMaxQ) return;
    mul_table_.assign(q_ * q_, 0);
    inv_table_.assign(q_, 0);
    for (uint64_t a = 0; a < q_; ++a)
        for (uint64_t b = a; b < q_; ++b) {
            Fel v = mul_generic(static_cast<Fel>(a), static_cast<Fel>(b));
            mul_table_[a * q_ + b] = v;
            mul_table_[b * q_ + a] = v;
        }
    for (uint64_t a = 1; a < q_; ++a) {
        uint64_t e = q_ - 2;
        Fel r = one(), x = static_cast<Fel>(a);
        while (e) {
            if (e & 1) r = mul_table_[static_cast<uint64_t>(r) * q_ + x];
            x = mul_table_[static_cast<uint64_t>(x) * q_ + x];
            e >>= 1;
        }
        inv_table_[a] = r;
    }
}

Fel Field::add(Fel a, Fel b) const {
    if (d_ == 1) {
        uint64_t s = static_cast<uint64_t>(a) + b;
        if (s >= p_) s -= p_;
        return static_cast<Fel>(s);
    }
    uint64_t pw = 1, r = 0;
    for (uint32_t i = 0; i < d_; ++i) {
        uint64_t da = (a / pw) % p_, db = (b / pw) % p_;
        uint64_t s = da + db;
        if (s >= p_) s -= p_;
        r += s * pw;
        pw *= p_;
    }
    return static_cast<Fel>(r);
}

Fel Field::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel Field::neg(Fel a) const {
    if (d_ == 1) return a == 0 ? 0 : static_cast<Fel>(p_ - a);
    uint64_t pw = 1, r = 0;
    for (uint32_t i = 0; i < d_; ++i) {
        uint64_t da = (a / pw) % p_;
        r += (da == 0 ? 0 : p_ - da) * pw;
        pw *= p_;
    }
    return static_cast<Fel>(r);
}

Fel Field::mul_generic(Fel a, Fel b) const {
    if (d_ == 1) return static_cast<Fel>(mulmod_u64(a, b, p_));
    if (a == 0 || b == 0) return 0;
    uint32_t da[32], db[32];
    uint64_t prod[63] = {0};
    uint64_t x = a, y = b;
    for (uint32_t i = 0; i < d_; ++i) {
        da[i] = static_cast<uint32_t>(x % p_);
        db[i] = static_cast<uint32_t>(y % p_);
        x /= p_;
        y /= p_;
    }
    for (uint32_t i = 0; i < d_; ++i) {
        if (!da[i]) continue;
        for (uint32_t j = 0; j < d_; ++j) prod[i + j] += static_cast<uint64_t>(da[i]) * db[j];
    }
    for (uint32_t i = 2 * d_ - 2; i >= d_; --i) {
        uint64_t c = prod[i] % p_;
        if (c) {
            const auto& row = red_[i - d_];
            for (uint32_t j = 0; j < d_; ++j) prod[j] += c * row[j];
        }
        if (i == d_) break;
    }
    uint64_t r = 0, pw = 1;
    for (uint32_t i = 0; i < d_; ++i) {
        r += (prod[i] % p_) * pw;
        pw *= p_;
    }
    return static_cast<Fel>(r);
}

Fel Field::mul(Fel a, Fel b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<uint64_t>(a) * q_ + b];
    return mul_generic(a, b);
}

Fel Field::pow(Fel a, uint64_t e) const {
    Fel r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Fel Field::inv(Fel a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

Fel Field::div(Fel a, Fel b) const { return mul(a, inv(b)); }

Fel Field::frobenius(Fel a, uint32_t j) const {
    for (uint32_t i = 0; i < j; ++i) a = pow(a, base_order_);
    return a;
}

bool Field::in_base_subfield(Fel a) const { return pow(a, base_order_) == a; }

Fel Field::embed_base(const Field& base, Fel a) const {
    if (base.p_ != p_) throw FieldMismatchError("subfield has different characteristic");
    if (base.d_ == 1) return static_cast<Fel>(a % p_);  // constants embed verbatim
    if (beta_pow_.size() != base.d_)
        throw FieldMismatchError("field was not constructed as an extension of this base");
    Fel r = 0;
    uint64_t x = a;
    for (uint32_t i = 0; i < base.d_; ++i) {
        uint32_t digit = static_cast<uint32_t>(x % base.p_);
        x /= base.p_;
        if (digit) r = add(r, mul(beta_pow_[i], scalar(digit)));
    }
    return r;
}

std::vector<uint32_t> Field::unpack(Fel a) const {
    std::vector<uint32_t> out(d_);
    uint64_t x = a;
    for (uint32_t i = 0; i < d_; ++i) {
        out[i] = static_cast<uint32_t>(x % p_);
        x /= p_;
    }
    return out;
}

Fel Field::pack(const std::vector<uint32_t>& digits) const {
    uint64_t r = 0, pw = 1;
    for (uint32_t i = 0; i < d_; ++i) {
        uint64_t digit = i < digits.size() ? digits[i] % p_ : 0;
        r += digit * pw;
        pw *= p_;
    }
    return static_cast<Fel>(r);
}

std::string Field::to_text(Fel a) const {
    auto digits = unpack(a);
    std::ostringstream os;
    for (uint32_t i = 0; i < d_; ++i) {
        if (i) os << ',';
        os << digits[i];
    }
    return os.str();
}

Fel Field::from_text(const std::string& s) const {
    std::vector<uint32_t> digits;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) digits.push_back(static_cast<uint32_t>(std::stoul(cur)));
    if (digits.size() > d_) throw DegreeMismatchError("element text has too many residues");
    return pack(digits);
}

}  // namespace polydec
