// Arithmetic in the prime field F_p.  All matrix and hom-space computations
// in this library run over one of these, p < 2^16.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cnproj {

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Value type carrying just the modulus; elements are plain uint32_t values
// in [0, p).  Keeping elements unboxed makes the dense kernels cheap.
class PrimeField {
public:
    PrimeField() : p_(2) {}
    explicit PrimeField(uint32_t p) : p_(p) {
        if (p >= (1u << 16) || !is_prime_u32(p))
            throw std::invalid_argument("field modulus must be a prime below 2^16, got " + std::to_string(p));
    }

    uint32_t p() const { return p_; }

    uint32_t reduce(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }
    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint64_t base = a % p_, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<uint32_t>(acc);
    }
    // p is prime, so Fermat works for every nonzero element.
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_p");
        return pow(a, p_ - 2);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    uint32_t p_;
};

}  // namespace cnproj
