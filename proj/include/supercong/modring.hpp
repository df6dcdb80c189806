#pragma once

// Residue arithmetic modulo an arbitrary positive machine-word modulus.
//
// Moduli in this project are prime powers p^K below 2^63. Products go
// through a 128-bit intermediate when the modulus does not fit in 32 bits.

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>

namespace supercong {

using Rational = mpq_class;
using BigInt = mpz_class;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    if (m <= 0xffffffffULL) return (a * b) % m;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Integer power p^k; throws std::overflow_error past 2^63.
std::uint64_t ipow(std::uint64_t p, unsigned k);

class Residue {
public:
    Residue(std::int64_t value, std::uint64_t modulus);
    static Residue from_unsigned(std::uint64_t value, std::uint64_t modulus);

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    Residue operator+(const Residue& rhs) const;
    Residue operator-(const Residue& rhs) const;
    Residue operator*(const Residue& rhs) const;
    Residue operator-() const;
    Residue& operator+=(const Residue& rhs) { return *this = *this + rhs; }
    Residue& operator-=(const Residue& rhs) { return *this = *this - rhs; }
    Residue& operator*=(const Residue& rhs) { return *this = *this * rhs; }

    Residue pow(std::uint64_t exp) const;

    /// Multiplicative inverse; throws std::domain_error when gcd(value, modulus) > 1.
    Residue inverse() const;

    bool operator==(const Residue&) const = default;

private:
    struct Raw {};
    Residue(Raw, std::uint64_t value, std::uint64_t modulus) noexcept
        : value_(value), modulus_(modulus) {}
    void require_same_modulus(const Residue& rhs) const;

    std::uint64_t value_;
    std::uint64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

inline Residue inv_mod(const Residue& a) { return a.inverse(); }

/// num / den reduced mod `modulus`. Negative inputs are normalized.
Residue rational_residue(std::int64_t num, std::int64_t den, std::uint64_t modulus);

/// Exact rational with denominator coprime to the modulus, reduced.
Residue rational_residue(const Rational& q, std::uint64_t modulus);

/// Arbitrary-precision integer reduced into [0, modulus).
Residue big_residue(const BigInt& n, std::uint64_t modulus);

struct LeastResidue {
    std::uint64_t r;  // in [0, p)
    Rational t;       // (a - r) / p
};

/// The least nonnegative r with a ≡ r (mod p), together with t = (a - r)/p.
LeastResidue least_nonneg_residue(const Rational& a, std::uint64_t p);

}  // namespace supercong
