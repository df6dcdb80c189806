#include "supercong/modring.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace supercong {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t ipow(std::uint64_t p, unsigned k) {
    constexpr std::uint64_t limit = std::uint64_t{1} << 63;
    std::uint64_t result = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (result > limit / p) throw std::overflow_error("ipow: p^k exceeds 2^63");
        result *= p;
    }
    return result;
}

Residue::Residue(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
    if (modulus == 0) throw std::invalid_argument("Residue: modulus must be positive");
    if (value >= 0) {
        value_ = static_cast<std::uint64_t>(value) % modulus;
    } else {
        // -(value+1) avoids overflow at INT64_MIN
        std::uint64_t neg = (static_cast<std::uint64_t>(-(value + 1)) + 1) % modulus;
        value_ = neg == 0 ? 0 : modulus - neg;
    }
}

Residue Residue::from_unsigned(std::uint64_t value, std::uint64_t modulus) {
    if (modulus == 0) throw std::invalid_argument("Residue: modulus must be positive");
    return Residue(Raw{}, value % modulus, modulus);
}

void Residue::require_same_modulus(const Residue& rhs) const {
    if (modulus_ != rhs.modulus_) {
        throw std::invalid_argument("Residue: modulus mismatch (" + std::to_string(modulus_) +
                                    " vs " + std::to_string(rhs.modulus_) + ")");
    }
}

Residue Residue::operator+(const Residue& rhs) const {
    require_same_modulus(rhs);
    std::uint64_t s = value_ + rhs.value_;  // both < 2^63
    if (s >= modulus_) s -= modulus_;
    return Residue(Raw{}, s, modulus_);
}

Residue Residue::operator-(const Residue& rhs) const {
    require_same_modulus(rhs);
    std::uint64_t d = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + (modulus_ - rhs.value_);
    return Residue(Raw{}, d, modulus_);
}

Residue Residue::operator*(const Residue& rhs) const {
    require_same_modulus(rhs);
    return Residue(Raw{}, mul_mod(value_, rhs.value_, modulus_), modulus_);
}

Residue Residue::operator-() const {
    return Residue(Raw{}, value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

Residue Residue::pow(std::uint64_t exp) const {
    return Residue(Raw{}, pow_mod(value_, exp, modulus_), modulus_);
}

Residue Residue::inverse() const {
    // extended Euclid on signed 128-bit to keep the Bezout coefficients exact
    __int128 old_r = value_, r = modulus_;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        if (modulus_ == 1) return Residue(Raw{}, 0, 1);
        throw std::domain_error("inv_mod: " + std::to_string(value_) + " is not invertible mod " +
                                std::to_string(modulus_));
    }
    __int128 m = modulus_;
    old_s %= m;
    if (old_s < 0) old_s += m;
    return Residue(Raw{}, static_cast<std::uint64_t>(old_s), modulus_);
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
    return os << r.value() << " mod " << r.modulus();
}

Residue rational_residue(std::int64_t num, std::int64_t den, std::uint64_t modulus) {
    Residue d(den, modulus);
    if (std::gcd(d.value(), modulus) != 1) {
        throw std::domain_error("rational_residue: denominator " + std::to_string(den) +
                                " not invertible mod " + std::to_string(modulus));
    }
    return Residue(num, modulus) * d.inverse();
}

Residue big_residue(const BigInt& n, std::uint64_t modulus) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return Residue::from_unsigned(mpz_fdiv_ui(n.get_mpz_t(), modulus), modulus);
}

Residue rational_residue(const Rational& q, std::uint64_t modulus) {
    Residue den = big_residue(q.get_den(), modulus);
    if (std::gcd(den.value(), modulus) != 1) {
        throw std::domain_error("rational_residue: denominator not invertible mod " +
                                std::to_string(modulus));
    }
    return big_residue(q.get_num(), modulus) * den.inverse();
}

LeastResidue least_nonneg_residue(const Rational& a, std::uint64_t p) {
    Residue r = rational_residue(a, p);
    Rational t = (a - Rational(BigInt(static_cast<unsigned long>(r.value())))) /
                 Rational(BigInt(static_cast<unsigned long>(p)));
    t.canonicalize();
    return {r.value(), t};
}

}  // namespace supercong
