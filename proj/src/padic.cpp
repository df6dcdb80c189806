#include "supercong/padic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace supercong {

namespace {

std::uint64_t inverse_unit(std::uint64_t u, std::uint64_t pk) {
    return Residue::from_unsigned(u, pk).inverse().value();
}

}  // namespace

PadicApprox PadicApprox::zero(std::uint64_t p, unsigned K) {
    return PadicApprox(p, K, ipow(p, K), true, 0, 0);
}

PadicApprox PadicApprox::from_unit(std::uint64_t p, unsigned K, std::int64_t valuation,
                                   std::uint64_t unit) {
    if (unit % p == 0) throw std::invalid_argument("PadicApprox: unit divisible by p");
    std::uint64_t pk = ipow(p, K);
    return PadicApprox(p, K, pk, false, valuation, unit % pk);
}

PadicApprox PadicApprox::from_integer(std::int64_t n, std::uint64_t p, unsigned K) {
    if (n == 0) return zero(p, K);
    std::uint64_t pk = ipow(p, K);
    bool negative = n < 0;
    std::uint64_t mag = negative ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    std::int64_t v = 0;
    while (mag % p == 0) {
        mag /= p;
        ++v;
    }
    std::uint64_t u = mag % pk;
    if (negative) u = pk - u;
    return PadicApprox(p, K, pk, false, v, u);
}

void PadicApprox::require_compatible(const PadicApprox& rhs) const {
    if (p_ != rhs.p_ || K_ != rhs.K_) {
        throw std::invalid_argument("PadicApprox: mismatched prime or precision");
    }
}

PadicApprox PadicApprox::operator*(const PadicApprox& rhs) const {
    require_compatible(rhs);
    if (zero_ || rhs.zero_) return zero(p_, K_);
    return PadicApprox(p_, K_, pk_, false, v_ + rhs.v_, mul_mod(u_, rhs.u_, pk_));
}

PadicApprox PadicApprox::operator/(const PadicApprox& rhs) const {
    require_compatible(rhs);
    if (rhs.zero_) throw std::domain_error("PadicApprox: division by exact zero");
    if (zero_) return *this;
    return PadicApprox(p_, K_, pk_, false, v_ - rhs.v_, mul_mod(u_, inverse_unit(rhs.u_, pk_), pk_));
}

PadicApprox PadicApprox::pow(std::uint64_t e) const {
    if (zero_) return e == 0 ? from_unit(p_, K_, 0, 1) : *this;
    return PadicApprox(p_, K_, pk_, false, v_ * static_cast<std::int64_t>(e), pow_mod(u_, e, pk_));
}

PadicApprox PadicApprox::shifted(std::int64_t k) const {
    if (zero_) return *this;
    return PadicApprox(p_, K_, pk_, false, v_ + k, u_);
}

Residue PadicApprox::to_residue(unsigned K_target) const {
    std::uint64_t target = ipow(p_, K_target);
    if (zero_) return Residue::from_unsigned(0, target);
    if (v_ < 0) {
        throw std::domain_error("PadicApprox: negative valuation " + std::to_string(v_) +
                                " cannot be reduced to a residue");
    }
    if (v_ >= static_cast<std::int64_t>(K_target)) return Residue::from_unsigned(0, target);
    if (v_ + static_cast<std::int64_t>(K_) < static_cast<std::int64_t>(K_target)) {
        throw std::range_error("PadicApprox: precision p^" + std::to_string(K_) +
                               " insufficient for residue mod p^" + std::to_string(K_target));
    }
    std::uint64_t scale = ipow(p_, static_cast<unsigned>(v_));
    return Residue::from_unsigned(mul_mod(scale, u_ % target, target), target);
}

std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p) {
    std::uint64_t v = 0;
    while (n > 0) {
        n /= p;
        v += n;
    }
    return v;
}

unsigned valuation_of(std::uint64_t n, std::uint64_t p) {
    if (n == 0) throw std::domain_error("valuation_of: zero has infinite valuation");
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

FactorialTable::FactorialTable(std::uint64_t p, unsigned K, std::uint64_t n_max)
    : p_(p), K_(K), pk_(ipow(p, K)) {
    std::uint64_t length = n_max >= pk_ ? pk_ : n_max + 1;
    full_period_ = length == pk_;
    n_max_ = full_period_ ? UINT64_MAX : n_max;
    prefix_.resize(length);
    std::uint64_t acc = 1 % pk_;
    prefix_[0] = acc;
    for (std::uint64_t i = 1; i < length; ++i) {
        if (i % p != 0) acc = mul_mod(acc, i, pk_);
        prefix_[i] = acc;
    }
    if (full_period_) period_product_ = acc;
}

std::uint64_t FactorialTable::coprime_product(std::uint64_t n) const {
    if (!full_period_) return prefix_[n];
    std::uint64_t blocks = n / pk_;
    std::uint64_t r = prefix_[n % pk_];
    if (blocks == 0) return r;
    if (period_product_ == pk_ - 1) return blocks % 2 == 0 ? r : (r == 0 ? 0 : pk_ - r);
    return mul_mod(pow_mod(period_product_, blocks, pk_), r, pk_);
}

PadicApprox FactorialTable::factorial(std::uint64_t n) const {
    if (n > n_max_) {
        throw std::out_of_range("FactorialTable: n = " + std::to_string(n) + " exceeds table bound " +
                                std::to_string(n_max_));
    }
    std::uint64_t unit = 1 % pk_;
    std::uint64_t v = 0;
    for (std::uint64_t m = n; m > 0; m /= p_) {
        unit = mul_mod(unit, coprime_product(m), pk_);
        v += m / p_;
    }
    return PadicApprox(p_, K_, pk_, false, static_cast<std::int64_t>(v), unit);
}

PadicApprox FactorialTable::binomial(std::int64_t n, std::int64_t r) const {
    if (n < 0 || r < 0 || r > n) return PadicApprox::zero(p_, K_);
    auto un = static_cast<std::uint64_t>(n);
    auto ur = static_cast<std::uint64_t>(r);
    return factorial(un) / (factorial(ur) * factorial(un - ur));
}

PadicApprox factorial_decomp(std::uint64_t n, std::uint64_t p, unsigned K) {
    const std::uint64_t pk = ipow(p, K);
    std::uint64_t period = 0;  // W(p^K), computed on first need
    std::uint64_t unit = 1 % pk;
    for (std::uint64_t m = n; m > 0; m /= p) {
        std::uint64_t blocks = m / pk;
        std::uint64_t rest = m % pk;
        if (blocks > 0 && period == 0) {
            period = 1 % pk;
            for (std::uint64_t i = 1; i < pk; ++i)
                if (i % p != 0) period = mul_mod(period, i, pk);
        }
        std::uint64_t w = blocks > 0 ? pow_mod(period, blocks, pk) : 1 % pk;
        for (std::uint64_t i = 1; i <= rest; ++i)
            if (i % p != 0) w = mul_mod(w, i, pk);
        unit = mul_mod(unit, w, pk);
    }
    return PadicApprox::from_unit(p, K, static_cast<std::int64_t>(legendre_valuation(n, p)),
                                  pk == 1 ? 1 : unit);
}

PadicApprox binomial_padic(std::int64_t n, std::int64_t r, std::uint64_t p, unsigned K) {
    if (n < 0 || r < 0 || r > n) return PadicApprox::zero(p, K);
    auto un = static_cast<std::uint64_t>(n);
    auto ur = static_cast<std::uint64_t>(r);
    return factorial_decomp(un, p, K) / (factorial_decomp(ur, p, K) * factorial_decomp(un - ur, p, K));
}

unsigned kummer_carries(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
    unsigned carries = 0;
    std::uint64_t carry = 0;
    while (m > 0 || n > 0 || carry > 0) {
        std::uint64_t digit = m % p + n % p + carry;
        carry = digit >= p ? 1 : 0;
        carries += static_cast<unsigned>(carry);
        m /= p;
        n /= p;
    }
    return carries;
}

Residue lucas_binomial(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
    Residue result = Residue::from_unsigned(1, p);
    while (n > 0 || m > 0) {
        std::uint64_t mi = m % p, ni = n % p;
        if (ni > mi) return Residue::from_unsigned(0, p);
        // binom(mi, ni) with mi < p: all factors invertible
        Residue num = Residue::from_unsigned(1, p), den = Residue::from_unsigned(1, p);
        for (std::uint64_t j = 0; j < ni; ++j) {
            num *= Residue::from_unsigned(mi - j, p);
            den *= Residue::from_unsigned(j + 1, p);
        }
        result *= num * den.inverse();
        m /= p;
        n /= p;
    }
    return result;
}

Residue generalized_binomial(const Residue& x, std::uint64_t n) {
    const std::uint64_t m = x.modulus();
    Residue num = Residue::from_unsigned(1, m);
    Residue den = Residue::from_unsigned(1, m);
    for (std::uint64_t j = 0; j < n; ++j) {
        num *= x - Residue::from_unsigned(j, m);
        den *= Residue::from_unsigned(j + 1, m);
    }
    if (std::gcd(den.value(), m) != 1) {
        throw std::domain_error("generalized_binomial: n! not invertible (n = " + std::to_string(n) +
                                ")");
    }
    return num * den.inverse();
}

}  // namespace supercong
