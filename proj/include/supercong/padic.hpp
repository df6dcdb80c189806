#pragma once

// Valuation-tracked p-adic numbers at finite precision and the factorial /
// binomial decompositions built on them.

#include <cstdint>
#include <vector>

#include "supercong/modring.hpp"

namespace supercong {

/// A p-adic number p^v * u with u a unit known mod p^K, or exact zero.
class PadicApprox {
public:
    static PadicApprox zero(std::uint64_t p, unsigned K);
    /// `unit` must be coprime to p; it is reduced mod p^K.
    static PadicApprox from_unit(std::uint64_t p, unsigned K, std::int64_t valuation,
                                 std::uint64_t unit);
    static PadicApprox from_integer(std::int64_t n, std::uint64_t p, unsigned K);

    bool is_zero() const noexcept { return zero_; }
    std::uint64_t prime() const noexcept { return p_; }
    unsigned precision() const noexcept { return K_; }
    std::uint64_t unit_modulus() const noexcept { return pk_; }
    /// Meaningless for exact zero.
    std::int64_t valuation() const noexcept { return v_; }
    std::uint64_t unit() const noexcept { return u_; }

    PadicApprox operator*(const PadicApprox& rhs) const;
    /// Throws std::domain_error on division by exact zero.
    PadicApprox operator/(const PadicApprox& rhs) const;
    PadicApprox& operator*=(const PadicApprox& rhs) { return *this = *this * rhs; }
    PadicApprox& operator/=(const PadicApprox& rhs) { return *this = *this / rhs; }

    PadicApprox pow(std::uint64_t e) const;

    /// Multiply by p^k (k may be negative).
    PadicApprox shifted(std::int64_t k) const;

    /// p^v * u mod p^K_target. Throws std::domain_error for negative valuation
    /// and std::range_error when v + K < K_target.
    Residue to_residue(unsigned K_target) const;

    bool operator==(const PadicApprox&) const = default;

private:
    friend class FactorialTable;
    PadicApprox(std::uint64_t p, unsigned K, std::uint64_t pk, bool zero, std::int64_t v,
                std::uint64_t u)
        : p_(p), K_(K), pk_(pk), zero_(zero), v_(v), u_(u) {}
    void require_compatible(const PadicApprox& rhs) const;

    std::uint64_t p_;
    unsigned K_;
    std::uint64_t pk_;
    bool zero_;
    std::int64_t v_;
    std::uint64_t u_;
};

inline Residue padic_to_residue(const PadicApprox& a, unsigned K_target) {
    return a.to_residue(K_target);
}

/// ord_p(n!) by Legendre's formula.
std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p);

/// ord_p(n) for n > 0.
unsigned valuation_of(std::uint64_t n, std::uint64_t p);

/// Factorials and binomials mod p^K from a prefix table of p-coprime
/// products over one period [0, min(n_max + 1, p^K)). Read-only after
/// construction.
class FactorialTable {
public:
    FactorialTable(std::uint64_t p, unsigned K, std::uint64_t n_max);

    std::uint64_t prime() const noexcept { return p_; }
    unsigned precision() const noexcept { return K_; }
    std::uint64_t modulus() const noexcept { return pk_; }
    /// Largest n accepted by factorial(); unbounded once a full period is stored.
    std::uint64_t n_max() const noexcept { return n_max_; }

    PadicApprox factorial(std::uint64_t n) const;
    PadicApprox binomial(std::int64_t n, std::int64_t r) const;

private:
    std::uint64_t coprime_product(std::uint64_t n) const;

    std::uint64_t p_;
    unsigned K_;
    std::uint64_t pk_;
    std::uint64_t n_max_;
    bool full_period_;
    std::uint64_t period_product_ = 1;
    std::vector<std::uint64_t> prefix_;
};

/// n! = p^v * u with u mod p^K. Uses O(n) work and no table.
PadicApprox factorial_decomp(std::uint64_t n, std::uint64_t p, unsigned K);

/// binom(n, r) as a p-adic decomposition; exact zero when r < 0 or r > n.
PadicApprox binomial_padic(std::int64_t n, std::int64_t r, std::uint64_t p, unsigned K);

/// Number of carries when adding m and n in base p (Kummer).
unsigned kummer_carries(std::uint64_t m, std::uint64_t n, std::uint64_t p);

/// binom(m, n) mod p by Lucas' digitwise product.
Residue lucas_binomial(std::uint64_t m, std::uint64_t n, std::uint64_t p);

/// x(x-1)...(x-n+1)/n! in the residue ring of x. Requires n < p where the
/// modulus is a power of p; throws std::domain_error if n! is not invertible.
Residue generalized_binomial(const Residue& x, std::uint64_t n);

}  // namespace supercong
