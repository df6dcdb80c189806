#pragma once

// Euler numbers and polynomials, harmonic numbers, Fermat quotients and the
// Jacobi symbol, all reduced modulo prime powers.

#include <cstdint>
#include <vector>

#include "supercong/modring.hpp"

namespace supercong {

/// Exact Euler numbers E_0..E_{n_max} from the recurrence
/// E_n = -sum_{k=1}^{floor(n/2)} binom(n, 2k) E_{n-2k}.
/// Results are cached process-wide; safe to call from several threads.
std::vector<BigInt> exact_euler_numbers(std::size_t n_max);

class EulerTable {
public:
    EulerTable(std::size_t n_max, std::uint64_t modulus);

    std::uint64_t modulus() const noexcept { return modulus_; }
    std::size_t size() const noexcept { return values_.size(); }
    const Residue& operator[](std::size_t n) const { return values_.at(n); }

private:
    std::uint64_t modulus_;
    std::vector<Residue> values_;
};

inline EulerTable euler_numbers(std::size_t n_max, std::uint64_t modulus) {
    return EulerTable(n_max, modulus);
}

/// E_n(x) mod p through sum_k binom(n,k) (E_k / 2^k) (x - 1/2)^{n-k}.
/// Requires n < p and x.modulus() == p.
Residue euler_polynomial_eval(std::size_t n, const Residue& x, std::uint64_t p);

/// H_n = sum_{0<k<=n} 1/k mod m; throws std::domain_error if some k is not invertible.
Residue harmonic(std::uint64_t n, std::uint64_t m);

/// (a^{p-1} - 1)/p mod p; throws std::domain_error if p | a.
Residue fermat_quotient(std::int64_t a, std::uint64_t p);

/// Jacobi symbol (a/n) for odd positive n.
int jacobi(std::int64_t a, std::uint64_t n);

}  // namespace supercong
