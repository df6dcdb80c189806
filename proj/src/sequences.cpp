#include "supercong/sequences.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace supercong {

std::vector<BigInt> exact_euler_numbers(std::size_t n_max) {
    static std::mutex mutex;
    static std::vector<BigInt> cache{BigInt(1)};
    static std::vector<BigInt> pascal_row{BigInt(1)};  // row n of Pascal's triangle, n = cache.size()-1

    std::lock_guard lock(mutex);
    while (cache.size() <= n_max) {
        const std::size_t n = cache.size();
        std::vector<BigInt> next(n + 1);
        next[0] = 1;
        next[n] = 1;
        for (std::size_t k = 1; k < n; ++k) next[k] = pascal_row[k - 1] + pascal_row[k];
        pascal_row = std::move(next);

        BigInt e = 0;
        if (n % 2 == 0) {
            for (std::size_t k = 1; k <= n / 2; ++k) e -= pascal_row[2 * k] * cache[n - 2 * k];
        }
        cache.push_back(std::move(e));
    }
    return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(n_max + 1)};
}

EulerTable::EulerTable(std::size_t n_max, std::uint64_t modulus) : modulus_(modulus) {
    const std::vector<BigInt> exact = exact_euler_numbers(n_max);
    values_.reserve(n_max + 1);
    for (const auto& e : exact) values_.push_back(big_residue(e, modulus));
}

Residue euler_polynomial_eval(std::size_t n, const Residue& x, std::uint64_t p) {
    if (x.modulus() != p) throw std::invalid_argument("euler_polynomial_eval: x must be a residue mod p");
    if (n >= p) throw std::domain_error("euler_polynomial_eval: degree must be below p");
    EulerTable euler(n, p);
    const Residue half = rational_residue(1, 2, p);
    const Residue shift = x - half;

    // binom(n,k) built incrementally; k < p keeps every k invertible
    Residue binom = Residue::from_unsigned(1, p);
    Residue half_pow = Residue::from_unsigned(1, p);
    Residue sum = Residue::from_unsigned(0, p);
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) {
            binom = binom * Residue::from_unsigned(n - k + 1, p) * Residue::from_unsigned(k, p).inverse();
            half_pow *= half;
        }
        if (euler[k].value() != 0) sum += binom * euler[k] * half_pow * shift.pow(n - k);
    }
    return sum;
}

Residue harmonic(std::uint64_t n, std::uint64_t m) {
    Residue sum = Residue::from_unsigned(0, m);
    for (std::uint64_t k = 1; k <= n; ++k) sum += Residue::from_unsigned(k, m).inverse();
    return sum;
}

Residue fermat_quotient(std::int64_t a, std::uint64_t p) {
    Residue ap(a, p);
    if (ap.value() == 0) throw std::domain_error("fermat_quotient: p divides a");
    const std::uint64_t p2 = p * p;
    std::uint64_t power = Residue(a, p2).pow(p - 1).value();
    // power ≡ 1 (mod p), so power - 1 is an exact multiple of p in [0, p^2)
    std::uint64_t q = (power + p2 - 1) % p2 / p;
    return Residue::from_unsigned(q, p);
}

int jacobi(std::int64_t a, std::uint64_t n) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("jacobi: n must be odd and positive");
    std::uint64_t x = Residue(a, n).value();
    std::uint64_t y = n;
    int result = 1;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            if (y % 8 == 3 || y % 8 == 5) result = -result;
        }
        std::swap(x, y);
        if (x % 4 == 3 && y % 4 == 3) result = -result;
        x %= y;
    }
    return y == 1 ? result : 0;
}

}  // namespace supercong
