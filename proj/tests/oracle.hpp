#pragma once

// Brute-force reference values built on GMP alone: exact binomials, exact
// rational sums, Euler numbers from the Seidel triangle and rational Euler
// polynomials. Nothing here touches the library's residue arithmetic.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

inline mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class r;
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// binom(x, k) for any integer x.
inline mpz_class binom_signed(long x, unsigned long k) {
    mpz_class r;
    mpz_class xx = x;
    mpz_bin_ui(r.get_mpz_t(), xx.get_mpz_t(), k);
    return r;
}

inline mpz_class power(unsigned long base, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

/// q mod m for a rational whose reduced denominator is coprime to m.
inline std::uint64_t reduce(mpq_class q, std::uint64_t m) {
    q.canonicalize();
    mpz_class mod = mpz_class(std::to_string(m));
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::domain_error("oracle::reduce: denominator not invertible");
    mpz_class r = q.get_num() * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    return std::stoull(r.get_str());
}

inline std::uint64_t reduce(const mpz_class& z, std::uint64_t m) { return reduce(mpq_class(z), m); }

inline std::uint64_t reduce_signed(long v, std::uint64_t m) { return reduce(mpq_class(v), m); }

/// Whether the reduced denominator of q is prime to p.
inline bool p_integral(mpq_class q, std::uint64_t p) {
    q.canonicalize();
    return mpz_fdiv_ui(q.get_den_mpz_t(), p) != 0;
}

inline std::uint64_t ipow(std::uint64_t p, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r *= p;
    return r;
}

enum class Fam { C16, T27, F64, S432 };

inline mpq_class family_term(Fam f, unsigned long k, bool odd_reciprocal) {
    mpz_class num;
    unsigned long base = 0;
    switch (f) {
        case Fam::C16: num = binom(2 * k, k) * binom(2 * k, k); base = 16; break;
        case Fam::T27: num = binom(2 * k, k) * binom(3 * k, k); base = 27; break;
        case Fam::F64: num = binom(4 * k, 2 * k) * binom(2 * k, k); base = 64; break;
        case Fam::S432: num = binom(6 * k, 3 * k) * binom(3 * k, k); base = 432; break;
    }
    mpz_class den = power(base, k);
    if (odd_reciprocal) den *= 2 * k + 1;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline mpq_class family_sum(Fam f, bool odd_reciprocal, long lo, long hi) {
    mpq_class s = 0;
    for (long k = lo; k <= hi; ++k) s += family_term(f, static_cast<unsigned long>(k), odd_reciprocal);
    return s;
}

/// E_0..E_n via the boustrophedon (Seidel) triangle of the zigzag numbers.
inline std::vector<mpz_class> euler_numbers(unsigned n) {
    std::vector<mpz_class> zigzag{1};
    std::vector<mpz_class> row{1};
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<mpz_class> next(m + 1);
        next[0] = 0;
        for (unsigned k = 1; k <= m; ++k) next[k] = next[k - 1] + row[m - k];
        zigzag.push_back(next[m]);
        row = std::move(next);
    }
    std::vector<mpz_class> out(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        if (m % 2 == 1) {
            out[m] = 0;
        } else {
            out[m] = (m / 2) % 2 == 0 ? zigzag[m] : mpz_class(-zigzag[m]);
        }
    }
    return out;
}

/// E_0(x)..E_n(x) from 2E_n(x) + sum_{k<n} binom(n,k) E_k(x) = 2x^n.
inline std::vector<mpq_class> euler_polynomials_at(unsigned n, const mpq_class& x) {
    std::vector<mpq_class> e;
    mpq_class xn = 1;
    for (unsigned m = 0; m <= n; ++m) {
        mpq_class acc = 2 * xn;
        for (unsigned k = 0; k < m; ++k) acc -= mpq_class(binom(m, k)) * e[k];
        acc /= 2;
        acc.canonicalize();
        e.push_back(acc);
        xn *= x;
    }
    return e;
}

inline mpq_class harmonic(unsigned long n) {
    mpq_class h = 0;
    for (unsigned long k = 1; k <= n; ++k) h += mpq_class(1, k);
    h.canonicalize();
    return h;
}

/// Legendre symbol by Euler's criterion, p an odd prime.
inline int legendre(long a, unsigned long p) {
    mpz_class aa = a, pp = p, r;
    mpz_fdiv_r(aa.get_mpz_t(), aa.get_mpz_t(), pp.get_mpz_t());
    if (aa == 0) return 0;
    mpz_class e = (pp - 1) / 2;
    mpz_powm(r.get_mpz_t(), aa.get_mpz_t(), e.get_mpz_t(), pp.get_mpz_t());
    return r == 1 ? 1 : -1;
}

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<unsigned long> primes_between(unsigned long lo, unsigned long hi) {
    std::vector<unsigned long> out;
    for (unsigned long n = lo; n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

}  // namespace oracle
