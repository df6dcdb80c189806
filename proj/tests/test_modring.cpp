#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "supercong/modring.hpp"

using supercong::Residue;

TEST_CASE("residue add, mul and sub") {
    CHECK((Residue(3, 7) + Residue(5, 7)).value() == 1);
    CHECK((Residue(94, 125) * Residue(4, 125)).value() == 1);
    CHECK((Residue(0, 25) - Residue(11, 25)).value() == 14);
    CHECK(Residue(-3, 7).value() == 4);
    CHECK((-Residue(2, 9)).value() == 7);
}

TEST_CASE("inverses of small residues") {
    CHECK(supercong::inv_mod(Residue(3, 125)).value() == 42);
    CHECK(supercong::inv_mod(Residue(16, 125)).value() == 86);
    for (std::uint64_t m : {2ULL, 7ULL, 125ULL, 1000003ULL}) CHECK(Residue(1, m).inverse().value() == 1);
    CHECK_THROWS_AS(Residue(5, 125).inverse(), std::domain_error);
    CHECK_THROWS_AS(Residue(0, 7).inverse(), std::domain_error);
}

TEST_CASE("inverse is an involution") {
    for (std::uint64_t m : {125ULL, 343ULL, 121ULL * 11ULL}) {
        for (std::int64_t a = 1; a < static_cast<std::int64_t>(m); ++a) {
            Residue r(a, m);
            if (std::gcd(static_cast<std::uint64_t>(a), m) != 1) continue;
            CHECK(r.inverse().inverse() == r);
            CHECK((r * r.inverse()).value() == 1);
        }
    }
}

TEST_CASE("rational residues") {
    CHECK(supercong::rational_residue(1, 4, 125).value() == 94);
    CHECK(supercong::rational_residue(9, 64, 125).value() == 6);
    CHECK(supercong::rational_residue(0, 7, 125).value() == 0);
    CHECK(supercong::rational_residue(supercong::Rational(-1, 2), 7).value() == 3);
}

TEST_CASE("rational_residue times denominator recovers numerator") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t m = oracle::ipow(std::vector<std::uint64_t>{5, 7, 11, 13}[i % 4], 1 + i % 4);
        std::int64_t n = static_cast<std::int64_t>(rng() % 100000) - 50000;
        std::int64_t d = static_cast<std::int64_t>(rng() % 1000) + 1;
        if (std::gcd(static_cast<std::uint64_t>(d), m) != 1) continue;
        Residue q = supercong::rational_residue(n, d, m);
        CHECK(q * Residue(d, m) == Residue(n, m));
        CHECK(q.value() == oracle::reduce(mpq_class(n, d), m));
    }
}

TEST_CASE("least nonnegative residues of rationals") {
    auto a = supercong::least_nonneg_residue(supercong::Rational(-1, 3), 7);
    CHECK(a.r == 2);
    CHECK(a.t == supercong::Rational(-1, 3));
    auto b = supercong::least_nonneg_residue(supercong::Rational(-1, 3), 5);
    CHECK(b.r == 3);
    CHECK(b.t == supercong::Rational(-2, 3));
    for (std::uint64_t p : {5ULL, 7ULL, 101ULL}) {
        auto z = supercong::least_nonneg_residue(0, p);
        CHECK(z.r == 0);
        CHECK(z.t == 0);
    }
}

TEST_CASE("least residue decomposition is exact") {
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
        for (long num = -60; num <= 60; ++num) {
            for (unsigned long den : {1UL, 2UL, 3UL, 4UL, 6UL, 8UL, 9UL}) {
                if (den % p == 0) continue;
                supercong::Rational a(num, den);
                a.canonicalize();
                auto d = supercong::least_nonneg_residue(a, p);
                CHECK(d.r < p);
                const supercong::Rational r(static_cast<unsigned long>(d.r));
                const supercong::Rational pp(static_cast<unsigned long>(p));
                CHECK(r + pp * d.t == a);
            }
        }
    }
}

TEST_CASE("large moduli use wide multiplication") {
    const std::uint64_t m = 4611686018427387847ULL;  // below 2^62
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t x = rng() % m, y = rng() % m;
        mpz_class expect = mpz_class(std::to_string(x)) * mpz_class(std::to_string(y));
        CHECK((Residue::from_unsigned(x, m) * Residue::from_unsigned(y, m)).value() == oracle::reduce(expect, m));
    }
    CHECK(supercong::big_residue(mpz_class("-123456789012345678901234567890"), 1000003).value() ==
          oracle::reduce(mpz_class("-123456789012345678901234567890"), 1000003));
}

TEST_CASE("mismatched moduli and overflow are rejected") {
    CHECK_THROWS_AS(Residue(1, 5) + Residue(1, 7), std::invalid_argument);
    CHECK_FALSE(Residue(1, 5) == Residue(1, 7));
    CHECK_THROWS_AS(supercong::ipow(10, 19), std::overflow_error);
    CHECK(supercong::ipow(5, 3) == 125);
}
