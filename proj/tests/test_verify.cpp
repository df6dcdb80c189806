#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "supercong/verify.hpp"

using namespace supercong;

namespace {

std::int64_t extra_value(const CongruenceResult& r, const std::string& key) {
    for (const auto& [k, v] : r.extra)
        if (k == key) return v;
    return -1;
}

}  // namespace

TEST_CASE("central sum up to three quarters") {
    auto r5 = verify_thm_1_1_i(5);
    CHECK(r5.pass);
    CHECK(r5.lhs == 1);
    CHECK(r5.rhs == 1);
    CHECK(r5.modulus == 125);

    auto r7 = verify_thm_1_1_i(7);
    CHECK(r7.pass);
    const std::uint64_t expect = oracle::reduce(mpq_class(-1) + mpq_class(49, 8), 343);
    CHECK(r7.rhs == expect);
    CHECK(verify_thm_1_1_i(13).pass);
    for (unsigned long p : oracle::primes_between(5, 200)) {
        auto r = verify_thm_1_1_i(p);
        CHECK(r.pass);
        if (p % 4 == 1) CHECK(r.rhs == 1);
    }
}

TEST_CASE("central sum over prime powers") {
    auto a = verify_thm_1_1_ii(5, 2);
    CHECK(a.rhs == 1);
    CHECK(a.pass);
    auto b = verify_thm_1_1_ii(7, 2);
    CHECK(b.rhs == 1);
    CHECK(b.pass);
    auto c = verify_thm_1_1_ii(7, 3);
    CHECK(c.rhs == 342);
    CHECK(c.pass);
    CHECK_THROWS_AS(verify_thm_1_1_ii(7, 1), std::invalid_argument);
    for (unsigned long p : {5UL, 7UL, 11UL, 13UL})
        for (unsigned a2 : {2u, 3u})
            CHECK(verify_thm_1_1_ii(p, a2).rhs == (oracle::legendre(-1, p) == 1 || a2 % 2 == 0 ? 1 : p * p * p - 1));
}

TEST_CASE("half-range central sums") {
    auto [h5, l5] = verify_half_sums(5, 1);
    CHECK(h5.lhs == 101);
    CHECK(h5.rhs == 101);
    CHECK(l5.lhs == 101);
    CHECK(l5.pass);
    auto [h7, l7] = verify_half_sums(7, 1);
    CHECK(h7.rhs == 244);
    CHECK(h7.pass);
    auto r = verify_lemma_2_3(5, 2);
    CHECK(r.rhs == 101);
    CHECK(r.pass);
}

TEST_CASE("other families at p = 5") {
    auto v = verify_thm_1_2(5);
    REQUIRE(v.size() == 3);
    CHECK(v[0].name == "eq_1_4");
    CHECK(v[0].lhs == 14);
    CHECK(v[0].rhs == 14);
    CHECK(v[0].pass);
    CHECK(v[1].rhs == 14);
    CHECK(v[1].pass);
    CHECK(v[2].lhs == 16);
    CHECK(v[2].rhs == 16);
    CHECK(v[2].pass);
}

TEST_CASE("odd reciprocal TwoThree sum") {
    CHECK(verify_remark_1_2(5).rhs == 19);
    auto r7 = verify_remark_1_2(7);
    CHECK(r7.rhs == oracle::reduce(mpz_class(oracle::power(3, 7) + 2 - oracle::power(2, 8)), 49));
    CHECK(r7.pass);
    CHECK(verify_remark_1_2(11).pass);
}

TEST_CASE("full-range congruences") {
    auto v5 = verify_rv_and_sun(5);
    REQUIRE(v5.size() == 7);
    CHECK(v5[0].name == "rv_16");
    CHECK(v5[0].rhs == 1);
    CHECK(v5[5].name == "sun_64");
    CHECK(v5[5].rhs == 76);
    CHECK(v5[5].modulus == 125);
    auto v7 = verify_rv_and_sun(7);
    CHECK(v7[3].name == "rv_432");
    CHECK(v7[3].rhs == 48);
    for (unsigned long p : oracle::primes_between(5, 60))
        for (const auto& r : verify_rv_and_sun(p)) CHECK_MESSAGE(r.pass, r.name << " p=" << p);
}

TEST_CASE("shifted central sums") {
    auto d0 = verify_su13(5, 0);
    CHECK(d0.lhs == 101);
    CHECK(d0.rhs == 101);
    CHECK(verify_su13(5, 2).pass);
    CHECK(verify_su13(7, 1).pass);
    for (unsigned long p : oracle::primes_between(5, 100)) {
        auto s = verify_su13(p, 0);
        auto h = verify_eq_1_1(p);
        CHECK(s.lhs == h.lhs);
        CHECK(s.rhs == h.rhs);
        auto all = verify_su13_all(p);
        CHECK(all.pass);
        CHECK(extra_value(all, "checked") == static_cast<std::int64_t>((p + 1) / 2));
    }
}

TEST_CASE("shifted central sums against an exact oracle") {
    for (unsigned long p : {5UL, 7UL, 11UL, 13UL}) {
        const auto e = oracle::euler_numbers(p);
        for (unsigned long d = 0; d <= (p - 1) / 2; ++d) {
            mpq_class lhs = 0;
            for (unsigned long k = 0; k <= (p - 1) / 2; ++k)
                lhs += mpq_class(oracle::binom(2 * k, k) * oracle::binom(2 * k, k + d), oracle::power(16, k));
            auto poly = oracle::euler_polynomials_at(p - 3, mpq_class(2 * d + 1, 2));
            auto r = verify_su13(p, d);
            CHECK(r.lhs == oracle::reduce(lhs, p * p * p));
            const std::uint64_t e_mod_p = oracle::reduce(poly[p - 3], p);
            mpq_class rhs = mpq_class(oracle::legendre(-1, p)) +
                            mpq_class(d % 2 == 0 ? 1 : -1, 4) * mpq_class(p * p) * mpq_class(e_mod_p);
            CHECK(r.rhs == oracle::reduce(rhs, p * p * p));
        }
    }
}

TEST_CASE("generalized binomial products mod p^2") {
    auto a = verify_lemma_3_1(5, 1, 1);
    CHECK(a.lhs == 5);
    CHECK(a.rhs == 5);
    CHECK(a.name == "lem_3_1");
    for (std::uint64_t m = 1; m <= 2; ++m) CHECK(verify_lemma_3_1(5, m, 0).rhs == 0);
    auto b = verify_lemma_3_1(5, 4, 0);
    CHECK(b.name == "rem_3_1");
    CHECK(b.rhs == oracle::reduce(mpq_class(5, 4), 25));
    CHECK(b.pass);
}

TEST_CASE("generalized binomial products mod p^3") {
    auto a = verify_lemma_3_2(5, 1, 1);
    CHECK(a.lhs == 95);
    CHECK(a.rhs == 95);
    for (std::uint64_t k = 1; k < 5; ++k) {
        auto z = verify_lemma_3_2(5, k, 0);
        CHECK(z.lhs == 0);
        CHECK(z.rhs == 0);
    }
    CHECK(verify_lemma_3_2(7, 4, 3).pass);
}

TEST_CASE("generalized binomial products against big integers") {
    for (unsigned long p : {5UL, 7UL}) {
        for (std::uint64_t m = 1; m < p; ++m) {
            for (long t = 0; t < static_cast<long>(p); ++t) {
                long x = static_cast<long>(m) + static_cast<long>(p) * t - 1;
                long y = -1 - static_cast<long>(p) * t - static_cast<long>(m);
                mpz_class prod = oracle::binom_signed(x, (p - 1) / 2) * oracle::binom_signed(y, (p - 1) / 2);
                CHECK(verify_lemma_3_1(p, m, t).lhs == oracle::reduce(prod, p * p));
            }
        }
        for (std::uint64_t k = 1; k < p; ++k) {
            for (long t = 0; t < static_cast<long>(p * p); t += 3) {
                long x = static_cast<long>(p) * t;
                mpz_class prod = oracle::binom_signed(x, k) * oracle::binom_signed(-1 - x, k);
                CHECK(verify_lemma_3_2(p, k, t).lhs == oracle::reduce(prod, p * p * p));
            }
        }
    }
}

TEST_CASE("t sampling") {
    VerifyOptions opts;
    auto small = t_values(7, 49, "lem_3_2", opts);
    CHECK(small.size() == 49);
    auto big = t_values(101, 101, "lem_3_1", opts);
    CHECK(big.size() == 2 + opts.t_samples);
    CHECK(big[0] == 0);
    CHECK(big[1] == 100);
    CHECK(big == t_values(101, 101, "lem_3_1", opts));
    VerifyOptions other = opts;
    other.seed = 99;
    CHECK(big != t_values(101, 101, "lem_3_1", other));
    for (auto t : big) CHECK((t >= 0 && t < 101));
    for (unsigned long p : {5UL, 37UL, 41UL}) {
        CHECK(verify_lemma_3_1_sweep(p, false, opts).pass);
        CHECK(verify_lemma_3_1_sweep(p, true, opts).pass);
        CHECK(verify_lemma_3_2_sweep(p, opts).pass);
    }
}

TEST_CASE("intermediate congruences at small primes") {
    auto e21 = verify_eq_2_1(5);
    CHECK(e21.lhs == 1);
    CHECK(e21.rhs == 1);
    auto c = verify_central_p2a(5, 1);
    CHECK(c.modulus == 125);
    CHECK(c.lhs == 25);
    CHECK(c.rhs == 25);
    for (unsigned long p : {5UL, 7UL, 11UL, 13UL, 17UL}) {
        for (unsigned a : {1u, 2u}) {
            for (const auto& r : verify_proof_steps(p, a)) CHECK_MESSAGE(r.pass, r.name << " p=" << p << " a=" << a);
        }
    }
}

TEST_CASE("per-k central product sign") {
    // k binom(2k,k) binom(2(p-k),p-k) against (-1)^(floor(2k/p)-1) 2p, checked with big integers
    for (unsigned long p : {5UL, 7UL, 11UL}) {
        for (unsigned long k = 1; k < p; ++k) {
            mpz_class lhs = mpz_class(k) * oracle::binom(2 * k, k) * oracle::binom(2 * (p - k), p - k);
            long sign = (2 * k / p) % 2 == 0 ? -1 : 1;
            CHECK(oracle::reduce(lhs, p * p) == oracle::reduce_signed(sign * 2 * static_cast<long>(p), p * p));
        }
        auto r = verify_su11_lemma(p);
        CHECK(r.pass);
        CHECK(extra_value(r, "checked") == static_cast<std::int64_t>(p - 1));
    }
    CHECK(oracle::reduce(mpz_class(2 * oracle::binom(4, 2) * oracle::binom(6, 3)), 25) == 15);
}

TEST_CASE("complementary binomial forms agree") {
    for (unsigned long p : {5UL, 7UL}) {
        for (unsigned a : {1u, 2u}) {
            const unsigned long pa = oracle::ipow(p, a);
            for (unsigned long k = 1; k <= (pa - 1) / 2; ++k)
                CHECK(oracle::binom(pa - k, (pa + 1) / 2) == oracle::binom(pa - k, (pa - 1) / 2 - k));
        }
    }
}

TEST_CASE("half-range binomial valuation count") {
    for (unsigned long p : {5UL, 7UL, 11UL, 13UL}) {
        for (unsigned a : {1u, 2u}) {
            auto r = verify_lemma_2_4(p, a);
            CHECK(r.pass);
            CHECK(r.modulus == 0);
            CHECK(extra_value(r, "max_valuation") == static_cast<std::int64_t>(a) - 1);
        }
    }
}

TEST_CASE("sign of the printed tail congruence") {
    for (unsigned long p : {5UL, 7UL, 11UL}) {
        auto r = verify_eq_2_6(p, 2);
        CHECK(r.pass);
        CHECK(static_cast<std::uint64_t>(extra_value(r, "printed_rhs")) != r.lhs);
    }
}

TEST_CASE("exact identity rows") {
    auto swz = verify_swz_rows(30);
    CHECK(swz.pass);
    CHECK(swz.lhs == 30);
    CHECK(swz.p == 0);
    for (unsigned base : {16u, 27u, 64u, 432u}) CHECK(verify_fractional_rows(base, 20).pass);
    CHECK(verify_recurrence_rows(false, 8).pass);
    CHECK(verify_recurrence_rows(true, 8).pass);
    CHECK_THROWS_AS(verify_fractional_rows(17, 3), std::invalid_argument);
}

TEST_CASE("catalog") {
    const auto& c = catalog();
    std::set<std::string> names;
    for (const auto& e : c) names.insert(e.name);
    CHECK(names.size() == c.size());
    CHECK(find_entry("eq_1_4") != nullptr);
    CHECK(find_entry("nope") == nullptr);
    CHECK(catalog_index("eq_1_1") == 0);
    CHECK_THROWS_AS(catalog_index("nope"), std::out_of_range);
    CHECK(find_entry("central_p2a")->K(3) == 7);
    CHECK(find_entry("eq_1_2")->K(1) == 3);

    VerifyOptions opts;
    for (const auto& e : c) {
        if (e.group == Group::Identity) continue;
        const unsigned a = e.uses_exponent ? std::max(e.min_a, 2u) : 1;
        auto r = run_entry(e, 7, a, opts);
        CHECK_MESSAGE(r.pass, e.name);
        CHECK(r.name == e.name);
        const unsigned K = e.K(a);
        if (K > 0) CHECK(r.modulus == oracle::ipow(7, K));
    }

    auto bad = run_entry(*find_entry("eq_1_3"), 7, 1, opts);
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.error.empty());
}
