#include "supercong/verify.hpp"

#include <optional>
#include <random>
#include <stdexcept>

#include "supercong/identities.hpp"
#include "supercong/padic.hpp"
#include "supercong/sequences.hpp"
#include "supercong/sums.hpp"

namespace supercong {

CongruenceResult make_result(std::string name, std::uint64_t p, unsigned a, const Residue& lhs,
                             const Residue& rhs) {
    if (lhs.modulus() != rhs.modulus()) throw std::invalid_argument("make_result: modulus mismatch");
    CongruenceResult r;
    r.name = std::move(name);
    r.p = p;
    r.a = a;
    r.modulus = lhs.modulus();
    r.lhs = lhs.value();
    r.rhs = rhs.value();
    r.pass = r.lhs == r.rhs;
    return r;
}

CongruenceResult count_result(std::string name, std::uint64_t p, unsigned a, std::uint64_t holds,
                              std::uint64_t checked) {
    CongruenceResult r;
    r.name = std::move(name);
    r.p = p;
    r.a = a;
    r.modulus = 0;
    r.lhs = holds;
    r.rhs = checked;
    r.pass = holds == checked;
    return r;
}

namespace {

void require_prime_domain(std::uint64_t p) {
    if (p < 5 || p % 2 == 0 || p % 3 == 0) throw std::invalid_argument("verifier: p must be a prime > 3");
}

Residue R(std::int64_t v, std::uint64_t m) { return Residue(v, m); }

Residue sign_res(int s, std::uint64_t m) { return Residue(s, m); }

// E_{p-3} mod m
Residue euler_p3(std::uint64_t p, std::uint64_t m) {
    return big_residue(exact_euler_numbers(p - 3)[p - 3], m);
}

// p^2 * x for x known mod p, as a residue mod p^3
Residue lift_p2(std::uint64_t p, const Residue& x_mod_p) {
    const std::uint64_t p3 = ipow(p, 3);
    return Residue::from_unsigned(p * p * x_mod_p.value(), p3);
}

int neg_one_power(std::uint64_t e) { return e % 2 == 0 ? 1 : -1; }

Residue central_sum(std::uint64_t p, std::int64_t lo, std::int64_t hi, unsigned K, unsigned unit = 0) {
    SumSpec spec{Family::CentralSquared, Weight::Unit, lo, hi, p, K, unit};
    return sum_eval(spec);
}

// Collects per-case results of a sweep into one row: the first failure, else
// the last case, plus counts.
class Sweep {
public:
    Sweep(std::string name, std::uint64_t p, unsigned a) : name_(std::move(name)), p_(p), a_(a) {}

    void add(CongruenceResult r) {
        ++checked_;
        if (!r.pass) {
            ++failed_;
            if (!first_failure_) first_failure_ = std::move(r);
            return;
        }
        last_ = std::move(r);
    }

    CongruenceResult finish() && {
        CongruenceResult out;
        if (first_failure_) {
            out = std::move(*first_failure_);
        } else if (last_) {
            out = std::move(*last_);
        } else {
            out = count_result(name_, p_, a_, 0, 0);
        }
        out.name = name_;
        out.p = p_;
        out.a = a_;
        out.extra.emplace_back("checked", static_cast<std::int64_t>(checked_));
        out.extra.emplace_back("failed", static_cast<std::int64_t>(failed_));
        return out;
    }

private:
    std::string name_;
    std::uint64_t p_;
    unsigned a_;
    std::uint64_t checked_ = 0;
    std::uint64_t failed_ = 0;
    std::optional<CongruenceResult> first_failure_;
    std::optional<CongruenceResult> last_;
};

CongruenceResult with_extra(CongruenceResult r, std::string key, std::int64_t value) {
    r.extra.emplace_back(std::move(key), value);
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Central binomial sums

CongruenceResult verify_thm_1_1_i(std::uint64_t p) {
    require_prime_domain(p);
    const std::uint64_t p3 = ipow(p, 3);
    Residue lhs = central_sum(p, 0, static_cast<std::int64_t>(3 * p / 4), 3);
    Residue rhs = R(1, p3);
    if (p % 4 == 3) {
        const std::uint64_t idx = (p - 3) / 4;
        if (idx != p / 4) throw std::logic_error("eq_1_2: (p-3)/4 != floor(p/4)");
        Residue b = binomial_padic(static_cast<std::int64_t>((p - 3) / 2), static_cast<std::int64_t>(idx), p, 3)
                        .to_residue(3);
        Residue p2 = Residue::from_unsigned(p * p, p3);
        rhs = R(-1, p3) + p2 * (R(2, p3) * b * b).inverse();
    }
    return make_result("eq_1_2", p, 1, lhs, rhs);
}

CongruenceResult verify_thm_1_1_ii(std::uint64_t p, unsigned a) {
    require_prime_domain(p);
    if (a < 2) throw std::invalid_argument("eq_1_3: a must be at least 2");
    const std::uint64_t pa = ipow(p, a);
    Residue lhs = central_sum(p, 0, static_cast<std::int64_t>(3 * pa / 4), 3);
    Residue rhs = sign_res(jacobi(-1, pa), ipow(p, 3));
    return make_result("eq_1_3", p, a, lhs, rhs);
}

CongruenceResult verify_eq_1_1(std::uint64_t p) {
    require_prime_domain(p);
    const std::uint64_t p3 = ipow(p, 3);
    Residue lhs = central_sum(p, 0, static_cast<std::int64_t>((p - 1) / 2), 3);
    Residue rhs = sign_res(jacobi(-1, p), p3) + lift_p2(p, euler_p3(p, p));
    return make_result("eq_1_1", p, 1, lhs, rhs);
}

CongruenceResult verify_lemma_2_3(std::uint64_t p, unsigned a) {
    require_prime_domain(p);
    if (a < 1) throw std::invalid_argument("eq_2_5: a must be positive");
    const std::uint64_t p3 = ipow(p, 3);
    const std::uint64_t pa = ipow(p, a);
    Residue lhs = central_sum(p, 0, static_cast<std::int64_t>((pa - 1) / 2), 3);
    Residue rhs = sign_res(jacobi(-1, pa), p3) +
                  sign_res(jacobi(-1, ipow(p, a - 1)), p3) * lift_p2(p, euler_p3(p, p));
    return make_result("eq_2_5", p, a, lhs, rhs);
}

std::pair<CongruenceResult, CongruenceResult> verify_half_sums(std::uint64_t p, unsigned a) {
    return {verify_eq_1_1(p), verify_lemma_2_3(p, a)};
}

// ---------------------------------------------------------------------------
// Other families

namespace {

Residue family_sum(std::uint64_t p, Family f, Weight w, std::int64_t hi, unsigned K) {
    return sum_eval(SumSpec{f, w, 0, hi, p, K, 0});
}

}  // namespace

CongruenceResult verify_eq_1_4(std::uint64_t p) {
    require_prime_domain(p);
    const std::uint64_t p2 = p * p;
    Residue lhs = family_sum(p, Family::TwoThree, Weight::Unit, static_cast<std::int64_t>((p - 1) / 2), 2);
    Residue rhs = sign_res(jacobi(static_cast<std::int64_t>(p), 3), p2) * (R(2, p2).pow(p) + R(1, p2)) *
                  R(3, p2).inverse();
    return make_result("eq_1_4", p, 1, lhs, rhs);
}

CongruenceResult verify_eq_1_5(std::uint64_t p) {
    require_prime_domain(p);
    const std::uint64_t p2 = p * p;
    Residue lhs = family_sum(p, Family::SixThree, Weight::OddReciprocal, static_cast<std::int64_t>((p - 1) / 2), 2);
    Residue rhs = sign_res(jacobi(static_cast<std::int64_t>(p), 3), p2) * (R(3, p2).pow(p) + R(1, p2)) *
                  R(4, p2).inverse();
    return make_result("eq_1_5", p, 1, lhs, rhs);
}

CongruenceResult verify_eq_1_6(std::uint64_t p) {
    require_prime_domain(p);
    const std::uint64_t p2 = p * p;
    Residue lhs = family_sum(p, Family::FourTwo, Weight::OddReciprocal, static_cast<std::int64_t>((p - 1) / 2), 2);
    Residue rhs = sign_res(jacobi(-1, p), p2) * R(2, p2).pow(p - 1);
    return make_result("eq_1_6", p, 1, lhs, rhs);
}

std::vector<CongruenceResult> verify_thm_1_2(std::uint64_t p) {
    return {verify_eq_1_4(p), verify_eq_1_5(p), verify_eq_1_6(p)};
}

CongruenceResult verify_remark_1_2(std::uint64_t p) {
    require_prime_domain(p);
    const std::uint64_t p2 = p * p;
    Residue lhs = family_sum(p, Family::TwoThree, Weight::OddReciprocal, static_cast<std::int64_t>((p - 1) / 2), 2);
    Residue rhs = sign_res(jacobi(static_cast<std::int64_t>(p), 3), p2) *
                  (R(3, p2).pow(p) + R(2, p2) - R(2, p2).pow(p + 1));
    return make_result("rem_1_2", p, 1, lhs, rhs);
}

CongruenceResult verify_su11_full(std::uint64_t p) {
    require_prime_domain(p);
    const std::uint64_t p3 = ipow(p, 3);
    Residue lhs = central_sum(p, 0, static_cast<std::int64_t>(p - 1), 3);
    Residue rhs = sign_res(jacobi(-1, p), p3) - lift_p2(p, euler_p3(p, p));
    return make_result("su11_full", p, 1, lhs, rhs);
}

namespace {

const char* const kRvSunNames[] = {"rv_16", "rv_27", "rv_64", "rv_432", "sun_27", "sun_64", "sun_432"};

CongruenceResult rv_sun_one(std::uint64_t p, std::size_t index) {
    require_prime_domain(p);
    const std::uint64_t p2 = p * p;
    const std::uint64_t p3 = p2 * p;
    const auto hi = static_cast<std::int64_t>(p - 1);
    const int minus_one = jacobi(-1, p);
    const int p_over_3 = jacobi(static_cast<std::int64_t>(p), 3);
    const std::string name = kRvSunNames[index];
    switch (index) {
        case 0:
            return make_result(name, p, 1, family_sum(p, Family::CentralSquared, Weight::Unit, hi, 2),
                               sign_res(minus_one, p2));
        case 1:
            return make_result(name, p, 1, family_sum(p, Family::TwoThree, Weight::Unit, hi, 2),
                               sign_res(p_over_3, p2));
        case 2:
            return make_result(name, p, 1, family_sum(p, Family::FourTwo, Weight::Unit, hi, 2),
                               sign_res(jacobi(-2, p), p2));
        case 3:
            return make_result(name, p, 1, family_sum(p, Family::SixThree, Weight::Unit, hi, 2),
                               sign_res(minus_one, p2));
        case 4:
            return make_result(name, p, 1, family_sum(p, Family::TwoThree, Weight::OddReciprocal, hi, 2),
                               sign_res(p_over_3, p2));
        case 5:
            return make_result(name, p, 1, family_sum(p, Family::FourTwo, Weight::OddReciprocal, hi, 3),
                               sign_res(minus_one, p3) - R(3, p3) * lift_p2(p, euler_p3(p, p)));
        case 6:
            return make_result(name, p, 1, family_sum(p, Family::SixThree, Weight::OddReciprocal, hi, 2),
                               sign_res(p_over_3, p2));
        default: throw std::out_of_range("rv_sun_one: index");
    }
}

}  // namespace

std::vector<CongruenceResult> verify_rv_and_sun(std::uint64_t p) {
    std::vector<CongruenceResult> out;
    for (std::size_t i = 0; i < 7; ++i) out.push_back(rv_sun_one(p, i));
    return out;
}

// ---------------------------------------------------------------------------
// Shifted central sums against Euler polynomials

namespace {

CongruenceResult su13_with_table(std::uint64_t p, std::uint64_t d, const FactorialTable& table) {
    const std::uint64_t p3 = ipow(p, 3);
    const std::uint64_t n = (p - 1) / 2;
    if (d > n) throw std::invalid_argument("su13: d must be at most (p-1)/2");
    const std::uint64_t inv16 = Residue::from_unsigned(16, p3).inverse().value();
    std::uint64_t power = 1;
    Residue lhs = R(0, p3);
    for (std::uint64_t k = 0; k <= n; ++k) {
        auto kk = static_cast<std::int64_t>(k);
        PadicApprox term = table.binomial(2 * kk, kk) * table.binomial(2 * kk, kk + static_cast<std::int64_t>(d)) *
                           PadicApprox::from_unit(p, 3, 0, power);
        lhs += term.to_residue(3);
        power = mul_mod(power, inv16, p3);
    }
    Residue x = R(static_cast<std::int64_t>(d), p) + rational_residue(1, 2, p);
    Residue poly = euler_polynomial_eval(p - 3, x, p);
    Residue rhs = sign_res(jacobi(-1, p), p3) +
                  sign_res(neg_one_power(d), p3) * R(4, p3).inverse() * lift_p2(p, poly);
    return with_extra(make_result("su13", p, 1, lhs, rhs), "d", static_cast<std::int64_t>(d));
}

}  // namespace

CongruenceResult verify_su13(std::uint64_t p, std::uint64_t d) {
    require_prime_domain(p);
    FactorialTable table(p, 3, p - 1);
    return su13_with_table(p, d, table);
}

CongruenceResult verify_su13_all(std::uint64_t p) {
    require_prime_domain(p);
    FactorialTable table(p, 3, p - 1);
    Sweep sweep("su13", p, 1);
    for (std::uint64_t d = 0; d <= (p - 1) / 2; ++d) sweep.add(su13_with_table(p, d, table));
    return std::move(sweep).finish();
}

// ---------------------------------------------------------------------------
// Products of generalized binomials

CongruenceResult verify_lemma_3_1(std::uint64_t p, std::uint64_t m, std::int64_t t) {
    require_prime_domain(p);
    if (m < 1 || m > p - 1) throw std::invalid_argument("lem_3_1: m must be in 1..p-1");
    const std::uint64_t p2 = p * p;
    const std::uint64_t n = (p - 1) / 2;
    const Residue tr = R(t, p);  // only t mod p matters for the congruence mod p^2
    const auto tp = static_cast<std::int64_t>(tr.value());
    const auto pm = static_cast<std::int64_t>(m);
    const auto pp = static_cast<std::int64_t>(p);
    Residue lhs = generalized_binomial(R(pm + pp * tp - 1, p2), n) *
                  generalized_binomial(R(-1 - pp * tp - pm, p2), n);
    const bool remark = m > n;
    Residue numerator = R(pp * (tp + (remark ? 1 : 0)), p2);
    Residue rhs = numerator * R(pm, p2).inverse();
    CongruenceResult r = make_result(remark ? "rem_3_1" : "lem_3_1", p, 1, lhs, rhs);
    r.extra.emplace_back("m", pm);
    r.extra.emplace_back("t", tp);
    return r;
}

CongruenceResult verify_lemma_3_2(std::uint64_t p, std::uint64_t k, std::int64_t t) {
    require_prime_domain(p);
    if (k < 1 || k > p - 1) throw std::invalid_argument("lem_3_2: k must be in 1..p-1");
    const std::uint64_t p2 = p * p;
    const std::uint64_t p3 = p2 * p;
    const auto tv = static_cast<std::int64_t>(R(t, p2).value());
    const auto pp = static_cast<std::int64_t>(p);
    Residue pt = R(pp, p3) * R(tv, p3);
    Residue lhs = generalized_binomial(pt, k) * generalized_binomial(R(-1, p3) - pt, k);
    Residue kinv = R(static_cast<std::int64_t>(k), p3).inverse();
    Residue rhs = -(pt * pt * kinv * kinv) - pt * kinv;
    CongruenceResult r = make_result("lem_3_2", p, 1, lhs, rhs);
    r.extra.emplace_back("k", static_cast<std::int64_t>(k));
    r.extra.emplace_back("t", tv);
    return r;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::vector<std::int64_t> t_values(std::uint64_t p, std::uint64_t t_modulus, const std::string& name,
                                   const VerifyOptions& opts) {
    std::vector<std::int64_t> out;
    if (p <= opts.exhaustive_t_limit) {
        out.reserve(t_modulus);
        for (std::uint64_t t = 0; t < t_modulus; ++t) out.push_back(static_cast<std::int64_t>(t));
        return out;
    }
    out.push_back(0);
    out.push_back(static_cast<std::int64_t>(t_modulus - 1));
    std::mt19937_64 rng(splitmix64(opts.seed ^ splitmix64(fnv1a(name) ^ splitmix64(p))));
    for (std::uint64_t i = 0; i < opts.t_samples; ++i) out.push_back(static_cast<std::int64_t>(rng() % t_modulus));
    return out;
}

CongruenceResult verify_lemma_3_1_sweep(std::uint64_t p, bool remark, const VerifyOptions& opts) {
    require_prime_domain(p);
    const std::uint64_t n = (p - 1) / 2;
    const std::string name = remark ? "rem_3_1" : "lem_3_1";
    const auto ts = t_values(p, p, name, opts);
    Sweep sweep(name, p, 1);
    const std::uint64_t m_lo = remark ? n + 1 : 1;
    const std::uint64_t m_hi = remark ? p - 1 : n;
    for (std::uint64_t m = m_lo; m <= m_hi; ++m)
        for (std::int64_t t : ts) sweep.add(verify_lemma_3_1(p, m, t));
    return std::move(sweep).finish();
}

CongruenceResult verify_lemma_3_2_sweep(std::uint64_t p, const VerifyOptions& opts) {
    require_prime_domain(p);
    const auto ts = t_values(p, p * p, "lem_3_2", opts);
    Sweep sweep("lem_3_2", p, 1);
    for (std::uint64_t k = 1; k <= p - 1; ++k)
        for (std::int64_t t : ts) sweep.add(verify_lemma_3_2(p, k, t));
    return std::move(sweep).finish();
}

// ---------------------------------------------------------------------------
// Intermediate congruences

CongruenceResult verify_eq_2_1(std::uint64_t p) {
    require_prime_domain(p);
    DualSumSpec spec{DualKind::CentralReciprocal, 1, static_cast<std::int64_t>((p - 1) / 2), p, 1};
    Residue lhs = dual_sum_eval(spec);
    Residue rhs = sign_res(neg_one_power((p - 1) / 2), p) * R(4, p) * euler_p3(p, p);
    return make_result("eq_2_1", p, 1, lhs, rhs);
}

CongruenceResult verify_eq_2_2(std::uint64_t p) {
    require_prime_domain(p);
    const std::uint64_t p3 = ipow(p, 3);
    Residue lhs = central_sum(p, static_cast<std::int64_t>((p + 1) / 2), static_cast<std::int64_t>(3 * p / 4), 3);
    Residue rhs = -lift_p2(p, euler_p3(p, p));
    if (p % 4 == 3) {
        Residue b = binomial_padic(static_cast<std::int64_t>((p - 3) / 2), static_cast<std::int64_t>(p / 4), p, 3)
                        .to_residue(3);
        rhs += Residue::from_unsigned(p * p, p3) * (R(2, p3) * b * b).inverse();
    }
    return make_result("eq_2_2", p, 1, lhs, rhs);
}

CongruenceResult verify_eq_2_3(std::uint64_t p) {
    require_prime_domain(p);
    const std::uint64_t n = (p - 1) / 2;
    DualSumSpec spec{DualKind::CentralSquaredReciprocal, static_cast<std::int64_t>(n / 2 + 1),
                     static_cast<std::int64_t>(n), p, 1};
    Residue lhs = dual_sum_eval(spec);
    Residue rhs = R(-4, p) * euler_p3(p, p);
    if (n % 2 == 1) {
        Residue b = lucas_binomial(n - 1, n / 2, p);
        rhs += R(2, p) * (b * b).inverse();
    }
    return make_result("eq_2_3", p, 1, lhs, rhs);
}

CongruenceResult verify_su11_lemma(std::uint64_t p) {
    require_prime_domain(p);
    const std::uint64_t p2 = p * p;
    FactorialTable table(p, 2, 2 * p);
    Sweep sweep("su11_lemma", p, 1);
    for (std::uint64_t k = 1; k <= p - 1; ++k) {
        auto kk = static_cast<std::int64_t>(k);
        auto jj = static_cast<std::int64_t>(p - k);
        PadicApprox value = PadicApprox::from_integer(kk, p, 2) * table.binomial(2 * kk, kk) *
                            table.binomial(2 * jj, jj);
        Residue lhs = value.to_residue(2);
        // (-1)^{floor(2k/p) - 1} 2p
        Residue rhs = sign_res(-neg_one_power(2 * k / p), p2) * R(2 * static_cast<std::int64_t>(p), p2);
        sweep.add(with_extra(make_result("su11_lemma", p, 1, lhs, rhs), "k", kk));
    }
    return std::move(sweep).finish();
}

CongruenceResult verify_lemma_2_4(std::uint64_t p, unsigned a) {
    if (a < 1) throw std::invalid_argument("lemma_2_4: a must be positive");
    require_prime_domain(p);
    const std::uint64_t pa = ipow(p, a);
    std::uint64_t holds = 0, checked = 0, max_val = 0;
    for (std::uint64_t k = 1; k <= (pa - 1) / 2; ++k) {
        const std::uint64_t n = pa - k, r = (pa - 1) / 2 - k;
        const std::uint64_t v = legendre_valuation(n, p) - legendre_valuation(r, p) - legendre_valuation(n - r, p);
        max_val = std::max(max_val, v);
        ++checked;
        if (v <= a - 1) ++holds;
    }
    CongruenceResult out = count_result("lemma_2_4", p, a, holds, checked);
    out.extra.emplace_back("max_valuation", static_cast<std::int64_t>(max_val));
    out.extra.emplace_back("bound", static_cast<std::int64_t>(a - 1));
    return out;
}

CongruenceResult verify_central_p2a(std::uint64_t p, unsigned a) {
    require_prime_domain(p);
    if (a < 1) throw std::invalid_argument("central_p2a: a must be positive");
    const unsigned K = 2 * a + 1;
    const std::uint64_t pa = ipow(p, a);
    PadicApprox c = binomial_padic(static_cast<std::int64_t>(2 * pa - 2), static_cast<std::int64_t>(pa - 1), p, K);
    PadicApprox sq = c * c;
    Residue lhs = sq.to_residue(K);
    Residue rhs = Residue::from_unsigned(ipow(p, 2 * a), lhs.modulus());
    return with_extra(make_result("central_p2a", p, a, lhs, rhs), "valuation", sq.valuation());
}

CongruenceResult verify_eq_2_6(std::uint64_t p, unsigned a) {
    require_prime_domain(p);
    if (a < 2) throw std::invalid_argument("eq_2_6: a must be at least 2");
    const std::uint64_t pa = ipow(p, a);
    const std::uint64_t p3 = ipow(p, 3);
    // every tail term has a carry in binom(2k,k), so valuation >= 2 and units mod p suffice
    Residue lhs = central_sum(p, static_cast<std::int64_t>((pa + 1) / 2), static_cast<std::int64_t>(3 * pa / 4), 3, 1);
    Residue printed = sign_res(jacobi(-1, ipow(p, a - 1)), p3) * lift_p2(p, euler_p3(p, p));
    Residue rhs = -printed;
    CongruenceResult r = make_result("eq_2_6", p, a, lhs, rhs);
    r.extra.emplace_back("printed_rhs", static_cast<std::int64_t>(printed.value()));
    return r;
}

CongruenceResult verify_halfbinom_ratio(std::uint64_t p, unsigned a) {
    require_prime_domain(p);
    if (a < 1) throw std::invalid_argument("halfbinom_ratio: a must be positive");
    const std::uint64_t pa = ipow(p, a);
    const std::uint64_t half = (pa - 1) / 2;
    FactorialTable table(p, 1, pa);
    const Residue inv_minus4 = R(-4, p).inverse();
    Residue minus4_inv_pow = R(1, p);
    Sweep sweep("halfbinom_ratio", p, a);
    for (std::uint64_t k = 1; k <= half; ++k) {
        auto kk = static_cast<std::int64_t>(k);
        minus4_inv_pow *= inv_minus4;
        // binom(-1/2, k) = binom(2k,k) / (-4)^k
        PadicApprox denom = table.binomial(2 * kk, kk) * PadicApprox::from_unit(p, 1, 0, minus4_inv_pow.value());
        PadicApprox ratio = table.binomial(static_cast<std::int64_t>(half), kk) / denom;
        Residue lhs = ratio.valuation() < 0 ? R(0, p) : ratio.to_residue(1);
        sweep.add(with_extra(make_result("halfbinom_ratio", p, a, lhs, R(1, p)), "k", kk));
    }
    return std::move(sweep).finish();
}

namespace {

// p^{2a-2} sum 1/binom((p^a-3)/2, k)^2 over [lo, (p^a-3)/2] mod p
Residue inverse_square_sum(std::uint64_t p, unsigned a, std::int64_t lo) {
    const std::uint64_t pa = ipow(p, a);
    const auto top = static_cast<std::int64_t>((pa - 3) / 2);
    DualSumSpec spec{DualKind::InverseBinomialSquared, lo, top, p, 1, top, 0, 2 * static_cast<std::int64_t>(a) - 2};
    return dual_sum_eval(spec);
}

}  // namespace

CongruenceResult verify_eq_2_7(std::uint64_t p, unsigned a) {
    require_prime_domain(p);
    if (a < 2) throw std::invalid_argument("eq_2_7: a must be at least 2");
    const std::uint64_t pa = ipow(p, a);
    Residue lhs = inverse_square_sum(p, a, static_cast<std::int64_t>(pa / 4));
    Residue rhs = -(sign_res(jacobi(-1, ipow(p, a - 1)), p) * euler_p3(p, p));
    return make_result("eq_2_7", p, a, lhs, rhs);
}

CongruenceResult verify_eq_2_8(std::uint64_t p, unsigned a) {
    require_prime_domain(p);
    if (a < 1) throw std::invalid_argument("eq_2_8: a must be positive");
    Residue lhs = inverse_square_sum(p, a, 0);
    Residue rhs = R(-2, p) * sign_res(jacobi(-1, ipow(p, a - 1)), p) * euler_p3(p, p);
    return make_result("eq_2_8", p, a, lhs, rhs);
}

CongruenceResult verify_eq_2_9(std::uint64_t p, unsigned a) {
    require_prime_domain(p);
    if (a < 1) throw std::invalid_argument("eq_2_9: a must be positive");
    const std::uint64_t pa = ipow(p, a);
    DualSumSpec spec{DualKind::InverseKBinomial,
                     1,
                     static_cast<std::int64_t>((pa - 1) / 2),
                     p,
                     1,
                     static_cast<std::int64_t>(pa),
                     static_cast<std::int64_t>((pa + 1) / 2),
                     2 * static_cast<std::int64_t>(a) - 2};
    Residue lhs = dual_sum_eval(spec);
    Residue rhs = R(-2, p) * sign_res(jacobi(-1, ipow(p, a - 1)), p) * euler_p3(p, p);
    return make_result("eq_2_9", p, a, lhs, rhs);
}

CongruenceResult verify_lucas_lift(std::uint64_t p, unsigned a) {
    require_prime_domain(p);
    if (a < 1) throw std::invalid_argument("lucas_lift: a must be positive");
    const std::uint64_t pa = ipow(p, a);
    const std::uint64_t pa1 = ipow(p, a - 1);
    const int sign = neg_one_power((pa1 - 1) / 2);
    Sweep sweep("lucas_lift", p, a);
    for (std::uint64_t j = 1; j <= (p - 1) / 2; ++j) {
        Residue lhs = lucas_binomial(pa1 * (p - j) - 1, (pa - 1) / 2, p);
        Residue rhs = sign_res(sign, p) * lucas_binomial(p - j - 1, (p - 1) / 2, p);
        sweep.add(with_extra(make_result("lucas_lift", p, a, lhs, rhs), "j", static_cast<std::int64_t>(j)));
    }
    return std::move(sweep).finish();
}

CongruenceResult verify_lucas_reduction(std::uint64_t p) {
    require_prime_domain(p);
    const int sign = neg_one_power((p - 1) / 2);
    const Residue inv4 = R(4, p).inverse();
    Residue inv4_pow = R(1, p);
    Sweep sweep("lucas_reduction", p, 1);
    for (std::uint64_t j = 1; j <= (p - 1) / 2; ++j) {
        inv4_pow *= inv4;
        Residue lhs = lucas_binomial(p - j - 1, (p - 1) / 2, p);
        Residue rhs = sign_res(sign, p) * lucas_binomial(2 * j, j, p) * inv4_pow;
        sweep.add(with_extra(make_result("lucas_reduction", p, 1, lhs, rhs), "j", static_cast<std::int64_t>(j)));
    }
    return std::move(sweep).finish();
}

// ---------------------------------------------------------------------------
// Harmonic numbers

CongruenceResult verify_lehmer(std::uint64_t p, unsigned which) {
    require_prime_domain(p);
    Residue q2 = fermat_quotient(2, p);
    Residue q3 = fermat_quotient(3, p);
    Residue three_halves = rational_residue(3, 2, p);
    Residue rhs = R(0, p);
    switch (which) {
        case 2: rhs = R(-2, p) * q2; break;
        case 4: rhs = R(-3, p) * q2; break;
        case 3: rhs = -(three_halves * q3); break;
        case 6: rhs = R(-2, p) * q2 - three_halves * q3; break;
        default: throw std::invalid_argument("lehmer: which must be 2, 3, 4 or 6");
    }
    return make_result("lehmer_" + std::to_string(which), p, 1, harmonic(p / which, p), rhs);
}

CongruenceResult verify_harmonic_2p3(std::uint64_t p) {
    require_prime_domain(p);
    return make_result("harmonic_2p3", p, 1, harmonic(2 * p / 3, p), harmonic(p / 3, p));
}

CongruenceResult verify_harmonic_reflect(std::uint64_t p) {
    require_prime_domain(p);
    std::vector<Residue> prefix{R(0, p)};
    for (std::uint64_t k = 1; k < p; ++k) prefix.push_back(prefix.back() + R(static_cast<std::int64_t>(k), p).inverse());
    Sweep sweep("harmonic_reflect", p, 1);
    for (std::uint64_t k = 1; k <= p - 1; ++k) {
        sweep.add(with_extra(make_result("harmonic_reflect", p, 1, prefix[p - k], prefix[k - 1]), "k",
                             static_cast<std::int64_t>(k)));
    }
    return std::move(sweep).finish();
}

// ---------------------------------------------------------------------------
// Exact identities

CongruenceResult verify_swz_rows(std::uint64_t n_max) {
    std::uint64_t holds = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) holds += check_swz_identity(n).holds ? 1 : 0;
    return with_extra(count_result("eq_2_4", 0, 1, holds, n_max), "n_max", static_cast<std::int64_t>(n_max));
}

CongruenceResult verify_fractional_rows(unsigned base, std::uint64_t k_max) {
    Family f;
    switch (base) {
        case 16: f = Family::CentralSquared; break;
        case 27: f = Family::TwoThree; break;
        case 64: f = Family::FourTwo; break;
        case 432: f = Family::SixThree; break;
        default: throw std::invalid_argument("fractional rows: unknown base");
    }
    const Rational a = family_parameter(f);
    const Rational b = Rational(-1) - a;
    std::uint64_t holds = 0;
    for (std::uint64_t k = 0; k <= k_max; ++k)
        holds += fractional_binomial(a, k) * fractional_binomial(b, k) == family_summand(f, k) ? 1 : 0;
    return with_extra(count_result("frac_binom_" + std::to_string(base), 0, 1, holds, k_max + 1), "n_max",
                      static_cast<std::int64_t>(k_max));
}

CongruenceResult verify_recurrence_rows(bool t_recurrence, std::uint64_t n_max) {
    std::uint64_t holds = 0;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        RecurrenceCheck c = check_recurrences(n);
        holds += (t_recurrence ? c.t_recurrence : c.s_recurrence) ? 1 : 0;
    }
    return with_extra(count_result(t_recurrence ? "eq_3_5" : "eq_3_3", 0, 1, holds, n_max + 1), "n_max",
                      static_cast<std::int64_t>(n_max));
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

using Eval = std::function<CongruenceResult(std::uint64_t, unsigned, const VerifyOptions&)>;

std::function<unsigned(unsigned)> fixed(unsigned K) {
    return [K](unsigned) { return K; };
}

CatalogEntry theorem(std::string name, unsigned K, std::function<CongruenceResult(std::uint64_t)> f) {
    return {std::move(name), Group::Theorem, false, 1, fixed(K),
            [f](std::uint64_t p, unsigned, const VerifyOptions&) { return f(p); }};
}

CatalogEntry step(std::string name, unsigned K, std::function<CongruenceResult(std::uint64_t)> f) {
    return {std::move(name), Group::ProofStep, false, 1, fixed(K),
            [f](std::uint64_t p, unsigned, const VerifyOptions&) { return f(p); }};
}

CatalogEntry step_a(std::string name, unsigned min_a, std::function<unsigned(unsigned)> K,
                    std::function<CongruenceResult(std::uint64_t, unsigned)> f) {
    return {std::move(name), Group::ProofStep, true, min_a, std::move(K),
            [f](std::uint64_t p, unsigned a, const VerifyOptions&) { return f(p, a); }};
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> c;
    c.push_back(theorem("eq_1_1", 3, verify_eq_1_1));
    c.push_back(theorem("su11_full", 3, verify_su11_full));
    for (std::size_t i = 0; i < 7; ++i) {
        c.push_back(theorem(kRvSunNames[i], i == 5 ? 3 : 2, [i](std::uint64_t p) { return rv_sun_one(p, i); }));
    }
    c.push_back(theorem("eq_1_2", 3, verify_thm_1_1_i));
    c.push_back({"eq_1_3", Group::Theorem, true, 2, fixed(3),
                 [](std::uint64_t p, unsigned a, const VerifyOptions&) { return verify_thm_1_1_ii(p, a); }});
    c.push_back(theorem("eq_1_4", 2, verify_eq_1_4));
    c.push_back(theorem("eq_1_5", 2, verify_eq_1_5));
    c.push_back(theorem("eq_1_6", 2, verify_eq_1_6));
    c.push_back(theorem("rem_1_2", 2, verify_remark_1_2));
    c.push_back({"eq_2_5", Group::Theorem, true, 1, fixed(3),
                 [](std::uint64_t p, unsigned a, const VerifyOptions&) { return verify_lemma_2_3(p, a); }});
    c.push_back(theorem("su13", 3, verify_su13_all));
    c.push_back({"lem_3_1", Group::Theorem, false, 1, fixed(2),
                 [](std::uint64_t p, unsigned, const VerifyOptions& o) { return verify_lemma_3_1_sweep(p, false, o); }});
    c.push_back({"rem_3_1", Group::Theorem, false, 1, fixed(2),
                 [](std::uint64_t p, unsigned, const VerifyOptions& o) { return verify_lemma_3_1_sweep(p, true, o); }});
    c.push_back({"lem_3_2", Group::Theorem, false, 1, fixed(3),
                 [](std::uint64_t p, unsigned, const VerifyOptions& o) { return verify_lemma_3_2_sweep(p, o); }});

    c.push_back(step("eq_2_1", 1, verify_eq_2_1));
    c.push_back(step("eq_2_2", 3, verify_eq_2_2));
    c.push_back(step("su11_lemma", 2, verify_su11_lemma));
    c.push_back(step("eq_2_3", 1, verify_eq_2_3));
    c.push_back(step_a("lemma_2_4", 1, fixed(0), verify_lemma_2_4));
    c.push_back(step_a("central_p2a", 1, [](unsigned a) { return 2 * a + 1; }, verify_central_p2a));
    c.push_back(step_a("eq_2_6", 2, fixed(3), verify_eq_2_6));
    c.push_back(step_a("halfbinom_ratio", 1, fixed(1), verify_halfbinom_ratio));
    c.push_back(step_a("eq_2_7", 2, fixed(1), verify_eq_2_7));
    c.push_back(step_a("eq_2_8", 1, fixed(1), verify_eq_2_8));
    c.push_back(step_a("eq_2_9", 1, fixed(1), verify_eq_2_9));
    c.push_back(step_a("lucas_lift", 2, fixed(1), verify_lucas_lift));
    c.push_back(step("lucas_reduction", 1, verify_lucas_reduction));
    for (unsigned which : {2u, 4u, 3u, 6u}) {
        c.push_back(step("lehmer_" + std::to_string(which), 1,
                         [which](std::uint64_t p) { return verify_lehmer(p, which); }));
    }
    c.push_back(step("harmonic_2p3", 1, verify_harmonic_2p3));
    c.push_back(step("harmonic_reflect", 1, verify_harmonic_reflect));

    for (unsigned base : {16u, 27u, 64u, 432u}) {
        c.push_back({"frac_binom_" + std::to_string(base), Group::Identity, false, 1, fixed(0),
                     [base](std::uint64_t, unsigned, const VerifyOptions& o) {
                         return verify_fractional_rows(base, o.identities_n_max);
                     }});
    }
    c.push_back({"eq_2_4", Group::Identity, false, 1, fixed(0),
                 [](std::uint64_t, unsigned, const VerifyOptions& o) { return verify_swz_rows(o.identities_n_max); }});
    c.push_back({"eq_3_3", Group::Identity, false, 1, fixed(0),
                 [](std::uint64_t, unsigned, const VerifyOptions& o) {
                     return verify_recurrence_rows(false, o.identities_n_max);
                 }});
    c.push_back({"eq_3_5", Group::Identity, false, 1, fixed(0),
                 [](std::uint64_t, unsigned, const VerifyOptions& o) {
                     return verify_recurrence_rows(true, o.identities_n_max);
                 }});
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* find_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

std::size_t catalog_index(const std::string& name) {
    const auto& c = catalog();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].name == name) return i;
    throw std::out_of_range("unknown catalog entry: " + name);
}

std::vector<CongruenceResult> verify_proof_steps(std::uint64_t p, unsigned a) {
    std::vector<CongruenceResult> out;
    VerifyOptions opts;
    for (const auto& e : catalog()) {
        if (e.group != Group::ProofStep) continue;
        if (e.uses_exponent && a < e.min_a) continue;
        out.push_back(e.evaluate(p, e.uses_exponent ? a : 1, opts));
    }
    return out;
}

CongruenceResult run_entry(const CatalogEntry& entry, std::uint64_t p, unsigned a, const VerifyOptions& opts) {
    try {
        return entry.evaluate(p, a, opts);
    } catch (const std::exception& ex) {
        CongruenceResult r;
        r.name = entry.name;
        r.p = p;
        r.a = a;
        r.modulus = 0;
        r.pass = false;
        r.error = ex.what();
        return r;
    }
}

}  // namespace supercong
