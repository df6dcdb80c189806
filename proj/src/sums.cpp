#include "supercong/sums.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace supercong {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::CentralSquared: return "central_squared";
        case Family::TwoThree: return "two_three";
        case Family::FourTwo: return "four_two";
        case Family::SixThree: return "six_three";
    }
    return "?";
}

std::uint64_t family_base(Family f) {
    switch (f) {
        case Family::CentralSquared: return 16;
        case Family::TwoThree: return 27;
        case Family::FourTwo: return 64;
        case Family::SixThree: return 432;
    }
    return 1;
}

std::uint64_t family_span(Family f) {
    switch (f) {
        case Family::CentralSquared: return 2;
        case Family::TwoThree: return 3;
        case Family::FourTwo: return 4;
        case Family::SixThree: return 6;
    }
    return 1;
}

namespace {

PadicApprox family_binomials(Family f, std::int64_t k, const FactorialTable& t) {
    switch (f) {
        case Family::CentralSquared: {
            PadicApprox c = t.binomial(2 * k, k);
            return c * c;
        }
        case Family::TwoThree: return t.binomial(2 * k, k) * t.binomial(3 * k, k);
        case Family::FourTwo: return t.binomial(4 * k, 2 * k) * t.binomial(2 * k, k);
        case Family::SixThree: return t.binomial(6 * k, 3 * k) * t.binomial(3 * k, k);
    }
    throw std::logic_error("unknown family");
}

void check_table(const FactorialTable& table, std::uint64_t p, unsigned K, std::uint64_t needed) {
    if (table.prime() != p || table.precision() != K) {
        throw std::invalid_argument("sum: factorial table built for a different p or K");
    }
    if (needed > table.n_max()) throw std::out_of_range("sum: factorial table too small for range");
}

void check_term(const PadicApprox& term, std::int64_t k) {
    if (!term.is_zero() && term.valuation() < 0) {
        throw std::domain_error("sum: term k = " + std::to_string(k) + " has negative valuation " +
                                std::to_string(term.valuation()));
    }
}

// base^{-k} as a unit PadicApprox
PadicApprox inverse_power(std::uint64_t base, std::int64_t k, std::uint64_t p, unsigned K) {
    std::uint64_t pk = ipow(p, K);
    std::uint64_t inv = Residue::from_unsigned(base, pk).inverse().value();
    return PadicApprox::from_unit(p, K, 0, pow_mod(inv, static_cast<std::uint64_t>(k), pk));
}

}  // namespace

FactorialTable table_for(const SumSpec& spec) {
    std::int64_t hi = std::max<std::int64_t>(spec.k_hi, 0);
    return FactorialTable(spec.p, spec.working_precision(),
                          family_span(spec.family) * static_cast<std::uint64_t>(hi));
}

PadicApprox sum_term(const SumSpec& spec, std::int64_t k, const FactorialTable& table) {
    if (k < 0) throw std::invalid_argument("sum_term: k must be nonnegative");
    const std::uint64_t base = family_base(spec.family);
    if (base % spec.p == 0) throw std::invalid_argument("sum: p divides the power base");
    const unsigned W = spec.working_precision();
    PadicApprox term = family_binomials(spec.family, k, table) * inverse_power(base, k, spec.p, W);
    if (spec.weight == Weight::OddReciprocal) term /= PadicApprox::from_integer(2 * k + 1, spec.p, W);
    return term;
}

Residue sum_eval(const SumSpec& spec) {
    return sum_eval(spec, table_for(spec));
}

Residue sum_eval(const SumSpec& spec, const FactorialTable& table) {
    const std::uint64_t pk = ipow(spec.p, spec.K);
    Residue sum = Residue::from_unsigned(0, pk);
    if (spec.k_lo > spec.k_hi) return sum;
    if (spec.k_lo < 0) throw std::invalid_argument("sum_eval: k_lo must be nonnegative");
    const std::uint64_t base = family_base(spec.family);
    if (base % spec.p == 0) throw std::invalid_argument("sum: p divides the power base");
    const unsigned W = spec.working_precision();
    check_table(table, spec.p, W, family_span(spec.family) * static_cast<std::uint64_t>(spec.k_hi));

    const std::uint64_t unit_mod = ipow(spec.p, W);
    const std::uint64_t inv_base = Residue::from_unsigned(base, unit_mod).inverse().value();
    std::uint64_t power = pow_mod(inv_base, static_cast<std::uint64_t>(spec.k_lo), unit_mod);
    for (std::int64_t k = spec.k_lo; k <= spec.k_hi; ++k) {
        PadicApprox term = family_binomials(spec.family, k, table) *
                           PadicApprox::from_unit(spec.p, W, 0, power);
        if (spec.weight == Weight::OddReciprocal) term /= PadicApprox::from_integer(2 * k + 1, spec.p, W);
        check_term(term, k);
        sum += term.to_residue(spec.K);
        power = mul_mod(power, inv_base, unit_mod);
    }
    return sum;
}

namespace {

std::uint64_t dual_table_bound(const DualSumSpec& spec) {
    switch (spec.kind) {
        case DualKind::CentralReciprocal:
        case DualKind::CentralSquaredReciprocal:
            return 2 * static_cast<std::uint64_t>(std::max<std::int64_t>(spec.k_hi, 0));
        case DualKind::InverseBinomialSquared:
        case DualKind::InverseKBinomial:
            return static_cast<std::uint64_t>(std::max<std::int64_t>(spec.n, 0));
    }
    return 0;
}

}  // namespace

FactorialTable table_for(const DualSumSpec& spec) {
    return FactorialTable(spec.p, spec.working_precision(), dual_table_bound(spec));
}

PadicApprox dual_term(const DualSumSpec& spec, std::int64_t k, const FactorialTable& table) {
    const std::uint64_t p = spec.p;
    const unsigned K = spec.working_precision();
    PadicApprox one = PadicApprox::from_unit(p, K, 0, 1);
    PadicApprox term = one;
    switch (spec.kind) {
        case DualKind::CentralReciprocal: {
            PadicApprox k2 = PadicApprox::from_integer(k, p, K);
            k2 *= k2;
            PadicApprox four_k = PadicApprox::from_integer(4, p, K).pow(static_cast<std::uint64_t>(k));
            term = four_k / (k2 * table.binomial(2 * k, k));
            break;
        }
        case DualKind::CentralSquaredReciprocal: {
            PadicApprox k2 = PadicApprox::from_integer(k, p, K);
            k2 *= k2;
            PadicApprox c = table.binomial(2 * k, k);
            PadicApprox sixteen_k = PadicApprox::from_integer(16, p, K).pow(static_cast<std::uint64_t>(k));
            term = sixteen_k / (k2 * c * c);
            break;
        }
        case DualKind::InverseBinomialSquared: {
            PadicApprox c = table.binomial(spec.n, k);
            term = one / (c * c);
            break;
        }
        case DualKind::InverseKBinomial:
            term = one / (PadicApprox::from_integer(k, p, K) * table.binomial(spec.n - k, spec.l));
            break;
    }
    return term.shifted(spec.compensation);
}

Residue dual_sum_eval(const DualSumSpec& spec) {
    return dual_sum_eval(spec, table_for(spec));
}

Residue dual_sum_eval(const DualSumSpec& spec, const FactorialTable& table) {
    Residue sum = Residue::from_unsigned(0, ipow(spec.p, spec.K));
    if (spec.k_lo > spec.k_hi) return sum;
    if (spec.k_lo < 1 && spec.kind != DualKind::InverseBinomialSquared) {
        throw std::invalid_argument("dual_sum_eval: k = 0 term is undefined for this kind");
    }
    check_table(table, spec.p, spec.working_precision(), dual_table_bound(spec));
    for (std::int64_t k = spec.k_lo; k <= spec.k_hi; ++k) {
        PadicApprox term = dual_term(spec, k, table);
        check_term(term, k);
        sum += term.to_residue(spec.K);
    }
    return sum;
}

}  // namespace supercong
