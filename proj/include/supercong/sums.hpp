#pragma once

// Binomial-sum families evaluated as residues mod p^K. Every term is formed
// as a p-adic decomposition first, so p-divisible numerators cancel against
// p-divisible denominators (2k+1, k, reciprocal binomials) before reduction.

#include <cstdint>
#include <string_view>

#include "supercong/modring.hpp"
#include "supercong/padic.hpp"

namespace supercong {

enum class Family {
    CentralSquared,  // binom(2k,k)^2 / 16^k
    TwoThree,        // binom(2k,k) binom(3k,k) / 27^k
    FourTwo,         // binom(4k,2k) binom(2k,k) / 64^k
    SixThree,        // binom(6k,3k) binom(3k,k) / 432^k
};

enum class Weight {
    Unit,
    OddReciprocal,  // extra factor 1/(2k+1)
};

std::string_view family_name(Family f);
std::uint64_t family_base(Family f);
/// Largest factorial argument per unit of k (2, 3, 4 or 6).
std::uint64_t family_span(Family f);

struct SumSpec {
    Family family = Family::CentralSquared;
    Weight weight = Weight::Unit;
    std::int64_t k_lo = 0;
    std::int64_t k_hi = 0;
    std::uint64_t p = 5;
    unsigned K = 1;
    /// Precision of the p-adic units; 0 means K. A smaller value is enough
    /// when every term has valuation >= K - unit_precision; reduction throws
    /// std::range_error otherwise.
    unsigned unit_precision = 0;

    unsigned working_precision() const noexcept { return unit_precision == 0 ? K : unit_precision; }
};

/// A factorial table large enough for every term of `spec`.
FactorialTable table_for(const SumSpec& spec);

/// The k-th summand as a p-adic number (before reduction).
PadicApprox sum_term(const SumSpec& spec, std::int64_t k, const FactorialTable& table);

/// sum_{k=k_lo}^{k_hi} term_k mod p^K; empty ranges give 0. Throws
/// std::domain_error if a term has negative valuation and std::invalid_argument
/// when p divides the family's power base.
Residue sum_eval(const SumSpec& spec);
Residue sum_eval(const SumSpec& spec, const FactorialTable& table);

enum class DualKind {
    CentralReciprocal,         // 4^k / (k^2 binom(2k,k))
    CentralSquaredReciprocal,  // 16^k / (k^2 binom(2k,k)^2)
    InverseBinomialSquared,    // 1 / binom(n, k)^2
    InverseKBinomial,          // 1 / (k binom(n - k, l))
};

struct DualSumSpec {
    DualKind kind = DualKind::CentralReciprocal;
    std::int64_t k_lo = 1;
    std::int64_t k_hi = 0;
    std::uint64_t p = 5;
    unsigned K = 1;
    std::int64_t n = 0;  // upper binomial index for the last two kinds
    std::int64_t l = 0;  // lower binomial index for InverseKBinomial
    /// Each term is multiplied by p^compensation before reduction.
    std::int64_t compensation = 0;
    unsigned unit_precision = 0;

    unsigned working_precision() const noexcept { return unit_precision == 0 ? K : unit_precision; }
};

FactorialTable table_for(const DualSumSpec& spec);
PadicApprox dual_term(const DualSumSpec& spec, std::int64_t k, const FactorialTable& table);
Residue dual_sum_eval(const DualSumSpec& spec);
Residue dual_sum_eval(const DualSumSpec& spec, const FactorialTable& table);

}  // namespace supercong
