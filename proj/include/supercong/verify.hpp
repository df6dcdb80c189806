#pragma once

// One verifier per congruence. Each assembles its left side from the sum
// evaluators and its right side from the sequence/residue layer, and returns
// a CongruenceResult. The catalog lists every check in a fixed order.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "supercong/modring.hpp"

namespace supercong {

struct CongruenceResult {
    std::string name;
    std::uint64_t p = 0;
    unsigned a = 1;
    /// p^K for congruences; 0 for exact checks, where lhs counts the cases
    /// that hold and rhs counts the cases checked.
    std::uint64_t modulus = 0;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    bool pass = false;
    std::vector<std::pair<std::string, std::int64_t>> extra;
    /// Set when the evaluator threw; pass is then false.
    std::string error;
};

CongruenceResult make_result(std::string name, std::uint64_t p, unsigned a, const Residue& lhs,
                             const Residue& rhs);
CongruenceResult count_result(std::string name, std::uint64_t p, unsigned a, std::uint64_t holds,
                              std::uint64_t checked);

struct VerifyOptions {
    std::uint64_t t_samples = 32;
    std::uint64_t seed = 0;
    /// Generalized-binomial sweeps visit every t for p at or below this bound.
    std::uint64_t exhaustive_t_limit = 31;
    std::uint64_t identities_n_max = 40;
};

// Headline congruences.
CongruenceResult verify_thm_1_1_i(std::uint64_t p);
CongruenceResult verify_thm_1_1_ii(std::uint64_t p, unsigned a);
CongruenceResult verify_eq_1_1(std::uint64_t p);
CongruenceResult verify_lemma_2_3(std::uint64_t p, unsigned a);
std::pair<CongruenceResult, CongruenceResult> verify_half_sums(std::uint64_t p, unsigned a);
CongruenceResult verify_eq_1_4(std::uint64_t p);
CongruenceResult verify_eq_1_5(std::uint64_t p);
CongruenceResult verify_eq_1_6(std::uint64_t p);
std::vector<CongruenceResult> verify_thm_1_2(std::uint64_t p);
CongruenceResult verify_remark_1_2(std::uint64_t p);
CongruenceResult verify_su11_full(std::uint64_t p);
/// rv_16, rv_27, rv_64, rv_432, sun_27, sun_64, sun_432.
std::vector<CongruenceResult> verify_rv_and_sun(std::uint64_t p);
CongruenceResult verify_su13(std::uint64_t p, std::uint64_t d);
CongruenceResult verify_su13_all(std::uint64_t p);

/// Named lem_3_1 for m <= (p-1)/2 and rem_3_1 for m > p/2. t is taken mod p.
CongruenceResult verify_lemma_3_1(std::uint64_t p, std::uint64_t m, std::int64_t t);
/// t is taken mod p^2.
CongruenceResult verify_lemma_3_2(std::uint64_t p, std::uint64_t k, std::int64_t t);
/// The t values a sweep visits: all residues mod t_modulus when p is small,
/// else both ends plus seeded samples.
std::vector<std::int64_t> t_values(std::uint64_t p, std::uint64_t t_modulus, const std::string& name,
                                   const VerifyOptions& opts);
CongruenceResult verify_lemma_3_1_sweep(std::uint64_t p, bool remark, const VerifyOptions& opts);
CongruenceResult verify_lemma_3_2_sweep(std::uint64_t p, const VerifyOptions& opts);

// Intermediate congruences.
CongruenceResult verify_eq_2_1(std::uint64_t p);
CongruenceResult verify_eq_2_2(std::uint64_t p);
CongruenceResult verify_eq_2_3(std::uint64_t p);
CongruenceResult verify_su11_lemma(std::uint64_t p);
CongruenceResult verify_lemma_2_4(std::uint64_t p, unsigned a);
CongruenceResult verify_central_p2a(std::uint64_t p, unsigned a);
CongruenceResult verify_eq_2_6(std::uint64_t p, unsigned a);
CongruenceResult verify_halfbinom_ratio(std::uint64_t p, unsigned a);
CongruenceResult verify_eq_2_7(std::uint64_t p, unsigned a);
CongruenceResult verify_eq_2_8(std::uint64_t p, unsigned a);
CongruenceResult verify_eq_2_9(std::uint64_t p, unsigned a);
CongruenceResult verify_lucas_lift(std::uint64_t p, unsigned a);
CongruenceResult verify_lucas_reduction(std::uint64_t p);
/// which ∈ {2, 3, 4, 6}: H_{floor(p/which)} against its Fermat-quotient form.
CongruenceResult verify_lehmer(std::uint64_t p, unsigned which);
CongruenceResult verify_harmonic_2p3(std::uint64_t p);
CongruenceResult verify_harmonic_reflect(std::uint64_t p);

/// Every intermediate check applicable at exponent a.
std::vector<CongruenceResult> verify_proof_steps(std::uint64_t p, unsigned a);

// Exact identities (p = 0 rows).
CongruenceResult verify_swz_rows(std::uint64_t n_max);
CongruenceResult verify_fractional_rows(unsigned base, std::uint64_t k_max);
CongruenceResult verify_recurrence_rows(bool t_recurrence, std::uint64_t n_max);

enum class Group { Theorem, ProofStep, Identity };

struct CatalogEntry {
    std::string name;
    Group group;
    bool uses_exponent;
    unsigned min_a;
    /// Exponent of the declared modulus p^K as a function of a; 0 for exact checks.
    std::function<unsigned(unsigned)> K;
    std::function<CongruenceResult(std::uint64_t p, unsigned a, const VerifyOptions&)> evaluate;
};

/// Immutable, in canonical report order. Names are unique.
const std::vector<CatalogEntry>& catalog();
/// nullptr when unknown.
const CatalogEntry* find_entry(const std::string& name);
/// Position of the entry in catalog order; throws std::out_of_range for unknown names.
std::size_t catalog_index(const std::string& name);

/// Runs the entry, converting an exception into a failing row.
CongruenceResult run_entry(const CatalogEntry& entry, std::uint64_t p, unsigned a,
                           const VerifyOptions& opts);

}  // namespace supercong
