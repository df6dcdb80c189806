#pragma once

// Batch driver: expands a RunConfig into (entry, p, a) tasks, runs them on a
// worker pool and renders the results in canonical order.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "supercong/verify.hpp"

namespace supercong {

enum class Format { Table, Json, Csv };

struct RunConfig {
    /// Catalog names, or {"all"}.
    std::vector<std::string> families{"all"};
    std::uint64_t p_min = 5;
    std::uint64_t p_max = 100;
    /// Exponents a for entries that take one.
    std::vector<unsigned> powers{2};
    /// With "all", also run the intermediate congruences.
    bool include_proof_steps = false;
    std::uint64_t identities_n_max = 40;
    std::uint64_t t_samples = 32;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    Format format = Format::Table;
    bool fail_fast = false;
    /// Emit records as they complete, tagged with their task index.
    bool stream = false;
};

/// Ascending primes in [lo, hi] from a sieve.
std::vector<std::uint64_t> prime_iter(std::uint64_t lo, std::uint64_t hi);

struct Task {
    const CatalogEntry* entry;
    std::uint64_t p;
    unsigned a;
};

/// Tasks in canonical order: catalog order, then p, then a. Throws
/// std::invalid_argument for unknown names or an invalid config.
std::vector<Task> plan_tasks(const RunConfig& config);

/// Runs the tasks on config.jobs workers; results come back in task order.
/// With fail_fast, tasks not yet started after a failure are skipped and
/// absent from the result.
std::vector<CongruenceResult> execute(const std::vector<Task>& tasks, const RunConfig& config,
                                      std::ostream* stream_out = nullptr);

/// Writes the report to `out` and diagnostics to `err`. Returns 0 when every
/// row passes, 1 on any failure and 2 on a usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

std::string format_name(Format f);

}  // namespace supercong
