#include "supercong/cli.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace supercong {

namespace {

constexpr const char* kVersion = "0.1.0";

using ordered_json = nlohmann::ordered_json;

ordered_json record_json(const CongruenceResult& r, const CatalogEntry* entry) {
    ordered_json j;
    j["name"] = r.name;
    j["p"] = r.p;
    if (entry != nullptr && entry->uses_exponent) j["a"] = r.a;
    j["modulus"] = r.modulus;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["pass"] = r.pass;
    if (!r.extra.empty()) {
        ordered_json extra = ordered_json::object();
        for (const auto& [key, value] : r.extra) extra[key] = value;
        j["extra"] = std::move(extra);
    }
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

ordered_json config_json(const RunConfig& c) {
    ordered_json j;
    j["families"] = c.families;
    j["p_min"] = c.p_min;
    j["p_max"] = c.p_max;
    j["powers"] = c.powers;
    j["proof_steps"] = c.include_proof_steps;
    j["identities_n_max"] = c.identities_n_max;
    j["t_samples"] = c.t_samples;
    j["fail_fast"] = c.fail_fast;
    return j;
}

std::string extra_text(const CongruenceResult& r) {
    std::string s;
    for (const auto& [key, value] : r.extra) {
        if (!s.empty()) s += ' ';
        s += key + '=' + std::to_string(value);
    }
    if (!r.error.empty()) {
        if (!s.empty()) s += ' ';
        s += "error=" + r.error;
    }
    return s;
}

struct FamilyCount {
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
};

// Per-name pass/fail counts in catalog order.
std::vector<std::pair<std::string, FamilyCount>> summarize(const std::vector<CongruenceResult>& results) {
    std::map<std::size_t, std::pair<std::string, FamilyCount>> by_index;
    for (const auto& r : results) {
        auto& slot = by_index[catalog_index(r.name)];
        slot.first = r.name;
        (r.pass ? slot.second.pass : slot.second.fail) += 1;
    }
    std::vector<std::pair<std::string, FamilyCount>> out;
    for (auto& [index, slot] : by_index) out.push_back(std::move(slot));
    return out;
}

void write_summary_lines(std::ostream& os, const std::vector<CongruenceResult>& results) {
    std::uint64_t pass = 0, fail = 0;
    for (const auto& [name, count] : summarize(results)) {
        os << "summary " << name << " pass=" << count.pass << " fail=" << count.fail << '\n';
        pass += count.pass;
        fail += count.fail;
    }
    os << "summary total pass=" << pass << " fail=" << fail << '\n';
}

void write_table(std::ostream& os, const std::vector<CongruenceResult>& results, const RunConfig& config) {
    os << "supercong " << kVersion << " seed=" << config.seed << '\n';
    os << std::left << std::setw(18) << "name" << std::right << std::setw(6) << "p" << std::setw(3) << "a"
       << std::setw(20) << "modulus" << std::setw(20) << "lhs" << std::setw(20) << "rhs" << "  status\n";
    for (const auto& r : results) {
        os << std::left << std::setw(18) << r.name << std::right << std::setw(6) << r.p << std::setw(3) << r.a
           << std::setw(20) << r.modulus << std::setw(20) << r.lhs << std::setw(20) << r.rhs << "  "
           << (r.pass ? "PASS" : "FAIL");
        const std::string extra = extra_text(r);
        if (!extra.empty()) os << "  " << extra;
        os << '\n';
    }
    write_summary_lines(os, results);
}

void write_json(std::ostream& os, const std::vector<CongruenceResult>& results, const RunConfig& config) {
    ordered_json header;
    header["version"] = kVersion;
    header["config"] = config_json(config);
    header["seed"] = config.seed;
    os << header.dump() << '\n';
    for (const auto& r : results) os << record_json(r, find_entry(r.name)).dump() << '\n';
    ordered_json summary = ordered_json::object();
    for (const auto& [name, count] : summarize(results)) summary[name] = {{"pass", count.pass}, {"fail", count.fail}};
    os << ordered_json{{"summary", std::move(summary)}}.dump() << '\n';
}

void write_csv(std::ostream& os, std::ostream& err, const std::vector<CongruenceResult>& results) {
    os << "name,p,a,modulus,lhs,rhs,pass\n";
    for (const auto& r : results) {
        os << r.name << ',' << r.p << ',' << r.a << ',' << r.modulus << ',' << r.lhs << ',' << r.rhs << ','
           << (r.pass ? "true" : "false") << '\n';
    }
    write_summary_lines(err, results);
}

void validate(const RunConfig& c) {
    if (c.p_min < 5) throw std::invalid_argument("p_min must be at least 5");
    if (c.p_min > c.p_max) throw std::invalid_argument("p_min must not exceed p_max");
    if (c.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    if (c.families.empty()) throw std::invalid_argument("no families selected");
    for (unsigned a : c.powers)
        if (a < 1) throw std::invalid_argument("powers must be positive");
    for (const auto& name : c.families)
        if (name != "all" && find_entry(name) == nullptr) throw std::invalid_argument("unknown family: " + name);
}

}  // namespace

std::string format_name(Format f) {
    switch (f) {
        case Format::Table: return "table";
        case Format::Json: return "json";
        case Format::Csv: return "csv";
    }
    return "table";
}

std::vector<std::uint64_t> prime_iter(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < 2 || lo > hi) return out;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n)
        if (!composite[n]) out.push_back(n);
    return out;
}

std::vector<Task> plan_tasks(const RunConfig& config) {
    validate(config);
    const bool all = std::find(config.families.begin(), config.families.end(), "all") != config.families.end();
    const std::set<std::string> named(config.families.begin(), config.families.end());
    std::set<unsigned> powers(config.powers.begin(), config.powers.end());
    const auto primes = prime_iter(config.p_min, config.p_max);

    std::vector<Task> tasks;
    for (const auto& entry : catalog()) {
        bool selected = named.count(entry.name) > 0;
        if (all) selected = selected || entry.group != Group::ProofStep || config.include_proof_steps;
        if (!selected) continue;
        if (entry.group == Group::Identity) {
            tasks.push_back({&entry, 0, 1});
            continue;
        }
        for (std::uint64_t p : primes) {
            if (!entry.uses_exponent) {
                tasks.push_back({&entry, p, 1});
                continue;
            }
            for (unsigned a : powers)
                if (a >= entry.min_a) tasks.push_back({&entry, p, a});
        }
    }
    return tasks;
}

std::vector<CongruenceResult> execute(const std::vector<Task>& tasks, const RunConfig& config,
                                      std::ostream* stream_out) {
    VerifyOptions opts;
    opts.t_samples = config.t_samples;
    opts.seed = config.seed;
    opts.identities_n_max = config.identities_n_max;

    std::vector<CongruenceResult> slots(tasks.size());
    std::vector<char> done(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex stream_mutex;

    auto worker = [&] {
        for (;;) {
            if (stop.load()) return;
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            slots[i] = run_entry(*t.entry, t.p, t.a, opts);
            done[i] = 1;
            if (!slots[i].pass && config.fail_fast) stop.store(true);
            if (stream_out != nullptr) {
                ordered_json j = record_json(slots[i], t.entry);
                j["task"] = i;
                std::lock_guard<std::mutex> lock(stream_mutex);
                *stream_out << j.dump() << '\n';
            }
        }
    };

    const unsigned n = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<CongruenceResult> out;
    out.reserve(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i)
        if (done[i]) out.push_back(std::move(slots[i]));
    return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::vector<Task> tasks;
    try {
        tasks = plan_tasks(config);
    } catch (const std::invalid_argument& ex) {
        err << "usage error: " << ex.what() << '\n';
        return 2;
    }

    if (config.stream) {
        const auto results = execute(tasks, config, &out);
        write_summary_lines(err, results);
        return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; }) &&
                       results.size() == tasks.size()
                   ? 0
                   : 1;
    }

    const auto results = execute(tasks, config);
    switch (config.format) {
        case Format::Table: write_table(out, results, config); break;
        case Format::Json: write_json(out, results, config); break;
        case Format::Csv: write_csv(out, err, results); break;
    }
    out.flush();
    const bool all_pass = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
    return all_pass && results.size() == tasks.size() ? 0 : 1;
}

}  // namespace supercong
