// Batch verification suites. Each suite runs a family of independent checks,
// collects failures with witnesses, and serializes to a reproducible JSON
// report. Randomized suites derive one seed per item from (seed, index) so
// results do not depend on the number of worker threads.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace nnov {

struct Failure {
    std::string witness;
    std::string detail;
};

struct Report {
    std::string suite;
    nlohmann::ordered_json params;
    std::uint64_t checked = 0;
    std::vector<Failure> failures;
    std::int64_t millis = 0;

    bool pass() const { return failures.empty(); }
    // Wall time is reported as 0 in JSON so reports are byte-identical
    // across runs and parallelism widths.
    nlohmann::ordered_json to_json() const;
    std::string text(size_t max_failures_shown = 20) const;
};

// Deterministic splittable RNG helpers.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t item_seed(std::uint64_t seed, std::uint64_t index);
// Uniform value in [0, n) by rejection from splitmix64; independent of any
// standard-library distribution implementation.
std::uint64_t uniform_below(std::uint64_t& state, std::uint64_t n);

// Runs fn(0..n_items-1) across `jobs` workers; failures are concatenated in
// item order regardless of scheduling.
std::vector<Failure> run_indexed(std::uint64_t n_items, int jobs,
                                 const std::function<std::vector<Failure>(std::uint64_t)>& fn);

int default_jobs();  // NNOV_JOBS override, else hardware concurrency

Report check_triangularity(int degree, int jobs = 0);
Report check_basis_rank(int degree);
Report check_dims(int max_degree, bool multilinear);
Report check_identities(int degree, std::uint64_t trials, std::uint64_t seed, int jobs = 0);
Report check_comparator(int degree, int jobs = 0);
Report check_koszul(int max_arity);

}  // namespace nnov
