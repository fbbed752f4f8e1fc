/**
 * Registered experiments. Each one is a pure function of its parameters
 * and seed and returns a JSON report; equal inputs give byte-identical
 * reports whatever the worker count.
 */
#ifndef TVERBERG_EXPERIMENTS_HPP
#define TVERBERG_EXPERIMENTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tverberg/json_io.hpp"

namespace tverberg {

using ExperimentParams = std::map<std::string, std::string>;

enum class Verdict
{
    pass = 0,
    violated = 1,
    inconclusive = 2,
};

std::string to_string(Verdict v);

struct ExperimentContext
{
    std::uint64_t seed = 0;
    /// Overrides the experiment's default budget when set.
    std::optional<std::uint64_t> budget;
    unsigned workers = 1;
};

struct ExperimentReport
{
    Verdict verdict = Verdict::pass;
    /// tool, version, experiment, seed, params (with defaults filled in), verdict, summary, results.
    Json report;
};

std::vector<std::string> experiment_names();

/// Throws InvalidInput for an unknown experiment, unknown parameter or malformed value.
ExperimentReport run_experiment(const std::string& name, const ExperimentParams& params,
                                const ExperimentContext& context);

} // namespace tverberg

#endif
