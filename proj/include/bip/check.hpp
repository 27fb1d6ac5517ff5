#pragma once

#include "bip/perm.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bip {

/// A replayable counterexample: the instance plus whatever else is needed.
struct Witness
{
    Permutation w;
    /// Extra arguments such as u, v, x or I, in insertion order.
    std::vector<std::pair<std::string, std::string>> args;
    std::string message;

    auto operator<=>(const Witness&) const = default;
};

struct SweepReport
{
    std::string theorem;
    int n_min = 1;
    int n_max = 1;
    /// Ranks checked exhaustively are listed with 0; sampled ranks with K.
    std::map<int, long long> sampled;
    long long instances = 0;
    std::uint64_t seed = 0;
    int workers = 1;
    std::vector<Witness> failures;
    /// Findings that are recorded but do not fail the sweep.
    std::vector<Witness> observations;
    std::chrono::milliseconds wall{0};

    bool pass() const { return failures.empty(); }
};

struct CheckOptions
{
    /// Defaults to the theorem's exhaustive limit.
    std::optional<int> n_max;
    std::uint64_t seed = 1;
    int workers = 1;
    /// Instances per rank above the exhaustive limit; defaults per theorem.
    std::optional<long long> sample;
};

struct TheoremInfo
{
    std::string id;
    std::string statement;
    /// Ranks up to this one are swept exhaustively.
    int exhaustive_through;
    /// Largest rank the theorem can be run at.
    int max_rank;
    long long default_sample;
};

const std::vector<TheoremInfo>& theorems();
/// Throws UnknownTheorem.
const TheoremInfo& theorem_info(const std::string& id);

/// Runs a sweep. Throws UnknownTheorem, and RankTooLarge when n_max exceeds
/// the theorem's limit. Verdicts and witnesses do not depend on workers.
SweepReport check(const std::string& theorem_id, const CheckOptions& options = {});

/// Distinct indices in [0, total), the first k of a seeded Fisher-Yates shuffle.
/// Uses only std::mt19937_64 and rejection sampling so results match across
/// standard libraries.
std::vector<std::size_t> sample_indices(std::size_t total, std::size_t k, std::uint64_t seed);

} // namespace bip
