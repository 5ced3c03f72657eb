#pragma once

#include "zimin/ranked_matching.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

/// Case generators shared by the test suites, the acceptance binary and the
/// CLI's verify command.
namespace zimin::verification {

/// Every pattern of length 1..max_len over at most max_vars variables, up to
/// renaming (each new variable gets the next index).
std::vector<std::vector<std::uint32_t>> all_patterns(std::size_t max_len, std::uint32_t max_vars);

/// Calls f with every rank table over `vars` variables with entries in 1..max_rank.
void for_each_rank_table(std::uint32_t vars, Rank max_rank, const std::function<void(const std::vector<Rank>&)>& f);

/// Every ranked pattern with at most max_vars variables, length at most
/// max_len and ranks in 1..max_rank, including rankings that cannot match.
std::vector<RankedPattern> exhaustive_ranked(std::size_t max_len, std::uint32_t max_vars, Rank max_rank);

/// `count` ranked patterns of length at most 8 with largest rank exactly 4.
/// Even-numbered cases are cut from a random factor of Z_4 containing the
/// letter 4 (equal blocks share a variable, so they always match); odd ones
/// use random symbols and ranks.
std::vector<RankedPattern> sampled_rank4(std::size_t count, std::uint64_t seed);

/// The length-n prefix of Z_m read as a pattern (m smallest with 2^m - 1 >= n),
/// letter j renamed to variable y_j of rank j + (k - m). Always matchable; the
/// largest rank k occurs once and ranks below k - m + 1 are unused.
RankedPattern zimin_prefix_workload(std::size_t n, Rank k);

} // namespace zimin::verification
