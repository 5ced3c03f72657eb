#pragma once

#include "zimin/pattern.hpp"
#include "zimin/ranked_matching.hpp"
#include "zimin/zimin_word.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

/// Brute-force ground truth on explicit Zimin words, for tests and `verify`.
namespace zimin::verification {

struct OracleBudget {
	/// Largest Z_k searched for valuations and pattern occurrences.
	unsigned max_k = 4;
	/// Largest Z_k searched for plain substrings.
	unsigned max_substring_k = 12;
	std::size_t max_pattern_len = 8;
};

class BudgetExceeded : public std::runtime_error {
  public:
	using std::runtime_error::runtime_error;
};

/// Explicit value per variable index; empty for variables that do not occur.
using ExplicitTuple = std::vector<ZWord>;

/// Naive substring search of u in Z_k.
bool oracle_is_factor(const ZWord& u, unsigned k, const OracleBudget& budget = {});

/// Every split of every factor of Z_K into |pattern| blocks that agrees on
/// repeated variables and gives each block the variable's rank as its largest
/// letter, collected as distinct value tuples.
std::set<ExplicitTuple> oracle_enumerate(const RankedPattern& rp, const OracleBudget& budget = {});

std::size_t oracle_count(const RankedPattern& rp, const OracleBudget& budget = {});

/// Smallest total instance length (sum over positions), nullopt if none.
std::optional<std::size_t> oracle_min_length(const RankedPattern& rp, const OracleBudget& budget = {});

/// Whether some non-erasing substitution of p is a factor of Z_k.
bool oracle_occurs(const Pattern& p, unsigned k, const OracleBudget& budget = {});

/// Compressed form of an explicit tuple (variables that do not occur stay unset).
Valuation to_valuation(const ExplicitTuple& tuple);

} // namespace zimin::verification
