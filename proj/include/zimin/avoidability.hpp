#pragma once

#include "zimin/pattern.hpp"
#include "zimin/ranked_matching.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace zimin {

/// Largest alphabet the avoidability searches accept.
inline constexpr std::size_t kMaxAvoidabilityVariables = 8;

/// F is free for p with witnesses A and B: F is contained in B minus A, and
/// for every adjacent pair x y of p, x is in A iff y is in B.
struct FreeSetWitness {
	std::vector<VariableId> free;
	std::vector<VariableId> a;
	std::vector<VariableId> b;
};

/// A witness, or nullopt when F is not free. Throws std::invalid_argument if
/// F is empty or mentions a variable that does not occur.
std::optional<FreeSetWitness> check_free_set(const Pattern& p, std::span<const VariableId> f);

/// Whether w really certifies w.free as free for p.
bool verify_witness(const Pattern& p, const FreeSetWitness& w);

/// Erases every occurrence of the variables in f.
Pattern sigma_delete(const Pattern& p, std::span<const VariableId> f);

enum class Verdict : unsigned char { Unavoidable, Avoidable, Inconclusive };

const char* to_string(Verdict v) noexcept;

struct ReductionStep {
	Pattern before;
	FreeSetWitness witness;
};

/// Consecutive sigma-deletions leading to the empty pattern.
struct ReductionTrace {
	std::vector<ReductionStep> steps;
};

struct ReductionOutcome {
	Verdict verdict = Verdict::Avoidable;
	std::optional<ReductionTrace> trace;
};

/// Depth-first search over free sets of at most max_free_set_size variables
/// (singletons first, then by size and lexicographically in first-occurrence
/// order), memoizing dead ends up to variable renaming. Inconclusive when the
/// bound is below |alph(p)| and no trace was found. Throws SizeLimitError
/// above kMaxAvoidabilityVariables.
ReductionOutcome is_unavoidable_by_reduction(const Pattern& p, std::size_t max_free_set_size);

/// Replays a trace, re-checking every free set. True iff it ends in the empty
/// pattern and starts at p.
bool verify_trace(const Pattern& p, const ReductionTrace& trace);

struct RankingOutcome {
	Verdict verdict = Verdict::Avoidable;
	std::optional<RankedPattern> ranking;
	std::optional<MatchResult> match;
};

/// Tries every ranking of alph(p) onto {1..m} satisfying both ranking
/// properties, in lexicographic order of the rank vector (variables in
/// first-occurrence order), and returns the first one with a match. Throws
/// SizeLimitError above kMaxAvoidabilityVariables.
RankingOutcome is_unavoidable_by_ranking(const Pattern& p);

} // namespace zimin
