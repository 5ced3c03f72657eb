#pragma once

#include "zimin/boundary_constraints.hpp"
#include "zimin/compressed_factor.hpp"
#include "zimin/pattern.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace zimin {

using Rank = std::uint32_t;

/// A pattern together with a rank for every occurring variable.
class RankedPattern {
  public:
	/// ranks[v] is the rank of variable v; entries of variables that do not
	/// occur are ignored. Throws std::invalid_argument if the table is too
	/// short or an occurring variable has rank 0.
	RankedPattern(Pattern p, std::vector<Rank> ranks);

	/// One rank per pattern position. Throws std::invalid_argument when two
	/// occurrences of a variable disagree.
	static RankedPattern positional(Pattern p, std::span<const Rank> ranks);

	[[nodiscard]] const Pattern& pattern() const noexcept { return pattern_; }
	[[nodiscard]] Rank rank(VariableId v) const { return ranks_.at(v.index); }
	[[nodiscard]] std::span<const Rank> ranks() const noexcept { return ranks_; }
	/// K, the largest rank.
	[[nodiscard]] Rank max_rank() const noexcept { return max_rank_; }

	[[nodiscard]] std::vector<Rank> rank_sequence() const;
	/// V_i: occurring variables of rank exactly i, in first-occurrence order.
	[[nodiscard]] std::vector<VariableId> variables_of_rank(Rank i) const;
	/// pi_(i): the pattern with every variable of rank < i erased.
	[[nodiscard]] Pattern restricted(Rank i) const;

  private:
	Pattern pattern_;
	std::vector<Rank> ranks_;
	Rank max_rank_ = 0;
};

struct RankingViolation {
	enum class Kind : unsigned char {
		/// Two consecutive occurrences of one rank with nothing larger between.
		NoLargerBetween,
		/// The largest rank occurs more than once.
		MaximalRankRepeated,
	};
	Kind kind;
	std::size_t first; // positions in the pattern
	std::size_t second;
	Rank rank;
};

struct RankingReport {
	std::vector<RankingViolation> violations;
	[[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

RankingReport validate_ranking(const RankedPattern& rp);

/// A compressed value for every occurring variable.
class Valuation {
  public:
	Valuation() = default;
	explicit Valuation(std::size_t variable_count) : values_(variable_count) {}

	[[nodiscard]] std::size_t variable_count() const noexcept { return values_.size(); }
	[[nodiscard]] bool has(VariableId v) const { return values_.at(v.index).has_value(); }
	/// Throws std::out_of_range if v has no value.
	[[nodiscard]] const CompressedFactor& operator[](VariableId v) const;
	void set(VariableId v, CompressedFactor value) { values_.at(v.index) = std::move(value); }

	friend bool operator==(const Valuation&, const Valuation&) = default;
	friend auto operator<=>(const Valuation& a, const Valuation& b) { return a.values_ <=> b.values_; }

  private:
	std::vector<std::optional<CompressedFactor>> values_;
};

/// Explicit values, indexed by variable; empty for variables that do not occur.
using ExplicitValuation = std::vector<ZWord>;

struct MatchStats {
	std::size_t steps = 0;
	/// Total symbols of pi_(i) processed over all steps.
	std::size_t symbols_processed = 0;
	/// Peak number of allocated auxiliary cells (positions, graph buffers,
	/// value stacks), excluding the input pattern and the returned valuation.
	std::size_t peak_cells = 0;
};

struct MatchResult {
	Valuation valuation;
	/// Number of free components summed over all steps; 2^l valuations exist.
	std::size_t l = 0;
	MatchStats stats;
};

struct EmbeddingOptions {
	/// Reject rankings failing validate_ranking before running any step.
	bool check_ranking = true;
};

/// The substituted pattern as a list of compressed parts.
std::vector<CompressedFactor> substitute(const Pattern& p, const Valuation& v);

/// Ranks match and the substituted pattern is a Zimin factor.
bool is_valid_valuation(const RankedPattern& rp, const Valuation& v);

/// compress() of the whole instance. Throws NotAFactorError for invalid input.
CompressedFactor instance_representation(const Pattern& p, const Valuation& v);

/// Sum of the decompressed lengths of all substituted parts.
BigInt instance_length(const Pattern& p, const Valuation& v);

/// Reference embedding on explicit words, step by step with the canonical
/// boundary choice. Throws SizeLimitError when K exceeds kMaxExplicitOrder.
std::optional<ExplicitValuation> uncompressed_embedding(const RankedPattern& rp);

/// Embedding on compressed values in O(n K) time.
std::optional<MatchResult> compressed_embedding(const RankedPattern& rp, EmbeddingOptions options = {});

/// Like compressed_embedding, but each step drops the leading smallest
/// letter of the first variable and the trailing one of the last variable
/// whenever the constraints allow it. The result has minimal instance_length.
std::optional<MatchResult> shortest_instance(const RankedPattern& rp);

/// 2^l, or 0 when there is no match.
BigInt count_instances(const RankedPattern& rp);

class EnumerationLimitError : public std::runtime_error {
  public:
	EnumerationLimitError(BigInt count, std::size_t l);
	[[nodiscard]] const BigInt& count() const noexcept { return count_; }
	[[nodiscard]] std::size_t l() const noexcept { return l_; }

  private:
	BigInt count_;
	std::size_t l_;
};

/// Every valuation, ordered by the per-step component choices (earlier steps
/// and earlier components more significant, canonical choice first). Throws
/// EnumerationLimitError when there are more than `limit`.
std::vector<Valuation> enumerate_instances(const RankedPattern& rp, std::size_t limit);

} // namespace zimin
