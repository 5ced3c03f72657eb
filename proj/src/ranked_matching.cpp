#include "zimin/ranked_matching.hpp"

#include "zimin/errors.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <string>

namespace zimin {

// ---------------------------------------------------------------- RankedPattern

RankedPattern::RankedPattern(Pattern p, std::vector<Rank> ranks) : pattern_(std::move(p)), ranks_(std::move(ranks))
{
	if (pattern_.empty())
		throw std::invalid_argument("ranked pattern must be non-empty");
	if (ranks_.size() < pattern_.variable_count())
		throw std::invalid_argument("rank table shorter than the variable table");
	for (VariableId v : pattern_.symbols()) {
		if (ranks_[v.index] == 0)
			throw std::invalid_argument("variable '" + pattern_.name(v) + "' has no positive rank");
		max_rank_ = std::max(max_rank_, ranks_[v.index]);
	}
	ranks_.resize(pattern_.variable_count());
}

RankedPattern RankedPattern::positional(Pattern p, std::span<const Rank> ranks)
{
	if (ranks.size() != p.size())
		throw std::invalid_argument("expected " + std::to_string(p.size()) + " ranks, got " +
		                            std::to_string(ranks.size()));
	std::vector<Rank> table(p.variable_count(), 0);
	for (std::size_t t = 0; t < p.size(); ++t) {
		Rank& r = table[p[t].index];
		if (r != 0 && r != ranks[t])
			throw std::invalid_argument("inconsistent ranks for variable '" + p.name(p[t]) + "'");
		r = ranks[t];
	}
	return RankedPattern(std::move(p), std::move(table));
}

std::vector<Rank> RankedPattern::rank_sequence() const
{
	std::vector<Rank> out;
	out.reserve(pattern_.size());
	for (VariableId v : pattern_.symbols())
		out.push_back(ranks_[v.index]);
	return out;
}

std::vector<VariableId> RankedPattern::variables_of_rank(Rank i) const
{
	std::vector<VariableId> out;
	for (VariableId v : pattern_.alphabet()) {
		if (ranks_[v.index] == i)
			out.push_back(v);
	}
	return out;
}

Pattern RankedPattern::restricted(Rank i) const
{
	return pattern_.filter([&](VariableId v) { return ranks_[v.index] >= i; });
}

RankingReport validate_ranking(const RankedPattern& rp)
{
	RankingReport report;
	const std::vector<Rank> seq = rp.rank_sequence();

	// Stack of positions with non-increasing ranks; the first entry not
	// smaller than seq[t] is the nearest such position to the left.
	std::vector<std::size_t> stack;
	for (std::size_t t = 0; t < seq.size(); ++t) {
		while (!stack.empty() && seq[stack.back()] < seq[t])
			stack.pop_back();
		if (!stack.empty() && seq[stack.back()] == seq[t]) {
			report.violations.push_back(
			    {RankingViolation::Kind::NoLargerBetween, stack.back(), t, seq[t]});
			stack.pop_back();
		}
		stack.push_back(t);
	}

	std::optional<std::size_t> top;
	for (std::size_t t = 0; t < seq.size(); ++t) {
		if (seq[t] != rp.max_rank())
			continue;
		if (top)
			report.violations.push_back({RankingViolation::Kind::MaximalRankRepeated, *top, t, seq[t]});
		else
			top = t;
	}
	return report;
}

// ---------------------------------------------------------------- Valuation

const CompressedFactor& Valuation::operator[](VariableId v) const
{
	const auto& slot = values_.at(v.index);
	if (!slot)
		throw std::out_of_range("variable has no value");
	return *slot;
}

std::vector<CompressedFactor> substitute(const Pattern& p, const Valuation& v)
{
	std::vector<CompressedFactor> parts;
	parts.reserve(p.size());
	for (VariableId x : p.symbols())
		parts.push_back(v[x]);
	return parts;
}

bool is_valid_valuation(const RankedPattern& rp, const Valuation& v)
{
	for (VariableId x : rp.pattern().alphabet()) {
		if (!v.has(x) || v[x].max_letter() != rp.rank(x))
			return false;
	}
	const auto parts = substitute(rp.pattern(), v);
	return check_concatenation(parts);
}

CompressedFactor instance_representation(const Pattern& p, const Valuation& v)
{
	const auto parts = substitute(p, v);
	return compose(parts);
}

BigInt instance_length(const Pattern& p, const Valuation& v)
{
	std::vector<std::size_t> occurrences(p.variable_count(), 0);
	for (VariableId x : p.symbols())
		++occurrences[x.index];
	BigInt total = 0;
	for (std::uint32_t x = 0; x < occurrences.size(); ++x) {
		if (occurrences[x])
			total += decompressed_length(v[VariableId{x}]) * occurrences[x];
	}
	return total;
}

// ---------------------------------------------------------------- explicit reference

std::optional<ExplicitValuation> uncompressed_embedding(const RankedPattern& rp)
{
	if (!validate_ranking(rp).ok())
		return std::nullopt;
	const Rank k = rp.max_rank();
	if (k > kMaxExplicitOrder)
		throw SizeLimitError("explicit embedding needs Z_" + std::to_string(k) + ", cap is Z_" +
		                     std::to_string(kMaxExplicitOrder));

	const Pattern& p = rp.pattern();
	const auto alphabet = p.alphabet();
	std::vector<std::vector<Letter>> val(p.variable_count());
	for (VariableId x : rp.variables_of_rank(k))
		val[x.index] = {1};

	for (Rank i = k - 1; i >= 1; --i) {
		const auto forced = rp.variables_of_rank(i);
		const auto flags = first_last(rp.restricted(i), forced);
		if (!flags)
			return std::nullopt;
		for (VariableId x : alphabet) {
			auto& w = val[x.index];
			if (rp.rank(x) == i) {
				w = {1};
			} else if (rp.rank(x) > i) {
				const ZWord image = apply_mu(ZWord(w));
				w.assign(image.begin(), image.end());
				const BoundaryFlags f = (*flags)[x];
				if (f.first && w.front() != 1)
					w.insert(w.begin(), 1);
				else if (!f.first && w.front() == 1)
					w.erase(w.begin());
				if (f.last && w.back() != 1)
					w.push_back(1);
				else if (!f.last && w.back() == 1)
					w.pop_back();
			}
		}
	}

	ExplicitValuation out(p.variable_count());
	for (VariableId x : alphabet)
		out[x.index] = ZWord(std::move(val[x.index]));
	return out;
}

// ---------------------------------------------------------------- compressed engine

namespace {

constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

class Engine {
  public:
	Engine(const RankedPattern& rp, bool shortest) : rp_(rp), shortest_(shortest) {}

	/// flips: choices for the free components of all steps, concatenated.
	/// per_step: receives the free component count of every step.
	std::optional<MatchResult> run(std::span<const bool> flips = {}, std::vector<std::size_t>* per_step = nullptr);

  private:
	const RankedPattern& rp_;
	bool shortest_;
};

std::optional<MatchResult> Engine::run(std::span<const bool> flips, std::vector<std::size_t>* per_step)
{
	const Pattern& p = rp_.pattern();
	const auto n = static_cast<std::uint32_t>(p.size());
	const Rank k = rp_.max_rank();
	const std::size_t var_count = p.variable_count();

	// Nearest position to the left with a rank at least as large.
	std::vector<std::uint32_t> prev_ge(n);
	std::vector<std::uint32_t> stack;
	for (std::uint32_t t = 0; t < n; ++t) {
		const Rank r = rp_.rank(p[t]);
		while (!stack.empty() && rp_.rank(p[stack.back()]) < r)
			stack.pop_back();
		prev_ge[t] = stack.empty() ? kNone : stack.back();
		stack.push_back(t);
	}

	// Positions bucketed by rank, ascending within a bucket.
	std::vector<std::uint32_t> bucket_start(std::size_t{k} + 2, 0);
	for (std::uint32_t t = 0; t < n; ++t)
		++bucket_start[rp_.rank(p[t]) + 1];
	for (Rank r = 1; r <= k + 1; ++r)
		bucket_start[r] += bucket_start[r - 1];
	std::vector<std::uint32_t> by_rank(n);
	{
		std::vector<std::uint32_t> at(bucket_start.begin(), bucket_start.end() - 1);
		for (std::uint32_t t = 0; t < n; ++t)
			by_rank[at[rp_.rank(p[t])]++] = t;
	}

	// Variables bucketed by rank.
	std::vector<std::vector<VariableId>> vars_of_rank(std::size_t{k} + 1);
	for (VariableId x : p.alphabet())
		vars_of_rank[rp_.rank(x)].push_back(x);

	std::vector<std::uint32_t> next(n, kNone);
	std::uint32_t head = kNone;
	std::vector<VariableId> sym;
	sym.reserve(n);
	AdjacencyGraph graph;
	std::vector<std::vector<Letter>> front(var_count), back(var_count);
	std::size_t letters = 0;

	MatchResult result;
	const std::size_t fixed_cells = prev_ge.size() + bucket_start.size() + by_rank.size() + next.size() +
	                                sym.capacity() + stack.capacity() + 3 * var_count + vars_of_rank.size();
	std::size_t consumed = 0;

	for (Rank i = k; i >= 1; --i) {
		for (std::uint32_t b = bucket_start[i]; b < bucket_start[i + 1]; ++b) {
			const std::uint32_t t = by_rank[b];
			const std::uint32_t before = prev_ge[t];
			if (before == kNone) {
				next[t] = head;
				head = t;
			} else {
				next[t] = next[before];
				next[before] = t;
			}
		}
		sym.clear();
		for (std::uint32_t t = head; t != kNone; t = next[t])
			sym.push_back(p[t]);

		graph.assign(sym, var_count);
		if (!graph.force(vars_of_rank[i]))
			return std::nullopt;
		graph.reset_fresh_components();
		if (shortest_)
			graph.minimize_boundaries(sym.front(), sym.back());
		consumed += graph.fill(flips.size() > consumed ? flips.subspan(consumed) : std::span<const bool>{});
		const std::size_t free_here = graph.fresh_components();
		result.l += free_here;
		if (per_step)
			per_step->push_back(free_here);

		for (VariableId x : graph.variables()) {
			if (rp_.rank(x) <= i)
				continue;
			if (*graph.value({x, AdjacencyGraph::Side::Start})) {
				front[x.index].push_back(i);
				++letters;
			}
			if (*graph.value({x, AdjacencyGraph::Side::End})) {
				back[x.index].push_back(i);
				++letters;
			}
		}

		++result.stats.steps;
		result.stats.symbols_processed += sym.size();
		result.stats.peak_cells =
		    std::max(result.stats.peak_cells, fixed_cells + graph.memory_cells() + letters);
	}

	result.valuation = Valuation(var_count);
	std::vector<Letter> seq;
	for (VariableId x : p.alphabet()) {
		seq.assign(front[x.index].rbegin(), front[x.index].rend());
		seq.push_back(rp_.rank(x));
		seq.insert(seq.end(), back[x.index].begin(), back[x.index].end());
		result.valuation.set(x, CompressedFactor(seq));
	}
	return result;
}

} // namespace

std::optional<MatchResult> compressed_embedding(const RankedPattern& rp, EmbeddingOptions options)
{
	if (options.check_ranking && !validate_ranking(rp).ok())
		return std::nullopt;
	return Engine(rp, false).run();
}

std::optional<MatchResult> shortest_instance(const RankedPattern& rp)
{
	if (!validate_ranking(rp).ok())
		return std::nullopt;
	return Engine(rp, true).run();
}

BigInt count_instances(const RankedPattern& rp)
{
	const auto match = compressed_embedding(rp);
	if (!match)
		return 0;
	return BigInt(1) << match->l;
}

EnumerationLimitError::EnumerationLimitError(BigInt count, std::size_t l)
    : std::runtime_error("enumeration limit exceeded: " + count.str() + " valuations (l = " + std::to_string(l) +
                         ")"),
      count_(std::move(count)), l_(l)
{
}

std::vector<Valuation> enumerate_instances(const RankedPattern& rp, std::size_t limit)
{
	if (!validate_ranking(rp).ok())
		return {};
	Engine engine(rp, false);
	const auto canonical = engine.run();
	if (!canonical)
		return {};
	const std::size_t l = canonical->l;
	const BigInt count = BigInt(1) << l;
	if (count > limit)
		throw EnumerationLimitError(count, l);

	std::vector<Valuation> out;
	std::set<Valuation> seen;
	auto flips = std::make_unique<bool[]>(l == 0 ? 1 : l);
	const std::uint64_t total = std::uint64_t{1} << l;
	for (std::uint64_t code = 0; code < total; ++code) {
		for (std::size_t b = 0; b < l; ++b)
			flips[b] = (code >> (l - 1 - b)) & 1U;
		auto match = engine.run(std::span<const bool>(flips.get(), l));
		if (match && seen.insert(match->valuation).second)
			out.push_back(std::move(match->valuation));
	}
	return out;
}

} // namespace zimin
