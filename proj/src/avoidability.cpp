#include "zimin/avoidability.hpp"

#include "zimin/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace zimin {

namespace {

class UnionFind {
  public:
	explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

	std::size_t find(std::size_t x)
	{
		while (parent_[x] != x) {
			parent_[x] = parent_[parent_[x]];
			x = parent_[x];
		}
		return x;
	}
	void unite(std::size_t x, std::size_t y) { parent_[find(x)] = find(y); }

  private:
	std::vector<std::size_t> parent_;
};

std::vector<bool> membership(std::size_t variable_count, std::span<const VariableId> set)
{
	std::vector<bool> out(variable_count, false);
	for (VariableId v : set)
		out.at(v.index) = true;
	return out;
}

void check_size(const Pattern& p)
{
	const std::size_t vars = p.alphabet().size();
	if (vars > kMaxAvoidabilityVariables)
		throw SizeLimitError("pattern has " + std::to_string(vars) + " variables, limit is " +
		                     std::to_string(kMaxAvoidabilityVariables));
}

} // namespace

std::optional<FreeSetWitness> check_free_set(const Pattern& p, std::span<const VariableId> f)
{
	if (f.empty())
		throw std::invalid_argument("free set candidate is empty");
	const auto present = p.occurrence_mask();
	for (VariableId v : f) {
		if (v.index >= present.size() || !present[v.index])
			throw std::invalid_argument("free set candidate mentions a variable that does not occur");
	}

	// Node 2x is "x in A", node 2x+1 is "x in B"; each adjacency x y equates
	// a(x) with b(y).
	const std::size_t n = p.variable_count();
	UnionFind uf(2 * n);
	for (std::size_t t = 0; t + 1 < p.size(); ++t)
		uf.unite(2 * p[t].index, 2 * p[t + 1].index + 1);

	// 1 = true, 0 = false, -1 = open.
	std::vector<signed char> cls(2 * n, -1);
	auto fix = [&](std::size_t node, bool value) {
		signed char& c = cls[uf.find(node)];
		if (c >= 0 && (c == 1) != value)
			return false;
		c = value ? 1 : 0;
		return true;
	};
	for (VariableId v : f) {
		if (!fix(2 * v.index + 1, true) || !fix(2 * v.index, false))
			return std::nullopt;
	}

	FreeSetWitness w;
	w.free.assign(f.begin(), f.end());
	std::sort(w.free.begin(), w.free.end());
	w.free.erase(std::unique(w.free.begin(), w.free.end()), w.free.end());
	for (std::uint32_t x = 0; x < n; ++x) {
		if (!present[x])
			continue;
		if (cls[uf.find(2 * x)] == 1)
			w.a.push_back(VariableId{x});
		if (cls[uf.find(2 * x + 1)] == 1)
			w.b.push_back(VariableId{x});
	}
	return w;
}

bool verify_witness(const Pattern& p, const FreeSetWitness& w)
{
	const std::size_t n = p.variable_count();
	const auto in_a = membership(n, w.a);
	const auto in_b = membership(n, w.b);
	for (VariableId v : w.free) {
		if (in_a[v.index] || !in_b[v.index])
			return false;
	}
	for (std::size_t t = 0; t + 1 < p.size(); ++t) {
		if (in_a[p[t].index] != in_b[p[t + 1].index])
			return false;
	}
	return !w.free.empty();
}

Pattern sigma_delete(const Pattern& p, std::span<const VariableId> f)
{
	const auto drop = membership(p.variable_count(), f);
	return p.filter([&](VariableId v) { return !drop[v.index]; });
}

const char* to_string(Verdict v) noexcept
{
	switch (v) {
	case Verdict::Unavoidable:
		return "UNAVOIDABLE";
	case Verdict::Avoidable:
		return "AVOIDABLE";
	case Verdict::Inconclusive:
		return "INCONCLUSIVE";
	}
	return "?";
}

namespace {

class ReductionSearch {
  public:
	explicit ReductionSearch(std::size_t bound) : bound_(bound) {}

	bool reduce(const Pattern& p, std::vector<ReductionStep>& steps)
	{
		if (p.empty())
			return true;
		auto key = p.canonical_key();
		if (dead_.contains(key))
			return false;

		const auto alphabet = p.alphabet();
		const std::size_t top = std::min(bound_, alphabet.size());
		std::vector<VariableId> subset;
		for (std::size_t size = 1; size <= top; ++size) {
			// Index combinations of the given size in lexicographic order.
			std::vector<std::size_t> pick(size);
			std::iota(pick.begin(), pick.end(), std::size_t{0});
			while (true) {
				subset.clear();
				for (std::size_t i : pick)
					subset.push_back(alphabet[i]);
				if (auto w = check_free_set(p, subset)) {
					steps.push_back({p, std::move(*w)});
					if (reduce(sigma_delete(p, subset), steps))
						return true;
					steps.pop_back();
				}
				std::size_t i = size;
				while (i > 0 && pick[i - 1] == alphabet.size() - size + i - 1)
					--i;
				if (i == 0)
					break;
				++pick[i - 1];
				for (std::size_t j = i; j < size; ++j)
					pick[j] = pick[j - 1] + 1;
			}
		}
		dead_.insert(std::move(key));
		return false;
	}

  private:
	std::size_t bound_;
	std::set<std::vector<std::uint32_t>> dead_;
};

} // namespace

ReductionOutcome is_unavoidable_by_reduction(const Pattern& p, std::size_t max_free_set_size)
{
	check_size(p);
	if (max_free_set_size == 0)
		throw std::invalid_argument("free set size bound must be positive");
	ReductionOutcome out;
	std::vector<ReductionStep> steps;
	if (ReductionSearch(max_free_set_size).reduce(p, steps)) {
		out.verdict = Verdict::Unavoidable;
		out.trace = ReductionTrace{std::move(steps)};
	} else {
		out.verdict = max_free_set_size < p.alphabet().size() ? Verdict::Inconclusive : Verdict::Avoidable;
	}
	return out;
}

bool verify_trace(const Pattern& p, const ReductionTrace& trace)
{
	Pattern current = p;
	for (const ReductionStep& step : trace.steps) {
		if (!(step.before == current) || !verify_witness(current, step.witness))
			return false;
		if (!check_free_set(current, step.witness.free))
			return false;
		current = sigma_delete(current, step.witness.free);
	}
	return current.empty();
}

RankingOutcome is_unavoidable_by_ranking(const Pattern& p)
{
	check_size(p);
	const auto alphabet = p.alphabet();
	const std::size_t m = alphabet.size();
	std::vector<Rank> choice(m, 1);
	std::vector<Rank> table(p.variable_count(), 0);
	std::vector<bool> used(m + 1);

	while (true) {
		// Keep only rankings onto an interval {1..top}.
		std::fill(used.begin(), used.end(), false);
		Rank top = 0;
		for (Rank r : choice) {
			used[r] = true;
			top = std::max(top, r);
		}
		const bool onto = std::all_of(used.begin() + 1, used.begin() + top + 1, [](bool u) { return u; });
		if (onto) {
			for (std::size_t i = 0; i < m; ++i)
				table[alphabet[i].index] = choice[i];
			RankedPattern rp(p, table);
			if (validate_ranking(rp).ok()) {
				if (auto match = compressed_embedding(rp)) {
					RankingOutcome out;
					out.verdict = Verdict::Unavoidable;
					out.ranking = std::move(rp);
					out.match = std::move(match);
					return out;
				}
			}
		}
		std::size_t i = m;
		while (i > 0 && choice[i - 1] == m)
			choice[--i] = 1;
		if (i == 0)
			break;
		++choice[i - 1];
	}
	return {};
}

} // namespace zimin
