#include "zimin/oracle.hpp"

#include <algorithm>
#include <string>

namespace zimin::verification {

namespace {

void check_k(unsigned k, unsigned cap)
{
	if (k == 0 || k > cap)
		throw BudgetExceeded("oracle order " + std::to_string(k) + " outside 1.." + std::to_string(cap));
}

void check_pattern(const Pattern& p, const OracleBudget& budget)
{
	if (p.size() > budget.max_pattern_len)
		throw BudgetExceeded("pattern length " + std::to_string(p.size()) + " exceeds oracle budget " +
		                     std::to_string(budget.max_pattern_len));
}

/// Depth-first block assignment of pattern positions onto z starting at `at`.
class Splitter {
  public:
	Splitter(const Pattern& p, const std::vector<Letter>& z, const std::vector<Rank>* ranks)
	    : p_(p), z_(z), ranks_(ranks), start_(p.variable_count(), 0), len_(p.variable_count(), 0)
	{
	}

	/// Calls visit() for every complete assignment; stops early once it
	/// returns true. Returns whether any call returned true.
	template <typename Visit>
	bool run(std::size_t t, std::size_t at, Visit&& visit)
	{
		if (t == p_.size())
			return visit(start_, len_);
		const VariableId x = p_[t];
		if (len_[x.index]) {
			const std::size_t len = len_[x.index];
			if (at + len > z_.size() ||
			    !std::equal(z_.begin() + start_[x.index], z_.begin() + start_[x.index] + len, z_.begin() + at))
				return false;
			return run(t + 1, at + len, visit);
		}
		Letter top = 0;
		for (std::size_t len = 1; at + len <= z_.size(); ++len) {
			top = std::max(top, z_[at + len - 1]);
			if (ranks_ && top > (*ranks_)[x.index])
				break;
			if (ranks_ && top != (*ranks_)[x.index])
				continue;
			start_[x.index] = at;
			len_[x.index] = len;
			const bool stop = run(t + 1, at + len, visit);
			len_[x.index] = 0;
			if (stop)
				return true;
		}
		return false;
	}

  private:
	const Pattern& p_;
	const std::vector<Letter>& z_;
	const std::vector<Rank>* ranks_;
	std::vector<std::size_t> start_;
	std::vector<std::size_t> len_;
};

} // namespace

bool oracle_is_factor(const ZWord& u, unsigned k, const OracleBudget& budget)
{
	check_k(k, budget.max_substring_k);
	const ZWord z = generate_zimin(k);
	if (u.empty())
		return true;
	return std::search(z.begin(), z.end(), u.begin(), u.end()) != z.end();
}

std::set<ExplicitTuple> oracle_enumerate(const RankedPattern& rp, const OracleBudget& budget)
{
	check_k(rp.max_rank(), budget.max_k);
	check_pattern(rp.pattern(), budget);
	const ZWord zw = generate_zimin(rp.max_rank());
	const std::vector<Letter> z(zw.begin(), zw.end());
	const std::vector<Rank> ranks(rp.ranks().begin(), rp.ranks().end());
	const std::size_t vars = rp.pattern().variable_count();

	std::set<ExplicitTuple> out;
	Splitter split(rp.pattern(), z, &ranks);
	for (std::size_t s = 0; s < z.size(); ++s) {
		split.run(0, s, [&](const std::vector<std::size_t>& start, const std::vector<std::size_t>& len) {
			ExplicitTuple tuple(vars);
			for (std::size_t x = 0; x < vars; ++x) {
				if (len[x])
					tuple[x] = ZWord(std::vector<Letter>(z.begin() + start[x], z.begin() + start[x] + len[x]));
			}
			out.insert(std::move(tuple));
			return false;
		});
	}
	return out;
}

std::size_t oracle_count(const RankedPattern& rp, const OracleBudget& budget)
{
	return oracle_enumerate(rp, budget).size();
}

std::optional<std::size_t> oracle_min_length(const RankedPattern& rp, const OracleBudget& budget)
{
	std::optional<std::size_t> best;
	for (const ExplicitTuple& tuple : oracle_enumerate(rp, budget)) {
		std::size_t total = 0;
		for (VariableId x : rp.pattern().symbols())
			total += tuple[x.index].size();
		if (!best || total < *best)
			best = total;
	}
	return best;
}

bool oracle_occurs(const Pattern& p, unsigned k, const OracleBudget& budget)
{
	check_k(k, budget.max_k);
	const ZWord zw = generate_zimin(k);
	const std::vector<Letter> z(zw.begin(), zw.end());
	Splitter split(p, z, nullptr);
	for (std::size_t s = 0; s < z.size(); ++s) {
		if (split.run(0, s, [](const auto&, const auto&) { return true; }))
			return true;
	}
	return false;
}

Valuation to_valuation(const ExplicitTuple& tuple)
{
	Valuation v(tuple.size());
	for (std::uint32_t x = 0; x < tuple.size(); ++x) {
		if (!tuple[x].empty())
			v.set(VariableId{x}, compress(tuple[x]));
	}
	return v;
}

} // namespace zimin::verification
