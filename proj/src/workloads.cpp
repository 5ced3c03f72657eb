#include "zimin/workloads.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace zimin::verification {

std::vector<std::vector<std::uint32_t>> all_patterns(std::size_t max_len, std::uint32_t max_vars)
{
	std::vector<std::vector<std::uint32_t>> out;
	std::vector<std::uint32_t> cur;
	std::function<void(std::uint32_t)> grow = [&](std::uint32_t used) {
		if (!cur.empty())
			out.push_back(cur);
		if (cur.size() == max_len)
			return;
		for (std::uint32_t c = 0; c <= used && c < max_vars; ++c) {
			cur.push_back(c);
			grow(std::max(used, c + 1));
			cur.pop_back();
		}
	};
	grow(0);
	return out;
}

void for_each_rank_table(std::uint32_t vars, Rank max_rank, const std::function<void(const std::vector<Rank>&)>& f)
{
	std::vector<Rank> ranks(vars, 1);
	while (true) {
		f(ranks);
		std::size_t i = vars;
		while (i > 0 && ranks[i - 1] == max_rank)
			ranks[--i] = 1;
		if (i == 0)
			return;
		++ranks[i - 1];
	}
}

std::vector<RankedPattern> exhaustive_ranked(std::size_t max_len, std::uint32_t max_vars, Rank max_rank)
{
	std::vector<RankedPattern> out;
	for (const auto& symbols : all_patterns(max_len, max_vars)) {
		const Pattern p = Pattern::from_indices(symbols);
		for_each_rank_table(static_cast<std::uint32_t>(p.variable_count()), max_rank,
		                    [&](const std::vector<Rank>& ranks) { out.emplace_back(p, ranks); });
	}
	return out;
}

std::vector<RankedPattern> sampled_rank4(std::size_t count, std::uint64_t seed)
{
	std::mt19937_64 rng(seed);
	auto uniform = [&](std::size_t lo, std::size_t hi) {
		return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
	};
	const ZWord z = generate_zimin(4);
	const std::size_t peak = 7; // position of the letter 4
	std::vector<RankedPattern> out;
	while (out.size() < count) {
		std::vector<std::uint32_t> symbols;
		std::vector<Rank> ranks;
		if (out.size() % 2 == 0) {
			const std::size_t from = uniform(0, peak);
			const std::size_t to = uniform(peak + 1, z.size());
			std::map<std::vector<Letter>, std::uint32_t> ids;
			for (std::size_t at = from; at < to;) {
				std::size_t len = uniform(1, std::min<std::size_t>(to - at, 4));
				if (symbols.size() == 7)
					len = to - at;
				std::vector<Letter> block(z.begin() + at, z.begin() + at + len);
				auto [it, fresh] = ids.try_emplace(block, static_cast<std::uint32_t>(ids.size()));
				if (fresh)
					ranks.push_back(*std::max_element(block.begin(), block.end()));
				symbols.push_back(it->second);
				at += len;
			}
		} else {
			const std::size_t len = uniform(1, 8);
			const std::size_t vars = uniform(1, 4);
			std::map<std::size_t, std::uint32_t> rename;
			for (std::size_t t = 0; t < len; ++t) {
				const std::size_t s = uniform(0, vars - 1);
				symbols.push_back(rename.try_emplace(s, static_cast<std::uint32_t>(rename.size())).first->second);
			}
			ranks.resize(rename.size());
			for (auto& r : ranks)
				r = static_cast<Rank>(uniform(1, 4));
			ranks[uniform(0, ranks.size() - 1)] = 4;
		}
		out.emplace_back(Pattern::from_indices(symbols), std::move(ranks));
	}
	return out;
}

RankedPattern zimin_prefix_workload(std::size_t n, Rank k)
{
	if (n == 0)
		throw std::invalid_argument("workload length must be positive");
	const auto m = static_cast<Rank>(std::bit_width(n));
	if (m > k)
		throw std::invalid_argument("workload of length " + std::to_string(n) + " needs at least " +
		                            std::to_string(m) + " ranks");
	// Letter of Z_m at position t (1-based) is 1 + the number of trailing zeros of t.
	std::vector<std::uint32_t> symbols(n);
	for (std::size_t t = 1; t <= n; ++t)
		symbols[t - 1] = static_cast<std::uint32_t>(std::countr_zero(t));
	std::vector<Rank> ranks(m);
	for (Rank j = 1; j <= m; ++j)
		ranks[j - 1] = j + (k - m);
	return RankedPattern(Pattern::from_indices(symbols), std::move(ranks));
}

} // namespace zimin::verification
