#include "zimin/two_sat.hpp"

#include <algorithm>

namespace zimin {

TwoSat::TwoSat(std::size_t variables) : n_(variables), implications_(2 * variables) {}

void TwoSat::add_clause(std::size_t x, bool vx, std::size_t y, bool vy)
{
	// not a -> b, not b -> a
	implications_[literal(x, !vx)].push_back(literal(y, vy));
	implications_[literal(y, !vy)].push_back(literal(x, vx));
}

std::optional<std::vector<bool>> TwoSat::solve() const
{
	const std::size_t m = implications_.size();
	std::vector<std::vector<std::size_t>> reverse(m);
	for (std::size_t u = 0; u < m; ++u)
		for (std::size_t w : implications_[u])
			reverse[w].push_back(u);

	// First pass: finishing order, iteratively.
	std::vector<char> seen(m, 0);
	std::vector<std::size_t> order;
	order.reserve(m);
	std::vector<std::pair<std::size_t, std::size_t>> stack;
	for (std::size_t s = 0; s < m; ++s) {
		if (seen[s])
			continue;
		seen[s] = 1;
		stack.emplace_back(s, 0);
		while (!stack.empty()) {
			auto& [u, next] = stack.back();
			if (next < implications_[u].size()) {
				const std::size_t w = implications_[u][next++];
				if (!seen[w]) {
					seen[w] = 1;
					stack.emplace_back(w, 0);
				}
			} else {
				order.push_back(u);
				stack.pop_back();
			}
		}
	}

	// Second pass on the reverse graph; components come out in topological order.
	constexpr auto none = static_cast<std::size_t>(-1);
	std::vector<std::size_t> comp(m, none);
	std::size_t count = 0;
	std::vector<std::size_t> work;
	for (auto it = order.rbegin(); it != order.rend(); ++it) {
		if (comp[*it] != none)
			continue;
		comp[*it] = count;
		work.push_back(*it);
		while (!work.empty()) {
			const std::size_t u = work.back();
			work.pop_back();
			for (std::size_t w : reverse[u]) {
				if (comp[w] == none) {
					comp[w] = count;
					work.push_back(w);
				}
			}
		}
		++count;
	}

	std::vector<bool> out(n_);
	for (std::size_t x = 0; x < n_; ++x) {
		const std::size_t t = comp[literal(x, true)];
		const std::size_t f = comp[literal(x, false)];
		if (t == f)
			return std::nullopt;
		out[x] = t > f;
	}
	return out;
}

std::optional<BoundaryAssignment> first_last_reference(const ConstraintSystem& system)
{
	// Variable 2v is v.first, 2v+1 is v.last.
	TwoSat sat(2 * system.variable_count);
	for (auto [x, y] : system.adjacencies) {
		const std::size_t a = 2 * x.index + 1;
		const std::size_t b = 2 * y.index;
		sat.add_clause(a, true, b, true);
		sat.add_clause(a, false, b, false);
	}
	for (VariableId v : system.forced) {
		sat.add_unit(2 * v.index, true);
		sat.add_unit(2 * v.index + 1, true);
	}
	auto solution = sat.solve();
	if (!solution)
		return std::nullopt;
	BoundaryAssignment out(system.variable_count);
	for (std::size_t v = 0; v < system.variable_count; ++v) {
		if (system.present[v])
			out[VariableId{static_cast<std::uint32_t>(v)}] = {(*solution)[2 * v], (*solution)[2 * v + 1]};
	}
	return out;
}

} // namespace zimin
