#include "zimin/boundary_constraints.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zimin {

namespace {

constexpr std::uint32_t kAbsent = static_cast<std::uint32_t>(-1);

constexpr std::uint32_t end_vertex(std::uint32_t local) { return 2 * local; }
constexpr std::uint32_t start_vertex(std::uint32_t local) { return 2 * local + 1; }

} // namespace

ConstraintSystem build_constraints(const Pattern& p, std::span<const VariableId> forced)
{
	ConstraintSystem sys;
	sys.variable_count = p.variable_count();
	sys.present = p.occurrence_mask();
	for (VariableId v : forced) {
		if (v.index >= sys.variable_count || !sys.present[v.index])
			throw std::invalid_argument("forced variable does not occur in the pattern");
	}
	sys.forced.assign(forced.begin(), forced.end());

	AdjacencyGraph g;
	g.assign(p.symbols(), p.variable_count());
	sys.adjacencies = g.edges();
	return sys;
}

bool satisfies(const ConstraintSystem& system, const BoundaryAssignment& a)
{
	for (auto [x, y] : system.adjacencies) {
		if (a[x].last == a[y].first)
			return false;
	}
	for (VariableId v : system.forced) {
		if (!a[v].first || !a[v].last)
			return false;
	}
	return true;
}

void AdjacencyGraph::assign(std::span<const VariableId> symbols, std::size_t variable_count)
{
	if (variable_count != variable_count_) {
		variable_count_ = variable_count;
		local_.assign(variable_count, kAbsent);
	} else {
		for (VariableId v : vars_)
			local_[v.index] = kAbsent;
	}
	vars_.clear();
	for (VariableId v : symbols) {
		if (v.index >= variable_count)
			throw std::invalid_argument("symbol outside the variable table");
		if (local_[v.index] == kAbsent) {
			local_[v.index] = static_cast<std::uint32_t>(vars_.size());
			vars_.push_back(v);
		}
	}
	const auto n = static_cast<std::uint32_t>(vars_.size());

	// Bucket the adjacencies by left variable, then drop repeats with a stamp.
	const std::size_t m = symbols.empty() ? 0 : symbols.size() - 1;
	offsets_.assign(n + 1, 0);
	for (std::size_t t = 0; t < m; ++t)
		++offsets_[local_[symbols[t].index] + 1];
	for (std::uint32_t x = 0; x < n; ++x)
		offsets_[x + 1] += offsets_[x];
	scratch_.resize(m);
	{
		std::vector<std::uint32_t>& fill_at = queue_;
		fill_at.assign(offsets_.begin(), offsets_.end() - 1);
		for (std::size_t t = 0; t < m; ++t)
			scratch_[fill_at[local_[symbols[t].index]]++] = local_[symbols[t + 1].index];
	}
	edges_.clear();
	std::vector<std::uint32_t>& stamp = queue_;
	stamp.assign(n, kAbsent);
	for (std::uint32_t x = 0; x < n; ++x) {
		for (std::uint32_t e = offsets_[x]; e < offsets_[x + 1]; ++e) {
			const std::uint32_t y = scratch_[e];
			if (stamp[y] != x) {
				stamp[y] = x;
				edges_.emplace_back(x, y);
			}
		}
	}

	offsets_.assign(2 * n + 1, 0);
	for (auto [x, y] : edges_) {
		++offsets_[end_vertex(x) + 1];
		++offsets_[start_vertex(y) + 1];
	}
	for (std::uint32_t v = 0; v < 2 * n; ++v)
		offsets_[v + 1] += offsets_[v];
	neighbours_.resize(2 * edges_.size());
	scratch_.assign(offsets_.begin(), offsets_.end() - 1);
	for (auto [x, y] : edges_) {
		neighbours_[scratch_[end_vertex(x)]++] = start_vertex(y);
		neighbours_[scratch_[start_vertex(y)]++] = end_vertex(x);
	}

	values_.assign(2 * n, -1);
	fresh_ = 0;
}

bool AdjacencyGraph::contains(VariableId v) const noexcept
{
	return v.index < variable_count_ && local_[v.index] != kAbsent;
}

std::vector<std::pair<VariableId, VariableId>> AdjacencyGraph::edges() const
{
	std::vector<std::pair<VariableId, VariableId>> out;
	out.reserve(edges_.size());
	for (auto [x, y] : edges_)
		out.emplace_back(vars_[x], vars_[y]);
	return out;
}

std::uint32_t AdjacencyGraph::vertex_index(Vertex v) const
{
	if (!contains(v.var))
		throw std::invalid_argument("variable is not part of the adjacency graph");
	const std::uint32_t local = local_[v.var.index];
	return v.side == Side::End ? end_vertex(local) : start_vertex(local);
}

std::optional<bool> AdjacencyGraph::value(Vertex v) const
{
	const auto val = values_[vertex_index(v)];
	if (val < 0)
		return std::nullopt;
	return val == 1;
}

bool AdjacencyGraph::valuate(Vertex v, bool value)
{
	const std::uint32_t root = vertex_index(v);
	if (values_[root] >= 0)
		return (values_[root] == 1) == value;

	++fresh_;
	values_[root] = value ? 1 : 0;
	queue_.clear();
	queue_.push_back(root);
	for (std::size_t head = 0; head < queue_.size(); ++head) {
		const std::uint32_t u = queue_[head];
		const std::int8_t opposite = values_[u] ? 0 : 1;
		for (std::uint32_t e = offsets_[u]; e < offsets_[u + 1]; ++e) {
			const std::uint32_t w = neighbours_[e];
			if (values_[w] < 0) {
				values_[w] = opposite;
				queue_.push_back(w);
			}
		}
	}
	return true;
}

bool AdjacencyGraph::force(std::span<const VariableId> forced)
{
	for (VariableId v : forced) {
		if (!valuate({v, Side::End}, true) || !valuate({v, Side::Start}, true))
			return false;
	}
	return true;
}

void AdjacencyGraph::minimize_boundaries(VariableId first, VariableId last)
{
	if (!value({first, Side::Start}))
		valuate({first, Side::Start}, false);
	if (!value({last, Side::End}))
		valuate({last, Side::End}, false);
}

std::size_t AdjacencyGraph::fill(std::span<const bool> flips)
{
	std::size_t filled = 0;
	auto next_flip = [&] { return filled < flips.size() && flips[filled]; };
	for (std::uint32_t local = 0; local < vars_.size(); ++local) {
		if (values_[end_vertex(local)] < 0) {
			valuate({vars_[local], Side::End}, next_flip());
			++filled;
		}
		if (values_[start_vertex(local)] < 0) {
			valuate({vars_[local], Side::Start}, !next_flip());
			++filled;
		}
	}
	return filled;
}

BoundaryAssignment AdjacencyGraph::assignment() const
{
	BoundaryAssignment out(variable_count_);
	for (std::uint32_t local = 0; local < vars_.size(); ++local) {
		out[vars_[local]] = {values_[start_vertex(local)] == 1, values_[end_vertex(local)] == 1};
	}
	return out;
}

std::size_t AdjacencyGraph::memory_cells() const noexcept
{
	return vars_.capacity() + local_.capacity() + 2 * edges_.capacity() + offsets_.capacity() +
	       neighbours_.capacity() + values_.capacity() + scratch_.capacity() + queue_.capacity();
}

std::string AdjacencyGraph::dump() const
{
	std::ostringstream os;
	for (auto [x, y] : edges_)
		os << 'x' << vars_[x].index << ".end -- x" << vars_[y].index << ".start\n";
	return os.str();
}

namespace {

std::optional<AdjacencyGraph> forced_graph(const Pattern& p, std::span<const VariableId> forced)
{
	build_constraints(p, forced); // validates forced ⊆ alph(p)
	AdjacencyGraph g(p);
	if (!g.force(forced))
		return std::nullopt;
	g.reset_fresh_components();
	return g;
}

} // namespace

std::optional<BoundaryAssignment> first_last(const Pattern& p, std::span<const VariableId> forced)
{
	auto g = forced_graph(p, forced);
	if (!g)
		return std::nullopt;
	g->fill();
	return g->assignment();
}

std::optional<BoundaryAssignment> shortest_first_last(const Pattern& p, std::span<const VariableId> forced)
{
	auto g = forced_graph(p, forced);
	if (!g)
		return std::nullopt;
	if (!p.empty())
		g->minimize_boundaries(p[0], p[p.size() - 1]);
	g->fill();
	return g->assignment();
}

std::optional<std::size_t> count_free_components(const Pattern& p, std::span<const VariableId> forced,
                                                 bool boundary_minimize)
{
	auto g = forced_graph(p, forced);
	if (!g)
		return std::nullopt;
	if (boundary_minimize && !p.empty()) {
		g->minimize_boundaries(p[0], p[p.size() - 1]);
		g->reset_fresh_components();
	}
	return g->fill();
}

} // namespace zimin
