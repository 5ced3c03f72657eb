#pragma once

#include "zimin/pattern.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zimin {

/// Whether a variable's value starts / ends with the smallest letter of the
/// current level.
struct BoundaryFlags {
	bool first = false;
	bool last = false;

	friend constexpr bool operator==(BoundaryFlags, BoundaryFlags) = default;
};

/// Flags for every variable of a pattern's variable table (variables that do
/// not occur keep {false, false}).
class BoundaryAssignment {
  public:
	BoundaryAssignment() = default;
	explicit BoundaryAssignment(std::size_t variable_count) : flags_(variable_count) {}

	[[nodiscard]] BoundaryFlags operator[](VariableId v) const { return flags_.at(v.index); }
	BoundaryFlags& operator[](VariableId v) { return flags_.at(v.index); }
	[[nodiscard]] std::size_t size() const noexcept { return flags_.size(); }

	friend bool operator==(const BoundaryAssignment&, const BoundaryAssignment&) = default;

  private:
	std::vector<BoundaryFlags> flags_;
};

/// The exactly-one constraints of a pattern: for every adjacency x y,
/// x.last XOR y.first; for every forced variable, first = last = true.
struct ConstraintSystem {
	std::size_t variable_count = 0;
	std::vector<bool> present;
	/// Distinct ordered adjacent pairs (x, y), grouped by x in first-occurrence
	/// order of x.
	std::vector<std::pair<VariableId, VariableId>> adjacencies;
	std::vector<VariableId> forced;
};

ConstraintSystem build_constraints(const Pattern& p, std::span<const VariableId> forced);

/// Direct scan of every adjacency and unit constraint.
bool satisfies(const ConstraintSystem& system, const BoundaryAssignment& a);

/// Bipartite graph with an end vertex (value ends with the smallest letter)
/// and a start vertex (value starts with it) per occurring variable, and an
/// edge {x.end, y.start} per distinct adjacency x y. Adjacent vertices always
/// carry opposite values, so a connected component is decided by one vertex.
///
/// The graph can be rebuilt in place; rebuilding costs O(|symbols|) plus the
/// size of the previous build.
class AdjacencyGraph {
  public:
	enum class Side : unsigned char { End = 0, Start = 1 };
	struct Vertex {
		VariableId var;
		Side side;
	};

	AdjacencyGraph() = default;
	explicit AdjacencyGraph(const Pattern& p) { assign(p.symbols(), p.variable_count()); }

	/// Rebuilds the graph for a symbol sequence over variables < variable_count.
	void assign(std::span<const VariableId> symbols, std::size_t variable_count);

	/// Occurring variables in first-occurrence order.
	[[nodiscard]] std::span<const VariableId> variables() const noexcept { return vars_; }
	[[nodiscard]] bool contains(VariableId v) const noexcept;
	[[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
	[[nodiscard]] std::vector<std::pair<VariableId, VariableId>> edges() const;

	[[nodiscard]] std::optional<bool> value(Vertex v) const;

	/// Assigns `value` to v's side of its component and the negation to the
	/// other side. Returns false iff v already holds the opposite value.
	bool valuate(Vertex v, bool value);

	/// Sets first = last = true for each variable. False on conflict.
	bool force(std::span<const VariableId> forced);

	/// Sets first.start and last.end to false where still undetermined.
	void minimize_boundaries(VariableId first, VariableId last);

	/// Number of components valuated from scratch since the last reset.
	[[nodiscard]] std::size_t fresh_components() const noexcept { return fresh_; }
	void reset_fresh_components() noexcept { fresh_ = 0; }

	/// Valuates every remaining component, visiting variables in
	/// first-occurrence order, end vertex before start vertex. The k-th
	/// component found gets its canonical value (end vertex false, or a lone
	/// start vertex true) flipped iff flips[k] is set. Returns the number of
	/// components filled.
	std::size_t fill(std::span<const bool> flips = {});

	/// Flags read off the vertex values; unvaluated vertices read as false.
	[[nodiscard]] BoundaryAssignment assignment() const;

	/// Allocated buffer cells (capacity of every internal array).
	[[nodiscard]] std::size_t memory_cells() const noexcept;

	/// Edge list "x.end -- y.start", one per line.
	[[nodiscard]] std::string dump() const;

  private:
	[[nodiscard]] std::uint32_t vertex_index(Vertex v) const;

	std::size_t variable_count_ = 0;
	std::vector<VariableId> vars_;
	std::vector<std::uint32_t> local_; // global variable -> local index, or kAbsent
	std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_; // local (x, y)
	std::vector<std::uint32_t> offsets_;
	std::vector<std::uint32_t> neighbours_;
	std::vector<std::int8_t> values_; // -1 unknown
	std::vector<std::uint32_t> scratch_;
	std::vector<std::uint32_t> queue_;
	std::size_t fresh_ = 0;
};

/// A satisfying assignment with every undetermined component set
/// canonically, or nullopt when the constraints are unsatisfiable.
std::optional<BoundaryAssignment> first_last(const Pattern& p, std::span<const VariableId> forced);

/// Like first_last, but first forces the first variable's start flag and the
/// last variable's end flag to false where still undetermined, which yields
/// the shortest instance at this level.
std::optional<BoundaryAssignment> shortest_first_last(const Pattern& p, std::span<const VariableId> forced);

/// Number of components with no forced vertex, i.e. log2 of the number of
/// solutions. With boundary_minimize the two boundary flags of
/// shortest_first_last count as forced too. nullopt when unsatisfiable.
std::optional<std::size_t> count_free_components(const Pattern& p, std::span<const VariableId> forced,
                                                 bool boundary_minimize = false);

} // namespace zimin
