#pragma once

#include "zimin/boundary_constraints.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace zimin {

/// Implication-graph 2-SAT solver (Kosaraju SCC). Kept as an independent
/// reference for the parity-propagation solver.
class TwoSat {
  public:
	explicit TwoSat(std::size_t variables);

	/// Adds (x = vx) OR (y = vy).
	void add_clause(std::size_t x, bool vx, std::size_t y, bool vy);
	/// Adds x = v.
	void add_unit(std::size_t x, bool v) { add_clause(x, v, x, v); }

	[[nodiscard]] std::optional<std::vector<bool>> solve() const;

  private:
	[[nodiscard]] std::size_t literal(std::size_t x, bool v) const { return 2 * x + (v ? 0 : 1); }

	std::size_t n_;
	std::vector<std::vector<std::size_t>> implications_;
};

/// The boundary system of build_constraints solved through TwoSat. Any
/// satisfying assignment may be returned, not necessarily the canonical one.
std::optional<BoundaryAssignment> first_last_reference(const ConstraintSystem& system);

} // namespace zimin
