#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zimin {

/// Dense index of a pattern variable within its pattern's variable table.
struct VariableId {
	std::uint32_t index = 0;

	friend constexpr auto operator<=>(VariableId, VariableId) = default;
};

/// A sequence of variables. Variables are numbered 0..variable_count()-1 in
/// first-occurrence order when parsed; the table may also hold variables that
/// no longer occur (after a sigma-deletion), and the sequence may be empty.
class Pattern {
  public:
	Pattern() = default;
	/// Symbols are indices into `names`; throws std::invalid_argument on an
	/// out-of-range index.
	Pattern(std::vector<VariableId> symbols, std::vector<std::string> names);

	/// Whitespace separated variable names, e.g. "a b a". Throws ParseError on
	/// empty input.
	static Pattern parse(std::string_view text);
	/// Builds a pattern over variables 0..n-1 named x0, x1, ...
	static Pattern from_indices(std::span<const std::uint32_t> symbols);

	[[nodiscard]] std::span<const VariableId> symbols() const noexcept { return symbols_; }
	[[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
	[[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
	[[nodiscard]] VariableId operator[](std::size_t i) const { return symbols_[i]; }

	[[nodiscard]] std::size_t variable_count() const noexcept { return names_.size(); }
	[[nodiscard]] const std::string& name(VariableId v) const { return names_.at(v.index); }
	[[nodiscard]] std::span<const std::string> names() const noexcept { return names_; }
	/// Throws std::out_of_range for unknown names.
	[[nodiscard]] VariableId id(std::string_view name) const;

	/// Variables that occur, in first-occurrence order.
	[[nodiscard]] std::vector<VariableId> alphabet() const;
	[[nodiscard]] std::vector<bool> occurrence_mask() const;

	/// Same variable table, only the positions for which keep(variable) holds.
	template <typename Pred>
	[[nodiscard]] Pattern filter(Pred keep) const
	{
		Pattern out;
		out.names_ = names_;
		for (VariableId v : symbols_) {
			if (keep(v))
				out.symbols_.push_back(v);
		}
		return out;
	}

	/// Renames variables in first-occurrence order; two patterns are equal up to
	/// renaming iff their canonical keys are equal.
	[[nodiscard]] std::vector<std::uint32_t> canonical_key() const;

	friend bool operator==(const Pattern& a, const Pattern& b) { return a.symbols_ == b.symbols_; }

  private:
	std::vector<VariableId> symbols_;
	std::vector<std::string> names_;
};

std::string to_string(const Pattern& p);

} // namespace zimin
