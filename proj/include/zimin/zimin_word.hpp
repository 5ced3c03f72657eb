#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zimin {

/// Alphabet symbol of Z_k. Valid letters are >= 1; 0 is never stored in a word.
using Letter = std::uint32_t;

/// Largest k for which Z_k is ever materialized explicitly (|Z_25| = 2^25 - 1).
inline constexpr unsigned kMaxExplicitOrder = 25;
inline constexpr std::size_t kMaxExplicitLength = (std::size_t{1} << kMaxExplicitOrder) - 1;

/// An explicit finite word over positive letters. May be the empty word.
class ZWord {
  public:
	ZWord() = default;
	/// Throws std::invalid_argument if any letter is 0.
	explicit ZWord(std::vector<Letter> letters);
	ZWord(std::initializer_list<Letter> letters);

	[[nodiscard]] std::span<const Letter> letters() const noexcept { return letters_; }
	[[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
	[[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
	[[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }
	/// Largest letter, 0 for the empty word.
	[[nodiscard]] Letter max_letter() const noexcept;

	[[nodiscard]] auto begin() const noexcept { return letters_.begin(); }
	[[nodiscard]] auto end() const noexcept { return letters_.end(); }

	friend bool operator==(const ZWord&, const ZWord&) = default;
	friend auto operator<=>(const ZWord&, const ZWord&) = default;

  private:
	std::vector<Letter> letters_;
};

/// Z_1 = 1, Z_k = Z_{k-1} k Z_{k-1}. Throws SizeLimitError above kMaxExplicitOrder.
ZWord generate_zimin(unsigned k);

/// The Zimin morphism: 1 -> 1 2 1, i -> i+1 for i > 1.
ZWord apply_mu(const ZWord& w);

/// Deletes every letter smaller than j.
ZWord project(const ZWord& u, Letter j);

/// True iff every adjacent pair of u contains exactly one occurrence of j.
bool is_interleaved(std::span<const Letter> u, Letter j);

/// Condition (C) checked level by level: project(u, j) is j-interleaved for
/// every j up to max_letter(u). O(|u| * max_letter).
bool satisfies_interleaving(const ZWord& u);

/// Smallest level j at which u fails to be j-interleaved after projection,
/// or nullopt when u is a factor of some Zimin word. Single pass, O(|u|).
std::optional<Letter> first_violated_level(std::span<const Letter> u);

/// Whether u is a factor of Z_k for k >= max_letter(u). The empty word is a
/// factor by convention.
inline bool is_zimin_factor(const ZWord& u) { return !first_violated_level(u.letters()); }

/// Space separated base-10 letters, e.g. "1 2 1 3".
std::string to_string(const ZWord& w);

/// Parses space separated letters; a single whitespace-free token of digits is
/// read as one letter per digit ("1213" == "1 2 1 3"). Throws ParseError.
ZWord parse_zword(std::string_view text);

} // namespace zimin
