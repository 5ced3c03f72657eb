#pragma once

#include "zimin/zimin_word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zimin {

using BigInt = boost::multiprecision::cpp_int;

/// compress(u) of a Zimin-word factor u: a strictly unimodal letter sequence
/// (strictly increasing up to its unique maximum, strictly decreasing after).
/// Every strictly unimodal sequence encodes exactly one factor.
class CompressedFactor {
  public:
	/// Throws std::invalid_argument unless seq is non-empty, positive and
	/// strictly unimodal.
	explicit CompressedFactor(std::vector<Letter> seq);
	CompressedFactor(std::initializer_list<Letter> seq);

	[[nodiscard]] std::span<const Letter> letters() const noexcept { return seq_; }
	[[nodiscard]] std::size_t size() const noexcept { return seq_.size(); }
	[[nodiscard]] Letter operator[](std::size_t i) const { return seq_[i]; }
	[[nodiscard]] Letter front() const { return seq_.front(); }
	[[nodiscard]] Letter back() const { return seq_.back(); }
	/// The unique maximum, i.e. the rank of the encoded factor.
	[[nodiscard]] Letter max_letter() const noexcept { return seq_[peak_]; }
	[[nodiscard]] std::size_t peak_index() const noexcept { return peak_; }

	friend bool operator==(const CompressedFactor& a, const CompressedFactor& b) { return a.seq_ == b.seq_; }
	friend auto operator<=>(const CompressedFactor& a, const CompressedFactor& b) { return a.seq_ <=> b.seq_; }

	static bool is_strictly_unimodal(std::span<const Letter> seq) noexcept;

  private:
	std::vector<Letter> seq_;
	std::size_t peak_ = 0;
};

/// Drops every letter that has a strictly larger letter on both sides.
/// Throws NotAFactorError if u is empty or not a Zimin factor.
CompressedFactor compress(const ZWord& u);

/// Length of decompress(c) without materializing it.
BigInt decompressed_length(const CompressedFactor& c);

/// Inverse of compress: between consecutive letters a, b inserts Z_{min(a,b)-1}.
/// Throws SizeLimitError when the explicit word would exceed kMaxExplicitLength.
ZWord decompress(const CompressedFactor& c);

/// Whether the concatenation of the encoded factors is again a Zimin factor.
/// Round-by-round junction check over letters 1, 2, ...; linear in the total
/// number of compressed letters.
bool check_concatenation(std::span<const CompressedFactor> parts);

/// compress() of the concatenated factor, computed from the parts through
/// nearest-larger-neighbour records. Throws NotAFactorError when
/// check_concatenation(parts) is false.
CompressedFactor compose(std::span<const CompressedFactor> parts);

/// A letter or a whole Zimin word Z_order inside an extended representation.
struct ExtendedToken {
	enum class Kind : unsigned char { Plain, ZiminBlock };

	Kind kind = Kind::Plain;
	Letter value = 0; // letter, or the order of the block

	static constexpr ExtendedToken plain(Letter a) { return {Kind::Plain, a}; }
	static constexpr ExtendedToken block(Letter order) { return {Kind::ZiminBlock, order}; }

	[[nodiscard]] constexpr bool is_block() const noexcept { return kind == Kind::ZiminBlock; }
	/// Both letter i and Z_i have priority i.
	[[nodiscard]] constexpr Letter priority() const noexcept { return value; }

	friend constexpr bool operator==(const ExtendedToken&, const ExtendedToken&) = default;
};

using ExtendedRepr = std::vector<ExtendedToken>;

/// Compressed letters with the gaps spelled as Zimin blocks; boundary letters 1
/// are written as Z1.
ExtendedRepr extend(const CompressedFactor& c);

/// Concatenation of extend() over several parts.
ExtendedRepr extend_all(std::span<const CompressedFactor> parts);

/// Reduces a token sequence by rewriting Z_{i-1} i Z_{i-1} -> Z_i (a bare 1
/// counting as Z_1) in the order given by its Cartesian tree (maximum priority
/// at the root, leftmost wins ties). Returns the fully reduced extended
/// representation, or throws NotAFactorError when the tokens do not spell a
/// Zimin factor.
ExtendedRepr reduce_extended(std::span<const ExtendedToken> tokens);

/// Explicit word spelled by the tokens. Throws SizeLimitError above the cap.
ZWord expand(std::span<const ExtendedToken> tokens);

/// "2,4,5,3,1"
std::string to_string(const CompressedFactor& c);
/// Throws ParseError.
CompressedFactor parse_compressed(std::string_view text);
/// "Z1 3 Z2 4"
std::string to_string(std::span<const ExtendedToken> tokens);
/// Throws ParseError.
ExtendedRepr parse_extended(std::string_view text);

} // namespace zimin
