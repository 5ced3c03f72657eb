#include "zimin/zimin_word.hpp"

#include "zimin/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace zimin {

ZWord::ZWord(std::vector<Letter> letters) : letters_(std::move(letters))
{
	if (std::find(letters_.begin(), letters_.end(), Letter{0}) != letters_.end())
		throw std::invalid_argument("letters must be positive");
}

ZWord::ZWord(std::initializer_list<Letter> letters) : ZWord(std::vector<Letter>(letters)) {}

Letter ZWord::max_letter() const noexcept
{
	return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

ZWord generate_zimin(unsigned k)
{
	if (k == 0)
		throw std::invalid_argument("Zimin words are indexed from 1");
	if (k > kMaxExplicitOrder)
		throw SizeLimitError("size limit: Z_" + std::to_string(k) + " exceeds the explicit cap Z_" +
		                     std::to_string(kMaxExplicitOrder));

	std::vector<Letter> z;
	z.reserve((std::size_t{1} << k) - 1);
	z.push_back(1);
	for (Letter i = 2; i <= k; ++i) {
		const std::size_t half = z.size();
		z.push_back(i);
		z.insert(z.end(), z.begin(), z.begin() + static_cast<std::ptrdiff_t>(half));
	}
	return ZWord(std::move(z));
}

ZWord apply_mu(const ZWord& w)
{
	std::vector<Letter> out;
	out.reserve(w.size() * 2);
	for (Letter a : w) {
		if (a == 1) {
			out.insert(out.end(), {1, 2, 1});
		} else {
			out.push_back(a + 1);
		}
	}
	return ZWord(std::move(out));
}

ZWord project(const ZWord& u, Letter j)
{
	std::vector<Letter> out;
	std::copy_if(u.begin(), u.end(), std::back_inserter(out), [j](Letter a) { return a >= j; });
	return ZWord(std::move(out));
}

bool is_interleaved(std::span<const Letter> u, Letter j)
{
	for (std::size_t t = 1; t < u.size(); ++t) {
		if ((u[t - 1] == j) == (u[t] == j))
			return false;
	}
	return true;
}

bool satisfies_interleaving(const ZWord& u)
{
	const Letter top = u.max_letter();
	for (Letter j = 1; j <= top; ++j) {
		if (!is_interleaved(project(u, j).letters(), j))
			return false;
	}
	return true;
}

// Two positions are adjacent in project(u, j) exactly when every letter between
// them is < j. Such "visible" pairs are enumerated with a monotonic stack; a pair
// (a, b) whose in-between maximum is m is adjacent at levels m+1 .. min(a, b),
// and violates interleaving at every level below min(a, b) (neither end equals
// j) or at level a == b (both ends equal j).
std::optional<Letter> first_violated_level(std::span<const Letter> u)
{
	Letter worst = std::numeric_limits<Letter>::max();
	std::vector<Letter> stack;
	stack.reserve(64);

	for (Letter b : u) {
		Letter between = 0;
		while (!stack.empty() && stack.back() < b) {
			const Letter a = stack.back();
			if (between + 1 < a)
				worst = std::min(worst, between + 1);
			between = a;
			stack.pop_back();
		}
		if (!stack.empty()) {
			const Letter a = stack.back();
			if (between + 1 < b)
				worst = std::min(worst, between + 1);
			else if (a == b)
				worst = std::min(worst, b);
		}
		stack.push_back(b);
	}

	if (worst == std::numeric_limits<Letter>::max())
		return std::nullopt;
	return worst;
}

std::string to_string(const ZWord& w)
{
	std::ostringstream os;
	for (std::size_t i = 0; i < w.size(); ++i) {
		if (i)
			os << ' ';
		os << w[i];
	}
	return os.str();
}

namespace {

Letter parse_letter(std::string_view token)
{
	Letter value = 0;
	const auto* first = token.data();
	const auto* last = token.data() + token.size();
	auto [ptr, ec] = std::from_chars(first, last, value);
	if (ec != std::errc{} || ptr != last || value == 0)
		throw ParseError("invalid letter '" + std::string(token) + "': expected a positive integer");
	return value;
}

} // namespace

ZWord parse_zword(std::string_view text)
{
	std::vector<std::string_view> tokens;
	std::size_t i = 0;
	while (i < text.size()) {
		while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
			++i;
		std::size_t j = i;
		while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
			++j;
		if (j > i)
			tokens.push_back(text.substr(i, j - i));
		i = j;
	}

	std::vector<Letter> letters;
	if (tokens.size() == 1 && tokens[0].size() > 1) {
		for (char c : tokens[0]) {
			if (c < '1' || c > '9')
				throw ParseError("invalid compact word '" + std::string(tokens[0]) +
				                 "': expected digits 1-9 or space separated letters");
			letters.push_back(static_cast<Letter>(c - '0'));
		}
	} else {
		for (auto token : tokens)
			letters.push_back(parse_letter(token));
	}
	return ZWord(std::move(letters));
}

} // namespace zimin
