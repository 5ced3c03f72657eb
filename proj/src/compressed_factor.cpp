#include "zimin/compressed_factor.hpp"

#include "zimin/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace zimin {

bool CompressedFactor::is_strictly_unimodal(std::span<const Letter> seq) noexcept
{
	if (seq.empty())
		return false;
	std::size_t t = 1;
	while (t < seq.size() && seq[t - 1] < seq[t])
		++t;
	while (t < seq.size() && seq[t - 1] > seq[t])
		++t;
	return t == seq.size() && std::find(seq.begin(), seq.end(), Letter{0}) == seq.end();
}

CompressedFactor::CompressedFactor(std::vector<Letter> seq) : seq_(std::move(seq))
{
	if (!is_strictly_unimodal(seq_))
		throw std::invalid_argument("compressed factor must be a non-empty strictly unimodal sequence of positive letters");
	peak_ = static_cast<std::size_t>(std::max_element(seq_.begin(), seq_.end()) - seq_.begin());
}

CompressedFactor::CompressedFactor(std::initializer_list<Letter> seq)
    : CompressedFactor(std::vector<Letter>(seq))
{}

namespace {

// Left-to-right records up to the global maximum followed by right-to-left
// records after it. For a valid factor (or a valid concatenation of compressed
// factors) the records are strict, so the result is strictly unimodal.
std::vector<Letter> records(std::span<const Letter> seq)
{
	std::vector<Letter> out;
	if (seq.empty())
		return out;
	const auto peak = static_cast<std::size_t>(std::max_element(seq.begin(), seq.end()) - seq.begin());

	Letter best = 0;
	for (std::size_t t = 0; t <= peak; ++t) {
		if (seq[t] > best) {
			out.push_back(seq[t]);
			best = seq[t];
		}
	}
	const std::size_t tail_start = out.size();
	best = 0;
	for (std::size_t t = seq.size() - 1; t > peak; --t) {
		if (seq[t] > best) {
			out.push_back(seq[t]);
			best = seq[t];
		}
	}
	std::reverse(out.begin() + static_cast<std::ptrdiff_t>(tail_start), out.end());
	return out;
}

BigInt zimin_length(Letter order)
{
	BigInt one = 1;
	return (one << order) - 1;
}

} // namespace

CompressedFactor compress(const ZWord& u)
{
	if (u.empty())
		throw NotAFactorError("not a factor: the empty word has no compressed form");
	if (!is_zimin_factor(u))
		throw NotAFactorError("not a factor: " + to_string(u));
	return CompressedFactor(records(u.letters()));
}

BigInt decompressed_length(const CompressedFactor& c)
{
	BigInt total = c.size();
	for (std::size_t p = 1; p < c.size(); ++p)
		total += zimin_length(std::min(c[p - 1], c[p]) - 1);
	return total;
}

ZWord decompress(const CompressedFactor& c)
{
	if (decompressed_length(c) > kMaxExplicitLength)
		throw SizeLimitError("size limit: decompressing " + to_string(c) + " exceeds the explicit cap");

	Letter widest = 0;
	for (std::size_t p = 1; p < c.size(); ++p)
		widest = std::max(widest, std::min(c[p - 1], c[p]) - 1);
	// Every block Z_j with j <= widest is a prefix of Z_widest.
	const ZWord blocks = widest ? generate_zimin(widest) : ZWord{};

	std::vector<Letter> out;
	out.push_back(c[0]);
	for (std::size_t p = 1; p < c.size(); ++p) {
		const Letter order = std::min(c[p - 1], c[p]) - 1;
		const std::size_t len = (std::size_t{1} << order) - 1;
		out.insert(out.end(), blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(len));
		out.push_back(c[p]);
	}
	return ZWord(std::move(out));
}

bool check_concatenation(std::span<const CompressedFactor> parts)
{
	struct Range {
		const CompressedFactor* part;
		std::size_t lo, hi;
	};
	std::vector<Range> live;
	live.reserve(parts.size());
	for (const auto& p : parts)
		live.push_back({&p, 0, p.size()});

	std::vector<Range> next;
	next.reserve(live.size());
	for (Letter round = 1; live.size() > 1; ++round) {
		for (std::size_t r = 1; r < live.size(); ++r) {
			const Range& left = live[r - 1];
			const Range& right = live[r];
			const bool left_ends = (*left.part)[left.hi - 1] == round;
			const bool right_starts = (*right.part)[right.lo] == round;
			if (left_ends == right_starts)
				return false;
		}
		next.clear();
		for (Range r : live) {
			if ((*r.part)[r.lo] == round)
				++r.lo;
			if (r.lo < r.hi && (*r.part)[r.hi - 1] == round)
				--r.hi;
			if (r.lo < r.hi)
				next.push_back(r);
		}
		live.swap(next);
	}
	return true;
}

CompressedFactor compose(std::span<const CompressedFactor> parts)
{
	if (parts.empty() || !check_concatenation(parts))
		throw NotAFactorError("not a factor: the parts do not concatenate to a Zimin factor");
	std::vector<Letter> flat;
	for (const auto& p : parts)
		flat.insert(flat.end(), p.letters().begin(), p.letters().end());
	return CompressedFactor(records(flat));
}

ExtendedRepr extend(const CompressedFactor& c)
{
	auto boundary = [&](std::size_t p) {
		return c[p] == 1 ? ExtendedToken::block(1) : ExtendedToken::plain(c[p]);
	};

	ExtendedRepr out;
	out.push_back(boundary(0));
	for (std::size_t p = 1; p < c.size(); ++p) {
		const Letter order = std::min(c[p - 1], c[p]) - 1;
		if (order >= 1)
			out.push_back(ExtendedToken::block(order));
		out.push_back(p + 1 == c.size() ? boundary(p) : ExtendedToken::plain(c[p]));
	}
	return out;
}

ExtendedRepr extend_all(std::span<const CompressedFactor> parts)
{
	ExtendedRepr out;
	for (const auto& p : parts) {
		auto e = extend(p);
		out.insert(out.end(), e.begin(), e.end());
	}
	return out;
}

namespace {

// Per-subtree summary: the spelled word has maximum `top` and is a prefix
// and/or suffix of Z_top. The empty word is Z_0.
struct Summary {
	Letter top = 0;
	bool prefix = true;
	bool suffix = true;

	[[nodiscard]] bool is_zimin(Letter order) const { return top == order && prefix && suffix; }
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

} // namespace

ExtendedRepr reduce_extended(std::span<const ExtendedToken> input)
{
	std::vector<ExtendedToken> tokens;
	tokens.reserve(input.size());
	for (auto t : input) {
		if (t.priority() == 0) {
			if (!t.is_block())
				throw std::invalid_argument("letter 0 in extended representation");
			continue; // Z_0 is the empty word
		}
		tokens.push_back(t);
	}
	if (tokens.empty())
		throw NotAFactorError("not a factor: empty token sequence");

	const std::size_t n = tokens.size();
	std::vector<std::size_t> left(n, kNone), right(n, kNone);
	std::vector<std::size_t> stack;
	for (std::size_t i = 0; i < n; ++i) {
		std::size_t last = kNone;
		while (!stack.empty() && tokens[stack.back()].priority() < tokens[i].priority()) {
			last = stack.back();
			stack.pop_back();
		}
		left[i] = last;
		if (!stack.empty())
			right[stack.back()] = i;
		stack.push_back(i);
	}
	const std::size_t root = stack.front();

	// Pre-order; reversed it visits children before parents.
	std::vector<std::size_t> order;
	order.reserve(n);
	stack.assign(1, root);
	while (!stack.empty()) {
		const std::size_t v = stack.back();
		stack.pop_back();
		order.push_back(v);
		if (left[v] != kNone)
			stack.push_back(left[v]);
		if (right[v] != kNone)
			stack.push_back(right[v]);
	}

	std::vector<Summary> summary(n);
	std::vector<char> collapsed(n, 0);
	for (auto it = order.rbegin(); it != order.rend(); ++it) {
		const std::size_t v = *it;
		const Letter p = tokens[v].priority();
		const Summary l = left[v] == kNone ? Summary{} : summary[left[v]];
		const Summary r = right[v] == kNone ? Summary{} : summary[right[v]];

		if (tokens[v].is_block()) {
			if (l.top != 0 || r.top != 0)
				throw NotAFactorError("not a factor: Z" + std::to_string(p) + " cannot be extended by smaller letters");
			summary[v] = {p, true, true};
			collapsed[v] = 1;
			continue;
		}
		if (l.top >= p || r.top >= p)
			throw NotAFactorError("not a factor: letter " + std::to_string(p) +
			                      " repeats without a larger letter in between");
		if (!l.suffix || !r.prefix)
			throw NotAFactorError("not a factor: letter " + std::to_string(p) + " is not interleaved with Z" +
			                      std::to_string(p - 1));
		summary[v] = {p, l.is_zimin(p - 1), r.is_zimin(p - 1)};
		collapsed[v] = summary[v].prefix && summary[v].suffix;
	}

	ExtendedRepr out;
	std::size_t cur = root;
	stack.clear();
	while (cur != kNone || !stack.empty()) {
		while (cur != kNone && !collapsed[cur]) {
			stack.push_back(cur);
			cur = left[cur];
		}
		if (cur != kNone) {
			out.push_back(ExtendedToken::block(tokens[cur].priority()));
			cur = kNone;
			continue;
		}
		const std::size_t v = stack.back();
		stack.pop_back();
		out.push_back(ExtendedToken::plain(tokens[v].priority()));
		cur = right[v];
	}
	return out;
}

ZWord expand(std::span<const ExtendedToken> tokens)
{
	BigInt total = 0;
	Letter top = 0;
	for (auto t : tokens) {
		total += t.is_block() ? zimin_length(t.value) : BigInt(1);
		if (t.is_block())
			top = std::max(top, t.value);
	}
	if (total > kMaxExplicitLength)
		throw SizeLimitError("size limit: expanded extended representation exceeds the explicit cap");

	const ZWord blocks = top ? generate_zimin(top) : ZWord{};
	std::vector<Letter> out;
	out.reserve(static_cast<std::size_t>(total));
	for (auto t : tokens) {
		if (t.is_block()) {
			const std::size_t len = (std::size_t{1} << t.value) - 1;
			out.insert(out.end(), blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(len));
		} else {
			out.push_back(t.value);
		}
	}
	return ZWord(std::move(out));
}

std::string to_string(const CompressedFactor& c)
{
	std::ostringstream os;
	for (std::size_t i = 0; i < c.size(); ++i) {
		if (i)
			os << ',';
		os << c[i];
	}
	return os.str();
}

namespace {

Letter parse_number(std::string_view token, std::string_view what)
{
	Letter value = 0;
	auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
	if (ec != std::errc{} || ptr != token.data() + token.size())
		throw ParseError("invalid " + std::string(what) + " '" + std::string(token) + "'");
	return value;
}

std::string_view trim(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	return s;
}

} // namespace

CompressedFactor parse_compressed(std::string_view text)
{
	std::vector<Letter> seq;
	std::size_t start = 0;
	while (start <= text.size()) {
		std::size_t comma = text.find(',', start);
		if (comma == std::string_view::npos)
			comma = text.size();
		const auto token = trim(text.substr(start, comma - start));
		const Letter a = parse_number(token, "compressed letter");
		if (a == 0)
			throw ParseError("invalid compressed letter '0'");
		seq.push_back(a);
		start = comma + 1;
	}
	if (!CompressedFactor::is_strictly_unimodal(seq))
		throw ParseError("'" + std::string(text) + "' is not strictly unimodal");
	return CompressedFactor(std::move(seq));
}

std::string to_string(std::span<const ExtendedToken> tokens)
{
	std::ostringstream os;
	for (std::size_t i = 0; i < tokens.size(); ++i) {
		if (i)
			os << ' ';
		if (tokens[i].is_block())
			os << 'Z';
		os << tokens[i].value;
	}
	return os.str();
}

ExtendedRepr parse_extended(std::string_view text)
{
	ExtendedRepr out;
	std::istringstream is{std::string(text)};
	std::string token;
	while (is >> token) {
		if (token[0] == 'Z' || token[0] == 'z') {
			out.push_back(ExtendedToken::block(parse_number(std::string_view(token).substr(1), "Zimin block")));
		} else {
			const Letter a = parse_number(token, "letter");
			if (a == 0)
				throw ParseError("invalid letter '0'");
			out.push_back(ExtendedToken::plain(a));
		}
	}
	return out;
}

} // namespace zimin
