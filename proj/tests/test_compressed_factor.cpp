#include "zimin/compressed_factor.hpp"
#include "zimin/errors.hpp"

#include <doctest.h>

#include <random>

using namespace zimin;

namespace {

using CF = CompressedFactor;

// compress by its definition: keep letters lacking a strictly larger letter
// on at least one side. Quadratic, independent of the library's records pass.
std::vector<Letter> compress_by_definition(const ZWord& u)
{
	std::vector<Letter> out;
	for (std::size_t i = 0; i < u.size(); ++i) {
		bool larger_left = false, larger_right = false;
		for (std::size_t j = 0; j < i; ++j)
			larger_left |= u[j] > u[i];
		for (std::size_t j = i + 1; j < u.size(); ++j)
			larger_right |= u[j] > u[i];
		if (!(larger_left && larger_right))
			out.push_back(u[i]);
	}
	return out;
}

ZWord concat_explicit(std::span<const CF> parts)
{
	std::vector<Letter> w;
	for (const auto& p : parts) {
		const ZWord d = decompress(p);
		w.insert(w.end(), d.begin(), d.end());
	}
	return ZWord(std::move(w));
}

std::vector<ZWord> all_factors(unsigned k)
{
	const ZWord z = generate_zimin(k);
	std::vector<ZWord> out;
	std::vector<std::vector<Letter>> seen;
	for (std::size_t i = 0; i < z.size(); ++i) {
		for (std::size_t j = i + 1; j <= z.size(); ++j) {
			std::vector<Letter> w(z.begin() + i, z.begin() + j);
			seen.push_back(std::move(w));
		}
	}
	std::sort(seen.begin(), seen.end());
	seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
	for (auto& w : seen)
		out.emplace_back(std::move(w));
	return out;
}

std::string ext(const CF& c) { return to_string(extend(c)); }

} // namespace

TEST_CASE("CompressedFactor validation")
{
	CHECK_NOTHROW(CF{2, 4, 5, 3, 1});
	CHECK_NOTHROW(CF{3});
	CHECK_THROWS_AS(CF(std::vector<Letter>{}), std::invalid_argument);
	CHECK_THROWS_AS((CF{1, 2, 2}), std::invalid_argument);
	CHECK_THROWS_AS((CF{2, 1, 2}), std::invalid_argument);
	CHECK_THROWS_AS((CF{0, 1}), std::invalid_argument);
	CHECK(CF{2, 4, 5, 3, 1}.max_letter() == 5);
	CHECK(CF{2, 4, 5, 3, 1}.peak_index() == 2);
}

TEST_CASE("compress examples")
{
	CHECK(compress(parse_zword("2141213121512131")) == CF{2, 4, 5, 3, 1});
	CHECK(compress(generate_zimin(4)) == CF{1, 2, 3, 4, 3, 2, 1});
	CHECK(compress(ZWord{3}) == CF{3});
	CHECK(compress(parse_zword("213121")) == CF{2, 3, 2, 1});
	CHECK_THROWS_AS(compress(parse_zword("11")), NotAFactorError);
	CHECK_THROWS_AS(compress(ZWord{}), NotAFactorError);
}

TEST_CASE("decompress examples")
{
	CHECK(decompress(CF{1, 2, 3, 4, 3, 2, 1}) == generate_zimin(4));
	CHECK(decompress(CF{2, 4, 5, 3, 1}) == parse_zword("2141213121512131"));
	CHECK(decompress(CF{1, 3, 2}) == parse_zword("1312"));
	CHECK(decompress(CF{1, 40}) == ZWord{1, 40});
	CHECK_THROWS_AS(decompress(CF{30, 31}), SizeLimitError);
	CHECK(decompressed_length(CF{30, 31}) == (BigInt(1) << 29) - 1 + 2);
	CHECK(decompressed_length(CF{1, 2, 3, 4, 3, 2, 1}) == 15);
}

TEST_CASE("compress round trip, size bound and boundary letters on every factor of Z_8")
{
	for (const ZWord& u : all_factors(8)) {
		const CF c = compress(u);
		REQUIRE(std::vector<Letter>(c.letters().begin(), c.letters().end()) == compress_by_definition(u));
		REQUIRE(decompress(c) == u);
		REQUIRE(decompressed_length(c) == u.size());
		REQUIRE(c.size() <= 2 * 8 - 1);
		REQUIRE(c.front() == u[0]);
		REQUIRE(c.back() == u[u.size() - 1]);
	}
}

TEST_CASE("check_concatenation and compose examples")
{
	const std::vector<CF> fig{{1, 3, 2}, {1, 4, 3, 1}, {2, 5, 3, 2}, {1, 4, 3, 1}};
	CHECK(check_concatenation(fig));
	CHECK(compose(fig) == CF{1, 3, 4, 5, 4, 3, 1});
	CHECK_FALSE(check_concatenation(std::vector<CF>{{1}, {1}}));
	CHECK_FALSE(check_concatenation(std::vector<CF>{{1, 2, 1}, {2, 1}}));
	CHECK(compose(std::vector<CF>{{2, 4, 5, 3, 1}}) == CF{2, 4, 5, 3, 1});
	CHECK(compose(std::vector<CF>{{1}, {2, 1}}) == CF{1, 2, 1});
	CHECK_THROWS_AS(compose(std::vector<CF>{{1}, {1}}), NotAFactorError);
	CHECK(check_concatenation(std::vector<CF>{{3}}));
}

TEST_CASE("concatenation agrees with the explicit factor test on all tuples of up to 3 factors of Z_4")
{
	std::vector<CF> factors;
	for (const ZWord& u : all_factors(4))
		factors.push_back(compress(u));

	std::size_t accepted = 0;
	auto check = [&](const std::vector<CF>& parts) {
		const ZWord w = concat_explicit(parts);
		const bool expected = is_zimin_factor(w);
		REQUIRE(check_concatenation(parts) == expected);
		const ExtendedRepr tokens = extend_all(parts);
		REQUIRE(expand(tokens) == w);
		if (expected) {
			++accepted;
			const CF composed = compose(parts);
			REQUIRE(composed == compress(w));
			const ExtendedRepr reduced = reduce_extended(tokens);
			REQUIRE(expand(reduced) == w);
			REQUIRE(reduced == reduce_extended(extend(composed)));
		} else {
			REQUIRE_THROWS_AS(reduce_extended(tokens), NotAFactorError);
		}
	};
	for (const CF& a : factors) {
		check({a});
		for (const CF& b : factors) {
			check({a, b});
			for (const CF& c : factors)
				check({a, b, c});
		}
	}
	CHECK(accepted > 0);
}

TEST_CASE("concatenation agrees with the explicit factor test on random tuples from Z_6")
{
	const ZWord z = generate_zimin(6);
	std::mt19937_64 rng(0xc0ffee);
	std::size_t accepted = 0;
	for (int trial = 0; trial < 20000; ++trial) {
		const std::size_t count = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
		std::vector<CF> parts;
		// Half the trials cut one factor into consecutive pieces, so that many pass.
		if (trial % 2 == 0) {
			std::size_t at = std::uniform_int_distribution<std::size_t>(0, z.size() - count)(rng);
			for (std::size_t i = 0; i < count && at < z.size(); ++i) {
				const std::size_t len = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(9, z.size() - at))(rng);
				parts.push_back(compress(ZWord(std::vector<Letter>(z.begin() + at, z.begin() + at + len))));
				at += len;
			}
		} else {
			for (std::size_t i = 0; i < count; ++i) {
				const std::size_t from = std::uniform_int_distribution<std::size_t>(0, z.size() - 1)(rng);
				const std::size_t len = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(9, z.size() - from))(rng);
				parts.push_back(compress(ZWord(std::vector<Letter>(z.begin() + from, z.begin() + from + len))));
			}
		}
		const ZWord w = concat_explicit(parts);
		const bool expected = is_zimin_factor(w);
		REQUIRE(check_concatenation(parts) == expected);
		if (expected) {
			++accepted;
			REQUIRE(compose(parts) == compress(w));
			REQUIRE(expand(reduce_extended(extend_all(parts))) == w);
		} else {
			REQUIRE_THROWS_AS(reduce_extended(extend_all(parts)), NotAFactorError);
		}
	}
	CHECK(accepted > 5000);
}

TEST_CASE("extend examples")
{
	CHECK(ext(CF{1, 3, 2}) == "Z1 3 Z1 2");
	CHECK(ext(CF{1, 4, 3, 1}) == "Z1 4 Z2 3 Z1");
	CHECK(ext(CF{2, 5, 3, 2}) == "2 Z1 5 Z2 3 Z1 2");
	CHECK(ext(CF{1}) == "Z1");
	CHECK(ext(CF{1, 2, 1}) == "Z1 2 Z1");
	for (const CF& c : {CF{1, 3, 2}, CF{2, 4, 5, 3, 1}, CF{1, 2, 3, 4, 3, 2, 1}})
		CHECK(expand(extend(c)) == decompress(c));
}

TEST_CASE("reduce_extended examples")
{
	const std::vector<CF> fig{{1, 3, 2}, {1, 4, 3, 1}, {2, 5, 3, 2}, {1, 4, 3, 1}};
	CHECK(to_string(reduce_extended(extend_all(fig))) == "Z1 3 Z2 4 Z3 5 Z3 4 Z2 3 Z1");
	CHECK(to_string(reduce_extended(parse_extended("Z2"))) == "Z2");
	CHECK(to_string(reduce_extended(parse_extended("Z1 2 Z1"))) == "Z2");
	CHECK(to_string(reduce_extended(parse_extended("1 2 1 3 Z2"))) == "Z3");
	CHECK(to_string(reduce_extended(parse_extended("Z0 2 1"))) == "2 Z1");
	CHECK_THROWS_AS(reduce_extended(parse_extended("Z1 2 Z1 2")), NotAFactorError);
	CHECK_THROWS_AS(reduce_extended(parse_extended("2 2")), NotAFactorError);
	CHECK_THROWS_AS(reduce_extended(parse_extended("Z2 1")), NotAFactorError);
}

TEST_CASE("text forms")
{
	CHECK(to_string(CF{2, 4, 5, 3, 1}) == "2,4,5,3,1");
	CHECK(parse_compressed("2,4,5,3,1") == CF{2, 4, 5, 3, 1});
	CHECK(parse_compressed(" 1, 2 ,1 ") == CF{1, 2, 1});
	CHECK_THROWS_AS(parse_compressed("1,1"), ParseError);
	CHECK_THROWS_AS(parse_compressed("1,,2"), ParseError);
	CHECK_THROWS_AS(parse_compressed(""), ParseError);
	CHECK(parse_extended("Z1 3 Z2") ==
	      ExtendedRepr{ExtendedToken::block(1), ExtendedToken::plain(3), ExtendedToken::block(2)});
	CHECK_THROWS_AS(parse_extended("Zx"), ParseError);
}
