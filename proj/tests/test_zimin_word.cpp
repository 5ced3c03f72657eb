#include "zimin/errors.hpp"
#include "zimin/zimin_word.hpp"

#include <doctest.h>

#include <random>

using namespace zimin;

namespace {

// Independent substring check on explicit words.
bool occurs_in(const ZWord& u, const ZWord& z)
{
	return std::search(z.begin(), z.end(), u.begin(), u.end()) != z.end();
}

} // namespace

TEST_CASE("generate_zimin small orders")
{
	CHECK(to_string(generate_zimin(1)) == "1");
	CHECK(generate_zimin(2) == ZWord{1, 2, 1});
	CHECK(generate_zimin(3) == parse_zword("1213121"));
	CHECK(generate_zimin(4) == parse_zword("121312141213121"));
}

TEST_CASE("generate_zimin length, boundaries and unique maximum")
{
	for (unsigned k = 1; k <= 16; ++k) {
		const ZWord z = generate_zimin(k);
		REQUIRE(z.size() == (std::size_t{1} << k) - 1);
		CHECK(z[0] == 1);
		CHECK(z[z.size() - 1] == 1);
		CHECK(std::count(z.begin(), z.end(), k) == 1);
		CHECK(z.max_letter() == k);
	}
}

TEST_CASE("generate_zimin rejects order 0 and orders above the cap")
{
	CHECK_THROWS_AS(generate_zimin(0), std::invalid_argument);
	CHECK_THROWS_AS(generate_zimin(kMaxExplicitOrder + 1), SizeLimitError);
}

TEST_CASE("apply_mu")
{
	CHECK(apply_mu(ZWord{1}) == ZWord{1, 2, 1});
	CHECK(apply_mu(parse_zword("121")) == parse_zword("1213121"));
	CHECK(apply_mu(parse_zword("13")) == parse_zword("1214"));
	for (unsigned k = 2; k <= 14; ++k)
		CHECK(apply_mu(generate_zimin(k - 1)) == generate_zimin(k));
}

TEST_CASE("project")
{
	CHECK(project(parse_zword("1213121"), 2) == parse_zword("232"));
	CHECK(project(parse_zword("1213121"), 4).empty());
	CHECK(project(generate_zimin(4), 3) == parse_zword("343"));

	// Removing the 1s from Z_k and decrementing gives Z_{k-1}.
	for (unsigned k = 2; k <= 12; ++k) {
		const ZWord p = project(generate_zimin(k), 2);
		std::vector<Letter> dec;
		for (Letter a : p)
			dec.push_back(a - 1);
		CHECK(ZWord(dec) == generate_zimin(k - 1));
	}
}

TEST_CASE("is_interleaved")
{
	CHECK(is_interleaved(std::vector<Letter>{1, 2, 1, 3, 1}, 1));
	CHECK_FALSE(is_interleaved(std::vector<Letter>{1, 1}, 1));
	CHECK_FALSE(is_interleaved(std::vector<Letter>{2, 3}, 1));
	CHECK(is_interleaved(std::vector<Letter>{}, 1));
	CHECK(is_interleaved(std::vector<Letter>{5}, 1));
}

TEST_CASE("is_zimin_factor examples")
{
	CHECK(is_zimin_factor(parse_zword("1213121")));
	CHECK_FALSE(is_zimin_factor(parse_zword("11")));
	CHECK(is_zimin_factor(parse_zword("2141213121512131")));
	CHECK_FALSE(is_zimin_factor(parse_zword("1221")));
	CHECK(is_zimin_factor(ZWord{}));
	CHECK(is_zimin_factor(ZWord{7}));
	CHECK(first_violated_level(std::vector<Letter>{1, 1}) == 1u);
	CHECK(first_violated_level(std::vector<Letter>{1, 2, 1, 2, 1}) == 2u);
	CHECK(first_violated_level(std::vector<Letter>{2, 3}) == 1u);
	CHECK(first_violated_level(std::vector<Letter>{3, 1, 3}) == 2u);
}

TEST_CASE("single-pass factor test matches the level-by-level test and substring search")
{
	// Every substring of Z_10 is a factor.
	const ZWord z = generate_zimin(10);
	for (std::size_t i = 0; i < z.size(); i += 3) {
		for (std::size_t j = i + 1; j <= std::min(z.size(), i + 80); ++j) {
			const ZWord u(std::vector<Letter>(z.begin() + i, z.begin() + j));
			REQUIRE(is_zimin_factor(u));
			REQUIRE(satisfies_interleaving(u));
		}
	}

	// Random words over small alphabets: three independent answers agree.
	std::mt19937_64 rng(0x5eed01);
	const ZWord z8 = generate_zimin(8);
	for (int trial = 0; trial < 20000; ++trial) {
		const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
		const Letter top = std::uniform_int_distribution<Letter>(1, 5)(rng);
		std::vector<Letter> w(len);
		for (auto& a : w)
			a = std::uniform_int_distribution<Letter>(1, top)(rng);
		const ZWord u(w);
		const bool naive = occurs_in(u, z8);
		REQUIRE(is_zimin_factor(u) == naive);
		REQUIRE(satisfies_interleaving(u) == naive);
	}
}

TEST_CASE("ZWord text forms")
{
	CHECK(parse_zword("1 2 1 3") == parse_zword("1213"));
	CHECK(parse_zword("12") == ZWord{1, 2});
	CHECK(parse_zword("12 3") == ZWord{12, 3});
	CHECK(to_string(ZWord{1, 12, 1}) == "1 12 1");
	CHECK(parse_zword("   ").empty());
	CHECK_THROWS_AS(parse_zword("1 x"), ParseError);
	CHECK_THROWS_AS(parse_zword("1 0 1"), ParseError);
	CHECK_THROWS_AS(ZWord({1, 0}), std::invalid_argument);
}
