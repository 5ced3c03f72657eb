#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
	int code = -1;
	std::string out;
};

Run cli(const std::string& args)
{
	const std::string cmd = std::string("'") + ZIMIN_CLI_PATH + "' " + args + " 2>/dev/null";
	Run r;
	FILE* pipe = popen(cmd.c_str(), "r");
	REQUIRE(pipe != nullptr);
	std::array<char, 4096> buf{};
	std::size_t got = 0;
	while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
		r.out.append(buf.data(), got);
	const int status = pclose(pipe);
	r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return r;
}

std::string csv(const nlohmann::json& letters)
{
	std::string out;
	for (const auto& l : letters)
		out += (out.empty() ? "" : ",") + std::to_string(l.get<unsigned>());
	return out;
}

const char* const kExample = "\"a g b d e a g b z e a\" --ranks 1,3,2,4,5,1,3,2,6,5,1";

} // namespace

TEST_CASE("word commands")
{
	CHECK(cli("gen 3").out == "1 2 1 3 1 2 1\n");
	CHECK(cli("compress 1 2 1 3 1 2 1 4 1 2 1 3 1 2 1").out == "1,2,3,4,3,2,1\n");
	CHECK(cli("compress 121312141213121").out == "1,2,3,4,3,2,1\n");
	CHECK(cli("decompress 1,2,3,2,1").out == "1 2 1 3 1 2 1\n");

	const auto ok = cli("factor 2 1 3");
	CHECK(ok.code == 0);
	CHECK(ok.out == "FACTOR\n");
	const auto bad = cli("factor 1 1");
	CHECK(bad.code == 1);
	CHECK(bad.out == "NOT-FACTOR level 1\n");
	CHECK(cli("compress 1 2 2").code == 1);
}

TEST_CASE("concat")
{
	CHECK(cli("concat 1,2 1,3").out == "OK 1,2,3\n");
	const auto bad = cli("concat 1 1");
	CHECK(bad.code == 1);
	CHECK(bad.out == "NOT-FACTOR\n");
}

TEST_CASE("match, count, shortest, enumerate")
{
	const auto m = cli(std::string("match ") + kExample);
	CHECK(m.code == 0);
	CHECK(m.out.find("l = 7\n") != std::string::npos);
	CHECK(m.out.find("z = 1,4,6,4\n") != std::string::npos);

	const auto named = cli("match \"a b a\" --ranks a=1,b=2");
	CHECK(named.code == 0);
	CHECK(named.out.find("instance = 1,2,1\n") != std::string::npos);

	const auto c = cli(std::string("count ") + kExample);
	CHECK(c.out == "count = 128\nl = 7\n");

	const auto s = cli("shortest \"a b\" --ranks 1,2");
	CHECK(s.code == 0);
	CHECK(s.out.find("length = 2\n") != std::string::npos);

	const auto e = cli("enumerate \"a b\" --ranks 1,2 --limit 10");
	CHECK(e.code == 0);
	CHECK(e.out.find("count = 2\n") != std::string::npos);

	const auto none = cli("match \"a a\" --ranks 1,1");
	CHECK(none.code == 1);
	CHECK(none.out == "NO_MATCH\n");
}

TEST_CASE("exit codes and silent stdout on errors")
{
	for (const char* args : {"match \"a b\" --ranks 1", "match \"a b\" --ranks 1,x", "match \"a b\" --ranks a=1,q=2",
	                         "decompress 1,,2", "frobnicate", "avoid \"a b\" --method guess"}) {
		CAPTURE(args);
		const auto r = cli(args);
		CHECK(r.code == 2);
		CHECK(r.out.empty());
	}
	const auto limit = cli(std::string("enumerate ") + kExample + " --limit 10");
	CHECK(limit.code == 3);
	CHECK(limit.out.empty());
	CHECK(cli("match \"a b\" --ranks 1,26 --json").code == 0);
	CHECK(cli("avoid \"a b c d e f g h i\"").code == 3);
}

TEST_CASE("avoid")
{
	const auto a = cli("avoid \"a a\"");
	CHECK(a.code == 1);
	CHECK(a.out == "AVOIDABLE\n");
	const auto u = cli("avoid \"a b a c a b a\"");
	CHECK(u.code == 0);
	CHECK(u.out.rfind("UNAVOIDABLE\n", 0) == 0);

	const auto j = nlohmann::json::parse(cli("--json avoid \"a b a\" --method reduction").out);
	CHECK(j["format_version"] == 1);
	CHECK(j["verdict"] == "UNAVOIDABLE");
	CHECK(j["trace"].size() == 2);
	CHECK_FALSE(j.contains("ranking"));
}

TEST_CASE("match --json output feeds concat")
{
	const auto r = cli(std::string("match ") + kExample + " --json");
	REQUIRE(r.code == 0);
	const auto j = nlohmann::json::parse(r.out);
	CHECK(j["format_version"] == 1);
	CHECK(j["l"] == 7);
	CHECK(j["length"] == "49");

	std::string args = "concat";
	for (const char* name : {"a", "g", "b", "d", "e", "a", "g", "b", "z", "e", "a"})
		args += " " + csv(j["valuation"][name]);
	const auto c = cli(args);
	CHECK(c.code == 0);
	CHECK(c.out == "OK " + csv(j["instance"]) + "\n");
}

TEST_CASE("verify")
{
	const auto r = cli("verify --suite small");
	CHECK(r.code == 0);
	CHECK(r.out.find("FAIL") == std::string::npos);
	const auto b = cli("verify --bench --sizes 1000");
	CHECK(b.code == 0);
	CHECK(b.out.rfind("n\tK\tseconds", 0) == 0);
}
