// Command-line front end: zimin_cli [--json] <command> ...
//
// Exit codes: 0 success / match / factor / unavoidable, 1 negative answer
// (NO_MATCH, NOT-FACTOR, AVOIDABLE, INCONCLUSIVE, failed verify suite),
// 2 malformed input, 3 size limit.

#include "zimin/avoidability.hpp"
#include "zimin/compressed_factor.hpp"
#include "zimin/errors.hpp"
#include "zimin/oracle.hpp"
#include "zimin/ranked_matching.hpp"
#include "zimin/workloads.hpp"
#include "zimin/zimin_word.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace zimin;
using json = nlohmann::ordered_json;

namespace {

constexpr int kFormatVersion = 1;

enum Exit : int { kOk = 0, kNegative = 1, kParse = 2, kSize = 3 };

std::string join(const std::vector<std::string>& parts, char sep = ' ')
{
	std::string out;
	for (const auto& s : parts) {
		if (!out.empty())
			out += sep;
		out += s;
	}
	return out;
}

std::vector<std::string> split(const std::string& s, const std::string& seps)
{
	std::vector<std::string> out;
	std::string cur;
	for (char c : s) {
		if (seps.find(c) != std::string::npos) {
			if (!cur.empty())
				out.push_back(std::move(cur));
			cur.clear();
		} else {
			cur += c;
		}
	}
	if (!cur.empty())
		out.push_back(std::move(cur));
	return out;
}

Rank parse_rank(const std::string& s)
{
	try {
		std::size_t used = 0;
		const unsigned long v = std::stoul(s, &used);
		if (used == s.size() && v > 0 && v <= 0xffffffffUL)
			return static_cast<Rank>(v);
	} catch (const std::exception&) {
	}
	throw ParseError("invalid rank '" + s + "'");
}

/// "1,2,1" (one per position) or "a=1,b=2" (one per variable).
RankedPattern parse_ranked(const std::vector<std::string>& pattern_words, const std::vector<std::string>& rank_words)
{
	Pattern p = Pattern::parse(join(pattern_words));
	const auto tokens = split(join(rank_words, ','), ", \t");
	if (tokens.empty())
		throw ParseError("--ranks is required");
	const bool named = tokens.front().find('=') != std::string::npos;
	try {
		if (!named) {
			std::vector<Rank> ranks;
			for (const auto& t : tokens)
				ranks.push_back(parse_rank(t));
			return RankedPattern::positional(std::move(p), ranks);
		}
		std::vector<Rank> table(p.variable_count(), 0);
		for (const auto& t : tokens) {
			const auto eq = t.find('=');
			if (eq == std::string::npos)
				throw ParseError("mixed rank forms: '" + t + "'");
			const std::string name = t.substr(0, eq);
			VariableId v;
			try {
				v = p.id(name);
			} catch (const std::out_of_range&) {
				throw ParseError("rank given for unknown variable '" + name + "'");
			}
			const Rank r = parse_rank(t.substr(eq + 1));
			if (table[v.index] != 0 && table[v.index] != r)
				throw ParseError("conflicting ranks for variable '" + name + "'");
			table[v.index] = r;
		}
		return RankedPattern(std::move(p), std::move(table));
	} catch (const std::invalid_argument& e) {
		throw ParseError(e.what());
	}
}

json letters_json(std::span<const Letter> letters) { return json(std::vector<Letter>(letters.begin(), letters.end())); }

json valuation_json(const Pattern& p, const Valuation& v)
{
	json out = json::object();
	for (VariableId x : p.alphabet())
		out[p.name(x)] = letters_json(v[x].letters());
	return out;
}

void print_valuation(std::ostream& os, const Pattern& p, const Valuation& v)
{
	for (VariableId x : p.alphabet())
		os << p.name(x) << " = " << to_string(v[x]) << '\n';
}

json ranking_json(const RankedPattern& rp)
{
	json out = json::object();
	for (VariableId x : rp.pattern().alphabet())
		out[rp.pattern().name(x)] = rp.rank(x);
	return out;
}

json trace_json(const Pattern& p, const ReductionTrace& trace)
{
	auto names = [&](const std::vector<VariableId>& vs) {
		json a = json::array();
		for (VariableId v : vs)
			a.push_back(p.name(v));
		return a;
	};
	json out = json::array();
	for (const auto& step : trace.steps) {
		out.push_back({{"pattern", to_string(step.before)},
		               {"deleted", names(step.witness.free)},
		               {"A", names(step.witness.a)},
		               {"B", names(step.witness.b)}});
	}
	return out;
}

std::string bits_of(const BigInt& v) { return v == 0 ? "0" : std::to_string(msb(v) + 1); }

struct Result {
	int code = kOk;
	json doc = json::object();
	std::ostringstream text;
};

// ---------------------------------------------------------------- verify

struct SuiteRow {
	std::string name;
	std::size_t cases = 0;
	std::size_t failures = 0;
	double seconds = 0;
};

template <typename Body>
SuiteRow run_suite(const std::string& name, Body body)
{
	SuiteRow row{name};
	const auto t0 = std::chrono::steady_clock::now();
	body(row);
	row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	return row;
}

std::vector<SuiteRow> small_suites()
{
	std::vector<SuiteRow> rows;
	rows.push_back(run_suite("factor-test", [](SuiteRow& row) {
		for (unsigned k = 1; k <= 8; ++k) {
			const ZWord z = generate_zimin(k);
			for (std::size_t i = 0; i < z.size(); ++i) {
				for (std::size_t j = i + 1; j <= z.size(); ++j) {
					const ZWord u(std::vector<Letter>(z.begin() + i, z.begin() + j));
					++row.cases;
					row.failures += !is_zimin_factor(u) || decompress(compress(u)) != u;
				}
			}
		}
		for (Letter a = 1; a <= 4; ++a)
			for (Letter b = 1; b <= 4; ++b)
				for (Letter c = 1; c <= 4; ++c) {
					const ZWord u{a, b, c};
					++row.cases;
					row.failures += is_zimin_factor(u) != verification::oracle_is_factor(u, 5);
				}
	}));
	rows.push_back(run_suite("ranked-matching", [](SuiteRow& row) {
		for (const auto& rp : verification::exhaustive_ranked(5, 3, 3)) {
			++row.cases;
			const auto truth = verification::oracle_enumerate(rp);
			const auto m = compressed_embedding(rp);
			bool ok = m.has_value() == !truth.empty();
			if (ok && m) {
				ok = is_valid_valuation(rp, m->valuation) && count_instances(rp) == truth.size() &&
				     instance_length(rp.pattern(), shortest_instance(rp)->valuation) ==
				         *verification::oracle_min_length(rp);
			}
			row.failures += !ok;
		}
	}));
	rows.push_back(run_suite("avoidability", [](SuiteRow& row) {
		for (const auto& symbols : verification::all_patterns(6, 3)) {
			const Pattern p = Pattern::from_indices(symbols);
			const auto k = p.alphabet().size();
			++row.cases;
			const Verdict red = is_unavoidable_by_reduction(p, k).verdict;
			const Verdict rank = is_unavoidable_by_ranking(p).verdict;
			const bool occurs = verification::oracle_occurs(p, static_cast<unsigned>(k));
			row.failures += red != rank || (red == Verdict::Unavoidable) != occurs;
		}
	}));
	return rows;
}

// ---------------------------------------------------------------- commands

void cmd_gen(Result& r, unsigned k)
{
	const ZWord z = generate_zimin(k);
	r.doc["word"] = letters_json(z.letters());
	r.text << to_string(z) << '\n';
}

void cmd_factor(Result& r, const std::string& word)
{
	const ZWord u = parse_zword(word);
	const auto level = first_violated_level(u.letters());
	r.doc["factor"] = !level;
	if (level) {
		r.doc["violated_level"] = *level;
		r.text << "NOT-FACTOR level " << *level << '\n';
		r.code = kNegative;
	} else {
		r.text << "FACTOR\n";
	}
}

void cmd_compress(Result& r, const std::string& word)
{
	const ZWord u = parse_zword(word);
	if (u.empty())
		throw ParseError("empty word");
	if (const auto level = first_violated_level(u.letters())) {
		r.doc["factor"] = false;
		r.doc["violated_level"] = *level;
		r.text << "NOT-FACTOR level " << *level << '\n';
		r.code = kNegative;
		return;
	}
	const CompressedFactor c = compress(u);
	r.doc["compressed"] = letters_json(c.letters());
	r.text << to_string(c) << '\n';
}

void cmd_decompress(Result& r, const std::string& csv)
{
	const CompressedFactor c = parse_compressed(csv);
	const ZWord u = decompress(c);
	r.doc["word"] = letters_json(u.letters());
	r.text << to_string(u) << '\n';
}

void cmd_concat(Result& r, const std::vector<std::string>& csvs)
{
	std::vector<CompressedFactor> parts;
	for (const auto& s : csvs)
		parts.push_back(parse_compressed(s));
	if (!check_concatenation(parts)) {
		r.doc["factor"] = false;
		r.text << "NOT-FACTOR\n";
		r.code = kNegative;
		return;
	}
	const CompressedFactor c = compose(parts);
	r.doc["factor"] = true;
	r.doc["composed"] = letters_json(c.letters());
	r.doc["extended"] = to_string(reduce_extended(extend_all(parts)));
	r.text << "OK " << to_string(c) << '\n';
}

void no_match(Result& r)
{
	r.doc["match"] = false;
	r.text << "NO_MATCH\n";
	r.code = kNegative;
}

void cmd_match(Result& r, const RankedPattern& rp, bool shortest)
{
	const auto m = shortest ? shortest_instance(rp) : compressed_embedding(rp);
	if (!m)
		return no_match(r);
	const Pattern& p = rp.pattern();
	const CompressedFactor inst = instance_representation(p, m->valuation);
	const BigInt length = instance_length(p, m->valuation);
	r.doc["match"] = true;
	r.doc["valuation"] = valuation_json(p, m->valuation);
	r.doc["l"] = m->l;
	r.doc["instance"] = letters_json(inst.letters());
	r.doc["length"] = length.str();
	print_valuation(r.text, p, m->valuation);
	r.text << "l = " << m->l << '\n';
	r.text << "instance = " << to_string(inst) << '\n';
	r.text << "length = " << length.str() << '\n';
}

void cmd_count(Result& r, const RankedPattern& rp)
{
	const auto m = compressed_embedding(rp);
	r.doc["match"] = m.has_value();
	r.doc["count"] = m ? (BigInt(1) << m->l).str() : "0";
	if (m)
		r.doc["l"] = m->l;
	r.text << "count = " << r.doc["count"].get<std::string>() << '\n';
	if (m)
		r.text << "l = " << m->l << '\n';
	else
		r.code = kNegative;
}

void cmd_enumerate(Result& r, const RankedPattern& rp, std::size_t limit)
{
	const auto all = enumerate_instances(rp, limit);
	json list = json::array();
	for (const auto& v : all)
		list.push_back(valuation_json(rp.pattern(), v));
	r.doc["count"] = std::to_string(all.size());
	r.doc["valuations"] = std::move(list);
	for (std::size_t i = 0; i < all.size(); ++i) {
		r.text << "# " << i + 1 << '\n';
		print_valuation(r.text, rp.pattern(), all[i]);
	}
	r.text << "count = " << all.size() << '\n';
	if (all.empty())
		r.code = kNegative;
}

void cmd_avoid(Result& r, const std::vector<std::string>& words, const std::string& method, std::size_t max_free)
{
	const Pattern p = Pattern::parse(join(words));
	const std::size_t vars = p.alphabet().size();
	const bool use_ranking = method != "reduction";
	const bool use_reduction = method != "ranking";

	std::optional<RankingOutcome> ranking;
	std::optional<ReductionOutcome> reduction;
	if (use_ranking)
		ranking = is_unavoidable_by_ranking(p);
	if (use_reduction)
		reduction = is_unavoidable_by_reduction(p, max_free ? max_free : std::max<std::size_t>(vars, 1));

	Verdict verdict = Verdict::Inconclusive;
	if ((ranking && ranking->verdict == Verdict::Unavoidable) ||
	    (reduction && reduction->verdict == Verdict::Unavoidable))
		verdict = Verdict::Unavoidable;
	else if ((ranking && ranking->verdict == Verdict::Avoidable) ||
	         (reduction && reduction->verdict == Verdict::Avoidable))
		verdict = Verdict::Avoidable;

	r.doc["verdict"] = to_string(verdict);
	r.text << to_string(verdict) << '\n';
	if (ranking) {
		r.doc["ranking_verdict"] = to_string(ranking->verdict);
		if (ranking->ranking) {
			r.doc["ranking"] = ranking_json(*ranking->ranking);
			r.doc["valuation"] = valuation_json(p, ranking->match->valuation);
			r.doc["l"] = ranking->match->l;
			r.text << "ranking:";
			for (VariableId x : p.alphabet())
				r.text << ' ' << p.name(x) << '=' << ranking->ranking->rank(x);
			r.text << '\n';
			print_valuation(r.text, p, ranking->match->valuation);
		}
	}
	if (reduction) {
		r.doc["reduction_verdict"] = to_string(reduction->verdict);
		if (reduction->trace) {
			r.doc["trace"] = trace_json(p, *reduction->trace);
			r.text << "trace:\n";
			for (const auto& step : reduction->trace->steps) {
				r.text << "  " << to_string(step.before) << "  -{";
				for (std::size_t i = 0; i < step.witness.free.size(); ++i)
					r.text << (i ? "," : "") << p.name(step.witness.free[i]);
				r.text << "}->\n";
			}
			r.text << "  (empty)\n";
		}
	}
	if (verdict != Verdict::Unavoidable)
		r.code = kNegative;
}

void cmd_verify(Result& r, const std::string& suite, bool bench, const std::vector<std::size_t>& sizes, Rank bench_k,
                bool json_mode)
{
	if (bench) {
		json rows = json::array();
		r.text << "n\tK\tseconds\tsymbols_processed\tpeak_cells\tinstance_length_bits\n";
		for (std::size_t n : sizes) {
			const RankedPattern rp = verification::zimin_prefix_workload(n, bench_k);
			const auto t0 = std::chrono::steady_clock::now();
			const auto m = compressed_embedding(rp);
			const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
			if (!m)
				throw std::logic_error("benchmark workload did not match");
			const std::string bits = bits_of(instance_length(rp.pattern(), m->valuation));
			r.text << n << '\t' << bench_k << '\t' << secs << '\t' << m->stats.symbols_processed << '\t'
			       << m->stats.peak_cells << '\t' << bits << '\n';
			rows.push_back({{"n", n},
			                {"K", bench_k},
			                {"seconds", secs},
			                {"symbols_processed", m->stats.symbols_processed},
			                {"peak_cells", m->stats.peak_cells},
			                {"instance_length_bits", bits}});
		}
		r.doc["bench"] = std::move(rows);
		return;
	}
	if (suite != "small")
		throw ParseError("unknown suite '" + suite + "' (available: small)");
	json rows = json::array();
	r.text << "suite\tcases\tfailures\tseconds\tstatus\n";
	for (const auto& row : small_suites()) {
		const bool pass = row.failures == 0;
		r.text << row.name << '\t' << row.cases << '\t' << row.failures << '\t' << row.seconds << '\t'
		       << (pass ? "PASS" : "FAIL") << '\n';
		rows.push_back({{"suite", row.name},
		                {"cases", row.cases},
		                {"failures", row.failures},
		                {"seconds", row.seconds},
		                {"status", pass ? "PASS" : "FAIL"}});
		if (!pass)
			r.code = kNegative;
	}
	r.doc["suites"] = std::move(rows);
	(void)json_mode;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Compressed ranked pattern matching in Zimin words"};
	app.require_subcommand(1);
	app.fallthrough();
	bool json_mode = false;
	app.add_flag("--json", json_mode, "Machine-readable output");

	unsigned gen_k = 0;
	auto* gen = app.add_subcommand("gen", "Print Z_K");
	gen->add_option("K", gen_k, "Order")->required();

	std::vector<std::string> word;
	auto* factor = app.add_subcommand("factor", "Test whether a word is a Zimin factor");
	factor->add_option("word", word, "Letters, space separated or compact digits")->required();
	auto* compress_cmd = app.add_subcommand("compress", "Compressed form of a factor");
	compress_cmd->add_option("word", word, "Letters")->required();

	std::string csv;
	auto* decompress_cmd = app.add_subcommand("decompress", "Explicit word of a compressed form");
	decompress_cmd->add_option("compressed", csv, "Comma separated letters")->required();

	std::vector<std::string> csvs;
	auto* concat = app.add_subcommand("concat", "Check and compose a concatenation");
	concat->add_option("parts", csvs, "Compressed parts")->required();

	std::vector<std::string> pattern_words, rank_words;
	std::size_t limit = 1000;
	auto add_ranked = [&](CLI::App* sub) {
		sub->add_option("pattern", pattern_words, "Pattern, e.g. \"a b a\"")->required();
		sub->add_option("--ranks", rank_words, "Ranks: 1,2,1 or a=1,b=2")->required();
	};
	auto* match = app.add_subcommand("match", "Compressed embedding");
	add_ranked(match);
	auto* shortest = app.add_subcommand("shortest", "Shortest instance");
	add_ranked(shortest);
	auto* count = app.add_subcommand("count", "Number of valuations");
	add_ranked(count);
	auto* enumerate = app.add_subcommand("enumerate", "All valuations");
	add_ranked(enumerate);
	enumerate->add_option("--limit", limit, "Refuse to list more valuations than this")->capture_default_str();

	std::string method = "both";
	std::size_t max_free = 0;
	auto* avoid = app.add_subcommand("avoid", "Unavoidability test");
	avoid->add_option("pattern", pattern_words, "Pattern")->required();
	avoid->add_option("--method", method, "ranking, reduction or both")
	    ->check(CLI::IsMember({"ranking", "reduction", "both"}))
	    ->capture_default_str();
	avoid->add_option("--max-free-set", max_free, "Largest free set tried by the reduction search (default: all)");

	std::string suite = "small";
	bool bench = false;
	std::vector<std::size_t> sizes{25000, 50000, 100000, 200000};
	Rank bench_k = 1000;
	auto* verify = app.add_subcommand("verify", "Oracle agreement suites or the scaling benchmark");
	verify->add_option("--suite", suite, "Suite name")->capture_default_str();
	verify->add_flag("--bench", bench, "Print a TSV of compressed_embedding timings");
	verify->add_option("--sizes", sizes, "Pattern lengths for --bench")->delimiter(',');
	verify->add_option("--bench-k", bench_k, "Largest rank for --bench")->capture_default_str();

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		std::cerr << "error: " << e.what() << '\n';
		return kParse;
	}

	Result r;
	try {
		if (*gen)
			cmd_gen(r, gen_k);
		else if (*factor)
			cmd_factor(r, join(word));
		else if (*compress_cmd)
			cmd_compress(r, join(word));
		else if (*decompress_cmd)
			cmd_decompress(r, csv);
		else if (*concat)
			cmd_concat(r, csvs);
		else if (*match)
			cmd_match(r, parse_ranked(pattern_words, rank_words), false);
		else if (*shortest)
			cmd_match(r, parse_ranked(pattern_words, rank_words), true);
		else if (*count)
			cmd_count(r, parse_ranked(pattern_words, rank_words));
		else if (*enumerate)
			cmd_enumerate(r, parse_ranked(pattern_words, rank_words), limit);
		else if (*avoid)
			cmd_avoid(r, pattern_words, method, max_free);
		else if (*verify)
			cmd_verify(r, suite, bench, sizes, bench_k, json_mode);
	} catch (const EnumerationLimitError& e) {
		std::cerr << "size limit: " << e.what() << '\n';
		return kSize;
	} catch (const SizeLimitError& e) {
		std::cerr << "size limit: " << e.what() << '\n';
		return kSize;
	} catch (const verification::BudgetExceeded& e) {
		std::cerr << "size limit: " << e.what() << '\n';
		return kSize;
	} catch (const ParseError& e) {
		std::cerr << "parse error: " << e.what() << '\n';
		return kParse;
	} catch (const std::invalid_argument& e) {
		std::cerr << "parse error: " << e.what() << '\n';
		return kParse;
	} catch (const NotAFactorError& e) {
		std::cerr << e.what() << '\n';
		return kNegative;
	}

	if (json_mode) {
		json out;
		out["format_version"] = kFormatVersion;
		out["command"] = app.get_subcommands().front()->get_name();
		for (auto& [key, value] : r.doc.items())
			out[key] = value;
		std::cout << out.dump(2) << '\n';
	} else {
		std::cout << r.text.str();
	}
	return r.code;
}
