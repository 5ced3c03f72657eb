#include "zimin/pattern.hpp"

#include "zimin/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace zimin {

Pattern::Pattern(std::vector<VariableId> symbols, std::vector<std::string> names)
    : symbols_(std::move(symbols)), names_(std::move(names))
{
	for (VariableId v : symbols_) {
		if (v.index >= names_.size())
			throw std::invalid_argument("pattern symbol outside the variable table");
	}
}

Pattern Pattern::parse(std::string_view text)
{
	std::istringstream is{std::string(text)};
	std::unordered_map<std::string, std::uint32_t> ids;
	Pattern out;
	std::string token;
	while (is >> token) {
		auto [it, fresh] = ids.try_emplace(token, static_cast<std::uint32_t>(out.names_.size()));
		if (fresh)
			out.names_.push_back(token);
		out.symbols_.push_back(VariableId{it->second});
	}
	if (out.symbols_.empty())
		throw ParseError("empty pattern");
	return out;
}

Pattern Pattern::from_indices(std::span<const std::uint32_t> symbols)
{
	std::uint32_t n = 0;
	std::vector<VariableId> syms;
	syms.reserve(symbols.size());
	for (auto s : symbols) {
		n = std::max(n, s + 1);
		syms.push_back(VariableId{s});
	}
	std::vector<std::string> names;
	names.reserve(n);
	for (std::uint32_t i = 0; i < n; ++i)
		names.push_back("x" + std::to_string(i));
	return Pattern(std::move(syms), std::move(names));
}

VariableId Pattern::id(std::string_view name) const
{
	auto it = std::find(names_.begin(), names_.end(), name);
	if (it == names_.end())
		throw std::out_of_range("unknown variable '" + std::string(name) + "'");
	return VariableId{static_cast<std::uint32_t>(it - names_.begin())};
}

std::vector<bool> Pattern::occurrence_mask() const
{
	std::vector<bool> seen(names_.size(), false);
	for (VariableId v : symbols_)
		seen[v.index] = true;
	return seen;
}

std::vector<VariableId> Pattern::alphabet() const
{
	std::vector<bool> seen(names_.size(), false);
	std::vector<VariableId> out;
	for (VariableId v : symbols_) {
		if (!seen[v.index]) {
			seen[v.index] = true;
			out.push_back(v);
		}
	}
	return out;
}

std::vector<std::uint32_t> Pattern::canonical_key() const
{
	constexpr auto unset = static_cast<std::uint32_t>(-1);
	std::vector<std::uint32_t> rename(names_.size(), unset);
	std::vector<std::uint32_t> key;
	key.reserve(symbols_.size());
	std::uint32_t next = 0;
	for (VariableId v : symbols_) {
		if (rename[v.index] == unset)
			rename[v.index] = next++;
		key.push_back(rename[v.index]);
	}
	return key;
}

std::string to_string(const Pattern& p)
{
	std::string out;
	for (std::size_t i = 0; i < p.size(); ++i) {
		if (i)
			out += ' ';
		out += p.name(p[i]);
	}
	return out;
}

} // namespace zimin
