#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace tambara::cli {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

// "cyclic:9" -> 9
int parse_group(const std::string& text);
// "Om,Oa" split at the top-level comma (or at '|'); braces group raw lists
std::pair<std::string, std::string> split_pair(const std::string& text);
// --seed, else TAMBARA_SEED, else the library default
uint64_t resolve_seed(const std::string& flag);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tambara::cli
