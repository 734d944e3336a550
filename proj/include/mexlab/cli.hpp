#pragma once

// mexlab <compute|verify|density|asym|dissect|eta> [flags]
//
// Exit status: 0 success / all verdicts pass, 1 some verdict failed,
// 2 usage or input error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mexlab {

// "5", "0..6", "5,7,11", "1..3,8"; ascending, duplicates kept out.
std::vector<std::uint64_t> parse_index_list(const std::string& text);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mexlab
