#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace glassnet {

/// Entry point of the `glassnet` tool. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Files written by `repro-paper`, relative to its output directory.
std::vector<std::string> repro_paper_files();

}  // namespace glassnet
