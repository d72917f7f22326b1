#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qdomain::cli {

enum Exit { Pass = 0, CheckFailed = 1, InputError = 2 };

struct Options {
    bool json = false;
    std::optional<double> tol;  // relative cutoff
    std::uint64_t seed = 1;
    std::string corpus_dir;     // empty: the built-in default
};

std::vector<std::string> command_names();

// Runs one command; args are the positional arguments after the command
// name (usually a file followed by object names).
int run(const std::string& command, const std::vector<std::string>& args, const Options& opt, std::ostream& out,
        std::ostream& err);

// Full command line, including global flags and QDOMAIN_TOL.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qdomain::cli
