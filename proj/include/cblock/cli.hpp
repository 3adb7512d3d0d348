#pragma once

#include "cblock/rootlab.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cblock::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInvalidInput = 2, kRounding = 3 };

struct JobConfig {
    std::string command;          // dim, trace, invdim, fusion, alcove, torus, verify
    std::string type = "A";
    int rank = 1;
    std::string sigma;            // empty when not given
    Int level = 1;
    int genus = 0;
    std::string weights_text;
    std::vector<Weight> weights;
    std::string output = "json";  // json | csv
    double tolerance = 1e-6;
    std::string suite = "all";
    bool timing = false;          // emit wall-clock time instead of 0
};

// "a,b;c,d" -> two weights of the given rank.
std::vector<Weight> parse_weights(std::string_view text, std::size_t rank);

// Parses argv (argv[0] is the program name). Throws InvalidInput on bad input.
JobConfig parse_args(int argc, const char* const* argv);

// Executes one job, writing the report to `out` and diagnostics to `err`.
int run(const JobConfig& cfg, std::ostream& out, std::ostream& err);

// parse_args + run with exit-code mapping; what the executable calls.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cblock::cli
