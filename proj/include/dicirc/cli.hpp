#pragma once

#include <dicirc/classifier.hpp>
#include <dicirc/fourier.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace dicirc::cli {

enum ExitCode : int { Ok = 0, CrossCheckFailed = 1, UsageError = 2 };

struct RunConfig {
    /// check | classify | survey | search-ds | fourier
    std::string command;
    std::optional<int> n;
    std::optional<std::pair<int, int>> n_range;
    std::string spec;
    /// empty: write to the output stream
    std::string out;
    /// json | csv | text
    std::string format = "text";
    double tolerance = default_tolerance;
    int workers = 1;
    bool dedup = true;
    std::optional<int> limit;
    /// search-ds: cyclic (order n) or dicyclic (Dic_n, order 4n)
    std::string group = "dicyclic";
    std::optional<int> k;
    std::optional<int> lambda;
    Classifier classifier = classify;
};

/// "A..B" with 1 <= A <= B.
auto parse_n_range(const std::string & text) -> std::pair<int, int>;

/// Parses argv; on failure or --help prints to the streams and returns the exit code instead.
auto parse_command_line(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
    -> std::variant<RunConfig, int>;

auto run(const RunConfig & config, std::ostream & out, std::ostream & err) -> int;

/// parse_command_line followed by run.
auto main_entry(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;

} // namespace dicirc::cli
