#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "threegap/numtheory.hpp"
#include "threegap/rational.hpp"

namespace threegap::cli {

enum class Command { Predict, Oracle, Verify, Evolve, IetTrace, Zorich };
enum class Format { Json, Csv, Table };

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Command command = Command::Predict;
    std::optional<std::string> z_rational;  // "p/q"
    std::optional<std::string> z_cf;        // "0;a1,a2,..." or golden | sqrt2 | e | random
    std::optional<std::int64_t> n;
    std::int64_t n_min = 2;
    std::optional<std::int64_t> n_max;
    int depth = 30;
    Format format = Format::Json;
    std::uint64_t seed = 0;
    std::optional<std::string> output;
    std::optional<int> decimal;
    std::optional<std::string> lengths;  // iet-trace: "la,lb"
    std::int64_t steps = 64;             // iet-trace step cap
    std::optional<int> blocks;           // zorich block cap, defaults to depth
};

/// THREEGAP_DEPTH_DEFAULT if set to a positive integer, else 30.
int default_depth();

/// z and the expansion the predictor should use for it.
struct ZInput {
    Rational z;
    nt::ContinuedFraction cf;
};

/// Rational input keeps z and takes its exact expansion; expansion input
/// (literal, named or seeded random) is realized as the value of its last
/// convergent.
ZInput resolve_z(const RunConfig& config);

/// Executes one command, writing the document to `out` (or config.output)
/// and diagnostics to `err`. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace threegap::cli
