#ifndef BLOCKGRAPH_COMMANDS_HPP
#define BLOCKGRAPH_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace blockgraph::commands {

enum ExitCode : int { success = 0, validation_failure = 1, usage_error = 2 };

// Everything a subcommand produces. Diagnostics in `err` start with
// "error[<kind>]: " where kind is parse, usage, validation or io.
struct CommandResult {
    int exit_code = success;
    std::string out;
    std::string err;
};

CommandResult closure(std::string_view edge_list);
CommandResult partitions(std::string_view edge_list);
CommandResult reconstruct(std::string_view family_document);
CommandResult validate(std::string_view family_document);
CommandResult dot(std::string_view edge_list, bool highlight_blocks);

struct CheckOptions {
    std::size_t max_n = 6;
    std::uint64_t samples = 0;  // per sampled size (7 and 8); 0 skips sampling
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::optional<std::filesystem::path> golden;
};

// Runtime goes to `err` so that `out` stays deterministic.
CommandResult check(const CheckOptions& options);

} // namespace blockgraph::commands

#endif
