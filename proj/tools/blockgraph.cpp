#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "blockgraph/commands.hpp"

namespace {

using blockgraph::commands::CommandResult;

bool read_input(const std::string& path, std::string& text) {
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return true;
}

int emit(const CommandResult& result, const std::string& output) {
    std::cerr << result.err;
    if (result.out.empty()) return result.exit_code;
    if (output.empty() || output == "-") {
        std::cout << result.out;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) {
            std::cerr << "error[io]: cannot write " << output << "\n";
            return blockgraph::commands::usage_error;
        }
        out << result.out;
    }
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    namespace cmd = blockgraph::commands;

    CLI::App app{"Block graphs and their compatible families of vertex-deleted partitions"};
    app.require_subcommand(1);
    std::string input = "-";
    std::string output;
    bool highlight = false;
    cmd::CheckOptions check_options;
    check_options.threads = std::max(1U, std::thread::hardware_concurrency());
    std::string golden;

    auto add_io = [&](CLI::App* sub, const std::string& what) {
        sub->add_option("input", input, what + " (default: stdin)");
        sub->add_option("-o,--output", output, "Write the result here instead of stdout");
    };
    auto* closure = app.add_subcommand("closure", "Print the block closure [G] of an edge list");
    add_io(closure, "Edge-list file");
    auto* partitions = app.add_subcommand("partitions", "Print the family of vertex-deleted component partitions");
    add_io(partitions, "Edge-list file of a connected graph");
    auto* reconstruct = app.add_subcommand("reconstruct", "Rebuild the block graph of a compatible family");
    add_io(reconstruct, "Family document");
    auto* validate = app.add_subcommand("validate", "Check a family document for compatibility");
    add_io(validate, "Family document");
    auto* dot = app.add_subcommand("dot", "Render an edge list as Graphviz DOT");
    add_io(dot, "Edge-list file");
    dot->add_flag("--highlight-blocks", highlight, "Color blocks and double-circle cut vertices");
    auto* check = app.add_subcommand("check", "Verify the bijection exhaustively and on random samples");
    check->add_option("--max-n", check_options.max_n, "Largest exhaustive size (1..6)")->capture_default_str();
    check->add_option("--samples", check_options.samples, "Random graphs at n=7 and n=8 each")
        ->capture_default_str();
    check->add_option("--seed", check_options.seed, "Seed for the sampled graphs")->capture_default_str();
    check->add_option("--threads", check_options.threads, "Worker threads for exhaustive sweeps");
    check->add_option("--golden", golden, "Counts file to create or compare against");
    check->add_option("-o,--output", output, "Write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string message = e.what();
        std::replace(message.begin(), message.end(), '\n', ' ');
        std::cerr << "error[usage]: " << message << "\n";
        return cmd::usage_error;
    }

    if (check->parsed()) {
        if (!golden.empty()) check_options.golden = golden;
        return emit(cmd::check(check_options), output);
    }

    std::string text;
    if (!read_input(input, text)) {
        std::cerr << "error[io]: cannot read " << input << "\n";
        return cmd::usage_error;
    }
    if (closure->parsed()) return emit(cmd::closure(text), output);
    if (partitions->parsed()) return emit(cmd::partitions(text), output);
    if (reconstruct->parsed()) return emit(cmd::reconstruct(text), output);
    if (validate->parsed()) return emit(cmd::validate(text), output);
    return emit(cmd::dot(text, highlight), output);
}
