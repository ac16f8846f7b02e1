#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gasketlab::cli {

enum ExitCode : int { ok = 0, usage = 1, finding = 2, bug = 3 };

struct Config {
    std::uint64_t vertex_cap = 10'000'000;
    int time_budget_s = 60;
    unsigned jobs = 1;
    std::string output_format = "csv";
};

// Layered settings, each field filled by the first layer that sets it:
// command-line flags, then environment, then the config file.
struct ConfigLayer {
    std::optional<std::uint64_t> vertex_cap;
    std::optional<int> time_budget_s;
    std::optional<unsigned> jobs;
    std::optional<std::string> output_format;
};

ConfigLayer read_config_file(const std::string& path);
ConfigLayer read_environment(const std::map<std::string, std::string>& env);
Config resolve(const ConfigLayer& flags, const ConfigLayer& env, const ConfigLayer& file);

// The environment variables the CLI looks at, taken from the process.
std::map<std::string, std::string> process_environment();

// Runs one invocation; args exclude the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err,
        const std::map<std::string, std::string>& env = process_environment());

} // namespace gasketlab::cli
