#pragma once

#include "pidisc/config.hpp"
#include "pidisc/fiber.hpp"

namespace pidisc {

// exit codes: 0 success, 1 internal error, 2 invalid input, 3 verification failure
struct CommandResult {
    int exit_code = 0;
    nlohmann::json json;
    std::string text;
};

CommandResult cmd_describe(const RunConfig& cfg);

struct DiscOptions {
    unsigned level = 0;
    std::string variant = "md"; // d | md
    std::string trace = "";     // reg | std | red, default family-appropriate
    // optional comparison target: generator texts in the center's variables
    std::vector<std::string> target;
    // how to compare: monomial (mutual divisibility) or linear:<bound>
    std::string compare = "monomial";
};
CommandResult cmd_disc(const RunConfig& cfg, const DiscOptions& opt);

CommandResult cmd_fiber(const RunConfig& cfg, const std::string& point_text);

CommandResult cmd_scan(const RunConfig& cfg);

CommandResult cmd_singular(const RunConfig& cfg, const std::string& point_text);

CommandResult cmd_verify(const std::string& suite, std::uint64_t seed);

} // namespace pidisc
