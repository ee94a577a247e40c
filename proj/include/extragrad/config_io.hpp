#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extragrad/problem.hpp"

namespace extragrad {

struct ParseResult {
    std::optional<ProblemConfig> config;  // set iff errors is empty
    std::vector<std::string> errors;

    bool ok() const { return errors.empty(); }
};

// Flat dotted-key text: one `key = value` per line, `#` comments.
// Vectors as [a, b], matrices as [[a, b], [c, d]]. Parsing is total:
// malformed input comes back as an error list, never an exception.
ParseResult parse_config(const std::string& text);
ParseResult parse_config_file(const std::string& path);

// Canonical rendering; parse_config(serialize_config(c)) reproduces c
// (17-significant-digit reals, so doubles survive exactly).
std::string serialize_config(const ProblemConfig& cfg);

}  // namespace extragrad
