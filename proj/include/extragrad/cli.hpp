#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace extragrad {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;  // config/audit/schedule failures
inline constexpr int kExitNoConvergence = 2;
inline constexpr int kExitIo = 3;

int cmd_run(const std::string& config_path, const std::string& out_path,
            std::optional<std::uint64_t> seed_override, std::ostream& out, std::ostream& err);

int cmd_compare(const std::string& config_path, const std::vector<std::string>& scheme_names,
                const std::string& out_path, std::optional<std::uint64_t> seed_override,
                std::ostream& out, std::ostream& err);

int cmd_audit(const std::string& config_path, std::optional<std::uint64_t> seed_override,
              long sample_count, std::ostream& out, std::ostream& err);

int cmd_oracle(const std::string& config_path, std::optional<std::uint64_t> seed_override,
               long sample_count, std::ostream& out, std::ostream& err);

}  // namespace extragrad
