#pragma once

#include <map>
#include <string>
#include <string_view>

#include "levytail/levy_model.hpp"

namespace levytail {

// Model mini-format: a builtin followed by optional ';'-separated certificates, e.g.
//   power_law(1, 0.5, 2); class_M = 1.2; lipschitz = {3, 0.1, 2}
// Builtins: cauchy, gamma, inverse_gaussian, stable(alpha, scale), tempered_stable(alpha, theta),
// power_law(M, alpha, cut[, one_sided]), cpp(lambda, jump), discontinuous(alpha, eps, stable_M, bump).
// Jump laws: uniform(lo, hi), sym_uniform(lo, hi), point(v).
LevyModel parse_model(std::string_view spec);

// Applies a certificate key (class_M, class_alpha, global_M, symmetric, variation, lipschitz, M1).
void apply_certificate(LevyModel& model, std::string_view key, std::string_view value);

JumpLaw parse_jump_law(std::string_view spec);

// key = value lines; '#' starts a comment. Raises ConfigError on malformed lines.
std::map<std::string, std::string> parse_key_values(std::string_view text);
std::map<std::string, std::string> read_config_file(const std::string& path);

// Model from a config map: the "model" key plus any certificate keys.
LevyModel model_from_config(const std::map<std::string, std::string>& cfg);

// Interprets arg as a file path when such a file exists, else as an inline spec.
LevyModel load_model(const std::string& arg);

}  // namespace levytail
