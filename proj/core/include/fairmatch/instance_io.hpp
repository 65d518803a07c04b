#pragma once

#include <string>

#include "fairmatch/evogame.hpp"
#include "fairmatch/types.hpp"

namespace fairmatch::io {

/// Parses and validates an instance document. Indices are 1-based in the
/// file and 0-based in memory. Throws validation_error with the offending
/// field and index.
MatchingInstance load_instance(const std::string& path);
MatchingInstance instance_from_text(const std::string& json_text);

std::string instance_to_text(const MatchingInstance& inst);
void write_instance(const MatchingInstance& inst, const std::string& path);

/// Scheme document: 1-based pairs, all metrics at full precision plus
/// 2-decimal rounded mirrors.
std::string scheme_to_text(const MatchingScheme& scheme);
void write_scheme(const MatchingScheme& scheme, const std::string& path);

evogame::GameParams load_game_params(const std::string& path);
evogame::GameParams game_params_from_text(const std::string& json_text);

}  // namespace fairmatch::io
