#pragma once

#include <string>

#include "json.hpp"
#include "logarr/arrangement/arrangement.hpp"

namespace logarr {

/// {"n_vars": int, "forms": [[int,...],...], "name": string?}
Arrangement arrangement_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Arrangement& a);
Arrangement read_arrangement_file(const std::string& path);

}  // namespace logarr
