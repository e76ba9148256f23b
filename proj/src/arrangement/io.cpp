#include "logarr/arrangement/io.hpp"

#include <fstream>
#include <stdexcept>

namespace logarr {

Arrangement arrangement_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n_vars") || !j.contains("forms"))
    throw std::invalid_argument("arrangement JSON needs n_vars and forms");
  int n_vars = 0;
  std::vector<Form> forms;
  std::string name;
  try {
    n_vars = j.at("n_vars").get<int>();
    for (const auto& f : j.at("forms")) forms.push_back(f.get<Form>());
    name = j.value("name", std::string{});
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument("arrangement JSON: n_vars must be an integer and forms lists of integers");
  }
  return make_arrangement(n_vars, forms, name);
}

nlohmann::json to_json(const Arrangement& a) {
  nlohmann::json j;
  j["n_vars"] = a.n_vars();
  j["forms"] = a.forms();
  if (!a.name().empty()) j["name"] = a.name();
  return j;
}

Arrangement read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open arrangement file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed arrangement file: " + std::string(e.what()));
  }
  return arrangement_from_json(j);
}

}  // namespace logarr
