#include "shifted_poisson/document.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace shifted_poisson {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument("document: " + message);
}

std::optional<int> parse_strict_int(const std::string& text) {
  if (text.empty() || text == "-0") return std::nullopt;
  std::size_t start = (text[0] == '-') ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  if (text[start] == '0' && text.size() > start + 1) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  }
  try {
    return std::stoi(text);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Rational parse_coefficient(const Json& j, const std::string& context) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(context + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail(context + ": coefficient must be a string like \"2\" or \"-1/3\" (or a JSON integer)");
}

IndexWord parse_name_word(const Json& j, const GradedSpace& space, const std::string& context) {
  if (!j.is_array()) fail(context + ": expected an array of basis names");
  IndexWord word;
  word.reserve(j.size());
  for (const Json& item : j) {
    if (!item.is_string()) fail(context + ": basis names must be strings");
    const std::string name = item.get<std::string>();
    if (!space.has_name(name)) fail(context + ": unknown basis name '" + name + "'");
    word.push_back(space.id_of(name));
  }
  return word;
}

std::vector<MapEntry> parse_entries(const Json& j, const GradedSpace& space, int arity_in,
                                    int arity_out, const std::string& context) {
  if (!j.is_array()) fail(context + ": expected an array of entries");
  std::vector<MapEntry> entries;
  entries.reserve(j.size());
  for (const Json& item : j) {
    if (!item.is_array() || item.size() != 3)
      fail(context + ": each entry must be [inputs, outputs, coefficient]");
    IndexWord in = parse_name_word(item[0], space, context);
    IndexWord out = parse_name_word(item[1], space, context);
    if (static_cast<int>(in.size()) != arity_in)
      fail(context + ": expected " + std::to_string(arity_in) + " input names, got " +
           std::to_string(in.size()));
    if (static_cast<int>(out.size()) != arity_out)
      fail(context + ": expected " + std::to_string(arity_out) + " output names, got " +
           std::to_string(out.size()));
    entries.emplace_back(std::move(in), std::move(out), parse_coefficient(item[2], context));
  }
  return entries;
}

Json word_to_names(const IndexWord& word, const GradedSpace& space) {
  Json names = Json::array();
  for (int id : word) names.push_back(space.name_of(id));
  return names;
}

Json entries_to_json(const MultiMap& map) {
  const GradedSpace& space = *map.space();
  Json entries = Json::array();
  for (const auto& [key, value] : map.coeffs()) {
    entries.push_back(Json::array(
        {word_to_names(key.in, space), word_to_names(key.out, space), rational_to_string(value)}));
  }
  return entries;
}

}  // namespace

ProblemDocument parse_document(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const std::exception& e) {
    fail(std::string("JSON syntax error: ") + e.what());
  }
  if (!root.is_object()) fail("top level must be an object");
  static const std::set<std::string> kTopKeys = {"schema", "task",  "space",
                                                 "brackets", "shift", "components"};
  for (const auto& [key, value] : root.items()) {
    if (kTopKeys.find(key) == kTopKeys.end()) fail("unknown top-level key '" + key + "'");
  }

  if (!root.contains("schema") || !root["schema"].is_string())
    fail("missing schema marker (expected \"schema\": \"shifted-poisson/1\")");
  const std::string schema = root["schema"].get<std::string>();
  if (schema != "shifted-poisson/1") fail("unsupported schema '" + schema + "'");

  std::string task;
  if (root.contains("task")) {
    if (!root["task"].is_string()) fail("task must be a string");
    task = root["task"].get<std::string>();
  }

  if (!root.contains("space") || !root["space"].is_object()) fail("missing space object");
  const Json& jspace = root["space"];
  for (const auto& [key, value] : jspace.items()) {
    if (key != "basis" && key != "differential") fail("unknown space key '" + key + "'");
  }
  if (!jspace.contains("basis") || !jspace["basis"].is_object())
    fail("space needs a basis object mapping degrees to name lists");

  std::map<int, std::vector<std::string>> basis;
  for (const auto& [key, value] : jspace["basis"].items()) {
    const std::optional<int> degree = parse_strict_int(key);
    if (!degree) fail("basis degree '" + key + "' is not an integer");
    if (basis.find(*degree) != basis.end()) fail("duplicate basis degree " + key);
    if (!value.is_array()) fail("basis[" + key + "] must be an array of names");
    std::vector<std::string>& names = basis[*degree];
    for (const Json& item : value) {
      if (!item.is_string() || item.get<std::string>().empty())
        fail("basis[" + key + "] must contain nonempty strings");
      names.push_back(item.get<std::string>());
    }
  }

  std::vector<DifferentialEntry> differential;
  if (jspace.contains("differential")) {
    const Json& jdiff = jspace["differential"];
    if (!jdiff.is_array()) fail("space differential must be an array");
    for (const Json& item : jdiff) {
      if (!item.is_array() || item.size() != 3 || !item[0].is_string() || !item[1].is_string())
        fail("differential entries must be [from, to, coefficient]");
      differential.push_back(DifferentialEntry{item[0].get<std::string>(),
                                               item[1].get<std::string>(),
                                               parse_coefficient(item[2], "differential")});
    }
  }

  GradedSpacePtr space;
  try {
    space = std::make_shared<const GradedSpace>(std::move(basis), std::move(differential));
  } catch (const std::invalid_argument& e) {
    fail(std::string("space: ") + e.what());
  }
  if (space->max_degree() > 0) fail("basis degrees must be non-positive");
  const int N = 1 - space->min_degree();

  std::map<int, MultiMap> brackets;
  if (root.contains("brackets")) {
    if (!root["brackets"].is_object()) fail("brackets must be an object keyed by arity");
    for (const auto& [key, value] : root["brackets"].items()) {
      const std::optional<int> arity = parse_strict_int(key);
      if (!arity || *arity < 2)
        fail("bracket arity '" + key + "' must be an integer at least 2 (the unary bracket is "
             "the space differential)");
      const std::string context = "brackets[" + key + "]";
      std::vector<MapEntry> entries = parse_entries(value, *space, *arity, 1, context);
      if (entries.empty()) continue;
      try {
        MultiMap bracket(space, *arity, 1, 2 - *arity, entries);
        if (!bracket.is_zero()) brackets.emplace(*arity, std::move(bracket));
      } catch (const std::invalid_argument& e) {
        fail(context + ": " + e.what());
      }
    }
  }

  std::optional<LieNAlgebra> algebra;
  try {
    algebra.emplace(space, N, std::move(brackets));
  } catch (const std::invalid_argument& e) {
    fail(std::string("algebra: ") + e.what());
  }

  ProblemDocument document(std::move(*algebra));
  document.task = std::move(task);

  if (root.contains("shift")) {
    if (!root["shift"].is_number_integer()) fail("shift must be an integer");
    document.shift = root["shift"].get<int>();
  }

  if (root.contains("components")) {
    if (!root["components"].is_object()) fail("components must be an object keyed by \"m,l\"");
    std::set<std::pair<int, int>> seen;
    for (const auto& [key, value] : root["components"].items()) {
      const std::size_t comma = key.find(',');
      std::optional<int> m;
      std::optional<int> l;
      if (comma != std::string::npos) {
        m = parse_strict_int(key.substr(0, comma));
        l = parse_strict_int(key.substr(comma + 1));
      }
      if (!m || !l || *m < 1 || *l < 0)
        fail("component key '" + key + "' must look like \"m,l\" with m >= 1, l >= 0");
      if (!seen.insert({*m, *l}).second) fail("duplicate component shape " + key);
      const std::string context = "components[" + key + "]";
      std::vector<MapEntry> entries = parse_entries(value, *space, *l, *m, context);
      if (entries.empty()) continue;
      int degree = 0;
      for (int id : std::get<1>(entries.front())) degree += space->degree_of(id);
      for (int id : std::get<0>(entries.front())) degree -= space->degree_of(id);
      try {
        MultiMap component(space, *l, *m, degree, entries);
        if (!component.is_zero()) document.components.push_back(std::move(component));
      } catch (const std::invalid_argument& e) {
        fail(context + ": " + e.what());
      }
    }
  }

  return document;
}

std::string serialize_document(const ProblemDocument& document) {
  const GradedSpacePtr& space = document.algebra.space();

  Json root = Json::object();
  root["schema"] = "shifted-poisson/1";
  if (!document.task.empty()) root["task"] = document.task;

  Json jbasis = Json::object();
  for (const auto& [degree, names] : space->basis_names()) {
    Json list = Json::array();
    for (const std::string& name : names) list.push_back(name);
    jbasis[std::to_string(degree)] = std::move(list);
  }
  Json jspace = Json::object();
  jspace["basis"] = std::move(jbasis);
  const std::vector<DifferentialEntry> diff = space->differential_entries();
  if (!diff.empty()) {
    Json jdiff = Json::array();
    for (const DifferentialEntry& entry : diff) {
      jdiff.push_back(Json::array({entry.from, entry.to, rational_to_string(entry.coeff)}));
    }
    jspace["differential"] = std::move(jdiff);
  }
  root["space"] = std::move(jspace);

  Json jbrackets = Json::object();
  for (const auto& [arity, bracket] : document.algebra.brackets()) {
    if (bracket.is_zero()) continue;
    jbrackets[std::to_string(arity)] = entries_to_json(bracket);
  }
  if (!jbrackets.empty()) root["brackets"] = std::move(jbrackets);

  if (document.shift) root["shift"] = *document.shift;

  std::map<std::pair<int, int>, const MultiMap*> by_shape;
  for (const MultiMap& component : document.components) {
    if (component.is_zero()) continue;
    const std::pair<int, int> shape{component.arity_out(), component.arity_in()};
    if (!by_shape.emplace(shape, &component).second)
      throw std::invalid_argument("document: duplicate component shape (" +
                                  std::to_string(shape.first) + "," +
                                  std::to_string(shape.second) + ")");
  }
  if (!by_shape.empty()) {
    Json jcomponents = Json::object();
    for (const auto& [shape, component] : by_shape) {
      jcomponents[std::to_string(shape.first) + "," + std::to_string(shape.second)] =
          entries_to_json(*component);
    }
    root["components"] = std::move(jcomponents);
  }

  return root.dump(2) + "\n";
}

}  // namespace shifted_poisson
