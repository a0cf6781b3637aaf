#include "ncalg/presentation.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/parse.hpp"

namespace ncalg {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string require_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw SchemaError(what + " must be a string");
  return j.get<std::string>();
}

}  // namespace

Presentation parse_presentation(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("presentation must be a JSON object");

  const json& vars = require(doc, "variables");
  if (!vars.is_array()) throw SchemaError("'variables' must be an array");
  std::vector<std::string> names;
  std::vector<std::uint32_t> weights;
  for (const json& v : vars) {
    if (v.is_string()) {
      names.push_back(v.get<std::string>());
      weights.push_back(1);
      continue;
    }
    if (!v.is_object()) throw SchemaError("each variable must be an object or a name");
    names.push_back(require_string(require(v, "name"), "variable name"));
    std::int64_t weight = 1;
    if (v.contains("weight")) {
      if (!v.at("weight").is_number_integer())
        throw SchemaError("weight of '" + names.back() + "' must be an integer");
      weight = v.at("weight").get<std::int64_t>();
    }
    if (weight < 1 || weight > 0xFFFFFFFFLL)
      throw ValidationError("weight of '" + names.back() + "' must be a positive integer");
    weights.push_back(static_cast<std::uint32_t>(weight));
  }
  Alphabet alphabet(names, weights);

  OrderKind kind = OrderKind::graded_lex;
  std::vector<Letter> precedence;
  for (std::size_t i = 0; i < alphabet.size(); ++i) precedence.push_back(static_cast<Letter>(i));
  if (doc.contains("order")) {
    const json& order = doc.at("order");
    if (!order.is_object()) throw SchemaError("'order' must be an object");
    if (order.contains("kind")) kind = parse_order_kind(require_string(order.at("kind"), "order kind"));
    if (order.contains("precedence")) {
      const json& prec = order.at("precedence");
      if (!prec.is_array()) throw SchemaError("'precedence' must be an array of names");
      precedence.clear();
      for (const json& p : prec) {
        std::string name = require_string(p, "precedence entry");
        auto idx = alphabet.index_of(name);
        if (!idx) throw ValidationError("precedence names unknown variable '" + name + "'");
        precedence.push_back(*idx);
      }
    }
  }
  MonomialOrder order(alphabet, kind, std::move(precedence));

  std::vector<std::string> texts;
  std::vector<Polynomial> relations;
  if (doc.contains("relations")) {
    const json& rels = doc.at("relations");
    if (!rels.is_array()) throw SchemaError("'relations' must be an array of strings");
    for (const json& r : rels) {
      texts.push_back(require_string(r, "relation"));
      relations.push_back(parse_polynomial(texts.back(), alphabet));
    }
  }
  return Presentation{std::move(alphabet), std::move(order), std::move(texts), std::move(relations)};
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str());
}

}  // namespace ncalg
