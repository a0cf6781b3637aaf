#pragma once

#include <string>
#include <vector>

#include "ncalg/alphabet.hpp"
#include "ncalg/groebner.hpp"
#include "ncalg/order.hpp"
#include "ncalg/polynomial.hpp"

namespace ncalg {

/// A finitely presented algebra K<X>/<relations> with its grading and order.
///
/// File format (JSON):
///   {"variables": [{"name": "x1", "weight": 1}, ...],
///    "order": {"kind": "grlex" | "grevlex", "precedence": ["x1", ...]},
///    "relations": ["x2*x1 - 2*x1*x2", ...]}
/// "weight" defaults to 1, "order" to grlex in declaration order, and
/// "relations" to none.
struct Presentation {
  Alphabet alphabet;
  MonomialOrder order;
  std::vector<std::string> relation_texts;
  std::vector<Polynomial> relations;

  /// Throws ValidationError when the relations are not LM-reduced or contain 0.
  GroebnerBasis basis() const { return GroebnerBasis(relations, order); }
};

/// Throws SchemaError, ValidationError or ParseError.
Presentation parse_presentation(const std::string& json_text);
/// As above, plus IoError when the file cannot be read.
Presentation load_presentation(const std::string& path);

}  // namespace ncalg
