#pragma once

#include "shifted_poisson/linfty.hpp"
#include "shifted_poisson/multimap.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shifted_poisson {

/// In-memory form of a problem document: a Lie N-algebra together with an
/// optional shift and optional candidate polyvector components. A component's
/// weight is its output arity and its input count is its input arity.
struct ProblemDocument {
  explicit ProblemDocument(LieNAlgebra algebra_in) : algebra(std::move(algebra_in)) {}

  std::string task;  ///< requested task name; empty when the document has none
  LieNAlgebra algebra;
  std::optional<int> shift;
  std::vector<MultiMap> components;
};

/// Parses the JSON problem format (see docs/format.md). The number N of the
/// algebra is inferred from the basis degrees. Throws std::invalid_argument
/// with a diagnostic message on malformed or inconsistent input.
ProblemDocument parse_document(const std::string& text);

/// Canonical serialization: fixed key order, basis degrees ascending, map
/// entries in tensor multi-index order, rationals rendered as "p" or "p/q".
/// serialize(parse(s)) == s holds for every canonical document s.
std::string serialize_document(const ProblemDocument& document);

}  // namespace shifted_poisson
