#pragma once

#include "shifted_poisson/graded_space.hpp"
#include "shifted_poisson/rational.hpp"

#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace shifted_poisson {

/// Index word: basis ids of the underlying space, one per tensor slot.
using IndexWord = std::vector<int>;

/// Key of one matrix entry of a multilinear map: (input word, output word).
struct MapKey {
  IndexWord in;
  IndexWord out;
  friend bool operator<(const MapKey& a, const MapKey& b) {
    return std::tie(a.in, a.out) < std::tie(b.in, b.out);
  }
  friend bool operator==(const MapKey& a, const MapKey& b) {
    return a.in == b.in && a.out == b.out;
  }
};

/// One entry of a multilinear map as (inputs, outputs, coefficient).
using MapEntry = std::tuple<IndexWord, IndexWord, Rational>;

/// Homogeneous multilinear map g^{⊗ arity_in} -> g^{⊗ arity_out} of fixed internal
/// degree, stored as a fully-expanded sparse coefficient table over the tensor
/// basis. Immutable after construction; entries with equal keys are accumulated
/// and exact zeros dropped. Each entry must satisfy
///   sum(deg(out)) - sum(deg(in)) = degree.
class MultiMap {
 public:
  MultiMap(GradedSpacePtr space, int arity_in, int arity_out, int degree,
           const std::vector<MapEntry>& entries = {});

  static MultiMap zero(GradedSpacePtr space, int arity_in, int arity_out, int degree) {
    return MultiMap(std::move(space), arity_in, arity_out, degree);
  }

  const GradedSpacePtr& space() const { return m_space; }
  int arity_in() const { return m_arity_in; }
  int arity_out() const { return m_arity_out; }
  int degree() const { return m_degree; }

  bool is_zero() const { return m_coeffs.empty(); }
  std::size_t entry_count() const { return m_coeffs.size(); }
  const std::map<MapKey, Rational>& coeffs() const { return m_coeffs; }

  /// Coefficient at (in|out); zero if absent.
  Rational coeff(const IndexWord& in, const IndexWord& out) const;

  MultiMap scaled(const Rational& factor) const;
  friend MultiMap operator+(const MultiMap& a, const MultiMap& b);
  friend MultiMap operator-(const MultiMap& a, const MultiMap& b);
  MultiMap operator-() const { return scaled(Rational(-1)); }

  /// Same space (by identity), same arities, same degree, same coefficients.
  bool operator==(const MultiMap& other) const;
  bool operator!=(const MultiMap& other) const { return !(*this == other); }

  /// Sum of input degrees for an entry key of this map's input arity.
  int word_degree(const IndexWord& word) const;

 private:
  GradedSpacePtr m_space;
  int m_arity_in;
  int m_arity_out;
  int m_degree;
  std::map<MapKey, Rational> m_coeffs;
};

/// Differential on multilinear maps: ∂L = d ∘ L - (-1)^{|L|} L ∘ d, where the
/// space differential d acts on tensor words as a graded derivation. Raises the
/// internal degree by one and preserves arities.
MultiMap hom_differential(const MultiMap& map);

}  // namespace shifted_poisson
