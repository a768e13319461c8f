#pragma once

#include "shifted_poisson/permutation.hpp"
#include "shifted_poisson/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace shifted_poisson {

/// One term of a differential: d(basis vector `from`) contains `coeff` * (basis vector `to`).
struct DifferentialEntry {
  std::string from;
  std::string to;
  Rational coeff;
};

/// Finite-dimensional Z-graded vector space with a chosen homogeneous basis and
/// a degree +1 differential with d^2 = 0 (checked at construction).
///
/// Basis vectors are addressed by a flat id (0-based, ordered by ascending degree,
/// then by declaration order within the degree). Names must be globally unique.
class GradedSpace {
 public:
  /// `basis_names`: degree -> ordered list of basis vector names (may be empty to
  /// declare a degree with dimension zero, which still extends the degree span).
  /// Throws std::invalid_argument on duplicate names, unknown names in the
  /// differential, wrong differential degree, or d∘d != 0.
  GradedSpace(std::map<int, std::vector<std::string>> basis_names,
              std::vector<DifferentialEntry> differential = {});

  int dim() const { return static_cast<int>(m_degrees.size()); }
  int min_degree() const { return m_min_degree; }
  int max_degree() const { return m_max_degree; }
  int dim_at(int degree) const;

  int degree_of(int id) const { return m_degrees[static_cast<std::size_t>(id)]; }
  const std::string& name_of(int id) const { return m_names[static_cast<std::size_t>(id)]; }
  /// Throws std::invalid_argument for unknown names.
  int id_of(const std::string& name) const;
  bool has_name(const std::string& name) const;

  /// Ids in a given degree, ascending.
  std::vector<int> ids_at(int degree) const;

  /// d(e_id) as a sparse list of (id, coefficient), ordered by id.
  const std::vector<std::pair<int, Rational>>& differential(int id) const {
    return m_diff[static_cast<std::size_t>(id)];
  }
  /// The vectors whose differential contains e_id: list of (source id, coefficient).
  const std::vector<std::pair<int, Rational>>& differential_transpose(int id) const {
    return m_diff_transpose[static_cast<std::size_t>(id)];
  }
  bool has_zero_differential() const { return m_zero_differential; }

  /// The raw differential entries, in canonical (from, to) id order.
  std::vector<DifferentialEntry> differential_entries() const;

  const std::map<int, std::vector<std::string>>& basis_names() const { return m_basis_names; }

 private:
  std::map<int, std::vector<std::string>> m_basis_names;
  std::vector<int> m_degrees;
  std::vector<std::string> m_names;
  std::map<std::string, int> m_ids;
  std::vector<std::vector<std::pair<int, Rational>>> m_diff;
  std::vector<std::vector<std::pair<int, Rational>>> m_diff_transpose;
  int m_min_degree = 0;
  int m_max_degree = 0;
  bool m_zero_differential = true;
};

using GradedSpacePtr = std::shared_ptr<const GradedSpace>;

/// Evaluation of the canonical dual-basis pairing: <theta^a, e_b> = delta_{ab},
/// where both arguments are given as basis ids of the same space (the first is
/// interpreted as the dual-basis covector with the same id).
Rational dual_pairing(const GradedSpace& space, int dual_id, int vector_id);

/// Signed action of a permutation on a word of basis vectors: returns the
/// Koszul sign of the rearrangement and the scattered id word
/// (result[perm[i]] = word[i]).
std::pair<int, std::vector<int>> braiding_action(const GradedSpace& space, const Permutation& perm,
                                                 const std::vector<int>& word);

}  // namespace shifted_poisson
