#include "shifted_poisson/graded_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace shifted_poisson {

GradedSpace::GradedSpace(std::map<int, std::vector<std::string>> basis_names,
                         std::vector<DifferentialEntry> differential)
    : m_basis_names(std::move(basis_names)) {
  if (m_basis_names.empty()) throw std::invalid_argument("graded space needs at least one declared degree");
  m_min_degree = m_basis_names.begin()->first;
  m_max_degree = m_basis_names.rbegin()->first;
  for (const auto& [degree, names] : m_basis_names) {
    for (const auto& name : names) {
      if (name.empty()) throw std::invalid_argument("empty basis vector name");
      if (!m_ids.emplace(name, dim()).second)
        throw std::invalid_argument("duplicate basis vector name: " + name);
      m_degrees.push_back(degree);
      m_names.push_back(name);
    }
  }

  std::map<std::pair<int, int>, Rational> diff_coeffs;
  for (const auto& entry : differential) {
    int from = id_of(entry.from);
    int to = id_of(entry.to);
    if (degree_of(to) != degree_of(from) + 1)
      throw std::invalid_argument("differential entry " + entry.from + " -> " + entry.to +
                                  " does not raise degree by one");
    diff_coeffs[{from, to}] += entry.coeff;
  }
  m_diff.assign(static_cast<std::size_t>(dim()), {});
  m_diff_transpose.assign(static_cast<std::size_t>(dim()), {});
  for (const auto& [key, coeff] : diff_coeffs) {
    if (coeff == 0) continue;
    m_zero_differential = false;
    m_diff[static_cast<std::size_t>(key.first)].emplace_back(key.second, coeff);
    m_diff_transpose[static_cast<std::size_t>(key.second)].emplace_back(key.first, coeff);
  }

  // d ∘ d = 0, checked on every basis vector.
  for (int id = 0; id < dim(); ++id) {
    std::map<int, Rational> square;
    for (const auto& [mid, c1] : m_diff[static_cast<std::size_t>(id)])
      for (const auto& [end, c2] : m_diff[static_cast<std::size_t>(mid)]) square[end] += c1 * c2;
    for (const auto& [end, c] : square)
      if (c != 0)
        throw std::invalid_argument("differential does not square to zero on basis vector " +
                                    name_of(id));
  }
}

int GradedSpace::dim_at(int degree) const {
  auto it = m_basis_names.find(degree);
  return it == m_basis_names.end() ? 0 : static_cast<int>(it->second.size());
}

int GradedSpace::id_of(const std::string& name) const {
  auto it = m_ids.find(name);
  if (it == m_ids.end()) throw std::invalid_argument("unknown basis vector name: " + name);
  return it->second;
}

bool GradedSpace::has_name(const std::string& name) const { return m_ids.count(name) != 0; }

std::vector<int> GradedSpace::ids_at(int degree) const {
  std::vector<int> ids;
  for (int id = 0; id < dim(); ++id)
    if (degree_of(id) == degree) ids.push_back(id);
  return ids;
}

std::vector<DifferentialEntry> GradedSpace::differential_entries() const {
  std::vector<DifferentialEntry> entries;
  for (int id = 0; id < dim(); ++id)
    for (const auto& [to, coeff] : m_diff[static_cast<std::size_t>(id)])
      entries.push_back({name_of(id), name_of(to), coeff});
  return entries;
}

Rational dual_pairing(const GradedSpace& space, int dual_id, int vector_id) {
  if (dual_id < 0 || dual_id >= space.dim() || vector_id < 0 || vector_id >= space.dim())
    throw std::invalid_argument("dual_pairing: basis id out of range");
  return dual_id == vector_id ? Rational(1) : Rational(0);
}

std::pair<int, std::vector<int>> braiding_action(const GradedSpace& space, const Permutation& perm,
                                                 const std::vector<int>& word) {
  if (static_cast<int>(word.size()) != perm.size())
    throw std::invalid_argument("braiding_action: word length and permutation size mismatch");
  std::vector<int> degrees(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) degrees[i] = space.degree_of(word[i]);
  return {koszul_sign(degrees, perm), perm.scatter(word)};
}

}  // namespace shifted_poisson
