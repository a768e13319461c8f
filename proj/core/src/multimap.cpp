#include "shifted_poisson/multimap.hpp"

#include <stdexcept>

namespace shifted_poisson {

MultiMap::MultiMap(GradedSpacePtr space, int arity_in, int arity_out, int degree,
                   const std::vector<MapEntry>& entries)
    : m_space(std::move(space)), m_arity_in(arity_in), m_arity_out(arity_out), m_degree(degree) {
  if (!m_space) throw std::invalid_argument("multilinear map needs a space");
  if (arity_in < 0 || arity_out < 0) throw std::invalid_argument("negative arity");
  for (const auto& [in, out, coeff] : entries) {
    if (static_cast<int>(in.size()) != m_arity_in || static_cast<int>(out.size()) != m_arity_out)
      throw std::invalid_argument("entry word length does not match arity");
    int balance = 0;
    for (int id : in) {
      if (id < 0 || id >= m_space->dim()) throw std::invalid_argument("basis id out of range");
      balance -= m_space->degree_of(id);
    }
    for (int id : out) {
      if (id < 0 || id >= m_space->dim()) throw std::invalid_argument("basis id out of range");
      balance += m_space->degree_of(id);
    }
    if (balance != m_degree)
      throw std::invalid_argument("entry violates homogeneity: output minus input degree != map degree");
    if (coeff == 0) continue;
    auto [it, inserted] = m_coeffs.try_emplace(MapKey{in, out}, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) m_coeffs.erase(it);
    }
  }
}

Rational MultiMap::coeff(const IndexWord& in, const IndexWord& out) const {
  auto it = m_coeffs.find(MapKey{in, out});
  return it == m_coeffs.end() ? Rational(0) : it->second;
}

MultiMap MultiMap::scaled(const Rational& factor) const {
  MultiMap result = MultiMap::zero(m_space, m_arity_in, m_arity_out, m_degree);
  if (factor == 0) return result;
  for (const auto& [key, value] : m_coeffs) result.m_coeffs.emplace(key, value * factor);
  return result;
}

MultiMap operator+(const MultiMap& a, const MultiMap& b) {
  if (a.m_space.get() != b.m_space.get() || a.m_arity_in != b.m_arity_in ||
      a.m_arity_out != b.m_arity_out || a.m_degree != b.m_degree)
    throw std::invalid_argument("adding incompatible multilinear maps");
  MultiMap result = a;
  for (const auto& [key, value] : b.m_coeffs) {
    auto [it, inserted] = result.m_coeffs.try_emplace(key, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) result.m_coeffs.erase(it);
    }
  }
  return result;
}

MultiMap operator-(const MultiMap& a, const MultiMap& b) { return a + b.scaled(Rational(-1)); }

bool MultiMap::operator==(const MultiMap& other) const {
  return m_space.get() == other.m_space.get() && m_arity_in == other.m_arity_in &&
         m_arity_out == other.m_arity_out && m_degree == other.m_degree &&
         m_coeffs == other.m_coeffs;
}

int MultiMap::word_degree(const IndexWord& word) const {
  int total = 0;
  for (int id : word) total += m_space->degree_of(id);
  return total;
}

MultiMap hom_differential(const MultiMap& map) {
  const GradedSpace& space = *map.space();
  std::vector<MapEntry> entries;
  const int sign_map = (map.degree() & 1) ? -1 : 1;
  for (const auto& [key, coeff] : map.coeffs()) {
    // d ∘ L: apply d to each output slot, with the Koszul sign of moving d past
    // the outputs to its left.
    int left_sign = 1;
    for (std::size_t slot = 0; slot < key.out.size(); ++slot) {
      int id = key.out[slot];
      for (const auto& [to, dc] : space.differential(id)) {
        IndexWord out = key.out;
        out[slot] = to;
        entries.emplace_back(key.in, out, Rational(left_sign) * dc * coeff);
      }
      if (space.degree_of(id) & 1) left_sign = -left_sign;
    }
    // -(-1)^{|L|} L ∘ d: for each input slot, sum over basis vectors y whose
    // differential hits the slot's id; the derivation sign counts the inputs to
    // the left of the slot (with y's degree = slot degree - 1, which has the
    // same parity shift absorbed in the overall bookkeeping below).
    left_sign = 1;
    for (std::size_t slot = 0; slot < key.in.size(); ++slot) {
      int id = key.in[slot];
      for (const auto& [from, dc] : space.differential_transpose(id)) {
        IndexWord in = key.in;
        in[slot] = from;
        entries.emplace_back(in, key.out, Rational(-sign_map * left_sign) * dc * coeff);
      }
      if (space.degree_of(id) & 1) left_sign = -left_sign;
    }
  }
  return MultiMap(map.space(), map.arity_in(), map.arity_out(), map.degree() + 1, entries);
}

}  // namespace shifted_poisson
