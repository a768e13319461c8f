#include "shifted_poisson/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace shifted_poisson {

Permutation::Permutation(std::vector<int> images) : m_images(std::move(images)) {
  std::vector<char> seen(m_images.size(), 0);
  for (int v : m_images) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("invalid permutation image list");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> images(static_cast<std::size_t>(k));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (m_images[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> images(m_images.size());
  for (int i = 0; i < size(); ++i)
    images[static_cast<std::size_t>(m_images[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& after) const {
  if (after.size() != size()) throw std::invalid_argument("size mismatch composing permutations");
  std::vector<int> images(m_images.size());
  for (int i = 0; i < size(); ++i)
    images[static_cast<std::size_t>(i)] = after[m_images[static_cast<std::size_t>(i)]];
  return Permutation(std::move(images));
}

int Permutation::signature() const {
  int sign = 1;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (m_images[static_cast<std::size_t>(i)] > m_images[static_cast<std::size_t>(j)]) sign = -sign;
  return sign;
}

int koszul_sign(const std::vector<int>& degrees, const Permutation& perm) {
  if (static_cast<int>(degrees.size()) != perm.size())
    throw std::invalid_argument("degree list and permutation size mismatch");
  int sign = 1;
  for (int i = 0; i < perm.size(); ++i)
    for (int j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j] && (degrees[static_cast<std::size_t>(i)] & 1) &&
          (degrees[static_cast<std::size_t>(j)] & 1))
        sign = -sign;
  return sign;
}

std::vector<std::pair<Permutation, int>> shuffles(int k1, int k2) {
  std::vector<std::pair<Permutation, int>> result;
  if (k1 < 0 || k2 < 0) return result;
  const int k = k1 + k2;
  // Enumerate the sets of final positions of the first block in lexicographic order.
  std::vector<int> positions(static_cast<std::size_t>(k1));
  std::iota(positions.begin(), positions.end(), 0);
  while (true) {
    std::vector<int> images(static_cast<std::size_t>(k));
    std::vector<char> taken(static_cast<std::size_t>(k), 0);
    int inversion_parity = 0;
    for (int i = 0; i < k1; ++i) {
      images[static_cast<std::size_t>(i)] = positions[static_cast<std::size_t>(i)];
      taken[static_cast<std::size_t>(positions[static_cast<std::size_t>(i)])] = 1;
      // Element i of the first block jumps over positions[i] - i second-block elements.
      inversion_parity ^= (positions[static_cast<std::size_t>(i)] - i) & 1;
    }
    int slot = 0;
    for (int i = 0; i < k2; ++i) {
      while (taken[static_cast<std::size_t>(slot)]) ++slot;
      images[static_cast<std::size_t>(k1 + i)] = slot++;
    }
    result.emplace_back(Permutation(std::move(images)), inversion_parity ? -1 : 1);

    // Next k1-subset of {0,...,k-1} in lexicographic order.
    int idx = k1 - 1;
    while (idx >= 0 && positions[static_cast<std::size_t>(idx)] == k - k1 + idx) --idx;
    if (idx < 0) break;
    ++positions[static_cast<std::size_t>(idx)];
    for (int j = idx + 1; j < k1; ++j)
      positions[static_cast<std::size_t>(j)] = positions[static_cast<std::size_t>(j - 1)] + 1;
    if (k1 == 0) break;
  }
  return result;
}

std::vector<Permutation> all_permutations(int k) {
  std::vector<int> images(static_cast<std::size_t>(k));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> result;
  do {
    result.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

}  // namespace shifted_poisson
