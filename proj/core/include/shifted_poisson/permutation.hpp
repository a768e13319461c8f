#pragma once

#include <utility>
#include <vector>

namespace shifted_poisson {

/// Permutation of {0, ..., k-1} in scatter convention: images[i] is the slot
/// where element i lands, so the permuted word w' of a word w satisfies
/// w'[images[i]] = w[i].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int k);

  int size() const { return static_cast<int>(m_images.size()); }
  int operator[](int i) const { return m_images[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return m_images; }

  bool is_identity() const;

  /// Permutation sending images[i] back to i.
  Permutation inverse() const;

  /// Composite "apply *this first, then after": composite[i] = after[(*this)[i]].
  Permutation then(const Permutation& after) const;

  /// (-1)^{number of inversions}, an inversion being a pair i < j with images[i] > images[j].
  int signature() const;

  /// Applies the permutation to a word: result[images[i]] = word[i].
  template <typename T>
  std::vector<T> scatter(const std::vector<T>& word) const {
    std::vector<T> result(word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
      result[static_cast<std::size_t>(m_images[i])] = word[i];
    return result;
  }

  bool operator==(const Permutation& other) const { return m_images == other.m_images; }

 private:
  std::vector<int> m_images;
};

/// Koszul sign for permuting a word of homogeneous elements with the given
/// degrees: the product of (-1)^{deg_i * deg_j} over all pairs i < j whose
/// order the permutation inverts (i.e. places element j before element i).
int koszul_sign(const std::vector<int>& degrees, const Permutation& perm);

/// All (k1,k2)-shuffles paired with their signatures, in lexicographic order
/// of the set of final positions of the first block. A shuffle keeps the
/// relative order inside each block.
std::vector<std::pair<Permutation, int>> shuffles(int k1, int k2);

/// All permutations of {0,...,k-1} in lexicographic order of their image words.
std::vector<Permutation> all_permutations(int k);

}  // namespace shifted_poisson
