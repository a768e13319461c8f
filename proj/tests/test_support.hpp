#pragma once

// Shared helpers for the test suite: deterministic random generators for
// graded spaces and multilinear maps, and independent oracle implementations
// of the sign conventions, used to cross-check the engine entry points.

#include "shifted_poisson/classify.hpp"
#include "shifted_poisson/examples.hpp"
#include "shifted_poisson/linfty.hpp"
#include "shifted_poisson/multimap.hpp"
#include "shifted_poisson/permutation.hpp"
#include "shifted_poisson/polyvector.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace test_support {

using shifted_poisson::GradedSpace;
using shifted_poisson::GradedSpacePtr;
using shifted_poisson::IndexWord;
using shifted_poisson::MapEntry;
using shifted_poisson::MapKey;
using shifted_poisson::MultiMap;
using shifted_poisson::Rational;

using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Small random rational, possibly zero.
inline Rational rand_rational(Rng& rng) {
  const int num = rand_int(rng, -4, 4);
  const int den = rand_int(rng, 1, 3);
  return Rational(num) / den;
}

inline Rational rand_nonzero_rational(Rng& rng) {
  Rational r;
  do {
    r = rand_rational(rng);
  } while (r == 0);
  return r;
}

// ---------------------------------------------------------------------------
// Independent sign oracles.
// ---------------------------------------------------------------------------

/// Sign of permuting a word whose letters have the given degrees, where every
/// inverted pair (i, j) with i < j contributes (-1)^{extra + deg_i * deg_j}.
/// extra = 0 is the bare Koszul sign, extra = 1 the antisymmetric sign,
/// extra = n the n-symmetric sign. Written directly from the definition,
/// independent of the library's koszul_sign.
inline int oracle_pair_sign(const std::vector<int>& degrees, const std::vector<int>& images,
                            int extra) {
  int sign = 1;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j] && (((extra + degrees[i] * degrees[j]) % 2) + 2) % 2 == 1)
        sign = -sign;
  return sign;
}

/// (-1)^{#inversions}, independent of Permutation::signature.
inline int oracle_signature(const std::vector<int>& images) {
  int sign = 1;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) sign = -sign;
  return sign;
}

/// Scatter convention, reimplemented: result[images[i]] = word[i].
template <typename T>
inline std::vector<T> oracle_scatter(const std::vector<T>& word, const std::vector<int>& images) {
  std::vector<T> result(word.size());
  for (std::size_t i = 0; i < word.size(); ++i)
    result[static_cast<std::size_t>(images[i])] = word[i];
  return result;
}

/// All image vectors of S_k via std::next_permutation (independent of
/// all_permutations).
inline std::vector<std::vector<int>> oracle_permutations(int k) {
  std::vector<int> images(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) images[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> all;
  do {
    all.push_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return all;
}

/// Brute-force symmetry projector: the group average over S_l x S_m with
/// antisymmetric Koszul signs on inputs and n-symmetric Koszul signs on
/// outputs. Quadratic blow-up, fine for test arities. Returns the expanded
/// coefficient table.
inline std::map<MapKey, Rational> oracle_project(const MultiMap& map, int n) {
  const GradedSpace& space = *map.space();
  const auto perms_in = oracle_permutations(map.arity_in());
  const auto perms_out = oracle_permutations(map.arity_out());
  std::map<MapKey, Rational> acc;
  for (const auto& [key, coeff] : map.coeffs()) {
    std::vector<int> degs_in, degs_out;
    for (int id : key.in) degs_in.push_back(space.degree_of(id));
    for (int id : key.out) degs_out.push_back(space.degree_of(id));
    for (const auto& p_in : perms_in) {
      const int s_in = oracle_pair_sign(degs_in, p_in, 1);
      const IndexWord in2 = oracle_scatter(key.in, p_in);
      for (const auto& p_out : perms_out) {
        const int s_out = oracle_pair_sign(degs_out, p_out, n);
        const IndexWord out2 = oracle_scatter(key.out, p_out);
        acc[MapKey{in2, out2}] += coeff * s_in * s_out;
      }
    }
  }
  Rational scale(1);
  scale /= static_cast<int>(perms_in.size());
  scale /= static_cast<int>(perms_out.size());
  std::map<MapKey, Rational> result;
  for (const auto& [key, value] : acc) {
    const Rational v = value * scale;
    if (v != 0) result[key] = v;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Random graded spaces and maps.
// ---------------------------------------------------------------------------

/// Random graded space of total dimension in [1, max_total_dim], degrees
/// within [-2, 2]. When with_differential is set, a random partial matching
/// from degree k to k+1 (sources and targets disjoint) provides a square-zero
/// differential.
inline GradedSpacePtr random_space(Rng& rng, int max_total_dim, bool with_differential) {
  const int total = rand_int(rng, 1, max_total_dim);
  const int lowest = rand_int(rng, -2, 1);
  // When a differential is requested, spread the basis over at least two
  // adjacent degrees so that nonzero differentials are actually possible.
  const int degree_count = with_differential
                               ? rand_int(rng, 2, std::max(2, std::min(3, 2 - lowest + 1)))
                               : rand_int(rng, 1, std::min(3, 2 - lowest + 1));
  std::map<int, std::vector<std::string>> basis;
  std::vector<std::pair<std::string, int>> names;  // (name, degree)
  for (int i = 0; i < total; ++i) {
    const int deg = lowest + rand_int(rng, 0, degree_count - 1);
    std::string name = "g" + std::to_string(i);
    basis[deg].push_back(name);
    names.emplace_back(name, deg);
  }
  std::vector<shifted_poisson::DifferentialEntry> diff;
  if (with_differential) {
    std::vector<int> used;  // indices already a source or a target
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (std::find(used.begin(), used.end(), static_cast<int>(i)) != used.end()) continue;
      if (rand_int(rng, 0, 3) == 0) continue;  // ~3/4 of candidates become sources
      for (std::size_t j = 0; j < names.size(); ++j) {
        if (i == j) continue;
        if (std::find(used.begin(), used.end(), static_cast<int>(j)) != used.end()) continue;
        if (names[j].second != names[i].second + 1) continue;
        diff.push_back({names[i].first, names[j].first, rand_nonzero_rational(rng)});
        used.push_back(static_cast<int>(i));
        used.push_back(static_cast<int>(j));
        break;
      }
    }
  }
  return std::make_shared<const GradedSpace>(basis, diff);
}

/// Random homogeneous MultiMap of the given arities. Picks a target internal
/// degree from a random seed entry, then samples entries of that degree.
/// May return a zero map when no compatible entries exist.
inline MultiMap random_multimap(const GradedSpacePtr& space, int arity_in, int arity_out,
                                Rng& rng, int max_entries = 6) {
  const int dim = space->dim();
  auto random_word = [&](int arity) {
    IndexWord word;
    for (int i = 0; i < arity; ++i) word.push_back(rand_int(rng, 0, dim - 1));
    return word;
  };
  auto word_degree = [&](const IndexWord& word) {
    int deg = 0;
    for (int id : word) deg += space->degree_of(id);
    return deg;
  };
  const IndexWord seed_in = random_word(arity_in);
  const IndexWord seed_out = random_word(arity_out);
  const int degree = word_degree(seed_out) - word_degree(seed_in);
  std::vector<MapEntry> entries;
  entries.emplace_back(seed_in, seed_out, rand_nonzero_rational(rng));
  const int extra = rand_int(rng, 0, max_entries - 1);
  for (int t = 0; t < extra; ++t) {
    const IndexWord in = random_word(arity_in);
    const IndexWord out = random_word(arity_out);
    if (word_degree(out) - word_degree(in) != degree) continue;
    entries.emplace_back(in, out, rand_rational(rng));
  }
  return MultiMap(space, arity_in, arity_out, degree, entries);
}

/// Random symmetry-projected map; may be zero when the sampled map projects
/// to zero.
inline MultiMap random_projected_multimap(const GradedSpacePtr& space, int arity_in,
                                          int arity_out, int n, Rng& rng) {
  return shifted_poisson::project_symmetries(random_multimap(space, arity_in, arity_out, rng), n);
}

/// Random element of the projected component space spanned by the given basis
/// maps (zero when the basis is empty or all sampled weights vanish).
inline MultiMap random_component(const std::vector<MultiMap>& basis, const MultiMap& zero,
                                 Rng& rng) {
  MultiMap result = zero;
  for (const auto& b : basis) result = result + b.scaled(rand_rational(rng));
  return result;
}

// ---------------------------------------------------------------------------
// Pretty-printing for failure messages.
// ---------------------------------------------------------------------------

inline std::string word_string(const GradedSpace& space, const IndexWord& word) {
  std::string out = "(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ",";
    out += space.name_of(word[i]);
  }
  return out + ")";
}

inline std::string map_string(const MultiMap& map) {
  std::ostringstream os;
  os << "map(" << map.arity_in() << "->" << map.arity_out() << ", deg " << map.degree() << ") {";
  for (const auto& [key, coeff] : map.coeffs())
    os << " " << word_string(*map.space(), key.in) << "->" << word_string(*map.space(), key.out)
       << ": " << shifted_poisson::rational_to_string(coeff) << ";";
  os << " }";
  return os.str();
}

inline std::string table_string(const GradedSpace& space, const std::map<MapKey, Rational>& table) {
  std::ostringstream os;
  os << "{";
  for (const auto& [key, coeff] : table)
    os << " " << word_string(space, key.in) << "->" << word_string(space, key.out) << ": "
       << shifted_poisson::rational_to_string(coeff) << ";";
  os << " }";
  return os.str();
}

}  // namespace test_support
