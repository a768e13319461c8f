#include "shifted_poisson/polyvector.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>

namespace shifted_poisson {

namespace {

/// Number of worker threads for the composition inner loops, from
/// SHIFTED_POISSON_THREADS (default 1). Results are bit-identical for any
/// value because exact rational addition is associative and partial results
/// are merged in deterministic chunk order.
int thread_count() {
  static const int cached = [] {
    const char* raw = std::getenv("SHIFTED_POISSON_THREADS");
    if (!raw) return 1;
    char* end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1) return 1;
    return static_cast<int>(std::min<long>(value, 64));
  }();
  return cached;
}

/// Stable insertion sort of an id word, tracking the symmetry-transfer sign:
/// each adjacent swap of slots with degrees d1, d2 contributes
/// (-1)^{extra_parity + d1*d2}. extra_parity is 1 on the input side
/// (antisymmetric inputs) and n on the output side (n-symmetric outputs).
std::pair<int, IndexWord> sort_word_signed(const GradedSpace& space, IndexWord word,
                                           int extra_parity) {
  int sign = 1;
  for (std::size_t i = 1; i < word.size(); ++i)
    for (std::size_t j = i; j > 0 && word[j - 1] > word[j]; --j) {
      const int d1 = space.degree_of(word[j - 1]) & 1;
      const int d2 = space.degree_of(word[j]) & 1;
      if ((extra_parity + d1 * d2) & 1) sign = -sign;
      std::swap(word[j - 1], word[j]);
    }
  return {sign, std::move(word)};
}

/// True iff the sorted word survives the symmetry projector: a repeated id is
/// allowed only when the adjacent equal-slot swap sign (-1)^{extra + deg*deg}
/// is +1, i.e. when deg + extra_parity is even.
bool sorted_word_survives(const GradedSpace& space, const IndexWord& sorted, int extra_parity) {
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1] &&
        ((space.degree_of(sorted[i]) + extra_parity) & 1) != 0)
      return false;
  return true;
}

/// |Stab| of a sorted word: product of factorials of equal-id run lengths.
long stabilizer_order(const IndexWord& sorted) {
  long order = 1;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
      ++run;
      order *= static_cast<long>(run);
    } else {
      run = 1;
    }
  }
  return order;
}

long factorial(int k) {
  long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

int parity_of_word(const GradedSpace& space, const IndexWord& word) {
  int p = 0;
  for (int id : word) p ^= space.degree_of(id) & 1;
  return p;
}

}  // namespace

int shifted_degree(const MultiMap& map, int n) {
  return map.degree() + map.arity_out() * n + map.arity_in() - n - 1;
}

MultiMap project_symmetries(const MultiMap& map, int n) {
  const GradedSpace& space = *map.space();
  const int in_extra = 1;
  const int out_extra = n & 1;

  // Accumulate every entry on the canonical (sorted-word) representative of its
  // symmetry orbit, with the sign of the sorting rearrangement.
  std::map<MapKey, Rational> canonical;
  for (const auto& [key, coeff] : map.coeffs()) {
    auto [sign_in, in_sorted] = sort_word_signed(space, key.in, in_extra);
    auto [sign_out, out_sorted] = sort_word_signed(space, key.out, out_extra);
    if (!sorted_word_survives(space, in_sorted, in_extra) ||
        !sorted_word_survives(space, out_sorted, out_extra))
      continue;
    MapKey canon{std::move(in_sorted), std::move(out_sorted)};
    canonical[std::move(canon)] += coeff * sign_in * sign_out;
  }

  // Average over the symmetry group: the canonical value picks up
  // |Stab_in|*|Stab_out| / (l! * m!), then the orbit is expanded back to
  // fully-expanded storage via the same transfer signs.
  const Rational norm =
      Rational(1, factorial(map.arity_in()) * factorial(map.arity_out()));
  std::vector<MapEntry> entries;
  for (const auto& [key, raw] : canonical) {
    if (raw == 0) continue;
    const Rational value =
        raw * norm * Rational(stabilizer_order(key.in) * stabilizer_order(key.out));
    IndexWord in_word = key.in;
    do {
      const auto [sign_in, in_back] = sort_word_signed(space, in_word, in_extra);
      (void)in_back;
      IndexWord out_word = key.out;
      do {
        const auto [sign_out, out_back] = sort_word_signed(space, out_word, out_extra);
        (void)out_back;
        entries.emplace_back(in_word, out_word, value * sign_in * sign_out);
      } while (std::next_permutation(out_word.begin(), out_word.end()));
    } while (std::next_permutation(in_word.begin(), in_word.end()));
  }
  return MultiMap(map.space(), map.arity_in(), map.arity_out(), map.degree(), entries);
}

bool is_projected(const MultiMap& map, int n) { return project_symmetries(map, n) == map; }

MultiMap compose_tilde(const MultiMap& L, const MultiMap& Lp, int n) {
  if (L.space().get() != Lp.space().get())
    throw std::invalid_argument("compose_tilde: maps live on different spaces");
  const GradedSpace& space = *L.space();
  const int m1 = L.arity_out(), l1 = L.arity_in();
  const int m2 = Lp.arity_out(), l2 = Lp.arity_in();
  const int m = m1 + m2 - 1, l = l1 + l2 - 1;
  if (m < 0 || l < 0)
    throw std::invalid_argument("compose_tilde: result arity would be negative");
  const int degree = L.degree() + Lp.degree();
  if (l1 == 0 || m2 == 0 || L.is_zero() || Lp.is_zero())
    return MultiMap::zero(L.space(), l, m, degree);

  // Overall prefactor of the composition.
  int prefactor = 1;
  if ((L.degree() & 1) && (((m2 - 1) * n + l2 - 1) & 1)) prefactor = -prefactor;
  if ((n * (m2 - 1) * (l1 - 1)) & 1) prefactor = -prefactor;
  const int lp_parity = Lp.degree() & 1;

  // Input-side split patterns: positions (among l slots) of L's own l1-1 inputs.
  const auto input_splits = shuffles(l1 - 1, l2);
  // Output-side split patterns: positions (among m slots) of L's m1 outputs.
  const auto output_splits = shuffles(m1, m2 - 1);

  const std::vector<std::pair<const MapKey*, const Rational*>> l_entries = [&] {
    std::vector<std::pair<const MapKey*, const Rational*>> v;
    v.reserve(L.entry_count());
    for (const auto& [key, c] : L.coeffs()) v.emplace_back(&key, &c);
    return v;
  }();

  // Index Lp entries by their first output id (the plugged leg).
  std::map<int, std::vector<std::pair<const MapKey*, const Rational*>>> lp_by_first_out;
  for (const auto& [key, c] : Lp.coeffs()) lp_by_first_out[key.out[0]].emplace_back(&key, &c);

  auto worker = [&](std::size_t begin, std::size_t end) {
    std::map<MapKey, Rational> acc;
    std::vector<int> z(static_cast<std::size_t>(l));
    std::vector<int> w(static_cast<std::size_t>(m));
    for (std::size_t idx = begin; idx < end; ++idx) {
      const MapKey& lkey = *l_entries[idx].first;
      const Rational& c1 = *l_entries[idx].second;
      const int plug_id = lkey.in[static_cast<std::size_t>(l1 - 1)];
      auto bucket = lp_by_first_out.find(plug_id);
      if (bucket == lp_by_first_out.end()) continue;
      for (const auto& [lpkey_ptr, c2_ptr] : bucket->second) {
        const MapKey& lpkey = *lpkey_ptr;
        const Rational base = c1 * (*c2_ptr);
        for (const auto& [sigma, sig_sign] : input_splits) {
          (void)sig_sign;
          // sigma scatters the word (a_1..a_{l1-1}, d_1..d_{l2}) into z.
          for (int i = 0; i < l1 - 1; ++i) z[static_cast<std::size_t>(sigma[i])] = lkey.in[static_cast<std::size_t>(i)];
          for (int i = 0; i < l2; ++i)
            z[static_cast<std::size_t>(sigma[l1 - 1 + i])] = lpkey.in[static_cast<std::size_t>(i)];
          int sign = prefactor;
          // Crossed input pairs (an L input appearing after an Lp input) pick up
          // the Koszul sign times the odd-shuffle signature: (-1)^{d_i d_j + 1}.
          // L's surviving inputs also move past Lp itself: (-1)^{|Lp| * deg}.
          for (int i = 0; i < l1 - 1; ++i) {
            const int pos_i = sigma[i];
            const int deg_i = space.degree_of(lkey.in[static_cast<std::size_t>(i)]) & 1;
            if (lp_parity && deg_i) sign = -sign;
            for (int jj = 0; jj < l2; ++jj) {
              const int pos_j = sigma[l1 - 1 + jj];
              if (pos_j < pos_i) {
                const int deg_j = space.degree_of(lpkey.in[static_cast<std::size_t>(jj)]) & 1;
                if (((deg_i * deg_j) + 1) & 1) sign = -sign;
              }
            }
          }
          for (const auto& [rho, rho_sign] : output_splits) {
            (void)rho_sign;
            for (int i = 0; i < m1; ++i)
              w[static_cast<std::size_t>(rho[i])] = lkey.out[static_cast<std::size_t>(i)];
            for (int i = 0; i < m2 - 1; ++i)
              w[static_cast<std::size_t>(rho[m1 + i])] = lpkey.out[static_cast<std::size_t>(1 + i)];
            int osign = sign;
            // Crossed output pairs pick up the Koszul sign times signature^n.
            for (int u = 0; u < m1; ++u) {
              const int pos_u = rho[u];
              const int deg_u = space.degree_of(lkey.out[static_cast<std::size_t>(u)]) & 1;
              for (int vv = 0; vv < m2 - 1; ++vv) {
                const int pos_v = rho[m1 + vv];
                if (pos_v < pos_u) {
                  const int deg_v = space.degree_of(lpkey.out[static_cast<std::size_t>(1 + vv)]) & 1;
                  if (((deg_u * deg_v) + n) & 1) osign = -osign;
                }
              }
            }
            MapKey key{z, w};
            auto [it, inserted] = acc.try_emplace(std::move(key), Rational(osign) * base);
            if (!inserted) {
              it->second += Rational(osign) * base;
              if (it->second == 0) acc.erase(it);
            }
          }
        }
      }
    }
    return acc;
  };

  const int threads = std::min<int>(thread_count(), static_cast<int>(l_entries.size()) > 0
                                                        ? static_cast<int>(l_entries.size())
                                                        : 1);
  std::map<MapKey, Rational> raw;
  if (threads <= 1) {
    raw = worker(0, l_entries.size());
  } else {
    std::vector<std::future<std::map<MapKey, Rational>>> futures;
    const std::size_t chunk = (l_entries.size() + static_cast<std::size_t>(threads) - 1) /
                              static_cast<std::size_t>(threads);
    for (int t = 0; t < threads; ++t) {
      const std::size_t begin = static_cast<std::size_t>(t) * chunk;
      const std::size_t end = std::min(l_entries.size(), begin + chunk);
      if (begin >= end) break;
      futures.push_back(std::async(std::launch::async, worker, begin, end));
    }
    for (auto& f : futures) {
      auto part = f.get();
      for (auto& [key, value] : part) {
        auto [it, inserted] = raw.try_emplace(key, value);
        if (!inserted) {
          it->second += value;
          if (it->second == 0) raw.erase(it);
        }
      }
    }
  }

  std::vector<MapEntry> entries;
  entries.reserve(raw.size());
  for (auto& [key, value] : raw) entries.emplace_back(key.in, key.out, value);
  MultiMap unprojected(L.space(), l, m, degree, entries);
  return project_symmetries(unprojected, n);
}

MultiMap schouten_bracket(const MultiMap& P, const MultiMap& Q, int n) {
  const int p = shifted_degree(P, n);
  const int q = shifted_degree(Q, n);
  MultiMap first = compose_tilde(P, Q, n);
  MultiMap second = compose_tilde(Q, P, n);
  return ((p & 1) && (q & 1)) ? first + second : first - second;
}

PolyvectorFamily::PolyvectorFamily(GradedSpacePtr space, int shift)
    : m_space(std::move(space)), m_shift(shift) {
  if (!m_space) throw std::invalid_argument("polyvector family needs a space");
}

void PolyvectorFamily::set_component(const MultiMap& component) {
  if (component.space().get() != m_space.get())
    throw std::invalid_argument("component lives on a different space");
  const int m = component.arity_out(), l = component.arity_in();
  const int expected = (1 - m) * m_shift + 2 - l;
  if (component.degree() != expected)
    throw std::invalid_argument("component (" + std::to_string(m) + "," + std::to_string(l) +
                                ") must have degree " + std::to_string(expected));
  if (!is_projected(component, m_shift))
    throw std::invalid_argument("component (" + std::to_string(m) + "," + std::to_string(l) +
                                ") is not symmetry-projected");
  m_components.insert_or_assign({m, l}, component);
}

bool PolyvectorFamily::has_component(int m, int l) const {
  return m_components.count({m, l}) != 0;
}

const MultiMap* PolyvectorFamily::component(int m, int l) const {
  auto it = m_components.find({m, l});
  return it == m_components.end() ? nullptr : &it->second;
}

int PolyvectorFamily::max_weight() const {
  int w = 0;
  for (const auto& [key, comp] : m_components) w = std::max(w, key.first);
  return w;
}

int PolyvectorFamily::max_inputs() const {
  int li = 0;
  for (const auto& [key, comp] : m_components) li = std::max(li, key.second);
  return li;
}

std::optional<ResidualEntry> ResidualReport::worst_entry() const {
  std::optional<ResidualEntry> worst;
  Rational worst_abs(0);
  for (const auto& [row, map] : rows)
    for (const auto& [key, coeff] : map.coeffs()) {
      const Rational mag = rational_abs(coeff);
      if (!worst || mag > worst_abs) {
        worst = ResidualEntry{row.first, row.second, key.in, key.out, coeff};
        worst_abs = mag;
      }
    }
  return worst;
}

ResidualReport mc_residual(const PolyvectorFamily& family, int weight_cap) {
  if (weight_cap < 1) throw std::invalid_argument("weight cap must be at least 1");
  for (const auto& [key, comp] : family.components())
    if (key.first > weight_cap)
      throw std::invalid_argument("family has a component of weight " +
                                  std::to_string(key.first) + " above the weight cap " +
                                  std::to_string(weight_cap));
  const int n = family.shift();
  const int l_max = std::max(0, 2 * family.max_inputs() - 1);

  ResidualReport report;
  for (int m = 1; m <= weight_cap; ++m) {
    for (int l = 0; l <= l_max; ++l) {
      const int row_degree = (1 - m) * n + 3 - l;
      MultiMap row = MultiMap::zero(family.space(), l, m, row_degree);
      if (const MultiMap* comp = family.component(m, l)) {
        const int exponent = (m - 1) * n + l - 1;
        row = row + hom_differential(*comp).scaled(Rational((exponent & 1) ? -1 : 1));
      }
      for (const auto& [key1, comp1] : family.components()) {
        const int m2 = m + 1 - key1.first;
        const int l2 = l + 1 - key1.second;
        if (m2 < 0 || l2 < 0) continue;
        const MultiMap* comp2 = family.component(m2, l2);
        if (!comp2) continue;
        if (key1.second == 0 || m2 == 0) continue;  // structurally zero composition
        row = row + compose_tilde(comp1, *comp2, n);
      }
      if (!row.is_zero()) report.rows.emplace(std::make_pair(m, l), std::move(row));
    }
  }
  return report;
}

std::vector<ComponentShape> enumerate_components(int N, int n, int m_max, int l_max) {
  if (N < 1 || n < 1) throw std::invalid_argument("enumerate_components: N and n must be >= 1");
  if (m_max < 2 || l_max < 0)
    throw std::invalid_argument("enumerate_components: need m_max >= 2 and l_max >= 0");
  std::vector<ComponentShape> shapes;
  for (int m = 2; m <= m_max; ++m)
    for (int l = 0; l <= l_max; ++l) {
      const int degree = (1 - m) * n + 2 - l;
      // Realizable on degrees [-N+1, 0]: outputs reach at most 0 and at least
      // m(-N+1); inputs likewise, so the degree must sit in [m(-N+1), l(N-1)].
      if (degree >= m * (-N + 1) && degree <= l * (N - 1)) shapes.push_back({m, l, degree});
    }
  return shapes;
}

}  // namespace shifted_poisson
