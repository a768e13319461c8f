#include "shifted_poisson/examples.hpp"

#include <memory>
#include <stdexcept>

namespace shifted_poisson {

namespace {

/// Assembles the antisymmetrized binary bracket from the structure constants
/// given for i < j only: [e_i, e_j] = sum_k values[{i,j,k}] e_k.
MultiMap bracket_from_constants(const GradedSpacePtr& space,
                                const std::vector<std::tuple<int, int, int, Rational>>& constants) {
  std::vector<MapEntry> entries;
  for (const auto& [i, j, k, c] : constants) {
    entries.emplace_back(IndexWord{i, j}, IndexWord{k}, c);
    entries.emplace_back(IndexWord{j, i}, IndexWord{k}, -c);
  }
  return MultiMap(space, 2, 1, 0, entries);
}

}  // namespace

LieNAlgebra make_2dim_nonabelian() {
  auto space = std::make_shared<const GradedSpace>(
      std::map<int, std::vector<std::string>>{{0, {"a", "b"}}});
  MultiMap l2 = bracket_from_constants(space, {{0, 1, 1, Rational(1)}});
  return LieNAlgebra(space, 1, {{2, l2}});
}

LieNAlgebra make_sl2() {
  auto space = std::make_shared<const GradedSpace>(
      std::map<int, std::vector<std::string>>{{0, {"e", "h", "f"}}});
  const int e = 0, h = 1, f = 2;
  MultiMap l2 = bracket_from_constants(space, {
                                                  {h, e, e, Rational(2)},
                                                  {h, f, f, Rational(-2)},
                                                  {e, f, h, Rational(1)},
                                              });
  return LieNAlgebra(space, 1, {{2, l2}});
}

LieNAlgebra make_gl(int k) {
  if (k < 1) throw std::invalid_argument("gl(k) needs k >= 1");
  std::vector<std::string> names;
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b) names.push_back("E" + std::to_string(a) + std::to_string(b));
  auto space = std::make_shared<const GradedSpace>(
      std::map<int, std::vector<std::string>>{{0, names}});
  auto id_of = [k](int a, int b) { return a * k + b; };  // 0-based indices

  std::vector<MapEntry> entries;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
          // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
          std::map<int, Rational> value;
          if (b == c) value[id_of(a, d)] += 1;
          if (d == a) value[id_of(c, b)] -= 1;
          for (const auto& [out, coeff] : value) {
            if (coeff == 0) continue;
            entries.emplace_back(IndexWord{id_of(a, b), id_of(c, d)}, IndexWord{out}, coeff);
          }
        }
  MultiMap l2(space, 2, 1, 0, entries);
  return LieNAlgebra(space, 1, {{2, l2}});
}

LieNAlgebra make_heisenberg() {
  auto space = std::make_shared<const GradedSpace>(
      std::map<int, std::vector<std::string>>{{0, {"x", "y", "z"}}});
  MultiMap l2 = bracket_from_constants(space, {{0, 1, 2, Rational(1)}});
  return LieNAlgebra(space, 1, {{2, l2}});
}

LieNAlgebra make_abelian_shifted(int dim) {
  if (dim < 1) throw std::invalid_argument("abelian shifted algebra needs dimension >= 1");
  std::vector<std::string> names;
  if (dim == 1) {
    names.push_back("c");
  } else {
    for (int i = 1; i <= dim; ++i) names.push_back("c" + std::to_string(i));
  }
  auto space = std::make_shared<const GradedSpace>(
      std::map<int, std::vector<std::string>>{{-1, names}, {0, {}}});
  return LieNAlgebra(space, 2, {});
}

Matrix killing_form(const LieNAlgebra& algebra) {
  const auto ids = algebra.space()->ids_at(0);
  const std::size_t n = ids.size();
  // ad tables: ad[i][a][b] = coefficient of e_b in [e_i, e_a].
  std::vector<Matrix> ad(n, Matrix(n, Vector(n, Rational(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& [out, c] : algebra.bracket2(ids[i], ids[a]))
        for (std::size_t b = 0; b < n; ++b)
          if (ids[b] == out) ad[i][a][b] = c;

  Matrix killing(n, Vector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational trace(0);
      // (ad_i ad_j)_{aa} = sum_b ad_j[a][b] * ad_i[b][a]
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) trace += ad[j][a][b] * ad[i][b][a];
      killing[i][j] = trace;
    }
  return killing;
}

MultiMap killing_cocycle(const LieNAlgebra& algebra) {
  const auto ids = algebra.space()->ids_at(0);
  const Matrix killing = killing_form(algebra);
  std::map<int, std::size_t> position;
  for (std::size_t i = 0; i < ids.size(); ++i) position[ids[i]] = i;

  std::vector<MapEntry> entries;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = 0; j < ids.size(); ++j)
      for (std::size_t k = 0; k < ids.size(); ++k) {
        Rational value(0);
        for (const auto& [out, c] : algebra.bracket2(ids[i], ids[j]))
          value += c * killing[position[out]][k];
        if (value != 0)
          entries.emplace_back(IndexWord{ids[i], ids[j], ids[k]}, IndexWord{}, value);
      }
  return MultiMap(algebra.space(), 3, 0, 0, entries);
}

MultiMap trace_cocycle_gl(const LieNAlgebra& gl, int k) {
  const auto ids = gl.space()->ids_at(0);
  if (static_cast<int>(ids.size()) != k * k)
    throw std::invalid_argument("trace_cocycle_gl: dimension is not k^2");
  // Basis matrices E_ab in row-major id order; Tr(E_ab E_cd) = delta_bc delta_ad.
  auto row = [k](int id) { return id / k; };
  auto col = [k](int id) { return id % k; };

  std::vector<MapEntry> entries;
  for (int p = 0; p < k * k; ++p)
    for (int q = 0; q < k * k; ++q)
      for (int r = 0; r < k * k; ++r) {
        // Tr(E_p E_q E_r) with E_p = E_{ab}: nonzero iff columns chain to rows.
        auto triple_trace = [&](int s, int t, int u) -> Rational {
          return (col(s) == row(t) && col(t) == row(u) && col(u) == row(s)) ? Rational(1)
                                                                            : Rational(0);
        };
        const Rational value = triple_trace(p, q, r) - triple_trace(q, p, r);
        if (value != 0) entries.emplace_back(IndexWord{ids[p], ids[q], ids[r]}, IndexWord{}, value);
      }
  return MultiMap(gl.space(), 3, 0, 0, entries);
}

namespace {

/// Chevalley-Eilenberg closedness of an antisymmetric 3-form:
/// sum over pairs i<j of (-1)^{i+j} kappa([w_i,w_j], rest) = 0 for all
/// quadruples of basis vectors.
void check_cocycle(const LieNAlgebra& h, const MultiMap& kappa) {
  if (kappa.arity_in() != 3 || kappa.arity_out() != 0 || kappa.degree() != 0)
    throw std::invalid_argument("kappa must be a (0,3) map of degree 0");
  if (kappa.space().get() != h.space().get())
    throw std::invalid_argument("kappa lives on a different space");
  if (!is_projected(kappa, 0)) throw std::invalid_argument("kappa is not antisymmetric");

  const auto ids = h.space()->ids_at(0);
  auto kappa_of = [&](int a, int b, int c) { return kappa.coeff({a, b, c}, {}); };
  const std::size_t n = ids.size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      for (std::size_t r = q + 1; r < n; ++r)
        for (std::size_t s = r + 1; s < n; ++s) {
          const int w[4] = {ids[p], ids[q], ids[r], ids[s]};
          Rational value(0);
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
              int rest[2], t = 0;
              for (int u = 0; u < 4; ++u)
                if (u != i && u != j) rest[t++] = w[u];
              const int sign = ((i + j) & 1) ? -1 : 1;  // (-1)^{i+j}, 0-based positions
              for (const auto& [out, c] : h.bracket2(w[i], w[j]))
                value += Rational(sign) * c * kappa_of(out, rest[0], rest[1]);
            }
          if (value != 0)
            throw std::invalid_argument("kappa is not closed (cocycle identity fails)");
        }
}

}  // namespace

StringAlgebra make_string(const LieNAlgebra& h, const MultiMap& kappa) {
  if (h.N() != 1) throw std::invalid_argument("make_string needs a Lie algebra (N = 1)");
  check_cocycle(h, kappa);

  std::string central = "c";
  while (h.space()->has_name(central)) central += "c";
  std::vector<std::string> h_names;
  for (int id : h.space()->ids_at(0)) h_names.push_back(h.space()->name_of(id));

  auto space = std::make_shared<const GradedSpace>(
      std::map<int, std::vector<std::string>>{{-1, {central}}, {0, h_names}});
  const int c_id = space->id_of(central);
  std::vector<int> h_ids;
  for (const auto& name : h_names) h_ids.push_back(space->id_of(name));

  auto lift = [&](int old_id) { return space->id_of(h.space()->name_of(old_id)); };

  std::vector<MapEntry> l2_entries;
  if (const MultiMap* l2 = h.bracket(2))
    for (const auto& [key, coeff] : l2->coeffs())
      l2_entries.emplace_back(IndexWord{lift(key.in[0]), lift(key.in[1])},
                              IndexWord{lift(key.out[0])}, coeff);
  MultiMap l2(space, 2, 1, 0, l2_entries);

  std::vector<MapEntry> l3_entries;
  MultiMap kappa_lifted(space, 3, 0, 0, [&] {
    std::vector<MapEntry> entries;
    for (const auto& [key, coeff] : kappa.coeffs())
      entries.emplace_back(IndexWord{lift(key.in[0]), lift(key.in[1]), lift(key.in[2])},
                           IndexWord{}, coeff);
    return entries;
  }());
  for (const auto& [key, coeff] : kappa_lifted.coeffs())
    l3_entries.emplace_back(key.in, IndexWord{c_id}, coeff);
  MultiMap l3(space, 3, 1, -1, l3_entries);

  std::map<int, MultiMap> brackets{{2, l2}};
  if (!l3.is_zero()) brackets.emplace(3, l3);
  return StringAlgebra{LieNAlgebra(space, 2, brackets), c_id, h_ids, kappa_lifted};
}

CotangentAlgebra make_cotangent(const LieNAlgebra& h) {
  if (h.N() != 1) throw std::invalid_argument("make_cotangent needs a Lie algebra (N = 1)");
  std::vector<std::string> h_names, theta_names;
  for (int id : h.space()->ids_at(0)) {
    h_names.push_back(h.space()->name_of(id));
    theta_names.push_back("th_" + h.space()->name_of(id));
  }
  for (const auto& name : theta_names)
    if (h.space()->has_name(name))
      throw std::invalid_argument("basis name collision constructing the cotangent space: " + name);

  auto space = std::make_shared<const GradedSpace>(
      std::map<int, std::vector<std::string>>{{-1, theta_names}, {0, h_names}});
  std::vector<int> theta_ids, x_ids;
  for (const auto& name : theta_names) theta_ids.push_back(space->id_of(name));
  for (const auto& name : h_names) x_ids.push_back(space->id_of(name));

  auto lift = [&](int old_id) { return space->id_of(h.space()->name_of(old_id)); };
  std::map<int, std::size_t> h_position;
  {
    const auto old_ids = h.space()->ids_at(0);
    for (std::size_t i = 0; i < old_ids.size(); ++i) h_position[old_ids[i]] = i;
  }

  std::vector<MapEntry> entries;
  if (const MultiMap* l2 = h.bracket(2)) {
    for (const auto& [key, coeff] : l2->coeffs()) {
      // Degree-0 block is the bracket of h.
      entries.emplace_back(IndexWord{lift(key.in[0]), lift(key.in[1])},
                           IndexWord{lift(key.out[0])}, coeff);
      // Mixed block: [x, theta^a] = ad*_x theta^a = -sum_b f^a_{x b} theta^b,
      // i.e. the entry ([x_i, e_b] ∋ f^a e_a) contributes -f to (x_i, theta^a) -> theta^b.
      const std::size_t a = h_position.at(key.out[0]);
      const std::size_t b = h_position.at(key.in[1]);
      entries.emplace_back(IndexWord{lift(key.in[0]), theta_ids[a]}, IndexWord{theta_ids[b]},
                           -coeff);
      // Antisymmetric partner: [theta^a, x] = -[x, theta^a] (the Koszul sign of
      // the swap is +1 because the degrees are 0 and -1 with even product).
      entries.emplace_back(IndexWord{theta_ids[a], lift(key.in[0])}, IndexWord{theta_ids[b]},
                           coeff);
    }
  }
  MultiMap l2(space, 2, 1, 0, entries);
  return CotangentAlgebra{LieNAlgebra(space, 2, {{2, l2}}), theta_ids, x_ids};
}

std::vector<std::string> builtin_names() {
  return {"abelian1",   "abelian2",        "sl2",           "gl2",
          "heisenberg", "aff1",            "string-sl2",    "string-gl2-trace",
          "cotangent-sl2", "cotangent-heisenberg"};
}

LieNAlgebra builtin(const std::string& name) {
  if (name == "abelian1") return make_abelian_shifted(1);
  if (name == "abelian2") return make_abelian_shifted(2);
  if (name == "sl2") return make_sl2();
  if (name == "gl2") return make_gl(2);
  if (name == "heisenberg") return make_heisenberg();
  if (name == "aff1") return make_2dim_nonabelian();
  if (name == "string-sl2") {
    LieNAlgebra h = make_sl2();
    return make_string(h, killing_cocycle(h)).algebra;
  }
  if (name == "string-gl2-trace") {
    LieNAlgebra h = make_gl(2);
    return make_string(h, trace_cocycle_gl(h, 2)).algebra;
  }
  if (name == "cotangent-sl2") return make_cotangent(make_sl2()).algebra;
  if (name == "cotangent-heisenberg") return make_cotangent(make_heisenberg()).algebra;
  throw std::invalid_argument("unknown builtin example: " + name);
}

}  // namespace shifted_poisson
