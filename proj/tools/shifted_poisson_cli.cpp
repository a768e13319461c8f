#include "shifted_poisson/classify.hpp"
#include "shifted_poisson/document.hpp"
#include "shifted_poisson/examples.hpp"
#include "shifted_poisson/linfty.hpp"
#include "shifted_poisson/polyvector.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sp = shifted_poisson;

namespace {

struct LoadedProblem {
  std::string label;
  sp::LieNAlgebra algebra;
  std::optional<int> shift;
  std::vector<sp::MultiMap> components;

  explicit LoadedProblem(sp::LieNAlgebra algebra_in) : algebra(std::move(algebra_in)) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string basename_of(const std::string& path) {
  const std::size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

std::pair<int, int> parse_shape(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma != std::string::npos) {
    try {
      const int m = std::stoi(text.substr(0, comma));
      const int l = std::stoi(text.substr(comma + 1));
      return {m, l};
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("component shape '" + text + "' must look like \"m,l\"");
}

std::string shape_text(int m, int l) {
  return "(" + std::to_string(m) + "," + std::to_string(l) + ")";
}

std::string word_names(const sp::IndexWord& word, const sp::GradedSpace& space) {
  std::string out = "(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ",";
    out += space.name_of(word[i]);
  }
  return out + ")";
}

void print_map_entries(std::ostream& os, const sp::MultiMap& map, const char* indent) {
  for (const auto& [key, value] : map.coeffs()) {
    os << indent << word_names(key.in, *map.space()) << " -> " << word_names(key.out, *map.space())
       << ": " << sp::rational_to_string(value) << "\n";
  }
}

void print_residual_rows(std::ostream& os, const sp::ResidualReport& report) {
  for (const auto& [shape, row] : report.rows) {
    const std::size_t terms = row.coeffs().size();
    os << "residual row " << shape_text(shape.first, shape.second) << " [degree " << row.degree()
       << ", " << terms << (terms == 1 ? " term" : " terms") << "]:\n";
    print_map_entries(os, row, "  ");
  }
}

void print_problem_header(std::ostream& os, const LoadedProblem& problem) {
  const sp::GradedSpace& space = *problem.algebra.space();
  os << "input: " << problem.label << "\n";
  os << "space: dim " << space.dim() << ", degrees [" << space.min_degree() << ","
     << space.max_degree() << "], N " << problem.algebra.N() << "\n";
  for (const auto& [arity, bracket] : problem.algebra.brackets()) {
    if (bracket.is_zero()) continue;
    const std::size_t terms = bracket.coeffs().size();
    os << "bracket arity " << arity << ": " << terms << (terms == 1 ? " term" : " terms") << "\n";
  }
}

/// Builds named candidate components on top of a built-in algebra.
std::vector<sp::MultiMap> make_candidate(const std::string& preset, const sp::LieNAlgebra& algebra,
                                         int shift) {
  const sp::GradedSpacePtr& space = algebra.space();
  if (preset == "zero") return {};
  if (preset == "casimir") {
    if (algebra.N() != 1)
      throw std::invalid_argument("candidate 'casimir' needs an ordinary Lie algebra (N=1)");
    const sp::Matrix killing = sp::killing_form(algebra);
    const int dim = space->dim();
    // Invert the Killing matrix column by column.
    sp::Matrix inverse(static_cast<std::size_t>(dim), sp::Vector(static_cast<std::size_t>(dim)));
    for (int j = 0; j < dim; ++j) {
      sp::Vector unit(static_cast<std::size_t>(dim));
      unit[static_cast<std::size_t>(j)] = 1;
      const std::optional<sp::Vector> column = sp::solve(killing, unit);
      if (!column)
        throw std::invalid_argument("candidate 'casimir': the Killing form is degenerate");
      for (int i = 0; i < dim; ++i)
        inverse[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            (*column)[static_cast<std::size_t>(i)];
    }
    std::vector<sp::MapEntry> entries;
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        const sp::Rational& value = inverse[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (value != 0) entries.emplace_back(sp::IndexWord{}, sp::IndexWord{i, j}, value);
      }
    }
    return {sp::MultiMap(space, 0, 2, 0, entries)};
  }
  if (preset == "pairing") {
    const std::vector<int> ids1 = space->ids_at(-1);
    if (ids1.size() < 2)
      throw std::invalid_argument("candidate 'pairing' needs at least two degree -1 generators");
    const std::vector<sp::MapEntry> entries = {
        sp::MapEntry{sp::IndexWord{}, sp::IndexWord{ids1[0], ids1[1]}, sp::Rational(1)},
        sp::MapEntry{sp::IndexWord{}, sp::IndexWord{ids1[1], ids1[0]}, sp::Rational(-1)}};
    return {sp::MultiMap(space, 0, 2, -2, entries)};
  }
  if (preset == "coev") {
    const std::vector<int> ids1 = space->ids_at(-1);
    const std::vector<int> ids0 = space->ids_at(0);
    if (ids1.empty() || ids1.size() != ids0.size())
      throw std::invalid_argument(
          "candidate 'coev' needs matching degree -1 and degree 0 dimensions");
    std::vector<sp::MapEntry> entries;
    for (std::size_t k = 0; k < ids1.size(); ++k) {
      entries.emplace_back(sp::IndexWord{}, sp::IndexWord{ids1[k], ids0[k]}, sp::Rational(1));
    }
    return {sp::project_symmetries(sp::MultiMap(space, 0, 2, -1, entries), shift)};
  }
  if (preset == "trace") {
    const std::vector<int> ids1 = space->ids_at(-1);
    if (ids1.size() != 1)
      throw std::invalid_argument("candidate 'trace' needs a single degree -1 generator");
    std::vector<sp::MapEntry> entries;
    for (int i = 1;; ++i) {
      const std::string name = "E" + std::to_string(i) + std::to_string(i);
      if (!space->has_name(name)) break;
      entries.emplace_back(sp::IndexWord{space->id_of(name)}, sp::IndexWord{ids1[0], ids1[0]},
                           sp::Rational(1));
    }
    if (entries.empty())
      throw std::invalid_argument("candidate 'trace' needs diagonal matrix generators E11, E22, ...");
    return {sp::MultiMap(space, 1, 2, -2, entries)};
  }
  if (preset == "unit-form") {
    const std::vector<int> ids1 = space->ids_at(-1);
    const std::vector<int> ids0 = space->ids_at(0);
    if (ids1.size() != 1 || ids0.empty())
      throw std::invalid_argument(
          "candidate 'unit-form' needs a single degree -1 generator and a degree 0 part");
    const sp::MultiMap raw(space, 0, 2, -1,
                           {sp::MapEntry{sp::IndexWord{}, sp::IndexWord{ids1[0], ids0[0]},
                                         sp::Rational(1)}});
    const sp::MultiMap form(space, 1, 2, -2,
                            {sp::MapEntry{sp::IndexWord{ids0[0]}, sp::IndexWord{ids1[0], ids1[0]},
                                          sp::Rational(1)}});
    return {sp::project_symmetries(raw, shift), form};
  }
  throw std::invalid_argument("unknown candidate '" + preset +
                              "' (known: zero, casimir, pairing, coev, trace, unit-form)");
}

LoadedProblem load_problem(const std::string& file, const std::string& builtin_name,
                           const std::string& candidate, std::optional<int> shift_flag) {
  if (!file.empty() && !builtin_name.empty())
    throw std::invalid_argument("give either a document file or --builtin, not both");
  if (file.empty() && builtin_name.empty())
    throw std::invalid_argument("give a document file or --builtin NAME");
  if (!file.empty()) {
    if (candidate != "zero")
      throw std::invalid_argument("--candidate only combines with --builtin");
    sp::ProblemDocument document = sp::parse_document(read_file(file));
    LoadedProblem problem(std::move(document.algebra));
    problem.label = "file " + basename_of(file);
    problem.shift = shift_flag ? shift_flag : document.shift;
    problem.components = std::move(document.components);
    return problem;
  }
  LoadedProblem problem(sp::builtin(builtin_name));
  problem.label = "builtin " + builtin_name;
  problem.shift = shift_flag;
  if (candidate != "zero") {
    if (!shift_flag)
      throw std::invalid_argument("--candidate needs --shift to fix the symmetry type");
    problem.components = make_candidate(candidate, problem.algebra, *shift_flag);
  }
  return problem;
}

/// Symmetry-projects the candidate components and collects them in a family;
/// warns on stderr when projection changes a component.
sp::PolyvectorFamily project_candidates(const LoadedProblem& problem, int n) {
  sp::PolyvectorFamily pi(problem.algebra.space(), n);
  for (const sp::MultiMap& component : problem.components) {
    const int m = component.arity_out();
    const int l = component.arity_in();
    if (m < 2)
      throw std::invalid_argument("component " + shape_text(m, l) +
                                  ": weight-one components are determined by the brackets");
    const sp::MultiMap projected = sp::project_symmetries(component, n);
    if (!(projected == component)) {
      std::cerr << "warning: component " << shape_text(m, l)
                << " projected onto its symmetry type\n";
    }
    if (!projected.is_zero()) pi.set_component(projected);
  }
  return pi;
}

sp::PolyvectorFamily merge_into(const sp::PolyvectorFamily& base, const sp::PolyvectorFamily& extra) {
  sp::PolyvectorFamily merged = base;
  for (const auto& [shape, component] : extra.components()) {
    if (!component.is_zero()) merged.set_component(component);
  }
  return merged;
}

int weight_cap(const sp::LieNAlgebra& algebra, const sp::PolyvectorFamily& family,
               std::optional<int> flag) {
  if (flag) return *flag;
  int cap = 2 * algebra.N() + 2;
  for (const auto& [shape, component] : family.components()) cap = std::max(cap, 2 * shape.first - 1);
  return cap;
}

int cmd_check_linfty(const LoadedProblem& problem) {
  print_problem_header(std::cout, problem);
  const sp::ResidualReport report = sp::check_linfty(problem.algebra);
  if (report.zero()) {
    std::cout << "homotopy residual: zero\nverdict: consistent\n";
    return 0;
  }
  print_residual_rows(std::cout, report);
  std::cout << "homotopy residual: nonzero\nverdict: violated\n";
  return 1;
}

void run_specialized(const sp::LieNAlgebra& algebra, const sp::PolyvectorFamily& pi, int n) {
  const int N = algebra.N();
  std::optional<sp::CheckResult> result;
  if (N == 1 && n == 2) {
    const sp::MultiMap* T = pi.component(2, 0);
    const sp::MultiMap zero = sp::MultiMap::zero(algebra.space(), 0, 2, 0);
    result = sp::verify_2shifted_lie(algebra, T ? *T : zero);
  } else if (N == 1 && n == 1) {
    const sp::MultiMap* cobracket = pi.component(2, 1);
    const sp::MultiMap* trivector = pi.component(3, 0);
    const sp::MultiMap zero_cobracket = sp::MultiMap::zero(algebra.space(), 1, 2, 0);
    const sp::MultiMap zero_trivector = sp::MultiMap::zero(algebra.space(), 0, 3, 0);
    result = sp::verify_1shifted_lie(algebra, cobracket ? *cobracket : zero_cobracket,
                                     trivector ? *trivector : zero_trivector);
  } else if (N == 2 && n >= 2 && n <= 4) {
    result = sp::verify_lie2_shifted(algebra, pi, n);
  }
  if (!result) {
    std::cout << "specialized identities: none for N " << N << ", shift " << n
              << "; generic residual only\n";
    return;
  }
  if (result->valid()) {
    std::cout << "specialized identities: all hold\n";
  } else {
    std::cout << "specialized identities: violated\n";
    for (const std::string& name : result->failed_identities) {
      std::cout << "  failed: " << name << "\n";
    }
  }
}

int cmd_check_poisson(const LoadedProblem& problem, bool specialized, std::optional<int> max_weight) {
  if (!problem.shift)
    throw std::invalid_argument("check-poisson needs a shift (document \"shift\" or --shift)");
  const int n = *problem.shift;
  print_problem_header(std::cout, problem);
  std::cout << "shift: " << n << "\n";

  const sp::PolyvectorFamily pi = project_candidates(problem, n);
  if (pi.components().empty()) {
    std::cout << "candidate components: none\n";
  } else {
    std::cout << "candidate components:";
    for (const auto& [shape, component] : pi.components()) {
      std::cout << " " << shape_text(shape.first, shape.second) << " ["
                << component.coeffs().size() << " terms]";
    }
    std::cout << "\n";
  }

  const sp::PolyvectorFamily full =
      merge_into(sp::weight_one_family(problem.algebra, n), pi);
  const sp::ResidualReport report = sp::mc_residual(full, weight_cap(problem.algebra, full, max_weight));
  if (!report.zero()) print_residual_rows(std::cout, report);
  std::cout << "residual: " << (report.zero() ? "zero" : "nonzero") << "\n";

  if (specialized) run_specialized(problem.algebra, pi, n);

  std::cout << "verdict: " << (report.zero() ? "verified" : "violated") << "\n";
  return report.zero() ? 0 : 1;
}

int cmd_enumerate(int N, int n, int m_max, int l_max) {
  if (N < 1) throw std::invalid_argument("enumerate: N must be at least 1");
  if (n < 1) throw std::invalid_argument("enumerate: the shift must be at least 1");
  std::cout << "admissible components: N " << N << ", shift " << n << ", m <= " << m_max
            << ", l <= " << l_max << "\n";
  const std::vector<sp::ComponentShape> shapes = sp::enumerate_components(N, n, m_max, l_max);
  for (const sp::ComponentShape& shape : shapes) {
    std::cout << "  " << shape_text(shape.m, shape.l) << "  degree " << shape.degree << "\n";
  }
  std::cout << "total: " << shapes.size() << "\n";
  if (n > 2 * N && shapes.empty()) {
    std::cout << "note: when the shift exceeds 2N, the forced degree (1-m)n+2-l lies outside the "
                 "realizable range for every weight m >= 2, so only the bracket family remains\n";
  }
  return 0;
}

int cmd_solve(const LoadedProblem& problem, const std::vector<std::string>& unknown_flags,
              bool all_unknowns, bool verify, std::optional<int> max_weight) {
  if (!problem.shift)
    throw std::invalid_argument("solve needs a shift (document \"shift\" or --shift)");
  const int n = *problem.shift;
  print_problem_header(std::cout, problem);
  std::cout << "shift: " << n << "\n";

  const sp::PolyvectorFamily fixed = project_candidates(problem, n);
  if (fixed.components().empty()) {
    std::cout << "fixed components: none\n";
  } else {
    std::cout << "fixed components:";
    for (const auto& [shape, component] : fixed.components())
      std::cout << " " << shape_text(shape.first, shape.second);
    std::cout << "\n";
  }

  std::vector<std::pair<int, int>> unknowns;
  if (all_unknowns) {
    if (!unknown_flags.empty())
      throw std::invalid_argument("give either --unknown shapes or --all-unknowns, not both");
    for (const sp::ComponentShape& shape : sp::enumerate_components(problem.algebra.N(), n, 6, 6)) {
      if (!fixed.has_component(shape.m, shape.l)) unknowns.emplace_back(shape.m, shape.l);
    }
  } else {
    for (const std::string& text : unknown_flags) unknowns.push_back(parse_shape(text));
  }
  if (unknowns.empty()) {
    std::cout << "unknowns: none\n";
  } else {
    std::cout << "unknowns:";
    for (const auto& [m, l] : unknowns) std::cout << " " << shape_text(m, l);
    std::cout << "\n";
  }

  const sp::SolutionSpace solution = sp::solve_linear_stratum(problem.algebra, n, fixed, unknowns);

  std::vector<std::pair<int, int>> surviving;
  for (const sp::SolutionSpace::Coordinate& coordinate : solution.coordinates()) {
    const std::pair<int, int> shape{coordinate.m, coordinate.l};
    if (surviving.empty() || surviving.back() != shape) surviving.push_back(shape);
  }
  std::vector<std::pair<int, int>> dropped;
  for (const auto& shape : unknowns) {
    if (std::find(surviving.begin(), surviving.end(), shape) == surviving.end())
      dropped.push_back(shape);
  }
  if (!dropped.empty()) {
    std::cout << "zero-dimensional unknowns dropped:";
    for (const auto& [m, l] : dropped) std::cout << " " << shape_text(m, l);
    std::cout << "\n";
  }
  std::cout << "coordinates: " << solution.coordinate_maps().size() << "\n";

  if (!solution.consistent()) {
    std::cout << "solution space: empty (inconsistent linear system)\n";
    return 0;
  }
  std::cout << "solution space: dimension " << solution.dimension()
            << (solution.affine_offset() ? " (affine)" : "") << "\n";

  const auto print_family = [&](const sp::PolyvectorFamily& family) {
    for (const auto& [shape, component] : family.components()) {
      const std::size_t terms = component.coeffs().size();
      std::cout << "  component " << shape_text(shape.first, shape.second) << " [" << terms
                << (terms == 1 ? " term" : " terms") << "]:\n";
      print_map_entries(std::cout, component, "    ");
    }
  };
  if (solution.affine_offset()) {
    std::cout << "affine offset:\n";
    print_family(solution.realize(*solution.affine_offset()));
  }
  for (int i = 0; i < solution.dimension(); ++i) {
    std::cout << "basis[" << i << "]:\n";
    print_family(solution.realize(solution.basis()[static_cast<std::size_t>(i)]));
  }

  if (verify) {
    const sp::PolyvectorFamily base =
        merge_into(sp::weight_one_family(problem.algebra, n), fixed);
    const int cap = weight_cap(problem.algebra, base, max_weight);
    const std::size_t coords = solution.coordinate_maps().size();
    const sp::Vector zero(coords);
    const sp::Vector& origin = solution.affine_offset() ? *solution.affine_offset() : zero;
    const auto verify_one = [&](const std::string& label, const sp::Vector& x) {
      const sp::PolyvectorFamily candidate = merge_into(base, solution.realize(x));
      int local_cap = cap;
      for (const auto& [shape, component] : candidate.components())
        local_cap = std::max(local_cap, 2 * shape.first - 1);
      const bool zero_residual = sp::mc_residual(candidate, local_cap).zero();
      std::cout << "verify " << label << ": residual " << (zero_residual ? "zero" : "nonzero")
                << "\n";
      if (!zero_residual)
        throw sp::InternalInconsistencyError("solve: reported solution has nonzero residual");
    };
    verify_one("offset", origin);
    for (int i = 0; i < solution.dimension(); ++i) {
      sp::Vector x = origin;
      const sp::Vector& k = solution.basis()[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += k[j];
      verify_one("offset+basis[" + std::to_string(i) + "]", x);
    }
  }
  return 0;
}

int cmd_builtin_list() {
  const std::vector<std::string> names = sp::builtin_names();
  std::size_t width = 0;
  for (const std::string& name : names) width = std::max(width, name.size());
  for (const std::string& name : names) {
    const sp::LieNAlgebra algebra = sp::builtin(name);
    std::cout << name << std::string(width - name.size() + 2, ' ') << "N " << algebra.N()
              << "  dim " << algebra.space()->dim() << "\n";
  }
  return 0;
}

int cmd_project(const std::string& file) {
  sp::ProblemDocument document = sp::parse_document(read_file(file));
  if (!document.components.empty()) {
    if (!document.shift)
      throw std::invalid_argument(
          "project: the document has components but no shift; the symmetry type depends on it");
    std::vector<sp::MultiMap> projected;
    for (const sp::MultiMap& component : document.components) {
      sp::MultiMap image = sp::project_symmetries(component, *document.shift);
      if (!image.is_zero()) projected.push_back(std::move(image));
    }
    document.components = std::move(projected);
  }
  std::cout << sp::serialize_document(document);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checker for shifted Poisson structures on Lie N-algebras"};
  app.require_subcommand(1);

  std::string file;
  std::string builtin_name;
  std::string candidate = "zero";
  std::optional<int> shift_flag;
  std::optional<int> max_weight;
  bool specialized = false;
  std::vector<std::string> unknown_flags;
  bool all_unknowns = false;
  bool verify = false;
  int enum_N = 1;
  int enum_n = 1;
  int m_max = 6;
  int l_max = 6;
  bool list_flag = false;

  CLI::App* check_linfty_cmd =
      app.add_subcommand("check-linfty", "check the homotopy Jacobi identities of an algebra");
  check_linfty_cmd->add_option("file", file, "problem document (JSON)");
  check_linfty_cmd->add_option("--builtin", builtin_name, "name of a built-in algebra");

  CLI::App* check_poisson_cmd = app.add_subcommand(
      "check-poisson", "check a candidate shifted Poisson structure against the residual equations");
  check_poisson_cmd->add_option("file", file, "problem document (JSON)");
  check_poisson_cmd->add_option("--builtin", builtin_name, "name of a built-in algebra");
  check_poisson_cmd->add_option("--candidate", candidate,
                                "named candidate on a built-in algebra (default: zero)");
  check_poisson_cmd->add_option("--shift", shift_flag, "shift n of the structure");
  check_poisson_cmd->add_flag("--specialized", specialized,
                              "also evaluate the matching specialized identity list");
  check_poisson_cmd->add_option("--max-weight", max_weight,
                                "cap on residual row weight (default 2N+2)");

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "list the admissible component shapes for given N and shift");
  enumerate_cmd->add_option("--N", enum_N, "the N of the Lie N-algebra")->required();
  enumerate_cmd->add_option("--n", enum_n, "the shift")->required();
  enumerate_cmd->add_option("--m-max", m_max, "largest weight to list (default 6)");
  enumerate_cmd->add_option("--l-max", l_max, "largest input count to list (default 6)");

  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "solve the residual equations for unknown components on a linear stratum");
  solve_cmd->add_option("file", file, "problem document (JSON); its components are fixed");
  solve_cmd->add_option("--builtin", builtin_name, "name of a built-in algebra");
  solve_cmd->add_option("--candidate", candidate,
                        "named fixed components on a built-in algebra (default: zero)");
  solve_cmd->add_option("--shift", shift_flag, "shift n of the structure");
  solve_cmd->add_option("--unknown", unknown_flags, "unknown component shape \"m,l\" (repeatable)");
  solve_cmd->add_flag("--all-unknowns", all_unknowns,
                      "use every admissible shape not fixed by the document");
  solve_cmd->add_flag("--verify", verify, "re-check every reported solution against the residual");
  solve_cmd->add_option("--max-weight", max_weight,
                        "cap on residual row weight (default 2N+2)");

  CLI::App* builtin_cmd = app.add_subcommand("builtin", "information about built-in algebras");
  builtin_cmd->add_flag("--list", list_flag, "list the built-in algebras");

  CLI::App* project_cmd =
      app.add_subcommand("project", "apply the symmetry projector to a document and reprint it");
  project_cmd->add_option("file", file, "problem document (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check_linfty_cmd->parsed()) {
      return cmd_check_linfty(load_problem(file, builtin_name, "zero", std::nullopt));
    }
    if (check_poisson_cmd->parsed()) {
      return cmd_check_poisson(load_problem(file, builtin_name, candidate, shift_flag), specialized,
                               max_weight);
    }
    if (enumerate_cmd->parsed()) {
      return cmd_enumerate(enum_N, enum_n, m_max, l_max);
    }
    if (solve_cmd->parsed()) {
      return cmd_solve(load_problem(file, builtin_name, candidate, shift_flag), unknown_flags,
                       all_unknowns, verify, max_weight);
    }
    if (builtin_cmd->parsed()) {
      (void)list_flag;
      return cmd_builtin_list();
    }
    if (project_cmd->parsed()) {
      return cmd_project(file);
    }
  } catch (const sp::InternalInconsistencyError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
