// Copyright 2026 The tamewild Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "formats.hpp"
#include "tamewild/equivalence.hpp"
#include "tamewild/invariants.hpp"
#include "tamewild/wildness.hpp"

namespace tamewild::cli {
namespace {

using nlohmann::json;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Parse:
    case Errc::NotPrime:
      return kParseError;
    case Errc::ShapeMismatch:
    case Errc::NotSquare:
    case Errc::ModulusMismatch:
    case Errc::ArityMismatch:
      return kShapeError;
    case Errc::TooLarge:
    case Errc::BudgetExceeded:
      return kTooLarge;
    default:
      return kParseError;
  }
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).value());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const MatrixTuple& t) {
  json parts = json::array();
  for (const Matrix& m : t.parts()) parts.push_back(to_json(m));
  return parts;
}

std::string inline_tuple(const MatrixTuple& t) {
  std::ostringstream os;
  if (t.arity() == 1) {
    os << t[0];
    return os.str();
  }
  os << '(';
  for (std::size_t k = 0; k < t.arity(); ++k) os << (k ? ", " : "") << t[k];
  os << ')';
  return os.str();
}

std::string pair_str(const std::pair<Fe, Fe>& p) {
  return "(" + std::to_string(p.first.value()) + "," + std::to_string(p.second.value()) + ")";
}

// Single square matrix from a file, or a shape error.
Matrix single_square(const MatrixFile& f, const std::string& path) {
  if (f.matrices.size() != 1) {
    throw Error(Errc::ShapeMismatch, path + ": expected one matrix, found " + std::to_string(f.matrices.size()));
  }
  if (f.rows != f.cols) {
    throw Error(Errc::NotSquare, path + ": matrix is " + std::to_string(f.rows) + "x" + std::to_string(f.cols));
  }
  return f.matrices.front();
}

MatrixTuple pair_tuple(const MatrixFile& f, const std::string& path) {
  if (f.matrices.size() != 2) {
    throw Error(Errc::ShapeMismatch, path + ": expected a pair (a = 2), found a = " +
                                         std::to_string(f.matrices.size()));
  }
  if (f.rows != f.cols) throw Error(Errc::NotSquare, path + ": pair parts must be square");
  return MatrixTuple(f.matrices);
}

void require_compatible(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(Errc::ModulusMismatch, "inputs are over different fields");
  if (a.rows() != b.rows()) throw Error(Errc::ShapeMismatch, "inputs have different sizes");
}

int cmd_invariants(const std::string& path, bool as_json, std::ostream& out) {
  const Matrix a = single_square(read_matrix_file(path), path);
  const InvariantFactors factors = invariant_factors(a);
  const Matrix rcf = rational_canonical_form(factors);
  const std::vector<Fe> spectrum = spectrum_in_field(a);
  if (as_json) {
    json j;
    j["p"] = a.field().modulus();
    j["n"] = a.rows();
    j["rank"] = mat_rank(a);
    j["det"] = mat_det(a).value();
    j["char_poly"] = to_string(factors.product());
    json spec = json::array();
    for (const Fe& e : spectrum) spec.push_back(e.value());
    j["spectrum"] = spec;
    json fs = json::array();
    for (const Poly& f : factors.factors()) fs.push_back(to_string(f));
    j["invariant_factors"] = fs;
    j["rational_canonical_form"] = to_json(rcf);
    out << j.dump(2) << '\n';
    return kYes;
  }
  out << "rank: " << mat_rank(a) << '\n';
  out << "det: " << mat_det(a) << '\n';
  out << "char_poly: " << factors.product() << '\n';
  out << "spectrum: {";
  for (std::size_t k = 0; k < spectrum.size(); ++k) out << (k ? ", " : "") << spectrum[k];
  out << "}\n";
  out << "invariant_factors: " << factors << '\n';
  out << "rational_canonical_form:\n";
  write_matrix_file(out, std::vector<Matrix>{rcf});
  return kYes;
}

void print_conjugator(const std::optional<Matrix>& s, bool as_json, const std::string& mode,
                      std::ostream& out) {
  if (as_json) {
    json j;
    j["verdict"] = s ? "YES" : "NO";
    if (!mode.empty()) j["mode"] = mode;
    if (s) j["conjugator"] = to_json(*s);
    out << j.dump(2) << '\n';
    return;
  }
  out << (s ? "YES" : "NO") << '\n';
  if (s) {
    out << "# conjugator S with S*A*S^-1 = B\n";
    write_matrix_file(out, std::vector<Matrix>{*s});
  }
}

int cmd_similar(const std::string& path_a, const std::string& path_b, const std::string& mode,
                bool as_json, std::ostream& out) {
  const Matrix a = single_square(read_matrix_file(path_a), path_a);
  const Matrix b = single_square(read_matrix_file(path_b), path_b);
  require_compatible(a, b);
  if (mode == "bruteforce") {
    const auto s = similar_bruteforce(a, b);
    print_conjugator(s, as_json, mode, out);
    return s ? kYes : kNo;
  }
  const bool yes = similar(a, b);
  if (as_json) {
    out << json{{"verdict", yes ? "YES" : "NO"}, {"mode", mode}}.dump(2) << '\n';
  } else {
    out << (yes ? "YES" : "NO") << '\n';
  }
  return yes ? kYes : kNo;
}

int cmd_simsimilar(const std::string& path_a, const std::string& path_b, bool as_json,
                   std::ostream& out) {
  const MatrixTuple t = pair_tuple(read_matrix_file(path_a), path_a);
  const MatrixTuple u = pair_tuple(read_matrix_file(path_b), path_b);
  require_compatible(t[0], u[0]);
  const auto s = sim_similar(t, u);
  print_conjugator(s, as_json, "", out);
  return s ? kYes : kNo;
}

int cmd_orbits(const std::string& problem, std::size_t n, std::uint32_t p, bool as_json,
               std::ostream& out) {
  const PrimeField field(p);
  const std::size_t arity = problem == "pairs" ? 2 : 1;
  const OrbitTable table = conjugation_orbits(n, field, arity);
  if (as_json) {
    json j;
    j["problem"] = problem;
    j["n"] = n;
    j["p"] = p;
    j["classes"] = table.count();
    json orbits = json::array();
    for (std::size_t c = 0; c < table.count(); ++c) {
      orbits.push_back({{"size", table.classes[c].size()},
                        {"representative", to_json(tuple_at_index(arity, n, field, table.representatives[c]))}});
    }
    j["orbits"] = std::move(orbits);
    out << j.dump(2) << '\n';
    return kYes;
  }
  out << "problem: " << problem << " n=" << n << " p=" << p << '\n';
  out << table.count() << " classes\n";
  for (std::size_t c = 0; c < table.count(); ++c) {
    out << "class " << c << ": size " << table.classes[c].size() << ", representative "
        << inline_tuple(tuple_at_index(arity, n, field, table.representatives[c])) << '\n';
  }
  return kYes;
}

void write_file(const std::string& path, const std::vector<Matrix>& matrices) {
  std::ofstream f(path);
  if (!f) throw Error(Errc::Parse, path + ": cannot write file");
  write_matrix_file(f, matrices);
}

int cmd_falsify(const std::string& path, std::size_t n, std::optional<std::uint32_t> p,
                std::optional<std::uint64_t> budget, const std::string& witness_prefix, bool as_json,
                std::ostream& out) {
  Transform transform = read_transform_file(path);
  if (p && *p != transform.field().modulus()) {
    throw Error(Errc::ModulusMismatch, "--p " + std::to_string(*p) + " differs from the transform's F_" +
                                           std::to_string(transform.field().modulus()));
  }
  if (budget) transform.set_step_budget(budget);
  const Verdict v = falsify_containment(transform, n, transform.field());

  if (v.witness && !witness_prefix.empty()) {
    write_file(witness_prefix + ".left.txt", v.witness->left.parts());
    write_file(witness_prefix + ".right.txt", v.witness->right.parts());
    write_file(witness_prefix + ".left_image.txt", {v.witness->left_image});
    write_file(witness_prefix + ".right_image.txt", {v.witness->right_image});
  }

  if (as_json) {
    json j;
    j["verdict"] = outcome_name(v.outcome);
    j["stage"] = v.stage;
    j["degenerate_on_scalars"] = v.degenerate_on_scalars;
    j["guard_limited"] = v.guard_limited;
    j["steps"] = v.steps_used;
    if (v.collision) {
      j["scalar_collision"] = {{"first", {v.collision->first.first.value(), v.collision->first.second.value()}},
                               {"second", {v.collision->second.first.value(), v.collision->second.second.value()}},
                               {"value", v.collision->value.value()}};
    }
    if (v.condition1_input) j["condition1_input"] = to_json(*v.condition1_input);
    if (v.witness) {
      j["witness"] = {{"left", to_json(v.witness->left)},
                      {"right", to_json(v.witness->right)},
                      {"left_image", to_json(v.witness->left_image)},
                      {"right_image", to_json(v.witness->right_image)},
                      {"pairs_simultaneously_similar", v.witness->tuples_equivalent},
                      {"images_similar", v.witness->images_similar}};
    }
    out << j.dump(2) << '\n';
  } else {
    out << "verdict: " << outcome_name(v.outcome) << '\n';
    out << "stage: " << v.stage << '\n';
    out << "degenerate_on_scalars: " << (v.degenerate_on_scalars ? "yes" : "no") << '\n';
    if (v.guard_limited) out << "guard_limited: yes (exhaustive stage skipped)\n";
    if (v.collision) {
      out << "scalar_collision: " << pair_str(v.collision->first) << ' ' << pair_str(v.collision->second)
          << " -> " << v.collision->value << '\n';
    }
    out << "steps: " << v.steps_used << '\n';
    if (v.condition1_input) {
      out << "# input whose image leaves the target problem\n";
      write_matrix_file(out, *v.condition1_input);
    }
    if (v.witness) {
      out << "pairs_simultaneously_similar: " << (v.witness->tuples_equivalent ? "yes" : "no") << '\n';
      out << "images_similar: " << (v.witness->images_similar ? "yes" : "no") << '\n';
      out << "# left pair\n";
      write_matrix_file(out, v.witness->left);
      out << "# right pair\n";
      write_matrix_file(out, v.witness->right);
      out << "# left image\n";
      write_matrix_file(out, std::vector<Matrix>{v.witness->left_image});
      out << "# right image\n";
      write_matrix_file(out, std::vector<Matrix>{v.witness->right_image});
    }
  }
  return v.falsified() ? kYes : kNotFalsified;
}

int cmd_apply(const std::string& transform_path, const std::string& matrices_path,
              std::optional<std::uint64_t> budget, std::ostream& out) {
  Transform transform = read_transform_file(transform_path);
  if (budget) transform.set_step_budget(budget);
  const MatrixFile file = read_matrix_file(matrices_path);
  if (file.rows != file.cols) throw Error(Errc::NotSquare, matrices_path + ": matrices must be square");
  if (file.field != transform.field()) throw Error(Errc::ModulusMismatch, "transform and matrices over different fields");
  const TransformResult r = apply_transform(transform, MatrixTuple(file.matrices));
  out << "# steps: " << r.steps << '\n';
  write_matrix_file(out, r.output);
  return kYes;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact similarity invariants and containment falsification over prime fields", "tamewild"};
  app.require_subcommand(1);
  bool as_json = false;

  std::string inv_path;
  auto* inv = app.add_subcommand("invariants", "Partial and full similarity invariants of one matrix");
  inv->add_option("matrix", inv_path, "matrix file")->required();
  inv->add_flag("--json", as_json, "machine-readable output");

  std::string sim_a, sim_b, mode = "invariant";
  auto* sim = app.add_subcommand("similar", "Decide similarity of two matrices");
  sim->add_option("a", sim_a, "first matrix file")->required();
  sim->add_option("b", sim_b, "second matrix file")->required();
  sim->add_option("--mode", mode, "invariant or bruteforce")->check(CLI::IsMember({"invariant", "bruteforce"}));
  sim->add_flag("--json", as_json, "machine-readable output");

  std::string ss_a, ss_b;
  auto* ss = app.add_subcommand("simsimilar", "Decide simultaneous similarity of two matrix pairs");
  ss->add_option("a", ss_a, "first pair file")->required();
  ss->add_option("b", ss_b, "second pair file")->required();
  ss->add_flag("--json", as_json, "machine-readable output");

  std::string problem = "single";
  std::size_t orb_n = 2;
  std::uint32_t orb_p = 2;
  auto* orb = app.add_subcommand("orbits", "Enumerate conjugation orbits");
  orb->add_option("--problem", problem, "single or pairs")->check(CLI::IsMember({"single", "pairs"}));
  orb->add_option("--n", orb_n, "matrix size")->check(CLI::PositiveNumber);
  orb->add_option("--p", orb_p, "prime modulus");
  orb->add_flag("--json", as_json, "machine-readable output");

  std::string fal_path, witness_prefix;
  std::size_t fal_n = 2;
  std::optional<std::uint32_t> fal_p;
  std::optional<std::uint64_t> budget;
  auto* fal = app.add_subcommand("falsify", "Refute a candidate containment of pairs in single matrices");
  fal->add_option("transform", fal_path, "transform file (2 -> 1)")->required();
  fal->add_option("--n", fal_n, "matrix size")->check(CLI::PositiveNumber);
  fal->add_option("--p", fal_p, "prime modulus (must match the transform)");
  fal->add_option("--budget", budget, "step budget per evaluated tuple");
  fal->add_option("--witness-prefix", witness_prefix, "write replayable witness files PREFIX.{left,right,left_image,right_image}.txt");
  fal->add_flag("--json", as_json, "machine-readable output");

  std::string app_transform, app_matrices;
  std::optional<std::uint64_t> app_budget;
  auto* apl = app.add_subcommand("apply", "Evaluate a transform on a matrix tuple");
  apl->add_option("transform", app_transform, "transform file")->required();
  apl->add_option("matrices", app_matrices, "matrix file holding the input tuple")->required();
  apl->add_option("--budget", app_budget, "step budget for the evaluation");

  std::vector<const char*> cargv;
  for (const std::string& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kYes;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (*inv) return cmd_invariants(inv_path, as_json, out);
    if (*sim) return cmd_similar(sim_a, sim_b, mode, as_json, out);
    if (*ss) return cmd_simsimilar(ss_a, ss_b, as_json, out);
    if (*orb) return cmd_orbits(problem, orb_n, orb_p, as_json, out);
    if (*fal) return cmd_falsify(fal_path, fal_n, fal_p, budget, witness_prefix, as_json, out);
    if (*apl) return cmd_apply(app_transform, app_matrices, app_budget, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kParseError;
}

}  // namespace tamewild::cli
