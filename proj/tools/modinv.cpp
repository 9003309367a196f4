#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modinv/modinv.hpp"

namespace fs = std::filesystem;
using namespace modinv;

namespace {

constexpr int kOk = 0, kUsage = 1, kVerify = 2;

std::string format_complex_matrix(const ComplexMatrix& a) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6);
  const bool real = a.imag().cwiseAbs().maxCoeff() < 1e-12;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      os << (j ? "  " : "") << std::setw(10) << a(i, j).real();
      if (!real) os << (a(i, j).imag() < 0 ? "-" : "+") << std::setw(8) << std::abs(a(i, j).imag()) << "i";
    }
    os << "\n";
  }
  return os.str();
}

std::optional<int> su2_level(const ModelSpec& spec) {
  if (spec.name.rfind("su2:", 0) != 0) return std::nullopt;
  return std::stoi(spec.name.substr(4));
}

int cmd_model_list() {
  for (const auto& line : catalog_listing()) std::cout << line << "\n";
  std::cout << "branching tables:";
  for (const auto& [name, _] : branching_catalog()) std::cout << " " << name;
  std::cout << "\n";
  return kOk;
}

int cmd_model_show(const std::string& arg, bool as_json) {
  ModelSpec spec = load_model(arg);
  if (as_json) {
    std::cout << model_to_json(spec).dump(2) << "\n";
    return kOk;
  }
  ModularData md = build(spec);
  std::cout << "model " << spec.name << " (" << md.m << " labels)\n";
  std::cout << std::left << std::setw(8) << "label" << std::setw(10) << "h" << "d\n";
  for (int a = 0; a < md.m; ++a)
    std::cout << std::setw(8) << spec.ring.labels[a].name << std::setw(10) << to_string(md.h[a]) << md.d(a) << "\n";
  std::cout << std::right << "global index w = " << md.w << "\n";
  if (!md.central_charge) {
    std::cout << "Gauss sum vanishes: S, T and c undefined\n";
    return kOk;
  }
  std::cout << "central charge c = " << md.c() << " mod 8\n";
  std::cout << (md.nondegenerate ? "non-degenerate" : "degenerate") << "\n";
  std::cout << "S =\n" << format_complex_matrix(md.S());
  std::cout << "T = e^(-i pi c/12) diag(exp(2 pi i h))\n";
  return kOk;
}

struct Enumerated {
  ModelSpec spec;
  ModularData md;
  EnumerationResult res;
};

Enumerated run_enumeration(const std::string& arg) {
  Enumerated e{load_model(arg), {}, {}};
  e.md = build(e.spec);
  e.res = enumerate_invariants(e.md);
  return e;
}

int cmd_enumerate(const std::string& arg, bool oracle, const std::string& out) {
  Enumerated e = run_enumeration(arg);
  ResultFile rf;
  rf.model = e.spec.name;
  rf.y_commutant = e.res.y_commutant;
  for (const auto& z : e.res.invariants) {
    rf.invariants.push_back({z, std::nullopt, {}});
    rf.residuals.push_back(is_invariant(e.md, z).commutator_residual);
  }
  int code = kOk;
  if (oracle) {
    try {
      auto bf = brute_force_enumerate(e.md);
      bool same = bf.invariants.size() == e.res.invariants.size();
      for (std::size_t i = 0; same && i < bf.invariants.size(); ++i) same = bf.invariants[i] == e.res.invariants[i];
      std::cerr << "oracle: brute force found " << bf.invariants.size() << ", "
                << (same ? "agreement" : "MISMATCH") << "\n";
      if (!same) code = kVerify;
    } catch (const Error& err) {
      std::cerr << "oracle skipped: " << err.what() << "\n";
    }
  }
  std::string text = result_to_json(rf).dump(2);
  if (out.empty()) std::cout << text << "\n";
  else std::ofstream(out) << text << "\n";
  std::cerr << e.res.invariants.size() << " invariants\n";
  return code;
}

int cmd_classify(const std::string& arg, bool as_json) {
  Enumerated e = run_enumeration(arg);
  SimpleCurrentGroup g = simple_currents(e.spec.ring, e.md.d);
  auto names = label_names(e.spec.ring);
  ResultFile rf;
  rf.model = e.spec.name;
  rf.y_commutant = e.res.y_commutant;
  int code = kOk;
  for (std::size_t i = 0; i < e.res.invariants.size(); ++i) {
    const IntMatrix& z = e.res.invariants[i];
    InvariantReport r = classify(z, e.spec, e.md, g, e.res.invariants);
    bool consistent = (!r.permutation.theta || r.permutation.consistent) &&
                      std::abs(r.indices.w_zero * r.indices.w_alpha - r.indices.w_plus * r.indices.w_plus) <
                          1e-9 * r.indices.w_plus * r.indices.w_plus;
    if (!consistent) code = kVerify;
    rf.invariants.push_back({z, r, {}});
    rf.residuals.push_back(is_invariant(e.md, z).commutator_residual);
    if (as_json) continue;
    std::cout << "invariant " << i << ": " << to_string(r.kind);
    if (r.permutation.theta) std::cout << ", permutation";
    if (r.simple_current) std::cout << ", simple current";
    std::cout << "\n  Z = " << render_partition_function(z, names, nullptr, current_twist(z, e.spec.ring, g)) << "\n";
    if (r.typeI_branching) {
      std::cout << "  Z = " << render_partition_function(z, names, &*r.typeI_branching) << "\n  branching rows:\n";
      std::istringstream rows(format_matrix(*r.typeI_branching));
      for (std::string line; std::getline(rows, line);) std::cout << "    " << line << "\n";
    }
    if (r.parents)
      std::cout << "  parents: Z+ = invariant " << r.parents->first << ", Z- = invariant " << r.parents->second << "\n";
    std::cout << "  trace " << r.counts.trace << ", w+ " << r.indices.w_plus << ", w- " << r.indices.w_minus
              << ", w_alpha " << r.indices.w_alpha << ", w0 " << r.indices.w_zero << "\n";
    if (!consistent) std::cout << "  INCONSISTENT: " << r.permutation.issue << "\n";
  }
  if (as_json) std::cout << result_to_json(rf).dump(2) << "\n";
  return code;
}

int cmd_graphs(const std::string& arg, const std::string& dot_dir) {
  Enumerated e = run_enumeration(arg);
  auto k = su2_level(e.spec);
  if (!k) {
    std::cerr << "graph assignment is implemented for su2:<k> models only\n";
    return kUsage;
  }
  if (!dot_dir.empty()) fs::create_directories(dot_dir);
  int code = kOk;
  for (std::size_t i = 0; i < e.res.invariants.size(); ++i) {
    auto names = ade_assignment(e.res.invariants[i], e.md, *k);
    std::cout << "invariant " << i << " (trace " << e.res.invariants[i].trace() << "):";
    for (const auto& n : names) std::cout << " " << n;
    std::cout << "\n";
    if (names.size() != 1) code = kVerify;
    if (!dot_dir.empty())
      for (const auto& n : names) std::ofstream(fs::path(dot_dir) / (n + ".dot")) << to_dot(graph_by_name(n));
  }
  return code;
}

int cmd_extend(const std::string& arg) {
  ModelSpec spec = load_model(arg);
  ModularData md = build(spec);
  SimpleCurrentGroup g = simple_currents(spec.ring, md.d);
  std::cout << "simple currents:";
  for (int s : g.elements) std::cout << " " << spec.ring.labels[s].name;
  std::cout << "\n";
  for (const auto& r : rehren_admissible(spec.ring, md.h, g)) {
    if (r.order == 1) continue;
    std::cout << "<" << spec.ring.labels[r.sigma].name << "> order " << r.order << ", h = " << to_string(md.h[r.sigma])
              << ": " << (r.admissible ? "admissible" : "not admissible") << "\n";
  }
  return kOk;
}

IntMatrix extended_invariant(const BranchingTable& t, const std::string& which) {
  const int n = static_cast<int>(t.rows.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (which == "id") return permutation_matrix(perm);
  if (which == "conj") {
    if (t.name == "so8_to_su3") return permutation_matrix(perm);  // self-conjugate labels
    for (int j = 0; j < n; ++j) perm[j] = (n - j) % n;
    return permutation_matrix(perm);
  }
  if (which.rfind("perm:", 0) == 0) {
    std::vector<int> p;
    std::stringstream ss(which.substr(5));
    for (std::string tok; std::getline(ss, tok, ',');) {
      auto it = std::find(t.rows.begin(), t.rows.end(), tok);
      if (it == t.rows.end()) throw Error("unknown extended label '" + tok + "'");
      p.push_back(static_cast<int>(it - t.rows.begin()));
    }
    if (static_cast<int>(p.size()) != n) throw Error("perm: needs " + std::to_string(n) + " labels");
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != perm) throw Error("perm: labels must form a permutation");
    return permutation_matrix(p);
  }
  throw Error("extended invariant must be id, conj or perm:<labels>");
}

int cmd_restrict(const std::string& table_name, const std::string& which) {
  auto cat = branching_catalog();
  auto it = cat.find(table_name);
  if (it == cat.end()) throw Error("unknown branching table '" + table_name + "'");
  const BranchingTable& t = it->second;
  IntMatrix z = restrict(extended_invariant(t, which), t, t);
  std::cout << "trace " << z.trace() << ", size " << z.rows() << "\n";
  std::cout << "Z = " << render_partition_function(z, t.cols) << "\n";
  std::cout << format_matrix(z);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular invariant toolkit"};
  app.require_subcommand(1);

  auto* model = app.add_subcommand("model", "Catalog access");
  model->require_subcommand(1);
  auto* list = model->add_subcommand("list", "List catalog models and tables");
  auto* show = model->add_subcommand("show", "Print labels, spins and modular data");
  std::string model_arg;
  bool show_json = false;
  show->add_option("model", model_arg, "catalog name or JSON model file")->required();
  show->add_flag("--json", show_json, "print the model file instead");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all modular invariants");
  bool oracle = false;
  std::string out;
  enumerate->add_option("model", model_arg, "catalog name or JSON model file")->required();
  enumerate->add_flag("--oracle", oracle, "cross-check with brute force when feasible");
  enumerate->add_option("-o,--out", out, "write the result file here");

  auto* classify_cmd = app.add_subcommand("classify", "Classify every invariant");
  bool classify_json = false;
  classify_cmd->add_option("model", model_arg, "catalog name or JSON model file")->required();
  classify_cmd->add_flag("--json", classify_json, "emit a result file");

  auto* graphs = app.add_subcommand("graphs", "Assign Dynkin graphs to SU(2) invariants");
  std::string dot_dir;
  graphs->add_option("model", model_arg, "su2:<k>")->required();
  graphs->add_option("--dot", dot_dir, "directory for DOT files");

  auto* extend = app.add_subcommand("extend", "Simple-current extension admissibility");
  extend->add_option("model", model_arg, "catalog name or JSON model file")->required();

  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict an extended invariant through a branching table");
  std::string table_name, which;
  restrict_cmd->add_option("table", table_name, "su10_to_su4, e6_to_su3 or so8_to_su3")->required();
  restrict_cmd->add_option("invariant", which, "id, conj or perm:<labels>")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*list) return cmd_model_list();
    if (*show) return cmd_model_show(model_arg, show_json);
    if (*enumerate) return cmd_enumerate(model_arg, oracle, out);
    if (*classify_cmd) return cmd_classify(model_arg, classify_json);
    if (*graphs) return cmd_graphs(model_arg, dot_dir);
    if (*extend) return cmd_extend(model_arg);
    if (*restrict_cmd) return cmd_restrict(table_name, which);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
