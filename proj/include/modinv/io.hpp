#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modinv/classifier.hpp"
#include "modinv/model_catalog.hpp"

namespace modinv {

using json = nlohmann::json;

inline json matrix_to_json(const IntMatrix& a) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error("matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  IntMatrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols) throw Error("ragged matrix rows");
    for (Eigen::Index k = 0; k < cols; ++k) a(i, k) = j[i][k].get<Int>();
  }
  return a;
}

// Model file: labels with "p/q" weights, sparse fusion list, optional conjugation.
inline json model_to_json(const ModelSpec& spec) {
  json j;
  j["name"] = spec.name;
  j["labels"] = json::array();
  for (const auto& l : spec.ring.labels)
    j["labels"].push_back({{"index", l.index}, {"name", l.name}, {"conformal_weight", to_string(spec.h[l.index])}});
  j["fusion"] = json::array();
  const int m = spec.ring.size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (spec.ring.n(a, b, c) != 0) j["fusion"].push_back({a, b, c, spec.ring.n(a, b, c)});
  j["conjugation"] = spec.ring.conj;
  return j;
}

inline ModelSpec model_from_json(const json& j) {
  try {
    ModelSpec spec;
    spec.name = j.at("name").get<std::string>();
    std::vector<SectorLabel> labels;
    for (const auto& l : j.at("labels")) {
      labels.push_back({l.at("index").get<int>(), l.at("name").get<std::string>()});
      spec.h.push_back(mod_one(parse_rational(l.at("conformal_weight").get<std::string>())));
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i].index != static_cast<int>(i)) throw Error("labels must be listed in index order 0..m-1");
    spec.ring = empty_ring(labels);
    const int m = spec.ring.size();
    for (const auto& f : j.at("fusion")) {
      if (f.size() != 4) throw Error("fusion entries are [lambda, mu, nu, multiplicity]");
      int a = f[0].get<int>(), b = f[1].get<int>(), c = f[2].get<int>();
      if (a < 0 || b < 0 || c < 0 || a >= m || b >= m || c >= m) throw Error("fusion entry label out of range");
      spec.ring.N[a](b, c) = f[3].get<Int>();
    }
    if (j.contains("conjugation")) spec.ring.conj = j["conjugation"].get<std::vector<int>>();
    else infer_conjugation(spec.ring);
    return spec;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed model file: ") + e.what());
  }
}

inline ModelSpec load_model(const std::string& arg) {
  std::ifstream in(arg);
  if (in) {
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw Error("cannot parse " + arg + ": " + e.what());
    }
    return model_from_json(j);
  }
  return model_by_name(arg);
}

struct ResultEntry {
  IntMatrix matrix;
  std::optional<InvariantReport> report;
  std::vector<std::string> graphs;
};

struct ResultFile {
  std::string model;
  bool y_commutant = false;
  std::vector<ResultEntry> invariants;
  std::vector<double> residuals;  // commutator residual per invariant
};

inline json report_to_json(const InvariantReport& r) {
  json j;
  j["kind"] = to_string(r.kind);
  j["permutation"] = r.permutation.theta ? json(*r.permutation.theta) : json(nullptr);
  j["permutation_consistent"] = r.permutation.consistent;
  j["vacuum_symmetric"] = r.vacuum_symmetric;
  j["simple_current"] = r.simple_current;
  j["typeI_branching"] = r.typeI_branching ? matrix_to_json(*r.typeI_branching) : json(nullptr);
  j["parents"] = r.parents ? json::array({r.parents->first, r.parents->second}) : json(nullptr);
  j["indices"] = {{"w_plus", r.indices.w_plus},
                  {"w_minus", r.indices.w_minus},
                  {"w_alpha", r.indices.w_alpha},
                  {"w_zero", r.indices.w_zero}};
  j["counts"] = {{"trace", r.counts.trace},
                 {"sum_of_squares", r.counts.sum_of_squares},
                 {"x_plus", r.counts.x_plus},
                 {"x_minus", r.counts.x_minus}};
  return j;
}

inline InvariantReport report_from_json(const json& j, const IntMatrix& z) {
  InvariantReport r;
  r.Z = z;
  std::string kind = j.at("kind").get<std::string>();
  r.kind = kind == "type I" ? InvariantKind::TypeI : kind == "heterotic" ? InvariantKind::Heterotic : InvariantKind::TypeII;
  if (!j.at("permutation").is_null()) r.permutation.theta = j["permutation"].get<std::vector<int>>();
  r.permutation.consistent = j.at("permutation_consistent").get<bool>();
  r.vacuum_symmetric = j.at("vacuum_symmetric").get<bool>();
  r.simple_current = j.at("simple_current").get<bool>();
  if (!j.at("typeI_branching").is_null()) r.typeI_branching = matrix_from_json(j["typeI_branching"]);
  if (!j.at("parents").is_null()) r.parents = std::make_pair(j["parents"][0].get<int>(), j["parents"][1].get<int>());
  const auto& ix = j.at("indices");
  r.indices = {ix.at("w_plus").get<double>(), ix.at("w_minus").get<double>(), ix.at("w_alpha").get<double>(),
               ix.at("w_zero").get<double>()};
  const auto& c = j.at("counts");
  r.counts = {c.at("trace").get<Int>(), c.at("sum_of_squares").get<Int>(), c.at("x_plus").get<Int>(),
              c.at("x_minus").get<Int>()};
  return r;
}

inline json result_to_json(const ResultFile& f) {
  json j;
  j["model"] = f.model;
  j["y_commutant"] = f.y_commutant;
  j["invariants"] = json::array();
  for (const auto& e : f.invariants) {
    json item;
    item["matrix"] = matrix_to_json(e.matrix);
    item["report"] = e.report ? report_to_json(*e.report) : json(nullptr);
    item["graphs"] = e.graphs;
    j["invariants"].push_back(item);
  }
  j["residuals"] = f.residuals;
  return j;
}

inline ResultFile result_from_json(const json& j) {
  ResultFile f;
  f.model = j.at("model").get<std::string>();
  f.y_commutant = j.at("y_commutant").get<bool>();
  for (const auto& item : j.at("invariants")) {
    ResultEntry e;
    e.matrix = matrix_from_json(item.at("matrix"));
    if (!item.at("report").is_null()) e.report = report_from_json(item["report"], e.matrix);
    e.graphs = item.at("graphs").get<std::vector<std::string>>();
    f.invariants.push_back(e);
  }
  f.residuals = j.at("residuals").get<std::vector<double>>();
  return f;
}

// Action λ ↦ σλ of the unique nontrivial simple current σ with ϑ(λ) ∈ {λ, σλ}, if any.
inline std::optional<std::vector<int>> current_twist(const IntMatrix& z, const FusionRing& ring,
                                                     const SimpleCurrentGroup& g) {
  auto perm = as_permutation(z);
  if (!perm) return std::nullopt;
  bool trivial = true;
  for (int a = 0; a < ring.size(); ++a) trivial = trivial && (*perm)[a] == a;
  if (trivial) return std::nullopt;
  std::optional<std::vector<int>> found;
  for (int s : g.elements) {
    if (s == 0) continue;
    std::vector<int> act(ring.size());
    bool fits = true;
    for (int a = 0; a < ring.size() && fits; ++a) {
      act[a] = -1;
      for (int c = 0; c < ring.size(); ++c)
        if (ring.n(s, a, c) == 1) act[a] = c;
      fits = (*perm)[a] == a || (*perm)[a] == act[a];
    }
    if (!fits) continue;
    if (found) return std::nullopt;  // ambiguous
    found = act;
  }
  return found;
}

namespace detail {

inline std::string chi(const std::string& name) { return "χ" + name; }

inline std::string coefficient(Int c) { return c == 1 ? "" : std::to_string(c); }

}  // namespace detail

// Σ Z χ_λ χ*_μ with diagonal terms first; |Σ χ|² blocks when a branching table is given.
inline std::string render_partition_function(const IntMatrix& z, const std::vector<std::string>& names,
                                             const IntMatrix* b = nullptr,
                                             const std::optional<std::vector<int>>& twist = std::nullopt) {
  std::vector<std::string> terms;
  const auto m = z.rows();
  if (b) {
    std::vector<std::pair<IntVector, int>> blocks;
    for (Eigen::Index t = 0; t < b->rows(); ++t) {
      IntVector row = b->row(t).transpose();
      auto it = std::find_if(blocks.begin(), blocks.end(), [&](const auto& p) { return p.first == row; });
      if (it == blocks.end()) blocks.push_back({row, 1});
      else ++it->second;
    }
    for (const auto& [row, count] : blocks) {
      std::string inner;
      for (Eigen::Index a = 0; a < row.size(); ++a) {
        if (row(a) == 0) continue;
        if (!inner.empty()) inner += " + ";
        inner += detail::coefficient(row(a)) + detail::chi(names[a]);
      }
      terms.push_back(detail::coefficient(count) + "|" + inner + "|²");
    }
  } else {
    auto twisted = [&](Eigen::Index a) { return twist && (*twist)[a] == static_cast<int>(a) && z(a, a) != 0; };
    for (Eigen::Index a = 0; a < m; ++a)
      if (z(a, a) != 0 && !twisted(a)) terms.push_back(detail::coefficient(z(a, a)) + "|" + detail::chi(names[a]) + "|²");
    for (Eigen::Index a = 0; a < m; ++a)
      for (Eigen::Index c = 0; c < m; ++c) {
        if (z(a, c) == 0 || (a == c && !twisted(a))) continue;
        terms.push_back(detail::coefficient(z(a, c)) + detail::chi(names[a]) + detail::chi(names[c]) + "*");
      }
  }
  std::string out;
  for (const auto& t : terms) out += (out.empty() ? "" : " + ") + t;
  return out;
}

inline std::vector<std::string> label_names(const FusionRing& ring) {
  std::vector<std::string> out;
  for (const auto& l : ring.labels) out.push_back(l.name);
  return out;
}

}  // namespace modinv
