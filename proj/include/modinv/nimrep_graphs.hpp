#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "modinv/classifier.hpp"
#include "modinv/modular_data.hpp"

namespace modinv {

struct Graph {
  std::string name;
  IntMatrix adjacency;
  std::vector<std::string> nodes;
  std::vector<int> grading;  // n-ality per node, empty when not graded

  int size() const { return static_cast<int>(adjacency.rows()); }
  bool symmetric() const { return adjacency == adjacency.transpose(); }
};

inline Graph graph_from_adjacency(std::string name, IntMatrix a) {
  Graph g;
  g.name = std::move(name);
  g.adjacency = std::move(a);
  for (int i = 0; i < g.size(); ++i) g.nodes.push_back(std::to_string(i));
  return g;
}

inline void link(IntMatrix& a, int i, int j) {
  a(i, j) = 1;
  a(j, i) = 1;
}

inline Graph graph_catalog(const std::string& family, int n) {
  IntMatrix a;
  if (family == "A") {
    if (n < 1) throw Error("A_n needs n >= 1");
    a = IntMatrix::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
  } else if (family == "D") {
    if (n < 4) throw Error("D_n needs n >= 4");
    a = IntMatrix::Zero(n, n);
    for (int i = 0; i + 1 < n - 1; ++i) link(a, i, i + 1);
    link(a, n - 3, n - 1);
  } else if (family == "E") {
    if (n < 6 || n > 8) throw Error("E_n exists for n = 6, 7, 8");
    a = IntMatrix::Zero(n, n);
    for (int i = 0; i + 1 < n - 1; ++i) link(a, i, i + 1);
    link(a, 2, n - 1);
  } else if (family == "T") {
    if (n < 1) throw Error("T_l needs l >= 1");
    a = IntMatrix::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
    a(n - 1, n - 1) = 1;
  } else {
    throw Error("unknown graph family '" + family + "'");
  }
  return graph_from_adjacency(family + std::to_string(n), a);
}

// "A7", "D5", "E6", "T2".
inline Graph graph_by_name(const std::string& name) {
  if (name.size() < 2) throw Error("bad graph name '" + name + "'");
  try {
    return graph_catalog(name.substr(0, 1), std::stoi(name.substr(1)));
  } catch (const std::invalid_argument&) {
    throw Error("bad graph name '" + name + "'");
  }
}

inline std::vector<Complex> eigenvalues(const IntMatrix& a) {
  std::vector<Complex> out;
  if (a.rows() == 0) return out;
  if (a == a.transpose()) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(a.cast<double>(), Eigen::EigenvaluesOnly);
    for (int i = 0; i < es.eigenvalues().size(); ++i) out.emplace_back(es.eigenvalues()(i), 0.0);
  } else {
    Eigen::EigenSolver<RealMatrix> es(a.cast<double>(), false);
    for (int i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
  }
  return out;
}

inline double perron_frobenius(const IntMatrix& a) {
  double best = 0;
  for (const auto& e : eigenvalues(a)) best = std::max(best, std::abs(e));
  return best;
}

struct Nimrep {
  std::vector<IntMatrix> G;
  int size() const { return G.empty() ? 0 : static_cast<int>(G[0].rows()); }
};

// G_λ G_μ = Σ_ν N_{λ,μ}^ν G_ν exactly, G_0 = 1, entries non-negative.
inline bool verify_nimrep(const FusionRing& ring, const Nimrep& nim) {
  const int m = ring.size();
  if (static_cast<int>(nim.G.size()) != m) return false;
  const int n = nim.size();
  if (nim.G[0] != IntMatrix::Identity(n, n)) return false;
  for (const auto& g : nim.G)
    if ((g.array() < 0).any()) return false;
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      IntMatrix rhs = IntMatrix::Zero(n, n);
      for (int c = 0; c < m; ++c)
        if (ring.n(a, b, c) != 0) rhs += ring.n(a, b, c) * nim.G[c];
      if (nim.G[a] * nim.G[b] != rhs) return false;
    }
  return true;
}

inline std::vector<std::string> nimrep_warnings(const FusionRing& ring, const Nimrep& nim) {
  std::vector<std::string> w;
  for (int a = 0; a < ring.size(); ++a)
    if (nim.G[ring.conj[a]] != nim.G[a].transpose()) w.push_back("G_conj(" + ring.labels[a].name + ") != G^T");
  return w;
}

inline std::optional<Nimrep> su2_nimrep_from_graph(int k, const Graph& g1) {
  if (std::abs(perron_frobenius(g1.adjacency) - 2.0 * std::cos(M_PI / (k + 2))) > 1e-6) return std::nullopt;
  const int n = g1.size();
  Nimrep nim;
  nim.G.push_back(IntMatrix::Identity(n, n));
  nim.G.push_back(g1.adjacency);
  for (int j = 1; j < k; ++j) {
    IntMatrix next = g1.adjacency * nim.G[j] - nim.G[j - 1];
    if ((next.array() < 0).any()) return std::nullopt;
    nim.G.push_back(next);
  }
  if (!verify_nimrep(su2_ring(k), nim)) return std::nullopt;
  return nim;
}

struct SpectrumRow {
  int label = 0;
  Complex value;
  int expected = 0;
  int found = 0;
};

struct SpectrumMatch {
  bool match = false;
  std::string reason;
  std::vector<SpectrumRow> table;
};

// Compares eigenvalue multisets after clustering values closer than tol.
inline bool multiset_match(const std::vector<Complex>& found, const std::vector<Complex>& expected, int label,
                           std::vector<SpectrumRow>& table, double tol = 1e-6) {
  std::vector<Complex> all(expected);
  all.insert(all.end(), found.begin(), found.end());
  const int n = static_cast<int>(all.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(all[i] - all[j]) < tol) parent[root(i)] = root(j);
  std::map<int, SpectrumRow> rows;
  for (int i = 0; i < n; ++i) {
    auto& r = rows[root(i)];
    r.label = label;
    if (i < static_cast<int>(expected.size())) {
      r.value = all[i];
      ++r.expected;
    } else {
      if (r.expected == 0) r.value = all[i];
      ++r.found;
    }
  }
  bool ok = true;
  for (const auto& [_, r] : rows) {
    table.push_back(r);
    ok = ok && r.expected == r.found;
  }
  return ok;
}

inline SpectrumMatch spectrum_match_values(const IntMatrix& g, const std::vector<Complex>& expected, int label = 1) {
  SpectrumMatch res;
  if (g.rows() != static_cast<Eigen::Index>(expected.size())) {
    res.reason = "size mismatch: graph has " + std::to_string(g.rows()) + " nodes, expected " +
                 std::to_string(expected.size());
    return res;
  }
  res.match = multiset_match(eigenvalues(g), expected, label, res.table);
  if (!res.match) res.reason = "eigenvalue multiplicities differ";
  return res;
}

inline SpectrumMatch spectrum_match(const Nimrep& nim, const ModularData& md, const IntMatrix& z) {
  SpectrumMatch res;
  if (!md.nondegenerate) {
    res.reason = "spectrum match requires non-degenerate data";
    return res;
  }
  if (nim.size() != z.trace()) {
    res.reason = "size mismatch: nimrep dimension " + std::to_string(nim.size()) + " vs trace(Z) " +
                 std::to_string(z.trace());
    return res;
  }
  if (static_cast<int>(nim.G.size()) != md.m) {
    res.reason = "nimrep has wrong number of matrices";
    return res;
  }
  const ComplexMatrix& s = md.S();
  res.match = true;
  for (int a = 0; a < md.m; ++a) {
    std::vector<Complex> expected;
    for (int r = 0; r < md.m; ++r)
      for (Int c = 0; c < z(r, r); ++c) expected.push_back(s(a, r) / s(0, r));
    bool ok = multiset_match(eigenvalues(nim.G[a]), expected, a, res.table);
    if (!ok && res.match) res.reason = "eigenvalue multiplicities differ for label " + std::to_string(a);
    res.match = res.match && ok;
  }
  return res;
}

// Catalog graphs at SU(2) level k whose full nimrep matches the diagonal of Z.
inline std::vector<std::string> ade_assignment(const IntMatrix& z, const ModularData& md, int k) {
  std::vector<Graph> candidates{graph_catalog("A", k + 1)};
  if (k % 2 == 0 && (k + 4) / 2 >= 4) candidates.push_back(graph_catalog("D", (k + 4) / 2));
  if (k == 10) candidates.push_back(graph_catalog("E", 6));
  if (k == 16) candidates.push_back(graph_catalog("E", 7));
  if (k == 28) candidates.push_back(graph_catalog("E", 8));
  if (k % 2 == 1) candidates.push_back(graph_catalog("T", (k + 1) / 2));
  std::vector<std::string> out;
  for (const auto& g : candidates) {
    if (g.size() != z.trace()) continue;
    auto nim = su2_nimrep_from_graph(k, g);
    if (nim && spectrum_match(*nim, md, z).match) out.push_back(g.name);
  }
  return out;
}

struct TadpoleRefutation {
  int k = 0, l = 0;
  RealVector weights;          // Perron-Frobenius weights of T_l, Σ x² = w
  double global_index = 0;
  double extremal_weight = 0;  // weight of the vertex away from the loop
  bool extremal_is_sqrt2 = false;
  Rational h_current;          // h of the simple current j = k
  Rational twice_h_mod1;       // 0 iff an index-2 extension is admissible
  bool excluded = false;
};

inline TadpoleRefutation tadpole_exclusion(int k) {
  if (k < 1 || k % 2 == 0) throw Error("tadpole exclusion needs odd level k, got " + std::to_string(k));
  TadpoleRefutation t;
  t.k = k;
  t.l = (k + 1) / 2;
  Graph g = graph_catalog("T", t.l);
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(g.adjacency.cast<double>());
  RealVector x = es.eigenvectors().col(t.l - 1).cwiseAbs();
  ModularData md = build(su2_model(k));
  t.global_index = md.w;
  t.weights = x * std::sqrt(md.w / x.squaredNorm());
  t.extremal_weight = t.weights(0);
  t.extremal_is_sqrt2 = std::abs(t.extremal_weight - std::sqrt(2.0)) < 1e-9;
  t.h_current = md.h[k];
  t.twice_h_mod1 = mod_one(2 * t.h_current);
  t.excluded = t.extremal_is_sqrt2 && t.twice_h_mod1.numerator() != 0;
  return t;
}

inline bool is_automorphism(const IntMatrix& a, const std::vector<int>& perm) {
  const int n = static_cast<int>(a.rows());
  if (static_cast<int>(perm.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(perm[i], perm[j]) != a(i, j)) return false;
  return true;
}

inline int permutation_order(const std::vector<int>& perm) {
  int order = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    int len = 1;
    for (int x = perm[i]; x != static_cast<int>(i); x = perm[x]) ++len;
    order = std::lcm(order, len);
  }
  return order;
}

// Free orbits become single nodes; each fixed vertex splits into m copies.
inline Graph orbifold_quotient(const Graph& g, const std::vector<int>& sigma, int m) {
  const int n = g.size();
  const IntMatrix& a = g.adjacency;
  if (!is_automorphism(a, sigma)) throw Error(g.name + ": permutation is not a graph automorphism");
  if (permutation_order(sigma) != m) throw Error(g.name + ": automorphism order differs from " + std::to_string(m));
  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_of(n, -1);
  for (int x = 0; x < n; ++x) {
    if (orbit_of[x] >= 0) continue;
    std::vector<int> o{x};
    for (int y = sigma[x]; y != x; y = sigma[y]) o.push_back(y);
    if (o.size() != 1 && static_cast<int>(o.size()) != m)
      throw Error(g.name + ": orbit of size " + std::to_string(o.size()) + " is neither free nor fixed");
    for (int y : o) orbit_of[y] = static_cast<int>(orbits.size());
    orbits.push_back(o);
  }
  for (const auto& o : orbits) {
    if (o.size() != 1) continue;
    int v = o[0];
    if (a(v, v) != 0) throw Error(g.name + ": fixed vertex " + g.nodes[v] + " carries a loop");
    // At most one free orbit on each side (out-edges, in-edges); they coincide for undirected graphs.
    int touched_out = -1, touched_in = -1;
    for (int u = 0; u < n; ++u) {
      if (a(v, u) == 0 && a(u, v) == 0) continue;
      if (orbits[orbit_of[u]].size() == 1)
        throw Error(g.name + ": fixed vertices " + g.nodes[v] + " and " + g.nodes[u] + " are adjacent");
      for (auto [edge, touched] : {std::pair{a(v, u), &touched_out}, std::pair{a(u, v), &touched_in}}) {
        if (edge == 0) continue;
        if (*touched >= 0 && *touched != orbit_of[u])
          throw Error(g.name + ": fixed vertex " + g.nodes[v] + " meets more than one free orbit");
        *touched = orbit_of[u];
      }
    }
  }
  struct Node {
    int orbit;
    int copy;
  };
  std::vector<Node> nodes;
  for (int o = 0; o < static_cast<int>(orbits.size()); ++o) {
    if (orbits[o].size() == 1)
      for (int c = 0; c < m; ++c) nodes.push_back({o, c});
    else
      nodes.push_back({o, 0});
  }
  const int q = static_cast<int>(nodes.size());
  Graph out;
  out.name = g.name + "/Z" + std::to_string(m);
  out.adjacency = IntMatrix::Zero(q, q);
  for (int i = 0; i < q; ++i) {
    const auto& oi = orbits[nodes[i].orbit];
    int rep = oi[0];
    bool fixed_i = oi.size() == 1;
    std::string nm = g.nodes[rep];
    if (fixed_i) nm += "_" + std::to_string(nodes[i].copy);
    else
      for (std::size_t t = 1; t < oi.size(); ++t) nm += "+" + g.nodes[oi[t]];
    out.nodes.push_back(nm);
    if (!g.grading.empty()) {
      bool same = true;
      for (int y : oi) same = same && g.grading[y] == g.grading[rep];
      out.grading.push_back(same ? g.grading[rep] : -1);
    }
    for (int j = 0; j < q; ++j) {
      const auto& oj = orbits[nodes[j].orbit];
      bool fixed_j = oj.size() == 1;
      if (fixed_i && fixed_j) continue;  // fixed vertices are never adjacent
      if (!fixed_i && !fixed_j) {
        Int s = 0;
        for (int u : oj) s += a(rep, u);
        out.adjacency(i, j) = s;
      } else {
        out.adjacency(i, j) = a(rep, oj[0]);
      }
    }
  }
  return out;
}

namespace detail {

inline bool extend_iso(const IntMatrix& a, const IntMatrix& b, std::vector<int>& map, std::vector<bool>& used,
                       int at, const std::vector<int>& deg_a, const std::vector<int>& deg_b) {
  const int n = static_cast<int>(a.rows());
  if (at == n) return true;
  for (int y = 0; y < n; ++y) {
    if (used[y] || deg_a[at] != deg_b[y] || a(at, at) != b(y, y)) continue;
    bool ok = true;
    for (int x = 0; x < at && ok; ++x) ok = a(at, x) == b(y, map[x]) && a(x, at) == b(map[x], y);
    if (!ok) continue;
    map[at] = y;
    used[y] = true;
    if (extend_iso(a, b, map, used, at + 1, deg_a, deg_b)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace detail

inline std::optional<std::vector<int>> isomorphism(const Graph& g, const Graph& h) {
  if (g.size() != h.size()) return std::nullopt;
  const int n = g.size();
  auto degrees = [](const IntMatrix& a) {
    std::vector<int> d;
    for (int i = 0; i < a.rows(); ++i) d.push_back(static_cast<int>(a.row(i).sum() * 1000 + a.col(i).sum()));
    return d;
  };
  std::vector<int> da = degrees(g.adjacency), db = degrees(h.adjacency);
  std::vector<int> sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  if (!detail::extend_iso(g.adjacency, h.adjacency, map, used, 0, da, db)) return std::nullopt;
  return map;
}

inline std::string to_dot(const Graph& g) {
  static const char* shapes[] = {"circle", "box", "diamond", "triangle", "pentagon", "hexagon"};
  const bool undirected = g.symmetric();
  std::ostringstream os;
  std::string id = g.name;
  std::replace_if(id.begin(), id.end(), [](char c) { return !std::isalnum(static_cast<unsigned char>(c)); }, '_');
  os << (undirected ? "graph " : "digraph ") << id << " {\n";
  for (int i = 0; i < g.size(); ++i) {
    os << "  n" << i << " [label=\"" << g.nodes[i] << "\"";
    if (!g.grading.empty() && g.grading[i] >= 0) os << ", shape=" << shapes[g.grading[i] % 6];
    os << "];\n";
  }
  const char* edge = undirected ? " -- " : " -> ";
  for (int i = 0; i < g.size(); ++i)
    for (int j = undirected ? i : 0; j < g.size(); ++j)
      for (Int e = 0; e < g.adjacency(i, j); ++e) os << "  n" << i << edge << "n" << j << ";\n";
  os << "}\n";
  return os.str();
}

// Fusion graph of (1,0,0) on the 32 M-N sectors of the SU(4)_6 < SU(10)_1 inclusion.
// Regenerate with tools/data/gen_su4_pz_graph.py.
inline Graph su4_level6_inclusion_graph() {
  static const char* rows[32] = {
      "00100000000000000000000000000000", "10000011000000000000000000000000",
      "00010000110000000000000000000000", "01000000000011000000000000000000",
      "01000000000001010000000000000000", "01000000000000000000000000000000",
      "00100000001000001000000000000000", "00100000001100000000000000000000",
      "00000000000011000100000000000000", "00000000000010000000000000000000",
      "00011000100000000000001100000000", "00011100000000000000000000000000",
      "00000010000000000010000010000000", "00000011000000000011100000000000",
      "00001000000000000000000100100000", "00000001000000000001010000000000",
      "00000000100000000000001000010000", "00000000000000000010100000001000",
      "00000000001000001000000000000010", "00000000001100100000000000000000",
      "00000000001000100000000000000010", "00000000000100000000000000000000",
      "00000000000001000100000000000100", "00000000000001010000000000000100",
      "00000000000000001000000000000000", "00000000000000100000000000000000",
      "00000000000000010000000000000000", "00000000000000000100000000000000",
      "00000000000000000000000000000010", "00000000000000000001100001000000",
      "00000000000000000000001100000001", "00000000000000000000000000000100",
  };
  Graph g;
  g.name = "su4_6_inclusion";
  g.nodes = {"000",  "100",  "001",  "010",  "200a", "200b", "101a", "101b", "002a", "002b", "110a",
             "110b", "011a", "011b", "300",  "201",  "102",  "003",  "020a", "020b", "210a", "210b",
             "111a", "111b", "012",  "400",  "301",  "103",  "004",  "120",  "021",  "220"};
  g.grading = {0, 1, 3, 2, 2, 2, 0, 0, 2, 2, 3, 3, 1, 1, 3, 1, 3, 1, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 1, 3, 2};
  g.adjacency = IntMatrix::Zero(32, 32);
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 32; ++j) g.adjacency(i, j) = rows[i][j] - '0';
  return g;
}

// Z_5 generated by the Z_10 translation τ_2 on the vertices above.
inline std::vector<int> su4_level6_translation() {
  return {24, 12, 16, 8, 3, 9, 18, 6, 22, 27, 10, 2, 17, 13, 11, 1,
          30, 29, 20, 7, 19, 0, 23, 4, 28, 21, 5, 31, 25, 15, 14, 26};
}

}  // namespace modinv
