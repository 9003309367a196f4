#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "modinv/types.hpp"

namespace modinv {

// Commutative fusion ring.  N[λ](μ, ν) = N_{λ,μ}^ν.
struct FusionRing {
  std::vector<SectorLabel> labels;
  std::vector<IntMatrix> N;
  std::vector<int> conj;

  int size() const { return static_cast<int>(labels.size()); }
  Int n(int l, int m, int k) const { return N[l](m, k); }

  int index_of(const std::string& name) const {
    for (const auto& l : labels)
      if (l.name == name) return l.index;
    throw Error("unknown label '" + name + "'");
  }
};

inline FusionRing empty_ring(std::vector<SectorLabel> labels) {
  FusionRing r;
  r.labels = std::move(labels);
  const int m = r.size();
  r.N.assign(m, IntMatrix::Zero(m, m));
  r.conj.resize(m);
  std::iota(r.conj.begin(), r.conj.end(), 0);
  return r;
}

// Fills conj from N_{λ,μ}^0 = δ_{μ,λ̄}; leaves identity where undetermined.
inline void infer_conjugation(FusionRing& r) {
  for (int l = 0; l < r.size(); ++l)
    for (int m = 0; m < r.size(); ++m)
      if (r.n(l, m, 0) == 1) r.conj[l] = m;
}

inline const IntMatrix& fusion_matrix(const FusionRing& ring, int label) {
  if (label < 0 || label >= ring.size())
    throw Error("unknown label " + std::to_string(label));
  return ring.N[label];
}

struct AxiomViolation {
  std::string axiom;
  std::vector<int> where;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomViolation> errors;
  std::vector<AxiomViolation> warnings;
  bool ok() const { return errors.empty(); }
  bool has(const std::string& axiom, const std::vector<int>& where) const {
    return std::any_of(errors.begin(), errors.end(),
                       [&](const AxiomViolation& v) { return v.axiom == axiom && v.where == where; });
  }
};

inline AxiomReport verify_axioms(const FusionRing& ring) {
  AxiomReport rep;
  const int m = ring.size();
  auto bad = [&](std::vector<AxiomViolation>& into, std::string ax, std::vector<int> at, std::string d) {
    into.push_back({std::move(ax), std::move(at), std::move(d)});
  };
  if (static_cast<int>(ring.N.size()) != m || static_cast<int>(ring.conj.size()) != m) {
    bad(rep.errors, "shape", {}, "tensor or conjugation size differs from label count");
    return rep;
  }
  for (int l = 0; l < m; ++l) {
    if (ring.labels[l].index != l) bad(rep.errors, "labels", {l}, "label index out of canonical order");
    if (ring.N[l].rows() != m || ring.N[l].cols() != m) {
      bad(rep.errors, "shape", {l}, "fusion matrix has wrong shape");
      return rep;
    }
  }
  for (int l = 0; l < m; ++l)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (ring.n(l, a, b) < 0) bad(rep.errors, "non-negativity", {l, a, b}, "negative multiplicity");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (ring.n(0, a, b) != (a == b ? 1 : 0))
        bad(rep.errors, "identity", {0, a, b}, "N_{0,a}^b must be δ_{a,b}");
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (ring.n(a, b, c) != ring.n(b, a, c))
          bad(rep.errors, "commutativity", {a, b, c}, "N_{a,b}^c != N_{b,a}^c");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int s = 0; s < m; ++s) {
          Int lhs = 0, rhs = 0;
          for (int r = 0; r < m; ++r) {
            lhs += ring.n(a, b, r) * ring.n(r, c, s);
            rhs += ring.n(b, c, r) * ring.n(a, r, s);
          }
          if (lhs != rhs) bad(rep.errors, "associativity", {a, b, c, s}, "(ab)c != a(bc)");
        }
  if (ring.conj[0] != 0) bad(rep.errors, "conjugation", {0}, "vacuum must be self-conjugate");
  for (int a = 0; a < m; ++a) {
    int c = ring.conj[a];
    if (c < 0 || c >= m || ring.conj[c] != a) {
      bad(rep.errors, "conjugation", {a}, "conjugation is not an involution");
      continue;
    }
    for (int b = 0; b < m; ++b)
      if (ring.n(a, b, 0) != (b == c ? 1 : 0))
        bad(rep.errors, "conjugation", {a, b, 0}, "N_{a,b}^0 must be δ_{b,conj(a)}");
  }
  if (rep.errors.empty())
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          if (ring.n(a, b, c) != ring.n(ring.conj[a], c, b))
            bad(rep.warnings, "frobenius", {a, b, c}, "N_{a,b}^c != N_{conj(a),c}^b");
  return rep;
}

inline double dimension_residual(const FusionRing& ring, const RealVector& d) {
  double worst = 0;
  const int m = ring.size();
  for (int l = 0; l < m; ++l) {
    RealVector nd = ring.N[l].cast<double>() * d;
    worst = std::max(worst, (nd - d(l) * d).cwiseAbs().maxCoeff());
  }
  return worst;
}

inline RealVector quantum_dimensions(const FusionRing& ring) {
  const int m = ring.size();
  RealMatrix a = RealMatrix::Zero(m, m);
  for (int l = 0; l < m; ++l) a += ring.N[l].cast<double>() + ring.N[l].transpose().cast<double>();
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(a);
  if (es.info() != Eigen::Success) throw Error("ill-conditioned ring: eigen-solver failed");
  RealVector d = es.eigenvectors().col(m - 1).cwiseAbs();
  if (d(0) < 1e-12) throw Error("ill-conditioned ring: vanishing vacuum component");
  d /= d(0);
  // N_λ d = d_λ d, entrywise d_λd_μ = Σ_ν N_{λ,μ}^ν d_ν
  for (int l = 0; l < m; ++l) {
    RealVector nd = ring.N[l].cast<double>() * d;
    if ((nd - d(l) * d).cwiseAbs().maxCoeff() > 1e-9)
      throw Error("ill-conditioned ring: dimension residual too large at label " + std::to_string(l));
    if (d(l) < 1 - 1e-9) throw Error("ill-conditioned ring: quantum dimension below 1");
  }
  return d;
}

inline double global_index(const RealVector& d) { return d.squaredNorm(); }

struct SimpleCurrentGroup {
  std::vector<int> elements;           // labels, ascending, elements[0] == 0
  IntMatrix table;                     // table(i, j) = label of elements[i] * elements[j]
  std::vector<int> orders;             // order of each element
  std::vector<int> invariant_factors;  // n1 | n2 | ...
  std::vector<int> generators;         // labels generating cyclic factors of the listed orders

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int label) const {
    return std::find(elements.begin(), elements.end(), label) != elements.end();
  }
  int position(int label) const {
    auto it = std::find(elements.begin(), elements.end(), label);
    if (it == elements.end()) throw Error("label " + std::to_string(label) + " is not a simple current");
    return static_cast<int>(it - elements.begin());
  }
  int multiply(int a, int b) const { return static_cast<int>(table(position(a), position(b))); }
  int order_of(int label) const { return orders[position(label)]; }
  // Labels of the cyclic subgroup generated by σ, in power order.
  std::vector<int> cyclic(int sigma) const {
    std::vector<int> out{0};
    for (int x = sigma; x != 0; x = multiply(x, sigma)) out.push_back(x);
    return out;
  }
};

namespace detail {

inline std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline std::set<int> span(const SimpleCurrentGroup& g, const std::vector<int>& gens) {
  std::set<int> seen{0};
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int x = todo.back();
    todo.pop_back();
    for (int s : gens) {
      int y = g.multiply(x, s);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

inline bool pick_generators(const SimpleCurrentGroup& g, const std::vector<int>& factors, std::size_t at,
                            std::vector<int>& gens, std::size_t size_so_far) {
  if (at == factors.size()) return true;
  for (int x : g.elements) {
    if (g.order_of(x) != factors[at]) continue;
    gens.push_back(x);
    if (span(g, gens).size() == size_so_far * factors[at] &&
        pick_generators(g, factors, at + 1, gens, size_so_far * factors[at]))
      return true;
    gens.pop_back();
  }
  return false;
}

}  // namespace detail

inline SimpleCurrentGroup simple_currents(const FusionRing& ring, const RealVector& d) {
  SimpleCurrentGroup g;
  const int m = ring.size();
  for (int l = 0; l < m; ++l)
    if (std::abs(d(l) - 1.0) < 1e-6) g.elements.push_back(l);
  if (g.elements.empty() || g.elements[0] != 0) throw Error("internal: vacuum missing from simple currents");
  const int n = g.size();
  g.table = IntMatrix::Constant(n, n, -1);
  for (int i = 0; i < n; ++i) {
    int s = g.elements[i];
    for (int lam = 0; lam < m; ++lam) {
      int hits = 0, total = 0;
      for (int nu = 0; nu < m; ++nu) {
        total += static_cast<int>(ring.n(s, lam, nu));
        if (ring.n(s, lam, nu) == 1) ++hits;
      }
      if (hits != 1 || total != 1)
        throw Error("internal: fusion with simple current " + ring.labels[s].name + " is not a permutation");
    }
    for (int j = 0; j < n; ++j) {
      for (int nu = 0; nu < m; ++nu)
        if (ring.n(s, g.elements[j], nu) == 1) g.table(i, j) = nu;
      if (!g.contains(static_cast<int>(g.table(i, j))))
        throw Error("internal: simple currents not closed under fusion");
    }
    if (!g.contains(ring.conj[s])) throw Error("internal: simple currents not closed under conjugation");
  }
  g.orders.resize(n);
  for (int i = 0; i < n; ++i) {
    int k = 1;
    for (int x = g.elements[i]; x != 0; x = g.multiply(x, g.elements[i])) ++k;
    g.orders[i] = k;
  }
  // p-primary parts from counts of elements killed by p^e
  std::vector<std::vector<int>> exps;  // per prime, exponents of cyclic p-factors
  std::vector<int> primes = detail::prime_factors(n);
  for (int p : primes) {
    std::vector<int> s{0};
    for (int pe = p;; pe *= p) {
      int cnt = 0;
      for (int o : g.orders)
        if (pe % o == 0) ++cnt;
      int e = 0;
      for (int c = cnt; c > 1; c /= p) ++e;
      s.push_back(e);
      if (s.back() == s[s.size() - 2]) break;
    }
    std::vector<int> ex;  // factors of order >= p^e number s_e - s_{e-1}
    for (std::size_t e = s.size() - 1; e >= 1; --e) {
      int at_least = s[e] - s[e - 1];
      int longer = static_cast<int>(ex.size());
      for (int t = longer; t < at_least; ++t) ex.push_back(static_cast<int>(e));
    }
    exps.push_back(ex);
  }
  std::size_t rank = 0;
  for (const auto& ex : exps) rank = std::max(rank, ex.size());
  g.invariant_factors.assign(rank, 1);
  for (std::size_t pi = 0; pi < primes.size(); ++pi)
    for (std::size_t t = 0; t < exps[pi].size(); ++t) {
      int pw = 1;
      for (int e = 0; e < exps[pi][t]; ++e) pw *= primes[pi];
      g.invariant_factors[rank - 1 - t] *= pw;
    }
  std::vector<int> descending(g.invariant_factors.rbegin(), g.invariant_factors.rend());
  std::vector<int> gens;
  if (!detail::pick_generators(g, descending, 0, gens, 1))
    throw Error("internal: no generating set for simple current group");
  g.generators.assign(gens.rbegin(), gens.rend());
  return g;
}

// SU(2)_k fusion rules on spins j = 0..k (twice the isospin).
inline FusionRing su2_ring(int k) {
  if (k < 1) throw Error("su2 level must be >= 1");
  std::vector<SectorLabel> labels;
  for (int j = 0; j <= k; ++j) labels.push_back({j, std::to_string(j)});
  FusionRing r = empty_ring(labels);
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b)
      for (int c = std::abs(a - b); c <= std::min(a + b, 2 * k - a - b); c += 2) r.N[a](b, c) = 1;
  return r;
}

inline FusionRing zn_ring(int n) {
  if (n < 1) throw Error("zn order must be >= 1");
  FusionRing r = empty_ring(numbered_labels(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) r.N[a](b, (a + b) % n) = 1;
    r.conj[a] = (n - a) % n;
  }
  return r;
}

// Group ring of Z_2 x Z_2 with labels 0, v, s, c.
inline FusionRing klein_ring() {
  FusionRing r = empty_ring({{0, "0"}, {1, "v"}, {2, "s"}, {3, "c"}});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) r.N[a](b, a ^ b) = 1;
  return r;
}

inline FusionRing tensor_product(const FusionRing& a, const FusionRing& b) {
  std::vector<SectorLabel> labels;
  const int ma = a.size(), mb = b.size();
  for (int i = 0; i < ma; ++i)
    for (int j = 0; j < mb; ++j)
      labels.push_back({i * mb + j, a.labels[i].name + "x" + b.labels[j].name});
  FusionRing r = empty_ring(labels);
  for (int i = 0; i < ma; ++i)
    for (int j = 0; j < mb; ++j) {
      r.conj[i * mb + j] = a.conj[i] * mb + b.conj[j];
      for (int k = 0; k < ma; ++k)
        for (int l = 0; l < mb; ++l)
          for (int p = 0; p < ma; ++p)
            for (int q = 0; q < mb; ++q)
              r.N[i * mb + j](k * mb + l, p * mb + q) = a.n(i, k, p) * b.n(j, l, q);
    }
  return r;
}

}  // namespace modinv
