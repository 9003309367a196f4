#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modinv/invariant_enumerator.hpp"

namespace modinv {

struct PermutationTest {
  std::optional<std::vector<int>> theta;  // set when Z is a permutation matrix
  bool consistent = true;                 // ϑ fixes 0, preserves fusion and h
  std::string issue;
};

inline std::optional<std::vector<int>> as_permutation(const IntMatrix& z) {
  const int m = static_cast<int>(z.rows());
  std::vector<int> perm(m, -1);
  std::vector<bool> hit(m, false);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (z(a, b) == 0) continue;
      if (z(a, b) != 1 || perm[a] != -1 || hit[b]) return std::nullopt;
      perm[a] = b;
      hit[b] = true;
    }
  for (int x : perm)
    if (x < 0) return std::nullopt;
  return perm;
}

inline PermutationTest permutation_test(const IntMatrix& z, const FusionRing& ring, const std::vector<Rational>& h) {
  PermutationTest t;
  t.theta = as_permutation(z);
  if (!t.theta) return t;
  const auto& p = *t.theta;
  const int m = ring.size();
  if (p[0] != 0) {
    t.consistent = false;
    t.issue = "permutation moves the vacuum";
    return t;
  }
  for (int a = 0; a < m && t.consistent; ++a) {
    if (mod_one(h[p[a]]) != mod_one(h[a])) {
      t.consistent = false;
      t.issue = "permutation changes h at " + ring.labels[a].name;
    }
    for (int b = 0; b < m && t.consistent; ++b)
      for (int c = 0; c < m && t.consistent; ++c)
        if (ring.n(p[a], p[b], p[c]) != ring.n(a, b, c)) {
          t.consistent = false;
          t.issue = "permutation breaks fusion at (" + ring.labels[a].name + "," + ring.labels[b].name + "," +
                    ring.labels[c].name + ")";
        }
  }
  return t;
}

inline bool vacuum_symmetry(const IntMatrix& z) { return z.row(0).transpose() == z.col(0); }

inline bool vacuum_trivial_row(const IntMatrix& z) {
  for (Eigen::Index a = 1; a < z.cols(); ++a)
    if (z(0, a) != 0) return false;
  return z(0, 0) == 1;
}
inline bool vacuum_trivial_col(const IntMatrix& z) {
  for (Eigen::Index a = 1; a < z.rows(); ++a)
    if (z(a, 0) != 0) return false;
  return z(0, 0) == 1;
}

inline bool simple_current_test(const IntMatrix& z, const FusionRing& ring, const SimpleCurrentGroup& g) {
  for (int a = 0; a < ring.size(); ++a)
    for (int b = 0; b < ring.size(); ++b) {
      if (z(a, b) == 0) continue;
      bool linked = false;
      for (int s : g.elements) linked = linked || ring.n(s, a, b) == 1;
      if (!linked) return false;
    }
  return true;
}

namespace detail {

struct GramSearch {
  std::uint64_t cap;
  std::uint64_t nodes = 0;
  int m;
  std::vector<IntVector> rows;

  explicit GramSearch(int size, std::uint64_t c) : cap(c), m(size) {}

  void tick() {
    if (++nodes > cap) throw Error("type I search exceeded " + std::to_string(cap) + " nodes");
  }

  bool lex_le(const IntVector& a, const IntVector& b) const {
    for (int i = 0; i < m; ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return true;
  }

  // Extend candidate row v at coordinates >= at, then recurse into the remainder.
  bool candidates(IntMatrix& rest, int pivot, IntVector& v, int at, const IntVector* bound) {
    tick();
    if (at == m) {
      if (v(pivot) == 0) return false;
      if (bound && !lex_le(v, *bound)) return false;
      IntMatrix next = rest - v * v.transpose();
      rows.push_back(v);
      if (solve(next)) return true;
      rows.pop_back();
      return false;
    }
    Int hi = static_cast<Int>(std::floor(std::sqrt(static_cast<double>(std::max<Int>(rest(at, at), 0))) + 1e-9));
    if (at < pivot) hi = 0;
    for (Int x = hi; x >= (at == pivot ? 1 : 0); --x) {
      bool ok = true;
      for (int j = 0; j < at && ok; ++j) ok = v(j) * x <= rest(j, at);
      if (!ok) continue;
      v(at) = x;
      if (candidates(rest, pivot, v, at + 1, bound)) return true;
    }
    v(at) = 0;
    return false;
  }

  bool solve(IntMatrix& rest) {
    tick();
    int pivot = -1;
    for (int i = 0; i < m; ++i) {
      if (rest(i, i) < 0) return false;
      if (pivot < 0 && rest(i, i) > 0) pivot = i;
    }
    if (pivot < 0) return rest.isZero();
    IntVector v = IntVector::Zero(m);
    const IntVector* bound = rows.size() > 1 && rows.back()(pivot) > 0 ? &rows.back() : nullptr;
    return candidates(rest, pivot, v, 0, bound);
  }
};

}  // namespace detail

// Non-negative integer b with bᵀb = Z and row 0 equal to the vacuum row of Z.
inline std::optional<IntMatrix> type1_decomposition(const IntMatrix& z, std::uint64_t node_cap = 10000000ULL) {
  if (!vacuum_symmetry(z) || z(0, 0) != 1) return std::nullopt;
  const int m = static_cast<int>(z.rows());
  if (z != z.transpose()) return std::nullopt;
  detail::GramSearch g(m, node_cap);
  IntVector v0 = z.row(0).transpose();
  g.rows.push_back(v0);
  IntMatrix rest = z - v0 * v0.transpose();
  if (!g.solve(rest)) return std::nullopt;
  IntMatrix b(static_cast<Eigen::Index>(g.rows.size()), m);
  for (std::size_t i = 0; i < g.rows.size(); ++i) b.row(static_cast<Eigen::Index>(i)) = g.rows[i].transpose();
  return b;
}

struct ChiralIndices {
  double w_plus = 0, w_minus = 0, w_alpha = 0, w_zero = 0;
};

inline ChiralIndices chiral_indices(const IntMatrix& z, const ModularData& md) {
  ChiralIndices c;
  double col = 0, row = 0, deg = 0;
  for (int a = 0; a < md.m; ++a) {
    col += md.d(a) * static_cast<double>(z(a, 0));
    row += static_cast<double>(z(0, a)) * md.d(a);
  }
  for (int a : degenerate_sectors(md)) deg += static_cast<double>(z(0, a)) * md.d(a);
  c.w_plus = md.w / col;
  c.w_minus = md.w / row;
  c.w_alpha = md.w / deg;
  c.w_zero = c.w_plus * c.w_plus / c.w_alpha;
  return c;
}

struct SectorCounts {
  Int trace = 0, sum_of_squares = 0, x_plus = 0, x_minus = 0;
};

inline SectorCounts sector_counts(const IntMatrix& z) {
  SectorCounts s;
  s.trace = z.trace();
  s.sum_of_squares = z.cwiseProduct(z).sum();
  s.x_plus = z.col(0).squaredNorm();
  s.x_minus = z.row(0).squaredNorm();
  return s;
}

// Type I parents: Z⁺ with vacuum row equal to Z's vacuum column, Z⁻ with vacuum row equal to Z's vacuum row.
inline std::optional<std::pair<int, int>> find_parents(const IntMatrix& z, const std::vector<IntMatrix>& list) {
  int plus = -1, minus = -1;
  for (std::size_t i = 0; i < list.size() && (plus < 0 || minus < 0); ++i) {
    const IntMatrix& p = list[i];
    if (p.rows() != z.rows() || !vacuum_symmetry(p)) continue;
    bool row_match = p.row(0) == z.row(0), col_match = p.row(0).transpose() == z.col(0);
    if (!row_match && !col_match) continue;
    if (!type1_decomposition(p)) continue;
    if (col_match && plus < 0) plus = static_cast<int>(i);
    if (row_match && minus < 0) minus = static_cast<int>(i);
  }
  if (plus < 0 || minus < 0) return std::nullopt;
  return std::make_pair(plus, minus);
}

// Non-negative integer coefficients c with Σ c_i B_i = target.
inline std::optional<std::vector<Int>> nonnegative_decomposition(const IntMatrix& target,
                                                                 const std::vector<IntMatrix>& basis) {
  std::vector<Int> coef(basis.size(), 0);
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, std::size_t i, const IntMatrix& rest) -> bool {
    if (++nodes > 1000000) throw Error("decomposition search exceeded node cap");
    if (i == basis.size()) return rest.isZero();
    if ((rest.array() < 0).any()) return false;
    Int hi = std::numeric_limits<Int>::max();
    bool any = false;
    for (Eigen::Index a = 0; a < rest.rows(); ++a)
      for (Eigen::Index b = 0; b < rest.cols(); ++b)
        if (basis[i](a, b) > 0) {
          hi = std::min(hi, rest(a, b) / basis[i](a, b));
          any = true;
        }
    if (!any) hi = 0;
    for (Int c = hi; c >= 0; --c) {
      coef[i] = c;
      if (self(self, i + 1, rest - c * basis[i])) return true;
    }
    coef[i] = 0;
    return false;
  };
  if (rec(rec, 0, target)) return coef;
  return std::nullopt;
}

struct ZZDiagnostics {
  IntMatrix zt_z, z_zt;
  std::optional<std::vector<Int>> zt_z_coefficients, z_zt_coefficients;
};

inline ZZDiagnostics zz_diagnostics(const IntMatrix& z, const std::vector<IntMatrix>& basis) {
  ZZDiagnostics d;
  d.zt_z = z.transpose() * z;
  d.z_zt = z * z.transpose();
  if (!basis.empty()) {
    d.zt_z_coefficients = nonnegative_decomposition(d.zt_z, basis);
    d.z_zt_coefficients = nonnegative_decomposition(d.z_zt, basis);
  }
  return d;
}

enum class InvariantKind { TypeI, TypeII, Heterotic };

inline std::string to_string(InvariantKind k) {
  switch (k) {
    case InvariantKind::TypeI: return "type I";
    case InvariantKind::TypeII: return "type II";
    case InvariantKind::Heterotic: return "heterotic";
  }
  return "?";
}

struct InvariantReport {
  IntMatrix Z;
  PermutationTest permutation;
  bool vacuum_symmetric = false;
  bool simple_current = false;
  std::optional<IntMatrix> typeI_branching;
  std::optional<std::pair<int, int>> parents;
  ChiralIndices indices;
  SectorCounts counts;
  InvariantKind kind = InvariantKind::TypeII;
};

inline InvariantReport classify(const IntMatrix& z, const ModelSpec& spec, const ModularData& md,
                                const SimpleCurrentGroup& currents, const std::vector<IntMatrix>& enumerated) {
  InvariantReport r;
  r.Z = z;
  r.permutation = permutation_test(z, spec.ring, md.h);
  r.vacuum_symmetric = vacuum_symmetry(z);
  r.simple_current = simple_current_test(z, spec.ring, currents);
  if (r.vacuum_symmetric) r.typeI_branching = type1_decomposition(z);
  r.parents = find_parents(z, enumerated);
  r.indices = chiral_indices(z, md);
  r.counts = sector_counts(z);
  if (r.typeI_branching) r.kind = InvariantKind::TypeI;
  else if (r.vacuum_symmetric) r.kind = InvariantKind::TypeII;
  else r.kind = InvariantKind::Heterotic;
  return r;
}

}  // namespace modinv
