#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/SVD>

#include "modinv/modular_data.hpp"

namespace modinv {

using Cell = std::pair<int, int>;

// Classes of labels with equal h mod 1, ordered by smallest member.
inline std::vector<std::vector<int>> t_support(const std::vector<Rational>& h) {
  std::vector<std::vector<int>> classes;
  std::vector<bool> done(h.size(), false);
  for (std::size_t a = 0; a < h.size(); ++a) {
    if (done[a]) continue;
    std::vector<int> cls;
    for (std::size_t b = a; b < h.size(); ++b)
      if (!done[b] && mod_one(h[a]) == mod_one(h[b])) {
        cls.push_back(static_cast<int>(b));
        done[b] = true;
      }
    classes.push_back(cls);
  }
  return classes;
}

// Cells (λ, μ) with h_λ = h_μ mod 1, row-major order.
inline std::vector<Cell> t_support_cells(const std::vector<Rational>& h) {
  std::vector<Cell> cells;
  const int m = static_cast<int>(h.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (mod_one(h[a]) == mod_one(h[b])) cells.push_back({a, b});
  return cells;
}

// Continued-fraction approximation with bounded denominator.
inline std::optional<Rational> rationalize(double x, Int max_den = 1000000, double tol = 1e-9) {
  if (!std::isfinite(x)) return std::nullopt;
  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rest = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(rest);
    if (std::abs(fl) > 1e15) return std::nullopt;
    Int a = static_cast<Int>(fl);
    Int p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) < tol) return Rational(p1, q1);
    double frac = rest - fl;
    if (frac < 1e-15) break;
    rest = 1.0 / frac;
  }
  if (q1 != 0 && std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) < tol) return Rational(p1, q1);
  return std::nullopt;
}

struct CommutantBasis {
  std::vector<Cell> cells;                 // T-support cells, coordinate order
  std::vector<int> pivots;                 // index into cells, one per basis vector
  std::vector<RealVector> vectors;         // B_i over cells, B_i[pivots[j]] = δ_ij
  std::vector<std::vector<Rational>> exact;  // rational form when rational == true
  bool rational = false;
  bool y_commutant = false;  // built from Y because the data is degenerate
  int dimension() const { return static_cast<int>(vectors.size()); }
  IntMatrix pattern(int m) const {
    IntMatrix z = IntMatrix::Zero(m, m);
    for (const auto& [a, b] : cells) z(a, b) = 1;
    return z;
  }
  RealMatrix matrix(int i, int m) const {
    RealMatrix z = RealMatrix::Zero(m, m);
    for (std::size_t c = 0; c < cells.size(); ++c) z(cells[c].first, cells[c].second) = vectors[i](c);
    return z;
  }
};

inline double commutation_tolerance_scale(const ComplexMatrix& x) {
  return std::max(1.0, x.cwiseAbs().maxCoeff());
}

inline CommutantBasis commutant_basis(const ModularData& md) {
  CommutantBasis cb;
  cb.y_commutant = !md.nondegenerate;
  const ComplexMatrix x = md.commutation_matrix();
  cb.cells = t_support_cells(md.h);
  const int m = md.m;
  const int nc = static_cast<int>(cb.cells.size());
  // Real and imaginary parts of (XZ - ZX)_{ij} as linear forms in the cell values.
  RealMatrix a = RealMatrix::Zero(2 * m * m, nc);
  for (int c = 0; c < nc; ++c) {
    auto [k, l] = cb.cells[c];
    // Z = E_{kl}: (X E)_{il} += X_{ik}, (E X)_{kj} += X_{lj}
    for (int i = 0; i < m; ++i) {
      a(2 * (i * m + l), c) += x(i, k).real();
      a(2 * (i * m + l) + 1, c) += x(i, k).imag();
    }
    for (int j = 0; j < m; ++j) {
      a(2 * (k * m + j), c) -= x(l, j).real();
      a(2 * (k * m + j) + 1, c) -= x(l, j).imag();
    }
  }
  a /= commutation_tolerance_scale(x);
  Eigen::JacobiSVD<RealMatrix> svd(a, Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) >= 1e-9) ++rank;
  RealMatrix null = svd.matrixV().rightCols(nc - rank).transpose();  // rows span the nullspace
  // Reduced row echelon form with lexicographically first pivot cells.
  int row = 0;
  for (int c = 0; c < nc && row < null.rows(); ++c) {
    Eigen::Index best;
    double mx = null.col(c).segment(row, null.rows() - row).cwiseAbs().maxCoeff(&best);
    if (mx < 1e-9) continue;
    null.row(row).swap(null.row(row + best));
    null.row(row) /= null(row, c);
    for (int r = 0; r < null.rows(); ++r)
      if (r != row) null.row(r) -= null(r, c) * null.row(row);
    cb.pivots.push_back(c);
    ++row;
  }
  for (int i = 0; i < row; ++i) {
    RealVector v = null.row(i).transpose();
    for (int c = 0; c < nc; ++c)
      if (std::abs(v(c)) < 1e-12) v(c) = 0;
    cb.vectors.push_back(v);
  }
  cb.rational = true;
  for (auto& v : cb.vectors) {
    std::vector<Rational> ex;
    for (int c = 0; c < nc && cb.rational; ++c) {
      auto r = rationalize(v(c));
      if (!r) cb.rational = false;
      else ex.push_back(*r);
    }
    if (!cb.rational) break;
    RealMatrix z = RealMatrix::Zero(m, m);
    for (int c = 0; c < nc; ++c) z(cb.cells[c].first, cb.cells[c].second) = boost::rational_cast<double>(ex[c]);
    ComplexMatrix zc = z.cast<Complex>();
    if ((x * zc - zc * x).norm() > 1e-8 * commutation_tolerance_scale(x)) cb.rational = false;
    cb.exact.push_back(ex);
  }
  if (cb.rational) {
    for (std::size_t i = 0; i < cb.vectors.size(); ++i)
      for (int c = 0; c < nc; ++c) cb.vectors[i](c) = boost::rational_cast<double>(cb.exact[i][c]);
  } else {
    cb.exact.clear();
  }
  return cb;
}

struct InvarianceReport {
  bool invariant = false;
  double commutator_residual = 0;  // ||XZ - ZX||_F with X = S (or Y when degenerate)
  bool t_support = true;           // exact rational check
  bool vacuum = true;              // Z_00 == 1
  bool non_negative = true;
  bool entry_bounds = true;        // Z_{λμ} <= d_λ d_μ
  bool sum_bound = true;           // Σ Z <= w
  std::string reason;
};

inline InvarianceReport is_invariant(const ModularData& md, const IntMatrix& z) {
  if (z.rows() != md.m || z.cols() != md.m)
    throw Error("coupling matrix shape " + std::to_string(z.rows()) + "x" + std::to_string(z.cols()) +
                " does not match model size " + std::to_string(md.m));
  InvarianceReport r;
  const int m = md.m;
  r.vacuum = z(0, 0) == 1;
  Int total = 0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (z(a, b) < 0) r.non_negative = false;
      if (z(a, b) != 0 && md.h[a] != md.h[b]) r.t_support = false;
      if (static_cast<double>(z(a, b)) > md.d(a) * md.d(b) + 1e-9) r.entry_bounds = false;
      total += z(a, b);
    }
  r.sum_bound = static_cast<double>(total) <= md.w + 1e-6;
  const ComplexMatrix x = md.commutation_matrix();
  ComplexMatrix zc = to_complex(z);
  r.commutator_residual = (x * zc - zc * x).norm() / commutation_tolerance_scale(x);
  bool commutes = r.commutator_residual < 1e-7;
  r.invariant = r.vacuum && r.non_negative && r.t_support && r.entry_bounds && r.sum_bound && commutes;
  if (!r.vacuum) r.reason = "Z_00 != 1";
  else if (!r.non_negative) r.reason = "negative entry";
  else if (!r.t_support) r.reason = "entry outside T-support";
  else if (!r.entry_bounds) r.reason = "entry exceeds d_λ d_μ";
  else if (!r.sum_bound) r.reason = "entry sum exceeds global index";
  else if (!commutes) r.reason = "does not commute with S";
  return r;
}

struct EnumerationResult {
  std::vector<IntMatrix> invariants;  // lexicographically sorted
  bool y_commutant = false;
  std::uint64_t nodes = 0;
  CommutantBasis basis;  // empty for brute force
};

inline void canonical_sort(std::vector<IntMatrix>& zs) {
  std::sort(zs.begin(), zs.end(), lex_less);
  zs.erase(std::unique(zs.begin(), zs.end(), same_matrix), zs.end());
}

namespace detail {

struct LatticeSearch {
  const ModularData& md;
  const CommutantBasis& cb;
  std::uint64_t cap;
  int r = 0, nc = 0;
  std::vector<Int> upper;        // per basis coordinate
  std::vector<double> cell_cap;  // per cell, floor(d d)
  std::vector<double> weight;    // Σ_c B_i[c]
  // suffix_lo[i][c]: min over coordinates i..r-1 of their contribution to cell c
  std::vector<RealVector> suffix_lo, suffix_hi;
  std::vector<double> sum_lo, sum_hi;
  std::vector<Int> value;
  std::vector<IntMatrix> found;
  std::uint64_t nodes = 0;

  LatticeSearch(const ModularData& m, const CommutantBasis& b, std::uint64_t c) : md(m), cb(b), cap(c) {
    r = cb.dimension();
    nc = static_cast<int>(cb.cells.size());
    for (int c2 = 0; c2 < nc; ++c2) {
      auto [a, bb] = cb.cells[c2];
      cell_cap.push_back(std::floor(md.d(a) * md.d(bb) + 1e-9));
    }
    for (int i = 0; i < r; ++i) {
      upper.push_back(static_cast<Int>(cell_cap[cb.pivots[i]]));
      weight.push_back(cb.vectors[i].sum());
    }
    suffix_lo.assign(r + 1, RealVector::Zero(nc));
    suffix_hi.assign(r + 1, RealVector::Zero(nc));
    sum_lo.assign(r + 1, 0);
    sum_hi.assign(r + 1, 0);
    for (int i = r - 1; i >= 0; --i) {
      RealVector span = cb.vectors[i] * static_cast<double>(upper[i]);
      suffix_lo[i] = suffix_lo[i + 1] + span.cwiseMin(0.0);
      suffix_hi[i] = suffix_hi[i + 1] + span.cwiseMax(0.0);
      double s = weight[i] * static_cast<double>(upper[i]);
      sum_lo[i] = sum_lo[i + 1] + std::min(0.0, s);
      sum_hi[i] = sum_hi[i + 1] + std::max(0.0, s);
    }
    value.assign(r, 0);
  }

  bool feasible(int depth, const RealVector& partial, double partial_sum) const {
    for (int c = 0; c < nc; ++c) {
      double lo = partial(c) + suffix_lo[depth](c), hi = partial(c) + suffix_hi[depth](c);
      if (hi < -1e-6 || lo > cell_cap[c] + 1e-6) return false;
    }
    return partial_sum + sum_lo[depth] <= md.w + 1e-6;
  }

  void leaf(const RealVector& cells) {
    IntMatrix z = IntMatrix::Zero(md.m, md.m);
    for (int c = 0; c < nc; ++c) {
      double v = cells(c);
      double rv = std::round(v);
      if (std::abs(v - rv) > 1e-6) return;
      z(cb.cells[c].first, cb.cells[c].second) = static_cast<Int>(rv);
    }
    if (is_invariant(md, z).invariant) found.push_back(z);
  }

  void dfs(int depth, const RealVector& partial, double partial_sum) {
    if (++nodes > cap) throw Error("search space overflow: more than " + std::to_string(cap) +
                                   " nodes; brute force is infeasible as well");
    if (depth == r) {
      leaf(partial);
      return;
    }
    Int lo = 0, hi = upper[depth];
    if (cb.pivots[depth] == 0) lo = hi = 1;  // vacuum cell pinned
    for (Int v = lo; v <= hi; ++v) {
      RealVector next = partial + static_cast<double>(v) * cb.vectors[depth];
      double s = partial_sum + static_cast<double>(v) * weight[depth];
      if (!feasible(depth + 1, next, s)) continue;
      value[depth] = v;
      dfs(depth + 1, next, s);
    }
  }
};

}  // namespace detail

inline EnumerationResult enumerate_invariants(const ModularData& md, std::uint64_t node_cap = 100000000ULL) {
  EnumerationResult res;
  res.basis = commutant_basis(md);
  res.y_commutant = res.basis.y_commutant;
  if (res.basis.dimension() == 0 || res.basis.pivots[0] != 0) return res;  // vacuum cell cannot be 1
  detail::LatticeSearch s(md, res.basis, node_cap);
  s.dfs(0, RealVector::Zero(static_cast<int>(res.basis.cells.size())), 0.0);
  res.nodes = s.nodes;
  res.invariants = std::move(s.found);
  canonical_sort(res.invariants);
  return res;
}

// Exhaustive scan of all integer assignments on the T-support.
inline EnumerationResult brute_force_enumerate(const ModularData& md, std::uint64_t node_cap = 10000000ULL) {
  EnumerationResult res;
  res.y_commutant = !md.nondegenerate;
  std::vector<Cell> cells = t_support_cells(md.h);
  std::vector<Int> hi;
  long double product = 1;
  for (const auto& [a, b] : cells) {
    Int u = (a == 0 && b == 0) ? 0 : static_cast<Int>(std::floor(md.d(a) * md.d(b) + 1e-9));
    hi.push_back(u);
    product *= static_cast<long double>(u + 1);
  }
  if (product > static_cast<long double>(node_cap))
    throw Error("brute force cap exceeded: " + std::to_string(static_cast<double>(product)) + " assignments");
  const ComplexMatrix x = md.commutation_matrix();
  const double scale = commutation_tolerance_scale(x);
  std::vector<Int> v(cells.size(), 0);
  IntMatrix z = IntMatrix::Zero(md.m, md.m);
  for (std::size_t c = 0; c < cells.size(); ++c) z(cells[c].first, cells[c].second) = 0;
  z(0, 0) = 1;
  Int total = 1;
  for (;;) {
    ++res.nodes;
    if (static_cast<double>(total) <= md.w + 1e-6) {
      ComplexMatrix zc = to_complex(z);
      if ((x * zc - zc * x).norm() / scale < 1e-7) res.invariants.push_back(z);
    }
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      if (v[c] < hi[c]) {
        ++v[c];
        ++total;
        ++z(cells[c].first, cells[c].second);
        break;
      }
      total -= v[c];
      z(cells[c].first, cells[c].second) -= v[c];
      v[c] = 0;
    }
    if (c == cells.size()) break;
  }
  canonical_sort(res.invariants);
  return res;
}

}  // namespace modinv
