#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "modinv/branching_table.hpp"
#include "modinv/invariant_enumerator.hpp"
#include "modinv/modular_data.hpp"

namespace modinv {

struct ExtensionRecord {
  int sigma = 0;  // generator label
  int order = 1;
  bool admissible = false;      // order * h_σ integral
  std::optional<bool> local;    // set when the locality rule applies
  std::vector<int> subgroup;    // labels of <σ>
};

inline std::vector<ExtensionRecord> rehren_admissible(const FusionRing& ring, const std::vector<Rational>& h,
                                                      const SimpleCurrentGroup& g) {
  if (static_cast<int>(h.size()) != ring.size()) throw Error("spin count differs from label count");
  std::vector<ExtensionRecord> out;
  std::set<std::vector<int>> seen;
  for (int s : g.elements) {
    std::vector<int> sub = g.cyclic(s);
    std::vector<int> key = sub;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) continue;
    ExtensionRecord r;
    r.sigma = s;
    r.order = static_cast<int>(sub.size());
    r.admissible = is_integer(h[s] * Rational(r.order));
    r.subgroup = key;
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.order < b.order; });
  return out;
}

inline std::vector<int> admissible_orders(const std::vector<ExtensionRecord>& recs) {
  std::set<int> s;
  for (const auto& r : recs)
    if (r.admissible) s.insert(r.order);
  return {s.begin(), s.end()};
}

inline std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

inline std::vector<int> sun_divisor_table(int n, int k) {
  if (n < 1 || k < 1) throw Error("sun_divisor_table needs n, k >= 1");
  return divisors(n % 2 == 0 && k % 2 == 1 ? n / 2 : n);
}

// Z_n simple currents of SU(n)_k: h_j = k j (n - j) / 2n.
inline ModelSpec sun_current_model(int n, int k) {
  ModelSpec s;
  s.name = "su" + std::to_string(n) + "_" + std::to_string(k) + "_currents";
  s.ring = zn_ring(n);
  for (int j = 0; j < n; ++j) s.h.push_back(mod_one(Rational(static_cast<Int>(k) * j * (n - j), 2 * n)));
  return s;
}

struct LocalityResult {
  bool local = false;
  bool spin_integral = false;  // h_{kΛ_q} ∈ ℤ, must agree with local
};

inline LocalityResult locality_test(int n, int k, int m) {
  if (m < 1 || n % m != 0) throw Error("locality test needs m | n");
  LocalityResult r;
  const Int q = n / m, kq = static_cast<Int>(k) * q;
  r.local = n % 2 == 0 ? kq % (2 * m) == 0 : kq % m == 0;
  r.spin_integral = is_integer(Rational(kq * (n - q), 2 * n));
  return r;
}

inline int zn_tilde(int n) { return n % 2 == 0 ? n / 2 : n; }

// Z^(δ) for an explicit Bezout pair with r ñ/(δα) - s δ/α = 1.
inline IntMatrix zn_invariant_with(int n, int delta, Int r, Int s) {
  const int nt = zn_tilde(n);
  if (delta < 1 || nt % delta != 0) throw Error("delta must divide n~");
  const int alpha = std::gcd(delta, nt / delta);
  const Int A = nt / (delta * alpha), B = delta / alpha;
  if (r * A - s * B != 1) throw Error("(r, s) violates the Bezout relation");
  const Int omega = r * A + s * B;
  const Int mod = n / alpha;
  IntMatrix z = IntMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int jp = 0; jp < n; ++jp)
      if (j % alpha == 0 && jp % alpha == 0 && ((jp - omega * j) % mod + mod) % mod == 0) z(j, jp) = 1;
  return z;
}

// Canonical pair: 0 <= s < ñ/(δα).
inline std::pair<Int, Int> zn_bezout(int n, int delta) {
  const int nt = zn_tilde(n);
  if (delta < 1 || nt % delta != 0) throw Error("delta must divide n~");
  const int alpha = std::gcd(delta, nt / delta);
  const Int A = nt / (delta * alpha), B = delta / alpha;
  for (Int s = 0; s < A; ++s)
    if ((1 + s * B) % A == 0) return {(1 + s * B) / A, s};
  throw Error("no Bezout pair for delta = " + std::to_string(delta));
}

inline IntMatrix zn_invariant(int n, int a, int delta) {
  const int a2 = ((a % (2 * n)) + 2 * n) % (2 * n);
  if (std::gcd(a2, n) != 1 || (n % 2 == 1 && a2 % 2 == 1)) throw Error("invalid Z_n parameter a");
  auto [r, s] = zn_bezout(n, delta);
  return zn_invariant_with(n, delta, r, s);
}

inline IntMatrix restrict(const IntMatrix& z_ext, const BranchingTable& left, const BranchingTable& right) {
  if (z_ext.rows() != left.b.rows() || z_ext.cols() != right.b.rows())
    throw Error("restrict: extended invariant does not match table rows");
  if (left.cols != right.cols) throw Error("restrict: tables use different base labels");
  return left.b.transpose() * z_ext * right.b;
}

// Permutations of {v, s, c} as 4x4 matrices, identity first.
inline std::vector<IntMatrix> klein_permutations() {
  std::vector<int> p{1, 2, 3};
  std::vector<IntMatrix> out;
  do {
    out.push_back(permutation_matrix({0, p[0], p[1], p[2]}));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<IntMatrix> so8_restriction_sweep(const BranchingTable& table) {
  std::vector<IntMatrix> out;
  for (const auto& p : klein_permutations()) out.push_back(restrict(p, table, table));
  return out;
}

// The full Z2 x Z2 extension of SO(8)_1 acts on {v, s, c} by a cyclic permutation; both orientations
// are invariants and nothing here selects one.
inline std::vector<IntMatrix> so8_full_extension_candidates(const ModularData& md) {
  std::vector<IntMatrix> out;
  for (const auto& p : klein_permutations()) {
    bool cyclic = p(1, 1) == 0 && p(2, 2) == 0 && p(3, 3) == 0;
    if (cyclic && is_invariant(md, p).invariant) out.push_back(p);
  }
  return out;
}

// Simple-current extension: multiplicity 1 on the subgroup.
inline IntVector theta_vector(const ExtensionRecord& rec, int m) {
  IntVector t = IntVector::Zero(m);
  for (int x : rec.subgroup) t(x) = 1;
  return t;
}

// Branching extension: restriction of θ_ext = Σ n_τ τ through b.
inline IntVector theta_vector(const BranchingTable& table, const IntVector& theta_ext) {
  if (theta_ext.size() != table.b.rows()) throw Error("theta_vector: extended multiplicities have wrong length");
  return table.b.transpose() * theta_ext;
}

}  // namespace modinv
