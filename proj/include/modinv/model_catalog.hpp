#pragma once

#include <map>
#include <string>
#include <vector>

#include "modinv/branching_table.hpp"
#include "modinv/modular_data.hpp"

namespace modinv {

inline ModelSpec su2_model(int k) {
  if (k < 1) throw Error("su2 level must be >= 1");
  ModelSpec s;
  s.name = "su2:" + std::to_string(k);
  s.ring = su2_ring(k);
  for (int j = 0; j <= k; ++j) s.h.push_back(mod_one(Rational(j * (j + 2), 4 * k + 8)));
  return s;
}

inline ModelSpec zn_model(int n, int a) {
  if (n < 1) throw Error("zn order must be >= 1");
  a = ((a % (2 * n)) + 2 * n) % (2 * n);
  if (std::gcd(a, n) != 1) throw Error("zn model needs gcd(a, n) = 1");
  if (n % 2 == 1 && a % 2 == 1) throw Error("zn model needs a even when n is odd");
  ModelSpec s;
  s.name = "zn:" + std::to_string(n) + ":" + std::to_string(a);
  s.ring = zn_ring(n);
  for (int j = 0; j < n; ++j) s.h.push_back(mod_one(Rational(static_cast<Int>(a) * j * j, 2 * n)));
  return s;
}

// Valid a in [0, 2n) for a Z_n theory.
inline std::vector<int> zn_parameters(int n) {
  std::vector<int> out;
  for (int a = 1; a < 2 * n; ++a)
    if (std::gcd(a, n) == 1 && (n % 2 == 0 || a % 2 == 0)) out.push_back(a);
  if (n == 1) out = {0};
  return out;
}

inline ModelSpec so8_level1_model() {
  ModelSpec s;
  s.name = "so8_1";
  s.ring = klein_ring();
  s.h = {Rational(0), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  return s;
}

inline ComplexMatrix so8_reference_S() {
  RealMatrix s(4, 4);
  s << 1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1;
  return (0.5 * s).cast<Complex>();
}

// Reference form uses e^{+iπ/3}; the principal-branch build yields its conjugate.
inline ComplexMatrix so8_reference_T() {
  ComplexVector t(4);
  t << 1, -1, -1, -1;
  return std::polar(1.0, M_PI / 3) * ComplexMatrix(t.asDiagonal());
}

namespace so16 {

inline IntMatrix heterotic_Z() {
  IntMatrix z(4, 4);
  z << 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0;
  return z;
}
inline IntMatrix parent_plus() {
  IntMatrix z(4, 4);
  z << 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0;
  return z;
}
inline IntMatrix parent_minus() {
  IntMatrix z(4, 4);
  z << 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1;
  return z;
}

}  // namespace so16

inline bool commutes_with_modular_data(const ModularData& md, const IntMatrix& z, double tol = 1e-9) {
  ComplexMatrix zc = to_complex(z);
  ComplexMatrix x = md.commutation_matrix();
  if ((x * zc - zc * x).norm() > tol) return false;
  for (int a = 0; a < md.m; ++a)
    for (int b = 0; b < md.m; ++b)
      if (z(a, b) != 0 && md.h[a] != md.h[b]) return false;
  return true;
}

// Spinor weights h_s = h_c = 1 are standard data; the displayed heterotic matrices gate them.
inline ModelSpec so16_level1_model() {
  ModelSpec s;
  s.name = "so16_1";
  s.ring = klein_ring();
  s.h = {Rational(0), Rational(1, 2), Rational(0), Rational(0)};
  ModularData md = build(s);
  for (const IntMatrix& z : {so16::heterotic_Z(), so16::parent_plus(), so16::parent_minus()})
    if (!commutes_with_modular_data(md, z))
      throw Error("so16_1: displayed coupling matrices do not commute with the built S and T");
  return s;
}

// "su2:6", "zn:10:9", "so8_1", "so16_1".
inline ModelSpec model_by_name(const std::string& name) {
  auto parts = [&] {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= name.size(); ++i)
      if (i == name.size() || name[i] == ':') {
        out.push_back(name.substr(start, i - start));
        start = i + 1;
      }
    return out;
  }();
  auto num = [&](const std::string& x) {
    try {
      std::size_t used = 0;
      int v = std::stoi(x, &used);
      if (used != x.size()) throw Error("");
      return v;
    } catch (const std::exception&) {
      throw Error("bad number '" + x + "' in model name " + name);
    }
  };
  if (parts[0] == "su2" && parts.size() == 2) return su2_model(num(parts[1]));
  if (parts[0] == "zn" && parts.size() == 3) return zn_model(num(parts[1]), num(parts[2]));
  if (name == "so8_1") return so8_level1_model();
  if (name == "so16_1") return so16_level1_model();
  throw Error("unknown model '" + name + "'");
}

inline std::vector<std::string> catalog_listing() {
  return {"su2:<k>      SU(2) level k, k >= 1, labels j = 0..k",
          "zn:<n>:<a>   Z_n theory with h_j = a j^2 / 2n, gcd(a,n) = 1, a even for odd n",
          "so8_1        SO(8) level 1, labels 0 v s c",
          "so16_1       SO(16) level 1, labels 0 v s c"};
}

// Branching tables.

inline std::string weight_name(std::initializer_list<int> w) {
  std::string s = "(";
  bool first = true;
  for (int x : w) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

inline BranchingTable su10_to_su4_table() {
  auto w = [](int p, int q, int r) { return weight_name({p, q, r}); };
  std::vector<std::vector<std::string>> rows = {
      {w(0, 0, 0), w(0, 6, 0), w(2, 0, 2), w(2, 2, 2)},
      {w(0, 0, 2), w(2, 4, 0), w(2, 1, 2)},
      {w(0, 1, 2), w(2, 3, 0), w(3, 0, 3)},
      {w(1, 0, 3), w(3, 2, 1), w(0, 3, 0)},
      {w(0, 0, 4), w(4, 2, 0), w(1, 2, 1)},
      {w(0, 0, 6), w(6, 0, 0), w(0, 2, 2), w(2, 2, 0)},
      {w(4, 0, 0), w(0, 2, 4), w(1, 2, 1)},
      {w(3, 0, 1), w(1, 2, 3), w(0, 3, 0)},
      {w(0, 3, 2), w(2, 1, 0), w(3, 0, 3)},
      {w(2, 0, 0), w(0, 4, 2), w(2, 1, 2)},
  };
  std::vector<std::string> names;
  for (int j = 0; j < 10; ++j) names.push_back(std::to_string(j));
  return table_from_rows("su10_to_su4", names, rows);
}

inline BranchingTable e6_to_su3_table() {
  auto w = [](int p, int q) { return weight_name({p, q}); };
  std::vector<std::string> hi = {w(2, 2), w(5, 2), w(2, 5)};
  return table_from_rows("e6_to_su3", {"0", "1", "2"},
                         {{w(0, 0), w(9, 0), w(0, 9), w(4, 1), w(1, 4), w(4, 4)}, hi, hi});
}

inline BranchingTable so8_to_su3_table() {
  auto w = [](int p, int q) { return weight_name({p, q}); };
  return table_from_rows("so8_to_su3", {"0", "v", "s", "c"},
                         {{w(0, 0), w(3, 0), w(0, 3)}, {w(1, 1)}, {w(1, 1)}, {w(1, 1)}});
}

inline std::map<std::string, BranchingTable> branching_catalog() {
  std::map<std::string, BranchingTable> out;
  for (auto t : {su10_to_su4_table(), e6_to_su3_table(), so8_to_su3_table()}) out[t.name] = t;
  return out;
}

inline std::vector<int> parse_weight(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == ')' || ch == ' ') continue;
    if (ch == ',') {
      out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

// Charge conjugation on table columns by Dynkin-label reversal (p,q,r) -> (r,q,p).
inline std::vector<int> weight_reversal(const BranchingTable& t) {
  std::vector<int> perm(t.cols.size());
  for (std::size_t i = 0; i < t.cols.size(); ++i) {
    std::vector<int> w = parse_weight(t.cols[i]);
    std::reverse(w.begin(), w.end());
    std::string name = "(";
    for (std::size_t k = 0; k < w.size(); ++k) name += (k ? "," : "") + std::to_string(w[k]);
    name += ")";
    auto it = std::find(t.cols.begin(), t.cols.end(), name);
    if (it == t.cols.end()) throw Error(t.name + ": weight reversal leaves the column set at " + t.cols[i]);
    perm[i] = static_cast<int>(it - t.cols.begin());
  }
  return perm;
}

}  // namespace modinv
