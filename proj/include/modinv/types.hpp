#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/rational.hpp>

namespace modinv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Int = std::int64_t;
using Rational = boost::rational<Int>;
using Complex = std::complex<double>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

struct SectorLabel {
  int index = 0;
  std::string name;
};

inline std::vector<SectorLabel> numbered_labels(int m) {
  std::vector<SectorLabel> out;
  for (int i = 0; i < m; ++i) out.push_back({i, std::to_string(i)});
  return out;
}

// Representative in [0, 1).
inline Rational mod_one(const Rational& r) {
  Int num = r.numerator() % r.denominator();
  if (num < 0) num += r.denominator();
  return Rational(num, r.denominator());
}

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    Int den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in rational '" + s + "'");
    return Rational(std::stoll(s.substr(0, slash)), den);
  } catch (const std::logic_error&) {
    throw Error("malformed rational '" + s + "'");
  }
}

inline Complex phase_of(const Rational& h) {
  Rational r = mod_one(h);
  double x = 2.0 * M_PI * boost::rational_cast<double>(r);
  return std::polar(1.0, x);
}

inline IntMatrix permutation_matrix(const std::vector<int>& perm) {
  const int m = static_cast<int>(perm.size());
  IntMatrix p = IntMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) p(i, perm[i]) = 1;
  return p;
}

inline ComplexMatrix to_complex(const IntMatrix& a) { return a.cast<double>().cast<Complex>(); }

// Lexicographic comparison on flattened rows.
inline bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

inline bool same_matrix(const IntMatrix& a, const IntMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

inline std::string format_matrix(const IntMatrix& a) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
    os << "\n";
  }
  return os.str();
}

}  // namespace modinv
