#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "modinv/fusion_ring.hpp"

namespace modinv {

struct ModelSpec {
  std::string name;
  FusionRing ring;
  std::vector<Rational> h;  // reduced to [0, 1)
};

inline void validate_spins(const ModelSpec& spec) {
  if (static_cast<int>(spec.h.size()) != spec.ring.size())
    throw Error(spec.name + ": spin count differs from label count");
  if (mod_one(spec.h[0]).numerator() != 0) throw Error(spec.name + ": vacuum must have h = 0");
  for (int l = 0; l < spec.ring.size(); ++l)
    if (mod_one(spec.h[l]) != mod_one(spec.h[spec.ring.conj[l]]))
      throw Error(spec.name + ": conjugation does not preserve h at label " + spec.ring.labels[l].name);
}

inline Complex statistics_phase(const std::vector<Rational>& h, int label) {
  if (label < 0 || label >= static_cast<int>(h.size())) throw Error("unknown label " + std::to_string(label));
  return phase_of(h[label]);
}

inline bool same_phase(const std::vector<Rational>& h, int a, int b) {
  return mod_one(h[a]) == mod_one(h[b]);
}

struct ModularData {
  std::string name;
  int m = 0;
  std::vector<Rational> h;
  std::vector<int> conj;
  RealVector d;
  double w = 0;
  ComplexVector omega;
  ComplexMatrix Y;
  Complex z;
  std::optional<double> central_charge;
  std::optional<ComplexMatrix> S_;
  std::optional<ComplexMatrix> T_;
  std::vector<int> C;  // charge conjugation permutation
  bool nondegenerate = false;

  const ComplexMatrix& S() const {
    if (!S_) throw Error(name + ": vanishing Gauss sum, S undefined");
    return *S_;
  }
  const ComplexMatrix& T() const {
    if (!T_) throw Error(name + ": vanishing Gauss sum, T undefined");
    return *T_;
  }
  double c() const {
    if (!central_charge) throw Error(name + ": vanishing Gauss sum, central charge undefined");
    return *central_charge;
  }
  ComplexMatrix Omega() const { return omega.asDiagonal(); }
  // S when available, Y otherwise; both give the same commutant.
  ComplexMatrix commutation_matrix() const { return S_ ? *S_ : Y; }
};

struct NondegeneracyReport {
  bool nondegenerate = false;
  double gauss_residual = 0;      // | |z|^2 - w |
  double unitarity_residual = 0;  // ||S S^† - I||_F, infinite when S is undefined
};

inline NondegeneracyReport nondegeneracy(const ModularData& md) {
  NondegeneracyReport r;
  r.gauss_residual = std::abs(std::norm(md.z) - md.w);
  if (md.S_) {
    const ComplexMatrix& s = *md.S_;
    r.unitarity_residual = (s * s.adjoint() - ComplexMatrix::Identity(md.m, md.m)).norm();
  } else {
    r.unitarity_residual = INFINITY;
  }
  r.nondegenerate = r.gauss_residual < 1e-6 * md.w && r.unitarity_residual < 1e-9 * md.m;
  return r;
}

inline bool is_nondegenerate(const ModularData& md) { return nondegeneracy(md).nondegenerate; }

inline ModularData build(const ModelSpec& spec) {
  AxiomReport rep = verify_axioms(spec.ring);
  if (!rep.ok()) throw Error(spec.name + ": fusion ring violates " + rep.errors.front().axiom);
  validate_spins(spec);
  const FusionRing& ring = spec.ring;
  ModularData md;
  md.name = spec.name;
  md.m = ring.size();
  md.conj = ring.conj;
  for (const auto& x : spec.h) md.h.push_back(mod_one(x));
  md.d = quantum_dimensions(ring);
  md.w = global_index(md.d);
  const int m = md.m;
  md.omega.resize(m);
  for (int l = 0; l < m; ++l) md.omega(l) = phase_of(md.h[l]);
  md.Y = ComplexMatrix::Zero(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Complex acc = 0;
      for (int r = 0; r < m; ++r)
        if (ring.n(a, b, r) != 0)
          acc += phase_of(md.h[a] + md.h[b] - md.h[r]) * static_cast<double>(ring.n(a, b, r)) * md.d(r);
      md.Y(a, b) = acc;
    }
  md.z = 0;
  for (int l = 0; l < m; ++l) md.z += md.d(l) * md.d(l) * md.omega(l);
  if (std::abs(md.z) > 1e-9 * md.w) {
    double c = 4.0 * std::arg(md.z) / M_PI;
    if (c < 0) c += 8.0;
    if (c >= 8.0 - 1e-12) c = 0.0;
    md.central_charge = c;
    md.S_ = md.Y / std::abs(md.z);
    md.T_ = std::polar(1.0, -M_PI * c / 12.0) * md.Omega();
  }
  md.nondegenerate = nondegeneracy(md).nondegenerate;
  md.C = ring.conj;
  if (md.nondegenerate) {
    ComplexMatrix s2 = md.S() * md.S();
    for (int a = 0; a < m; ++a) {
      Eigen::Index at;
      s2.row(a).cwiseAbs().maxCoeff(&at);
      RealVector dev = (s2.row(a).transpose() - ComplexVector::Unit(m, at)).cwiseAbs();
      if (dev.maxCoeff() > 1e-9) {
        md.nondegenerate = false;  // S^2 not a permutation: degenerate or invalid data
        md.C = ring.conj;
        break;
      }
      md.C[a] = static_cast<int>(at);
    }
  }
  return md;
}

inline double verlinde_check(const ModularData& md, const FusionRing& ring) {
  if (!md.nondegenerate) throw Error("Verlinde requires non-degenerate data");
  const ComplexMatrix& s = md.S();
  const int m = md.m;
  double worst = 0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        Complex acc = 0;
        for (int r = 0; r < m; ++r) acc += s(a, r) / s(0, r) * s(b, r) * std::conj(s(c, r));
        worst = std::max(worst, std::abs(acc - static_cast<double>(ring.n(a, b, c))));
      }
  return worst;
}

inline std::vector<int> degenerate_sectors(const ModularData& md) {
  std::vector<int> out;
  for (int a = 0; a < md.m; ++a) {
    bool deg = true;
    for (int b = 0; b < md.m && deg; ++b) deg = std::abs(md.Y(a, b) - md.d(a) * md.d(b)) < 1e-6;
    if (deg) out.push_back(a);
  }
  return out;
}

// Residuals of the modular relations.
struct ModularResiduals {
  double unitarity = 0;     // ||S S^† - I||_F
  double st_cubed = 0;      // ||(ST)^3 - S^2||_F
  double s_squared_c = 0;   // ||S^2 - C||_F
  double omega_y = 0;       // ||ΩYΩYΩ - zY||_F
  double tstst = 0;         // ||TSTST - S||_F
  bool ct_commute = false;  // CT == TC exactly (h preserved by C)
};

inline ModularResiduals modular_residuals(const ModularData& md) {
  ModularResiduals r;
  const int m = md.m;
  ComplexMatrix om = md.Omega();
  r.omega_y = (om * md.Y * om * md.Y * om - md.z * md.Y).norm();
  const ComplexMatrix& s = md.S();
  const ComplexMatrix& t = md.T();
  ComplexMatrix st = s * t;
  r.unitarity = (s * s.adjoint() - ComplexMatrix::Identity(m, m)).norm();
  r.st_cubed = (st * st * st - s * s).norm();
  r.s_squared_c = (s * s - to_complex(permutation_matrix(md.C))).norm();
  r.tstst = (t * s * t * s * t - s).norm();
  r.ct_commute = true;
  for (int a = 0; a < m; ++a) r.ct_commute = r.ct_commute && md.h[md.C[a]] == md.h[a];
  return r;
}

inline ModelSpec tensor_product(const ModelSpec& a, const ModelSpec& b) {
  ModelSpec out;
  out.name = a.name + "*" + b.name;
  out.ring = tensor_product(a.ring, b.ring);
  for (const auto& x : a.h)
    for (const auto& y : b.h) out.h.push_back(mod_one(x + y));
  return out;
}

}  // namespace modinv
