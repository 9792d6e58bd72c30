#pragma once

/// Supercharacter evaluation and the N x N table sigma_i(Y_j), plus the
/// unitary matrix U derived from it (symmetric and J-symmetric variants).
///
/// Every phase is exp(2*pi*i*r/n) for an exact integer residue r; floating
/// point enters only in the final summation of unit vectors.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "superfourier/parallel.hpp"
#include "superfourier/theory.hpp"

namespace superfourier {

using Complex = std::complex<double>;

/// exp(2*pi*i*r/n) lookup, tabulated for moderate n.
class PhaseTable {
 public:
  explicit PhaseTable(u64 n) : n_(n) {
    if (n_ <= kTableLimit) {
      roots_.resize(n_);
      for (u64 r = 0; r < n_; ++r) roots_[r] = phase_of(r);
    }
  }

  Complex operator()(u64 residue) const {
    return roots_.empty() ? phase_of(residue) : roots_[residue];
  }

 private:
  static constexpr u64 kTableLimit = 1u << 20;

  Complex phase_of(u64 r) const {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n_);
    return {std::cos(theta), std::sin(theta)};
  }

  u64 n_;
  std::vector<Complex> roots_;
};

/// sigma_{X_i}(v) as the orbit sum over the members of X_i.
inline Complex eval_supercharacter(const Theory& t, std::size_t i, const ModVec& v) {
  const auto& cls = t.x_classes().superclass(i);
  const Modulus mod = t.y_classes().modulus();
  PhaseTable phases(t.n());
  Complex acc{0.0, 0.0};
  for (u64 code : cls.members) acc += phases(dot(ModVec::from_code(mod, t.d(), code), v));
  return acc;
}

/// The same value through the stabilizer form:
/// (1/|stab(x)|) * sum over the group of e(A x . v / n),
/// with A ranging over the action that generated the X-classes.
inline Complex eval_supercharacter_stab(const Theory& t, std::size_t i, const ModVec& v) {
  const ModVec& rep = t.x_classes().superclass(i).rep;
  PhaseTable phases(t.n());
  Complex acc{0.0, 0.0};
  u64 stab = 0;
  for (const auto& a : t.group().elements()) {
    const ModVec image = t.is_symmetric() ? a * rep : a.inverse_transpose() * rep;
    if (image == rep) ++stab;
    acc += phases(dot(image, v));
  }
  return acc / static_cast<double>(stab);
}

struct SupercharacterTable {
  std::string theory_name;
  u64 n = 1;
  std::size_t d = 1;
  u64 domain = 1;  // n^d
  std::size_t N = 0;
  SymmetryKind symmetry = SymmetryKind::symmetric;
  std::vector<u64> sizes_x, sizes_y;
  std::vector<ModVec> reps_x, reps_y;
  std::vector<std::size_t> negation_x;  // involution with -X_i = X_{pi(i)}
  Eigen::MatrixXcd values;              // (i, j) = sigma_i(Y_j)

  double tol() const { return 1e-9 * std::max<double>(1.0, static_cast<double>(N)); }
};

inline SupercharacterTable build_table(const Theory& t) {
  const auto& xs = t.x_classes();
  const auto& ys = t.y_classes();
  const std::size_t N = xs.class_count();
  const std::size_t d = t.d();
  const u64 n = t.n();

  SupercharacterTable table;
  table.theory_name = t.name();
  table.n = n;
  table.d = d;
  table.domain = ys.domain_size();
  table.N = N;
  table.symmetry = t.symmetry().kind;
  for (std::size_t i = 0; i < N; ++i) {
    table.sizes_x.push_back(xs.superclass(i).size());
    table.sizes_y.push_back(ys.superclass(i).size());
    table.reps_x.push_back(xs.superclass(i).rep);
    table.reps_y.push_back(ys.superclass(i).rep);
  }
  table.negation_x = xs.negation_pairing();
  table.values.resize(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));

  const PhaseTable phases(n);
  const Modulus mod = ys.modulus();

  // Row i sums phases over the members of X_i at each column representative.
  parallel_for(N, [&](std::size_t i) {
    const auto& members = xs.superclass(i).members;
    std::vector<Residue> coords;
    coords.reserve(members.size() * d);
    for (u64 code : members) {
      const ModVec v = ModVec::from_code(mod, d, code);
      coords.insert(coords.end(), v.coords().begin(), v.coords().end());
    }
    for (std::size_t j = 0; j < N; ++j) {
      const ModVec& y = table.reps_y[j];
      Complex acc{0.0, 0.0};
      const Residue* x = coords.data();
      for (std::size_t m = 0; m < members.size(); ++m, x += d) {
        u64 r = 0;
        for (std::size_t k = 0; k < d; ++k) r = (r + mul_mod(x[k], y[k], n)) % n;
        acc += phases(r);
      }
      table.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
    }
  });
  return table;
}

struct UnitaryU {
  Eigen::MatrixXcd m;
  std::vector<std::size_t> negation;  // P interchanges i, j when X_i = -X_j
  SymmetryKind symmetry = SymmetryKind::symmetric;
  std::size_t N = 0;
  double tol = 1e-9;

  Eigen::MatrixXd permutation_matrix() const {
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(N),
                                              static_cast<Eigen::Index>(N));
    for (std::size_t i = 0; i < N; ++i)
      p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(negation[i])) = 1.0;
    return p;
  }
};

/// U = (1/sqrt(n^d)) [ sigma_i(Y_j) sqrt(|Y_j|) / sqrt(|X_i|) ].
/// Throws unitarity_error when ||U U* - I||_max exceeds the table tolerance;
/// that indicates an upstream bug, not a user error.
inline UnitaryU build_U(const SupercharacterTable& t) {
  UnitaryU u;
  u.N = t.N;
  u.symmetry = t.symmetry;
  u.negation = t.negation_x;
  u.tol = t.tol();
  const double scale = 1.0 / std::sqrt(static_cast<double>(t.domain));
  u.m.resize(t.values.rows(), t.values.cols());
  for (std::size_t i = 0; i < t.N; ++i)
    for (std::size_t j = 0; j < t.N; ++j)
      u.m(i, j) = t.values(i, j) * scale * std::sqrt(static_cast<double>(t.sizes_y[j])) /
                  std::sqrt(static_cast<double>(t.sizes_x[i]));
  const double err = (u.m * u.m.adjoint() - Eigen::MatrixXcd::Identity(u.m.rows(), u.m.cols()))
                         .cwiseAbs()
                         .maxCoeff();
  if (err > u.tol)
    throw unitarity_error("U is not unitary: ||UU*-I||_max = " + std::to_string(err));
  return u;
}

struct LemmaUReport {
  double unitarity_err = 0;    // ||U U* - I||
  double symmetry_err = 0;     // ||U - U^T||
  double square_vs_p_err = 0;  // ||U^2 - P||      (asserted for symmetric only)
  double fourth_power_err = 0; // ||U^4 - I||      (asserted for symmetric only)

  bool passed(double tol, SymmetryKind kind) const {
    if (unitarity_err > tol || symmetry_err > tol) return false;
    if (kind == SymmetryKind::symmetric)
      return square_vs_p_err <= tol && fourth_power_err <= tol;
    return true;
  }
};

/// Max-norm deviations for the structural identities of U. The square and
/// fourth-power entries are reported for every theory but only count as
/// requirements when the group is transpose-closed.
inline LemmaUReport verify_lemma_U(const UnitaryU& u) {
  LemmaUReport r;
  const auto I = Eigen::MatrixXcd::Identity(u.m.rows(), u.m.cols());
  r.unitarity_err = (u.m * u.m.adjoint() - I).cwiseAbs().maxCoeff();
  r.symmetry_err = (u.m - u.m.transpose()).cwiseAbs().maxCoeff();
  const Eigen::MatrixXcd u2 = u.m * u.m;
  r.square_vs_p_err = (u2 - u.permutation_matrix().cast<Complex>()).cwiseAbs().maxCoeff();
  r.fourth_power_err = (u2 * u2 - I).cwiseAbs().maxCoeff();
  return r;
}

/// Counts singular 2x2 minors of U (determinant magnitude below tol).
/// The DFT matrix has none; several supercharacter unitaries have many.
inline u64 count_singular_2x2_minors(const Eigen::MatrixXcd& m, double tol = 1e-9) {
  u64 count = 0;
  for (Eigen::Index r1 = 0; r1 < m.rows(); ++r1)
    for (Eigen::Index r2 = r1 + 1; r2 < m.rows(); ++r2)
      for (Eigen::Index c1 = 0; c1 < m.cols(); ++c1)
        for (Eigen::Index c2 = c1 + 1; c2 < m.cols(); ++c2)
          if (std::abs(m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) < tol) ++count;
  return count;
}

}  // namespace superfourier
