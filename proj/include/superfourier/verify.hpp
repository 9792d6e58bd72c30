#pragma once

/// The verification battery: for each theory it builds the partition, table,
/// and unitary, checks the structural identities of U, runs seeded random
/// superclass functions through the transform (Parseval, inversion, the
/// square/fourth-power identities, and the uncertainty bound), and for small
/// transpose-closed theories verifies the superclass-algebra identities.

#include <random>
#include <sstream>

#include "superfourier/algebra.hpp"
#include "superfourier/catalog.hpp"
#include "superfourier/parallel.hpp"
#include "superfourier/table.hpp"
#include "superfourier/transform.hpp"

namespace superfourier {

struct VerifyOptions {
  int random_functions = 1000;
  u64 seed = 0;
  std::size_t theorem2_max_classes = 60;
  std::size_t s_basis_max_classes = 150;
  std::optional<double> tolerance_override;
};

struct TheoryReport {
  std::string label;
  u64 n = 0;
  std::size_t d = 0;
  std::size_t N = 0;
  SymmetryKind symmetry = SymmetryKind::symmetric;
  double tol = 0;

  LemmaUReport lemma;
  double parseval_rel_err = 0;     // max |  ||fhat|| - ||f||  | / ||f||
  double inversion_err = 0;        // max || inverse(forward f) - f ||_max
  double square_negation_err = 0;  // max || F^2 f - f(-.) ||_max   (symmetric)
  double fourth_power_err = 0;     // max || F^4 f - f ||_max       (symmetric)
  double s_basis_err = -1;         // || mat(F) - U* ||_max, when checked
  u64 uncertainty_violations = 0;

  bool theorem2_ran = false;
  Theorem2Report theorem2;

  bool passed() const {
    if (!lemma.passed(tol, symmetry)) return false;
    if (parseval_rel_err > tol || inversion_err > tol) return false;
    if (symmetry == SymmetryKind::symmetric &&
        (square_negation_err > tol || fourth_power_err > tol))
      return false;
    if (s_basis_err > tol) return false;
    if (uncertainty_violations > 0) return false;
    if (theorem2_ran && !theorem2.passed(tol, N)) return false;
    return true;
  }
};

inline u64 fnv1a(const std::string& s) {
  u64 h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Sparse random superclass functions: support size uniform in [1, N],
/// standard complex Gaussian values on the support.
inline Eigen::MatrixXcd random_class_functions(std::size_t N, int count, u64 seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> support_size(1, N);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(N), count);
  std::vector<std::size_t> idx(N);
  for (std::size_t i = 0; i < N; ++i) idx[i] = i;
  for (int c = 0; c < count; ++c) {
    const std::size_t s = support_size(rng);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t t = 0; t < s; ++t)
      f(static_cast<Eigen::Index>(idx[t]), c) = Complex(gauss(rng), gauss(rng));
  }
  return f;
}

inline TheoryReport run_theory_checks(const Theory& theory, const VerifyOptions& opts = {}) {
  const SupercharacterTable table = build_table(theory);
  const UnitaryU u = build_U(table);

  TheoryReport r;
  r.label = theory.name();
  r.n = table.n;
  r.d = table.d;
  r.N = table.N;
  r.symmetry = table.symmetry;
  r.tol = opts.tolerance_override.value_or(table.tol());
  r.lemma = verify_lemma_U(u);

  const std::size_t N = table.N;
  const double root_domain = std::sqrt(static_cast<double>(table.domain));
  const u64 lhs = uncertainty_lhs(table);

  const Eigen::MatrixXcd f = random_class_functions(
      N, opts.random_functions, opts.seed ^ fnv1a(theory.name()));
  const Eigen::MatrixXcd fhat = (table.values.adjoint() * f) / root_domain;
  const Eigen::MatrixXcd finv = (table.values.transpose() * fhat) / root_domain;
  Eigen::MatrixXcd f2, f4;
  if (table.symmetry == SymmetryKind::symmetric) {
    f2 = (table.values.adjoint() * fhat) / root_domain;
    f4 = (table.values.adjoint() * ((table.values.adjoint() * f2) / root_domain)) / root_domain;
  }

  Eigen::VectorXd weights(static_cast<Eigen::Index>(N));
  for (std::size_t i = 0; i < N; ++i)
    weights(static_cast<Eigen::Index>(i)) = static_cast<double>(table.sizes_y[i]);

  for (int c = 0; c < opts.random_functions; ++c) {
    const auto col = f.col(c);
    const auto colhat = fhat.col(c);
    const double norm_f = std::sqrt((weights.array() * col.cwiseAbs2().array()).sum());
    const double norm_fhat = std::sqrt((weights.array() * colhat.cwiseAbs2().array()).sum());
    r.parseval_rel_err =
        std::max(r.parseval_rel_err, std::abs(norm_fhat - norm_f) / norm_f);
    r.inversion_err = std::max(r.inversion_err, (finv.col(c) - col).cwiseAbs().maxCoeff());

    if (table.symmetry == SymmetryKind::symmetric) {
      double sq = 0;
      for (std::size_t i = 0; i < N; ++i)
        sq = std::max(sq, std::abs(f2(static_cast<Eigen::Index>(i), c) -
                                   col(static_cast<Eigen::Index>(table.negation_x[i]))));
      r.square_negation_err = std::max(r.square_negation_err, sq);
      r.fourth_power_err =
          std::max(r.fourth_power_err, (f4.col(c) - col).cwiseAbs().maxCoeff());
    }

    u64 supp_f = 0, supp_fhat = 0;
    for (std::size_t i = 0; i < N; ++i) {
      if (std::abs(col(static_cast<Eigen::Index>(i))) > kSupportThreshold) ++supp_f;
      if (std::abs(colhat(static_cast<Eigen::Index>(i))) > kSupportThreshold) ++supp_fhat;
    }
    if (lhs > supp_f * supp_fhat) ++r.uncertainty_violations;
  }

  // Matrix of the forward transform in the orthonormal s-basis vs U*.
  // Asserted for transpose-closed groups; for J-symmetric theories only
  // Parseval and inversion are claimed.
  if (theory.is_symmetric() && N <= opts.s_basis_max_classes) {
    Eigen::VectorXd inv_sx(static_cast<Eigen::Index>(N));
    for (std::size_t i = 0; i < N; ++i)
      inv_sx(static_cast<Eigen::Index>(i)) =
          1.0 / std::sqrt(static_cast<double>(table.sizes_x[i]) * table.domain);
    // Columns: s_j expressed on classes.
    const Eigen::MatrixXcd s_mat = table.values.transpose() * inv_sx.asDiagonal();
    const Eigen::MatrixXcd fwd_s = (table.values.adjoint() * s_mat) / root_domain;
    // Back to s-coordinates: a_l = sum_i |X_i| g(X_i) conj(V(l,i)) / sqrt(n^d |X_l|).
    const Eigen::MatrixXcd coords =
        inv_sx.asDiagonal() * (table.values.conjugate() * (weights.asDiagonal() * fwd_s));
    r.s_basis_err = (coords - u.m.adjoint()).cwiseAbs().maxCoeff();
  }

  if (theory.is_symmetric() && N <= opts.theorem2_max_classes) {
    const StructureConstants sc = compute_structure_constants(theory);
    const TMatrixFamily fam = build_T(sc, table);
    r.theorem2 = verify_theorem2(theory, sc, fam, table, u);
    r.theorem2_ran = true;
  }
  return r;
}

inline std::vector<TheoryReport> run_battery(const std::vector<BatteryEntry>& battery,
                                             const VerifyOptions& opts = {}) {
  std::vector<TheoryReport> reports(battery.size());
  parallel_for(battery.size(), [&](std::size_t i) {
    const Theory theory = build_named_theory(battery[i].kind, battery[i].params);
    reports[i] = run_theory_checks(theory, opts);
  });
  return reports;
}

inline std::string format_report_line(const TheoryReport& r) {
  std::ostringstream os;
  os << (r.passed() ? "pass" : "FAIL") << "  " << r.label << "  N=" << r.N << "  max residuals:"
     << " unitary=" << r.lemma.unitarity_err << " sym=" << r.lemma.symmetry_err;
  if (r.symmetry == SymmetryKind::symmetric)
    os << " U2-P=" << r.lemma.square_vs_p_err << " U4-I=" << r.lemma.fourth_power_err;
  os << " parseval=" << r.parseval_rel_err << " inv=" << r.inversion_err;
  if (r.symmetry == SymmetryKind::symmetric)
    os << " F2=" << r.square_negation_err << " F4=" << r.fourth_power_err;
  if (r.s_basis_err >= 0) os << " sbasis=" << r.s_basis_err;
  os << " uncert-viol=" << r.uncertainty_violations;
  if (r.theorem2_ran)
    os << " TU-UD=" << r.theorem2.diagonalization_err
       << " normal=" << r.theorem2.normality_err
       << " product=" << r.theorem2.product_identity_err;
  return os.str();
}

}  // namespace superfourier
