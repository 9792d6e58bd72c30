#pragma once

/// The superclass algebra: structure constants c_{i,j,k} counting solutions
/// of x + y = z with (x, y) in X_i x X_j and z a fixed representative of
/// X_k, the matrices T_i they induce, and the diagonalization identities
/// T_i U = U D_i.

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "superfourier/parallel.hpp"
#include "superfourier/table.hpp"
#include "superfourier/theory.hpp"

namespace superfourier {

struct StructureConstants {
  std::size_t N = 0;
  std::vector<std::uint32_t> c;  // c[(i*N + j)*N + k]

  std::uint32_t at(std::size_t i, std::size_t j, std::size_t k) const {
    return c[(i * N + j) * N + k];
  }
};

namespace detail {
/// Tallies pairs (x, y) in X_i x X_j with x + y = z for one fixed z,
/// into an N x N slice indexed [i*N + j].
inline void count_pairs(const SuperclassPartition& part, const ModVec& z,
                        std::vector<std::uint32_t>& slice) {
  const Modulus mod = part.modulus();
  const std::size_t d = part.dim();
  const u64 n = mod.value();
  const std::size_t N = part.class_count();
  for (std::size_t i = 0; i < N; ++i) {
    for (u64 code : part.superclass(i).members) {
      const ModVec x = ModVec::from_code(mod, d, code);
      u64 diff_code = 0;
      for (std::size_t t = 0; t < d; ++t) diff_code = diff_code * n + mod.sub(z[t], x[t]);
      ++slice[i * N + part.class_of_code(diff_code)];
    }
  }
}
}  // namespace detail

/// Counts c_{i,j,k} from the canonical representative of each X_k.
/// Defined for transpose-closed groups only.
inline StructureConstants compute_structure_constants(const Theory& t,
                                                      u64 tensor_cap = 100'000'000) {
  if (!t.is_symmetric())
    throw bad_parameter_error(
        "structure constants are defined for transpose-closed groups only");
  const auto& part = t.x_classes();
  const std::size_t N = part.class_count();
  if (static_cast<u64>(N) * N * N > tensor_cap)
    throw cap_exceeded_error("structure-constant tensor N^3 exceeds cap");

  StructureConstants sc;
  sc.N = N;
  sc.c.assign(N * N * N, 0);
  parallel_for(N, [&](std::size_t k) {
    std::vector<std::uint32_t> slice(N * N, 0);
    detail::count_pairs(part, part.superclass(k).rep, slice);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) sc.c[(i * N + j) * N + k] = slice[i * N + j];
  });
  return sc;
}

/// Recounts every class with a second representative and reports whether all
/// counts agree (Theorem: c_{i,j,k} does not depend on the representative).
inline bool representative_independent(const Theory& t, const StructureConstants& sc) {
  const auto& part = t.x_classes();
  const std::size_t N = sc.N;
  std::vector<char> ok(N, 1);
  parallel_for(N, [&](std::size_t k) {
    const auto& cls = part.superclass(k);
    if (cls.size() < 2) return;
    const ModVec alt = ModVec::from_code(part.modulus(), part.dim(), cls.members[1]);
    std::vector<std::uint32_t> recount(N * N, 0);
    detail::count_pairs(part, alt, recount);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (recount[i * N + j] != sc.at(i, j, k)) ok[k] = 0;
  });
  for (char v : ok)
    if (!v) return false;
  return true;
}

/// Exact conservation: sum_k c_{i,j,k} |X_k| = |X_i| |X_j| for all i, j.
inline bool conservation_holds(const StructureConstants& sc, const std::vector<u64>& sizes) {
  const std::size_t N = sc.N;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      u64 total = 0;
      for (std::size_t k = 0; k < N; ++k) total += u64(sc.at(i, j, k)) * sizes[k];
      if (total != sizes[i] * sizes[j]) return false;
    }
  return true;
}

struct TMatrixFamily {
  std::vector<Eigen::MatrixXd> t;    // [T_i]_{j,k} = c_{i,j,k} sqrt(|X_k|/|X_j|)
  std::vector<Eigen::VectorXcd> d;   // D_i = diag(sigma_i(X_1), ..., sigma_i(X_N))
};

inline TMatrixFamily build_T(const StructureConstants& sc, const SupercharacterTable& table) {
  if (sc.N != table.N) throw bad_parameter_error("structure constants and table disagree on N");
  const std::size_t N = sc.N;
  TMatrixFamily fam;
  fam.t.reserve(N);
  fam.d.reserve(N);
  for (std::size_t i = 0; i < N; ++i) {
    Eigen::MatrixXd ti(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k)
        ti(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
            static_cast<double>(sc.at(i, j, k)) *
            std::sqrt(static_cast<double>(table.sizes_x[k]) /
                      static_cast<double>(table.sizes_x[j]));
    fam.t.push_back(std::move(ti));
    fam.d.push_back(table.values.row(static_cast<Eigen::Index>(i)).transpose());
  }
  return fam;
}

/// Eigenvalues of T_i read off as diag(U* T_i U); the theorem guarantees
/// the conjugation is diagonal, so no eigensolver ordering ambiguity.
inline Eigen::VectorXcd t_eigenvalues(const UnitaryU& u, const Eigen::MatrixXd& ti) {
  return (u.m.adjoint() * ti.cast<Complex>() * u.m).diagonal();
}

struct Theorem2Report {
  double representative_err = 0;   // 1.0 when some recount mismatches
  double product_identity_err = 0; // residual of sigma_i sigma_j = sum_k c sigma_k
  double diagonalization_err = 0;  // max ||T_i U - U D_i||
  double normality_err = 0;        // max ||T_i^T T_i - T_i T_i^T||
  bool conservation_ok = false;
  bool d_vectors_full_rank = false;

  bool passed(double tol, std::size_t n_classes) const {
    return representative_err == 0 && conservation_ok && d_vectors_full_rank &&
           product_identity_err <= tol * static_cast<double>(n_classes) &&
           diagonalization_err <= tol && normality_err <= tol;
  }
};

inline Theorem2Report verify_theorem2(const Theory& theory, const StructureConstants& sc,
                                      const TMatrixFamily& fam,
                                      const SupercharacterTable& table, const UnitaryU& u) {
  Theorem2Report r;
  const std::size_t N = sc.N;

  r.representative_err = representative_independent(theory, sc) ? 0.0 : 1.0;
  r.conservation_ok = conservation_holds(sc, std::vector<u64>(table.sizes_x));

  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t l = 0; l < N; ++l) {
        Complex rhs{0.0, 0.0};
        for (std::size_t k = 0; k < N; ++k)
          rhs += static_cast<double>(sc.at(i, j, k)) *
                 table.values(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l));
        const Complex lhs = table.values(static_cast<Eigen::Index>(i),
                                         static_cast<Eigen::Index>(l)) *
                            table.values(static_cast<Eigen::Index>(j),
                                         static_cast<Eigen::Index>(l));
        r.product_identity_err = std::max(r.product_identity_err, std::abs(lhs - rhs));
      }

  for (std::size_t i = 0; i < N; ++i) {
    const Eigen::MatrixXcd ti = fam.t[i].cast<Complex>();
    const Eigen::MatrixXcd lhs = ti * u.m;
    const Eigen::MatrixXcd rhs = u.m * fam.d[i].asDiagonal();
    r.diagonalization_err = std::max(r.diagonalization_err, (lhs - rhs).cwiseAbs().maxCoeff());
    const Eigen::MatrixXd commutator =
        fam.t[i].transpose() * fam.t[i] - fam.t[i] * fam.t[i].transpose();
    r.normality_err = std::max(r.normality_err, commutator.cwiseAbs().maxCoeff());
  }

  // The stacked D_i diagonals are the rows of the table itself.
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(table.values);
  r.d_vectors_full_rank = qr.rank() == static_cast<Eigen::Index>(N);
  return r;
}

}  // namespace superfourier
