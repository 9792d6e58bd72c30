#pragma once

/// The super-Fourier transform on superclass functions, together with the
/// weighted norm, support, and the uncertainty bound ceil(n^d/M).
///
/// A superclass function is a length-N complex vector indexed by classes.
/// In the symmetric case f and its transform share the class indexing; in
/// the J-symmetric case f lives on Y-classes and its transform on X-classes,
/// which are aligned so that X_i = J*Y_i.

#include <Eigen/Dense>
#include <vector>

#include "superfourier/table.hpp"

namespace superfourier {

using ClassFunction = Eigen::VectorXcd;

inline void require_length(const SupercharacterTable& t, const ClassFunction& f) {
  if (static_cast<std::size_t>(f.size()) != t.N)
    throw bad_parameter_error("class function has length " + std::to_string(f.size()) +
                              ", expected " + std::to_string(t.N));
}

/// fhat(X_i) = (1/sqrt(n^d)) * sum_l f(Y_l) * conj(sigma_l(X_i)).
/// For a J-symmetric theory the conjugated factor is (sigma_l o J)(X_i),
/// which the X_i = J*Y_i alignment turns into the same table column.
inline ClassFunction forward(const SupercharacterTable& t, const ClassFunction& f) {
  require_length(t, f);
  return (t.values.adjoint() * f) / std::sqrt(static_cast<double>(t.domain));
}

/// f(Y_i) = (1/sqrt(n^d)) * sum_l fhat(X_l) * sigma_l(Y_i).
inline ClassFunction inverse(const SupercharacterTable& t, const ClassFunction& fhat) {
  require_length(t, fhat);
  return (t.values.transpose() * fhat) / std::sqrt(static_cast<double>(t.domain));
}

struct FunctionNorms {
  double l2 = 0;   // weighted: (sum_l |X_l| |f(X_l)|^2)^{1/2}
  double sup = 0;  // max_l |f(X_l)|
};

inline FunctionNorms norms(const SupercharacterTable& t, const ClassFunction& f) {
  require_length(t, f);
  FunctionNorms out;
  double sq = 0;
  for (std::size_t l = 0; l < t.N; ++l) {
    const double a = std::abs(f(static_cast<Eigen::Index>(l)));
    sq += static_cast<double>(t.sizes_y[l]) * a * a;
    out.sup = std::max(out.sup, a);
  }
  out.l2 = std::sqrt(sq);
  return out;
}

constexpr double kSupportThreshold = 1e-8;

inline std::vector<std::size_t> support(const ClassFunction& f,
                                        double threshold = kSupportThreshold) {
  std::vector<std::size_t> idx;
  for (Eigen::Index i = 0; i < f.size(); ++i)
    if (std::abs(f(i)) > threshold) idx.push_back(static_cast<std::size_t>(i));
  return idx;
}

/// ceil(n^d / M) with M the largest class size; exact integer arithmetic.
inline u64 uncertainty_lhs(const SupercharacterTable& t) {
  u64 m = 0;
  for (u64 s : t.sizes_y) m = std::max(m, s);
  return (t.domain + m - 1) / m;
}

/// Whether ceil(n^d/M) <= |supp f| * |supp fhat| for this particular f.
inline bool check_uncertainty(const SupercharacterTable& t, const ClassFunction& f,
                              double threshold = kSupportThreshold) {
  require_length(t, f);
  const auto sf = support(f, threshold);
  if (sf.empty()) throw zero_function_error("uncertainty bound is stated for nonzero f");
  const auto sfh = support(forward(t, f), threshold);
  return uncertainty_lhs(t) <= static_cast<u64>(sf.size()) * static_cast<u64>(sfh.size());
}

/// Coordinates of f in the orthonormal basis s_l = sigma_l / sqrt(n^d |X_l|).
/// In this basis the matrix of the forward transform is exactly U*.
inline ClassFunction s_coordinates(const SupercharacterTable& t, const ClassFunction& f) {
  require_length(t, f);
  ClassFunction a(static_cast<Eigen::Index>(t.N));
  const double root_domain = std::sqrt(static_cast<double>(t.domain));
  for (std::size_t l = 0; l < t.N; ++l) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < t.N; ++i)
      acc += static_cast<double>(t.sizes_y[i]) * f(static_cast<Eigen::Index>(i)) *
             std::conj(t.values(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(i)));
    a(static_cast<Eigen::Index>(l)) =
        acc / (root_domain * std::sqrt(static_cast<double>(t.sizes_x[l])));
  }
  return a;
}

}  // namespace superfourier
