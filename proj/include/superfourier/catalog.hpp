#pragma once

/// Named theory builders for the whole catalog of exponential-sum theories
/// (maximum collapse, DFT, DCT, Gaussian periods, Kloosterman, Heilbronn,
/// Ramanujan, symmetric-group, and the J-symmetric triangular family),
/// together with closed-form oracles for each sum.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "superfourier/arith.hpp"
#include "superfourier/table.hpp"
#include "superfourier/theory.hpp"
#include "superfourier/transform.hpp"

namespace superfourier {

namespace detail {
inline void require_odd_prime(u64 p, const char* who) {
  if (!is_prime(p) || p == 2)
    throw bad_parameter_error(std::string(who) + " requires an odd prime p, got " +
                              std::to_string(p));
}
inline ModMatrix scalar_matrix(Modulus mod, Residue v) {
  return ModMatrix(mod, 1, {v});
}
}  // namespace detail

/// Gamma = GL_d(Z/nZ): two classes, {0} and everything else.
inline Theory max_collapse(u64 n, std::size_t d) {
  if (n < 2) throw bad_parameter_error("max-collapse requires n >= 2");
  return Theory::build("max-collapse(" + std::to_string(n) + "," + std::to_string(d) + ")",
                       MatrixGroup::general_linear(n, d));
}

/// Gamma = {I}: every class is a singleton and U is the DFT matrix.
inline Theory dft(u64 n, std::size_t d = 1) {
  const Modulus mod(n);
  return Theory::build("dft(" + std::to_string(n) + (d == 1 ? "" : "," + std::to_string(d)) + ")",
                       MatrixGroup::from_elements({ModMatrix::identity(mod, d)}));
}

/// Gamma = {+1, -1}: U is a discrete cosine transform matrix.
inline Theory dct(u64 n) {
  if (n < 2) throw bad_parameter_error("dct requires n >= 2");
  const Modulus mod(n);
  return Theory::build("dct(" + std::to_string(n) + ")",
                       MatrixGroup::closure(std::vector<ModMatrix>{
                           detail::scalar_matrix(mod, mod.reduce_u(n - 1))}));
}

/// Gamma = <g^k> for a primitive root g mod p; k+1 classes, the nontrivial
/// ones being the cosets g^j * Gamma whose orbit sums are Gaussian periods.
inline Theory gauss(u64 p, u64 k) {
  detail::require_odd_prime(p, "gauss");
  if (k == 0 || (p - 1) % k != 0)
    throw bad_parameter_error("gauss requires k | p-1, got k = " + std::to_string(k));
  const Modulus mod(p);
  const u64 g = primitive_root(p);
  return Theory::build("gauss(" + std::to_string(p) + "," + std::to_string(k) + ")",
                       MatrixGroup::closure(std::vector<ModMatrix>{
                           detail::scalar_matrix(mod, pow_mod(g, k, p))}));
}

/// Gamma = {diag(u, u^{-1})} acting on (Z/pZ)^2; the nontrivial hyperbola
/// orbits carry Kloosterman sums.
inline Theory kloosterman(u64 p) {
  detail::require_odd_prime(p, "kloosterman");
  const Modulus mod(p);
  const u64 g = primitive_root(p);
  ModMatrix gen(mod, 2, {g, 0, 0, inverse_mod(g, p)});
  return Theory::build("kloosterman(" + std::to_string(p) + ")",
                       MatrixGroup::closure(std::vector<ModMatrix>{gen}));
}

/// Gamma = {l^p mod p^2 : 1 <= l <= p-1} acting on Z/p^2Z, materialized
/// directly from its defining list.
inline Theory heilbronn(u64 p) {
  detail::require_odd_prime(p, "heilbronn");
  const u64 p2 = p * p;
  const Modulus mod(p2);
  std::vector<ModMatrix> elems;
  for (u64 l = 1; l < p; ++l)
    elems.push_back(detail::scalar_matrix(mod, pow_mod(l, p, p2)));
  return Theory::build("heilbronn(" + std::to_string(p) + ")",
                       MatrixGroup::from_elements(std::move(elems)));
}

/// Gamma = (Z/nZ)^x: orbits are {x : gcd(x, n) = n/d} over divisors d of n,
/// and the supercharacters are Ramanujan sums c_d.
inline Theory ramanujan(u64 n) {
  return Theory::build("ramanujan(" + std::to_string(n) + ")",
                       MatrixGroup::general_linear(n, 1));
}

/// Gamma = S_d as permutation matrices acting on (Z/nZ)^d.
inline Theory symmetric(u64 n, std::size_t d) {
  return Theory::build("symmetric(" + std::to_string(n) + "," + std::to_string(d) + ")",
                       MatrixGroup::permutation_matrices(n, d));
}

/// Gamma = {[[u, a], [0, u]]} with J = [[0, 1], [1, 0]]; the paper's
/// J-symmetric worked example.
inline Theory jsym_triangular(u64 p) {
  detail::require_odd_prime(p, "jsym-triangular");
  const Modulus mod(p);
  std::vector<ModMatrix> elems;
  for (u64 u = 1; u < p; ++u)
    for (u64 a = 0; a < p; ++a) elems.emplace_back(mod, 2, std::vector<Residue>{u, a, 0, u});
  ModMatrix j(mod, 2, {0, 1, 1, 0});
  return Theory::build("jsym-triangular(" + std::to_string(p) + ")",
                       MatrixGroup::from_elements(std::move(elems)), j);
}

// ---------------------------------------------------------------------------
// Closed-form oracles.
// ---------------------------------------------------------------------------

/// c_n(x) by direct summation over residues coprime to n; the imaginary
/// part must vanish to 1e-9 before rounding.
inline std::int64_t ramanujan_sum(u64 n, u64 x) {
  if (n == 0) throw bad_parameter_error("ramanujan_sum requires n >= 1");
  const PhaseTable phases(n);
  Complex acc{0.0, 0.0};
  for (u64 j = 1; j <= n; ++j)
    if (std::gcd(j, n) == 1) acc += phases(mul_mod(j % n, x % n, n));
  if (std::abs(acc.imag()) >= 1e-9)
    throw internal_inconsistency_error("ramanujan_sum has a nonreal value");
  return std::llround(acc.real());
}

/// von Sterneck's closed form: c_n(x) = mu(n/(n,x)) phi(n) / phi(n/(n,x)).
inline std::int64_t von_sterneck(u64 n, u64 x) {
  if (n == 0) throw bad_parameter_error("von_sterneck requires n >= 1");
  const u64 m = n / std::gcd(n, x % n);  // gcd(n, 0) = n
  return std::int64_t(mobius(m)) * std::int64_t(totient(n) / totient(m));
}

/// K(a,b) = sum over units l of e((a l + b l^{-1})/p); always real.
inline double kloosterman_sum(u64 p, u64 a, u64 b) {
  detail::require_odd_prime(p, "kloosterman_sum");
  const PhaseTable phases(p);
  Complex acc{0.0, 0.0};
  for (u64 l = 1; l < p; ++l) {
    const u64 r = (mul_mod(a % p, l, p) + mul_mod(b % p, inverse_mod(l, p), p)) % p;
    acc += phases(r);
  }
  if (std::abs(acc.imag()) >= 1e-9)
    throw internal_inconsistency_error("Kloosterman sum has a nonreal value");
  return acc.real();
}

/// H_p(a) = sum over l of e(a l^p / p^2).
inline Complex heilbronn_sum(u64 p, u64 a) {
  detail::require_odd_prime(p, "heilbronn_sum");
  const u64 p2 = p * p;
  const PhaseTable phases(p2);
  Complex acc{0.0, 0.0};
  for (u64 l = 1; l < p; ++l) acc += phases(mul_mod(a % p2, pow_mod(l, p, p2), p2));
  return acc;
}

/// Gaussian periods eta_j = sum over h in <g^k> of e(g^j h / p), j < k.
inline std::vector<Complex> gauss_periods(u64 p, u64 k) {
  detail::require_odd_prime(p, "gauss_periods");
  if (k == 0 || (p - 1) % k != 0)
    throw bad_parameter_error("gauss_periods requires k | p-1");
  const u64 g = primitive_root(p);
  const u64 h0 = pow_mod(g, k, p);
  std::vector<u64> subgroup{1};
  for (u64 t = h0; t != 1; t = mul_mod(t, h0, p)) subgroup.push_back(t);
  const PhaseTable phases(p);
  std::vector<Complex> eta(k, Complex{0.0, 0.0});
  u64 gj = 1;
  for (u64 j = 0; j < k; ++j) {
    for (u64 h : subgroup) eta[j] += phases(mul_mod(gj, h, p));
    gj = mul_mod(gj, g, p);
  }
  return eta;
}

/// Quadratic Gauss sum G_p(a) = sum_{m=0}^{p-1} e(a m^2 / p).
inline Complex gauss_sum(u64 p, u64 a) {
  detail::require_odd_prime(p, "gauss_sum");
  const PhaseTable phases(p);
  Complex acc{0.0, 0.0};
  for (u64 m = 0; m < p; ++m) acc += phases(mul_mod(a % p, mul_mod(m, m, p), p));
  return acc;
}

/// ceil(n^d (q!)^n (q+1)^r / d!) with d = q n + r: the uncertainty constant
/// for the symmetric-group theory, via exact 128-bit integers.
inline u64 symmetric_uncertainty_constant(u64 n, u64 d) {
  if (n == 0 || d == 0) throw bad_parameter_error("symmetric_uncertainty_constant needs n, d >= 1");
  const u64 q = d / n;
  const u64 r = d % n;
  u128 a = 1;
  for (u64 i = 0; i < d; ++i) a = checked_mul(a, n);
  const u128 qf = factorial128(static_cast<unsigned>(q));
  for (u64 i = 0; i < n; ++i) a = checked_mul(a, qf);
  for (u64 i = 0; i < r; ++i) a = checked_mul(a, q + 1);
  const u128 b = factorial128(static_cast<unsigned>(d));
  const u128 lhs = (a + b - 1) / b;
  if (lhs > u128(UINT64_MAX)) throw overflow_error("uncertainty constant exceeds 64 bits");
  return static_cast<u64>(lhs);
}

/// Expansion of an even function modulo n in the Ramanujan basis:
/// alpha(d) = (1/n) sum_{k|n} f(n/k) c_k(n/d), computed as a rescaled
/// super-Fourier transform on the ramanujan(n) theory.
///
/// `f_on_divisors[i]` is f(m) for the i-th divisor m of n in ascending
/// order; f(n) doubles as f(0). Returns alpha indexed by divisors of n in
/// ascending order.
inline std::vector<Complex> even_function_expand(u64 n,
                                                 const std::vector<Complex>& f_on_divisors) {
  const std::vector<u64> divs = divisors(n);
  if (f_on_divisors.size() != divs.size())
    throw bad_parameter_error("even_function_expand: expected one value per divisor of n (" +
                              std::to_string(divs.size()) + " values)");
  const Theory theory = ramanujan(n);
  const SupercharacterTable table = build_table(theory);
  auto divisor_index = [&](u64 v) {
    return static_cast<std::size_t>(std::lower_bound(divs.begin(), divs.end(), v) - divs.begin());
  };
  // Class i is {x : gcd(x, n) = m_i} with representative m_i itself; the
  // zero class (i = 0) stands for m = n. Its supercharacter is c_{n/m_i}.
  ClassFunction f(static_cast<Eigen::Index>(table.N));
  for (std::size_t i = 0; i < table.N; ++i) {
    const u64 m = (i == 0) ? n : table.reps_y[i][0];
    f(static_cast<Eigen::Index>(i)) = f_on_divisors[divisor_index(m)];
  }
  const ClassFunction fhat = forward(table, f);
  std::vector<Complex> alpha(divs.size());
  for (std::size_t i = 0; i < table.N; ++i) {
    const u64 m = (i == 0) ? n : table.reps_y[i][0];
    alpha[divisor_index(n / m)] =
        fhat(static_cast<Eigen::Index>(i)) / std::sqrt(static_cast<double>(n));
  }
  return alpha;
}

// ---------------------------------------------------------------------------
// Named dispatch and the default verification battery.
// ---------------------------------------------------------------------------

struct TheoryParams {
  std::optional<u64> n, d, p, k;
};

inline Theory build_named_theory(const std::string& kind, const TheoryParams& prm) {
  auto need = [&](const std::optional<u64>& v, const char* flag) {
    if (!v) throw bad_parameter_error("theory '" + kind + "' requires --" + flag);
    return *v;
  };
  if (kind == "max-collapse") return max_collapse(need(prm.n, "n"), need(prm.d, "d"));
  if (kind == "dft") return dft(need(prm.n, "n"), prm.d.value_or(1));
  if (kind == "dct") return dct(need(prm.n, "n"));
  if (kind == "gauss") return gauss(need(prm.p, "p"), need(prm.k, "k"));
  if (kind == "kloosterman") return kloosterman(need(prm.p, "p"));
  if (kind == "heilbronn") return heilbronn(need(prm.p, "p"));
  if (kind == "ramanujan") return ramanujan(need(prm.n, "n"));
  if (kind == "symmetric") return symmetric(need(prm.n, "n"), need(prm.d, "d"));
  if (kind == "jsym-triangular") return jsym_triangular(need(prm.p, "p"));
  throw bad_parameter_error("unknown theory kind: " + kind);
}

struct BatteryEntry {
  std::string kind;
  TheoryParams params;
  std::string label;
};

inline u64 multiset_class_count(u64 n, u64 d) {
  u128 num = 1, den = 1;
  for (u64 i = 1; i <= d; ++i) {
    num = checked_mul(num, n + i - 1);
    den = checked_mul(den, i);
  }
  return static_cast<u64>(num / den);
}

/// The default battery: every catalog construction at sizes that finish in
/// seconds. The symmetric-group grid is bounded both by n^d <= 1e5 and by
/// class count, which keeps the random-function suites fast.
inline std::vector<BatteryEntry> default_battery() {
  std::vector<BatteryEntry> out;
  auto add = [&out](std::string kind, TheoryParams prm, std::string label) {
    out.push_back({std::move(kind), prm, std::move(label)});
  };
  for (u64 n : {2, 3, 5})
    for (u64 d : {1, 2})
      add("max-collapse", {.n = n, .d = d},
          "max-collapse(" + std::to_string(n) + "," + std::to_string(d) + ")");
  for (u64 n = 1; n <= 16; ++n) add("dft", {.n = n}, "dft(" + std::to_string(n) + ")");
  for (u64 n = 2; n <= 16; ++n) add("dct", {.n = n}, "dct(" + std::to_string(n) + ")");
  for (u64 p : {5, 7, 13, 17, 19})
    for (u64 k : divisors(p - 1))
      add("gauss", {.p = p, .k = k},
          "gauss(" + std::to_string(p) + "," + std::to_string(k) + ")");
  for (u64 p : {3, 5, 7, 11, 13})
    add("kloosterman", {.p = p}, "kloosterman(" + std::to_string(p) + ")");
  for (u64 p : {3, 5, 7}) add("heilbronn", {.p = p}, "heilbronn(" + std::to_string(p) + ")");
  for (u64 n = 1; n <= 36; ++n) add("ramanujan", {.n = n}, "ramanujan(" + std::to_string(n) + ")");
  for (u64 d = 2; d <= 5; ++d)
    for (u64 n = 2; n <= 12; ++n) {
      u128 domain = 1;
      for (u64 i = 0; i < d; ++i) domain *= n;
      if (domain > 100'000 || multiset_class_count(n, d) > 500) continue;
      add("symmetric", {.n = n, .d = d},
          "symmetric(" + std::to_string(n) + "," + std::to_string(d) + ")");
    }
  for (u64 p : {3, 5, 7, 11})
    add("jsym-triangular", {.p = p}, "jsym-triangular(" + std::to_string(p) + ")");
  return out;
}

/// A fast subset used for smoke tests.
inline std::vector<BatteryEntry> quick_battery() {
  std::vector<BatteryEntry> out;
  out.push_back({"max-collapse", {.n = 3, .d = 2}, "max-collapse(3,2)"});
  out.push_back({"dft", {.n = 8}, "dft(8)"});
  out.push_back({"dct", {.n = 9}, "dct(9)"});
  out.push_back({"gauss", {.p = 13, .k = 2}, "gauss(13,2)"});
  out.push_back({"kloosterman", {.p = 5}, "kloosterman(5)"});
  out.push_back({"heilbronn", {.p = 5}, "heilbronn(5)"});
  out.push_back({"ramanujan", {.n = 12}, "ramanujan(12)"});
  out.push_back({"symmetric", {.n = 4, .d = 3}, "symmetric(4,3)"});
  out.push_back({"jsym-triangular", {.p = 5}, "jsym-triangular(5)"});
  return out;
}

}  // namespace superfourier
