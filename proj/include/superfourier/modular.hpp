#pragma once

/// Exact arithmetic over Z/nZ for scalars, vectors, and square matrices,
/// including inverses modulo composite n. Residues are kept canonical in
/// [0, n) after every operation; all values are immutable once built.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "superfourier/arith.hpp"
#include "superfourier/errors.hpp"

namespace superfourier {

using Residue = std::uint64_t;

class Modulus {
 public:
  explicit Modulus(u64 n) : n_(n) {
    if (n == 0) throw bad_parameter_error("modulus must be >= 1");
  }

  u64 value() const { return n_; }

  Residue reduce(std::int64_t x) const {
    std::int64_t m = x % static_cast<std::int64_t>(n_);
    if (m < 0) m += static_cast<std::int64_t>(n_);
    return static_cast<Residue>(m);
  }
  Residue reduce_u(u64 x) const { return x % n_; }

  Residue add(Residue a, Residue b) const { return (a + b) % n_; }
  Residue sub(Residue a, Residue b) const { return (a + n_ - b) % n_; }
  Residue mul(Residue a, Residue b) const { return mul_mod(a, b, n_); }
  Residue neg(Residue a) const { return a == 0 ? 0 : n_ - a; }
  Residue inverse(Residue a) const { return inverse_mod(a, n_); }
  bool is_unit(Residue a) const { return std::gcd(a % n_, n_) == 1; }

  bool operator==(const Modulus& o) const = default;

 private:
  u64 n_;
};

/// An element of G = (Z/nZ)^d.
class ModVec {
 public:
  ModVec(Modulus mod, std::vector<Residue> coords) : mod_(mod), coords_(std::move(coords)) {
    if (coords_.empty()) throw bad_parameter_error("vector dimension must be >= 1");
    for (auto& c : coords_) c = mod_.reduce_u(c);
  }

  static ModVec zero(Modulus mod, std::size_t d) {
    return ModVec(mod, std::vector<Residue>(d, 0));
  }

  const Modulus& modulus() const { return mod_; }
  std::size_t dim() const { return coords_.size(); }
  Residue operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Residue>& coords() const { return coords_; }

  ModVec negated() const {
    std::vector<Residue> c(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) c[i] = mod_.neg(coords_[i]);
    return ModVec(mod_, std::move(c));
  }

  /// Mixed-radix code in [0, n^d); coordinate 0 is most significant, so the
  /// code order coincides with lexicographic order on coordinates.
  u64 code() const {
    u64 c = 0;
    for (Residue x : coords_) c = c * mod_.value() + x;
    return c;
  }

  static ModVec from_code(Modulus mod, std::size_t d, u64 code) {
    std::vector<Residue> c(d);
    for (std::size_t i = d; i-- > 0;) {
      c[i] = code % mod.value();
      code /= mod.value();
    }
    return ModVec(mod, std::move(c));
  }

  bool operator==(const ModVec& o) const { return mod_ == o.mod_ && coords_ == o.coords_; }
  auto operator<=>(const ModVec& o) const { return coords_ <=> o.coords_; }

  /// Parses "0,1,2".
  static ModVec parse(Modulus mod, std::string_view text);
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(coords_[i]);
    }
    return s;
  }

 private:
  Modulus mod_;
  std::vector<Residue> coords_;
};

/// Dot product mod n.
inline Residue dot(const ModVec& u, const ModVec& v) {
  if (!(u.modulus() == v.modulus()) || u.dim() != v.dim())
    throw bad_parameter_error("dot: modulus or dimension mismatch");
  const u64 n = u.modulus().value();
  u64 acc = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) acc = (acc + mul_mod(u[i], v[i], n)) % n;
  return acc;
}

/// A d x d matrix over Z/nZ, row-major.
class ModMatrix {
 public:
  ModMatrix(Modulus mod, std::size_t d) : mod_(mod), dim_(d), e_(d * d, 0) {
    if (d == 0) throw bad_parameter_error("matrix dimension must be >= 1");
  }
  ModMatrix(Modulus mod, std::size_t d, std::vector<Residue> entries)
      : mod_(mod), dim_(d), e_(std::move(entries)) {
    if (d == 0 || e_.size() != d * d) throw bad_parameter_error("matrix entry count mismatch");
    for (auto& x : e_) x = mod_.reduce_u(x);
  }

  static ModMatrix identity(Modulus mod, std::size_t d) {
    ModMatrix m(mod, d);
    if (mod.value() > 1)
      for (std::size_t i = 0; i < d; ++i) m.e_[i * d + i] = 1;
    return m;
  }

  const Modulus& modulus() const { return mod_; }
  std::size_t dim() const { return dim_; }
  Residue at(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }
  const std::vector<Residue>& entries() const { return e_; }

  ModMatrix operator*(const ModMatrix& b) const {
    require_compatible(b.mod_, b.dim_);
    ModMatrix r(mod_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Residue aik = e_[i * dim_ + k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j)
          r.e_[i * dim_ + j] =
              mod_.add(r.e_[i * dim_ + j], mod_.mul(aik, b.e_[k * dim_ + j]));
      }
    return r;
  }

  ModVec operator*(const ModVec& v) const {
    require_compatible(v.modulus(), v.dim());
    std::vector<Residue> r(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      u64 acc = 0;
      for (std::size_t j = 0; j < dim_; ++j)
        acc = mod_.add(acc, mod_.mul(e_[i * dim_ + j], v[j]));
      r[i] = acc;
    }
    return ModVec(mod_, std::move(r));
  }

  ModMatrix transposed() const {
    ModMatrix r(mod_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r.e_[j * dim_ + i] = e_[i * dim_ + j];
    return r;
  }

  /// Determinant mod n by cofactor expansion; d is small at desk scale.
  Residue det() const { return det_rec(e_, dim_); }

  bool is_invertible() const { return mod_.is_unit(det()); }

  /// Inverse as det^{-1} * adjugate, valid over composite n when
  /// gcd(det, n) = 1.
  ModMatrix inverse() const {
    const Residue d = det();
    if (!mod_.is_unit(d))
      throw not_invertible_error("matrix determinant " + std::to_string(d) +
                                 " is not a unit mod " + std::to_string(mod_.value()));
    const Residue dinv = mod_.inverse(d);
    ModMatrix r(mod_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        const Residue cof = cofactor(j, i);  // adjugate = transposed cofactors
        r.e_[i * dim_ + j] = mod_.mul(dinv, cof);
      }
    return r;
  }

  ModMatrix inverse_transpose() const { return inverse().transposed(); }

  bool is_identity() const { return *this == identity(mod_, dim_); }

  bool operator==(const ModMatrix& o) const {
    return mod_ == o.mod_ && dim_ == o.dim_ && e_ == o.e_;
  }
  auto operator<=>(const ModMatrix& o) const { return e_ <=> o.e_; }

  /// Parses row-major "1,0;0,1".
  static ModMatrix parse(Modulus mod, std::string_view text);
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i) s += ';';
      for (std::size_t j = 0; j < dim_; ++j) {
        if (j) s += ',';
        s += std::to_string(e_[i * dim_ + j]);
      }
    }
    return s;
  }

 private:
  void require_compatible(const Modulus& m, std::size_t d) const {
    if (!(mod_ == m) || dim_ != d)
      throw bad_parameter_error("matrix operation: modulus or dimension mismatch");
  }

  Residue cofactor(std::size_t i, std::size_t j) const {
    std::vector<Residue> sub;
    sub.reserve((dim_ - 1) * (dim_ - 1));
    for (std::size_t r = 0; r < dim_; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0; c < dim_; ++c) {
        if (c == j) continue;
        sub.push_back(e_[r * dim_ + c]);
      }
    }
    Residue minor = det_rec(sub, dim_ - 1);
    return ((i + j) % 2 == 0) ? minor : mod_.neg(minor);
  }

  Residue det_rec(const std::vector<Residue>& m, std::size_t d) const {
    if (d == 0) return mod_.reduce_u(1);
    if (d == 1) return m[0];
    if (d == 2)
      return mod_.sub(mod_.mul(m[0], m[3]), mod_.mul(m[1], m[2]));
    Residue acc = 0;
    std::vector<Residue> sub((d - 1) * (d - 1));
    for (std::size_t j = 0; j < d; ++j) {
      if (m[j] == 0) continue;
      std::size_t t = 0;
      for (std::size_t r = 1; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          if (c != j) sub[t++] = m[r * d + c];
      const Residue term = mod_.mul(m[j], det_rec(sub, d - 1));
      acc = (j % 2 == 0) ? mod_.add(acc, term) : mod_.sub(acc, term);
    }
    return acc;
  }

  Modulus mod_;
  std::size_t dim_;
  std::vector<Residue> e_;
};

namespace detail {
inline std::vector<Residue> parse_residue_list(std::string_view text) {
  std::vector<Residue> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    std::string_view tok = text.substr(pos, next == std::string_view::npos ? next : next - pos);
    std::size_t a = tok.find_first_not_of(" \t");
    std::size_t b = tok.find_last_not_of(" \t");
    if (a == std::string_view::npos) throw bad_parameter_error("empty entry in residue list");
    tok = tok.substr(a, b - a + 1);
    u64 v = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9')
        throw bad_parameter_error("invalid residue token: " + std::string(tok));
      v = v * 10 + u64(ch - '0');
    }
    out.push_back(v);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}
}  // namespace detail

inline ModVec ModVec::parse(Modulus mod, std::string_view text) {
  return ModVec(mod, detail::parse_residue_list(text));
}

inline ModMatrix ModMatrix::parse(Modulus mod, std::string_view text) {
  std::vector<std::vector<Residue>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(';', pos);
    std::string_view row = text.substr(pos, next == std::string_view::npos ? next : next - pos);
    rows.push_back(detail::parse_residue_list(row));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  const std::size_t d = rows.size();
  std::vector<Residue> entries;
  entries.reserve(d * d);
  for (auto& r : rows) {
    if (r.size() != d) throw bad_parameter_error("matrix is not square: \"" + std::string(text) + "\"");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return ModMatrix(mod, d, std::move(entries));
}

}  // namespace superfourier
