#pragma once

/// Finite matrix groups over Z/nZ: closure from generators, full GL/SL
/// enumeration, permutation matrices, and symmetry classification
/// (transpose-closed, J-symmetric, or neither).

#include <algorithm>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "superfourier/errors.hpp"
#include "superfourier/modular.hpp"

namespace superfourier {

enum class SymmetryKind { symmetric, j_symmetric, asymmetric };

inline const char* to_string(SymmetryKind k) {
  switch (k) {
    case SymmetryKind::symmetric: return "symmetric";
    case SymmetryKind::j_symmetric: return "j-symmetric";
    case SymmetryKind::asymmetric: return "asymmetric";
  }
  return "?";
}

struct SymmetryInfo {
  SymmetryKind kind = SymmetryKind::asymmetric;
  std::optional<ModMatrix> j;
};

/// A finite subgroup of GL_d(Z/nZ). Elements are stored sorted by their
/// row-major entry tuple, which fixes a canonical iteration order.
class MatrixGroup {
 public:
  static constexpr u64 kDefaultClosureCap = 1'000'000;
  static constexpr u64 kDefaultEnumerationCap = 100'000'000;

  /// Smallest multiplicatively closed set containing the generators and the
  /// identity (BFS over right-multiplication). Finiteness of the ambient
  /// group makes the result inverse-closed.
  static MatrixGroup closure(std::span<const ModMatrix> generators,
                             u64 cap = kDefaultClosureCap) {
    if (generators.empty()) throw bad_parameter_error("closure: no generators given");
    const Modulus mod = generators.front().modulus();
    const std::size_t d = generators.front().dim();
    for (const auto& g : generators) {
      if (!(g.modulus() == mod) || g.dim() != d)
        throw bad_parameter_error("closure: generators disagree on modulus/dimension");
      if (!g.is_invertible())
        throw not_invertible_error("closure: generator " + g.str() + " is not invertible mod " +
                                   std::to_string(mod.value()));
    }
    std::vector<ModMatrix> elems{ModMatrix::identity(mod, d)};
    std::sort(elems.begin(), elems.end());
    std::deque<ModMatrix> frontier(elems.begin(), elems.end());
    auto member = [&elems](const ModMatrix& m) {
      auto it = std::lower_bound(elems.begin(), elems.end(), m);
      return it != elems.end() && *it == m;
    };
    while (!frontier.empty()) {
      ModMatrix cur = std::move(frontier.front());
      frontier.pop_front();
      for (const auto& g : generators) {
        ModMatrix next = cur * g;
        if (!member(next)) {
          if (elems.size() >= cap)
            throw cap_exceeded_error("closure exceeded cap of " + std::to_string(cap) +
                                     " elements");
          elems.insert(std::upper_bound(elems.begin(), elems.end(), next), next);
          frontier.push_back(std::move(next));
        }
      }
    }
    return MatrixGroup(mod, d, std::move(elems));
  }

  /// All of GL_d(Z/nZ); guards the n^{d^2} candidate sweep.
  static MatrixGroup general_linear(u64 n, std::size_t d, u64 cap = kDefaultEnumerationCap) {
    return enumerate(n, d, cap, [](const ModMatrix& m) { return m.is_invertible(); });
  }

  /// All matrices of determinant 1 mod n.
  static MatrixGroup special_linear(u64 n, std::size_t d, u64 cap = kDefaultEnumerationCap) {
    const Residue one = Modulus(n).reduce_u(1);
    return enumerate(n, d, cap, [one](const ModMatrix& m) { return m.det() == one; });
  }

  /// All d! permutation matrices over Z/nZ.
  static MatrixGroup permutation_matrices(u64 n, std::size_t d) {
    if (d > 10) throw cap_exceeded_error("permutation group capped at d <= 10");
    const Modulus mod(n);
    std::vector<std::size_t> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = i;
    std::vector<ModMatrix> elems;
    do {
      std::vector<Residue> e(d * d, 0);
      if (n > 1)
        for (std::size_t i = 0; i < d; ++i) e[i * d + perm[i]] = 1;
      elems.emplace_back(mod, d, std::move(e));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());  // n = 1 collapses
    return MatrixGroup(mod, d, std::move(elems));
  }

  /// Wraps an explicit element list, verifying it is a group.
  static MatrixGroup from_elements(std::vector<ModMatrix> elems) {
    if (elems.empty()) throw bad_parameter_error("from_elements: empty set");
    const Modulus mod = elems.front().modulus();
    const std::size_t d = elems.front().dim();
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    MatrixGroup g(mod, d, std::move(elems));
    if (!g.contains(ModMatrix::identity(mod, d)))
      throw bad_parameter_error("from_elements: identity missing");
    for (const auto& a : g.elements_) {
      if (!a.is_invertible())
        throw not_invertible_error("from_elements: " + a.str() + " is not invertible");
      for (const auto& b : g.elements_)
        if (!g.contains(a * b))
          throw bad_parameter_error("from_elements: set not closed under products");
    }
    return g;
  }

  const Modulus& modulus() const { return mod_; }
  std::size_t dim() const { return dim_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<ModMatrix>& elements() const { return elements_; }

  bool contains(const ModMatrix& m) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), m);
    return it != elements_.end() && *it == m;
  }

  bool is_transpose_closed() const {
    for (const auto& a : elements_)
      if (!contains(a.transposed())) return false;
    return true;
  }

  /// Classifies the group: Symmetric if transpose-closed; else J-symmetric
  /// if a given J satisfies J = J^T, J invertible, and J*Gamma = Gamma^T*J
  /// as sets; else Asymmetric. J is never searched for.
  SymmetryInfo classify_symmetry(const std::optional<ModMatrix>& j = std::nullopt) const {
    if (is_transpose_closed()) return {SymmetryKind::symmetric, std::nullopt};
    if (j) {
      if (*j == j->transposed() && j->is_invertible()) {
        std::vector<ModMatrix> lhs, rhs;
        lhs.reserve(order());
        rhs.reserve(order());
        for (const auto& a : elements_) {
          lhs.push_back(*j * a);
          rhs.push_back(a.transposed() * *j);
        }
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        if (lhs == rhs) return {SymmetryKind::j_symmetric, j};
      }
    }
    return {SymmetryKind::asymmetric, std::nullopt};
  }

 private:
  MatrixGroup(Modulus mod, std::size_t d, std::vector<ModMatrix> elems)
      : mod_(mod), dim_(d), elements_(std::move(elems)) {}

  template <typename Pred>
  static MatrixGroup enumerate(u64 n, std::size_t d, u64 cap, Pred keep) {
    const Modulus mod(n);
    u64 candidates = 1;
    for (std::size_t i = 0; i < d * d; ++i) {
      if (candidates > cap / std::max<u64>(n, 1))
        throw cap_exceeded_error("enumeration would scan more than " + std::to_string(cap) +
                                 " candidate matrices");
      candidates *= n;
    }
    std::vector<ModMatrix> elems;
    std::vector<Residue> e(d * d, 0);
    bool done = false;
    while (!done) {
      ModMatrix m(mod, d, e);
      if (keep(m)) elems.push_back(std::move(m));
      done = true;
      for (std::size_t pos = d * d; pos-- > 0;) {
        if (++e[pos] < n) {
          done = false;
          break;
        }
        e[pos] = 0;
      }
    }
    std::sort(elems.begin(), elems.end());
    return MatrixGroup(mod, d, std::move(elems));
  }

  Modulus mod_;
  std::size_t dim_;
  std::vector<ModMatrix> elements_;
};

}  // namespace superfourier
