#pragma once

/// Orbit partitions of G = (Z/nZ)^d under a matrix group: the superclasses
/// (direct action y -> Ay) and the character-index classes (x -> A^{-T}x).
/// Classes are ordered by lexicographically smallest representative, so the
/// zero class is always first. Vectors are handled as mixed-radix codes.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "superfourier/errors.hpp"
#include "superfourier/group.hpp"
#include "superfourier/modular.hpp"

namespace superfourier {

enum class GroupAction { direct, inverse_transpose };

struct Superclass {
  ModVec rep;                 // lexicographically smallest member
  std::vector<u64> members;   // codes, ascending
  u64 size() const { return members.size(); }
};

class SuperclassPartition {
 public:
  static constexpr u64 kDefaultDomainCap = 10'000'000;

  static SuperclassPartition compute(const MatrixGroup& group, GroupAction action,
                                     u64 cap = kDefaultDomainCap) {
    const Modulus mod = group.modulus();
    const std::size_t d = group.dim();
    const u64 n = mod.value();

    u64 domain = 1;
    for (std::size_t i = 0; i < d; ++i) {
      if (domain > cap / std::max<u64>(n, 1))
        throw cap_exceeded_error("n^d exceeds the partition cap of " + std::to_string(cap));
      domain *= n;
    }

    // Materialize the acting set once; for the character action this is
    // {A^{-T} : A in Gamma}.
    std::vector<ModMatrix> actors;
    actors.reserve(group.order());
    for (const auto& a : group.elements())
      actors.push_back(action == GroupAction::direct ? a : a.inverse_transpose());

    SuperclassPartition p;
    p.mod_ = mod;
    p.dim_ = d;
    p.action_ = action;
    p.domain_size_ = domain;
    p.class_of_.assign(domain, kUnassigned);

    std::vector<u64> orbit;
    for (u64 code = 0; code < domain; ++code) {
      if (p.class_of_[code] != kUnassigned) continue;
      const ModVec v = ModVec::from_code(mod, d, code);
      orbit.clear();
      for (const auto& a : actors) orbit.push_back((a * v).code());
      std::sort(orbit.begin(), orbit.end());
      orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
      const auto idx = static_cast<std::uint32_t>(p.classes_.size());
      for (u64 m : orbit) p.class_of_[m] = idx;
      p.classes_.push_back(Superclass{v, orbit});
    }
    return p;
  }

  const Modulus& modulus() const { return mod_; }
  std::size_t dim() const { return dim_; }
  GroupAction action() const { return action_; }
  u64 domain_size() const { return domain_size_; }

  std::size_t class_count() const { return classes_.size(); }
  const Superclass& superclass(std::size_t i) const { return classes_[i]; }
  const std::vector<Superclass>& classes() const { return classes_; }

  std::size_t class_of_code(u64 code) const { return class_of_[code]; }
  std::size_t class_of(const ModVec& v) const { return class_of_[v.code()]; }
  std::size_t zero_class() const { return class_of_[0]; }

  u64 max_class_size() const {
    u64 m = 0;
    for (const auto& c : classes_) m = std::max(m, c.size());
    return m;
  }

  /// The involution pi with -X_i = X_{pi(i)}. Verified memberwise.
  std::vector<std::size_t> negation_pairing() const {
    std::vector<std::size_t> pi(classes_.size());
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      const std::size_t t = class_of(classes_[i].rep.negated());
      if (classes_[t].size() != classes_[i].size())
        throw internal_inconsistency_error("negation image of a class is not a class");
      pi[i] = t;
    }
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      if (pi[pi[i]] != i)
        throw internal_inconsistency_error("negation pairing is not an involution");
      for (u64 code : classes_[i].members) {
        const ModVec v = ModVec::from_code(mod_, dim_, code);
        if (class_of(v.negated()) != pi[i])
          throw internal_inconsistency_error("negation image of a class is not a class");
      }
    }
    return pi;
  }

  /// Reorders classes according to perm: new class i = old class perm[i].
  void reorder(const std::vector<std::size_t>& perm) {
    std::vector<Superclass> next;
    next.reserve(classes_.size());
    std::vector<std::uint32_t> where(classes_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      next.push_back(std::move(classes_[perm[i]]));
      where[perm[i]] = static_cast<std::uint32_t>(i);
    }
    classes_ = std::move(next);
    for (auto& c : class_of_) c = where[c];
  }

 private:
  static constexpr std::uint32_t kUnassigned = 0xffffffffu;

  SuperclassPartition() : mod_(1) {}

  Modulus mod_;
  std::size_t dim_ = 1;
  GroupAction action_ = GroupAction::direct;
  u64 domain_size_ = 1;
  std::vector<Superclass> classes_;
  std::vector<std::uint32_t> class_of_;
};

/// |{A in Gamma : Av = v}|; satisfies |orbit(v)| * |stab(v)| = |Gamma|.
inline u64 stabilizer_order(const MatrixGroup& group, const ModVec& v) {
  u64 count = 0;
  for (const auto& a : group.elements())
    if (a * v == v) ++count;
  return count;
}

/// For a J-symmetric group: the bijection taking the direct-action class
/// Y_i to the character-action class J*Y_i. Verified memberwise; throws
/// not_j_symmetric_error when the image of some Y_i is not an X-class.
inline std::vector<std::size_t> j_class_map(const SuperclassPartition& y,
                                            const SuperclassPartition& x, const ModMatrix& j) {
  if (y.class_count() != x.class_count())
    throw internal_inconsistency_error("direct and character partitions disagree on N");
  const Modulus mod = y.modulus();
  const std::size_t d = y.dim();
  std::vector<std::size_t> map(y.class_count());
  std::vector<bool> hit(x.class_count(), false);
  for (std::size_t i = 0; i < y.class_count(); ++i) {
    const std::size_t target = x.class_of(j * y.superclass(i).rep);
    if (x.superclass(target).size() != y.superclass(i).size())
      throw not_j_symmetric_error("image J*Y has a different size than its X-class");
    for (u64 code : y.superclass(i).members)
      if (x.class_of(j * ModVec::from_code(mod, d, code)) != target)
        throw not_j_symmetric_error("image of a Y-class under J is not an X-class");
    if (hit[target]) throw not_j_symmetric_error("J-pairing is not a bijection");
    hit[target] = true;
    map[i] = target;
  }
  return map;
}

}  // namespace superfourier
