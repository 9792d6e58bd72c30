#pragma once

/// A supercharacter theory on (Z/nZ)^d: the acting group, its symmetry
/// classification, and the two orbit partitions. For a transpose-closed
/// group the partitions coincide and are stored once. For a J-symmetric
/// group the character partition is re-enumerated so that X_i = J*Y_i.

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "superfourier/group.hpp"
#include "superfourier/partition.hpp"

namespace superfourier {

class Theory {
 public:
  static Theory build(std::string name, MatrixGroup group,
                      std::optional<ModMatrix> j = std::nullopt,
                      u64 domain_cap = SuperclassPartition::kDefaultDomainCap) {
    SymmetryInfo sym = group.classify_symmetry(j);
    if (sym.kind == SymmetryKind::asymmetric)
      throw bad_parameter_error(
          "group is neither transpose-closed nor J-symmetric for the given J; "
          "no supercharacter theory is defined");

    Theory t;
    t.name_ = std::move(name);
    t.symmetry_ = std::move(sym);
    t.y_ = std::make_shared<SuperclassPartition>(
        SuperclassPartition::compute(group, GroupAction::direct, domain_cap));

    if (t.symmetry_.kind == SymmetryKind::j_symmetric) {
      auto x = SuperclassPartition::compute(group, GroupAction::inverse_transpose, domain_cap);
      if (x.class_count() != t.y_->class_count())
        throw internal_inconsistency_error("orbit counts of the two actions differ");
      x.reorder(j_class_map(*t.y_, x, *t.symmetry_.j));
      // The transform evaluates sigma through J at X-class representatives,
      // which needs J to send each X_i back into Y_i.
      for (std::size_t i = 0; i < x.class_count(); ++i)
        if (t.y_->class_of(*t.symmetry_.j * x.superclass(i).rep) != i)
          throw not_j_symmetric_error(
              "J*X_i does not land in Y_i; the J-symmetric transform is undefined for this J");
      t.x_ = std::make_shared<SuperclassPartition>(std::move(x));
    } else {
      t.x_ = t.y_;
    }
    t.group_ = std::make_shared<MatrixGroup>(std::move(group));
    return t;
  }

  const std::string& name() const { return name_; }
  const MatrixGroup& group() const { return *group_; }
  const SymmetryInfo& symmetry() const { return symmetry_; }
  bool is_symmetric() const { return symmetry_.kind == SymmetryKind::symmetric; }

  u64 n() const { return y_->modulus().value(); }
  std::size_t d() const { return y_->dim(); }
  u64 domain_size() const { return y_->domain_size(); }
  std::size_t class_count() const { return y_->class_count(); }

  /// Superclasses (orbits of the direct action).
  const SuperclassPartition& y_classes() const { return *y_; }
  /// Character-index classes; the same object as y_classes() when symmetric.
  const SuperclassPartition& x_classes() const { return *x_; }

 private:
  Theory() = default;

  std::string name_;
  std::shared_ptr<MatrixGroup> group_;
  SymmetryInfo symmetry_;
  std::shared_ptr<SuperclassPartition> y_;
  std::shared_ptr<SuperclassPartition> x_;
};

}  // namespace superfourier
