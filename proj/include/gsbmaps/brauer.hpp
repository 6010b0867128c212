#pragma once

// Finite abelian p-group model of the part of Br(F) under study.
//
// A model is Z/q_1 x ... x Z/q_r with every q_i a power of one prime p.
// Classes are exponent vectors over the generators, always reduced into
// [0, q_i). The index of a class is not determined by the group structure
// alone, so the model carries an index rule; the only rule implemented is
// GenericIndependent, in which generators behave like tensor factors of
// independent cyclic algebras:
//
//     ind(sum a_i g_i) = prod ord(a_i g_i)

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsbmaps/arith.hpp"

namespace gsb {

enum class IndexRule { GenericIndependent };

std::string_view to_string(IndexRule rule);

class BrauerGroupModel {
 public:
  BrauerGroupModel(Int prime, std::vector<Int> generator_orders,
                   IndexRule rule = IndexRule::GenericIndependent);

  Int prime() const { return prime_; }
  std::span<const Int> orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  IndexRule index_rule() const { return rule_; }
  /// Number of elements of the group.
  Int size() const;

  bool operator==(const BrauerGroupModel&) const = default;

 private:
  Int prime_;
  std::vector<Int> orders_;
  IndexRule rule_;
};

using ModelPtr = std::shared_ptr<const BrauerGroupModel>;

ModelPtr make_model(Int prime, std::vector<Int> generator_orders,
                    IndexRule rule = IndexRule::GenericIndependent);

/// Throws ModelMismatch unless both models describe the same group.
void require_same_model(const BrauerGroupModel& a, const BrauerGroupModel& b);

class BrauerClass {
 public:
  /// Coefficients may be negative or oversized; they are reduced.
  BrauerClass(ModelPtr model, std::vector<Int> exponents);

  static BrauerClass zero(ModelPtr model);
  static BrauerClass generator(ModelPtr model, std::size_t i);

  const BrauerGroupModel& group() const { return *model_; }
  const ModelPtr& model() const { return model_; }
  std::span<const Int> exponents() const { return exps_; }
  bool is_zero() const;

  BrauerClass operator-() const;
  BrauerClass& operator+=(const BrauerClass& other);
  BrauerClass& operator-=(const BrauerClass& other);
  BrauerClass& operator*=(Int c);

  friend BrauerClass operator+(BrauerClass a, const BrauerClass& b) { return a += b; }
  friend BrauerClass operator-(BrauerClass a, const BrauerClass& b) { return a -= b; }
  friend BrauerClass operator*(Int c, BrauerClass a) { return a *= c; }

  // Comparison is on exponent vectors; callers mixing models get ModelMismatch.
  friend bool operator==(const BrauerClass& a, const BrauerClass& b);
  friend std::strong_ordering operator<=>(const BrauerClass& a, const BrauerClass& b);

 private:
  ModelPtr model_;
  std::vector<Int> exps_;
};

/// "(1,0,1)"
std::string to_string(const BrauerClass& c);

struct Term {
  BrauerClass cls;
  Int coeff;
};

/// sum of coeff * cls. Empty input is rejected since there is no model to
/// build the zero class in.
BrauerClass combine(std::span<const Term> terms);

/// Order of c in the group.
Int class_exponent(const BrauerClass& c);

/// Index of the class under the model's index rule.
Int generic_index(const BrauerClass& c);

class Subgroup {
 public:
  Subgroup(ModelPtr model, std::vector<BrauerClass> sorted_elements);

  const ModelPtr& model() const { return model_; }
  const std::vector<BrauerClass>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const BrauerClass& c) const;

 private:
  ModelPtr model_;
  std::vector<BrauerClass> elements_;
};

Subgroup subgroup_generated(const ModelPtr& model, std::span<const BrauerClass> classes);
bool subgroups_equal(const Subgroup& a, const Subgroup& b);

/// A p-primary division algebra: a class together with its degree p^s,
/// where the class has index exactly p^s.
class AlgebraSpec {
 public:
  /// Throws PreconditionError if generic_index(cls) != p^degree_exponent.
  AlgebraSpec(BrauerClass cls, Int degree_exponent, std::string label = {});

  /// Division algebra Brauer-equivalent to cls; the degree is read off the index.
  static AlgebraSpec of_class(BrauerClass cls, std::string label = {});

  const BrauerClass& cls() const { return cls_; }
  Int degree_exponent() const { return s_; }
  Int degree() const;
  Int exponent() const { return class_exponent(cls_); }
  const std::string& label() const { return label_; }
  const BrauerGroupModel& group() const { return cls_.group(); }
  /// Label if set, otherwise the exponent vector.
  std::string name() const;

 private:
  BrauerClass cls_;
  Int s_;
  std::string label_;
};

std::vector<BrauerClass> classes_of(std::span<const AlgebraSpec> algebras);

}  // namespace gsb
