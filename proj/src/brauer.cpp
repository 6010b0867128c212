#include "gsbmaps/brauer.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <utility>

#include "gsbmaps/error.hpp"

namespace gsb {

namespace {

// Subgroups are enumerated explicitly; refuse models where that is absurd.
constexpr Int kMaxEnumerableGroup = Int{1} << 20;

Int component_order(Int e, Int q) { return q / gcd(e, q); }

}  // namespace

std::string_view to_string(IndexRule rule) {
  switch (rule) {
    case IndexRule::GenericIndependent:
      return "GENERIC_INDEPENDENT";
  }
  return "UNKNOWN";
}

BrauerGroupModel::BrauerGroupModel(Int prime, std::vector<Int> generator_orders, IndexRule rule)
    : prime_(prime), orders_(std::move(generator_orders)), rule_(rule) {
  if (!is_prime(prime_)) {
    throw PreconditionError("group model prime " + std::to_string(prime_) + " is not prime");
  }
  if (orders_.empty()) throw PreconditionError("group model needs at least one generator");
  for (Int q : orders_) {
    if (q <= 1 || !is_power_of(q, prime_)) {
      throw PreconditionError("generator order " + std::to_string(q) + " is not a power of " +
                              std::to_string(prime_) + " greater than 1");
    }
  }
}

Int BrauerGroupModel::size() const {
  Int n = 1;
  for (Int q : orders_) {
    if (n > kMaxEnumerableGroup) break;
    n *= q;
  }
  return n;
}

ModelPtr make_model(Int prime, std::vector<Int> generator_orders, IndexRule rule) {
  return std::make_shared<const BrauerGroupModel>(prime, std::move(generator_orders), rule);
}

void require_same_model(const BrauerGroupModel& a, const BrauerGroupModel& b) {
  if (&a == &b || a == b) return;
  throw ModelMismatch("operands belong to different Brauer group models");
}

BrauerClass::BrauerClass(ModelPtr model, std::vector<Int> exponents)
    : model_(std::move(model)), exps_(std::move(exponents)) {
  if (!model_) throw PreconditionError("Brauer class without a group model");
  if (exps_.size() != model_->rank()) {
    throw PreconditionError("exponent vector has " + std::to_string(exps_.size()) +
                            " entries, model has " + std::to_string(model_->rank()) +
                            " generators");
  }
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] = mod(exps_[i], model_->orders()[i]);
}

BrauerClass BrauerClass::zero(ModelPtr model) {
  const std::size_t r = model ? model->rank() : 0;
  return BrauerClass(std::move(model), std::vector<Int>(r, 0));
}

BrauerClass BrauerClass::generator(ModelPtr model, std::size_t i) {
  BrauerClass c = zero(std::move(model));
  if (i >= c.exps_.size()) throw PreconditionError("generator index out of range");
  c.exps_[i] = 1;
  return c;
}

bool BrauerClass::is_zero() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Int e) { return e == 0; });
}

BrauerClass BrauerClass::operator-() const {
  BrauerClass r = *this;
  return r *= -1;
}

BrauerClass& BrauerClass::operator+=(const BrauerClass& other) {
  require_same_model(*model_, *other.model_);
  const auto q = model_->orders();
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] = mod(exps_[i] + other.exps_[i], q[i]);
  return *this;
}

BrauerClass& BrauerClass::operator-=(const BrauerClass& other) {
  require_same_model(*model_, *other.model_);
  const auto q = model_->orders();
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] = mod(exps_[i] - other.exps_[i], q[i]);
  return *this;
}

BrauerClass& BrauerClass::operator*=(Int c) {
  const auto q = model_->orders();
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    // reduce first so the product cannot overflow
    exps_[i] = mod(mod(c, q[i]) * exps_[i], q[i]);
  }
  return *this;
}

bool operator==(const BrauerClass& a, const BrauerClass& b) {
  require_same_model(*a.model_, *b.model_);
  return a.exps_ == b.exps_;
}

std::strong_ordering operator<=>(const BrauerClass& a, const BrauerClass& b) {
  require_same_model(*a.model_, *b.model_);
  return a.exps_ <=> b.exps_;
}

std::string to_string(const BrauerClass& c) {
  std::ostringstream out;
  out << '(';
  const auto e = c.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
  out << ')';
  return out.str();
}

BrauerClass combine(std::span<const Term> terms) {
  if (terms.empty()) throw PreconditionError("combine needs at least one term");
  BrauerClass acc = BrauerClass::zero(terms.front().cls.model());
  for (const Term& t : terms) acc += t.coeff * t.cls;
  return acc;
}

Int class_exponent(const BrauerClass& c) {
  Int e = 1;
  const auto q = c.group().orders();
  const auto x = c.exponents();
  for (std::size_t i = 0; i < x.size(); ++i) e = lcm(e, component_order(x[i], q[i]));
  return e;
}

Int generic_index(const BrauerClass& c) {
  if (c.group().index_rule() != IndexRule::GenericIndependent) {
    throw UnsupportedModel("index rule " + std::string(to_string(c.group().index_rule())) +
                           " is not supported");
  }
  Int ind = 1;
  const auto q = c.group().orders();
  const auto x = c.exponents();
  for (std::size_t i = 0; i < x.size(); ++i) ind *= component_order(x[i], q[i]);
  return ind;
}

Subgroup::Subgroup(ModelPtr model, std::vector<BrauerClass> sorted_elements)
    : model_(std::move(model)), elements_(std::move(sorted_elements)) {}

bool Subgroup::contains(const BrauerClass& c) const {
  require_same_model(*model_, c.group());
  return std::binary_search(elements_.begin(), elements_.end(), c);
}

Subgroup subgroup_generated(const ModelPtr& model, std::span<const BrauerClass> classes) {
  if (!model) throw PreconditionError("subgroup_generated needs a group model");
  if (model->size() > kMaxEnumerableGroup) {
    throw PreconditionError("group model too large to enumerate subgroups");
  }
  for (const BrauerClass& c : classes) require_same_model(*model, c.group());

  // Breadth-first closure under adding a generator. In a finite group this
  // is closure under addition, and negation comes for free.
  std::set<BrauerClass> seen{BrauerClass::zero(model)};
  std::deque<BrauerClass> frontier{BrauerClass::zero(model)};
  while (!frontier.empty()) {
    BrauerClass x = std::move(frontier.front());
    frontier.pop_front();
    for (const BrauerClass& g : classes) {
      BrauerClass y = x + g;
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return Subgroup(model, std::vector<BrauerClass>(seen.begin(), seen.end()));
}

bool subgroups_equal(const Subgroup& a, const Subgroup& b) {
  require_same_model(*a.model(), *b.model());
  return a.elements() == b.elements();
}

AlgebraSpec::AlgebraSpec(BrauerClass cls, Int degree_exponent, std::string label)
    : cls_(std::move(cls)), s_(degree_exponent), label_(std::move(label)) {
  if (s_ < 0) throw PreconditionError("negative degree exponent");
  const Int p = cls_.group().prime();
  const Int deg = ipow(p, s_);
  const Int ind = generic_index(cls_);
  if (ind != deg) {
    throw PreconditionError((label_.empty() ? to_string(cls_) : label_) +
                            " is not a division algebra of the declared degree " +
                            std::to_string(deg) + " (index is " + std::to_string(ind) + ")");
  }
}

AlgebraSpec AlgebraSpec::of_class(BrauerClass cls, std::string label) {
  const Int s = log_p(generic_index(cls), cls.group().prime());
  return AlgebraSpec(std::move(cls), s, std::move(label));
}

Int AlgebraSpec::degree() const { return ipow(cls_.group().prime(), s_); }

std::string AlgebraSpec::name() const { return label_.empty() ? to_string(cls_) : label_; }

std::vector<BrauerClass> classes_of(std::span<const AlgebraSpec> algebras) {
  std::vector<BrauerClass> out;
  out.reserve(algebras.size());
  for (const AlgebraSpec& a : algebras) out.push_back(a.cls());
  return out;
}

}  // namespace gsb
