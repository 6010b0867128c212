#pragma once

// Instance files and the variety expression grammar.
//
// Instance schema (JSON):
//
//   {
//     "prime": 2,
//     "generators": [{"name": "e1", "order": 2}, ...],
//     "algebras": {"D": {"class": {"e1": 1, "e2": 1}, "degree": 4}, ...},
//     "varieties": {"Y": "X(2;D) x X(2;D')"},      (optional)
//     "index_rule": "GENERIC_INDEPENDENT",          (optional)
//     "description": "..."                          (optional, ignored)
//   }
//
// Variety expressions:
//
//   product := factor ("x" factor)*
//   factor  := "X(" integer ";" name ")"
//
// where the integer is the reduced dimension p^k, not k. "×" is accepted
// as a separator too.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsbmaps/brauer.hpp"
#include "gsbmaps/reduction.hpp"

namespace gsb {

struct VarietyExpression {
  struct Factor {
    Int reduced_dimension;
    std::string name;
    bool operator==(const Factor&) const = default;
  };
  std::vector<Factor> factors;
  bool operator==(const VarietyExpression&) const = default;
};

/// Syntax only; names are not resolved. Throws ParseError with the byte
/// offset of the first problem.
VarietyExpression parse_variety(std::string_view text);

std::string to_string(const VarietyExpression& expr);

class Instance {
 public:
  const ModelPtr& model() const { return model_; }
  const std::vector<std::string>& generator_names() const { return generators_; }
  /// Algebras in file order.
  const std::vector<std::pair<std::string, AlgebraSpec>>& algebras() const { return algebras_; }
  const std::map<std::string, std::string>& varieties() const { return varieties_; }

  /// Throws ParseError for an unknown name.
  const AlgebraSpec& algebra(std::string_view name) const;

  /// Comma separated algebra names: "D1,D2".
  std::vector<AlgebraSpec> algebra_list(std::string_view names) const;

  /// A variety expression, or the name of one declared in the instance.
  GSBProduct product(std::string_view text) const;
  GSBProduct resolve(const VarietyExpression& expr) const;

  friend Instance parse_instance_json(std::string_view text);

 private:
  ModelPtr model_;
  std::vector<std::string> generators_;
  std::vector<std::pair<std::string, AlgebraSpec>> algebras_;
  std::map<std::string, std::string> varieties_;
};

Instance parse_instance_json(std::string_view text);
Instance parse_instance_file(const std::filesystem::path& path);

/// Bundled fixtures for the two worked examples.
std::string_view fixture_ex1();
std::string_view fixture_ex2();

}  // namespace gsb
