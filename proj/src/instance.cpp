#include "gsbmaps/instance.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gsbmaps/error.hpp"

namespace gsb {

namespace {

using json = nlohmann::ordered_json;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }

  void skip_space() {
    while (!done() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                       text_[pos_] == '\r'))
      ++pos_;
  }

  bool accept(std::string_view tok) {
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  Int integer() {
    const std::size_t start = pos_;
    Int v = 0;
    while (!done() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      if (v > (Int{1} << 40)) fail("integer too large");
      v = v * 10 + (text_[pos_++] - '0');
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  std::string name() {
    const std::size_t start = pos_;
    while (!done()) {
      const char c = text_[pos_];
      if (c == ')' || c == ';' || c == '(' || c == ' ' || c == '\t' || c == '\n' || c == '\r') break;
      ++pos_;
    }
    if (pos_ == start) fail("expected an algebra name");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("variety expression, offset " + std::to_string(pos_) + ": " + what + " in \"" +
                     std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ParseError(field + ": " + what);
}

Int positive_int(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<Int>() < 1) field_error(field, "expected a positive integer");
  return j.get<Int>();
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{"prime",     "generators", "algebras",
                                          "varieties", "index_rule", "description"};
  return keys;
}

}  // namespace

VarietyExpression parse_variety(std::string_view text) {
  Cursor c(text);
  VarietyExpression out;
  c.skip_space();
  while (true) {
    c.expect("X(");
    c.skip_space();
    const Int dim = c.integer();
    c.skip_space();
    c.expect(";");
    c.skip_space();
    std::string name = c.name();
    c.skip_space();
    c.expect(")");
    out.factors.push_back({dim, std::move(name)});
    c.skip_space();
    if (c.done()) break;
    if (!c.accept("x") && !c.accept("\xC3\x97")) c.fail("expected 'x' between factors");
    c.skip_space();
  }
  return out;
}

std::string to_string(const VarietyExpression& expr) {
  std::ostringstream out;
  for (std::size_t j = 0; j < expr.factors.size(); ++j) {
    out << (j ? " x " : "") << "X(" << expr.factors[j].reduced_dimension << ";"
        << expr.factors[j].name << ")";
  }
  return out.str();
}

const AlgebraSpec& Instance::algebra(std::string_view name) const {
  for (const auto& [n, a] : algebras_)
    if (n == name) return a;
  throw ParseError("unknown algebra '" + std::string(name) + "'");
}

std::vector<AlgebraSpec> Instance::algebra_list(std::string_view names) const {
  std::vector<AlgebraSpec> out;
  std::size_t start = 0;
  while (start <= names.size()) {
    const std::size_t comma = std::min(names.find(',', start), names.size());
    std::string_view item = names.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw ParseError("empty name in algebra list \"" + std::string(names) + "\"");
    out.push_back(algebra(item));
    start = comma + 1;
  }
  return out;
}

GSBProduct Instance::resolve(const VarietyExpression& expr) const {
  const Int p = model_->prime();
  std::vector<GSBFactor> fs;
  for (const auto& f : expr.factors) {
    if (!is_power_of(f.reduced_dimension, p)) {
      throw ParseError("X(" + std::to_string(f.reduced_dimension) + ";" + f.name +
                       "): reduced dimension is not a power of " + std::to_string(p));
    }
    fs.emplace_back(algebra(f.name), log_p(f.reduced_dimension, p));
  }
  return GSBProduct(std::move(fs));
}

GSBProduct Instance::product(std::string_view text) const {
  if (auto it = varieties_.find(std::string(text)); it != varieties_.end()) {
    return resolve(parse_variety(it->second));
  }
  return resolve(parse_variety(text));
}

Instance parse_instance_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance: expected a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (!known_keys().contains(key)) field_error(key, "unknown field");
  }

  Instance inst;
  if (!doc.contains("prime")) field_error("prime", "missing");
  const Int p = positive_int(doc["prime"], "prime");
  if (!is_prime(p)) field_error("prime", std::to_string(p) + " is not prime");

  IndexRule rule = IndexRule::GenericIndependent;
  if (doc.contains("index_rule")) {
    const json& r = doc["index_rule"];
    if (!r.is_string() || r.get<std::string>() != to_string(IndexRule::GenericIndependent)) {
      field_error("index_rule", "unsupported index rule " + r.dump());
    }
  }

  if (!doc.contains("generators")) field_error("generators", "missing");
  const json& gens = doc["generators"];
  if (!gens.is_array() || gens.empty()) field_error("generators", "expected a nonempty array");
  std::vector<Int> orders;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string field = "generators[" + std::to_string(i) + "]";
    const json& g = gens[i];
    if (!g.is_object() || !g.contains("name") || !g["name"].is_string()) {
      field_error(field + ".name", "expected a string");
    }
    std::string name = g["name"].get<std::string>();
    if (name.empty()) field_error(field + ".name", "empty name");
    if (std::find(inst.generators_.begin(), inst.generators_.end(), name) != inst.generators_.end()) {
      field_error(field + ".name", "duplicate generator '" + name + "'");
    }
    if (!g.contains("order")) field_error(field + ".order", "missing");
    const Int q = positive_int(g["order"], field + ".order");
    if (q == 1 || !is_power_of(q, p)) {
      field_error(field + ".order", std::to_string(q) + " is not a power of " + std::to_string(p) +
                                        " greater than 1");
    }
    inst.generators_.push_back(std::move(name));
    orders.push_back(q);
  }
  inst.model_ = make_model(p, std::move(orders), rule);

  if (!doc.contains("algebras")) field_error("algebras", "missing");
  const json& algs = doc["algebras"];
  if (!algs.is_object()) field_error("algebras", "expected an object");
  for (const auto& [name, spec] : algs.items()) {
    const std::string field = "algebras." + name;
    if (!spec.is_object()) field_error(field, "expected an object");
    if (!spec.contains("class") || !spec["class"].is_object()) {
      field_error(field + ".class", "expected an object of generator exponents");
    }
    std::vector<Int> exps(inst.generators_.size(), 0);
    for (const auto& [gen, e] : spec["class"].items()) {
      auto it = std::find(inst.generators_.begin(), inst.generators_.end(), gen);
      if (it == inst.generators_.end()) field_error(field + ".class", "unknown generator '" + gen + "'");
      if (!e.is_number_integer()) field_error(field + ".class." + gen, "expected an integer");
      exps[static_cast<std::size_t>(it - inst.generators_.begin())] = e.get<Int>();
    }
    if (!spec.contains("degree")) field_error(field + ".degree", "missing");
    const Int deg = positive_int(spec["degree"], field + ".degree");
    if (!is_power_of(deg, p)) {
      field_error(field + ".degree", std::to_string(deg) + " is not a power of " + std::to_string(p));
    }
    for (const auto& key : spec.items()) {
      if (key.key() != "class" && key.key() != "degree") field_error(field + "." + key.key(), "unknown field");
    }
    BrauerClass cls(inst.model_, std::move(exps));
    const Int ind = generic_index(cls);
    if (ind != deg) {
      field_error(field, "not a division algebra of the declared degree " + std::to_string(deg) +
                             " (model index is " + std::to_string(ind) + ")");
    }
    inst.algebras_.emplace_back(name, AlgebraSpec(std::move(cls), log_p(deg, p), name));
  }

  if (doc.contains("varieties")) {
    const json& vars = doc["varieties"];
    if (!vars.is_object()) field_error("varieties", "expected an object");
    for (const auto& [name, expr] : vars.items()) {
      if (!expr.is_string()) field_error("varieties." + name, "expected a variety expression string");
      try {
        inst.resolve(parse_variety(expr.get<std::string>()));
      } catch (const Error& e) {
        field_error("varieties." + name, e.what());
      }
      inst.varieties_.emplace(name, expr.get<std::string>());
    }
  }
  return inst;
}

Instance parse_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_json(buf.str());
}

}  // namespace gsb
