#include "gsbmaps/commands.hpp"

#include <functional>
#include <sstream>

#include "gsbmaps/error.hpp"
#include "gsbmaps/maps.hpp"
#include "gsbmaps/motives.hpp"

namespace gsb {

namespace {

using json = nlohmann::ordered_json;

json vec_json(std::span<const Int> v) { return json(std::vector<Int>(v.begin(), v.end())); }

std::string tuple_str(std::span<const Int> v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

json algebra_json(const std::string& name, const AlgebraSpec& a) {
  return json{{"name", name},
              {"class", vec_json(a.cls().exponents())},
              {"degree", a.degree()},
              {"index", generic_index(a.cls())},
              {"exponent", a.exponent()}};
}

json descriptor_json(const UpperMotiveDescriptor& m) {
  json factors = json::array();
  for (const MotiveFactor& f : m.factors()) {
    factors.push_back(json{{"algebra", f.algebra.name()},
                           {"class", vec_json(f.algebra.cls().exponents())},
                           {"degree_exponent", f.algebra.degree_exponent()},
                           {"k", f.k}});
  }
  return json{{"name", to_string(m)}, {"factors", std::move(factors)}};
}

json decisions_json(const GSBProduct& target, const std::vector<FactorDecision>& ds) {
  json out = json::array();
  for (const FactorDecision& d : ds) {
    out.push_back(json{{"factor", to_string(target[d.factor])},
                       {"reduced_index", d.reduced_index},
                       {"witness", d.witness},
                       {"has_point", d.has_point}});
  }
  return out;
}

void decisions_text(std::ostream& out, const GSBProduct& source, const GSBProduct& target,
                    const std::vector<FactorDecision>& ds) {
  for (const FactorDecision& d : ds) {
    out << "  " << to_string(target[d.factor]) << " over F(" << to_string(source)
        << "): index " << d.reduced_index << " at i = " << tuple_str(d.witness) << " -> "
        << (d.has_point ? "rational point" : "no rational point") << '\n';
  }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

// Level k shared by every factor of both products, if any.
std::optional<Int> common_level(const GSBProduct& a, const GSBProduct& b) {
  const Int k = a[0].k();
  const Int s = a[0].algebra().degree_exponent();
  for (const GSBProduct* x : {&a, &b}) {
    for (const GSBFactor& f : x->factors()) {
      if (f.k() != k || f.algebra().degree_exponent() != s) return std::nullopt;
    }
  }
  return k;
}

std::vector<AlgebraSpec> algebras_of(const GSBProduct& x) {
  std::vector<AlgebraSpec> out;
  for (const GSBFactor& f : x.factors()) out.push_back(f.algebra());
  return out;
}

std::vector<std::string> split_names(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const std::string& r : raw) {
    std::size_t start = 0;
    while (start <= r.size()) {
      std::size_t comma = std::min(r.find(',', start), r.size());
      std::string item = r.substr(start, comma - start);
      while (!item.empty() && item.front() == ' ') item.erase(item.begin());
      while (!item.empty() && item.back() == ' ') item.pop_back();
      if (!item.empty()) out.push_back(std::move(item));
      start = comma + 1;
    }
  }
  if (out.empty()) throw ParseError("no algebra names given");
  return out;
}

}  // namespace

Report index_report(const Instance& inst, const std::vector<std::string>& names) {
  Report r;
  r.json = json{{"command", "index"}, {"algebras", json::array()}};
  std::ostringstream out;
  for (const std::string& n : split_names(names)) {
    const AlgebraSpec& a = inst.algebra(n);
    r.json["algebras"].push_back(algebra_json(n, a));
    out << "ind(" << n << ") = " << generic_index(a.cls()) << "  class " << to_string(a.cls())
        << '\n';
  }
  r.text = out.str();
  return r;
}

Report exponent_report(const Instance& inst, const std::vector<std::string>& names) {
  Report r;
  r.json = json{{"command", "exponent"}, {"algebras", json::array()}};
  std::ostringstream out;
  for (const std::string& n : split_names(names)) {
    const AlgebraSpec& a = inst.algebra(n);
    r.json["algebras"].push_back(algebra_json(n, a));
    out << "exp(" << n << ") = " << a.exponent() << "  class " << to_string(a.cls()) << '\n';
  }
  r.text = out.str();
  return r;
}

Report subgroup_report(const Instance& inst, const std::string& generators,
                       const std::optional<std::string>& compare) {
  auto elements_json = [](const Subgroup& g) {
    json e = json::array();
    for (const BrauerClass& c : g.elements()) e.push_back(vec_json(c.exponents()));
    return e;
  };
  auto elements_text = [](const Subgroup& g) {
    std::string s;
    for (const BrauerClass& c : g.elements()) s += (s.empty() ? "" : " ") + to_string(c);
    return s;
  };

  const auto gens = inst.algebra_list(generators);
  const Subgroup g = subgroup_generated(inst.model(), classes_of(gens));
  Report r;
  r.json = json{{"command", "subgroup"},
                {"generators", generators},
                {"order", g.size()},
                {"elements", elements_json(g)}};
  std::ostringstream out;
  out << "<" << generators << "> has " << g.size() << " elements: " << elements_text(g) << '\n';
  if (compare) {
    const auto other = inst.algebra_list(*compare);
    const Subgroup h = subgroup_generated(inst.model(), classes_of(other));
    const bool eq = subgroups_equal(g, h);
    r.json["compare"] = json{{"generators", *compare},
                             {"order", h.size()},
                             {"elements", elements_json(h)},
                             {"equal", eq}};
    out << "<" << *compare << "> has " << h.size() << " elements: " << elements_text(h) << '\n';
    out << "equal: " << yes_no(eq) << '\n';
  }
  r.text = out.str();
  return r;
}

Report reduced_index_report(const Instance& inst, const std::string& target,
                            const std::string& base) {
  const AlgebraSpec& d = inst.algebra(target);
  const GSBProduct x = inst.product(base);
  const IndexReduction red = reduced_index(d, x);
  Report r;
  r.json = json{{"command", "reduced-index"},
                {"target", target},
                {"base", to_string(x)},
                {"index", generic_index(d.cls())},
                {"reduced_index", red.index},
                {"witness", red.witness},
                {"residual_class", vec_json(residual_class(d, x, red.witness).exponents())}};
  std::ostringstream out;
  out << "ind(" << target << ") = " << generic_index(d.cls()) << '\n'
      << "ind(" << target << " over F(" << to_string(x) << ")) = " << red.index << '\n'
      << "witness i = " << tuple_str(red.witness) << '\n';
  r.text = out.str();
  return r;
}

Report rational_map_report(const Instance& inst, const std::string& source,
                           const std::string& target) {
  const GSBProduct a = inst.product(source);
  const GSBProduct b = inst.product(target);
  const RationalMapReport rep = exists_rational_map(a, b);
  Report r;
  r.json = json{{"command", "rational-map"},
                {"source", to_string(a)},
                {"target", to_string(b)},
                {"exists", rep.forward},
                {"factors", decisions_json(b, rep.forward_factors)}};
  std::ostringstream out;
  out << to_string(a) << " --> " << to_string(b) << ": " << yes_no(rep.forward) << '\n';
  decisions_text(out, a, b, rep.forward_factors);
  r.text = out.str();
  return r;
}

Report equivalent_report(const Instance& inst, const std::string& left, const std::string& right) {
  const GSBProduct a = inst.product(left);
  const GSBProduct b = inst.product(right);
  const RationalMapReport rep = equivalent(a, b);

  json refuting = json::array();
  for (const FactorDecision& d : rep.forward_factors)
    if (!d.has_point) refuting.push_back(json{{"direction", "forward"}, {"factor", to_string(b[d.factor])}});
  for (const FactorDecision& d : rep.backward_factors)
    if (!d.has_point) refuting.push_back(json{{"direction", "backward"}, {"factor", to_string(a[d.factor])}});

  const auto la = algebras_of(a);
  const auto lb = algebras_of(b);
  json criteria{{"subgroups_equal", classical_criterion(la, lb)}};
  const auto level = common_level(a, b);
  criteria["level"] = level ? json(*level) : json(nullptr);
  json prodexp;
  if (!level) {
    prodexp = json{{"status", "not_applicable"},
                   {"reason", "factors do not share one level k and one degree"}};
  } else {
    try {
      auto w = prodexp_criterion(la, lb, *level);
      if (w) {
        prodexp = json{{"status", "present"}, {"alpha", w->alpha}, {"beta", w->beta}};
      } else {
        prodexp = json{{"status", "absent"}};
      }
    } catch (const PreconditionError& e) {
      prodexp = json{{"status", "not_applicable"}, {"reason", e.what()}};
    }
  }
  criteria["prodexp"] = prodexp;

  Report r;
  r.json = json{{"command", "equivalent"},
                {"left", to_string(a)},
                {"right", to_string(b)},
                {"equivalent", rep.holds()},
                {"forward", json{{"holds", rep.forward}, {"factors", decisions_json(b, rep.forward_factors)}}},
                {"backward", json{{"holds", *rep.backward}, {"factors", decisions_json(a, rep.backward_factors)}}},
                {"refuting_factors", refuting},
                {"criteria", criteria}};

  std::ostringstream out;
  out << to_string(a) << " <--> " << to_string(b) << ": " << yes_no(rep.holds()) << '\n';
  out << "forward " << yes_no(rep.forward) << '\n';
  decisions_text(out, a, b, rep.forward_factors);
  out << "backward " << yes_no(*rep.backward) << '\n';
  decisions_text(out, b, a, rep.backward_factors);
  out << "same Brauer subgroup: " << yes_no(criteria["subgroups_equal"].get<bool>()) << '\n';
  out << "exponent relations: " << prodexp["status"].get<std::string>();
  if (prodexp.contains("reason")) out << " (" << prodexp["reason"].get<std::string>() << ")";
  if (prodexp["status"] == "present") out << " alpha " << prodexp["alpha"].dump() << " beta " << prodexp["beta"].dump();
  out << '\n';
  r.text = out.str();
  return r;
}

Report motive_iso_report(const Instance& inst, const std::string& left, const std::string& right) {
  const UpperMotiveDescriptor a = upper_motive(inst.product(left));
  const UpperMotiveDescriptor b = upper_motive(inst.product(right));
  const bool iso = motives_isomorphic(a, b);
  Report r;
  r.json = json{{"command", "motive-iso"},
                {"left", descriptor_json(a)},
                {"right", descriptor_json(b)},
                {"isomorphic", iso}};
  std::ostringstream out;
  out << to_string(a) << (iso ? " ~= " : " !~= ") << to_string(b) << '\n';
  if (a.factors().size() == 1 && b.factors().size() == 1) {
    const auto& fa = a.factors().front();
    const auto& fb = b.factors().front();
    const bool fast = classify_single(fa.algebra, fa.k, fb.algebra, fb.k);
    r.json["single_factor_criterion"] = fast;
    out << "single-factor criterion (same k, same Brauer subgroup): " << yes_no(fast) << '\n';
    if (fast != iso) throw InvariantError("single-factor criterion disagrees with rational maps");
  }
  r.text = out.str();
  return r;
}

Report compare_families_report(const Instance& inst, const std::string& left,
                               const std::string& right) {
  const auto la = inst.algebra_list(left);
  const auto lb = inst.algebra_list(right);
  const FamilyComparison cmp = compare_families(la, lb);
  json shared = json::array();
  for (const MotivePair& p : cmp.shared) {
    shared.push_back(json{{"left", descriptor_json(p.left)}, {"right", descriptor_json(p.right)}});
  }
  Report r;
  r.json = json{{"command", "compare-families"},
                {"left", left},
                {"right", right},
                {"verdict", to_string(cmp.verdict)},
                {"shared", shared}};
  if (cmp.separating) {
    r.json["separating"] = json{{"side", cmp.separating_side == Side::Left ? "left" : "right"},
                                {"motive", descriptor_json(*cmp.separating)}};
  } else {
    r.json["separating"] = nullptr;
  }
  std::ostringstream out;
  out << "families {" << left << "} vs {" << right << "}: " << to_string(cmp.verdict) << '\n';
  for (const MotivePair& p : cmp.shared) out << "  shared " << to_string(p.left) << " ~= " << to_string(p.right) << '\n';
  if (cmp.separating) {
    out << "  separating (" << (cmp.separating_side == Side::Left ? "left" : "right") << ") "
        << to_string(*cmp.separating) << '\n';
  }
  r.text = out.str();
  return r;
}

Verification verify_examples() {
  struct Claim {
    std::string id;
    std::string statement;
    std::function<std::string()> check;  // empty string on success
  };

  const Instance ex1 = parse_instance_json(fixture_ex1());
  const Instance ex2 = parse_instance_json(fixture_ex2());

  auto expect = [](bool ok, const std::string& got) { return ok ? std::string() : got; };
  auto expect_precondition = [](const std::function<void()>& f) -> std::string {
    try {
      f();
    } catch (const PreconditionError&) {
      return {};
    }
    return "no precondition error raised";
  };

  const std::vector<Claim> claims = {
      {"ex1.subgroups", "<Δ1,Δ2> = <Δ1,Δ3>",
       [&] {
         bool v = classical_criterion(ex1.algebra_list("Δ1,Δ2"), ex1.algebra_list("Δ1,Δ3"));
         return expect(v, "false");
       }},
      {"ex1.level0", "X(1;Δ1) x X(1;Δ2) <--> X(1;Δ1) x X(1;Δ3)",
       [&] {
         bool v = equivalent(ex1.product("X(1;Δ1) x X(1;Δ2)"), ex1.product("X(1;Δ1) x X(1;Δ3)")).holds();
         return expect(v, "false");
       }},
      {"ex1.no_map", "no rational map X(2;Δ1) x X(2;Δ2) --> X(2;Δ3)",
       [&] {
         bool v = exists_rational_map(ex1.product("X(2;Δ1) x X(2;Δ2)"), ex1.product("X(2;Δ3)")).forward;
         return expect(!v, "map exists");
       }},
      {"ex1.reduced_index", "ind(Δ3 over F(X(2;Δ1) x X(2;Δ2))) = 4",
       [&] {
         Int v = reduced_index(ex1.algebra("Δ3"), ex1.product("X(2;Δ1) x X(2;Δ2)")).index;
         return expect(v == 4, std::to_string(v));
       }},
      {"ex1.level1", "X(2;Δ1) x X(2;Δ2) and X(2;Δ1) x X(2;Δ3) are not equivalent",
       [&] {
         bool v = equivalent(ex1.product("X(2;Δ1) x X(2;Δ2)"), ex1.product("X(2;Δ1) x X(2;Δ3)")).holds();
         return expect(!v, "equivalent");
       }},
      {"ex1.motives00", "M^{0,0}_{Δ2,Δ1} ~= M^{0,0}_{Δ3,Δ1}",
       [&] {
         bool v = motives_isomorphic(upper_motive(ex1.product("X(1;Δ1) x X(1;Δ2)")),
                                     upper_motive(ex1.product("X(1;Δ1) x X(1;Δ3)")));
         return expect(v, "not isomorphic");
       }},
      {"ex1.motives11", "M^{1,1}_{Δ2,Δ1} !~= M^{1,1}_{Δ3,Δ1}",
       [&] {
         bool v = motives_isomorphic(upper_motive(ex1.product("X(2;Δ1) x X(2;Δ2)")),
                                     upper_motive(ex1.product("X(2;Δ1) x X(2;Δ3)")));
         return expect(!v, "isomorphic");
       }},
      {"ex1.no_dichotomy", "families {Δ1,Δ2} vs {Δ1,Δ3} share some but not all motives",
       [&] {
         const auto cmp = compare_families(ex1.algebra_list("Δ1,Δ2"), ex1.algebra_list("Δ1,Δ3"));
         if (cmp.verdict != Verdict::Partial) return std::string(to_string(cmp.verdict));
         const auto m00 = upper_motive(ex1.product("X(1;Δ1) x X(1;Δ2)"));
         const auto m11 = upper_motive(ex1.product("X(2;Δ1) x X(2;Δ2)"));
         bool has00 = false;
         for (const auto& p : cmp.shared) has00 = has00 || p.left == m00;
         if (!has00) return std::string("M^{0,0} not shared");
         if (!cmp.separating || !(*cmp.separating == m11)) return std::string("separating witness is not M^{1,1}");
         return std::string();
       }},
      {"ex2.indices", "ind(D1), ind(D2), ind(D3) = 4, 4, 4",
       [&] {
         std::string got;
         bool ok = true;
         for (const char* n : {"D1", "D2", "D3"}) {
           Int v = generic_index(ex2.algebra(n).cls());
           got += std::to_string(v) + " ";
           ok = ok && v == 4;
         }
         return expect(ok, got);
       }},
      {"ex2.exponents", "exp(D1), exp(D2), exp(D3) = 4, 2, 2",
       [&] {
         const Int e1 = ex2.algebra("D1").exponent(), e2 = ex2.algebra("D2").exponent(),
                   e3 = ex2.algebra("D3").exponent();
         return expect(e1 == 4 && e2 == 2 && e3 == 2,
                       std::to_string(e1) + " " + std::to_string(e2) + " " + std::to_string(e3));
       }},
      {"ex2.subgroups", "<D1,D2> != <D1,D3>",
       [&] {
         bool v = classical_criterion(ex2.algebra_list("D1,D2"), ex2.algebra_list("D1,D3"));
         return expect(!v, "equal");
       }},
      {"ex2.equivalent", "X(2;D1) x X(2;D2) <--> X(2;D1) x X(2;D3)",
       [&] {
         bool v = equivalent(ex2.product("X(2;D1) x X(2;D2)"), ex2.product("X(2;D1) x X(2;D3)")).holds();
         return expect(v, "not equivalent");
       }},
      {"ex2.reduced_index", "ind(D3 over F(X(2;D1) x X(2;D2))) = 2 at i = (2,2)",
       [&] {
         auto red = reduced_index(ex2.algebra("D3"), ex2.product("X(2;D1) x X(2;D2)"));
         return expect(red.index == 2 && red.witness == std::vector<Int>{2, 2},
                       std::to_string(red.index) + " at " + tuple_str(red.witness));
       }},
      {"ex2.prodexp_inapplicable", "exponent relation criterion rejects unequal exponents",
       [&] {
         return expect_precondition(
             [&] { prodexp_criterion(ex2.algebra_list("D1,D2"), ex2.algebra_list("D1,D3"), 1); });
       }},
  };

  Report r;
  r.json = json{{"command", "verify-examples"}, {"claims", json::array()}};
  std::ostringstream out;
  bool all = true;
  for (const Claim& c : claims) {
    std::string failure;
    try {
      failure = c.check();
    } catch (const std::exception& e) {
      failure = std::string("error: ") + e.what();
    }
    const bool pass = failure.empty();
    all = all && pass;
    json entry{{"id", c.id}, {"claim", c.statement}, {"pass", pass}};
    if (!pass) entry["detail"] = failure;
    r.json["claims"].push_back(std::move(entry));
    out << (pass ? "PASS " : "FAIL ") << c.id << ": " << c.statement;
    if (!pass) out << " [" << failure << "]";
    out << '\n';
  }
  r.json["all_pass"] = all;
  r.text = out.str();
  return {std::move(r), all};
}

}  // namespace gsb
