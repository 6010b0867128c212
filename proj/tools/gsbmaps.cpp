// gsbmaps: rational maps between products of generalized Severi-Brauer
// varieties and isomorphism of their upper motives.
//
// Exit codes: 0 computation finished (the answer is in the report),
// 2 parse error, 3 precondition or hypothesis violation, 4 internal
// invariant failure (including a failed verify-examples claim).

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsbmaps/commands.hpp"
#include "gsbmaps/error.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInvariant = 4;

void emit(const gsb::Report& r, bool as_json) {
  if (as_json) {
    std::cout << r.json.dump(2) << '\n';
  } else {
    std::cout << r.text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide rational maps between products of generalized Severi-Brauer varieties"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string instance_path;
  bool as_json = false;
  app.add_option("-i,--instance", instance_path, "Instance file (JSON)");
  app.add_flag("--json", as_json, "Emit a machine-readable report");

  std::vector<std::string> algebras;
  std::string generators, target, base, source, left, right;
  std::optional<std::string> compare;

  auto* index = app.add_subcommand("index", "Index of algebras under the model's index rule");
  index->add_option("-a,--algebra", algebras, "Algebra name(s)")->required();

  auto* exponent = app.add_subcommand("exponent", "Exponent (order in the Brauer group) of algebras");
  exponent->add_option("-a,--algebra", algebras, "Algebra name(s)")->required();

  auto* subgroup = app.add_subcommand("subgroup", "Subgroup generated by algebra classes");
  subgroup->add_option("-g,--generators", generators, "Comma separated algebra names")->required();
  subgroup->add_option("-c,--compare", compare, "Second generating set to compare against");

  auto* reduced = app.add_subcommand("reduced-index", "Index of an algebra over F(product)");
  reduced->add_option("-t,--target", target, "Algebra name")->required();
  reduced->add_option("-b,--base", base, "Variety expression")->required();

  auto* ratmap = app.add_subcommand("rational-map", "Existence of a rational map source --> target");
  ratmap->add_option("-s,--source", source, "Variety expression")->required();
  ratmap->add_option("-t,--target", target, "Variety expression")->required();

  auto* equiv = app.add_subcommand("equivalent", "Rational maps in both directions");
  equiv->add_option("-l,--left", left, "Variety expression")->required();
  equiv->add_option("-r,--right", right, "Variety expression")->required();

  auto* motive = app.add_subcommand("motive-iso", "Isomorphism of upper motives");
  motive->add_option("-l,--left", left, "Variety expression")->required();
  motive->add_option("-r,--right", right, "Variety expression")->required();

  auto* families = app.add_subcommand("compare-families", "Compare the motive families of two algebra lists");
  families->add_option("-l,--left", left, "Comma separated algebra names")->required();
  families->add_option("-r,--right", right, "Comma separated algebra names")->required();

  auto* verify = app.add_subcommand("verify-examples", "Re-derive the bundled worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (verify->parsed()) {
      const gsb::Verification v = gsb::verify_examples();
      emit(v.report, as_json);
      return v.all_pass ? 0 : kExitInvariant;
    }

    if (instance_path.empty()) throw gsb::ParseError("--instance is required for this command");
    const gsb::Instance inst = gsb::parse_instance_file(instance_path);

    gsb::Report r;
    if (index->parsed()) {
      r = gsb::index_report(inst, algebras);
    } else if (exponent->parsed()) {
      r = gsb::exponent_report(inst, algebras);
    } else if (subgroup->parsed()) {
      r = gsb::subgroup_report(inst, generators, compare);
    } else if (reduced->parsed()) {
      r = gsb::reduced_index_report(inst, target, base);
    } else if (ratmap->parsed()) {
      r = gsb::rational_map_report(inst, source, target);
    } else if (equiv->parsed()) {
      r = gsb::equivalent_report(inst, left, right);
    } else if (motive->parsed()) {
      r = gsb::motive_iso_report(inst, left, right);
    } else if (families->parsed()) {
      r = gsb::compare_families_report(inst, left, right);
    }
    emit(r, as_json);
    return 0;
  } catch (const gsb::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const gsb::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}
