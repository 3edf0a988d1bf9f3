#include "hecke_atlas/cli.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "hecke_atlas/corpus.hpp"
#include "hecke_atlas/error.hpp"
#include "hecke_atlas/json_io.hpp"
#include "hecke_atlas/verify.hpp"

namespace hecke_atlas::cli {

namespace {

using json_io::json;

weil::DualGroupDescriptor group_ambient(const std::string& group, int rank) {
  if (rank < 1) throw InputError("--rank must be positive");
  if (group == "sp") return {weil::Family::Orthogonal, 2 * rank + 1};
  if (group == "so-odd" || group == "so_odd") return {weil::Family::Symplectic, 2 * rank};
  if (group == "o-even" || group == "o_even") return {weil::Family::Orthogonal, 2 * rank};
  if (group == "u" || group == "unitary") return {weil::Family::Unitary, rank};
  throw InputError("unknown group \"" + group + "\"");
}

weil::Inventory load_inventory(const std::string& classes_path, const json* embedded) {
  if (!classes_path.empty()) return json_io::inventory_from_json(json_io::read_file(classes_path));
  if (embedded && embedded->is_object() && embedded->contains("classes"))
    return json_io::inventory_from_json(embedded->at("classes"));
  return corpus::test_inventory();
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) out << json_io::dump(j);
  else json_io::write_file(path, j);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"hecke_atlas: Langlands parameter combinatorics"};
  app.require_subcommand(1);

  std::string group, classes, out_path, param_path, kind, suite, report_path;
  int rank = 0, max_rank = 0;
  bool discrete = false, cuspidal = false, allow_flagged = false;

  auto* en = app.add_subcommand("enumerate", "parameters of supercuspidal shape or discrete parameters");
  en->add_option("--group", group, "sp | so-odd | o-even | u")->required();
  en->add_option("--rank", rank, "rank of G")->required();
  en->add_option("--classes", classes, "inventory JSON (default: built-in six-class inventory)");
  auto* disc_flag = en->add_flag("--discrete", discrete, "all discrete parameters");
  en->add_flag("--cuspidal", cuspidal, "parameters of supercuspidal shape (default)")->excludes(disc_flag);
  en->add_option("--out", out_path, "output file (default: stdout)");

  auto* su = app.add_subcommand("supports", "cuspidal supports of a normed parameter");
  su->add_option("--param", param_path, "parameter JSON")->required();
  su->add_option("--classes", classes, "inventory JSON");
  su->add_option("--out", out_path, "output file (default: stdout)");

  auto* he = app.add_subcommand("hecke", "Hecke algebra descriptors per support");
  he->add_option("--param", param_path, "parameter JSON")->required();
  he->add_option("--classes", classes, "inventory JSON");
  he->add_option("--out", out_path, "output file (default: stdout)");

  auto* sp = app.add_subcommand("specialize", "closed-form specialization tables");
  sp->add_option("--kind", kind, "so-odd | sp | o-even | unitary")->required();
  sp->add_option("--rank", rank, "d, or m for unitary")->required();

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("--suite", suite, "suite name")->required();
  ve->add_option("--max-rank", max_rank, "size bound (default per suite)");
  ve->add_option("--report", report_path, "write the JSON report here");
  ve->add_flag("--allow-flagged", allow_flagged, "flagged cases do not fail the run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*en) {
      const auto g = group_ambient(group, rank);
      const auto inv = load_inventory(classes, nullptr);
      const auto phis = discrete ? corpus::discrete_parameters(inv, g) : corpus::supercuspidal_shapes(inv, g);
      json list = json::array();
      for (const auto& phi : phis) {
        json item = json_io::to_json(phi);
        if (!discrete && g.family != weil::Family::Unitary) {
          item["count_plus"] = params::count_supercuspidals(phi, 1);
          item["count_minus"] = params::count_supercuspidals(phi, -1);
        }
        list.push_back(std::move(item));
      }
      emit({{"group", group}, {"rank", rank}, {"mode", discrete ? "discrete" : "cuspidal"}, {"count", phis.size()},
            {"parameters", list}},
           out_path, out);
      return 0;
    }
    if (*su || *he) {
      const json pj = json_io::read_file(param_path);
      const auto inv = load_inventory(classes, &pj);
      const auto phi0 = json_io::parameter_from_json(inv, pj);
      if (*su) emit(json_io::supports_to_json(phi0, support::cuspidal_pairs(inv, phi0)), out_path, out);
      else emit(json_io::hecke_to_json(phi0), out_path, out);
      return 0;
    }
    if (*sp) {
      const auto k = hecke::parse_kind(kind);
      out << json_io::dump(json_io::table_to_json(k, rank, hecke::specialize(k, rank)));
      return 0;
    }
    if (*ve) {
      const auto report = verify::run_suite(suite, max_rank, Exec::Parallel);
      if (!report_path.empty()) json_io::write_file(report_path, verify::report_to_json(report));
      for (const auto& c : report.cases)
        if (c.status == verify::Status::Fail)
          err << "FAIL " << c.input << "\n  expected: " << c.expected << "\n  actual:   " << c.actual << "\n";
      out << report.suite << ": " << report.passed << " passed, " << report.failed << " failed, " << report.flagged
          << " flagged\n";
      return report.ok(allow_flagged) ? 0 : 1;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace hecke_atlas::cli
