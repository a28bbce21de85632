#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "mobius/bmx.hpp"
#include "mobius/catalog.hpp"
#include "mobius/deltawye.hpp"
#include "mobius/gen.hpp"
#include "mobius/verify.hpp"

using namespace mobius;

namespace {

int run_checks_cmd(const std::string& ids_csv, bool all, bool json_out,
                   double time_budget) {
  std::vector<std::string> ids;
  if (!all && !ids_csv.empty()) {
    std::istringstream ss(ids_csv);
    for (std::string tok; std::getline(ss, tok, ',');)
      if (!tok.empty()) ids.push_back(tok);
  }
  std::vector<CheckReport> reports = run_checks(ids);
  bool all_pass = true;
  nlohmann::json j = nlohmann::json::array();
  for (CheckReport& r : reports) {
    if (time_budget > 0 && r.seconds > time_budget && r.pass) {
      r.pass = false;
      r.computed += " [time budget exceeded]";
    }
    all_pass = all_pass && r.pass;
    if (json_out) {
      j.push_back({{"id", r.id},
                   {"description", r.description},
                   {"expected", r.expected},
                   {"computed", r.computed},
                   {"pass", r.pass},
                   {"seconds", r.seconds}});
    } else {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << "  ("
                << r.seconds << " s)\n       " << r.description
                << "\n       expected: " << r.expected
                << "\n       computed: " << r.computed << "\n";
    }
  }
  if (json_out) std::cout << j.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

GenFilter parse_filter(const std::string& spec) {
  GenFilter f;
  std::istringstream ss(spec);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    if (tok == "3c")
      f.three_connected = true;
    else if (tok == "i4c")
      f.internally_4c = true;
    else if (tok == "v4c")
      f.vertically_4c = true;
    else if (tok == "simple")
      f.simple = true;
    else if (tok == "cosimple")
      f.cosimple = true;
    else if (tok == "exmk33")
      f.excluded_minors.push_back(mk33());
    else if (tok.rfind("ex:", 0) == 0)
      f.excluded_minors.push_back(catalog_get(tok.substr(3)));
    else if (tok.rfind("req:", 0) == 0)
      f.required_minors.push_back(catalog_get(tok.substr(4)));
    else
      throw std::invalid_argument("unknown filter token: " + tok);
  }
  return f;
}

Mask triangle_arg(const BinaryMatroid& m, const std::string& csv) {
  std::vector<std::string> labels;
  std::istringstream ss(csv);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (!tok.empty()) labels.push_back(tok);
  return m.mask_of(labels);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary matroid computations around the M(K33)-free catalog"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "run the verification registry");
  bool check_all = false;
  std::string check_ids_csv;
  bool check_json = false;
  double budget = 0;
  check->add_flag("--all", check_all, "run every check");
  check->add_option("--id", check_ids_csv, "comma-separated check ids");
  check->add_flag("--json", check_json, "JSON report");
  check->add_option("--time-budget", budget, "per-check budget in seconds");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "classify a matroid file");
  std::string classify_file;
  classify_cmd->add_option("file", classify_file, "BMX input")->required();

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "emit a catalog matroid");
  std::string catalog_name;
  bool emit = false;
  catalog_cmd->add_option("name", catalog_name, "catalog id, e.g. delta_r(5)")
      ->required();
  catalog_cmd->add_flag("--emit", emit, "write the BMX matrix to stdout");

  // minor
  auto* minor_cmd = app.add_subcommand("minor", "test for a minor");
  std::string minor_m, minor_n;
  minor_cmd->add_option("host", minor_m, "BMX host file")->required();
  minor_cmd->add_option("target", minor_n, "BMX target file")->required();

  // iso
  auto* iso_cmd = app.add_subcommand("iso", "test two files for isomorphism");
  std::string iso_a, iso_b;
  iso_cmd->add_option("a", iso_a)->required();
  iso_cmd->add_option("b", iso_b)->required();

  // extend / coextend
  std::string gen_file, gen_filter;
  auto* extend_cmd = app.add_subcommand("extend", "single-element extensions");
  extend_cmd->add_option("file", gen_file)->required();
  extend_cmd->add_option("--filter", gen_filter,
                         "3c,i4c,v4c,simple,cosimple,exmk33,ex:ID,req:ID");
  auto* coextend_cmd =
      app.add_subcommand("coextend", "single-element coextensions");
  coextend_cmd->add_option("file", gen_file)->required();
  coextend_cmd->add_option("--filter", gen_filter,
                           "3c,i4c,v4c,simple,cosimple,exmk33,ex:ID,req:ID");

  // deltay / wyedelta
  std::string dy_file, dy_triangle;
  auto* deltay_cmd = app.add_subcommand("deltay", "triangle-to-triad exchange");
  deltay_cmd->add_option("file", dy_file)->required();
  deltay_cmd->add_option("--triangle", dy_triangle, "L1,L2,L3")->required();
  auto* wyedelta_cmd = app.add_subcommand("wyedelta", "triad-to-triangle exchange");
  wyedelta_cmd->add_option("file", dy_file)->required();
  wyedelta_cmd->add_option("--triangle", dy_triangle, "L1,L2,L3")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed())
      return run_checks_cmd(check_ids_csv, check_all || check_ids_csv.empty(),
                            check_json, budget);
    if (classify_cmd->parsed()) {
      BinaryMatroid m = read_bmx_file(classify_file);
      Verdict v = classify(m);
      std::cout << to_string(v.kind);
      if (v.r) std::cout << " r=" << v.r;
      if (!v.id.empty()) std::cout << " id=" << v.id;
      std::cout << "\nevidence: " << v.evidence << "\n";
      return 0;
    }
    if (catalog_cmd->parsed()) {
      BinaryMatroid m = catalog_get(catalog_name);
      if (emit) {
        write_bmx(std::cout, m);
      } else {
        std::cout << catalog_name << ": " << m.size() << " elements, rank "
                  << m.rank() << "\n";
      }
      return 0;
    }
    if (minor_cmd->parsed()) {
      BinaryMatroid host = read_bmx_file(minor_m);
      BinaryMatroid target = read_bmx_file(minor_n);
      auto w = has_minor(host, target);
      if (!w) {
        std::cout << "no minor\n";
        return 0;
      }
      std::cout << "minor: contract {";
      bool first = true;
      for (const auto& l : host.names_of(w->contract_set)) {
        std::cout << (first ? "" : ",") << l;
        first = false;
      }
      std::cout << "} delete {";
      first = true;
      for (const auto& l : host.names_of(w->delete_set)) {
        std::cout << (first ? "" : ",") << l;
        first = false;
      }
      std::cout << "}\n";
      return 0;
    }
    if (iso_cmd->parsed()) {
      auto map = is_isomorphic(read_bmx_file(iso_a), read_bmx_file(iso_b));
      if (!map) {
        std::cout << "not isomorphic\n";
        return 0;
      }
      std::cout << "isomorphic:";
      for (auto& [a, b] : *map) std::cout << " " << a << "->" << b;
      std::cout << "\n";
      return 0;
    }
    if (extend_cmd->parsed() || coextend_cmd->parsed()) {
      BinaryMatroid m = read_bmx_file(gen_file);
      GenFilter f = parse_filter(gen_filter);
      auto out = generate(m,
                          extend_cmd->parsed() ? GenDirection::extend
                                               : GenDirection::coextend,
                          f);
      std::cout << out.size() << " classes\n";
      for (const BinaryMatroid& r : out) write_bmx(std::cout, r);
      return 0;
    }
    if (deltay_cmd->parsed() || wyedelta_cmd->parsed()) {
      BinaryMatroid m = read_bmx_file(dy_file);
      Mask t = triangle_arg(m, dy_triangle);
      BinaryMatroid out =
          deltay_cmd->parsed() ? delta_y(m, t) : wye_delta(m, t);
      write_bmx(std::cout, out);
      return 0;
    }
  } catch (const BmxParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
