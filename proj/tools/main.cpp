// Command-line front end: Chern calculus, Bott cohomology tables,
// Riemann-Roch, Schwarzenberger screening, and the classification /
// claims reproduction suites.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "ggb/classify.hpp"
#include "ggb/cohomology.hpp"

using json = nlohmann::ordered_json;

namespace {

std::vector<long> parse_class_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

ggb::ChernData chern_input(const std::string& expr, const std::string& classes,
                           int rank, int n) {
  if (!expr.empty()) return ggb::chern(expr, n);
  if (classes.empty())
    throw CLI::ValidationError("either an expression or --chern is required");
  return ggb::ChernData::from_classes(n, rank, parse_class_list(classes));
}

json chern_json(const ggb::ChernData& c) {
  json j;
  j["ambient"] = c.ambient;
  j["rank"] = c.rank;
  json classes = json::array();
  for (int i = 0; i <= c.ambient; ++i) classes.push_back(c.c(i).get_str());
  j["classes"] = classes;
  j["total"] = c.total.str("t");
  return j;
}

json report_json(const ggb::Report& report) {
  json rows = json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"id", r.id},
                    {"check", r.check},
                    {"pass", r.pass},
                    {"detail", r.detail}});
  return {{"pass", report.all_pass()}, {"rows", rows}};
}

void print_report(const ggb::Report& report, bool json_mode) {
  if (json_mode) {
    std::cout << report_json(report).dump(2) << "\n";
    return;
  }
  for (const auto& r : report.rows)
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.check
              << "  " << r.detail << "\n";
  std::cout << (report.all_pass() ? "all checks passed" : "FAILURES present")
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Chern-class and Riemann-Roch calculator for vector "
               "bundles on projective space"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "machine-readable output");

  std::string expr_text, class_list;
  int n = 3, rank = 0, h0 = 0;
  long twist_j = 0, c2_max = 9;
  bool verify = false;

  auto* cmd_chern = app.add_subcommand("chern", "rank and total Chern class");
  cmd_chern->add_option("expr", expr_text)->required();
  cmd_chern->add_option("-n", n)->required();

  auto* cmd_cohom = app.add_subcommand("cohom", "Bott cohomology table");
  cmd_cohom->add_option("expr", expr_text)->required();
  cmd_cohom->add_option("-n", n)->required();
  cmd_cohom->add_option("--twist", twist_j);

  auto* cmd_chi = app.add_subcommand("chi", "Euler characteristic");
  cmd_chi->add_option("expr", expr_text);
  cmd_chi->add_option("--chern", class_list);
  cmd_chi->add_option("-r", rank);
  cmd_chi->add_option("-n", n)->required();

  auto* cmd_hilbert =
      app.add_subcommand("hilbert", "Hilbert polynomial chi(E(j))");
  cmd_hilbert->add_option("expr", expr_text);
  cmd_hilbert->add_option("--chern", class_list);
  cmd_hilbert->add_option("-r", rank);
  cmd_hilbert->add_option("-n", n)->required();

  auto* cmd_schwarz =
      app.add_subcommand("schwarzenberger", "integrality screen");
  cmd_schwarz->add_option("--chern", class_list)->required();
  cmd_schwarz->add_option("-r", rank)->required();
  cmd_schwarz->add_option("-n", n)->required();

  auto* cmd_reduce =
      app.add_subcommand("reduce", "second reduction: Chern data of K*");
  cmd_reduce->add_option("--chern", class_list)->required();
  cmd_reduce->add_option("-r", rank)->required();
  cmd_reduce->add_option("-n", n)->required();
  cmd_reduce->add_option("--h0", h0)->required();

  auto* cmd_classify = app.add_subcommand("classify", "catalog verification");
  cmd_classify->add_flag("--verify", verify);
  cmd_classify->add_option("-n", n)->required();

  auto* cmd_enum =
      app.add_subcommand("enumerate", "split-type candidates with c1 = 3");
  cmd_enum->add_option("-n", n)->required();
  cmd_enum->add_option("--c2-max", c2_max);

  auto* cmd_claims = app.add_subcommand("claims", "full claims ledger");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_chern->parsed()) {
      ggb::ChernData c = ggb::chern(expr_text, n);
      if (json_mode) {
        std::cout << chern_json(c).dump(2) << "\n";
      } else {
        std::cout << "rank " << c.rank << "\nc_t = " << c.total.str("t")
                  << "\n";
      }
      return 0;
    }
    if (cmd_cohom->parsed()) {
      auto table = ggb::cohomology_table(ggb::parse(expr_text), n, twist_j);
      if (json_mode) {
        json j{{"ambient", n}, {"twist", twist_j}};
        json h = json::array();
        for (const auto& v : table.h) h.push_back(v.get_str());
        j["h"] = h;
        j["euler"] = table.euler().get_str();
        std::cout << j.dump(2) << "\n";
      } else {
        for (int q = 0; q <= n; ++q)
          std::cout << "h^" << q << " = " << table.h[q].get_str() << "\n";
        std::cout << "chi = " << table.euler().get_str() << "\n";
      }
      return 0;
    }
    if (cmd_chi->parsed()) {
      ggb::Rat chi =
          ggb::euler_char(chern_input(expr_text, class_list, rank, n), n);
      if (json_mode)
        std::cout << json{{"chi", ggb::to_string(chi)}}.dump(2) << "\n";
      else
        std::cout << "chi = " << ggb::to_string(chi) << "\n";
      return 0;
    }
    if (cmd_hilbert->parsed()) {
      auto p = ggb::hilbert_polynomial(
          chern_input(expr_text, class_list, rank, n), n);
      if (json_mode) {
        json coeffs = json::array();
        for (const auto& c : p.coeffs) coeffs.push_back(ggb::to_string(c));
        std::cout << json{{"coefficients", coeffs}, {"poly", p.str()}}.dump(2)
                  << "\n";
      } else {
        std::cout << "chi(E(j)) = " << p.str() << "\n";
      }
      return 0;
    }
    if (cmd_schwarz->parsed()) {
      auto c = ggb::ChernData::from_classes(n, rank, parse_class_list(class_list));
      auto r = ggb::schwarzenberger_check(c, n);
      if (json_mode) {
        json j{{"pass", r.pass}};
        if (!r.pass) {
          j["witness_twist"] = r.witness_twist;
          j["witness_chi"] = ggb::to_string(r.witness_value);
        }
        std::cout << j.dump(2) << "\n";
      } else if (r.pass) {
        std::cout << "PASS: chi(E(j)) is an integer for every twist\n";
      } else {
        std::cout << "FAIL: chi(E(" << r.witness_twist
                  << ")) = " << ggb::to_string(r.witness_value) << "\n";
      }
      return r.pass ? 0 : 1;
    }
    if (cmd_reduce->parsed()) {
      auto c = ggb::ChernData::from_classes(n, rank, parse_class_list(class_list));
      ggb::ChernData k = ggb::second_reduction(c, n, h0);
      if (json_mode)
        std::cout << chern_json(k).dump(2) << "\n";
      else
        std::cout << "rank " << k.rank << "\nc_t(K*) = " << k.total.str("t")
                  << "\n";
      return 0;
    }
    if (cmd_classify->parsed()) {
      if (!verify) throw CLI::ValidationError("classify requires --verify");
      ggb::Report report = ggb::verify_catalog(n);
      print_report(report, json_mode);
      return report.all_pass() ? 0 : 1;
    }
    if (cmd_enum->parsed()) {
      auto candidates = ggb::enumerate_candidates(n, c2_max);
      if (json_mode) {
        json rows = json::array();
        for (const auto& c : candidates)
          rows.push_back({{"expr", c.expr},
                          {"rank", c.data.rank},
                          {"c2", c.data.c(2).get_str()},
                          {"total", c.data.total.str("t")}});
        std::cout << rows.dump(2) << "\n";
      } else {
        for (const auto& c : candidates)
          std::cout << c.expr << "  rank " << c.data.rank << "  c_2 = "
                    << c.data.c(2).get_str() << "\n";
      }
      return 0;
    }
    if (cmd_claims->parsed()) {
      ggb::Report report = ggb::verify_claims();
      print_report(report, json_mode);
      return report.all_pass() ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ggb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
