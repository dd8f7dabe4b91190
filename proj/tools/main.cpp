// Command line front end: verification suites, invariants of a single
// mapping class or pure braid, and rank tables.

#include "io.hpp"
#include "verify.hpp"

#include "torelli/braid.hpp"
#include "torelli/exterior.hpp"
#include "torelli/lie.hpp"
#include "torelli/magnus.hpp"
#include "torelli/mcg.hpp"
#include "torelli/util.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace torelli;
using nlohmann::json;

std::string degree_str(const Degree& d) {
  if (d.value >= infinity_degree) return "infinite";
  std::string s = std::to_string(d.value);
  return d.exact ? s + " (exact)" : ">= " + s;
}

json degree_json(const Degree& d) {
  json j;
  if (d.value >= infinity_degree) {
    j["value"] = "infinite";
    j["exact"] = true;
  } else {
    j["value"] = d.value;
    j["exact"] = d.exact;
  }
  return j;
}

json matrix_json(const IntMat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(to_string(x));
  return a;
}

int cmd_verify(const std::string& suite, const Budget& budget, bool as_json) {
  std::vector<SuiteReport> reports;
  if (suite == "all")
    reports = run_all_suites(budget);
  else
    reports.push_back(run_suite(suite, budget));

  int passed = 0, failed = 0, skipped = 0;
  for (const SuiteReport& rep : reports)
    for (const CheckResult& c : rep.checks) {
      if (c.status == Status::pass) ++passed;
      if (c.status == Status::fail) ++failed;
      if (c.status == Status::skip) ++skipped;
    }

  if (as_json) {
    json out;
    out["command"] = "verify";
    out["suite"] = suite;
    out["ok"] = failed == 0;
    json suites = json::array();
    for (const SuiteReport& rep : reports) {
      json jr;
      jr["suite"] = rep.suite;
      json checks = json::array();
      for (const CheckResult& c : rep.checks)
        checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
      jr["checks"] = std::move(checks);
      suites.push_back(std::move(jr));
    }
    out["suites"] = std::move(suites);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const SuiteReport& rep : reports) {
      std::cout << "suite " << rep.suite << "\n";
      for (const CheckResult& c : rep.checks) {
        std::string status = status_name(c.status);
        std::transform(status.begin(), status.end(), status.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
        std::cout << "  " << std::left << std::setw(44) << c.name << " " << std::setw(4) << status
                  << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
      }
    }
    std::cout << "result: " << (failed == 0 ? "PASS" : "FAIL") << " (" << passed << " passed, "
              << failed << " failed, " << skipped << " skipped)\n";
  }
  return failed == 0 ? 0 : 1;
}

int cmd_invariants_endo(const FreeEndo& f, const Budget& budget, bool as_json) {
  const int g = f.g;
  IntMat s = symplectic_matrix(f);
  bool torelli = is_torelli(f);
  bool lbar = is_in_Lbar(f);
  bool kernel = torelli && in_johnson_kernel(f);
  Degree wd = endo_weight_degree(f, budget.cutoff);

  json out;
  out["kind"] = "endomorphism";
  out["genus"] = g;
  out["boundary"] = boundary_name(f.conv);
  out["has_inverse_witness"] = f.inv.has_value();
  out["symplectic_matrix"] = matrix_json(s);
  out["torelli"] = torelli;
  out["preserves_lagrangian_classes"] = lbar;
  out["johnson_kernel"] = kernel;
  out["weight_degree"] = degree_json(wd);

  std::ostringstream text;
  text << "kind: endomorphism\n";
  text << "genus: " << g << "\n";
  text << "boundary: " << boundary_name(f.conv) << "\n";
  text << "inverse witness: " << (f.inv ? "yes" : "no") << "\n";
  text << "symplectic matrix:\n" << s.str() << "\n";
  text << "torelli: " << (torelli ? "yes" : "no") << "\n";
  text << "preserves Lagrangian classes: " << (lbar ? "yes" : "no") << "\n";
  text << "Johnson kernel: " << (kernel ? "yes" : "no") << "\n";
  text << "weight degree (cutoff " << budget.cutoff << "): " << degree_str(wd) << "\n";

  if (wd.value >= 1 && wd.value < infinity_degree && wd.value <= budget.max_degree) {
    const int n = wd.value;
    HLieVec j = johnson_morita(f, n);
    out["johnson_level"] = n;
    out["johnson_value"] = hlie_str(j, g);
    out["johnson_coords"] = vector_json(j.c);
    text << "J_" << n << ": " << hlie_str(j, g) << "\n";
  }
  if (torelli) {
    std::vector<Int> tau = johnson_tau(f);
    out["tau"] = wedge3_str(tau, 2 * g, g);
    out["tau_coords"] = vector_json(tau);
    text << "tau: " << wedge3_str(tau, 2 * g, g) << "\n";
  }
  if (lbar) {
    CalJ cj = cal_J(f);
    out["calJ_wedge"] = wedge3_str(cj.wedge, g, g);
    out["calJ_omega"] = vector_json(cj.omega);
    text << "calJ wedge part: " << wedge3_str(cj.wedge, g, g) << "\n";
    std::ostringstream om;
    for (int i = 0; i < g; ++i) om << (i ? " " : "") << to_string(cj.omega[static_cast<std::size_t>(i)]);
    text << "calJ omega part: " << om.str() << "\n";
  }

  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text.str();
  return 0;
}

int cmd_invariants_braid(const PureBraid& a, const Budget& budget, bool as_json) {
  const int g = a.g;
  IntMat lk = linking_matrix(a);
  Degree wd = braid_weight_degree(a, budget.cutoff);
  bool framed = false;
  for (const Int& s : a.framing)
    if (s != 0) framed = true;

  json out;
  out["kind"] = "pure braid";
  out["strands"] = g;
  out["has_inverse_witness"] = a.lam_inv.has_value();
  json fr = json::array();
  for (const Int& s : a.framing) fr.push_back(to_string(s));
  out["framings"] = std::move(fr);
  json lams = json::array();
  for (const Word& w : a.lam) lams.push_back(format_word(w, g));
  out["longitudes"] = std::move(lams);
  out["linking_matrix"] = matrix_json(lk);
  out["weight_degree"] = degree_json(wd);

  std::ostringstream text;
  text << "kind: pure braid\n";
  text << "strands: " << g << "\n";
  text << "inverse witness: " << (a.lam_inv ? "yes" : "no") << "\n";
  text << "framings:";
  for (const Int& s : a.framing) text << " " << to_string(s);
  text << "\n";
  for (int i = 0; i < g; ++i)
    text << "longitude " << (i + 1) << ": "
         << format_word(a.lam[static_cast<std::size_t>(i)], g) << "\n";
  text << "linking matrix:\n" << lk.str() << "\n";
  text << "weight degree (cutoff " << budget.cutoff << "): " << degree_str(wd) << "\n";

  if (!framed && wd.value >= 2) {
    std::vector<Int> jb = J_b(a);
    out["braid_johnson"] = wedge3_str(jb, g, g);
    out["braid_johnson_coords"] = vector_json(jb);
    text << "J_b: " << wedge3_str(jb, g, g) << "\n";
  } else {
    text << "J_b: not defined (needs zero framings and weight >= 2)\n";
  }

  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text.str();
  return 0;
}

int cmd_ranks(const Budget& budget, bool as_json) {
  const int gtop = std::max(6, budget.genus);
  const int gker = std::min(4, budget.genus);
  const int ntop = std::min(4, budget.max_degree);

  json out;
  out["command"] = "ranks";
  std::ostringstream text;

  {
    json rows = json::array();
    text << "free Lie ranks W_n(g) and braid layer ranks r(g, n):\n";
    text << std::left << std::setw(4) << " g";
    for (int n = 1; n <= ntop; ++n) text << std::setw(8) << ("W_" + std::to_string(n));
    text << std::setw(10) << "r_1^fr";
    for (int n = 1; n <= ntop; ++n) text << std::setw(8) << ("r_" + std::to_string(n));
    text << "\n";
    for (int g = 1; g <= gtop; ++g) {
      json row;
      row["g"] = g;
      text << std::left << std::setw(4) << (" " + std::to_string(g));
      json wv = json::array(), rv = json::array();
      for (int n = 1; n <= ntop; ++n) {
        long long w = witt(g, n);
        wv.push_back(w);
        text << std::setw(8) << w;
      }
      long long rfr = rank_r(g, 1, true);
      row["r1_framed"] = rfr;
      text << std::setw(10) << rfr;
      for (int n = 1; n <= ntop; ++n) {
        long long r = rank_r(g, n, false);
        rv.push_back(r);
        text << std::setw(8) << r;
      }
      row["witt"] = std::move(wv);
      row["r"] = std::move(rv);
      rows.push_back(std::move(row));
      text << "\n";
    }
    out["layers"] = std::move(rows);
  }

  if (gker >= 2) {
    json rows = json::array();
    text << "\nkernel lattice ranks in the wedge cube of H/L:\n";
    text << std::left << std::setw(4) << " g" << std::setw(8) << "K_1" << std::setw(8) << "K_2"
         << std::setw(8) << "K_3" << std::setw(8) << "K_4" << std::setw(8) << "K" << "\n";
    for (int g = 2; g <= gker; ++g) {
      json row;
      row["g"] = g;
      text << std::left << std::setw(4) << (" " + std::to_string(g));
      json kv = json::array();
      for (int m = 1; m <= 4; ++m) {
        std::size_t r = Km_lattice(g, m).rank();
        kv.push_back(r);
        text << std::setw(8) << r;
      }
      std::size_t rk = kernel_K(g).rank();
      row["Km"] = std::move(kv);
      row["K"] = rk;
      text << std::setw(8) << rk << "\n";
      rows.push_back(std::move(row));
    }
    out["kernel_K"] = std::move(rows);
  }

  if (gker >= 2 && budget.max_degree >= 4) {
    json rows = json::array();
    text << "\nbracket map kernels, degree n to n+1 (x block only on the right):\n";
    text << std::left << std::setw(4) << " g" << std::setw(4) << "n" << std::setw(12) << "g*W_n"
         << std::setw(12) << "rank b" << std::setw(12) << "kernel" << std::setw(12) << "r(g,n)"
         << std::setw(12) << "difference" << "\n";
    for (int g = 2; g <= gker; ++g)
      for (int n = 3; n <= 4; ++n) {
        SmithForm sf = smith_form(bracket_matrix(g, n));
        long long total = g * witt(g, n);
        long long ker = total - static_cast<long long>(sf.rank);
        long long r = rank_r(g, n, false);
        json row = {{"g", g},       {"n", n},          {"domain", total},
                    {"rank", sf.rank}, {"kernel", ker}, {"r", r},
                    {"difference", ker - r}};
        rows.push_back(std::move(row));
        text << std::left << std::setw(4) << (" " + std::to_string(g)) << std::setw(4) << n
             << std::setw(12) << total << std::setw(12) << sf.rank << std::setw(12) << ker
             << std::setw(12) << r << std::setw(12) << (ker - r) << "\n";
      }
    out["bracket_kernels"] = std::move(rows);
  }

  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text.str();
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for Johnson type invariants of surface mapping classes and pure braids"};
  app.require_subcommand(1);

  Budget budget;
  bool as_json = false;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--genus", budget.genus, "genus bound for suites and tables")
        ->check(CLI::Range(1, 8));
    sub->add_option("--max-degree", budget.max_degree, "Lie degree bound")->check(CLI::Range(1, 8));
    sub->add_option("--cutoff", budget.cutoff, "Magnus expansion cutoff")->check(CLI::Range(1, 10));
    sub->add_option("--seed", budget.seed, "seed for sampled checks");
    sub->add_option("--samples", budget.samples, "number of sampled checks")
        ->check(CLI::Range(1, 100000));
    sub->add_flag("--json", as_json, "machine readable output");
  };

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  {
    std::vector<std::string> allowed = suite_names();
    allowed.push_back("all");
    verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(allowed));
    add_budget(verify);
  }

  CLI::App* invariants =
      app.add_subcommand("invariants", "invariants of one endomorphism or pure braid");
  std::string endo_arg, braid_arg;
  invariants->add_option("--endo", endo_arg, "JSON file or literal for an endomorphism");
  invariants->add_option("--braid", braid_arg, "JSON file or literal for a pure braid");
  add_budget(invariants);

  CLI::App* ranks = app.add_subcommand("ranks", "rank tables");
  add_budget(ranks);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(suite, budget, as_json);
    if (invariants->parsed()) {
      if (endo_arg.empty() == braid_arg.empty()) {
        std::cerr << "invariants needs exactly one of --endo or --braid\n";
        return 2;
      }
      if (!endo_arg.empty())
        return cmd_invariants_endo(endo_from_json(load_json_argument(endo_arg)), budget, as_json);
      return cmd_invariants_braid(braid_from_json(load_json_argument(braid_arg)), budget, as_json);
    }
    if (ranks->parsed()) return cmd_ranks(budget, as_json);
  } catch (const torelli::budget_error& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "json: " << e.what() << "\n";
    return 2;
  } catch (const torelli::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
