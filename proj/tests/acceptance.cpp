// Acceptance runner: one PASS/FAIL line per criterion. A criterion passes
// when every identity holds (or, for the negative control, every suite
// fails) within its time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsym/suites.hpp"

using namespace qsym;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

/// Runs the suites and passes iff every record holds.
Outcome all_hold(const std::vector<std::string>& suites, const SuiteConfig& cfg) {
  Outcome o;
  std::size_t records = 0;
  for (const auto& name : suites) {
    const SuiteResult r = run_suite(name, cfg);
    records += r.records.size();
    for (const auto& rec : r.records)
      if (!rec.report.ok && o.ok) {
        o.ok = false;
        o.detail = rec.report.identity + ": " + rec.report.counterexample;
      }
  }
  if (o.ok) o.detail = std::to_string(records) + " identities hold";
  return o;
}

SuiteConfig bounds(std::optional<int> n, std::optional<int> degree, std::optional<int> N) {
  SuiteConfig cfg;
  cfg.max_n = n;
  cfg.max_degree = degree;
  cfg.N = N;
  return cfg;
}

std::vector<Criterion> criteria() {
  return {
      {1, "lowest-weight vectors, n <= 8", 10, [] { return all_hold({"lowest-weight"}, bounds(8, {}, {})); }},
      {2, "phi bijection on monomials of degree <= 12", 30,
       [] { return all_hold({"phi-bijection"}, bounds({}, 12, {})); }},
      {3, "phi of scaled psi vectors, n <= 6, k <= 4", 60, [] { return all_hold({"phi-psi"}, bounds(6, 4, {})); }},
      {4, "little q-Jacobi forms and eigen-equation, n <= 10", 30,
       [] { return all_hold({"jacobi"}, bounds(10, {}, {})); }},
      {5, "(t,X) action consistency i <= 8, Casimir eigenvalues n+k <= 8", 120,
       [] { return all_hold({"tx-action"}, bounds({}, 8, {})); }},
      {6, "Clebsch-Gordan expansions 0 <= k <= N <= 8 and top row closed form", 120,
       [] { return all_hold({"clebsch-gordan"}, bounds({}, {}, 8)); }},
      {7, "q-Hahn difference equation, tridiagonality, algebra relations, N <= 6", 120,
       [] { return all_hold({"qhahn", "qhahn-algebra"}, bounds({}, {}, 6)); }},
      {8, "adjoint identities on truncations D <= 10", 60, [] { return all_hold({"adjoints"}, bounds({}, 10, {})); }},
      {9, "q-Rankin-Cohen matrix equals adjoint of Psi_n, n <= 5, D <= 8", 180,
       [] { return all_hold({"qrc-oracle"}, bounds(5, 8, {})); }},
      {10, "one-dimensional lowest-weight spaces n <= 8, psi basis n+k <= 10", 120,
       [] { return all_hold({"uniqueness"}, bounds(8, 10, {})); }},
      {11, "classical limit at q0 = 1 + 1e-4 within relative 1e-3, n <= 3, degree <= 4", 5,
       [] {
         SuiteConfig cfg = bounds(3, 4, {});
         cfg.q0 = 1.0001;
         return all_hold({"classical"}, cfg);
       }},
      {12, "every suite fails under single-coefficient poisoning", 10,
       [] {
         SuiteConfig cfg;
         cfg.poison = true;
         cfg.fail_fast = true;
         Outcome o;
         for (const auto& name : suite_names())
           if (run_suite(name, cfg).ok()) {
             o.ok = false;
             o.detail += (o.detail.empty() ? "not detected by: " : ", ") + name;
           }
         if (o.ok) o.detail = std::to_string(suite_names().size()) + " suites detected the corruption";
         return o;
       }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  app.add_option("--criterion", only, "Run only these criteria (repeatable)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.budget_seconds) {
      o.ok = false;
      o.detail += "; over time budget";
    }
    all_ok = all_ok && o.ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", secs, c.budget_seconds);
    std::cout << "CRITERION " << c.id << " " << (o.ok ? "PASS" : "FAIL") << " | " << c.title << " | " << timing
              << " | " << o.detail << std::endl;
  }
  return all_ok ? 0 : 1;
}
