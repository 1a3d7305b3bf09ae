// qbern: run the identity suite, tabulate beta_{n,q}, evaluate q-Bernstein
// polynomials and inspect p-adic Riemann sums.
//
// Exit codes: 0 success, 1 unexpected check failure, 2 usage error.

#include <chrono>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "qbern/qbern.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitUsage = 2;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int cmd_check(const std::string& filter, unsigned jobs, const std::string& format) {
  const qbern::SuiteResult suite = qbern::run_suite(filter, jobs);
  if (suite.reports.empty()) {
    std::cerr << "no registry entry matches '" << filter << "'\n";
    return kExitUsage;
  }
  if (format == "json") {
    ordered_json doc;
    doc["generated_at"] = utc_timestamp();
    doc["reports"] = ordered_json::array();
    for (const auto& r : suite.reports) doc["reports"].push_back(qbern::to_json(r));
    doc["summary"] = {{"total", suite.reports.size()},   {"verified", suite.verified},
                      {"corrected", suite.corrected},     {"failed", suite.failed},
                      {"errors", suite.errors},           {"unexpected", suite.unexpected},
                      {"exit_code", suite.exit_code}};
    std::cout << doc.dump(2) << '\n';
    return suite.exit_code;
  }
  for (std::size_t i = 0; i < suite.reports.size(); ++i) {
    const auto& r = suite.reports[i];
    const bool expected = r.status == suite.expected[i] || r.status == qbern::Status::Verified ||
                          r.status == qbern::Status::CorrectedFormVerified;
    std::cout << qbern::status_name(r.status) << (expected ? "" : " (UNEXPECTED)") << "  " << r.id << ' '
              << qbern::render_params(r.params);
    if (r.status == qbern::Status::Error) std::cout << "  " << r.notes;
    std::cout << '\n';
  }
  std::cout << "summary: " << suite.reports.size() << " checks, " << suite.verified << " verified, "
            << suite.corrected << " corrected-form-verified, " << suite.failed << " failed, " << suite.errors
            << " errors, " << suite.unexpected << " unexpected\n";
  return suite.exit_code;
}

int cmd_beta(long max_n, const std::string& format) {
  ordered_json rows = ordered_json::array();
  for (long n = 0; n <= max_n; ++n) {
    const qbern::RatQ b = qbern::carlitz_beta(n);
    const std::string at_one = b.eval(qbern::BigRat(1)).get_str();
    if (format == "json")
      rows.push_back({{"n", n}, {"beta", b.render()}, {"at_q_1", at_one}});
    else
      std::cout << "beta_" << n << " = " << b.render() << "    [q=1: " << at_one << "]\n";
  }
  if (format == "json") std::cout << rows.dump(2) << '\n';
  return 0;
}

int cmd_bernstein(long n, long k, std::optional<double> q, std::optional<double> x1, std::optional<double> x2) {
  std::cout << "B_{" << k << "," << n << "} = " << qbern::basis(k, n).expr.render() << '\n';
  if (q || x1 || x2) {
    if (!(q && x1 && x2)) throw std::invalid_argument("--q, --x1 and --x2 must be given together");
    const qbern::NumericCtx ctx{*q, *x1, *x2};
    std::cout << "value at q=" << *q << ", x1=" << *x1 << ", x2=" << *x2 << ": "
              << qbern::checks::fmt_real(qbern::basis_eval_real(k, n, ctx)) << '\n';
  }
  return 0;
}

int cmd_padic(long p, long q0, long n, int level, int digits, const std::string& check, long x0) {
  qbern::PadicCheck c;
  if (check == "eq4")
    c = qbern::padic_check_eq4(n, x0, p, q0, level, digits);
  else if (check == "eq15")
    c = qbern::padic_check_eq15(n, x0, p, q0, level, digits);
  else
    c = qbern::padic_check_eq18(n, p, q0, level, digits);
  ordered_json levels = ordered_json::array();
  for (const auto& l : c.levels) {
    ordered_json row{{"level", l.level}};
    row["valuation"] = l.exact ? ordered_json("exact") : ordered_json(l.valuation);
    levels.push_back(row);
  }
  ordered_json doc{{"check", c.check},
                   {"params", c.params},
                   {"levels", levels},
                   {"riemann_sum", c.lhs},
                   {"target", c.rhs},
                   {"verdict", c.converging ? "converging" : "not-converging"}};
  std::cout << doc.dump(2) << '\n';
  return c.converging ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-Bernoulli / q-Bernstein identity checker"};
  app.require_subcommand(1);

  std::string filter, format = "text";
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  auto* check = app.add_subcommand("check", "run registered identity checks");
  check->add_option("--filter", filter, "glob over identity ids");
  check->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1U, 256U));
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  long max_n = 10;
  std::string beta_format = "text";
  auto* beta = app.add_subcommand("beta", "tabulate Carlitz q-Bernoulli numbers");
  beta->add_option("--max-n", max_n)->check(CLI::Range(0L, 200L));
  beta->add_option("--format", beta_format)->check(CLI::IsMember({"text", "json"}));

  long bn = 0, bk = 0;
  std::optional<double> bq, bx1, bx2;
  auto* bern = app.add_subcommand("bernstein", "print B_{k,n} and optionally its value");
  bern->add_option("--n", bn)->required()->check(CLI::Range(0L, 200L));
  bern->add_option("--k", bk)->required();
  bern->add_option("--q", bq);
  bern->add_option("--x1", bx1);
  bern->add_option("--x2", bx2);

  long pp = 5, pq = 6, pn = 1, px0 = 0;
  int plevel = 5, pdigits = 12;
  std::string pcheck = "eq4";
  auto* padic = app.add_subcommand("padic", "p-adic Riemann-sum convergence");
  padic->add_option("--p", pp)->required();
  padic->add_option("--q", pq)->required();
  padic->add_option("--n", pn)->required();
  padic->add_option("--level", plevel)->required();
  padic->add_option("--digits", pdigits)->required();
  padic->add_option("--check", pcheck)->check(CLI::IsMember({"eq4", "eq15", "eq18"}));
  padic->add_option("--x0", px0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(filter, jobs, format);
    if (*beta) return cmd_beta(max_n, beta_format);
    if (*bern) return cmd_bernstein(bn, bk, bq, bx1, bx2);
    if (*padic) return cmd_padic(pp, pq, pn, plevel, pdigits, pcheck, px0);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
