// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qbern/qbern.hpp"

using namespace qbern;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

unsigned jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

std::string suite_fingerprint(const SuiteResult& s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : s.reports) {
    auto j = to_json(r);
    j.erase("elapsed_ms");
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

Outcome carlitz_table() {
  Outcome o;
  const auto t0 = Clock::now();
  const RatQ q = RatQ::q();
  o.require(carlitz_beta(0) == RatQ(1), "beta_0 = 1");
  o.require(carlitz_beta(1) == RatQ(-1) / (RatQ(1) + q), "beta_1 = -1/(1+q)");
  o.require(carlitz_beta(2) == q / ((RatQ(1) + q) * RatQ(q_int(3))), "beta_2 = q/((1+q)(1+q+q^2))");
  for (long n = 0; n <= 20; ++n) {
    BigRat at_one;
    try {
      at_one = carlitz_beta(n).eval(1);
    } catch (const std::domain_error&) {
      o.require(false, "pole at q=1 for n=" + std::to_string(n));
      continue;
    }
    o.require(at_one == checks::classical_bernoulli(n), "q=1 limit at n=" + std::to_string(n));
  }
  const double secs = seconds_since(t0);
  o.require(secs < 1.0, "runtime");
  o.detail << " n<=20, " << secs << " s";
  return o;
}

Outcome exact_identities() {
  Outcome o;
  const auto t0 = Clock::now();
  int total = 0;
  for (const char* id : {"thm1", "lemma2-sym", "eq10", "eq12", "eq13", "eq14", "thm3", "genfun", "eq16", "eq17", "eq18"}) {
    const SuiteResult s = run_suite(id, jobs());
    o.require(!s.reports.empty(), std::string(id) + " has no points");
    for (const auto& r : s.reports) {
      ++total;
      o.require(r.status == Status::Verified, r.id + " " + render_params(r.params));
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 30.0, "runtime");
  o.detail << " " << total << " points, " << secs << " s";
  return o;
}

Outcome double_integrals() {
  Outcome o;
  int points = 0;
  for (long n = 0; n <= 10; ++n)
    for (long k = 0; k <= 10; ++k) {
      ++points;
      const Report r = run_check("thm4", {{"k", k}, {"n", n}});
      o.require(r.status == Status::Verified, "thm4 k=" + std::to_string(k) + ",n=" + std::to_string(n));
      const RatQ v = bernstein_double_integral(k, n);
      if (n == k) o.require(v == carlitz_beta(k), "n=k branch at k=" + std::to_string(k));
      if (n < k) o.require(v.is_zero(), "n<k branch");
    }
  o.require(bernstein_double_integral(0, 0) == RatQ(1), "n=k=0 gives 1");
  o.detail << " " << points << " (k,n) points";
  return o;
}

Outcome reflected_moment_forms(SuiteResult& full) {
  Outcome o;
  for (long k = 0; k <= 8; ++k)
    o.require(run_check("thm5-corrected", {{"k", k}}).status == Status::Verified, "thm5-corrected k=" + std::to_string(k));
  for (long k = 0; k <= 3; ++k)
    o.require(run_check("thm6-corrected", {{"k", k}}).status == Status::Verified, "thm6-corrected k=" + std::to_string(k));
  for (long s = 1; s <= 4; ++s)
    for (long k = 0; k <= 2; ++k)
      o.require(run_check("thm7-corrected", {{"k", k}, {"s", s}}).status == Status::Verified,
                "thm7-corrected s=" + std::to_string(s) + ",k=" + std::to_string(k));

  int literal_failed = 0;
  for (const auto& r : full.reports) {
    BigInt prefactor = 1;
    if (r.id == "thm5-literal") {
      prefactor = binomial(r.params.at("n"), r.params.at("k"));
    } else if (r.id == "thm6-literal") {
      prefactor = binomial(r.params.at("n"), r.params.at("k")) * binomial(r.params.at("m"), r.params.at("k"));
    } else if (r.id == "thm7-literal") {
      for (long n : checks::thm7_degrees(r.params.at("s"), r.params.at("k"), r.params.at("pattern")))
        prefactor *= binomial(n, r.params.at("k"));
    } else {
      continue;
    }
    if (prefactor != 1) {
      o.require(r.status == Status::Failed, "literal form not failed at " + r.id + " " + render_params(r.params));
      ++literal_failed;
    }
  }
  const Report witness = run_check("thm5-literal", {{"k", 1}, {"n", 3}});
  o.require(witness.status == Status::Failed && witness.lhs == "-3/(q+1)" && witness.rhs == "-1/(q+1)",
            "witness (n,k)=(3,1)");
  o.require(full.exit_code == 0, "full-suite exit code " + std::to_string(full.exit_code));
  o.detail << " literal failures at " << literal_failed << " points with prefactor != 1; suite exit "
           << full.exit_code;
  return o;
}

Outcome stirling_expansion() {
  Outcome o;
  for (long j = 0; j <= 6; ++j)
    o.require(run_check("stirling", {{"j", j}}).status == Status::Verified, "stirling j=" + std::to_string(j));
  o.detail << " stated indexing:";
  for (long j = 0; j <= 6; ++j)
    o.detail << " j=" << j << ":" << status_name(run_check("stirling-literal", {{"j", j}}).status);
  return o;
}

Outcome padic_convergence() {
  Outcome o;
  const auto t0 = Clock::now();
  constexpr int kDigits = 12, kLevels = 5;
  for (long p : {3L, 5L}) {
    const long q0 = 1 + p;
    for (int level = 1; level <= kLevels; ++level) {
      const Padic one = riemann_sum_integral({Integrand::constant_one(), Measure::MuQ}, p, q0, level, kDigits);
      o.require(one.to_integer() && one.to_integer()->residue() == 1, "constant_one at N=" + std::to_string(level));
      o.require(normalizer_valuation(p, q0, level) == level, "v([p^N]) at N=" + std::to_string(level));
    }
    for (long n = 1; n <= 3; ++n) {
      const auto levels = convergence_report(n, p, q0, kLevels, kDigits);
      int increases = 0;
      for (std::size_t i = 1; i < levels.size(); ++i) {
        o.require(levels[i].valuation >= levels[i - 1].valuation,
                  "monotone p=" + std::to_string(p) + ",n=" + std::to_string(n));
        increases += levels[i].valuation > levels[i - 1].valuation;
      }
      o.require(increases >= 2, "strict increases p=" + std::to_string(p) + ",n=" + std::to_string(n));
      o.detail << " p=" << p << ",n=" << n << "{";
      for (const auto& l : levels) o.detail << (l.level > 1 ? "," : "") << l.valuation;
      o.detail << "}";
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 5.0, "runtime");
  o.detail << " " << secs << " s";
  return o;
}

Outcome numeric_layer() {
  Outcome o;
  for (const auto& r : run_suite("lemma2-num", 1).reports)
    o.require(r.status == Status::Verified, "lemma2-num " + render_params(r.params) + " " + r.notes);
  for (long n : {10L, 100L, 1000L}) {
    const Report r = run_check("eq13-num", {{"n", n}});
    o.require(r.status == Status::Verified, "eq13-num n=" + std::to_string(n));
    o.detail << " n=" << n << ":" << r.lhs;
  }
  return o;
}

Outcome determinism(const SuiteResult& first) {
  Outcome o;
  const SuiteResult second = run_suite("", jobs());
  o.require(suite_fingerprint(first) == suite_fingerprint(second), "JSON differs between runs");
  o.detail << " " << first.reports.size() << " reports compared";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int index, const std::string& title, const std::function<Outcome()>& run) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index << ": " << title << " --" << o.detail.str()
              << std::endl;
    failures += o.pass ? 0 : 1;
  };

  report(1, "Carlitz table and classical limit", carlitz_table);
  report(2, "exact identity suite", exact_identities);
  report(3, "double q-integrals of the basis", double_integrals);
  SuiteResult full = run_suite("", jobs());
  report(4, "beta from reflected moments, stated and corrected forms", [&] { return reflected_moment_forms(full); });
  report(5, "q-Stirling expansion", stirling_expansion);
  report(6, "p-adic Riemann-sum convergence", padic_convergence);
  report(7, "numeric layer", numeric_layer);
  report(8, "determinism of full-suite JSON", [&] { return determinism(full); });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
