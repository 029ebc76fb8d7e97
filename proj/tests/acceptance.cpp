// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "cayley/cayley_menger.hpp"
#include "cayley/determinant.hpp"
#include "cayley/geometry.hpp"
#include "cayley/identities.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace cayley;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::optional<double> limit_seconds;
  std::function<Outcome()> body;
};

Outcome from_report(const VerificationReport& report) {
  std::ostringstream text;
  text << report.checks.size() << " checks, " << report.failures() << " failed";
  for (const CheckResult& c : report.checks) {
    if (c.status == Status::kFail) {
      text << "; first failure " << c.check_id << " [" << detail::join_parameters(c.parameters) << "]";
      break;
    }
  }
  return {report.passed() && !report.checks.empty(), text.str()};
}

Outcome degrees(CayleyMengerEngine& engine) {
  for (int n = 1; n <= 5; ++n) {
    const Homogeneity g = is_homogeneous(engine.gamma(n));
    if (!g.homogeneous || g.degree != static_cast<unsigned>(2 * n)) {
      return {false, "gamma(" + std::to_string(n) + ") is not homogeneous of degree " + std::to_string(2 * n)};
    }
    const Homogeneity d = is_homogeneous(engine.delta(n));
    if (!d.homogeneous || d.degree != static_cast<unsigned>(2 * n + 2)) {
      return {false, "delta(" + std::to_string(n) + ") is not homogeneous of degree " + std::to_string(2 * n + 2)};
    }
  }
  return {true, "gamma(n) degree 2n, delta(n) degree 2n+2 for n <= 5"};
}

Outcome content_check(CayleyMengerEngine& engine) {
  VerificationReport r;
  for (int n = 1; n <= 5; ++n) r.append(check_content(engine, n));
  return from_report(r);
}

Outcome identity_check(CayleyMengerEngine& engine) {
  VerificationReport r;
  for (int n = 2; n <= 5; ++n) r.append(check_lambda_base(engine, n));
  for (int n = 3; n <= 5; ++n) r.append(check_delta_collapse(engine, n));
  for (int n = 3; n <= 5; ++n) {
    for (int p = 1; p + 2 <= n; ++p) r.append(check_recurrence(engine, n, p));
  }
  return from_report(r);
}

Outcome homogenization_check(CayleyMengerEngine& engine) {
  VerificationReport r;
  for (int n = 2; n <= 5; ++n) r.append(check_homogenization(engine, n));
  return from_report(r);
}

Outcome mod2_check(CayleyMengerEngine& engine) {
  VerificationReport r;
  for (int n = 1; n <= 7; n += 2) r.append(check_mod2(engine, n));
  return from_report(r);
}

Outcome determinant_cross_check() {
  int builders = 0;
  for (int n = 1; n <= 7; ++n) {
    std::vector<SymbolicMatrix> matrices{x_matrix(n), antisymmetric_matrix(n)};
    if (n + 2 <= 7) matrices.push_back(cm_matrix(n));
    if (n + 1 <= 7) matrices.push_back(delta_matrix(n));
    for (const SymbolicMatrix& m : matrices) {
      ++builders;
      if (det_laplace(m) != det_bareiss(m)) return {false, "mismatch on a builder of order " + std::to_string(m.order())};
    }
  }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> order(1, 6);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    IntegerMatrix m(static_cast<std::size_t>(order(rng)));
    for (std::size_t i = 0; i < m.order(); ++i) {
      for (std::size_t j = 0; j < m.order(); ++j) m.at(i, j) = entry(rng);
    }
    if (det_laplace(m) != det_bareiss(m)) return {false, "mismatch on random matrix " + std::to_string(trial)};
  }
  return {true, std::to_string(builders) + " builder matrices, 100 random integer matrices"};
}

Outcome geometry_oracle() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> points(3, 6);
  std::uniform_int_distribution<int> den(1, 8);
  const int trials = 240;
  int realizable_mismatch = 0;
  int volume_mismatch = 0;
  int oracle_realizable = 0;
  std::string first;
  for (int trial = 0; trial < trials; ++trial) {
    const DistanceMatrix dm = DistanceMatrix::from_function(static_cast<std::size_t>(points(rng)), [&](std::size_t, std::size_t) {
      const int q = den(rng);
      std::uniform_int_distribution<int> num((q + 3) / 4, 4 * q);
      return Rational(num(rng), q);
    });
    const GramResult oracle = gram_oracle(dm);
    if (oracle.realizable) {
      ++oracle_realizable;
      if (volume_squared(dm).value != *oracle.volume_squared) ++volume_mismatch;
    }
    if (is_realizable(dm).value != oracle.realizable) {
      ++realizable_mismatch;
      if (first.empty()) {
        std::ostringstream s;
        s << dm.points() << " points {";
        for (std::size_t k = 0; k < dm.upper().size(); ++k) s << (k ? "," : "") << to_string(dm.upper()[k]);
        s << "} gamma=" << to_string(gamma_value(dm)) << " oracle=" << (oracle.realizable ? "yes" : "no");
        first = s.str();
      }
    }
  }
  int regular_bad = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    const DistanceMatrix dm = DistanceMatrix::regular(n + 1, 1);
    const Rational expected = (n % 2 == 1 ? 1 : -1) * Rational(static_cast<long>(n) + 1);
    const GramResult oracle = gram_oracle(dm);
    if (gamma_value(dm) != expected || !oracle.realizable || *oracle.volume_squared != volume_squared(dm).value) {
      ++regular_bad;
    }
  }
  std::ostringstream detail;
  detail << trials << " random matrices (" << oracle_realizable << " realizable by Gram), realizability mismatches "
         << realizable_mismatch << ", volume mismatches " << volume_mismatch << ", regular simplex failures "
         << regular_bad;
  if (!first.empty()) detail << "; first mismatch " << first;
  return {realizable_mismatch == 0 && volume_mismatch == 0 && regular_bad == 0, detail.str()};
}

Outcome circumradius_check() {
  const Rational right = circumradius_squared(DistanceMatrix(3, {3, 5, 4})).value;
  const Rational equilateral = circumradius_squared(DistanceMatrix::regular(3, 1)).value;
  const Rational tetrahedron = circumradius_squared(DistanceMatrix::regular(4, 1)).value;
  return {right == Rational(25, 4) && equilateral == Rational(1, 3) && tetrahedron == Rational(3, 8),
          to_string(right) + ", " + to_string(equilateral) + ", " + to_string(tetrahedron)};
}

struct Captured {
  int status;
  std::string out;
};

Captured capture(const std::string& command) {
  Captured result{-1, {}};
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t read = 0;
  while ((read = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, read);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

Outcome end_to_end() {
  const std::string command = std::string("\"") + CAYLEY_CLI_PATH + "\" verify --max-n 5 2>/dev/null";
  const Captured first = capture(command);
  const Captured second = capture(command);
  const VerificationReport report = report_from_lines(first.out);
  std::ostringstream detail;
  detail << "exit " << first.status << "/" << second.status << ", " << report.checks.size() << " checks, "
         << (first.out == second.out ? "identical" : "different") << " output";
  return {first.status == 0 && second.status == 0 && !first.out.empty() && first.out == second.out &&
              report.passed(),
          detail.str()};
}

}  // namespace

int main() {
  CayleyMengerEngine engine;
  std::vector<bool> results(14, false);
  const std::vector<Criterion> criteria{
      {1, "closed forms", 1.0, [&] { return from_report(check_closed_forms(engine)); }},
      {2, "Heron factorization and (3,4,5) spot check", 1.0, [&] { return from_report(check_heron(engine)); }},
      {3, "Ptolemy factorization of delta(3)", 5.0, [&] { return from_report(check_ptolemy(engine)); }},
      {4, "degrees and homogeneity, n <= 5", 60.0, [&] { return degrees(engine); }},
      {5, "content 1 for even n, 2 for odd n", std::nullopt, [&] { return content_check(engine); }},
      {6, "base, collapse and recurrence identities", std::nullopt, [&] { return identity_check(engine); }},
      {7, "homogenization with partial degree four", std::nullopt, [&] { return homogenization_check(engine); }},
      {8, "mod-2 lemma for odd n <= 7", std::nullopt, [&] { return mod2_check(engine); }},
      {9, "Laplace vs Bareiss cross-check", std::nullopt, [] { return determinant_cross_check(); }},
      {10, "geometry agrees with the Gram oracle", 30.0, [] { return geometry_oracle(); }},
      {11, "circumradius examples", std::nullopt, [] { return circumradius_check(); }},
      {12, "irreducibility skeleton (criteria 5-8)", std::nullopt,
       [&] {
         const bool ok = results[5] && results[6] && results[7] && results[8];
         return Outcome{ok, ok ? "criteria 5-8 pass" : "some of criteria 5-8 fail"};
       }},
      {13, "end-to-end verify --max-n 5", 120.0, [] { return end_to_end(); }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream timing;
    timing.precision(3);
    timing << std::fixed << seconds << " s";
    if (c.limit_seconds) {
      timing << " of " << *c.limit_seconds << " s";
      if (seconds >= *c.limit_seconds) {
        outcome.pass = false;
        outcome.detail += "; over time budget";
      }
    }
    results[static_cast<std::size_t>(c.id)] = outcome.pass;
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << timing.str()
              << ") - " << outcome.detail << "\n";
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
