#pragma once

// Symbolic verification of the Cayley-Menger identities. Every check is a zero test on an
// exact difference (or an exact content/value comparison); failures become report entries.
//
// Cross-n identities use variable names literally: the point sets are nested, so Gamma_{n-1}
// and Delta_{n-1} live on points 0..n-1 inside Lambda_{n,n-1}'s points 0..n with no relabeling.

#include "cayley/cayley_menger.hpp"
#include "cayley/report.hpp"

#include <future>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cayley {

/// Pass iff lhs - rhs is identically zero; the witness is the canonical difference.
inline CheckResult check_equal(std::string id, std::vector<int> params, const Polynomial& lhs,
                               const Polynomial& rhs) {
  const Polynomial diff = lhs - rhs;
  CheckResult r{std::move(id), std::move(params), Status::kPass, {}};
  if (!diff.is_zero()) {
    r.status = Status::kFail;
    r.witness = canonical_string(diff);
  }
  return r;
}

/// Pass iff actual == expected; the witness is the offending value.
template <class Value>
CheckResult check_value(std::string id, std::vector<int> params, const Value& actual, const Value& expected) {
  CheckResult r{std::move(id), std::move(params), Status::kPass, {}};
  if (actual != expected) {
    r.status = Status::kFail;
    r.witness = to_string(actual);
  }
  return r;
}

namespace detail {

inline Polynomial var(VarId v) { return Polynomial::variable(v); }
inline Polynomial d(unsigned i, unsigned j) { return var(VarId::dist(i, j)); }
inline Polynomial t(unsigned k) { return var(VarId::tau(k)); }

inline void require_range(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi) {
    throw Error(ErrorCode::kInvalidDimension, std::string(what) + " needs " + std::to_string(lo) +
                                                  " <= n <= " + std::to_string(hi) + ", got " +
                                                  std::to_string(value));
  }
}

}  // namespace detail

/// Gamma_1 = 2 d01^2, Delta_1 = -d01^4, Delta_2 = 2 d01^2 d02^2 d12^2.
inline VerificationReport check_closed_forms(CayleyMengerEngine& engine) {
  using detail::d;
  VerificationReport report;
  report.add(check_equal("closed.gamma", {1}, engine.gamma(1), Polynomial(2) * pow(d(0, 1), 2)));
  report.add(check_equal("closed.delta", {1}, engine.delta(1), -pow(d(0, 1), 4)));
  report.add(check_equal("closed.delta", {2}, engine.delta(2),
                         Polynomial(2) * pow(d(0, 1), 2) * pow(d(0, 2), 2) * pow(d(1, 2), 2)));
  return report;
}

/// (a+b+c)(-a+b+c)(a-b+c)(a+b-c) with a = d01, b = d12, c = d02.
inline Polynomial heron_product() {
  using detail::d;
  const Polynomial a = d(0, 1);
  const Polynomial b = d(1, 2);
  const Polynomial c = d(0, 2);
  return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
}

/// Heron: -Gamma_2 equals the four-factor product, plus exact spot values 16 A^2.
inline VerificationReport check_heron(CayleyMengerEngine& engine) {
  VerificationReport report;
  const Polynomial minus_gamma = -engine.gamma(2);
  const Polynomial product = heron_product();
  report.add(check_equal("heron.symbolic", {}, minus_gamma, product));

  struct Spot {
    int a, b, c;
    Rational area_squared;
  };
  // 3-4-5 is a right triangle with legs 3 and 4; the unit equilateral triangle has A^2 = 3/16.
  const Spot spots[] = {{3, 4, 5, Rational(36)}, {1, 1, 1, Rational(3, 16)}};
  for (const Spot& s : spots) {
    const Assignment at{{VarId::dist(0, 1), Rational(s.a)}, {VarId::dist(1, 2), Rational(s.b)},
                        {VarId::dist(0, 2), Rational(s.c)}};
    const Rational expected = 16 * s.area_squared;
    const Rational lhs = evaluate(minus_gamma, at);
    const Rational rhs = evaluate(product, at);
    CheckResult spot{"heron.numeric", {s.a, s.b, s.c}, Status::kPass, {}};
    if (lhs != expected || rhs != expected) {
      spot.status = Status::kFail;
      spot.witness = to_string(lhs) + "," + to_string(rhs);
    }
    report.add(std::move(spot));
  }
  return report;
}

/// -(x+y+z)(x+y-z)(x-y+z)(-x+y+z) with x = d01 d23, y = d02 d13, z = d03 d12.
inline Polynomial ptolemy_product() {
  using detail::d;
  const Polynomial x = d(0, 1) * d(2, 3);
  const Polynomial y = d(0, 2) * d(1, 3);
  const Polynomial z = d(0, 3) * d(1, 2);
  return -((x + y + z) * (x + y - z) * (x - y + z) * (-x + y + z));
}

/// Ptolemy factorization of Delta_3, with the concyclic unit square and the all-ones point set.
inline VerificationReport check_ptolemy(CayleyMengerEngine& engine) {
  VerificationReport report;
  const Polynomial& delta3 = engine.delta(3);
  report.add(check_equal("ptolemy.symbolic", {}, delta3, ptolemy_product()));

  Assignment square;
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = i + 1; j < 4; ++j) square[VarId::dist(i, j)] = Rational(1);
  }
  square[VarId::dist(0, 2)] = Rational(2);
  square[VarId::dist(1, 3)] = Rational(2);
  report.add(check_value("ptolemy.square", {}, evaluate_squared(delta3, square), Rational(0)));

  Assignment ones;
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = i + 1; j < 4; ++j) ones[VarId::dist(i, j)] = Rational(1);
  }
  report.add(check_value("ptolemy.unit", {}, evaluate_squared(delta3, ones), Rational(-3)));
  return report;
}

/// Lambda_{n,n-1} = -2 Gamma_{n-1} t_n^2 - Delta_{n-1}.
inline VerificationReport check_lambda_base(CayleyMengerEngine& engine, int n) {
  detail::require_range(n, 2, engine.cap(), "check_lambda_base");
  const auto un = static_cast<unsigned>(n);
  const Polynomial rhs = Polynomial(-2) * engine.gamma(n - 1) * pow(detail::t(un), 2) - engine.delta(n - 1);
  VerificationReport report;
  report.add(check_equal("lambda_base", {n}, engine.lambda(n, n - 1), rhs));
  return report;
}

/// Delta_{n-1}(d_{i,n-1} -> t_{n-1}) = t_{n-1}^4 Gamma_{n-2}.
inline VerificationReport check_delta_collapse(CayleyMengerEngine& engine, int n) {
  detail::require_range(n, 3, engine.cap() + 1, "check_delta_collapse");
  const auto last = static_cast<unsigned>(n - 1);
  Substitution collapse;
  for (unsigned i = 0; i < last; ++i) collapse.emplace(VarId::dist(i, last), detail::t(last));
  const Polynomial lhs = substitute(engine.delta(n - 1), collapse);
  VerificationReport report;
  report.add(check_equal("delta_collapse", {n}, lhs, pow(detail::t(last), 4) * engine.gamma(n - 2)));
  return report;
}

/// Lambda_{n,p} = -2 Lambda_{n-1,p} t_n^2 - Lambda_{n-2,p} t_{n-1}^4 for n >= p+2.
inline VerificationReport check_recurrence(CayleyMengerEngine& engine, int n, int p) {
  if (p < 1) throw Error(ErrorCode::kInvalidDimension, "check_recurrence needs p >= 1");
  detail::require_range(n, p + 2, engine.cap(), "check_recurrence");
  const auto un = static_cast<unsigned>(n);
  const Polynomial rhs = Polynomial(-2) * engine.lambda(n - 1, p) * pow(detail::t(un), 2) -
                         engine.lambda(n - 2, p) * pow(detail::t(un - 1), 4);
  VerificationReport report;
  report.add(check_equal("recurrence", {n, p}, engine.lambda(n, p), rhs));
  return report;
}

/// Delta_n' := Delta_n(d_{in} -> 1, 1 <= i <= n-1) is the homogenization of Gamma_{n-1} in the
/// group {d_0i : 1 <= i <= n-1} to degree 4 with d_0n as the homogenizing variable.
///
/// The group's partial degree in Gamma_{n-1} is 4 for n >= 3; for n = 2 it is 2, since
/// Gamma_1 = 2 d01^2 has total degree 2.
inline VerificationReport check_homogenization(CayleyMengerEngine& engine, int n) {
  detail::require_range(n, 2, engine.cap() + 1, "check_homogenization");
  const auto un = static_cast<unsigned>(n);
  Substitution unit_edges;
  VarSet group;
  for (unsigned i = 1; i < un; ++i) {
    unit_edges.emplace(VarId::dist(i, un), Polynomial(1));
    group.insert(VarId::dist(0, i));
  }
  const VarId h = VarId::dist(0, un);
  const Polynomial delta_prime = substitute(engine.delta(n), unit_edges);
  const Polynomial& gamma_prev = engine.gamma(n - 1);

  VerificationReport report;
  const Degree expected_degree(n >= 3 ? 4 : 2);
  const Degree actual_degree = partial_degree(gamma_prev, group);
  CheckResult degree_check{"homogenization.partial_degree", {n}, Status::kPass, {}};
  if (actual_degree != expected_degree) {
    degree_check.status = Status::kFail;
    degree_check.witness = actual_degree.is_minus_infinity() ? "-inf" : std::to_string(actual_degree.value());
  }
  report.add(std::move(degree_check));

  if (actual_degree <= Degree(4)) {
    report.add(check_equal("homogenization.identity", {n}, homogenize_group(gamma_prev, group, 4, h), delta_prime));
  } else {
    report.add({"homogenization.identity", {n}, Status::kFail, "partial degree exceeds 4"});
  }
  report.add(check_equal("homogenization.dehomogenize", {n}, substitute(delta_prime, {{h, Polynomial(1)}}),
                         gamma_prev));
  return report;
}

/// content(Gamma_n) and content(Delta_{n+1}) are 1 for even n and 2 for odd n.
inline VerificationReport check_content(CayleyMengerEngine& engine, int n) {
  detail::require_range(n, 1, engine.cap(), "check_content");
  const Integer expected = n % 2 == 0 ? 1 : 2;
  VerificationReport report;
  report.add(check_value("content.gamma", {n}, content(engine.gamma(n)), expected));
  report.add(check_value("content.delta", {n + 1}, content(engine.delta(n + 1)), expected));
  return report;
}

/// For odd n: det(X_n) has even content and the antisymmetric det(A_n) vanishes.
/// Even n carries no statement and yields an empty report.
inline VerificationReport check_mod2(CayleyMengerEngine& engine, int n) {
  detail::require_range(n, 1, engine.cap() + 2, "check_mod2");
  VerificationReport report;
  if (n % 2 == 0) return report;
  const Integer c = content(engine.x_determinant(n));
  CheckResult parity{"mod2.content", {n}, Status::kPass, {}};
  if (c % 2 != 0) {
    parity.status = Status::kFail;
    parity.witness = to_string(c);
  }
  report.add(std::move(parity));
  report.add(check_equal("mod2.antisymmetric", {n}, det_laplace(antisymmetric_matrix(n)), Polynomial{}));
  return report;
}

/// d01 divides Lambda_{n,1}: the d01 -> 0 specialization vanishes and exact division succeeds.
inline VerificationReport check_lambda_p1(CayleyMengerEngine& engine, int n) {
  detail::require_range(n, 2, engine.cap(), "check_lambda_p1");
  const Polynomial& lam = engine.lambda(n, 1);
  const VarId d01 = VarId::dist(0, 1);
  VerificationReport report;
  report.add(check_equal("lambda_p1.vanish", {n}, substitute(lam, {{d01, Polynomial{}}}), Polynomial{}));
  auto [quotient, remainder] = divide_with_remainder(lam, Polynomial::variable(d01));
  report.add(check_equal("lambda_p1.divisible", {n}, remainder, Polynomial{}));
  return report;
}

enum class Suite { kClosed, kHeron, kPtolemy, kBase, kCollapse, kRecurrence, kHomog, kContent, kMod2, kP1 };

inline constexpr Suite kAllSuites[] = {Suite::kClosed,   Suite::kHeron,      Suite::kPtolemy, Suite::kBase,
                                       Suite::kCollapse, Suite::kRecurrence, Suite::kHomog,   Suite::kContent,
                                       Suite::kMod2,     Suite::kP1};

inline const char* suite_name(Suite s) {
  switch (s) {
    case Suite::kClosed: return "closed";
    case Suite::kHeron: return "heron";
    case Suite::kPtolemy: return "ptolemy";
    case Suite::kBase: return "base";
    case Suite::kCollapse: return "collapse";
    case Suite::kRecurrence: return "recurrence";
    case Suite::kHomog: return "homog";
    case Suite::kContent: return "content";
    case Suite::kMod2: return "mod2";
    case Suite::kP1: return "p1";
  }
  return "?";
}

inline Suite parse_suite(std::string_view name) {
  for (Suite s : kAllSuites) {
    if (name == suite_name(s)) return s;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + std::string(name) + "'");
}

struct SuiteOptions {
  int max_n = 5;
  std::set<Suite> suites{std::begin(kAllSuites), std::end(kAllSuites)};
  /// Run suite groups on separate threads. The report order does not depend on this.
  bool parallel = true;
};

/// Every selected check for all valid parameters up to max_n. Mod-2 runs over odd n <= max_n + 2.
inline VerificationReport run_suite(CayleyMengerEngine& engine, const SuiteOptions& options) {
  detail::require_range(options.max_n, 1, engine.cap(), "run_suite");
  const int max_n = options.max_n;

  auto group = [&engine, max_n](Suite s) {
    VerificationReport r;
    switch (s) {
      case Suite::kClosed: r.append(check_closed_forms(engine)); break;
      case Suite::kHeron: r.append(check_heron(engine)); break;
      case Suite::kPtolemy: r.append(check_ptolemy(engine)); break;
      case Suite::kBase:
        for (int n = 2; n <= max_n; ++n) r.append(check_lambda_base(engine, n));
        break;
      case Suite::kCollapse:
        for (int n = 3; n <= max_n; ++n) r.append(check_delta_collapse(engine, n));
        break;
      case Suite::kRecurrence:
        for (int n = 3; n <= max_n; ++n) {
          for (int p = 1; p + 2 <= n; ++p) r.append(check_recurrence(engine, n, p));
        }
        break;
      case Suite::kHomog:
        for (int n = 2; n <= max_n; ++n) r.append(check_homogenization(engine, n));
        break;
      case Suite::kContent:
        for (int n = 1; n <= max_n; ++n) r.append(check_content(engine, n));
        break;
      case Suite::kMod2:
        for (int n = 1; n <= max_n + 2; n += 2) r.append(check_mod2(engine, n));
        break;
      case Suite::kP1:
        for (int n = 2; n <= max_n; ++n) r.append(check_lambda_p1(engine, n));
        break;
    }
    return r;
  };

  std::vector<Suite> order;
  for (Suite s : kAllSuites) {
    if (options.suites.contains(s)) order.push_back(s);
  }

  VerificationReport report;
  if (options.parallel) {
    std::vector<std::future<VerificationReport>> pending;
    for (Suite s : order) pending.push_back(std::async(std::launch::async, group, s));
    for (auto& f : pending) report.append(f.get());
  } else {
    for (Suite s : order) report.append(group(s));
  }
  return report;
}

inline VerificationReport run_suite(CayleyMengerEngine& engine, int max_n) {
  SuiteOptions options;
  options.max_n = max_n;
  return run_suite(engine, options);
}

}  // namespace cayley
