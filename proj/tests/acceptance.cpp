// Acceptance runner: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria (0 when all pass).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "brute_force.hpp"
#include "gtsg/cli.hpp"
#include "gtsg/semigroup.hpp"
#include "gtsg/thabit.hpp"

using gtsg::Nat;
using gtsg::pow2;
using namespace gtsg::thabit;

namespace {

// Runtime limits, in seconds.
constexpr double kGoldenLimit = 1.0;
constexpr double kFormulaLimit = 1.0;
constexpr double kSweepParallelLimit = 60.0;
constexpr double kSweepSerialLimit = 300.0;
constexpr double kSelfConsistencyLimit = 30.0;

const Nat kSweepS0Max = 200'000;
constexpr std::uint32_t kSweepNMax = 32;
constexpr std::uint32_t kSweepKMax = 32;
const Nat kPropertyS0Max = 10'000;
// Closure and step-down scans visit every integer up to this bound.
constexpr std::uint64_t kLiteralScanMax = std::uint64_t{1} << 26;

struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      failures.push_back(s.str());
    }
  }
};

std::string list(const std::vector<Nat>& v) {
  std::ostringstream s;
  s << "{";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
  s << "}";
  return s.str();
}

std::vector<Nat> nats(std::initializer_list<long long> xs) {
  return {xs.begin(), xs.end()};
}

std::vector<Nat> gens_of(const gtsg::GeneratorSet& s) {
  return {s.gens().begin(), s.gens().end()};
}

Nat s(std::uint32_t n, std::uint32_t k, std::uint64_t i) { return generator_at({n, k}, i); }

std::vector<GTParams> grid(const Nat& s0_max) {
  return gtsg::cli::verify_grid(kSweepNMax, kSweepKMax, s0_max);
}

int failed = 0;

void report(const std::string& id, const std::string& title, const Check& c, double secs,
            double limit, const std::string& extra = "") {
  bool time_ok = secs < limit;
  bool ok = c.failures.empty() && time_ok;
  if (!ok) ++failed;
  std::cout << (ok ? "PASS " : "FAIL ") << id << " " << title << " (" << secs << " s";
  if (std::isfinite(limit))
    std::cout << ", limit " << limit << " s";
  else
    std::cout << ", no time limit";
  std::cout << extra << ")";
  if (!time_ok) std::cout << " [over time limit]";
  std::cout << "\n";
  for (const auto& f : c.failures) std::cout << "    " << f << "\n";
}

double timed(const std::function<void()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void golden_values() {
  Check c;
  double secs = timed([&] {
    c.equal(frobenius_closed({1, 2}), 67, "F(GT(1,2))");
    c.equal(list(apery_set_closed({1, 2})), list(nats({0, 17, 34, 37, 54, 71, 74})),
            "Ap(GT(1,2))");
    c.equal(frobenius_closed({5, 3}), 81483, "F(GT(5,3))");
    c.equal(max_apery({5, 3}), 81764, "max Ap(GT(5,3))");
    c.equal(frobenius_closed({7, 3}), 1325903, "F(GT(7,3))");
    c.equal(max_apery({7, 3}), 1327048, "max Ap(GT(7,3))");
    c.equal(frobenius_closed({2, 3}), 1095, "F(GT(2,3))");
    c.equal(max_apery({2, 3}), 1124, "max Ap(GT(2,3))");

    auto ap32 = apery_set_closed({3, 2});
    c.equal(ap32.size(), 37u, "|Ap(GT(3,2),37)|");
    c.equal(ap32.back(), 2 * s(3, 2, 1) + s(3, 2, 2) + s(3, 2, 5), "max Ap(GT(3,2))");
    auto ap22 = apery_set_closed({2, 2});
    c.equal(ap22.size(), 17u, "|Ap(GT(2,2),17)|");
    c.equal(ap22.back(), s(2, 2, 1) + s(2, 2, 4), "max Ap(GT(2,2))");

    c.equal(list(gens_of(minimal_generating_set({0, 3}))), list(nats({2, 11})), "GT(0,3)");
    c.equal(list(gens_of(minimal_generating_set({3, 2}))),
            list(nats({37, 77, 157, 317, 637, 1277})), "GT(3,2)");
    c.equal(list(gens_of(minimal_generating_set({1, 3}))), list(nats({11, 29, 65, 137})),
            "GT(1,3)");
    c.equal(list(gens_of(minimal_generating_set({7, 3}))),
            list(nats({1145, 2297, 4601, 9209, 18425, 36857, 73721, 147449, 294905, 589817,
                       1179641})),
            "GT(7,3)");

    auto oracle = gtsg::apery_set(gtsg::make_semigroup(nats({7, 11, 13})), 7).sorted();
    c.equal(list(oracle), list(nats({0, 11, 13, 22, 24, 26, 37})), "Ap(<7,11,13>,7)");
  });
  report("AC1", "golden values", c, secs, kGoldenLimit);
}

void formula_consistency() {
  Check c;
  double secs = timed([&] {
    for (std::uint32_t n = 1; n <= 12; ++n)
      c.equal(frobenius_closed({n, 1}), 9 * pow2(2 * n) - 3 * pow2(n) - 1,
              "F(GT(" + std::to_string(n) + ",1))");
    for (std::uint32_t n = 1; n <= 10; ++n)
      c.equal(frobenius_closed({n, n}),
              (pow2(n) + 1) * pow2(n) * (pow2(2 * n) + 1) - (pow2(n) - 1),
              "F(GT(" + std::to_string(n) + "," + std::to_string(n) + "))");
    c.expect(case_of({1, 1}) == CaseTag::K1, "GT(1,1) routed via K1");
    c.equal(max_apery({1, 1}), s(1, 1, 1) + s(1, 1, 2), "K1 and k = n agree at (1,1)");
    for (std::uint32_t n = 2; n <= 12; ++n)
      c.equal(frobenius_closed({n, 2}), 85 * pow2(2 * n - 2) - 5 * pow2(n) - 9,
              "F(GT(" + std::to_string(n) + ",2)) vs 85*2^(2n-2) - 5*2^n - 9");
  });
  report("AC2", "formula consistency", c, secs, kFormulaLimit);
}

void sweep() {
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  gtsg::cli::VerifyReport rep;
  Check c;
  double secs = timed([&] { rep = gtsg::cli::run_verify(kSweepNMax, kSweepKMax, kSweepS0Max, jobs); });
  std::size_t nonzero_n = 0;
  for (const auto& pt : rep.points) {
    if (pt.params.n > 0) ++nonzero_n;
    for (const auto& m : pt.mismatches)
      c.failures.push_back("GT(" + std::to_string(pt.params.n) + "," +
                           std::to_string(pt.params.k) + ") " + m.field);
  }
  c.expect(nonzero_n >= 100 && nonzero_n <= 150,
           "grid with n >= 1 has " + std::to_string(nonzero_n) + " points");
  double limit = jobs > 1 ? kSweepParallelLimit : kSweepSerialLimit;
  report("AC3", "oracle-equivalence sweep", c, secs, limit,
         ", " + std::to_string(rep.points.size()) + " points, " + std::to_string(jobs) +
             " threads");
}

void property_suites() {
  Check c;
  double secs = timed([&] {
    auto full = grid(kSweepS0Max);
    for (const GTParams& p : full) {
      const std::string id = "GT(" + std::to_string(p.n) + "," + std::to_string(p.k) + ")";
      const std::uint32_t top = coeff_length(p);
      const Nat s0 = generator_at(p, 0);
      const Nat c1 = pow2(p.k) - 1;
      for (std::uint32_t j = 1; j < top; ++j)
        for (std::uint32_t i = 1; i <= j; ++i)
          if (generator_at(p, i) + 2 * generator_at(p, j) !=
              2 * generator_at(p, i - 1) + generator_at(p, j + 1))
            c.failures.push_back(id + " rewriting identity i=" + std::to_string(i) +
                                 " j=" + std::to_string(j));
      for (std::uint32_t i = 0; i <= top; ++i)
        if (generator_at(p, i) % s0 != ((pow2(i) - 1) * c1) % s0)
          c.failures.push_back(id + " residue law i=" + std::to_string(i));
      c.expect(max_apery(p) % s0 == (s0 - c1 % s0) % s0, id + " max Apery residue");

      std::set<Nat> values;
      std::size_t count = 0;
      for_each_apery_coeff(p, [&](const CoeffSeq& t) {
        ++count;
        values.insert(coeff_value(p, t));
      });
      c.expect(Nat(count) == s0, id + " |apery_coeffs| = " + std::to_string(count));
      c.expect(values.size() == count, id + " coeff_value not injective");
    }

    for (std::size_t length = 1; length <= 12; ++length) {
      std::map<std::uint64_t, std::vector<std::vector<std::uint8_t>>> by_target;
      for (const auto& t : brute::ternary(length))
        if (brute::two_rule(t)) by_target[brute::skew_weight(t)].push_back(t);
      const std::uint64_t top = 2 * ((std::uint64_t{1} << length) - 1);
      const auto len = static_cast<std::uint32_t>(length);
      c.expect(by_target.size() == top + 1, "coeff_solve coverage L=" + std::to_string(length));
      for (const auto& [target, sols] : by_target) {
        auto solved = coeff_solve(Nat(target), len);
        if (sols.size() != 1 || !solved || solved->t != sols.front())
          c.failures.push_back("coeff_solve L=" + std::to_string(length) +
                               " target=" + std::to_string(target));
      }
      c.expect(!coeff_solve(Nat(top + 1), len), "coeff_solve overflow L=" + std::to_string(length));
    }

    for (const GTParams& p : grid(kPropertyS0Max)) {
      const std::string id = "GT(" + std::to_string(p.n) + "," + std::to_string(p.k) + ")";
      auto ap = gtsg::apery_set(minimal_generating_set(p));
      const auto s0 = generator_at(p, 0).convert_to<std::uint64_t>();
      const auto c1 = (pow2(p.k) - 1).convert_to<std::uint64_t>();
      const auto bound = (4 * generator_at(p, coeff_length(p))).convert_to<std::uint64_t>();
      std::size_t bad_closure = 0, bad_step = 0;
      if (bound <= kLiteralScanMax) {
        for (std::uint64_t t = 1; t <= bound; ++t) {
          if (!ap.contains(t)) continue;
          if (!ap.contains(2 * t + c1)) ++bad_closure;
          if (t % s0 != 0 && !ap.contains(t - c1)) ++bad_step;
        }
      } else {
        // Members of class r are exactly w_r + j*s0, and t -> 2t + c, t -> t - c
        // send a class to a single class, increasing in t: the least member of
        // each class decides the whole scan.
        for (std::uint64_t r = 0; r < s0; ++r) {
          const auto t = ap[r].convert_to<std::uint64_t>();
          const auto first = r == 0 ? s0 : t;
          if (first > bound) continue;
          if (!ap.contains(2 * first + c1)) ++bad_closure;
          if (r != 0 && !ap.contains(t - c1)) ++bad_step;
        }
      }
      c.expect(bad_closure == 0, id + " closure failures " + std::to_string(bad_closure));
      c.expect(bad_step == 0, id + " step-down failures " + std::to_string(bad_step));
    }
  });
  report("AC4", "property suites", c, secs, std::numeric_limits<double>::infinity());
}

void self_consistency() {
  Check c;
  double secs = timed([&] {
    std::mt19937_64 rng(500);
    for (int trial = 0; trial < 200; ++trial) {
      auto raw = brute::random_gens(rng, 500, 1500);
      auto sg = gtsg::make_semigroup(std::vector<Nat>(raw.begin(), raw.end()));
      auto ap = gtsg::apery_set(sg);
      auto direct = brute::gaps(raw);
      c.equal(gtsg::frobenius(ap), direct.frobenius, "trial " + std::to_string(trial) + " F");
      c.equal(gtsg::genus(ap), direct.genus, "trial " + std::to_string(trial) + " genus");
    }
  });
  report("AC5", "oracle self-consistency", c, secs, kSelfConsistencyLimit);
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(3);
  golden_values();
  formula_consistency();
  sweep();
  property_suites();
  self_consistency();
  std::cout << (5 - failed) << "/5 criteria pass\n";
  return failed;
}
