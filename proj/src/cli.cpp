#include "gtsg/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <thread>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "gtsg/semigroup.hpp"

namespace gtsg::cli {

using json = nlohmann::json;
using thabit::GTParams;

Nat s0_cap_from_env() {
  if (const char* env = std::getenv("GTSG_S0_CAP")) {
    if (auto v = parse_nat(env)) return *v;
  }
  return Nat(kDefaultS0Cap);
}

std::size_t VerifyReport::matched() const {
  return static_cast<std::size_t>(std::count_if(
      points.begin(), points.end(), [](const PointResult& r) { return r.matched(); }));
}

std::vector<GTParams> verify_grid(std::uint32_t n_max, std::uint32_t k_max,
                                  const Nat& s0_max) {
  std::vector<GTParams> grid;
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    for (std::uint32_t k = 1; k <= k_max; ++k) {
      GTParams p(n, k);
      // s_0 = 2^(n+k) + 2^n - 2^k + 1 is nondecreasing in k.
      if (thabit::generator_at(p, 0) > s0_max) break;
      grid.push_back(p);
    }
  }
  return grid;
}

namespace {

std::string join(const std::vector<Nat>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].str();
  }
  return out;
}

std::string braces(const std::vector<Nat>& v) { return "{" + join(v, ", ") + "}"; }

std::vector<Nat> to_vector(std::span<const Nat> s) { return {s.begin(), s.end()}; }

json strings(const std::vector<Nat>& v) {
  json arr = json::array();
  for (const Nat& x : v) arr.push_back(x.str());
  return arr;
}

std::string describe_set_difference(const std::vector<Nat>& closed,
                                    const std::vector<Nat>& oracle) {
  std::vector<Nat> only_closed, only_oracle;
  std::set_difference(closed.begin(), closed.end(), oracle.begin(), oracle.end(),
                      std::back_inserter(only_closed));
  std::set_difference(oracle.begin(), oracle.end(), closed.begin(), closed.end(),
                      std::back_inserter(only_oracle));
  auto head = [](std::vector<Nat>& v) {
    if (v.size() > 5) v.resize(5);
    return braces(v);
  };
  return "closed-only " + head(only_closed) + " oracle-only " + head(only_oracle);
}

}  // namespace

PointResult verify_point(const GTParams& p) {
  PointResult r{p, thabit::generator_at(p, 0), thabit::case_of(p), {}};
  auto add = [&](std::string field, std::string closed, std::string oracle) {
    r.mismatches.push_back({std::move(field), std::move(closed), std::move(oracle)});
  };

  GeneratorSet gens = thabit::minimal_generating_set(p);
  AperyTable table = apery_set(gens, r.s0);

  std::vector<Nat> closed_ap;
  try {
    closed_ap = thabit::apery_set_closed(p);
  } catch (const thabit::InternalInconsistency& e) {
    add("apery", e.what(), std::to_string(table.size()) + " elements");
  }
  std::vector<Nat> oracle_ap = table.sorted();
  if (!closed_ap.empty() && closed_ap != oracle_ap)
    add("apery", "size " + std::to_string(closed_ap.size()),
        describe_set_difference(closed_ap, oracle_ap));

  Nat f_closed = thabit::frobenius_closed(p);
  Nat f_oracle = frobenius(table);
  if (f_closed != f_oracle) add("frobenius", f_closed.str(), f_oracle.str());

  Nat g_oracle = genus(table);
  try {
    Nat g_closed = thabit::genus_closed(p);
    if (g_closed != g_oracle) add("genus", g_closed.str(), g_oracle.str());
  } catch (const thabit::InternalInconsistency& e) {
    add("genus", e.what(), g_oracle.str());
  }

  GeneratorSet minimal = minimal_generators(gens);
  if (!(minimal == gens))
    add("minimal_generators", braces(to_vector(gens.gens())),
        braces(to_vector(minimal.gens())));
  return r;
}

VerifyReport run_verify(std::uint32_t n_max, std::uint32_t k_max,
                        const Nat& s0_max, unsigned jobs) {
  auto grid = verify_grid(n_max, k_max, s0_max);
  std::vector<std::optional<PointResult>> slots(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < grid.size();)
      slots[i] = verify_point(grid[i]);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(grid.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  VerifyReport report;
  for (auto& s : slots) report.points.push_back(std::move(*s));
  return report;
}

void print_report(const VerifyReport& report, OutputFormat format,
                  std::ostream& out) {
  switch (format) {
    case OutputFormat::text:
      for (const auto& pt : report.points) {
        out << "GT(" << pt.params.n << "," << pt.params.k << ") s0=" << pt.s0
            << " case=" << thabit::to_string(pt.tag);
        if (pt.matched()) {
          out << " match\n";
          continue;
        }
        out << " MISMATCH\n";
        for (const auto& m : pt.mismatches)
          out << "  " << m.field << ": closed=" << m.closed
              << " oracle=" << m.oracle << "\n";
      }
      out << "points=" << report.points.size() << " matched=" << report.matched()
          << " mismatched=" << report.mismatched() << "\n";
      break;
    case OutputFormat::json: {
      json points = json::array();
      for (const auto& pt : report.points) {
        json mm = json::array();
        for (const auto& m : pt.mismatches)
          mm.push_back({{"field", m.field}, {"closed", m.closed}, {"oracle", m.oracle}});
        points.push_back({{"n", pt.params.n},
                          {"k", pt.params.k},
                          {"s0", pt.s0.str()},
                          {"case", thabit::to_string(pt.tag)},
                          {"status", pt.matched() ? "match" : "mismatch"},
                          {"mismatches", mm}});
      }
      json doc = {{"points", points},
                  {"total", report.points.size()},
                  {"matched", report.matched()},
                  {"mismatched", report.mismatched()}};
      out << doc.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "n,k,s0,case,status,field,closed,oracle\n";
      for (const auto& pt : report.points) {
        std::string prefix = std::to_string(pt.params.n) + "," +
                             std::to_string(pt.params.k) + "," + pt.s0.str() + "," +
                             std::string(thabit::to_string(pt.tag)) + ",";
        if (pt.matched()) {
          out << prefix << "match,,,\n";
          continue;
        }
        for (const auto& m : pt.mismatches)
          out << prefix << "mismatch," << m.field << ",\"" << m.closed << "\",\""
              << m.oracle << "\"\n";
      }
      break;
  }
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, OutputFormat> kFormats{
    {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};

GTParams checked_params(std::uint32_t n, std::uint32_t k) {
  if (k == 0) throw UsageError("--k must be at least 1");
  return GTParams(n, k);
}

void require_cap(const Nat& s0, bool force) {
  Nat cap = s0_cap_from_env();
  if (!force && s0 > cap)
    throw UsageError("TooLarge: s0 = " + s0.str() + " exceeds the enumeration cap " +
                     cap.str() + " (set GTSG_S0_CAP or pass --force)");
}

std::vector<Nat> parse_gens(const std::string& text) {
  std::vector<Nat> gens;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    auto v = parse_nat(item);
    if (!v) throw UsageError("invalid generator '" + item + "'");
    gens.push_back(*v);
  }
  return gens;
}

void cmd_info(const GTParams& p, OutputFormat format, bool force, std::ostream& out) {
  using namespace thabit;
  auto gens = to_vector(minimal_generating_set(p).gens());
  Nat s0 = gens.front();
  Nat max_ap = max_apery(p);
  Nat f = max_ap - s0;
  std::optional<Nat> g;
  if (force || s0 <= s0_cap_from_env()) g = genus_closed(p);

  switch (format) {
    case OutputFormat::text:
      out << "GT(" << p.n << "," << p.k << ")\n"
          << "generators = " << braces(gens) << "\n"
          << "delta = " << delta(p) << "\n"
          << "e = " << embedding_dimension(p) << "\n"
          << "case = " << to_string(case_of(p)) << "\n"
          << "max Ap = " << max_ap << "\n"
          << "F = " << f << "\n";
      if (g)
        out << "g = " << *g << "\n";
      else
        out << "g = skipped (s0 exceeds cap; use --force)\n";
      break;
    case OutputFormat::json: {
      json doc = {{"n", p.n},
                  {"k", p.k},
                  {"generators", strings(gens)},
                  {"s0", s0.str()},
                  {"delta", delta(p)},
                  {"e", embedding_dimension(p)},
                  {"case", to_string(case_of(p))},
                  {"max_apery", max_ap.str()},
                  {"frobenius", f.str()},
                  {"genus", g ? json(g->str()) : json(nullptr)}};
      out << doc.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "field,value\n"
          << "n," << p.n << "\n"
          << "k," << p.k << "\n"
          << "generators," << join(gens, " ") << "\n"
          << "delta," << delta(p) << "\n"
          << "e," << embedding_dimension(p) << "\n"
          << "case," << to_string(case_of(p)) << "\n"
          << "max_apery," << max_ap << "\n"
          << "frobenius," << f << "\n"
          << "genus," << (g ? g->str() : std::string()) << "\n";
      break;
  }
}

void cmd_apery(const GTParams& p, OutputFormat format, bool with_coeffs, bool force,
               std::ostream& out) {
  const Nat s0 = thabit::generator_at(p, 0);
  require_cap(s0, force);
  std::vector<std::pair<Nat, thabit::CoeffSeq>> rows;
  thabit::for_each_apery_coeff(p, [&](const thabit::CoeffSeq& c) {
    rows.emplace_back(thabit::coeff_value(p, c), c);
  });
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  switch (format) {
    case OutputFormat::text:
      for (const auto& [v, c] : rows) {
        out << v;
        if (with_coeffs) out << "\t" << c.digits();
        out << "\n";
      }
      break;
    case OutputFormat::json: {
      json values = json::array(), coeffs = json::array();
      for (const auto& [v, c] : rows) {
        values.push_back(v.str());
        coeffs.push_back(c.digits());
      }
      json doc = {{"n", p.n}, {"k", p.k}, {"s0", s0.str()}, {"apery", values}};
      if (with_coeffs) doc["coeffs"] = coeffs;
      out << doc.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "residue,value,coeffs\n";
      for (const auto& [v, c] : rows)
        out << Nat(v % s0) << "," << v << "," << c.digits() << "\n";
      break;
  }
}

void cmd_frobenius(const GTParams& p, OutputFormat format, std::ostream& out) {
  Nat max_ap = thabit::max_apery(p);
  Nat f = max_ap - thabit::generator_at(p, 0);
  switch (format) {
    case OutputFormat::text:
      out << "F = " << f << "\n";
      break;
    case OutputFormat::json:
      out << json{{"n", p.n}, {"k", p.k}, {"max_apery", max_ap.str()},
                  {"frobenius", f.str()}}
                 .dump()
          << "\n";
      break;
    case OutputFormat::csv:
      out << "n,k,max_apery,frobenius\n"
          << p.n << "," << p.k << "," << max_ap << "," << f << "\n";
      break;
  }
}

struct OracleRequest {
  std::string gens;
  std::vector<std::string> what;
  std::string modulus;
};

void cmd_oracle(const OracleRequest& req, OutputFormat format, std::ostream& out) {
  if (req.what.empty()) throw UsageError("oracle: expected apery|frobenius|genus|minimal|membership X");
  GeneratorSet s = make_semigroup(parse_gens(req.gens));
  const std::string& what = req.what.front();

  std::string key;
  json value;
  std::string text;
  if (what == "apery") {
    Nat x = s.smallest();
    if (!req.modulus.empty()) {
      auto m = parse_nat(req.modulus);
      if (!m) throw UsageError("invalid --modulus '" + req.modulus + "'");
      x = *m;
    }
    auto ap = apery_set(s, x).sorted();
    key = "apery";
    value = strings(ap);
    text = braces(ap);
    if (format == OutputFormat::csv) {
      out << "residue,value\n";
      for (const Nat& v : ap) out << Nat(v % x) << "," << v << "\n";
      return;
    }
  } else if (what == "frobenius") {
    key = "frobenius";
    text = frobenius(s).str();
  } else if (what == "genus") {
    key = "genus";
    text = genus(s).str();
  } else if (what == "minimal") {
    auto mg = to_vector(minimal_generators(s).gens());
    key = "minimal_generators";
    value = strings(mg);
    text = braces(mg);
  } else if (what == "membership") {
    if (req.what.size() < 2) throw UsageError("membership needs a value");
    auto x = parse_nat(req.what[1]);
    if (!x) throw UsageError("invalid value '" + req.what[1] + "'");
    key = "member";
    value = is_member(s, *x);
    text = is_member(s, *x) ? "true" : "false";
  } else {
    throw UsageError("oracle: unknown query '" + what + "'");
  }
  if (value.is_null()) value = text;

  switch (format) {
    case OutputFormat::text:
      out << text << "\n";
      break;
    case OutputFormat::json:
      out << json{{"generators", strings(to_vector(s.gens()))}, {key, value}}.dump()
          << "\n";
      break;
    case OutputFormat::csv:
      out << key << "\n";
      if (value.is_array()) {
        for (const auto& v : value) out << v.get<std::string>() << "\n";
      } else {
        out << text << "\n";
      }
      break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"GT(n,k) semigroups: closed forms checked against a generic oracle"};
  app.name("gtsg");
  app.require_subcommand(1);

  OutputFormat format = OutputFormat::text;
  std::uint32_t n = 0, k = 0;
  bool force = false, with_coeffs = false;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or csv")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };
  auto add_nk = [&](CLI::App* sub) {
    sub->add_option("--n", n, "n >= 0")->required();
    sub->add_option("--k", k, "k >= 1")->required();
  };

  auto* info = app.add_subcommand("info", "generators, delta, e, case, max Apery, F, genus");
  add_nk(info);
  add_format(info);
  info->add_flag("--force", force, "compute the genus even above the enumeration cap");

  auto* apery = app.add_subcommand("apery", "closed-form Apery set with respect to s0");
  add_nk(apery);
  add_format(apery);
  apery->add_flag("--force", force, "ignore the enumeration cap");
  apery->add_flag("--with-coeffs", with_coeffs, "print coefficient sequences");

  auto* frob = app.add_subcommand("frobenius", "closed-form Frobenius number");
  add_nk(frob);
  add_format(frob);

  OracleRequest oracle_req;
  auto* oracle = app.add_subcommand("oracle", "generic semigroup computations");
  oracle->add_option("--gens", oracle_req.gens, "comma-separated generators")->required();
  oracle->add_option("--modulus", oracle_req.modulus, "Apery modulus (default: smallest generator)");
  oracle->add_option("what", oracle_req.what,
                     "apery | frobenius | genus | minimal | membership X");
  add_format(oracle);

  std::uint32_t n_max = 32, k_max = 32;
  std::string s0_max = "200000";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* verify = app.add_subcommand("verify", "closed forms against the oracle over a grid");
  verify->add_option("--n-max", n_max, "largest n")->capture_default_str();
  verify->add_option("--k-max", k_max, "largest k")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--s0-max", s0_max, "skip points with larger s0")->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  add_format(verify);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*info) {
      cmd_info(checked_params(n, k), format, force, out);
    } else if (*apery) {
      cmd_apery(checked_params(n, k), format, with_coeffs, force, out);
    } else if (*frob) {
      cmd_frobenius(checked_params(n, k), format, out);
    } else if (*oracle) {
      cmd_oracle(oracle_req, format, out);
    } else if (*verify) {
      auto bound = parse_nat(s0_max);
      if (!bound || *bound < 1) throw UsageError("--s0-max must be a positive integer");
      auto report = run_verify(n_max, k_max, *bound, jobs);
      print_report(report, format, out);
      return report.all_match() ? kOk : kMismatch;
    }
  } catch (const UsageError& e) {
    err << "gtsg: " << e.what() << "\n";
    return kUsage;
  } catch (const SemigroupError& e) {
    err << "gtsg: " << e.what() << "\n";
    return kUsage;
  } catch (const thabit::DomainError& e) {
    err << "gtsg: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "gtsg: internal inconsistency: " << e.what() << "\n";
    return kMismatch;
  }
  return kOk;
}

}  // namespace gtsg::cli
