#include "hrds/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "hrds/bounds.hpp"
#include "hrds/constructions.hpp"
#include "hrds/errors.hpp"
#include "hrds/galois_field.hpp"
#include "hrds/scheme.hpp"
#include "hrds/search.hpp"
#include "hrds/set_file.hpp"

namespace hrds {

using json = nlohmann::ordered_json;

std::pair<unsigned, unsigned> prime_power(unsigned q) {
  if (q < 2) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  for (unsigned x = q; x > 1; x /= p, ++e)
    if (x % p != 0) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  return {p, e};
}

namespace {

json num(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

json num(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1) return num(BigInt(boost::multiprecision::numerator(v)));
  return v.str();
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Command echo, parameters, result and provenance. The text form is rendered from the
// same json values as the machine-readable form.
struct Report {
  std::string command;
  json params = json::object();
  json result = json::object();
  std::vector<std::string> provenance;

  void print(std::ostream& os, bool as_json) const {
    if (as_json) {
      json j{{"command", command}, {"parameters", params}, {"result", result}, {"provenance", provenance}};
      os << j.dump(2) << "\n";
      return;
    }
    os << "command: " << command << "\n";
    os << "parameters:\n";
    for (const auto& [key, v] : params.items()) os << "  " << key << " = " << scalar_text(v) << "\n";
    os << "result:\n";
    for (const auto& [key, v] : result.items()) print_value(os, key, v);
    os << "provenance:\n";
    for (const auto& p : provenance) os << "  - " << p << "\n";
  }

private:
  static void print_value(std::ostream& os, const std::string& key, const json& v) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << "  " << key << ":\n";
      print_table(os, v);
    } else if (v.is_array() && !v.empty() && v.front().is_array()) {
      os << "  " << key << ":\n";
      std::size_t width = 0;
      for (const auto& row : v)
        for (const auto& x : row) width = std::max(width, scalar_text(x).size());
      for (const auto& row : v) {
        os << "   ";
        for (const auto& x : row) os << " " << std::setw(static_cast<int>(width)) << scalar_text(x);
        os << "\n";
      }
    } else if (v.is_array()) {
      os << "  " << key << " =";
      for (const auto& x : v) os << " " << scalar_text(x);
      os << "\n";
    } else if (v.is_object()) {
      os << "  " << key << ":\n";
      for (const auto& [k2, x] : v.items()) os << "    " << k2 << " = " << scalar_text(x) << "\n";
    } else {
      os << "  " << key << " = " << scalar_text(v) << "\n";
    }
  }

  static void print_table(std::ostream& os, const json& rows) {
    std::vector<std::string> cols;
    for (const auto& [k, x] : rows.front().items()) cols.push_back(k);
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      width[c] = cols[c].size();
      for (const auto& r : rows) width[c] = std::max(width[c], scalar_text(r.value(cols[c], json(""))).size());
    }
    auto line = [&](auto cell) {
      os << "   ";
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const std::string s = cell(c);
        os << " " << s;
        if (c + 1 < cols.size()) os << std::string(width[c] - s.size() + 1, ' ');
      }
      os << "\n";
    };
    line([&](std::size_t c) { return cols[c]; });
    for (const auto& r : rows) line([&](std::size_t c) { return scalar_text(r.value(cols[c], json(""))); });
  }
};

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "hrds";
  for (const auto& a : args) s += " " + a;
  return s;
}

FieldPtr field_for(unsigned q) {
  const auto [p, e] = prime_power(q);
  return FieldSpec::create(p, e);
}

json violation_json(const RankViolation& v) {
  json j{{"first", v.first}};
  if (v.second) j["second"] = *v.second;
  j["observed_rank"] = v.observed_rank;
  return j;
}

void emit_set(const RankSet& u, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    write_set(out, u);
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  write_set(f, u);
}

struct Options {
  bool json = false;
  unsigned threads = 1;

  unsigned q = 0;
  std::size_t n = 0, k = 0, r = 0;
  bool brute = false;

  unsigned delta = 1;
  long long mu = -1;
  std::vector<unsigned> Delta;
  bool no_translate = false;
  std::string output;

  std::string file;
  bool maximal = false;

  double budget_seconds = 600;
  std::size_t max_vertices = 4096;
  std::string witness_dir;
  bool verify_witnesses = false;
  bool full = false;
};

int run_eigen(const Options& o, const std::string& cmd, std::ostream& out) {
  prime_power(o.q);
  if (o.n == 0) throw UsageError("n must be positive");
  EigenTable t;
  if (o.brute) {
    t = brute_eigen_table(HermitianSpace(field_for(o.q), o.n), o.threads);
  } else {
    t = eigen_table(o.q, o.n);
  }
  Report rep{cmd, {{"q", o.q}, {"n", o.n}, {"method", o.brute ? "brute-force character sums" : "recurrence"}}, {}, {}};
  json rows = json::array();
  for (const auto& row : t.P) {
    json r = json::array();
    for (const auto& x : row) r.push_back(num(x));
    rows.push_back(r);
  }
  rep.result["P"] = rows;
  rep.provenance = {"P_i(j): eigenvalue of relation i on eigenspace j in the hermitian forms scheme; Q = P",
                    o.brute ? "entries are sums of the additive character of Tr(tr(XY)) over the rank-i class"
                            : "row 1 closed form ((-q)^(2n-j) - 1)/(q + 1); rows 2..n by the three-term recurrence"};
  rep.print(out, o.json);
  return kExitOk;
}

int run_bound(const Options& o, const std::string& cmd, std::ostream& out) {
  prime_power(o.q);
  const auto r = bound_catalog(o.q, o.n, o.k);
  Report rep{cmd, {{"q", o.q}, {"n", o.n}, {"k", o.k}}, {}, {}};
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back(json{{"name", e.name},
                           {"value", num(e.value)},
                           {"ceiling", num(e.ceiling)},
                           {"scope", to_string(e.scope)},
                           {"condition", e.condition}});
  rep.result["bounds"] = entries;
  if (auto c = r.certified_ceiling()) rep.result["certified_ceiling"] = num(*c);
  for (const auto& e : r.entries) rep.provenance.push_back(e.name + ": " + e.source);
  rep.provenance.push_back("certified_ceiling: minimum over general-scope entries only");
  rep.print(out, o.json);
  return kExitOk;
}

int run_verify(const Options& o, const std::string& cmd, std::ostream& out) {
  RankSet u = parse_set_file(o.file);
  if (o.k != 0) u = RankSet(u.field(), u.n(), o.k, u.members());
  Report rep{cmd, {{"file", o.file}, {"n", u.n()}, {"k", u.k()}, {"q", u.field()->q()}}, {}, {}};
  rep.result["size"] = u.size();
  const auto check = is_constant_rank_distance(u);
  rep.result["constant_rank_distance"] = check.ok;
  rep.provenance.push_back("constant rank-distance: every nonzero member and every difference has rank k");
  int code = kExitOk;
  if (!check.ok) {
    rep.result["violation"] = violation_json(*check.violation);
    code = kExitViolated;
  } else if (o.maximal) {
    const auto cand = extension_candidates(u);
    rep.result["maximal"] = cand.empty();
    rep.result["extension_candidates"] = cand.size();
    rep.provenance.push_back("maximal: no matrix of H_n(F_q^2) outside the set extends it (exhaustive)");
    if (!cand.empty()) code = kExitViolated;
  }
  rep.print(out, o.json);
  return code;
}

int run_distribution(const Options& o, const std::string& cmd, std::ostream& out) {
  const RankSet u = parse_set_file(o.file);
  const auto& f = *u.field();
  const auto dist = inner_distribution(f, u.members());
  const auto d = delsarte_check(dist, eigen_table(f.q(), u.n()));
  Report rep{cmd, {{"file", o.file}, {"n", u.n()}, {"q", f.q()}}, {}, {}};
  rep.result["size"] = u.size();
  json a = json::array(), aq = json::array();
  for (const auto& x : dist.a) a.push_back(num(x));
  for (const auto& x : d.aq) aq.push_back(num(x));
  rep.result["a"] = a;
  rep.result["aQ"] = aq;
  rep.result["feasible"] = d.feasible;
  rep.provenance = {"a_i: ordered pairs at rank distance i divided by |U|",
                    "Delsarte inequalities: (aQ)_i >= 0 for every subset, with Q = P of the hermitian forms scheme"};
  rep.print(out, o.json);
  return d.feasible ? kExitOk : kExitViolated;
}

int run_spectrum(const Options& o, const std::string& cmd, std::ostream& out, std::ostream& err) {
  const auto field = field_for(o.q);
  SpectrumBudget b;
  b.max_vertices = o.max_vertices;
  b.max_time = std::chrono::milliseconds(static_cast<long long>(o.budget_seconds * 1000));
  b.threads = o.threads;
  b.fix_first_vertex = !o.full;
  const auto res = maximal_set_spectrum(field, o.n, o.k, b);

  Report rep{cmd, {{"q", o.q}, {"n", o.n}, {"k", o.k}}, {}, {}};
  json sizes = json::array();
  for (auto s : res.sizes()) sizes.push_back(s);
  rep.result["sizes"] = sizes;
  rep.result["complete"] = res.complete;
  rep.result["maximal_cliques"] = res.cliques;
  bool witnesses_ok = true;
  if (o.verify_witnesses) {
    json checks = json::array();
    for (const auto& [size, w] : res.witnesses) {
      const RankSet u(field, o.n, o.k, w);
      const bool crd = is_constant_rank_distance(u).ok;
      const bool max = crd && is_maximal(u);
      witnesses_ok = witnesses_ok && crd && max;
      checks.push_back(json{{"size", size}, {"constant_rank_distance", crd}, {"maximal", max}});
    }
    rep.result["witnesses"] = checks;
  }
  if (!o.witness_dir.empty()) {
    std::filesystem::create_directories(o.witness_dir);
    for (const auto& [size, w] : res.witnesses)
      emit_set(RankSet(field, o.n, o.k, w),
               (std::filesystem::path(o.witness_dir) / ("size_" + std::to_string(size) + ".hrds")).string(), out);
  }
  rep.provenance = {"every maximal set contains 0, so each is 0 together with a maximal clique of the rank-k "
                    "graph on the rank-k neighborhood of 0",
                    o.full ? "cliques enumerated over the whole neighborhood"
                           : "congruence X -> P X P* fixes 0 and is transitive on rank-k matrices, so cliques are "
                             "enumerated through the first rank-k matrix"};
  rep.print(out, o.json);
  if (!res.complete) {
    err << "spectrum incomplete: time budget of " << o.budget_seconds << " s ran out\n";
    return kExitBudget;
  }
  return witnesses_ok ? kExitOk : kExitViolated;
}

int run_construct(const std::string& which, const Options& o, std::ostream& out) {
  const auto field = field_for(o.q);
  if (which == "udelta") {
    auto params = UdeltaParams::make(field, o.delta);
    if (o.mu >= 0) params.mu = field->ext().from_index(static_cast<std::uint64_t>(o.mu));
    if (!o.Delta.empty()) {
      params.Delta.clear();
      for (auto d : o.Delta) params.Delta.push_back(field->ext().from_index(d));
    }
    emit_set(construct_udelta(params), o.output, out);
  } else if (which == "trace-gram") {
    emit_set(extend_to_hermitian(trace_gram_spread_set(field, o.n)), o.output, out);
  } else if (which == "lift-points") {
    emit_set(lift_partial_spread(pg_point_spread(field, o.n), !o.no_translate), o.output, out);
  } else {
    emit_set(lift_partial_spread(desarguesian_spread(field, o.n, o.r), !o.no_translate), o.output, out);
  }
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Constant rank-distance sets of hermitian matrices over F_{q^2}", "hrds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable report");
  app.add_option("--threads", o.threads, "Worker threads for brute-force and search")->check(CLI::Range(1u, 256u));

  auto* eigen = app.add_subcommand("eigen", "Eigenvalue table P of the hermitian forms scheme");
  eigen->add_option("--q", o.q, "Order of F_q")->required();
  eigen->add_option("--n", o.n, "Matrix size")->required();
  eigen->add_flag("--brute", o.brute, "Compute by brute-force character sums");

  auto* bound = app.add_subcommand("bound", "Upper bounds on constant rank-distance k sets");
  bound->add_option("--q", o.q)->required();
  bound->add_option("--n", o.n)->required();
  bound->add_option("--k", o.k)->required();

  auto* construct = app.add_subcommand("construct", "Write an explicit set in set-file format");
  construct->require_subcommand(1);
  construct->fallthrough();
  construct->add_option("--output,-o", o.output, "Output path (default: standard output)");
  auto* udelta = construct->add_subcommand("udelta", "U_delta in H_2(F_{q^2}), size q^2 + delta - 1");
  udelta->add_option("--q", o.q)->required();
  udelta->add_option("--delta", o.delta)->required();
  udelta->add_option("--mu", o.mu, "mu as an F_{q^2} wire index (default: smallest admissible)");
  udelta->add_option("--Delta", o.Delta, "Delta as F_{q^2} wire indices (default: the delta smallest of F_q)")
      ->delimiter(',');
  auto* tg = construct->add_subcommand("trace-gram", "Hermitian extension of the trace-Gram spread set");
  tg->add_option("--q", o.q)->required();
  tg->add_option("--n", o.n)->required();
  auto* lp = construct->add_subcommand("lift-points", "Lift of all points of PG(n-1, q^2), k = 2");
  lp->add_option("--q", o.q)->required();
  lp->add_option("--n", o.n)->required();
  lp->add_flag("--no-translate", o.no_translate, "Keep X X* without shifting the first member to 0");
  auto* ld = construct->add_subcommand("lift-desarguesian", "Lift of a Desarguesian (r-1)-spread, k = 2r");
  ld->add_option("--q", o.q)->required();
  ld->add_option("--n", o.n)->required();
  ld->add_option("--r", o.r)->required();
  ld->add_flag("--no-translate", o.no_translate, "Keep X X* without shifting the first member to 0");

  auto* verify = app.add_subcommand("verify", "Check the constant rank-distance property of a set file");
  verify->add_option("--file", o.file)->required();
  verify->add_option("--k", o.k, "Rank distance to check (default: the file's k)");
  verify->add_flag("--maximal", o.maximal, "Also check maximality by exhaustive extension");

  auto* distribution = app.add_subcommand("distribution", "Inner distribution and Delsarte inequalities");
  distribution->add_option("--file", o.file)->required();

  auto* search = app.add_subcommand("search", "Exhaustive searches");
  search->require_subcommand(1);
  search->fallthrough();
  auto* spectrum = search->add_subcommand("spectrum", "Sizes of all maximal constant rank-distance k sets");
  spectrum->add_option("--q", o.q)->required();
  spectrum->add_option("--n", o.n)->required();
  spectrum->add_option("--k", o.k)->required();
  spectrum->add_option("--budget", o.budget_seconds, "Time budget in seconds")->check(CLI::PositiveNumber);
  spectrum->add_option("--max-vertices", o.max_vertices, "Vertex budget of the clique search");
  spectrum->add_option("--witness-dir", o.witness_dir, "Write one witness set file per size here");
  spectrum->add_flag("--verify-witnesses", o.verify_witnesses, "Re-check every witness");
  spectrum->add_flag("--full", o.full, "Search the whole neighborhood of 0 (cross-check)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }

  const std::string cmd = join_args(args);
  try {
    if (*eigen) return run_eigen(o, cmd, out);
    if (*bound) return run_bound(o, cmd, out);
    if (*verify) return run_verify(o, cmd, out);
    if (*distribution) return run_distribution(o, cmd, out);
    if (*spectrum) return run_spectrum(o, cmd, out, err);
    for (auto* sub : {udelta, tg, lp, ld})
      if (*sub) return run_construct(sub->get_name(), o, out);
    err << "no command given\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ArithmeticError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hrds
