#include "cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "cochar/closed_forms.hpp"
#include "cochar/hilbert.hpp"
#include "cochar/hook.hpp"
#include "invariants.hpp"

namespace cochar::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kMaxN = 4;
constexpr int kMaxDim = 4;
constexpr int kMaxTrunc = 24;

struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct JobSpec {
  std::string command;
  std::string algebra = "E";
  int n = 1;  // UT_n(E); E itself is n = 1
  std::optional<int> vars;
  std::optional<std::pair<int, int>> hook;
  int trunc = 10;
  std::string method = "pipeline";
  std::string format = "text";
  std::string suite = "invariants";
  std::string out_path;
  bool force = false;
};

int parse_algebra(const std::string& tag) {
  if (tag == "E") return 1;
  if (tag.size() >= 4 && tag.rfind("UT", 0) == 0 && tag.back() == 'E') {
    const std::string digits = tag.substr(2, tag.size() - 3);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos &&
        digits.size() <= 3) {
      const int n = std::stoi(digits);
      if (n >= 1) return n;
    }
  }
  throw SpecError("unknown algebra '" + tag + "' (expected E or UT<n>E)");
}

std::pair<int, int> parse_hook(const std::string& text) {
  const auto comma = text.find(',');
  auto num = [&](const std::string& s) {
    if (s.empty() || s.size() > 3 || s.find_first_not_of("0123456789") != std::string::npos)
      throw SpecError("malformed --hook '" + text + "' (expected k,l)");
    return std::stoi(s);
  };
  if (comma == std::string::npos) throw SpecError("malformed --hook '" + text + "' (expected k,l)");
  const int k = num(text.substr(0, comma)), l = num(text.substr(comma + 1));
  if (k + l < 1) throw SpecError("--hook needs k + l >= 1");
  return {k, l};
}

void check_guardrails(const JobSpec& job, std::ostream& err) {
  std::vector<std::string> over;
  if (job.n > kMaxN) over.push_back("n = " + std::to_string(job.n) + " > " + std::to_string(kMaxN));
  if (job.vars && *job.vars > kMaxDim)
    over.push_back("vars = " + std::to_string(*job.vars) + " > " + std::to_string(kMaxDim));
  if (job.hook && std::max(job.hook->first, job.hook->second) > kMaxDim)
    over.push_back("hook dimension > " + std::to_string(kMaxDim));
  if (job.trunc > kMaxTrunc)
    over.push_back("trunc = " + std::to_string(job.trunc) + " > " + std::to_string(kMaxTrunc));
  if (over.empty()) return;
  std::string msg;
  for (const auto& o : over) msg += (msg.empty() ? "" : ", ") + o;
  if (!job.force) throw SpecError("guardrail exceeded (" + msg + "); pass --force to run anyway");
  err << "warning: guardrail exceeded (" << msg << "); running as requested\n";
}

// ---- routes ---------------------------------------------------------------

struct Route {
  std::string name;
  PartitionMap values;
};

std::optional<ClosedForm> closed_form_for(const JobSpec& job) {
  if (job.n == 1) return ClosedForm::E;
  if (job.n == 2) return job.vars && *job.vars <= 2 ? ClosedForm::UT2E_parts2 : ClosedForm::UT2E;
  if (job.n == 3) {
    if (job.vars && *job.vars <= 2) return ClosedForm::UT3E_parts2;
    if (job.hook && *job.hook == std::pair{1, 1}) return ClosedForm::UT3E_hook11;
  }
  return std::nullopt;
}

std::optional<std::string> display_for(const JobSpec& job) {
  if (job.vars && *job.vars == 2) {
    if (job.n == 1) return "M'_E_2vars";
    if (job.n == 2) return "M'_UT2_2vars";
    if (job.n == 3) return "M'_UT3_2vars";
  }
  if (job.hook == std::pair{1, 1}) {
    if (job.n == 1) return "Mhat_E_11";
    if (job.n == 3) return "Mhat_UT3_11";
  }
  if (job.hook == std::pair{2, 3} && job.n == 2) return "Mhat_UT2_23";
  return std::nullopt;
}

std::vector<Partition> universe(const JobSpec& job) {
  std::vector<Partition> out;
  for (int w = 0; w <= job.trunc; ++w)
    for (auto& lam : partitions_of(w, job.vars ? *job.vars : kUnbounded))
      if (!job.hook || in_hook(lam, job.hook->first, job.hook->second)) out.push_back(lam);
  return out;
}

Route pipeline_route(const JobSpec& job) {
  if (job.hook)
    return {"pipeline",
            hook_mult_expansion_UTnE(job.n, job.hook->first, job.hook->second, job.trunc).coeffs()};
  return {"pipeline", mult_expansion_UTnE(job.n, *job.vars, job.trunc).coeffs()};
}

Route decompose_route(const JobSpec& job) {
  if (job.hook) {
    const auto [k, l] = *job.hook;
    return {"decompose", hs_decompose(double_hilbert_UTnE(job.n, k, l, job.trunc), k, l).coeffs()};
  }
  return {"decompose", schur_decompose(hilbert_UTnE(job.n, *job.vars, job.trunc), *job.vars).coeffs()};
}

Route closed_form_route(const JobSpec& job, ClosedForm f) {
  Route r{"closed-form", {}};
  for (const auto& lam : universe(job)) {
    if (!closed_form_covers(f, lam)) continue;
    if (auto m = closed_multiplicity(f, lam)) accumulate(r.values, lam, Rational(*m));
  }
  return r;
}

Route display_route(const JobSpec& job, const std::string& name) {
  Series s = reference_series(name, job.trunc);
  if (job.hook) {
    HookMultSeries h{job.hook->first, job.hook->second, job.trunc, s};
    return {"display", decode_hook(h).coeffs()};
  }
  return {"display", from_mult_series(MultSeries{MultForm::V, *job.vars, job.trunc, s}).coeffs()};
}

std::vector<Route> compute_routes(const JobSpec& job) {
  std::vector<Route> routes;
  const bool all = job.method == "all";
  if (all || job.method == "pipeline") routes.push_back(pipeline_route(job));
  if (all || job.method == "decompose") routes.push_back(decompose_route(job));
  if (all || job.method == "closed-form") {
    auto f = closed_form_for(job);
    auto d = display_for(job);
    if (!all && !f && !d)
      throw SpecError("no closed form is available for " + job.algebra +
                      (job.hook ? " on this hook" : " in this many variables"));
    if (f) routes.push_back(closed_form_route(job, *f));
    if (d) routes.push_back(display_route(job, *d));
  }
  for (auto& r : routes) check_multiplicities(r.values, r.name);
  return routes;
}

struct Row {
  Partition lam;
  Rational value;
  std::vector<std::string> agreeing;
  std::vector<std::pair<std::string, Rational>> dissenting;
};

std::vector<Row> build_rows(const std::vector<Route>& routes) {
  std::set<Partition, WeightLexLess> keys;
  for (const auto& r : routes)
    for (const auto& [lam, c] : r.values) keys.insert(lam);
  std::vector<Row> rows;
  for (const auto& lam : keys) {
    auto value_of = [&](const Route& r) {
      auto it = r.values.find(lam);
      return it == r.values.end() ? Rational(0) : it->second;
    };
    Row row{lam, value_of(routes.front()), {}, {}};
    for (const auto& r : routes) {
      Rational v = value_of(r);
      if (v == row.value) row.agreeing.push_back(r.name);
      else row.dissenting.emplace_back(r.name, v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string joined(const std::vector<std::string>& xs, const char* sep) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : sep) + x;
  return s;
}

// ---- output ---------------------------------------------------------------

ordered_json job_header(const JobSpec& job) {
  ordered_json j;
  j["command"] = job.command;
  j["algebra"] = job.algebra;
  if (job.vars) j["vars"] = *job.vars;
  if (job.hook) j["hook"] = {job.hook->first, job.hook->second};
  j["trunc"] = job.trunc;
  return j;
}

void emit_table(const JobSpec& job, const std::vector<Route>& routes, const std::vector<Row>& rows,
                std::ostream& out) {
  bool agree = true;
  for (const auto& r : rows) agree = agree && r.dissenting.empty();
  std::vector<std::string> names;
  for (const auto& r : routes) names.push_back(r.name);

  if (job.format == "csv") {
    out << "partition,weight,multiplicity,routes\n";
    for (const auto& r : rows)
      out << '"' << r.lam.str() << "\"," << r.lam.weight() << ',' << r.value.get_str() << ','
          << joined(r.agreeing, ";") << '\n';
    return;
  }
  if (job.format == "json") {
    ordered_json j = job_header(job);
    j["method"] = job.method;
    j["routes"] = names;
    j["agree"] = agree;
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json e;
      e["partition"] = r.lam.parts();
      e["weight"] = r.lam.weight();
      e["multiplicity"] = r.value.get_str();
      e["routes"] = r.agreeing;
      if (!r.dissenting.empty()) {
        ordered_json d;
        for (const auto& [name, v] : r.dissenting) d[name] = v.get_str();
        e["dissenting"] = d;
      }
      arr.push_back(e);
    }
    j["rows"] = arr;
    if (job.command == "mult" || job.command == "hookmult") {
      const PartitionMap& first = routes.front().values;
      if (job.hook) {
        HookExpansion e(job.hook->first, job.hook->second, job.trunc);
        for (const auto& [lam, c] : first) e.add(lam, c);
        j["series"] = ordered_json::parse(to_json(encode_hook(e)));
      } else {
        SchurExpansion e(*job.vars, job.trunc);
        for (const auto& [lam, c] : first) e.add(lam, c);
        j["series"] = ordered_json::parse(to_json(to_mult_series(e, MultForm::V).series));
      }
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "# " << job.command << ' ' << job.algebra << ' '
      << (job.hook ? "hook " + std::to_string(job.hook->first) + "," +
                         std::to_string(job.hook->second)
                   : "vars " + std::to_string(*job.vars))
      << " trunc " << job.trunc << " routes " << joined(names, ",") << '\n';
  for (const auto& r : rows) {
    out << r.lam.str() << '\t' << r.lam.weight() << '\t' << r.value.get_str() << '\t'
        << joined(r.agreeing, ";");
    for (const auto& [name, v] : r.dissenting) out << "\t" << name << "=" << v.get_str();
    out << '\n';
  }
}

void emit_series(const JobSpec& job, const Series& s, std::ostream& out) {
  if (job.format == "json") {
    ordered_json j = job_header(job);
    j["variables"] = s.vars().names();
    j["terms"] = ordered_json::parse(to_json(s));
    out << j.dump(2) << '\n';
  } else if (job.format == "csv") {
    out << "monomial,coefficient\n";
    for (const auto& [m, c] : s.terms())
      out << Series::monomial(s.vars(), s.bound(), m).str() << ',' << c.get_str() << '\n';
  } else {
    out << s.str() << '\n';
  }
}

int run_verify(const JobSpec& job, std::ostream& out) {
  if (job.suite != "invariants") throw SpecError("unknown suite '" + job.suite + "'");
  auto results = run_invariant_suite();
  bool ok = true;
  if (job.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) arr.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.pass ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) out << " (" << r.detail << ")";
      out << '\n';
    }
  }
  for (const auto& r : results) ok = ok && r.pass;
  return ok ? 0 : kRouteMismatch;
}

int execute(JobSpec& job, std::ostream& out, std::ostream& err) {
  if (job.command == "verify") return run_verify(job, out);

  job.n = parse_algebra(job.algebra);
  if (job.trunc < 0) throw SpecError("--trunc must be >= 0");
  if (job.vars && job.hook) throw SpecError("--vars and --hook are mutually exclusive");
  if (job.command == "mult" && !job.vars) throw SpecError("mult needs --vars");
  if (job.command == "hookmult" && !job.hook) throw SpecError("hookmult needs --hook");
  if (!job.vars && !job.hook) throw SpecError(job.command + " needs --vars or --hook");
  if (job.vars && *job.vars < 1) throw SpecError("--vars must be >= 1");
  check_guardrails(job, err);

  if (job.command == "hilbert") {
    Series s = job.hook ? double_hilbert_UTnE(job.n, job.hook->first, job.hook->second, job.trunc)
                        : hilbert_UTnE(job.n, *job.vars, job.trunc);
    emit_series(job, s, out);
    return 0;
  }

  auto routes = compute_routes(job);
  auto rows = build_rows(routes);
  emit_table(job, routes, rows, out);
  bool agree = true;
  for (const auto& r : rows)
    if (!r.dissenting.empty()) {
      if (agree) err << "route disagreement:\n";
      agree = false;
      err << "  " << r.lam.str() << ": " << joined(r.agreeing, ",") << " = " << r.value.get_str();
      for (const auto& [name, v] : r.dissenting) err << "; " << name << " = " << v.get_str();
      err << '\n';
    }
  return agree ? 0 : kRouteMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cocharacter multiplicities of E and UT_n(E)", "cochar"};
  app.require_subcommand(1);
  JobSpec job;
  std::string hook_text;
  std::optional<int> vars;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", job.algebra, "E or UT<n>E");
    sub->add_option("--vars", vars, "number of variables d");
    sub->add_option("--hook", hook_text, "hook dimensions k,l");
    sub->add_option("--trunc", job.trunc, "truncation degree N");
    sub->add_option("--format", job.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", job.out_path, "write the report to a file");
    sub->add_flag("--force", job.force, "run past the size guardrails");
  };
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series in T_d or (T_k, Y_l)");
  add_common(hilbert);
  for (const char* name : {"mult", "hookmult", "table"}) {
    auto* sub = app.add_subcommand(name, std::string("multiplicity table (") + name + ")");
    add_common(sub);
    sub->add_option("--method", job.method, "route(s) to compute")
        ->check(CLI::IsMember({"pipeline", "decompose", "closed-form", "all"}));
  }
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", job.suite, "suite name")->check(CLI::IsMember({"invariants"}));
  verify->add_option("--format", job.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", job.out_path, "write the report to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidSpec;
  }
  job.command = app.get_subcommands().front()->get_name();
  job.vars = vars;

  std::ostringstream report;
  int code = 0;
  try {
    if (!hook_text.empty()) job.hook = parse_hook(hook_text);
    code = execute(job, report, err);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidSpec;
  } catch (const DecompositionError& e) {
    err << "error: decomposition residual at degree " << e.degree() << ": " << e.what() << '\n';
    return kResidualFailure;
  } catch (const IntegralityError& e) {
    err << "error: " << e.what() << '\n';
    return kIntegralityFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidSpec;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidSpec;
  }

  if (job.out_path.empty()) {
    out << report.str();
  } else {
    std::ofstream f(job.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << job.out_path << '\n';
      return kInvalidSpec;
    }
    f << report.str();
  }
  return code;
}

}  // namespace cochar::cli
