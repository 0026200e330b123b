#include "zinbiel/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "zinbiel/generators.hpp"
#include "zinbiel/io.hpp"
#include "zinbiel/properties.hpp"

namespace zinbiel::cli {

namespace {

struct Outcome {
  Json report;
  int code = kOk;
};

struct Options {
  std::string input;
  std::string out_path;
  std::string format = "json";
  // certify
  std::string cert_out;
  std::string flag_in;
  // frattini
  std::string mode = "both";
  // products
  int n = 2;
  // enumerate
  unsigned p = 2;
  int dim = 1;
  bool count_only = false;
  std::string shard = "0/1";
  unsigned jobs = 1;
  bool allow_large = false;
  // free
  int generators = 1;
  int degree = 1;
  std::string field = "Q";
};

Json base_report(const std::string& command, const Options& o) {
  Json r;
  r["command"] = command;
  r["input"] = o.input;
  return r;
}

template <class S>
Json violations_json(const std::vector<Violation<S>>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(violation_to_json(v));
  return arr;
}

template <class S>
Json subspaces_json(const std::vector<Subspace<S>>& list) {
  Json arr = Json::array();
  for (const auto& u : list) arr.push_back(subspace_to_json(u));
  return arr;
}

// ---------------------------------------------------------------- commands

template <class S>
Outcome cmd_check(const Algebra<S>& a, const Options& o) {
  Outcome res{base_report("check", o)};
  const auto vs = check_zinbiel(a);
  res.report["dim"] = a.dim();
  res.report["zinbiel"] = vs.empty();
  res.report["violation_count"] = vs.size();
  res.report["violations"] = violations_json(vs);
  res.code = vs.empty() ? kOk : kPropertyFailed;
  return res;
}

template <class S>
Outcome cmd_series(const Algebra<S>& a, const Options& o) {
  Outcome res{base_report("series", o)};
  const bool zinbiel = is_zinbiel(a);
  const SeriesReport s = series_report(a);
  res.report["zinbiel"] = zinbiel;
  res.report["series"] = series_to_json(s);
  if (zinbiel) {
    const std::string defect = series_defect(a);
    res.report["series_checks"] = defect.empty() ? "pass" : defect;
    if (!s.nilpotency_index || !defect.empty()) res.code = kPropertyFailed;
  }
  return res;
}

template <class S>
Outcome cmd_certify(const Algebra<S>& a, const Options& o) {
  Outcome res{base_report("certify", o)};
  CentralFlag<S> flag;
  if (!o.flag_in.empty()) {
    flag = flag_from_json(a, read_json_file(o.flag_in));
    res.report["flag_source"] = "file";
  } else {
    const auto vs = check_zinbiel(a);
    if (!vs.empty())
      throw NotApplicable("input violates the Zinbiel identity at " + std::to_string(vs.size()) +
                          " basis triple(s); no certificate to build");
    flag = central_flag(a);
    res.report["flag_source"] = "produced";
  }
  const auto defect = flag_defect(a, flag);
  res.report["flag_length"] = flag.chain.empty() ? 0 : flag.chain.size() - 1;
  res.report["flag_verified"] = !defect.has_value();
  if (defect) res.report["flag_defect"] = *defect;
  const Json cert = flag_to_json(a, flag);
  res.report["certificate"] = cert;
  if (!o.cert_out.empty()) {
    std::ofstream f(o.cert_out);
    if (!f) throw FormatError(ParseIssue::io_error, "cannot write " + o.cert_out);
    f << cert.dump(2) << "\n";
  }
  res.code = defect ? kPropertyFailed : kOk;
  return res;
}

template <class S>
Outcome cmd_frattini(const Algebra<S>& a, const Options& o) {
  Outcome res{base_report("frattini", o)};
  res.report["mode"] = o.mode;
  const Subspace<S> z2 = product(a, a.whole(), a.whole());
  const bool zinbiel = is_zinbiel(a);
  res.report["zinbiel"] = zinbiel;
  res.report["z2"] = subspace_to_json(z2);
  std::optional<FrattiniResult<S>> formula, oracle;
  if (o.mode == "formula" || o.mode == "both") {
    formula = frattini(a, FrattiniMode::formula);
    res.report["formula"] = {{"F", subspace_to_json(formula->subalgebra)},
                             {"phi", subspace_to_json(formula->ideal)}};
  }
  if (o.mode == "oracle" || o.mode == "both") {
    oracle = frattini(a, FrattiniMode::oracle);
    res.report["oracle"] = {{"F", subspace_to_json(oracle->subalgebra)},
                            {"phi", subspace_to_json(oracle->ideal)}};
    if (zinbiel) {
      const bool ok = oracle->subalgebra == z2 && oracle->ideal == z2;
      res.report["oracle_equals_z2"] = ok;
      if (!ok) res.code = kPropertyFailed;
    }
  }
  if (formula && oracle) {
    const bool agree = formula->subalgebra == oracle->subalgebra && formula->ideal == oracle->ideal;
    res.report["modes_agree"] = agree;
    if (!agree) res.code = kPropertyFailed;
  }
  return res;
}

template <class S>
Outcome cmd_maximal(const Algebra<S>& a, const Options& o) {
  Outcome res{base_report("maximal", o)};
  const auto list = maximal_subalgebras(a);
  const bool zinbiel = is_zinbiel(a);
  Json arr = Json::array();
  bool all_ideals = true;
  for (const auto& m : list) {
    const bool ideal = is_ideal(a, m);
    all_ideals = all_ideals && ideal;
    arr.push_back({{"basis", subspace_to_json(m)}, {"dim", m.dim()}, {"is_ideal", ideal}});
  }
  res.report["zinbiel"] = zinbiel;
  res.report["count"] = list.size();
  res.report["maximal_subalgebras"] = std::move(arr);
  res.report["all_ideals"] = all_ideals;
  if (zinbiel && !all_ideals) res.code = kPropertyFailed;
  return res;
}

template <class S>
Outcome cmd_products(const Algebra<S>& a, const Options& o) {
  Outcome res{base_report("products", o)};
  const auto n = static_cast<std::size_t>(o.n);
  if (o.n < 1) throw PreconditionError("--n must be at least 1");
  const bool vanish = all_products_vanish(a, n);
  const auto index = nilpotency_index(a);
  const bool zinbiel = is_zinbiel(a);
  res.report["n"] = o.n;
  res.report["zinbiel"] = zinbiel;
  res.report["nilpotency_index"] = index ? Json(*index) : Json(nullptr);
  res.report["all_products_vanish"] = vanish;
  if (zinbiel && index && *index <= n && !vanish) res.code = kPropertyFailed;
  return res;
}

template <class S>
Outcome cmd_oracle_prop(const Algebra<S>& a, const Options& o) {
  Outcome res{base_report("oracle-prop", o)};
  const PropertyReport rep = run_property_suite(a);
  Json arr = Json::array();
  for (const auto& c : rep.checks) {
    Json j{{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  res.report["checks"] = std::move(arr);
  res.report["passed"] = rep.passed();
  res.code = rep.passed() ? kOk : kPropertyFailed;
  return res;
}

// ---------------------------------------------------------------- output

void render_text(std::ostream& os, const Json& j, const std::string& prefix = {}) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object())
      render_text(os, *it, key);
    else
      os << key << ": " << it->dump() << "\n";
  }
}

void write_output(const Options& o, const std::string& text) {
  if (o.out_path.empty()) return;
  std::ofstream f(o.out_path);
  if (!f) throw FormatError(ParseIssue::io_error, "cannot write " + o.out_path);
  f << text;
}

void emit(std::ostream& out, const Options& o, const std::string& text) {
  if (o.out_path.empty())
    out << text;
  else
    write_output(o, text);
}

std::pair<std::uint64_t, std::uint64_t> parse_shard(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw PreconditionError("--shard expects i/n");
  try {
    return {std::stoull(s.substr(0, slash)), std::stoull(s.substr(slash + 1))};
  } catch (const std::exception&) {
    throw PreconditionError("--shard expects i/n with nonnegative integers");
  }
}

FieldSpec parse_field(const std::string& s) {
  if (s == "Q") return FieldSpec::rationals();
  try {
    std::size_t used = 0;
    const auto p = std::stoull(s, &used);
    if (used != s.size()) throw PreconditionError("");
    return FieldSpec::prime(p);
  } catch (const std::exception&) {
    throw PreconditionError("--field expects Q or a prime below 2^31, got \"" + s + "\"");
  }
}

int run_enumerate(const Options& o, std::ostream& out) {
  const auto [index, count] = parse_shard(o.shard);
  EnumerationJob job{o.p, o.dim, index, count, o.allow_large};
  if (o.count_only) {
    emit(out, o, std::to_string(count_zinbiel_parallel(job, o.jobs)) + "\n");
    return kOk;
  }
  Json arr = Json::array();
  enumerate_zinbiel_parallel(job, o.jobs, [&](std::uint64_t idx, const Algebra<Modp>& a) {
    Json j = algebra_to_json(a);
    j["label"] = "GF(" + std::to_string(o.p) + ") d=" + std::to_string(o.dim) + " #" + std::to_string(idx);
    // keep key order field, dim, label, constants
    Json ordered;
    ordered["field"] = j["field"];
    ordered["dim"] = j["dim"];
    ordered["label"] = j["label"];
    ordered["constants"] = j["constants"];
    arr.push_back(std::move(ordered));
  });
  emit(out, o, arr.dump(2) + "\n");
  return kOk;
}

int run_free(const Options& o, std::ostream& out) {
  const FieldSpec f = parse_field(o.field);
  const std::string text = f.is_finite()
                               ? emit_algebra(free_zinbiel_truncated<Modp>(o.generators, o.degree, f))
                               : emit_algebra(free_zinbiel_truncated<Rational>(o.generators, o.degree, f));
  emit(out, o, text);
  return kOk;
}

int run_report(const std::string& command, const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const AnyAlgebra any = parse_algebra_file(o.input);
  const Outcome res = std::visit(
      [&](const auto& a) -> Outcome {
        if (command == "check") return cmd_check(a, o);
        if (command == "series") return cmd_series(a, o);
        if (command == "certify") return cmd_certify(a, o);
        if (command == "frattini") return cmd_frattini(a, o);
        if (command == "maximal") return cmd_maximal(a, o);
        if (command == "products") return cmd_products(a, o);
        return cmd_oracle_prop(a, o);
      },
      any);
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  Json doc;
  doc["report"] = res.report;
  doc["exit_code"] = res.code;
  doc["timing"] = {{"elapsed_ms", ms}};
  std::string text;
  if (o.format == "text") {
    std::ostringstream os;
    render_text(os, doc);
    text = os.str();
  } else {
    text = doc.dump(2) + "\n";
  }
  emit(out, o, text);
  return res.code;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact structure checks for Zinbiel algebras given by structure constants"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.input, "algebra JSON file")->required();
    sub->add_option("--out", o.out_path, "write the report here instead of stdout");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  auto* check = app.add_subcommand("check", "check the Zinbiel identity on all basis triples");
  add_common(check);
  auto* series = app.add_subcommand("series", "lower central and derived series with indices");
  add_common(series);
  auto* certify = app.add_subcommand("certify", "build and verify a central-flag nilpotency certificate");
  add_common(certify);
  certify->add_option("--cert-out", o.cert_out, "save the certificate JSON here");
  certify->add_option("--flag", o.flag_in, "verify this certificate instead of building one");
  auto* fratt = app.add_subcommand("frattini", "Frattini subalgebra and ideal");
  add_common(fratt);
  fratt->add_option("--mode", o.mode, "formula, oracle or both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}));
  auto* maximal = app.add_subcommand("maximal", "maximal subalgebras by lattice enumeration");
  add_common(maximal);
  auto* products = app.add_subcommand("products", "do all products of n elements vanish");
  add_common(products);
  products->add_option("--n", o.n, "number of factors")->required();
  auto* prop = app.add_subcommand("oracle-prop", "run the full property suite on one algebra");
  add_common(prop);

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive Zinbiel tables over GF(2)/GF(3)");
  enumerate->add_option("--p", o.p, "field size (2 or 3)")->required();
  enumerate->add_option("--dim", o.dim, "dimension (<= 3)")->required();
  enumerate->add_flag("--count-only", o.count_only, "print only the number of Zinbiel tables");
  enumerate->add_option("--shard", o.shard, "shard i/n of the table space");
  enumerate->add_option("--jobs", o.jobs, "worker threads");
  enumerate->add_flag("--allow-large", o.allow_large, "lift the default cap (needed for GF(2), dim 3)");
  enumerate->add_option("--out", o.out_path, "write output here instead of stdout");

  auto* free = app.add_subcommand("free", "truncated free Zinbiel algebra");
  free->add_option("--generators", o.generators, "number of generators")->required();
  free->add_option("--degree", o.degree, "maximal word length")->required();
  free->add_option("--field", o.field, "Q or a prime");
  free->add_option("--out", o.out_path, "write output here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(o, out);
    if (free->parsed()) return run_free(o, out);
    for (auto* sub : app.get_subcommands()) return run_report(sub->get_name(), o, out);
  } catch (const PropertyViolation& e) {
    err << "property violation: " << e.what() << "\n";
    return kPropertyFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace zinbiel::cli
