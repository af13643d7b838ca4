// Command-line front end.
//
//   toprec compute --curve NAME | --curve-file PATH --g G --n N [--kernel general|printed]
//   toprec check   [--suite paper|all|1,2,...]
//   toprec catalog
//   toprec extract --curve maps-quad --g G --faces F   |   --curve lambert --g G --n N --degree D
//
// Exit codes: 0 success, 1 invalid input, 2 precision or computation error,
// 3 check-suite failure.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toprec/toprec.hpp"

namespace {

using namespace toprec;

enum Exit { kOk = 0, kInvalid = 1, kComputation = 2, kCheckFailed = 3 };

struct Options {
  std::string curve, curve_file, format = "json", suite = "paper", kernel = "general", gamma = "p", t4 = "1";
  int g = -1, n = -1, window = 0, faces = 4, degree = 5, marked = 4;
  std::vector<std::string> probes;
};

SpectralCurve<Coeff> load_curve(const Options& o) {
  if (o.curve.empty() == o.curve_file.empty()) throw ValidationError("give exactly one of --curve and --curve-file");
  SpectralCurve<Coeff> c;
  if (!o.curve_file.empty()) {
    std::ifstream in(o.curve_file);
    if (!in) throw ValidationError("cannot read curve file '" + o.curve_file + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw ValidationError(std::string("curve file is not JSON: ") + e.what());
    }
    c = curve_from_json(j);
  } else if (o.curve == "maps-quad") {
    Rat t4 = Rat::parse(o.t4);
    Coeff gamma = o.gamma == "p" ? Coeff::p() : Coeff(Rat::parse(o.gamma));
    if (gamma.is_zero()) throw ValidationError("gamma must be nonzero");
    c = maps_quad_curve<Coeff>(gamma, Coeff(t4));
  } else {
    c = catalog_get(o.curve, Rat::parse(o.t4));
  }
  auto diags = validate_curve(c);
  if (!diags.empty()) {
    std::string msg = "invalid curve:";
    for (const auto& d : diags) msg += " [branchpoint " + std::to_string(d.bp) + ": " + d.predicate + (d.detail.empty() ? "" : ", " + d.detail) + "]";
    throw ValidationError(msg);
  }
  return c;
}

Kernel<Coeff> make_kernel(const Options& o, const SpectralCurve<Coeff>& c) {
  if (o.kernel == "printed") return printed_kernel_for<Coeff>(c.name);
  if (o.kernel == "general") return general_kernel<Coeff>(calibrate_kappa(c));
  throw ValidationError("unknown kernel '" + o.kernel + "' (general|printed)");
}

std::vector<std::string> locations(const SpectralCurve<Coeff>& c) {
  std::vector<std::string> out;
  for (const auto& b : c.branchpoints) out.push_back(b.a.str());
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

int cmd_compute(const Options& o) {
  if (o.g < 0 || o.n < 0) throw ValidationError("--g and --n must be given and non-negative");
  if (2 * o.g - 2 + o.n <= 0) throw ValidationError("2g-2+n must be positive");
  if (o.n == 0 && o.g < 2) throw ValidationError("F_g needs g >= 2");
  SpectralCurve<Coeff> c = load_curve(o);
  OmegaTable<Coeff> t(c, make_kernel(o, c), EngineOptions{o.window});
  std::vector<Rat> probes;
  for (const auto& p : o.probes) probes.push_back(Rat::parse(p));

  json out;
  out["curve"] = c.name;
  out["g"] = o.g;
  out["n"] = o.n;
  out["kernel"] = o.kernel;
  out["parameter"] = c.param;
  json bps = json::array();
  for (const auto& b : c.branchpoints) bps.push_back(scalar_json(b.a));
  out["branchpoints"] = bps;

  if (o.n == 0) {
    Coeff f = t.f_g(o.g);
    out["F"] = scalar_json(f);
    out["text"] = f.str();
    out["window"] = t.window();
    json pr = json::array();
    for (const auto& p : probes) pr.push_back(json{{"p", p.str()}, {"value", f.eval(p).str()}});
    if (!probes.empty()) out["probes"] = pr;
    if (o.format == "json") std::cout << out.dump(2) << "\n";
    else if (o.format == "csv") std::cout << "g,F\n" << o.g << "," << csv_quote(f.str()) << "\n";
    else std::cout << "F_" << o.g << " = " << f.str() << "\n";
    return kOk;
  }

  MultiForm<Coeff> w = t.omega(o.g, o.n);
  out["window"] = t.window();
  out["form"] = to_json(w);
  if (!probes.empty()) {
    json pr = json::array();
    for (const auto& p : probes) {
      json terms = json::array();
      for (const auto& [s, v] : w.terms()) {
        json sl = json::array();
        for (const auto& x : s) sl.push_back(json{{"bp", x.bp}, {"order", x.order}});
        terms.push_back(json{{"slots", sl}, {"value", v.eval(p).str()}});
      }
      pr.push_back(json{{"p", p.str()}, {"terms", terms}});
    }
    out["probes"] = pr;
  }
  if (o.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "slots,coefficient";
    for (const auto& p : probes) std::cout << ",p=" << csv_quote(p.str());
    std::cout << "\n";
    for (const auto& [s, v] : w.terms()) {
      std::string sl;
      for (const auto& x : s) sl += (sl.empty() ? "" : " ") + std::to_string(x.bp) + ":" + std::to_string(x.order);
      std::cout << sl << "," << csv_quote(v.str());
      for (const auto& p : probes) std::cout << "," << csv_quote(v.eval(p).str());
      std::cout << "\n";
    }
  } else {
    std::cout << "omega_" << o.g << "," << o.n << " on " << c.name << " = " << w.str(locations(c)) << "\n";
  }
  return kOk;
}

std::set<int> parse_suite(const std::string& s) {
  if (s == "paper" || s == "all") return {};
  std::set<int> ids;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 1 || v > static_cast<int>(suite_items().size())) throw std::invalid_argument(tok);
      ids.insert(v);
    } catch (const std::exception&) {
      throw ValidationError("unknown suite '" + s + "' (paper, all, or a comma-separated list of item numbers)");
    }
  }
  return ids;
}

int cmd_check(const Options& o) {
  std::set<int> ids = parse_suite(o.suite);
  bool pretty = o.format == "pretty";
  CheckReport rep = run_suite(ids, [&](const CheckItem& i) {
    if (!pretty) return;
    std::cout << "[" << (i.pass ? "PASS" : "FAIL") << "] " << i.id << " " << i.title << "\n";
    for (const auto& d : i.details) std::cout << "       " << d << "\n";
    std::cout.flush();
  });
  if (o.format == "json") {
    std::cout << to_json(rep).dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "id,title,pass\n";
    for (const auto& i : rep.items) std::cout << i.id << "," << csv_quote(i.title) << "," << (i.pass ? "true" : "false") << "\n";
  }
  return rep.all_pass() ? kOk : kCheckFailed;
}

int cmd_catalog(const Options& o) {
  auto entries = catalog_entries();
  if (o.format == "json") {
    json a = json::array();
    for (const auto& e : entries) a.push_back(json{{"name", e.name}, {"description", e.description}, {"parameters", e.parameters}});
    std::cout << a.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "name,description,parameters\n";
    for (const auto& e : entries) std::cout << e.name << "," << csv_quote(e.description) << "," << csv_quote(e.parameters) << "\n";
  } else {
    for (const auto& e : entries) std::cout << e.name << "\n    " << e.description << "\n    parameters: " << e.parameters << "\n";
  }
  return kOk;
}

int cmd_extract(const Options& o) {
  if (o.g < 0) throw ValidationError("--g must be given and non-negative");
  SpectralCurve<Coeff> c = load_curve(o);
  json table;
  std::vector<std::vector<std::string>> rows;  // g, key, value, normalization
  if (c.name == "maps-quad") {
    if (o.faces < 1) throw ValidationError("--faces must be positive");
    if (o.gamma != "p") throw ValidationError("map counts need symbolic gamma (omit --gamma)");
    MapCountTable m;
    if (o.g == 0) {
      m = map_count_extract_disk(c, o.faces, o.marked);
    } else {
      OmegaTable<Coeff> t(c, printed_maps_kernel<Coeff>(), EngineOptions{o.window});
      m = map_count_extract(c, t.omega_sym(o.g, 1), o.g, o.faces, o.marked);
    }
    table = to_json(m);
    for (const auto& [f, v] : m.by_faces)
      rows.push_back({std::to_string(o.g), std::to_string(f), v.str(), "rooted, marked face size " + std::to_string(m.marked_size)});
  } else if (c.name == "lambert") {
    if (o.n < 1) throw ValidationError("--n must be at least 1");
    if (o.degree < o.n) throw ValidationError("--degree must be at least n");
    HurwitzTable h;
    if (o.g == 0 && o.n == 1) {
      h = hurwitz_extract_disk(o.degree);
    } else if (o.g == 0 && o.n == 2) {
      h = hurwitz_extract_cylinder(o.degree);
    } else {
      OmegaTable<Rat> t(lambert_curve<Rat>(), printed_hurwitz_kernel<Rat>(), EngineOptions{o.window});
      h = hurwitz_extract(t.omega_sym(o.g, o.n), o.g, o.degree);
    }
    table = to_json(h);
    for (const auto& e : h.entries) {
      std::string mu;
      for (int m : e.mu) mu += (mu.empty() ? "" : " ") + std::to_string(m);
      rows.push_back({std::to_string(o.g), mu, e.number.str(),
                      "H = (2g-2+n+|mu|)! * coefficient; stabilizer " + e.symmetry.str() + " not divided out"});
    }
  } else {
    throw ValidationError("extract supports the maps-quad and lambert curves");
  }
  if (o.format == "json") {
    std::cout << table.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "g," << (c.name == "lambert" ? "mu" : "faces") << ",value,normalization\n";
    for (const auto& r : rows) std::cout << r[0] << "," << r[1] << "," << r[2] << "," << csv_quote(r[3]) << "\n";
  } else {
    for (const auto& r : rows) std::cout << "g=" << r[0] << "  " << (c.name == "lambert" ? "mu=" : "faces=") << r[1] << "  " << r[2] << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of spectral curves by topological recursion, exact in Q or Q(p)"};
  app.require_subcommand(1);
  Options o;
  auto formats = CLI::IsMember({"json", "csv", "pretty"});
  auto add_curve = [&](CLI::App* s) {
    s->add_option("--curve", o.curve, "catalog curve: airy, weil-petersson, lambert, maps-quad");
    s->add_option("--curve-file", o.curve_file, "curve description in JSON (see docs/formats.md)");
    s->add_option("--t4", o.t4, "maps-quad quadrangle weight (rational)");
    s->add_option("--gamma", o.gamma, "maps-quad gamma: 'p' (symbolic) or a rational");
    s->add_option("--window", o.window, "initial series window (grown automatically when needed)");
    s->add_option("--format", o.format, "json, csv or pretty")->check(formats);
  };
  auto* compute = app.add_subcommand("compute", "omega_{g,n} (n >= 1) or F_g (n = 0)");
  add_curve(compute);
  compute->add_option("--g", o.g, "genus")->required();
  compute->add_option("--n", o.n, "number of points")->required();
  compute->add_option("--kernel", o.kernel, "general (kappa calibrated) or printed (family kernel)")
      ->check(CLI::IsMember({"general", "printed"}));
  compute->add_option("--probe", o.probes, "also evaluate coefficients at p = value (repeatable)");

  auto* check = app.add_subcommand("check", "run the verification suite");
  check->add_option("--suite", o.suite, "paper (all items), all, or item numbers like 1,5");
  check->add_option("--format", o.format, "json, csv or pretty")->check(formats);

  auto* catalog = app.add_subcommand("catalog", "list catalog curves");
  catalog->add_option("--format", o.format, "json, csv or pretty")->check(formats);

  auto* extract = app.add_subcommand("extract", "quadrangulation counts (maps-quad) or Hurwitz numbers (lambert)");
  add_curve(extract);
  extract->add_option("--g", o.g, "genus")->required();
  extract->add_option("--n", o.n, "number of parts of mu (lambert)");
  extract->add_option("--faces", o.faces, "maximal total face count (maps-quad)");
  extract->add_option("--marked", o.marked, "marked face size (even, maps-quad)");
  extract->add_option("--degree", o.degree, "maximal |mu| (lambert)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }
  try {
    if (*compute) return cmd_compute(o);
    if (*check) return cmd_check(o);
    if (*catalog) return cmd_catalog(o);
    if (*extract) return cmd_extract(o);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << " (needs window " << e.required_hi << ")\n";
    return kComputation;
  } catch (const Error& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kComputation;
  }
  return kInvalid;
}
