#include "crlc/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>

#include <json.hpp>

#include "crlc/automorphisms.hpp"
#include "crlc/parse.hpp"
#include "crlc/replication.hpp"

namespace crlc::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::vector<std::string> positional;
  std::map<std::string, Scalar> params;
  std::optional<std::string> map_file;
  std::optional<std::vector<Scalar>> at;
  std::optional<std::string> aut;
  std::string mode = "exact";
  int order = 20;
  long precision = 128;
  bool json_out = false;
  bool all = false;
  std::optional<Scalar> alpha;
};

// "stabX(a=1+1i, t=1/2, s=1/3, lambda=2)" and the other parametrized
// families; s is the rational circle parameter for the unit u.
RationalMap parse_aut(const std::string& text) {
  auto open = text.find('(');
  auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw UsageError("--aut expects family(name=value, ...)");
  std::string family = text.substr(0, open);
  std::map<std::string, Scalar> kv;
  std::istringstream in(text.substr(open + 1, close - open - 1));
  std::string part;
  while (std::getline(in, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("--aut parameter without '='");
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    auto v = Scalar::parse(trim(part.substr(eq + 1)));
    if (!v) throw UsageError("--aut: cannot parse value in '" + part + "'");
    kv.emplace(trim(part.substr(0, eq)), *v);
  }
  auto get = [&](const char* key, Scalar fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  };
  Scalar u = kv.count("u") ? kv.at("u") : unit_from_circle(get("s", Scalar(0)));
  if (family == "stabX")
    return stab_X({get("a", Scalar(0)), get("t", Scalar(0)), u, get("lambda", Scalar(1))});
  if (family == "stabH3")
    return stab_H3(get("c", Scalar(0)), get("r", Scalar(0)), u, get("lambda", Scalar(1)));
  if (family == "tau") return trans_tau(get("b", Scalar(0)), get("r", Scalar(0)));
  if (family == "dilL") return trans_dilation_lambda(get("lambda", Scalar(1)));
  if (family == "dilM") return trans_dilation_mu(get("mu", Scalar(1)));
  if (family == "heisT") return heis_translation(get("z", Scalar(0)), get("w", Scalar(0)));
  throw UsageError("--aut: unknown family '" + family +
                   "' (stabX, stabH3, tau, dilL, dilM, heisT)");
}

int env_long(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  try {
    return std::stoi(v);
  } catch (...) {
    return fallback;
  }
}

Scalar parse_scalar_arg(const std::string& text) {
  auto v = Scalar::parse(text);
  if (!v) throw UsageError("cannot parse number '" + text + "'");
  return *v;
}

Options parse_options(const std::vector<std::string>& argv) {
  Options o;
  o.order = env_long("CRLC_ORDER", 20);
  o.precision = env_long("CRLC_PRECISION", 128);
  if (argv.empty()) throw UsageError("missing subcommand");
  o.command = argv[0];
  for (size_t k = 1; k < argv.size(); ++k) {
    const std::string& a = argv[k];
    auto need_value = [&]() -> const std::string& {
      if (k + 1 >= argv.size()) throw UsageError("flag " + a + " needs a value");
      return argv[++k];
    };
    if (a == "--json") {
      o.json_out = true;
    } else if (a == "--all") {
      o.all = true;
    } else if (a == "--order") {
      o.order = std::stoi(need_value());
    } else if (a == "--precision") {
      o.precision = std::stol(need_value());
    } else if (a == "--mode") {
      o.mode = need_value();
      if (o.mode != "exact" && o.mode != "series")
        throw UsageError("--mode must be exact or series");
    } else if (a == "--param") {
      std::string kv = need_value();
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("--param expects key=value");
      o.params.emplace(kv.substr(0, eq), parse_scalar_arg(kv.substr(eq + 1)));
    } else if (a == "--map") {
      o.map_file = need_value();
    } else if (a == "--at") {
      std::string pt = need_value();
      std::vector<Scalar> coords;
      std::istringstream in(pt);
      std::string part;
      while (std::getline(in, part, ',')) coords.push_back(parse_scalar_arg(part));
      o.at = coords;
    } else if (a == "--alpha") {
      o.alpha = parse_scalar_arg(need_value());
    } else if (a == "--aut") {
      o.aut = need_value();
    } else if (!a.empty() && a[0] == '-') {
      throw UsageError("unknown flag " + a);
    } else {
      o.positional.push_back(a);
    }
  }
  if (o.order < 4 || o.order > 64) throw UsageError("--order out of range [4, 64]");
  return o;
}

CatalogValue load_map(const Options& o, const std::string& name) {
  if (o.map_file) {
    std::ifstream in(*o.map_file);
    if (!in) throw UsageError("cannot open map file " + *o.map_file);
    std::stringstream ss;
    ss << in.rdbuf();
    auto parsed = parse_map_file(ss.str(), o.order);
    if (std::holds_alternative<RationalMap>(parsed))
      return std::get<RationalMap>(parsed);
    return std::get<MapGerm>(parsed);
  }
  return catalog_map(name, o.params, o.order);
}

json report_json(const VerifyReport& rep, const std::string& map_name) {
  json j;
  j["map"] = map_name;
  j["mode"] = rep.mode;
  j["order"] = rep.order ? json(*rep.order) : json(nullptr);
  j["status"] = rep.passed() ? "pass"
                             : rep.status == VerifyStatus::Inconclusive ? "error" : "fail";
  j["residual_leading"] =
      rep.residual_leading.empty() ? json(nullptr) : json(rep.residual_leading);
  j["quotient"] = rep.quotient
                      ? json(rep.quotient->first.str() + " / " + rep.quotient->second.str())
                      : json(nullptr);
  j["ahlfors"] = nullptr;
  return j;
}

std::string human_status(const VerifyReport& rep) {
  std::string s = rep.passed() ? "pass" : "fail";
  if (!rep.passed() && !rep.residual_leading.empty())
    s += "  residual leading term: " + rep.residual_leading;
  return s;
}

VerifyReport verify_value(const CatalogValue& v, const Options& o) {
  bool series = o.mode == "series" || !std::holds_alternative<RationalMap>(v);
  VerifyReport rep = mapping_residual(v, series, o.order);
  if (rep.passed() && std::holds_alternative<RationalMap>(v) && !series) {
    const auto& m = std::get<RationalMap>(v);
    try {
      rep.quotient = quotient_Q(m);
    } catch (const std::exception&) {
      // quotient extraction is best-effort in reports
    }
  }
  return rep;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  if (o.positional.empty()) {
    json names = json::array();
    for (const auto& n : catalog_names()) names.push_back(n);
    if (o.json_out) {
      out << json{{"command", "catalog"}, {"names", names}}.dump(2) << "\n";
    } else {
      for (const auto& n : catalog_names()) out << n << "\n";
    }
    return 0;
  }
  auto v = catalog_map(o.positional[0], o.params, o.order);
  if (std::holds_alternative<RationalMap>(v)) {
    const auto& m = std::get<RationalMap>(v);
    out << surface_name(m.source()) << " -> " << surface_name(m.target()) << "  "
        << print_map(m) << "\n";
  } else if (std::holds_alternative<MapGerm>(v)) {
    const auto& g = std::get<MapGerm>(v);
    out << "H3 -> X germ\n  f   = " << g.f.str() << "\n  phi = " << g.phi.str()
        << "\n  g   = " << g.g.str() << "\n";
  } else {
    const auto& g = std::get<SphereGerm>(v);
    out << "S3 -> D4 germ\n";
    for (int k = 0; k < 3; ++k) out << "  h" << k + 1 << " = " << g.comps[k].str() << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, VerifyReport>> results;
  if (o.all) {
    std::vector<std::string> names;
    for (const auto& n : catalog_names()) {
      // parametrized entries need --param; XY_R and Psi1 only verify through
      // their composite (see the catalog notes)
      if (n == "Ht" || n == "r_beta" || n == "t_phi" || n == "XY_R" || n == "Psi1") continue;
      names.push_back(n);
    }
    std::vector<std::future<VerifyReport>> futs;
    for (const auto& n : names) {
      futs.push_back(std::async(std::launch::async, [&o, n] {
        return verify_value(catalog_map(n, {}, o.order), o);
      }));
    }
    for (size_t k = 0; k < names.size(); ++k) results.emplace_back(names[k], futs[k].get());
  } else if (o.aut) {
    results.emplace_back(*o.aut, verify_value(parse_aut(*o.aut), o));
  } else {
    if (o.positional.empty() && !o.map_file) throw UsageError("verify: missing map name");
    std::string name = o.positional.empty() ? "file" : o.positional[0];
    results.emplace_back(name, verify_value(load_map(o, name), o));
  }
  bool all_pass = true;
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  if (o.json_out) {
    json arr = json::array();
    for (const auto& [n, rep] : results) arr.push_back(report_json(rep, n));
    out << json{{"command", "verify"}, {"elapsed_ms", elapsed}, {"reports", arr}}.dump(2)
        << "\n";
  } else {
    for (const auto& [n, rep] : results)
      out << n << " [" << rep.mode << "]: " << human_status(rep) << "\n";
  }
  for (const auto& [n, rep] : results) all_pass = all_pass && rep.passed();
  return all_pass ? 0 : 1;
}

int cmd_classify(const Options& o, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  if (o.positional.empty() && !o.map_file) throw UsageError("classify: missing map name");
  std::string name = o.positional.empty() ? "file" : o.positional[0];
  auto v = load_map(o, name);
  MapGerm germ = [&] {
    if (std::holds_alternative<MapGerm>(v)) return std::get<MapGerm>(v);
    if (!std::holds_alternative<RationalMap>(v))
      throw UsageError("classify: sphere-side germs are not classified directly");
    const auto& m = std::get<RationalMap>(v);
    std::vector<Scalar> p = o.at.value_or(std::vector<Scalar>{Scalar(0), Scalar(0)});
    return recenter(m, p, o.order);
  }();
  ClassLabel label = classify(germ, o.order);
  json j{{"command", "classify"}, {"map", name}, {"class", class_name(label.kind)}};
  if (label.kind != ClassKind::Nontransversal) {
    NormalFormResult nf = partial_normal_form(germ);
    j["lambda"] = nf.data.lambda.str();
    j["alpha"] = nf.data.alpha.str();
    j["mu"] = nf.data.mu.str();
    j["nu"] = nf.data.nu.str();
    j["sigma"] = nf.data.sigma.str();
    j["backend"] = "exact";
  } else {
    j["phi"] = label.phi->str();
    j["backend"] = "exact";
  }
  j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  if (o.json_out) {
    out << j.dump(2) << "\n";
  } else {
    out << name << ": " << class_name(label.kind) << "\n";
  }
  return 0;
}

int cmd_ahlfors(const Options& o, std::ostream& out) {
  if (o.positional.empty()) throw UsageError("ahlfors: missing map name");
  std::string name = o.positional[0];
  auto v = load_map(o, name);
  std::string value;
  if (std::holds_alternative<RationalMap>(v)) {
    const auto& m = std::get<RationalMap>(v);
    if (m.source() == Surface::S3) {
      if (!o.at) throw UsageError("ahlfors: --at z,w required for sphere-side maps");
      value = ahlfors(m, *o.at, field_Z1_S3()).str();
    } else {
      MapGerm g = o.at ? recenter(m, *o.at, o.order) : taylor_germ(m, o.order);
      value = ahlfors_germ(g).str();
    }
  } else if (std::holds_alternative<MapGerm>(v)) {
    value = ahlfors_germ(std::get<MapGerm>(v)).str();
  } else {
    // sphere germ: the identity quotient makes the tensor vanish
    auto rep = mapping_residual(std::get<SphereGerm>(v), o.order);
    if (!rep.passed()) return 1;
    value = "0";
  }
  if (o.json_out) {
    out << json{{"command", "ahlfors"}, {"map", name}, {"ahlfors", value}}.dump(2) << "\n";
  } else {
    out << value << "\n";
  }
  return 0;
}

int cmd_compose(const Options& o, std::ostream& out) {
  if (o.positional.size() < 2) throw UsageError("compose: need at least two catalog names");
  std::vector<RationalMap> maps;
  for (const auto& n : o.positional) {
    bool negate = !n.empty() && n[0] == '-';
    auto v = catalog_map(negate ? n.substr(1) : n, o.params, o.order);
    if (!std::holds_alternative<RationalMap>(v))
      throw UsageError("compose: '" + n + "' is not a rational map");
    maps.push_back(negate ? std::get<RationalMap>(v).negated() : std::get<RationalMap>(v));
  }
  RationalMap acc = maps.front();
  for (size_t k = 1; k < maps.size(); ++k) acc = compose(acc, maps[k]);
  out << surface_name(acc.source()) << " -> " << surface_name(acc.target()) << "  "
      << print_map(acc) << "\n";
  return 0;
}

int cmd_jet(const Options& o, std::ostream& out) {
  if (o.positional.empty()) throw UsageError("jet: missing map name");
  auto v = load_map(o, o.positional[0]);
  MapGerm g = std::holds_alternative<MapGerm>(v)
                  ? std::get<MapGerm>(v)
                  : taylor_germ(std::get<RationalMap>(v), o.order);
  out << "f   = " << g.f.str() << "\nphi = " << g.phi.str() << "\ng   = " << g.g.str() << "\n";
  return 0;
}

int cmd_replicate(const Options& o, std::ostream& out) {
  if (o.positional.empty()) throw UsageError("replicate: missing check id");
  const std::string& check = o.positional[0];
  json j{{"command", "replicate"}, {"check", check}};
  bool pass = false;
  if (check == "segre1") {
    FirstSegre fs1 = first_segre_profile({Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)},
                                         o.order);
    MapGerm iota = iota_germ(o.order);
    Series fslice = [&] {
      Poly zero(alpha_h3());
      return series_substitute_var(iota.f, "w", zero);
    }();
    pass = fs1.f == fslice;
    NfParams nf0{Scalar(0), Scalar(2), Scalar(0), Scalar(0), Scalar(0)};
    FirstSegre fs0 = first_segre_profile(nf0, o.order);
    // lambda = 0: H|Sigma = (z, alpha z^2 + ..., 0); here mu = nu = sigma = 0
    Poly z = Poly::var(alpha_h3(), "z", Scalar(1));
    pass = pass && fs0.f == Series(z, o.order) &&
           fs0.phi == Series((z * z).scaled(Scalar(2)), o.order);
  } else if (check == "com1") {
    Jet3 relations{Scalar(2), Scalar(0), Scalar(6), Scalar::imag_ratio(2, 1), Scalar(0),
                   Scalar(6)};
    Series det = weight3_solvability({Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)},
                                     relations, o.order);
    pass = det.is_zero();
    Series det2 = weight3_solvability({Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(1)},
                                      Jet3{}, o.order);
    Mono m;
    m.e[alpha_h3()->index_of("z")] = 7;
    m.wdeg = 7;
    pass = pass && det2.body().coeff(m, Scalar(0)) == Scalar::imag_ratio(192, 1);
  } else if (check == "holfun") {
    auto r1 = catalog_map("r_beta", {{"beta", Scalar(1)}}, o.order);
    MapGerm g = taylor_germ(std::get<RationalMap>(r1), o.order);
    auto res = functional_residuals(g, {Scalar(2), Scalar(2), Scalar::imag_ratio(6, 1)});
    pass = res[0].is_zero() && res[1].is_zero() && res[2].is_zero();
    auto ht = catalog_map("Ht", {{"t", Scalar(1)}}, o.order);
    MapGerm gh = taylor_germ(std::get<RationalMap>(ht), o.order);
    auto resh = functional_residuals(gh, {Scalar(0), Scalar(0), Scalar(12)});
    pass = pass && resh[0].is_zero() && resh[1].is_zero() && resh[2].is_zero();
  } else if (check == "remeq") {
    Scalar a = o.alpha.value_or(Scalar(2));
    auto sol = solve_constraints(a);
    auto res = constraint_residuals({a, sol.eta, sol.xi, sol.gamma});
    pass = res[0].is_zero() && res[1].is_zero() && res[2].is_zero();
    j["solution"] = json::array({sol.eta.str(), sol.xi.str(), sol.gamma.str()});
  } else if (check == "iota2") {
    pass = iota_second_segre(o.order).f == iota_germ(o.order).f;
  } else if (check == "nontrans") {
    Poly z = Poly::var(alpha_h3(), "z", Scalar(1));
    MapGerm t = nontransversal_germ(z, o.order);
    Series phi = nontransversal_reduce(t, o.order);
    pass = phi == Series(z, o.order);
  } else if (check == "weight3jets") {
    MapGerm iota = iota_germ(o.order);
    pass = weight3_jet_relations(iota, {Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)});
    auto r1 = taylor_germ(std::get<RationalMap>(catalog_map("r_beta", {{"beta", Scalar(1)}})),
                          o.order);
    pass = pass && weight3_jet_relations(r1, {Scalar(0), Scalar(2), Scalar(0), Scalar(0),
                                              Scalar(0)});
  } else {
    throw UsageError("unknown replicate check '" + check + "'");
  }
  j["status"] = pass ? "pass" : "fail";
  if (o.json_out) {
    out << j.dump(2) << "\n";
  } else {
    out << check << ": " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

CommandResult run(const std::vector<std::string>& argv) {
  std::ostringstream out;
  try {
    Options o = parse_options(argv);
    int code;
    if (o.command == "catalog") {
      code = cmd_catalog(o, out);
    } else if (o.command == "verify") {
      code = cmd_verify(o, out);
    } else if (o.command == "classify") {
      code = cmd_classify(o, out);
    } else if (o.command == "ahlfors") {
      code = cmd_ahlfors(o, out);
    } else if (o.command == "compose") {
      code = cmd_compose(o, out);
    } else if (o.command == "jet") {
      code = cmd_jet(o, out);
    } else if (o.command == "replicate") {
      code = cmd_replicate(o, out);
    } else {
      throw UsageError("unknown subcommand '" + o.command + "'");
    }
    return {code, out.str()};
  } catch (const UsageError& e) {
    return {2, std::string("usage error: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {2, std::string("parse error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    std::string what = e.what();
    if (what.find("inconclusive") != std::string::npos)
      return {3, "inconclusive: " + what + "\n"};
    return {1, "error: " + what + "\n"};
  }
}

}  // namespace crlc::cli
