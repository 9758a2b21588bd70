// Command-line front end. Exit codes: 0 yes/true, 1 no/false, 2 unknown,
// 3 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hyper/corpus.hpp"
#include "hyper/detrep.hpp"
#include "hyper/hypercone.hpp"
#include "hyper/io.hpp"
#include "hyper/soscert.hpp"

using namespace hyper;

namespace {

constexpr int kUsage = 3;

struct Options {
  std::string poly, vars, e, a, g, mod, pair, dvars, rep, cert_out, format = "json";
  std::uint64_t seed = 42;
  unsigned trials = 64;
  unsigned sos_budget = 2;
  double tolerance = 1e-9;
  unsigned threads = 1;
  bool no_timings = false;
  bool closure = false;
  bool strict = false;
  std::size_t n = 0, d = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& text) {
  if (text.empty() || text[0] != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw UsageError("cannot read " + text.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Variables named x1..xk when --vars is absent.
std::vector<std::string> resolve_names(const Options& o, const std::vector<std::string>& texts) {
  if (!o.vars.empty()) return split_names(o.vars);
  std::regex ident("[A-Za-z_][A-Za-z_0-9]*");
  std::regex indexed("x([1-9][0-9]*)");
  std::size_t top = 0;
  for (const auto& t : texts)
    for (auto it = std::sregex_iterator(t.begin(), t.end(), ident); it != std::sregex_iterator(); ++it) {
      std::smatch m;
      std::string id = it->str();
      if (!std::regex_match(id, m, indexed))
        throw UsageError("variable '" + id + "' needs --vars");
      top = std::max<std::size_t>(top, std::stoul(m[1].str()));
    }
  if (top == 0) throw UsageError("cannot infer variables; pass --vars");
  return default_variable_names(top);
}

struct Context {
  const Options& o;
  std::vector<std::string> names;
  Polynomial f;

  RationalVector point(const std::string& text, const char* flag) const {
    if (text.empty()) throw UsageError(std::string("missing ") + flag);
    RationalVector v = parse_rational_list(text);
    if (v.size() != names.size())
      throw UsageError(std::string(flag) + " has " + std::to_string(v.size()) + " entries, expected " +
                       std::to_string(names.size()));
    return v;
  }
  Polynomial parse(const std::string& text) const { return parse_poly(read_source(text), names); }
};

Context make_context(const Options& o, std::vector<std::string> extra = {}) {
  if (o.poly.empty()) throw UsageError("missing --poly");
  std::vector<std::string> texts{read_source(o.poly)};
  for (auto& t : extra)
    if (!t.empty()) texts.push_back(read_source(t));
  Context c{o, resolve_names(o, texts), Polynomial()};
  c.f = parse_poly(texts[0], c.names);
  return c;
}

SampleConfig sample_config(const Options& o) {
  SampleConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.threads = std::max(1u, o.threads);
  return cfg;
}

SdpSettings sdp_settings(const Options& o) {
  if (!(o.tolerance > 0)) throw UsageError("--tolerance must be positive");
  SdpSettings s;
  s.feasibility_tolerance = o.tolerance;
  s.random_seed = o.seed;
  return s;
}

int exit_code(Status s) {
  switch (s) {
    case Status::certified_yes: return 0;
    case Status::certified_no: return 1;
    case Status::unknown: return 2;
  }
  return 2;
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << "\n";
}

// Prints the result and returns the exit code.
struct Emitter {
  const Options& o;
  std::string command;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  int emit(Json body, int code, const std::string& text) {
    if (o.format == "text") {
      std::cout << text << "\n";
      return code;
    }
    Json out;
    out["command"] = command;
    for (auto& [k, v] : body.items()) out[k] = v;
    if (!o.no_timings) {
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      out["timings"] = {{"total_ms", ms}};
    }
    std::cout << out.dump(2) << "\n";
    return code;
  }

  int verdict(const Verdict& v, std::span<const std::string> names, Json extra = Json::object()) {
    Json body = to_json(v, names);
    if (v.certificate && !o.cert_out.empty()) {
      write_file(o.cert_out, to_json(*v.certificate, names));
      body.erase("certificate");
      body["certificate_path"] = o.cert_out;
    }
    for (auto& [k, x] : extra.items()) body[k] = x;
    std::string text = to_string(v.status) + (v.detail.empty() ? "" : ": " + v.detail);
    return emit(std::move(body), exit_code(v.status), text);
  }
};

std::vector<std::size_t> parse_indices(const std::string& text, std::size_t n, const char* flag) {
  std::vector<std::size_t> out;
  for (const auto& q : parse_rational_list(text)) {
    if (q.get_den() != 1 || q < 1 || q > static_cast<long>(n))
      throw UsageError(std::string(flag) + " entries must be indices in 1.." + std::to_string(n));
    out.push_back(q.get_num().get_ui() - 1);
  }
  return out;
}

int run(const std::string& cmd, const Options& o, const std::string& family) {
  Emitter out{o, cmd};
  if (cmd == "check-hyperbolic") {
    Context c = make_context(o);
    HyperbolicityInstance inst(c.f, c.point(o.e, "--e"));
    return out.verdict(check_hyperbolic(inst, sample_config(o)), c.names);
  }
  if (cmd == "cone-member") {
    Context c = make_context(o);
    HyperbolicityInstance inst(c.f, c.point(o.e, "--e"));
    return out.verdict(cone_membership(inst, c.point(o.a, "--a"), o.closure), c.names);
  }
  if (cmd == "interlaces") {
    if (o.g.empty()) throw UsageError("missing --g");
    Context c = make_context(o, {o.g});
    HyperbolicityInstance inst(c.f, c.point(o.e, "--e"));
    return out.verdict(interlaces(inst, c.parse(o.g), sample_config(o), o.sos_budget, sdp_settings(o),
                                  o.strict),
                       c.names);
  }
  if (cmd == "delta") {
    Context c = make_context(o);
    Polynomial delta(c.f.nvars());
    if (!o.pair.empty()) {
      auto ij = parse_indices(o.pair, c.names.size(), "--pair");
      if (ij.size() != 2) throw UsageError("--pair takes two indices");
      delta = delta_ij(c.f, ij[0], ij[1]);
    } else {
      delta = wronskian_delta(c.f, c.point(o.e, "--e"), c.point(o.a, "--a"));
    }
    std::string text = format_poly(delta, c.names);
    return out.emit({{"delta", text}, {"terms", delta.size()}}, 0, text);
  }
  if (cmd == "sos-certify") {
    Context c = make_context(o, {o.mod});
    if (!o.mod.empty()) return out.verdict(certify_sos_mod_f(c.f, c.parse(o.mod), sdp_settings(o)), c.names);
    return out.verdict(certify_sos(c.f, o.sos_budget, sdp_settings(o)), c.names);
  }
  if (cmd == "sos-cone-member") {
    Context c = make_context(o);
    HyperbolicityInstance inst(c.f, c.point(o.e, "--e"));
    RationalVector a = c.point(o.a, "--a");
    Verdict v = sos_cone_membership(inst, a, o.sos_budget, sdp_settings(o));
    Json extra = Json::object();
    if (inst.degree() >= 2) {
      Polynomial product = directional_derivative(inst.f(), inst.e()) * directional_derivative(inst.f(), a);
      if (!product.is_zero()) {
        Verdict m = certify_sos_mod_f(product, inst.f(), sdp_settings(o));
        extra["mod_f_verdict"] = to_string(m.status);
        extra["relaxations_disagree"] = m.yes() != v.yes();
      }
    }
    return out.verdict(v, c.names, std::move(extra));
  }
  if (cmd == "detrep-build") {
    Context c = make_context(o);
    std::vector<std::size_t> dvars;
    if (o.dvars.empty())
      for (std::size_t i = 0; i < c.names.size(); ++i) dvars.push_back(i);
    else
      dvars = parse_indices(o.dvars, c.names.size(), "--dvars");
    RationalVector e = o.e.empty() ? RationalVector(c.names.size(), Rational(1)) : c.point(o.e, "--e");
    DetrepBuild b = build_detrep_multiaffine(c.f, dvars, e);
    if (!b.ok()) {
      Json w = {{"kind", "pair"},
                {"pair", {b.offending_pair->first + 1, b.offending_pair->second + 1}},
                {"delta", format_poly(b.offending_delta, c.names)}};
      return out.emit({{"result", "NO_REP"}, {"detail", b.detail}, {"witness", w}}, 1, b.detail);
    }
    Json rep = to_json(*b.rep);
    Json body = {{"result", "BUILT"}, {"detail", b.detail}};
    if (!o.cert_out.empty()) {
      write_file(o.cert_out, rep);
      body["representation_path"] = o.cert_out;
    } else {
      body["representation"] = rep;
    }
    return out.emit(std::move(body), 0, b.detail);
  }
  if (cmd == "detrep-verify") {
    if (o.rep.empty()) throw UsageError("missing --rep");
    Context c = make_context(o);
    DeterminantalRep rep = detrep_from_json(Json::parse(read_source(o.rep)));
    std::string reason;
    bool ok = verify_detrep(rep, c.f, &reason);
    Json body = {{"valid", ok}};
    if (!ok) body["reason"] = reason;
    return out.emit(std::move(body), ok ? 0 : 1, ok ? "valid" : "invalid: " + reason);
  }
  if (cmd == "stable-check") {
    Context c = make_context(o);
    return out.verdict(check_multiaffine_stable(c.f, sample_config(o), o.sos_budget, sdp_settings(o)), c.names);
  }
  if (cmd == "vamos-repro") {
    VamosReport r = vamos_reproduction();
    Json body = to_json(r);
    std::string text = "gram_det = " + to_string(r.gram_det) + "; " + to_string(r.conclusion.status);
    return out.emit(std::move(body), exit_code(r.conclusion.status), text);
  }
  if (cmd == "gen") {
    Polynomial p;
    std::vector<std::string> names;
    auto need = [&](std::size_t v, const char* flag) {
      if (v == 0) throw UsageError(std::string("gen ") + family + " needs " + flag);
      return v;
    };
    if (family == "product") p = gen_product(need(o.n, "--n"));
    else if (family == "lorentz") p = gen_lorentz(need(o.n, "--n"));
    else if (family == "elementary-symmetric") p = gen_elementary_symmetric(need(o.n, "--n"), need(o.d, "--d"));
    else if (family == "sym-det") {
      p = gen_sym_det(need(o.d, "--d"));
      names = sym_det_variable_names(o.d);
    } else if (family == "cubic-example") {
      p = gen_cubic_example();
      names = {"x", "y", "z"};
    } else if (family == "vamos") p = gen_vamos();
    else throw UsageError("unknown family '" + family + "'");
    if (names.empty()) names = default_variable_names(p.nvars());
    std::string text = format_poly(p, names);
    if (o.format != "json") {
      std::cout << text << "\n";
      return 0;
    }
    return out.emit({{"family", family}, {"variables", names}, {"polynomial", text}, {"terms", p.size()}}, 0,
                    text);
  }
  throw UsageError("unknown command");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic polynomials, sums of squares and determinantal representations"};
  app.require_subcommand(1);
  Options o;
  std::string family;
  bool format_set = false;

  auto common = [&](CLI::App* s) {
    s->add_option("--poly", o.poly, "polynomial text or @file");
    s->add_option("--vars", o.vars, "comma-separated variable names (default x1..xn)");
    s->add_option("--seed", o.seed, "sampling seed")->capture_default_str();
    s->add_option("--trials", o.trials, "sampled lines or points")->capture_default_str();
    s->add_option("--sos-budget", o.sos_budget, "largest N in (sum x_i^2)^N")->capture_default_str();
    s->add_option("--tolerance", o.tolerance, "SDP feasibility tolerance")->capture_default_str();
    s->add_option("--threads", o.threads, "sampling threads")->capture_default_str();
    s->add_option("--format", o.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->each([&](const std::string&) { format_set = true; });
    s->add_flag("--no-timings", o.no_timings, "omit timings from JSON output");
    s->add_option("--cert-out", o.cert_out, "write the certificate or representation here");
  };
  auto with_e = [&](CLI::App* s) { s->add_option("--e", o.e, "hyperbolicity direction, e.g. 1,0,0"); };
  auto with_a = [&](CLI::App* s) { s->add_option("--a", o.a, "point, e.g. 2,1,0"); };

  auto* s = app.add_subcommand("check-hyperbolic", "sample lines for real-rootedness");
  common(s), with_e(s);
  s = app.add_subcommand("cone-member", "exact membership in the hyperbolicity cone");
  common(s), with_e(s), with_a(s);
  s->add_flag("--closure", o.closure, "test the closed cone");
  s = app.add_subcommand("interlaces", "whether g interlaces f with respect to e");
  common(s), with_e(s);
  s->add_option("--g", o.g, "candidate interlacer");
  s->add_flag("--strict", o.strict, "also report strictness on sampled lines");
  s = app.add_subcommand("delta", "D_e f * D_a f - f * D_e D_a f, or Delta_ij f with --pair");
  common(s), with_e(s), with_a(s);
  s->add_option("--pair", o.pair, "1-based indices i,j");
  s = app.add_subcommand("sos-certify", "sum-of-squares certificate for a form");
  common(s);
  s->add_option("--mod", o.mod, "certify modulo this form");
  s = app.add_subcommand("sos-cone-member", "membership through the sum-of-squares relaxation");
  common(s), with_e(s), with_a(s);
  s = app.add_subcommand("detrep-build", "determinantal representation of a multiaffine form");
  common(s), with_e(s);
  s->add_option("--dvars", o.dvars, "1-based candidate variables");
  s = app.add_subcommand("detrep-verify", "check a representation against a polynomial");
  common(s);
  s->add_option("--rep", o.rep, "representation JSON or @file");
  s = app.add_subcommand("stable-check", "stability test for multiaffine forms");
  common(s);
  s = app.add_subcommand("vamos-repro", "non-SOS certificate for the restricted Vamos Wronskian");
  common(s);
  s = app.add_subcommand("gen", "print a named polynomial family");
  common(s);
  s->add_option("family", family, "product, lorentz, elementary-symmetric, sym-det, cubic-example, vamos")
      ->required();
  s->add_option("--n", o.n, "number of variables");
  s->add_option("--d", o.d, "degree or matrix size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  std::string cmd = app.get_subcommands().front()->get_name();
  if (cmd == "gen" && !format_set) o.format = "text";
  try {
    return run(cmd, o, family);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const DetrepError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
