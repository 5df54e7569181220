// dinv: construct and verify breadth-one D-invariant subspaces and their
// coalescing point schemes from the command line.
//
// Data goes to stdout, diagnostics to stderr. Exit status is 0 when every
// requested check passes, 1 when a check fails and 2 on bad input.

#include "dinv/dinv.hpp"
#include "dinv/random.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace dinv;

constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

ParamTable require_params(const AnySpec& spec, const std::string& what) {
  if (const auto* p = std::get_if<ParamTable>(&spec)) return *p;
  throw std::invalid_argument(what + " needs a parameter table spec ({\"d\", \"n\", \"a\"})");
}

std::vector<Rational> parse_point(const std::string& text, std::size_t d) {
  if (text.empty()) return std::vector<Rational>(d, Rational(0));
  std::vector<Rational> z;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) z.push_back(parse_rational(item));
  if (z.size() != d) {
    throw std::invalid_argument("z0 has " + std::to_string(z.size()) + " coordinates, expected " + std::to_string(d));
  }
  return z;
}

Scheme parse_scheme(const std::string& s) { return s == "a" ? Scheme::A : Scheme::B; }

// Test function from --f (file holding JSON or text) or --f-expr (text).
Polynomial load_function(const std::string& path, const std::string& expr, std::size_t d) {
  if (!expr.empty()) return parse_polynomial(expr, d);
  if (path.empty()) throw std::invalid_argument("a test function is required (--f FILE or --f-expr TEXT)");
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Polynomial f = polynomial_from_json(Json::parse(text));
    if (f.dim() != d) throw std::invalid_argument("test function dimension does not match the parameter table");
    return f;
  }
  return parse_polynomial(text, d);
}

std::string label_for(const std::string& source) { return source == "general" ? "q" : "L"; }

// ---------------------------------------------------------------------------

struct BasisArgs {
  std::string source = "recursive";
  std::string spec;
  std::string out;
  bool pretty = false;
};

int run_basis(const BasisArgs& args) {
  const AnySpec spec = spec_from_json(read_json_file(args.spec));
  BasisSequence basis;
  if (args.source == "general") {
    basis = std::holds_alternative<GeneralSpec>(spec) ? build_general(std::get<GeneralSpec>(spec))
                                                      : build_general(specialize(std::get<ParamTable>(spec)));
  } else if (args.source == "explicit") {
    basis = build_explicit(require_params(spec, "--source explicit"));
  } else {
    basis = build_recursive(require_params(spec, "--source recursive"));
  }

  std::string text;
  if (args.pretty) {
    const std::string label = label_for(args.source);
    for (std::size_t k = 0; k < basis.size(); ++k) text += label + std::to_string(k) + " = " + render(basis[k]) + "\n";
  } else {
    text = to_json(basis).dump(2) + "\n";
  }
  write_output(text, args.out);
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string what;
  std::string spec;
  std::string basis;
  unsigned random = 0;
  unsigned m_max = 20;
  unsigned oracle_max = 12;
  unsigned r_max = 8;
  unsigned i_max = 8;
};

Json verify_equivalence_one(const ParamTable& params) {
  const BasisSequence recursive = build_recursive(params);
  const BasisSequence explicit_form = build_explicit(params);
  const BasisSequence general = build_general(specialize(params));
  const bool rec_exp = recursive == explicit_form;
  const bool rec_gen = recursive == general;
  return Json{{"d", params.d()},
              {"n", params.n()},
              {"recursive_eq_explicit", rec_exp},
              {"recursive_eq_general", rec_gen},
              {"pass", rec_exp && rec_gen}};
}

Json verify_closure_one(const AnySpec& spec, const std::string& basis_path) {
  const std::optional<BasisSequence> given =
      basis_path.empty() ? std::nullopt : std::optional(basis_from_json(read_json_file(basis_path)));
  if (const auto* params = std::get_if<ParamTable>(&spec)) {
    const BasisSequence basis = given ? *given : build_recursive(*params);
    Json out = to_json(check_closure(basis, *params));
    if (basis.size() != params->n() + 1) {
      out["pass"] = false;
      out["error"] = "basis has " + std::to_string(basis.size()) + " elements, expected " +
                     std::to_string(params->n() + 1);
    }
    return out;
  }
  const BasisSequence basis = given ? *given : build_general(std::get<GeneralSpec>(spec));
  return to_json(check_lower_closure(basis));
}

std::vector<ParamTable> random_instances(unsigned count) {
  Rng rng(seed_from_env());
  std::vector<ParamTable> out;
  for (unsigned t = 0; t < count; ++t) {
    const std::size_t d = uniform(rng, 2, 4);
    const unsigned n = uniform(rng, 2, 7);
    out.push_back(random_params(rng, d, n));
  }
  return out;
}

int run_verify(const VerifyArgs& args) {
  Json report{{"what", args.what}};
  bool pass = true;

  if (args.what == "identities") {
    Json lemmas = Json::array();
    for (const auto& rep : {scan_power_sums(args.m_max, true), scan_power_sums(args.m_max, false),
                            scan_vandermonde(args.oracle_max), scan_falling_factorial(args.r_max, args.i_max)}) {
      std::cerr << (rep.pass() ? "PASS " : "FAIL ") << rep.name << " (" << rep.ranges << ", " << rep.checked
                << " cases)\n";
      pass = pass && rep.pass();
      lemmas.push_back(to_json(rep));
    }
    report["lemmas"] = std::move(lemmas);
  } else if (args.what == "breadth") {
    if (args.spec.empty()) throw std::invalid_argument("--what breadth needs --spec");
    const AnySpec spec = spec_from_json(read_json_file(args.spec));
    const BasisSequence basis = !args.basis.empty() ? basis_from_json(read_json_file(args.basis))
                                : std::holds_alternative<GeneralSpec>(spec)
                                    ? build_general(std::get<GeneralSpec>(spec))
                                    : build_recursive(std::get<ParamTable>(spec));
    const std::size_t b = breadth(basis);
    std::vector<int> degs = degrees(basis);
    report["breadth"] = b;
    report["degrees"] = degs;
    pass = b == 1;
    std::cerr << "breadth = " << b << "\n";
  } else if (args.what == "equivalence" || args.what == "closure") {
    std::vector<AnySpec> specs;
    if (!args.spec.empty()) {
      specs.push_back(spec_from_json(read_json_file(args.spec)));
    } else if (args.random > 0) {
      for (auto& p : random_instances(args.random)) specs.emplace_back(std::move(p));
      report["seed"] = seed_from_env();
    } else {
      throw std::invalid_argument("--what " + args.what + " needs --spec or --random N");
    }
    Json cases = Json::array();
    for (const auto& spec : specs) {
      Json one = args.what == "equivalence" ? verify_equivalence_one(require_params(spec, "--what equivalence"))
                                            : verify_closure_one(spec, args.basis);
      pass = pass && one.at("pass").get<bool>();
      cases.push_back(std::move(one));
    }
    std::cerr << args.what << ": " << cases.size() << " instance(s), " << (pass ? "all pass" : "FAILURES") << "\n";
    report["cases"] = std::move(cases);
  } else {
    throw std::invalid_argument("unknown --what " + args.what);
  }

  report["pass"] = pass;
  std::cout << report.dump(2) << "\n";
  return pass ? 0 : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct PointsArgs {
  std::string scheme = "a";
  std::string spec;
  std::string z0;
  std::string h;
};

int run_points(const PointsArgs& args) {
  const ParamTable params = require_params(spec_from_json(read_json_file(args.spec)), "points");
  const SymbolicPointSet pts = make_points(parse_scheme(args.scheme), params, parse_point(args.z0, params.d()));
  const Json out = args.h.empty() ? to_json(pts) : numeric_points_to_json(pts, parse_rational(args.h));
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct LimitArgs {
  std::string spec;
  std::string f;
  std::string f_expr;
  unsigned m = 0;
  std::string scheme = "a";
  std::string z0;
  std::string h0 = "1/4";
  unsigned steps = 12;
};

int run_limit(const LimitArgs& args) {
  const ParamTable params = require_params(spec_from_json(read_json_file(args.spec)), "limit");
  if (args.m > params.n()) throw std::invalid_argument("m exceeds n = " + std::to_string(params.n()));
  const Polynomial f = load_function(args.f, args.f_expr, params.d());
  const SymbolicPointSet pts = make_points(parse_scheme(args.scheme), params, parse_point(args.z0, params.d()));
  const ExpansionReport rep = expansion_check(f, args.m, pts);
  std::cout << to_json(rep).dump(2) << "\n";
  return rep.pass() ? 0 : kCheckFailed;
}

int run_sweep(const LimitArgs& args) {
  const ParamTable params = require_params(spec_from_json(read_json_file(args.spec)), "sweep");
  if (args.m > params.n()) throw std::invalid_argument("m exceeds n = " + std::to_string(params.n()));
  const Polynomial f = load_function(args.f, args.f_expr, params.d());
  const SymbolicPointSet pts = make_points(parse_scheme(args.scheme), params, parse_point(args.z0, params.d()));
  std::cout << sweep_to_csv(sweep(f, args.m, pts, to_double(parse_rational(args.h0)), args.steps));
  return 0;
}

// ---------------------------------------------------------------------------

// The worked example: d = 2, n = 4, a_{2,2} = 2, a_{3,2} = 3, a_{4,2} = 4, z0 = 0.
int run_example1() {
  ParamTable params(2, 4);
  params.set(2, 2, 2);
  params.set(3, 2, 3);
  params.set(4, 2, 4);
  const std::vector<Rational> origin(2, Rational(0));

  const std::vector<std::string> expected_basis{
      "1", "x1", "1/2*x1^2 + 2*x2", "1/6*x1^3 + 2*x1*x2 + 3*x2",
      "1/24*x1^4 + x1^2*x2 + 3*x1*x2 + 2*x2^2 + 4*x2"};
  // Second coordinates; the first is always i*h.
  const std::vector<std::string> expected_a{"0", "4*h^4 + 3*h^3 + 2*h^2", "64*h^4 + 24*h^3 + 8*h^2",
                                            "324*h^4 + 81*h^3 + 18*h^2", "1024*h^4 + 192*h^3 + 32*h^2"};
  const std::vector<std::string> expected_b{"0", "0", "4*h^2", "18*h^3 + 12*h^2", "96*h^4 + 72*h^3 + 24*h^2"};

  bool pass = true;
  Json out;

  const BasisSequence recursive = build_recursive(params);
  const BasisSequence explicit_form = build_explicit(params);
  Json basis = Json::array();
  bool basis_ok = recursive == explicit_form;
  for (std::size_t k = 0; k < recursive.size(); ++k) {
    basis.push_back(render(recursive[k]));
    basis_ok = basis_ok && recursive[k] == parse_polynomial(expected_basis[k], 2);
  }
  out["params"] = to_json(params);
  out["basis"] = std::move(basis);
  out["basis_match"] = basis_ok;
  pass = pass && basis_ok;

  const std::vector<std::string> h{"h"};
  Json reports = Json::array();
  for (Scheme scheme : {Scheme::A, Scheme::B}) {
    const SymbolicPointSet pts = make_points(scheme, params, origin);
    const auto& expected = scheme == Scheme::A ? expected_a : expected_b;
    bool points_ok = true;
    for (unsigned i = 0; i < pts.points.size(); ++i) {
      points_ok = points_ok && pts.points[i][0] == Polynomial::monomial(1, {1}, Rational(i)) &&
                  pts.points[i][1] == parse_polynomial(expected[i], h);
    }
    const std::string key = std::string("points_") + to_string(scheme);
    out[key] = to_json(pts);
    out[key + "_match"] = points_ok;
    pass = pass && points_ok;

    for (unsigned m = 0; m <= params.n(); ++m) {
      // x1^5 x2^2 exercises every basis element's differential part.
      const Polynomial f = parse_polynomial("x1^5*x2^2 + x1^4 + x2^3 + x1*x2", 2);
      Json rep = to_json(expansion_check(f, m, pts, recursive[m]));
      rep["scheme"] = to_string(scheme);
      pass = pass && rep.at("pass").get<bool>();
      reports.push_back(std::move(rep));
    }
  }
  out["expansion_reports"] = std::move(reports);
  out["pass"] = pass;
  std::cout << out.dump(2) << "\n";
  if (!pass) std::cerr << "example1: mismatch\n";
  return pass ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Breadth-one D-invariant subspaces and coalescing point schemes"};
  app.require_subcommand(1);

  BasisArgs basis_args;
  auto* basis = app.add_subcommand("basis", "Build a basis L_0..L_n or q_{n,0..b_n}");
  basis->add_option("--source", basis_args.source, "Construction")
      ->check(CLI::IsMember({"recursive", "explicit", "general"}));
  basis->add_option("--spec", basis_args.spec, "Parameter table or general spec JSON")->required();
  basis->add_option("--out", basis_args.out, "Output file (default stdout)");
  basis->add_flag("--pretty", basis_args.pretty, "Human-readable polynomials instead of JSON");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run structural or identity checks");
  verify->add_option("--what", verify_args.what, "Check to run")
      ->required()
      ->check(CLI::IsMember({"closure", "equivalence", "breadth", "identities"}));
  verify->add_option("--spec", verify_args.spec, "Spec JSON");
  verify->add_option("--basis", verify_args.basis, "Basis JSON to check instead of building one");
  verify->add_option("--random", verify_args.random, "Check N random parameter tables (seed: DINV_SEED)");
  verify->add_option("--m-max", verify_args.m_max, "Power-sum scan bound");
  verify->add_option("--oracle-max", verify_args.oracle_max, "Vandermonde scan bound");
  verify->add_option("--r-max", verify_args.r_max, "Falling-factorial scan bound on r");
  verify->add_option("--i-max", verify_args.i_max, "Falling-factorial scan bound on i");

  PointsArgs points_args;
  auto* points = app.add_subcommand("points", "Emit a coalescing point scheme");
  points->set_help_flag("--help", "Print this help message and exit");
  points->add_option("--scheme", points_args.scheme, "a or b")->check(CLI::IsMember({"a", "b"}));
  points->add_option("--spec", points_args.spec, "Parameter table JSON")->required();
  points->add_option("--z0", points_args.z0, "Base point, comma-separated rationals (default origin)");
  points->add_option("--h", points_args.h, "Evaluate at this h instead of printing polynomials in h");

  LimitArgs limit_args;
  auto* limit = app.add_subcommand("limit", "Exact h-expansion check of one order m");
  LimitArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Floating-point h-halving sweep as CSV");
  for (auto [cmd, a] : {std::pair{limit, &limit_args}, std::pair{sweep_cmd, &sweep_args}}) {
    cmd->add_option("--spec", a->spec, "Parameter table JSON")->required();
    cmd->add_option("--f", a->f, "Test function file (JSON or text)");
    cmd->add_option("--f-expr", a->f_expr, "Test function as text, e.g. \"x1^5*x2^2\"");
    cmd->add_option("--m", a->m, "Order m")->required();
    cmd->add_option("--scheme", a->scheme, "a or b")->check(CLI::IsMember({"a", "b"}));
    cmd->add_option("--z0", a->z0, "Base point, comma-separated rationals (default origin)");
  }
  sweep_cmd->add_option("--h0", sweep_args.h0, "Initial h (rational)");
  sweep_cmd->add_option("--steps", sweep_args.steps, "Number of halvings");

  auto* example1 = app.add_subcommand("example1", "Reproduce the worked d=2, n=4 example");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*basis) return run_basis(basis_args);
    if (*verify) return run_verify(verify_args);
    if (*points) return run_points(points_args);
    if (*limit) return run_limit(limit_args);
    if (*sweep_cmd) return run_sweep(sweep_args);
    if (*example1) return run_example1();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
