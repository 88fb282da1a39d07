#include "diffpow/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <sstream>

#include "diffpow/analysis.hpp"
#include "diffpow/closure.hpp"
#include "diffpow/oracle.hpp"
#include "diffpow/staircase.hpp"

namespace diffpow::cli {

namespace {

std::string tuple_string(const ExponentVector& v) {
  std::string s = "(";
  for (int i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string rational_string(const Rational& r) {
  return r.is_integer() ? std::to_string(r.num)
                        : std::to_string(r.num) + "/" + std::to_string(r.den);
}

struct Options {
  bool json = false;
  bool trace = false;
  std::optional<int> vars;
};

struct SubArgs {
  std::string ideal_text;
  std::int64_t n = 0;
  std::int64_t nmax = 8;
  std::int64_t cap = 64;
  bool cap_given = false;
  bool linear = false;
  bool witness = false;
  std::string element;
  std::string direction;
  std::string query;
  std::string format = "ascii";
  std::string poly_text;
  std::string box_text;
  std::string extent_text;
  std::string powers_text;
};

/// Comma-separated non-negative integers ("8,8,8").
std::vector<std::int64_t> parse_csv_ints(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string piece = text.substr(pos, next - pos);
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(std::string(what) + " expects comma-separated non-negative integers",
                       pos);
    if (piece.size() > 10) throw ParseError(std::string(what) + " entry too large", pos);
    out.push_back(std::stoll(piece));
    pos = next + 1;
  }
  return out;
}

IdealExpression parse_input(const Options& opt, const std::string& text) {
  return parse_ideal(text, opt.vars);
}

nlohmann::json rational_json(const Rational& r) {
  return nlohmann::json{{"num", r.num}, {"den", r.den}};
}

void emit_ideal_result(const Options& opt, std::ostream& out, const IdealExpression& in,
                       const MonomialIdeal& result, const char* extra_key,
                       const nlohmann::json& extra_value) {
  if (opt.json) {
    nlohmann::json j = ideal_to_json(result);
    if (extra_key) j[extra_key] = extra_value;
    out << j.dump() << "\n";
  } else {
    out << print_ideal(result, in.convention) << "\n";
  }
}

int cmd_compute(const Options& opt, const SubArgs& a, std::ostream& out) {
  const IdealExpression in = parse_input(opt, a.ideal_text);
  if (!opt.trace) {
    emit_ideal_result(opt, out, in, diffpower(in.ideal, a.n), "n", a.n);
    return 0;
  }
  const DiffPowerTrace trace = diffpower_trace(in.ideal, a.n);
  if (opt.json) {
    nlohmann::json j = ideal_to_json(trace.result);
    j["n"] = a.n;
    j["components"] = nlohmann::json::array();
    j["component_powers"] = nlohmann::json::array();
    for (const PurePowerIdeal& q : trace.decomposition.components)
      j["components"].push_back(ideal_to_json(q.to_ideal()));
    for (const MonomialIdeal& p : trace.component_powers)
      j["component_powers"].push_back(ideal_to_json(p));
    out << j.dump() << "\n";
    return 0;
  }
  out << "decompose:";
  for (std::size_t i = 0; i < trace.decomposition.components.size(); ++i)
    out << (i ? " ∩ " : " ")
        << print_ideal(trace.decomposition.components[i].to_ideal(), in.convention);
  out << "\n";
  for (std::size_t i = 0; i < trace.component_powers.size(); ++i)
    out << "power " << i + 1 << ": " << print_ideal(trace.component_powers[i], in.convention)
        << "\n";
  out << print_ideal(trace.result, in.convention) << "\n";
  return 0;
}

int cmd_power(const Options& opt, const SubArgs& a, std::ostream& out) {
  const IdealExpression in = parse_input(opt, a.ideal_text);
  emit_ideal_result(opt, out, in, ordinary_power(in.ideal, a.n), "n", a.n);
  return 0;
}

int cmd_decompose(const Options& opt, const SubArgs& a, std::ostream& out) {
  const IdealExpression in = parse_input(opt, a.ideal_text);
  const Decomposition dec = decompose(in.ideal);
  if (opt.json) {
    nlohmann::json j = ideal_to_json(in.ideal);
    j["components"] = nlohmann::json::array();
    for (const PurePowerIdeal& q : dec.components)
      j["components"].push_back(ideal_to_json(q.to_ideal()));
    out << j.dump() << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < dec.components.size(); ++i)
    out << (i ? " ∩ " : "") << print_ideal(dec.components[i].to_ideal(), in.convention);
  out << "\n";
  return 0;
}

int cmd_radical(const Options& opt, const SubArgs& a, std::ostream& out, bool as_closure) {
  const IdealExpression in = parse_input(opt, a.ideal_text);
  const MonomialIdeal result = as_closure ? differential_closure(in.ideal) : radical(in.ideal);
  emit_ideal_result(opt, out, in, result, "source", ideal_to_json(in.ideal));
  return 0;
}

int cmd_witness(const Options& opt, const SubArgs& a, std::ostream& out) {
  const IdealExpression in = parse_input(opt, a.ideal_text);
  const ExponentVector r = parse_monomial(a.element, in.d);
  const ClosureWitness cert = witness_probe(in.ideal, r, a.nmax);
  if (opt.json) {
    nlohmann::json checks = nlohmann::json::array();
    for (std::int64_t n = 1; n <= cert.n_checked; ++n)
      checks.push_back(nlohmann::json{{"n", n}, {"member", true}, {"oracle", n <= 4}});
    nlohmann::json j = ideal_to_json(in.ideal);
    j["element"] = exponents_to_json(cert.r);
    j["k"] = cert.k;
    j["c"] = exponents_to_json(cert.c);
    j["n_checked"] = cert.n_checked;
    j["checks"] = std::move(checks);
    out << j.dump() << "\n";
    return 0;
  }
  out << "element: " << print_monomial(cert.r, in.convention) << "\n";
  out << "k: " << cert.k << "\n";
  out << "c: " << print_monomial(cert.c, in.convention) << "\n";
  out << "verified: c r^n in diffpower for n = 1.." << cert.n_checked
      << " (brute force to " << std::min<std::int64_t>(cert.n_checked, 4) << ")\n";
  return 0;
}

void emit_principality(const Options& opt, std::ostream& out, const IdealExpression& in,
                       const PrincipalityReport& report) {
  if (opt.json) {
    nlohmann::json j = ideal_to_json(report.ideal);
    j["n_bound"] = report.n_bound;
    j["generator_at_bound"] = exponents_to_json(report.gen_at_bound);
    j["n_min"] = report.n_min ? nlohmann::json(*report.n_min) : nlohmann::json();
    j["generator"] = report.principal_gen_at_n_min
                         ? exponents_to_json(*report.principal_gen_at_n_min)
                         : nlohmann::json();
    j["search_cap"] = report.search_cap;
    out << j.dump() << "\n";
    return;
  }
  out << "ideal: " << print_ideal(report.ideal, in.convention) << "\n";
  out << "N: " << report.n_bound << "\n";
  out << "generator at N: " << print_monomial(report.gen_at_bound, in.convention) << "\n";
  if (report.n_min) {
    out << "N_min: " << *report.n_min << "\n";
    out << "generator at N_min: "
        << print_monomial(*report.principal_gen_at_n_min, in.convention) << "\n";
  } else {
    out << "N_min: not found up to cap " << report.search_cap << "\n";
  }
}

int cmd_principality(const Options& opt, const SubArgs& a, std::ostream& out) {
  const IdealExpression in = parse_input(opt, a.ideal_text);
  if (in.d == 2) {
    emit_principality(opt, out, in, principality_2d(in.ideal));
    return 0;
  }
  if (in.d == 3) {
    emit_principality(opt, out, in,
                      principality_3d(in.ideal, a.cap_given
                                                    ? std::optional<std::int64_t>(a.cap)
                                                    : std::nullopt));
    return 0;
  }
  // No closed form beyond three variables: search up to the cap.
  const auto found = nmin_search(in.ideal, a.cap);
  PrincipalityReport report{in.ideal,
                            0,
                            ExponentVector::zero(in.d),
                            found ? std::optional<std::int64_t>(found->first) : std::nullopt,
                            found ? std::optional<ExponentVector>(found->second) : std::nullopt,
                            a.cap};
  if (opt.json) {
    nlohmann::json j = ideal_to_json(in.ideal);
    j["n_bound"] = nullptr;
    j["n_min"] = report.n_min ? nlohmann::json(*report.n_min) : nlohmann::json();
    j["generator"] = report.principal_gen_at_n_min
                         ? exponents_to_json(*report.principal_gen_at_n_min)
                         : nlohmann::json();
    j["search_cap"] = report.search_cap;
    out << j.dump() << "\n";
    return 0;
  }
  out << "ideal: " << print_ideal(in.ideal, in.convention) << "\n";
  out << "N: no closed-form bound for d = " << in.d << "\n";
  if (report.n_min) {
    out << "N_min: " << *report.n_min << "\n";
    out << "generator at N_min: "
        << print_monomial(*report.principal_gen_at_n_min, in.convention) << "\n";
  } else {
    out << "N_min: not found up to cap " << report.search_cap << "\n";
  }
  return 0;
}

int cmd_nmin(const Options& opt, const SubArgs& a, std::ostream& out) {
  const IdealExpression in = parse_input(opt, a.ideal_text);
  const auto found =
      nmin_search(in.ideal, a.cap, a.linear ? SearchMode::Linear : SearchMode::Binary);
  if (opt.json) {
    nlohmann::json j = ideal_to_json(in.ideal);
    j["cap"] = a.cap;
    j["n_min"] = found ? nlohmann::json(found->first) : nlohmann::json();
    j["generator"] = found ? exponents_to_json(found->second) : nlohmann::json();
    out << j.dump() << "\n";
    return 0;
  }
  if (found) {
    out << "N_min: " << found->first << "\n";
    out << "generator: " << print_monomial(found->second, in.convention) << "\n";
  } else {
    out << "N_min: not found up to cap " << a.cap << "\n";
  }
  return 0;
}

int cmd_contain(const Options& opt, const SubArgs& a, std::ostream& out) {
  const IdealExpression in = parse_input(opt, a.ideal_text);
  const auto pure = PurePowerIdeal::from_ideal(in.ideal);
  const auto principal = in.ideal.principal_generator();

  if (a.direction == "down") {
    if (!pure || pure->is_zero_ideal())
      throw PreconditionError("direction 'down' needs an ideal generated by pure powers");
    const LowerContainment lc = lower_containment_c(*pure, a.n);
    if (opt.json) {
      nlohmann::json j = ideal_to_json(in.ideal);
      j["n"] = a.n;
      j["direction"] = "ordinary_in_diff";
      j["c"] = rational_json(lc.report.c);
      j["omega"] = exponents_to_json(lc.omega);
      j["diff_level"] = lc.report.diff_level;
      j["verified"] = lc.report.verified;
      out << j.dump() << "\n";
      return 0;
    }
    out << "direction: I^n in diffpower(I, n + c)\n";
    out << "c: " << lc.c << " via omega " << tuple_string(lc.omega) << "\n";
    out << "checked: I^" << a.n << " in diffpower(I, " << lc.report.diff_level << ")\n";
    out << "verified: " << (lc.report.verified ? "true" : "false") << "\n";
    return 0;
  }

  // direction "up": pure powers use the integer multiplier, principal
  // ideals the exact rational one. (A single-variable principal ideal is
  // pure-power and takes the first branch.)
  ContainmentReport report = [&] {
    if (pure && !pure->is_zero_ideal()) return upper_containment_check(*pure, a.n);
    if (principal && !principal->is_zero())
      return principal_containment_check(*principal, a.n);
    throw PreconditionError(
        "direction 'up' needs a pure-power or principal monomial ideal");
  }();
  if (opt.json) {
    nlohmann::json j = ideal_to_json(in.ideal);
    j["n"] = a.n;
    j["direction"] = "diff_in_ordinary";
    j["c"] = rational_json(report.c);
    j["diff_level"] = report.diff_level;
    j["verified"] = report.verified;
    out << j.dump() << "\n";
    return 0;
  }
  out << "direction: diffpower(I, c n) in I^n\n";
  out << "c: " << rational_string(report.c) << "\n";
  out << "checked: diffpower(I, " << report.diff_level << ") in I^" << a.n << "\n";
  out << "verified: " << (report.verified ? "true" : "false") << "\n";
  return 0;
}

int cmd_no_uniform(const Options& opt, const SubArgs& a, std::ostream& out) {
  const NoUniformDemo demo =
      no_uniform_polynomial_demo(parse_csv_ints(a.poly_text, "--poly"));
  if (opt.json) {
    nlohmann::json j = ideal_to_json(demo.ideal);
    j["p_coeffs"] = demo.p_coeffs;
    j["c"] = demo.c;
    j["n"] = demo.n;
    j["p_at_n"] = demo.p_at_n;
    j["witness"] = exponents_to_json(demo.witness);
    j["witness_in_diffpower"] = demo.witness_in_diffpower;
    j["witness_in_ordinary_power"] = demo.witness_in_ordinary_power;
    out << j.dump() << "\n";
    return 0;
  }
  out << "p coefficients (low to high):";
  for (std::int64_t v : demo.p_coeffs) out << " " << v;
  out << "\n";
  out << "c = p(2): " << demo.c << "\n";
  out << "ideal: " << print_ideal(demo.ideal, NamingConvention::Letters) << "\n";
  out << "first failing n: " << demo.n << " (p(n) = " << demo.p_at_n << ")\n";
  out << "witness: " << print_monomial(demo.witness, NamingConvention::Letters) << "\n";
  out << "witness in diffpower(I, p(n)): " << (demo.witness_in_diffpower ? "true" : "false")
      << "\n";
  out << "witness in I^n: " << (demo.witness_in_ordinary_power ? "true" : "false") << "\n";
  return 0;
}

int cmd_oracle(const Options& opt, const SubArgs& a, std::ostream& out) {
  const IdealExpression in = parse_input(opt, a.ideal_text);
  if (!a.query.empty()) {
    const ExponentVector q = parse_monomial(a.query, in.d);
    const auto counterexample =
        oracle::membership_counterexample(oracle::Polynomial::monomial(q), in.ideal, a.n);
    if (opt.json) {
      nlohmann::json j = ideal_to_json(in.ideal);
      j["n"] = a.n;
      j["query"] = exponents_to_json(q);
      j["member"] = !counterexample.has_value();
      if (counterexample && a.witness) {
        j["witness"] = nlohmann::json{{"operator", exponents_to_json(counterexample->op)},
                                      {"term", exponents_to_json(counterexample->term)},
                                      {"coeff", counterexample->coeff.str()}};
      } else {
        j["witness"] = nullptr;
      }
      out << j.dump() << "\n";
      return 0;
    }
    out << "query: " << print_monomial(q, in.convention) << "\n";
    out << "member of diffpower(I, " << a.n << "): "
        << (counterexample ? "false" : "true") << "\n";
    if (counterexample && a.witness) {
      out << "witness operator: " << tuple_string(counterexample->op) << "\n";
      out << "witness term: " << counterexample->coeff.str() << " "
          << print_monomial(counterexample->term, in.convention) << "\n";
    }
    return 0;
  }

  const ExponentVector box = a.box_text.empty()
                                 ? oracle::default_box(in.ideal, a.n)
                                 : ExponentVector(parse_csv_ints(a.box_text, "--box"));
  const MonomialIdeal result = oracle::bruteforce_diffpower(in.ideal, a.n, box);
  if (opt.json) {
    nlohmann::json j = ideal_to_json(result);
    j["n"] = a.n;
    j["box"] = exponents_to_json(box);
    out << j.dump() << "\n";
    return 0;
  }
  out << "box: " << tuple_string(box) << "\n";
  out << print_ideal(result, in.convention) << "\n";
  return 0;
}

int cmd_staircase(const Options& opt, const SubArgs& a, std::ostream& out) {
  const IdealExpression in = parse_input(opt, a.ideal_text);
  StaircaseRequest request{in.ideal,
                           {},
                           a.format == "svg" ? StaircaseRequest::Format::Svg
                                             : StaircaseRequest::Format::Ascii,
                           ExponentVector::zero(2)};
  if (!a.powers_text.empty()) {
    for (std::int64_t n : parse_csv_ints(a.powers_text, "--power")) {
      if (n < 1) throw PreconditionError("--power entries must be >= 1");
      request.overlays.emplace_back("diffpower n=" + std::to_string(n),
                                    diffpower(in.ideal, n));
    }
  }
  if (a.extent_text.empty()) {
    ExponentVector required = staircase_required_extent(request);
    request.extent = ExponentVector({required[0] + 2, required[1] + 2});
  } else {
    const auto extent = parse_csv_ints(a.extent_text, "--extent");
    if (extent.size() != 2) throw PreconditionError("--extent needs exactly two entries");
    request.extent = ExponentVector(extent);
  }
  const std::string rendered = render_staircase(request);
  if (opt.json) {
    nlohmann::json j = ideal_to_json(in.ideal);
    j["extent"] = exponents_to_json(request.extent);
    j["format"] = a.format;
    j["rows"] = nlohmann::json::array();
    std::istringstream lines(rendered);
    for (std::string line; std::getline(lines, line);) j["rows"].push_back(line);
    out << j.dump() << "\n";
    return 0;
  }
  out << rendered;
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact differential powers of monomial ideals"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "emit JSON instead of text");
  app.add_flag("--trace", opt.trace, "show the decomposition and per-component powers");
  int vars_value = 0;
  auto* vars_opt = app.add_option("--vars", vars_value, "ambient variable count override");

  SubArgs a;
  auto add_ideal = [&](CLI::App* sub) {
    sub->add_option("ideal", a.ideal_text, "monomial ideal, e.g. \"(x^2 y^5, x^5 y)\"")
        ->required();
    sub->fallthrough();
  };
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("-n,--n", a.n, "power index")
        ->required()
        ->check(CLI::Range(std::int64_t{1}, kMaxExponent));
  };

  auto* compute = app.add_subcommand("compute", "n-th differential power");
  add_n(compute);
  add_ideal(compute);

  auto* power = app.add_subcommand("power", "n-th ordinary power");
  add_n(power);
  add_ideal(power);

  auto* dec = app.add_subcommand("decompose", "pure-power (irreducible) decomposition");
  add_ideal(dec);

  auto* rad = app.add_subcommand("radical", "radical of the ideal");
  add_ideal(rad);

  auto* clo = app.add_subcommand("closure", "differential closure of the ideal");
  add_ideal(clo);

  auto* wit = app.add_subcommand("witness", "closure-membership certificate for an element");
  wit->add_option("--element", a.element, "monomial in the radical")->required();
  wit->add_option("--nmax", a.nmax, "levels to verify")->check(CLI::Range(std::int64_t{1}, kMaxExponent));
  add_ideal(wit);

  auto* pri = app.add_subcommand("principality", "when differential powers become principal");
  auto* pri_cap = pri->add_option("--cap", a.cap, "search cap")->check(CLI::Range(std::int64_t{1}, kMaxExponent));
  add_ideal(pri);

  auto* nmin = app.add_subcommand("nmin", "least n with a principal differential power");
  nmin->add_option("--cap", a.cap, "search cap")->check(CLI::Range(std::int64_t{1}, kMaxExponent));
  nmin->add_flag("--linear", a.linear, "linear scan instead of binary search");
  add_ideal(nmin);

  auto* con = app.add_subcommand("contain", "ordinary vs differential power containment");
  con->add_option("--dir", a.direction, "up: diffpower in ordinary; down: ordinary in diffpower")
      ->required()
      ->check(CLI::IsMember({"up", "down"}));
  add_n(con);
  add_ideal(con);

  auto* nou = app.add_subcommand("no-uniform", "refute a uniform containment polynomial");
  nou->add_option("--poly", a.poly_text, "polynomial coefficients, low to high (e.g. 0,2)")
      ->required();
  nou->fallthrough();

  auto* ora = app.add_subcommand("oracle", "brute-force differential power or membership");
  add_n(ora);
  ora->add_option("--box", a.box_text, "search box, e.g. 8,8,8");
  ora->add_option("--query", a.query, "monomial to test for membership");
  ora->add_flag("--witness", a.witness, "print the failing operator and term");
  add_ideal(ora);

  auto* sta = app.add_subcommand("staircase", "exponent-set diagram for two variables");
  sta->add_option("--extent", a.extent_text, "lattice extent, e.g. 6,6");
  sta->add_option("--power", a.powers_text, "overlay differential powers, e.g. 2,3");
  sta->add_option("--format", a.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  add_ideal(sta);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? 0 : 1;
  }
  if (vars_opt->count() > 0) opt.vars = vars_value;
  a.cap_given = pri_cap->count() > 0;

  try {
    if (*compute) return cmd_compute(opt, a, out);
    if (*power) return cmd_power(opt, a, out);
    if (*dec) return cmd_decompose(opt, a, out);
    if (*rad) return cmd_radical(opt, a, out, false);
    if (*clo) return cmd_radical(opt, a, out, true);
    if (*wit) return cmd_witness(opt, a, out);
    if (*pri) return cmd_principality(opt, a, out);
    if (*nmin) return cmd_nmin(opt, a, out);
    if (*con) return cmd_contain(opt, a, out);
    if (*nou) return cmd_no_uniform(opt, a, out);
    if (*ora) return cmd_oracle(opt, a, out);
    if (*sta) return cmd_staircase(opt, a, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand selected\n";
  return 1;
}

}  // namespace diffpow::cli
