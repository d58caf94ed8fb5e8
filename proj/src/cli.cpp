#include "jocp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>

#include "jocp/group.hpp"
#include "jocp/sweep.hpp"

namespace jocp::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<BigInt> parse_poly_list(const std::string& s, std::size_t expected) {
  std::vector<BigInt> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in --poly");
    try {
      out.push_back(parse_bigint(item.substr(b, e - b + 1)));
    } catch (const std::invalid_argument& ex) {
      throw UsageError(std::string("--poly: ") + ex.what());
    }
  }
  if (out.size() != expected) {
    throw UsageError("--poly needs exactly " + std::to_string(expected) +
                     " comma-separated integers (one per degree 1..m/2)");
  }
  return out;
}

void check_even_m(long m) {
  if (m < 2 || m % 2 != 0) {
    throw UsageError("--m must be an even integer >= 2");
  }
}

void check_prime(long p) {
  if (!is_prime(p)) {
    throw UsageError("--prime must be a prime number");
  }
}

ElementSpec make_spec(long m, const std::string& poly) {
  check_even_m(m);
  return ElementSpec::make(m, parse_poly_list(poly, static_cast<std::size_t>(m / 2)));
}

json poly_json(const ElementSpec& spec) {
  json a = json::array();
  for (const auto& c : spec.coeffs) a.push_back(c.get_str());
  return a;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---- jorder -----------------------------------------------------------

struct JOrderOpts {
  long m = 0;
  std::string poly;
  std::string format = "text";
  bool verify = false;
};

int run_jorder(const JOrderOpts& o, std::ostream& out, std::ostream& err) {
  const ElementSpec spec = make_spec(o.m, o.poly);
  if (!o.verify) {
    const JOrderReport rep = full_jorder(spec);
    if (o.format == "json") {
      json j;
      j["m"] = o.m;
      j["poly"] = poly_json(spec);
      j["valuations"] = json::object();
      for (const auto& [p, v] : rep.valuations) {
        j["valuations"][std::to_string(p)] = v;
      }
      j["order"] = rep.order.get_str();
      emit(out, j);
    } else {
      for (const auto& [p, v] : rep.valuations) {
        out << "nu_" << p << " = " << v << "\n";
      }
      out << "order = " << rep.order.get_str() << "\n";
    }
    return 0;
  }

  const VerifiedReport vr = full_jorder_verified(spec);
  if (o.format == "json") {
    json j;
    j["m"] = o.m;
    j["poly"] = poly_json(spec);
    j["valuations"] = json::object();
    j["engines"] = json::object();
    for (const auto& [p, v] : vr.report.valuations) {
      j["valuations"][std::to_string(p)] = v;
    }
    for (const auto& [p, ev] : vr.engines) {
      j["engines"][std::to_string(p)] = {
          {"psi", ev.psi}, {"theta", ev.theta}, {"snf", ev.snf}};
    }
    j["order"] = vr.report.order.get_str();
    j["verified"] = vr.agree;
    emit(out, j);
  } else {
    for (const auto& [p, ev] : vr.engines) {
      out << "nu_" << p << " = " << ev.psi << "   (psi " << ev.psi << " | theta "
          << ev.theta << " | snf " << ev.snf << ")\n";
    }
    out << "order = " << vr.report.order.get_str() << "\n";
    out << (vr.agree ? "verified: all engines agree\n"
                     : "verified: DISAGREEMENT\n");
  }
  if (!vr.agree) {
    err << "correctness alarm: the valuation engines disagree\n";
    return 1;
  }
  return 0;
}

// ---- group ------------------------------------------------------------

struct GroupOpts {
  long m = 0;
  long prime = 0;
  std::string format = "text";
};

std::string summand_line(const std::vector<BigInt>& factors) {
  if (factors.empty()) return "trivial";
  std::string line;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) line += " + ";
    line += "Z/" + factors[i].get_str();
  }
  return line;
}

int run_group(const GroupOpts& o, std::ostream& out, std::ostream&) {
  check_even_m(o.m);
  if (o.prime != 0) {
    check_prime(o.prime);
    const FinAbGroup g = jo_local_group(o.prime, o.m);
    if (o.format == "json") {
      json j;
      j["m"] = o.m;
      j["prime"] = o.prime;
      j["group"] = g.factor_strings();
      j["summands"] = g.factor_strings();
      emit(out, j);
    } else {
      out << summand_line(g.invariant_factors) << "\n";
    }
    return 0;
  }

  const auto locals = jo_local_groups(o.m);
  const FinAbGroup chain = combine_local_groups(locals);
  std::vector<BigInt> summands;
  for (const auto& [p, g] : locals) {
    summands.insert(summands.end(), g.invariant_factors.begin(),
                    g.invariant_factors.end());
  }
  if (o.format == "json") {
    json j;
    j["m"] = o.m;
    j["group"] = chain.factor_strings();
    json s = json::array();
    for (const auto& d : summands) s.push_back(d.get_str());
    j["summands"] = s;
    emit(out, j);
  } else {
    out << summand_line(summands) << "\n";
  }
  return 0;
}

// ---- psi / theta ------------------------------------------------------

struct OperatorOpts {
  long m = 0;
  std::string poly;
  long k = 0;
  long prime = 0;
  std::string format = "text";
};

int run_operator(const OperatorOpts& o, bool is_theta, std::ostream& out,
                 std::ostream&) {
  const ElementSpec spec = make_spec(o.m, o.poly);
  long k = o.k;
  if (k == 0) {
    if (o.prime == 0) {
      throw UsageError("pass --k (odd operator index) or --prime (uses k_p)");
    }
    check_prime(o.prime);
    k = make_context(o.prime).k;
  }
  if (k < 1 || k % 2 == 0) throw UsageError("--k must be odd and >= 1");

  const TruncPoly image =
      is_theta ? theta_apply(k, spec.poly()) : psi_apply(k, spec.poly());
  if (o.format == "json") {
    json j;
    j["m"] = o.m;
    j["k"] = k;
    j["poly"] = poly_json(spec);
    j[is_theta ? "theta" : "psi"] = image.coeff_strings();
    emit(out, j);
  } else {
    out << image.str() << "\n";
  }
  return 0;
}

// ---- order-oracle / member --------------------------------------------

struct PrimeElementOpts {
  long m = 0;
  std::string poly;
  long prime = 0;
  std::string format = "text";
};

int run_order_oracle(const PrimeElementOpts& o, std::ostream& out,
                     std::ostream&) {
  const ElementSpec spec = make_spec(o.m, o.poly);
  check_prime(o.prime);
  const long v = valuation_snf(o.prime, spec);
  if (o.format == "json") {
    json j;
    j["m"] = o.m;
    j["poly"] = poly_json(spec);
    j["prime"] = o.prime;
    j["valuations"] = {{std::to_string(o.prime), v}};
    emit(out, j);
  } else {
    out << "nu_" << o.prime << " = " << v << "\n";
    out << "order = " << pow_ui(BigInt(o.prime), static_cast<unsigned long>(v)).get_str()
        << "\n";
  }
  return 0;
}

int run_member(const PrimeElementOpts& o, std::ostream& out, std::ostream&) {
  const ElementSpec spec = make_spec(o.m, o.poly);
  check_prime(o.prime);
  const bool member = in_psi_image(o.prime, spec);
  if (o.format == "json") {
    json j;
    j["m"] = o.m;
    j["poly"] = poly_json(spec);
    j["prime"] = o.prime;
    j["member"] = member;
    emit(out, j);
  } else {
    out << (member ? "true" : "false") << "\n";
  }
  return 0;
}

// ---- gen-order ----------------------------------------------------------

struct GenOrderOpts {
  long m = 0;
  long prime = 0;
  bool experimental = false;
  std::string format = "text";
};

int run_gen_order(const GenOrderOpts& o, std::ostream& out, std::ostream&) {
  check_even_m(o.m);
  check_prime(o.prime);
  const long t = o.m / 2;
  if (o.prime != 2 && o.prime != 3 && !o.experimental) {
    throw UsageError(
        "--prime must be 2 or 3; pass --experimental-p to evaluate the "
        "conjectural closed form at other primes");
  }

  if (o.prime == 2 || o.prime == 3) {
    json vals = json::object();
    for (long n = 1; n <= t; ++n) {
      const long v = monomial_valuation_closed(o.prime, n, t);
      if (o.format == "json") {
        vals[std::to_string(n)] = v;
      } else {
        out << "y^" << n << ": " << v << "\n";
      }
    }
    if (o.format == "json") {
      json j;
      j["m"] = o.m;
      j["prime"] = o.prime;
      j["valuations"] = vals;
      emit(out, j);
    }
    return 0;
  }

  // Experimental primes: evaluate the closed form and the recursion side by
  // side; report, never assert.
  const LocalContext ctx = make_context(o.prime);
  json closed = json::object(), recursion = json::object();
  bool all_agree = true;
  for (long n = 1; n <= t; ++n) {
    const long c = monomial_valuation_closed(o.prime, n, t, true);
    const long r =
        valuation_psi(ctx, ElementSpec::monomial(o.m, static_cast<std::size_t>(n)));
    all_agree = all_agree && (c == r);
    if (o.format == "json") {
      closed[std::to_string(n)] = c;
      recursion[std::to_string(n)] = r;
    } else {
      out << "y^" << n << ": closed=" << c << " recursion=" << r
          << (c == r ? "" : "  <- differs") << "\n";
    }
  }
  if (o.format == "json") {
    json j;
    j["m"] = o.m;
    j["prime"] = o.prime;
    j["closed"] = closed;
    j["recursion"] = recursion;
    j["agree"] = all_agree;
    emit(out, j);
  } else {
    out << (all_agree ? "closed form agrees with the recursion (unproven range)"
                      : "closed form DIFFERS from the recursion")
        << "\n";
  }
  return 0;
}

// ---- selfcheck ----------------------------------------------------------

struct SelfCheckOpts {
  long m_max = 8;
  int n_random = 10;
  unsigned long seed = 20240501UL;
  bool serial = false;
  std::string format = "text";
};

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

CheckResult check_agreement(const SelfCheckOpts& o) {
  const auto grid = agreement_grid(o.m_max, o.n_random, o.seed, 50);
  const auto outcomes =
      o.serial ? run_agreement_serial(grid) : run_agreement_parallel(grid);
  const auto bad = count_disagreements(outcomes);
  return {"three-engine agreement, m <= " + std::to_string(o.m_max),
          bad == 0,
          std::to_string(grid.size()) + " cases, " + std::to_string(bad) +
              " disagreements"};
}

CheckResult check_closed_forms(long t_max) {
  for (long p : {2L, 3L}) {
    const LocalContext ctx = make_context(p);
    for (long t = 1; t <= t_max; ++t) {
      for (long n = 1; n <= t; ++n) {
        const long closed = monomial_valuation_closed(p, n, t);
        const long rec =
            valuation_psi(ctx, ElementSpec::monomial(2 * t, static_cast<std::size_t>(n)));
        if (closed != rec) {
          return {"generator closed forms", false,
                  "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                      " t=" + std::to_string(t)};
        }
      }
    }
    for (long n = 1; n <= t_max; ++n) {
      const auto mbar = normalized_m_values(ctx, n, t_max);
      for (long r = n; r <= t_max; ++r) {
        const Valuation actual = nu(p, mbar[static_cast<std::size_t>(r - n)]);
        if (actual != Valuation::of(normalized_m_valuation_closed(p, n, r))) {
          return {"generator closed forms", false,
                  "normalized recursion p=" + std::to_string(p) +
                      " n=" + std::to_string(n) + " r=" + std::to_string(r)};
        }
      }
    }
  }
  return {"generator closed forms", true, "p in {2,3}"};
}

CheckResult check_operator_identities() {
  const std::size_t t = 5;
  TruncPoly probe(t);
  probe.set(1, Rational(1));
  probe.set(2, Rational(-3));
  probe.set(4, Rational(7));
  for (long k : {3L, 5L}) {
    for (long l : {3L, 5L, 7L}) {
      if (psi_apply(k, psi_apply(l, probe)) != psi_apply(k * l, probe)) {
        return {"operator identities", false,
                "psi composition k=" + std::to_string(k) +
                    " l=" + std::to_string(l)};
      }
    }
  }
  for (long k : {3L, 5L, 7L, 9L, 11L}) {
    const TruncPoly th = theta_apply(k, TruncPoly::y(t));
    const TruncPoly lhs =
        (th * th * TruncPoly::y(t)).scaled(Rational(BigInt(k) * k));
    if (lhs != psi_y(k, t)) {
      return {"operator identities", false,
              "character identity k=" + std::to_string(k)};
    }
  }
  TruncPoly a(t), b(t);
  a.set(1, Rational(2));
  a.set(3, Rational(-1));
  b.set(2, Rational(5));
  b.set(4, Rational(1));
  for (long k : {3L, 5L, 7L}) {
    if (theta_apply(k, a + b) != theta_apply(k, a) * theta_apply(k, b)) {
      return {"operator identities", false,
              "exponential law k=" + std::to_string(k)};
    }
  }
  return {"operator identities", true, ""};
}

CheckResult check_valuation_closed_forms() {
  for (long p : primes_up_to(13)) {
    const LocalContext ctx = make_context(p);
    const BigInt k(ctx.k);
    for (long n = 1; n <= 50; ++n) {
      const BigInt direct = pow_ui(k, 2 * static_cast<unsigned long>(n)) - 1;
      if (nu(p, direct) != Valuation::of(nu_power_minus_one(ctx, n))) {
        return {"valuation closed forms", false,
                "p=" + std::to_string(p) + " n=" + std::to_string(n)};
      }
    }
    for (long s = 1; s <= 12; ++s) {
      BigInt prod = 1;
      for (long r = s; r <= 12; ++r) {
        prod *= pow_ui(k, 2 * static_cast<unsigned long>(r)) - 1;
        if (nu(p, prod) != Valuation::of(nu_power_product(ctx, s, r))) {
          return {"valuation closed forms", false,
                  "product p=" + std::to_string(p) + " s=" + std::to_string(s) +
                      " r=" + std::to_string(r)};
        }
      }
    }
  }
  return {"valuation closed forms", true, "p <= 13"};
}

int run_selfcheck(const SelfCheckOpts& o, std::ostream& out, std::ostream&) {
  check_even_m(o.m_max);
  std::vector<CheckResult> results;
  results.push_back(check_agreement(o));
  results.push_back(check_closed_forms(std::min(o.m_max / 2 + 2, 8L)));
  results.push_back(check_operator_identities());
  results.push_back(check_valuation_closed_forms());

  bool ok = true;
  if (o.format == "json") {
    json checks = json::array();
    for (const auto& r : results) {
      ok = ok && r.pass;
      checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    json j;
    j["checks"] = checks;
    j["ok"] = ok;
    emit(out, j);
  } else {
    for (const auto& r : results) {
      ok = ok && r.pass;
      out << (r.pass ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) out << " (" << r.detail << ")";
      out << "\n";
    }
    out << (ok ? "selfcheck: OK" : "selfcheck: FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

void add_format(CLI::App* sub, std::string& target) {
  sub->add_option("--format", target, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact J-group computations for complex projective spaces"};
  app.name("jocp");
  app.require_subcommand(1);

  JOrderOpts jo;
  auto* jorder = app.add_subcommand(
      "jorder", "Per-prime valuations and the full J-order of an element");
  jorder->add_option("--m", jo.m, "complex dimension (even)")->required();
  jorder->add_option("--poly", jo.poly, "coefficients m_1..m_t of y..y^t")
      ->required();
  jorder->add_flag("--verify", jo.verify,
                   "run all three valuation engines and require agreement");
  add_format(jorder, jo.format);

  GroupOpts go;
  auto* group = app.add_subcommand(
      "group", "Structure of the J-group (or its p-local part)");
  group->add_option("--m", go.m, "complex dimension (even)")->required();
  group->add_option("--prime", go.prime, "restrict to one prime");
  add_format(group, go.format);

  OperatorOpts po;
  auto* psi = app.add_subcommand("psi", "Image of an element under psi^k");
  psi->add_option("--m", po.m, "complex dimension (even)")->required();
  psi->add_option("--poly", po.poly, "coefficients m_1..m_t")->required();
  psi->add_option("--k", po.k, "odd operator index");
  psi->add_option("--prime", po.prime, "use the canonical k_p of this prime");
  add_format(psi, po.format);

  OperatorOpts to;
  auto* theta = app.add_subcommand("theta", "Image of an element under theta_k");
  theta->add_option("--m", to.m, "complex dimension (even)")->required();
  theta->add_option("--poly", to.poly, "coefficients m_1..m_t")->required();
  theta->add_option("--k", to.k, "odd operator index");
  theta->add_option("--prime", to.prime, "use the canonical k_p of this prime");
  add_format(theta, to.format);

  PrimeElementOpts oo;
  auto* oracle = app.add_subcommand(
      "order-oracle", "Element order valuation from the Smith normal form");
  oracle->add_option("--m", oo.m, "complex dimension (even)")->required();
  oracle->add_option("--poly", oo.poly, "coefficients m_1..m_t")->required();
  oracle->add_option("--prime", oo.prime, "prime p")->required();
  add_format(oracle, oo.format);

  PrimeElementOpts mo;
  auto* member = app.add_subcommand(
      "member", "Is the element in the image of (1 - psi^{k_p}) over Z_(p)?");
  member->add_option("--m", mo.m, "complex dimension (even)")->required();
  member->add_option("--poly", mo.poly, "coefficients m_1..m_t")->required();
  member->add_option("--prime", mo.prime, "prime p")->required();
  add_format(member, mo.format);

  GenOrderOpts geno;
  auto* gen = app.add_subcommand(
      "gen-order", "Closed-form J-order valuations of the generators y^n");
  gen->add_option("--m", geno.m, "complex dimension (even)")->required();
  gen->add_option("--prime", geno.prime, "prime p (2 or 3 unless experimental)")
      ->required();
  gen->add_flag("--experimental-p", geno.experimental,
                "evaluate the conjectural closed form at p >= 5");
  add_format(gen, geno.format);

  SelfCheckOpts so;
  auto* self = app.add_subcommand(
      "selfcheck", "Run the internal agreement suite and report pass/fail");
  self->add_option("--m-max", so.m_max, "largest complex dimension (even)");
  self->add_option("--random", so.n_random, "random elements per dimension");
  self->add_option("--seed", so.seed, "random seed");
  self->add_flag("--serial", so.serial, "use the serial reference kernel");
  add_format(self, so.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*jorder) return run_jorder(jo, out, err);
    if (*group) return run_group(go, out, err);
    if (*psi) return run_operator(po, false, out, err);
    if (*theta) return run_operator(to, true, out, err);
    if (*oracle) return run_order_oracle(oo, out, err);
    if (*member) return run_member(mo, out, err);
    if (*gen) return run_gen_order(geno, out, err);
    if (*self) return run_selfcheck(so, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const AgreementError& e) {
    err << "correctness alarm: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace jocp::cli
