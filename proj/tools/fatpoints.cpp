// Command-line front end: certify, conjecture, oracle, verify, trace, grid.
// Exit codes: 0 verified/ok, 1 oracle mismatch, 2 usage or parameter error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fatpoints/certifier.hpp"
#include "fatpoints/conjecture.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/grid.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/verify.hpp"

namespace {

using nlohmann::json;
using namespace fatpoints;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::optional<std::int64_t> t;
  std::optional<std::int64_t> d;
  std::optional<std::int64_t> r;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  bool json = false;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

std::pair<std::int64_t, std::int64_t> default_curve(const Common& o) {
  if (o.d && o.r) return {*o.d, *o.r};
  const auto root = exact_sqrt(o.n);
  if (!root || (o.d || o.r)) {
    throw ParameterError("n = " + std::to_string(o.n) +
                         " is not a perfect square; pass both --d and --r explicitly");
  }
  return {*root - 1, *root * (*root - 1)};
}

json theorem_json(const TheoremStatus& st) {
  json j{{"applicable", st.applicable}, {"s", st.s}};
  if (st.applicable) {
    j["x"] = *st.x;
    j["k"] = *st.k;
    j["predicted_alpha"] = *st.predicted_alpha;
  }
  return j;
}

std::string failing_text(const CertificateOutcome& out) {
  if (!out.failing_condition) return "none";
  const auto& f = *out.failing_condition;
  if (f.kind == FailingCondition::Kind::condition1) return "condition1 at i=" + std::to_string(f.step);
  return "condition2 at i=" + std::to_string(f.step);
}

int cmd_certify(const Common& o) {
  const auto theorem = mainthm_parameters(o.n, o.m);
  if (!(o.d && o.r) && !exact_sqrt(o.n)) {
    std::cerr << "theorem not applicable (n = " << o.n << " is not a square); requires explicit --d/--r\n";
    return kExitUsage;
  }
  const auto [d, r] = default_curve(o);
  const auto best = best_certified_t(o.n, o.m, d, r);
  const bool validated = in_validated_regime(o.n, d, r);

  std::optional<AlphaLowerBound> aprop;
  std::string aprop_note;
  try {
    aprop = aprop_lower_bound_detail(o.n, o.m, r, d);
  } catch (const PreconditionError& e) {
    aprop_note = e.what();
  }

  if (o.json) {
    json j{{"command", "certify"}, {"n", o.n},         {"m", o.m},
           {"d", d},               {"r", r},           {"best_t", best},
           {"alpha_lower_bound", best + 1}, {"validated_regime", validated},
           {"theorem", theorem_json(theorem)}};
    j["aprop"] = aprop ? json(aprop->bound) : json(nullptr);
    if (!aprop) j["aprop_note"] = aprop_note;
    emit(j);
    return kExitOk;
  }
  std::cout << "n=" << o.n << " m=" << o.m << " d=" << d << " r=" << r << '\n';
  std::cout << "best_t=" << best << "  (alpha >= " << best + 1 << ")";
  if (!validated) std::cout << "  [unvalidated parameter regime]";
  std::cout << '\n';
  if (aprop) {
    std::cout << "aprop=" << aprop->bound << "  (u=" << aprop->u << " rho=" << aprop->rho << " l=" << aprop->l
              << ")\n";
  } else {
    std::cout << "aprop=n/a  (" << aprop_note << ")\n";
  }
  if (theorem.applicable) {
    std::cout << "theorem alpha=" << *theorem.predicted_alpha << "  (s=" << theorem.s << " x=" << *theorem.x
              << " k=" << *theorem.k << ")\n";
  } else {
    std::cout << "theorem not applicable\n";
  }
  return kExitOk;
}

int cmd_conjecture(const Common& o) {
  const auto betti = conjectured_resolution(o.n, o.m);
  json j{{"command", "conjecture"}, {"n", o.n}, {"m", o.m}, {"alpha", betti.alpha},
         {"betti", {{"a", betti.a}, {"b", betti.b}, {"c", betti.c}, {"d", betti.d_}}}};
  json h = json::object();
  const auto lo = o.t ? *o.t : betti.alpha - 1;
  const auto hi = o.t ? *o.t : betti.alpha + 1;
  for (auto t = lo; t <= hi; ++t) h[std::to_string(t)] = conjectured_hilbert(o.n, o.m, t);
  j["hilbert"] = h;
  if (o.json) {
    emit(j);
    return kExitOk;
  }
  std::cout << "alpha=" << betti.alpha << '\n';
  for (auto t = lo; t <= hi; ++t) std::cout << "h(" << t << ")=" << conjectured_hilbert(o.n, o.m, t) << '\n';
  std::cout << "resolution: 0 -> R(-" << betti.alpha + 2 << ")^" << betti.d_ << " + R(-" << betti.alpha + 1
            << ")^" << betti.c << " -> R(-" << betti.alpha + 1 << ")^" << betti.b << " + R(-" << betti.alpha
            << ")^" << betti.a << " -> I -> 0\n";
  return kExitOk;
}

int cmd_oracle(const Common& o) {
  SampleOracle oracle(sample_points(o.n, o.prime, o.seed), o.m);
  json j{{"command", "oracle"}, {"n", o.n}, {"m", o.m}, {"prime", o.prime}, {"seed", o.seed}};
  if (o.t) {
    j["t"] = *o.t;
    j["hilbert"] = oracle.hilbert(*o.t);
  } else {
    const auto alpha = oracle.alpha(alpha_scan_bound(o.n, o.m));
    j["alpha"] = alpha;
    json h = json::object();
    for (auto t = std::max<std::int64_t>(alpha - 1, 0); t <= alpha + 1; ++t) {
      h[std::to_string(t)] = oracle.hilbert(t);
    }
    j["hilbert"] = h;
  }
  if (o.json) {
    emit(j);
  } else {
    if (j.contains("alpha")) std::cout << "alpha=" << j["alpha"].get<std::int64_t>() << '\n';
    if (o.t) {
      std::cout << "h(" << *o.t << ")=" << j["hilbert"].get<std::int64_t>() << '\n';
    } else {
      for (const auto& [t, v] : j["hilbert"].items()) std::cout << "h(" << t << ")=" << v << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const Common& o) {
  const auto rep = verify_conjectures(o.n, o.m, o.prime, o.seed);
  if (o.json) {
    json h = json::array();
    for (const auto& c : rep.hilbert) h.push_back({{"t", c.t}, {"oracle", c.oracle}, {"conjectured", c.conjectured}});
    json j{{"command", "verify"},      {"n", rep.n},
           {"m", rep.m},               {"prime", rep.p},
           {"seed", rep.seed},         {"seed_used", rep.seed_used},
           {"attempts", rep.attempts}, {"match", rep.match},
           {"conjectured_alpha", rep.conjectured_alpha}, {"oracle_alpha", rep.oracle_alpha},
           {"hilbert", h},             {"monotone", rep.monotone},
           {"above_count_bound", rep.above_count_bound}};
    if (rep.generators_checked) {
      json g = json::array();
      for (const auto& [t, c] : rep.generators) g.push_back({{"t", t}, {"count", c}});
      j["generators"] = g;
      j["expected_generators"] = {rep.expected_generators.first, rep.expected_generators.second};
    }
    emit(j);
  } else {
    std::cout << (rep.match ? "match" : "MISMATCH") << "; alpha=" << rep.oracle_alpha << " (conjectured "
              << rep.conjectured_alpha << "), h=(";
    for (std::size_t i = 0; i < rep.hilbert.size(); ++i) std::cout << (i ? "," : "") << rep.hilbert[i].oracle;
    std::cout << ")";
    if (rep.generators_checked) {
      std::cout << ", gens=(" << rep.generators[0].second << "," << rep.generators[1].second << ") expected ("
                << rep.expected_generators.first << "," << rep.expected_generators.second << ")";
    }
    std::cout << "; attempts=" << rep.attempts << '\n';
  }
  return rep.match ? kExitOk : kExitMismatch;
}

int cmd_trace(const Common& o) {
  if (!o.t) throw ParameterError("trace requires --t");
  const auto [d, r] = default_curve(o);
  const auto out = certify_alpha_exceeds(o.n, o.m, *o.t, d, r);
  const auto& tr = out.trace;
  if (o.json) {
    json steps = json::array();
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
      const auto ms = tr.steps[i].multiplicities();
      steps.push_back({{"i", i},
                       {"degree", tr.steps[i].degree()},
                       {"multiplicities", std::vector<std::int64_t>(ms.begin(), ms.end())},
                       {"intersection", tr.intersections[i]}});
    }
    json j{{"command", "trace"}, {"n", o.n}, {"m", o.m}, {"t", *o.t}, {"d", d}, {"r", r},
           {"steps", steps}, {"omega", tr.omega}, {"mu", out.mu}, {"genus", out.genus},
           {"condition2_lhs", out.condition2_lhs}, {"certified", out.certified},
           {"failing_condition", failing_text(out)}, {"validated_regime", out.validated_regime}};
    j["omega_prime"] = tr.omega_prime ? json(*tr.omega_prime) : json("not reached by omega");
    emit(j);
    return kExitOk;
  }
  const auto last = out.omega - 1;
  for (std::size_t i = 0; i < tr.steps.size(); ++i) {
    const auto idx = static_cast<std::int64_t>(i);
    std::cout << "D_" << i << " = " << tr.steps[i].to_string() << "   D.C = " << tr.intersections[i];
    if (idx < last) {
      std::cout << (tr.intersections[i] <= out.genus - 1 ? "  <= " : "  > ") << out.genus - 1
                << " (condition 1 " << (tr.intersections[i] <= out.genus - 1 ? "ok" : "FAILS") << ")";
    }
    std::cout << '\n';
  }
  std::cout << "omega=" << tr.omega << " omega'="
            << (tr.omega_prime ? std::to_string(*tr.omega_prime) : std::string("not reached by omega")) << '\n';
  std::cout << "mu=" << out.mu << "  condition 2: " << out.condition2_lhs
            << (out.condition2_lhs <= 2 * out.mu ? " <= " : " > ") << 2 * out.mu << '\n';
  std::cout << (out.certified ? "certified: alpha > " + std::to_string(*o.t)
                              : "not certified (" + failing_text(out) + ")")
            << (out.validated_regime ? "" : "  [unvalidated parameter regime]") << '\n';
  return kExitOk;
}

std::pair<std::int64_t, std::int64_t> parse_s_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParameterError("--s expects N or A..B, got '" + text + "'");
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path);
  out << contents;
  if (!out) throw ParameterError("cannot write " + path);
}

int cmd_grid(const Common& o, const std::string& s_range, std::int64_t m_max, bool with_oracle,
             const std::string& out_path, const std::string& svg_path) {
  GridOptions opts;
  std::tie(opts.s_min, opts.s_max) = parse_s_range(s_range);
  opts.m_max = m_max;
  opts.seed = o.seed;
  opts.with_oracle = with_oracle;
  opts.p = o.prime;

  // Fail on unwritable paths before spending time on the sweep.
  for (const auto& path : {out_path, svg_path}) {
    if (path.empty()) continue;
    std::ofstream probe(path, std::ios::binary | std::ios::app);
    if (!probe) throw ParameterError("cannot write " + path);
  }

  const auto cells = build_grid(opts);
  const auto csv = grid_csv(cells);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_file(out_path, csv);
    auto svg = svg_path;
    if (svg.empty()) {
      const auto dot = out_path.find_last_of('.');
      const auto slash = out_path.find_last_of('/');
      svg = (dot != std::string::npos && (slash == std::string::npos || dot > slash) ? out_path.substr(0, dot)
                                                                                       : out_path) +
            ".svg";
    }
    write_file(svg, grid_svg(cells));
  }
  if (!svg_path.empty() && out_path.empty()) write_file(svg_path, grid_svg(cells));
  return kExitOk;
}

std::uint64_t seed_default() {
  if (const char* env = std::getenv("FATPOINTS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParameterError(std::string("FATPOINTS_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert functions and resolutions of uniform fat points in the plane"};
  app.require_subcommand(1);

  Common o;
  std::string s_range = "4..7";
  std::int64_t m_max = 9;
  bool with_oracle = false;
  std::string out_path;
  std::string svg_path;
  bool seed_given = false;

  auto add_common = [&](CLI::App* sub, bool needs_nm) {
    if (needs_nm) {
      sub->add_option("--n", o.n, "number of points")->required();
      sub->add_option("--m", o.m, "multiplicity")->required();
    }
    sub->add_option("--prime", o.prime, "prime modulus for the oracle");
    sub->add_option_function<std::uint64_t>("--seed", [&](const std::uint64_t& v) {
      o.seed = v;
      seed_given = true;
    }, "random seed (default: $FATPOINTS_SEED or 0)");
    sub->add_flag("--json", o.json, "emit JSON lines");
  };

  auto* certify = app.add_subcommand("certify", "best certified degree and closed-form bounds");
  add_common(certify, true);
  certify->add_option("--d", o.d, "curve degree");
  certify->add_option("--r", o.r, "points on the curve");

  auto* conjecture = app.add_subcommand("conjecture", "conjectured Hilbert function and resolution");
  add_common(conjecture, true);
  conjecture->add_option("--t", o.t, "degree");

  auto* oracle = app.add_subcommand("oracle", "finite-field Hilbert function at random points");
  add_common(oracle, true);
  oracle->add_option("--t", o.t, "degree (default: alpha and its neighbours)");

  auto* verify = app.add_subcommand("verify", "cross-check the oracle against the conjectures");
  add_common(verify, true);

  auto* trace = app.add_subcommand("trace", "dump a reduction trace and the certification conditions");
  add_common(trace, true);
  trace->add_option("--t", o.t, "starting degree")->required();
  trace->add_option("--d", o.d, "curve degree");
  trace->add_option("--r", o.r, "points on the curve");

  auto* grid = app.add_subcommand("grid", "coverage grid as CSV and SVG");
  add_common(grid, false);
  grid->add_option("--s", s_range, "s or s_min..s_max (n = s^2)");
  grid->add_option("--m-max", m_max, "largest multiplicity");
  grid->add_flag("--with-oracle", with_oracle, "populate oracle columns");
  grid->add_option("--out", out_path, "CSV output path (default: stdout)");
  grid->add_option("--svg", svg_path, "SVG output path (default: --out with .svg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!seed_given) o.seed = seed_default();
    if (*certify) return cmd_certify(o);
    if (*conjecture) return cmd_conjecture(o);
    if (*oracle) return cmd_oracle(o);
    if (*verify) return cmd_verify(o);
    if (*trace) return cmd_trace(o);
    if (*grid) return cmd_grid(o, s_range, m_max, with_oracle, out_path, svg_path);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ScanExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
