#include "chow/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "chow/asl.hpp"
#include "chow/decomposition.hpp"
#include "chow/degree.hpp"
#include "chow/error.hpp"
#include "chow/matroid_io.hpp"
#include "chow/pairing.hpp"
#include "chow/standard_monomials.hpp"
#include "chow/straighten.hpp"
#include "json.hpp"

namespace chow {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string ring;
  std::string output = "text";
  std::uint64_t seed = 1;
  std::optional<int> degree;
  std::string input;
  std::vector<std::string> builtin;
  std::string expr;
};

struct Input {
  std::optional<MatroidLattice> matroid;
  std::optional<Poset> poset;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(what) + ": expected an integer, got \"" + s + "\"");
}

Input load_input(const Config& cfg) {
  Input in;
  if (!cfg.input.empty()) {
    std::ifstream f(cfg.input);
    if (!f) throw UsageError("cannot read " + cfg.input);
    std::stringstream ss;
    ss << f.rdbuf();
    const std::string text = ss.str();
    // Poset files have no "format" field.
    bool is_matroid = true;
    try {
      auto j = nlohmann::json::parse(text);
      is_matroid = !(j.is_object() && !j.contains("format") && j.contains("size"));
    } catch (const nlohmann::json::exception&) {
    }
    if (is_matroid) {
      in.matroid = parse_matroid_json(text);
    } else {
      in.poset = parse_poset_json(text);
    }
    return in;
  }
  if (cfg.builtin.empty()) throw UsageError("one of --input or --builtin is required");
  const std::string& name = cfg.builtin[0];
  if (name == "graph") {
    if (cfg.builtin.size() != 2 || cfg.builtin[1].size() < 2 || cfg.builtin[1][0] != 'K') {
      throw UsageError("--builtin graph expects K<n>");
    }
    in.matroid = complete_graph_matroid(parse_int(cfg.builtin[1].substr(1), "graph"));
    return in;
  }
  std::vector<int> params;
  for (std::size_t i = 1; i < cfg.builtin.size(); ++i) params.push_back(parse_int(cfg.builtin[i], "builtin"));
  in.matroid = builtin_matroid(name, params);
  return in;
}

RingMode ring_mode(const std::string& ring) {
  return ring == "red" ? RingMode::reduced : RingMode::augmented;
}

RingContext context_for(const Config& cfg, const Input& in) {
  if (in.poset) return RingContext::make(MeetSemilattice::from_poset(*in.poset));
  return RingContext::make(ring_mode(cfg.ring), *in.matroid);
}

const RingContext& require_matroid(const RingContext& ctx, const char* command) {
  if (!ctx.is_matroid()) {
    throw Error(ErrorKind::ContextMismatch, std::string(command) + " needs a matroid input");
  }
  return ctx;
}

Json integers(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_int64(x));
  return a;
}

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s;
}

int cmd_describe(const Config& cfg, const Input& in, std::ostream& out) {
  if (in.poset) {
    const auto covers = cover_relation(*in.poset);
    if (cfg.output == "json") {
      out << poset_to_json(*in.poset) << "\n";
      return 0;
    }
    out << "poset with " << in.poset->size() << " elements\n";
    for (ElementId x = 0; x < in.poset->size(); ++x) {
      out << x << " <";
      for (ElementId y : covers[x]) out << " " << y;
      out << "\n";
    }
    return 0;
  }
  const auto& m = *in.matroid;
  if (cfg.output == "json") {
    Json j;
    j["rank"] = m.rank();
    j["flats"] = Json::array();
    for (FlatId f = 0; f < m.size(); ++f) {
      j["flats"].push_back({{"index", f}, {"rank", m.rank(f)}, {"labels", m.ground_labels(f)}});
    }
    out << j.dump() << "\n";
    return 0;
  }
  out << "rank " << m.rank() << ", " << m.size() << " flats\n";
  for (FlatId f = 0; f < m.size(); ++f) {
    out << "h[" << f << "]\trank " << m.rank(f) << "\t" << m.flat_name(f) << "\n";
  }
  return 0;
}

int cmd_hilbert(const Config& cfg, const Input& in, std::ostream& out) {
  const RingContext ctx = context_for(cfg, in);
  const auto coeffs = ctx.is_matroid() ? hilbert_series(ctx) : series_truncated(ctx, cfg.degree.value_or(4));
  if (cfg.output == "json") {
    Json j;
    j["coefficients"] = integers(coeffs);
    out << j.dump() << "\n";
  } else {
    out << join(coeffs) << "\n";
  }
  return 0;
}

int cmd_straighten(const Config& cfg, const Input& in, std::ostream& out) {
  const RingContext ctx = context_for(cfg, in);
  const Polynomial p = parse_polynomial(cfg.expr, ctx.resolver());
  const std::string nf = to_string(straighten(ctx, p));
  if (cfg.output == "json") {
    Json j;
    j["normal_form"] = nf;
    out << j.dump() << "\n";
  } else {
    out << nf << "\n";
  }
  return 0;
}

int cmd_degree(const Config& cfg, const Input& in, std::ostream& out) {
  const RingContext ctx = context_for(cfg, in);
  require_matroid(ctx, "degree");
  const Polynomial p = parse_polynomial(cfg.expr, ctx.resolver());
  DegreeMap deg(ctx);
  ctx.check_polynomial(p);
  const Integer v = deg(p);
  if (cfg.output == "json") {
    Json j;
    j["degree"] = to_int64(v);
    out << j.dump() << "\n";
  } else {
    out << v.get_str() << "\n";
  }
  return 0;
}

int cmd_pairing(const Config& cfg, const Input& in, std::ostream& out) {
  const RingContext ctx = context_for(cfg, in);
  require_matroid(ctx, "pairing");
  if (!cfg.degree) throw UsageError("pairing needs --degree");
  const auto rep = pairing_matrix(ctx, *cfg.degree);
  const bool unit = rep.full_pairing_det && (*rep.full_pairing_det == 1 || *rep.full_pairing_det == -1);
  const bool ok = rep.lower_triangular_unit && rep.delta_order_ok && unit;
  if (cfg.output == "json") {
    out << to_json(rep) << "\n";
    return ok ? 0 : 2;
  }
  out << "degree " << rep.degree << "\nrows:\n";
  for (std::size_t i = 0; i < rep.rows.size(); ++i) out << "  " << i << " " << to_string(rep.rows[i]) << "\n";
  out << "matrix:\n";
  for (std::size_t i = 0; i < rep.matrix.rows(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < rep.matrix.cols(); ++j) out << " " << rep.matrix(i, j).get_str();
    out << "\n";
  }
  out << "lower_triangular_unit: " << (rep.lower_triangular_unit ? "true" : "false") << "\n";
  out << "full_pairing_det: " << (rep.full_pairing_det ? rep.full_pairing_det->get_str() : "null") << "\n";
  for (const auto& v : rep.violations) out << "violation: " << v << "\n";
  return ok ? 0 : 2;
}

void add_report(std::vector<TheoremCheck>& checks, const std::string& name, const CheckReport& r) {
  checks.push_back({name, r.ok(),
                    std::to_string(r.checked) + " checked" + (r.ok() ? "" : ": " + r.violations.front())});
}

std::vector<TheoremCheck> verify_ring(const RingContext& ctx, std::uint64_t seed) {
  const std::string prefix = std::string(to_string(ctx.mode())) + ": ";
  std::vector<TheoremCheck> checks;
  for (auto c : verify_theorems(ctx).checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
  add_report(checks, prefix + "flat decomposition", verify_decomposition(ctx));
  add_report(checks, prefix + "Hilbert recursion", verify_hilbert_recursion(ctx));
  if (ctx.mode() == RingMode::augmented) {
    add_report(checks, prefix + "Moebius embedding", verify_mobius_embedding(ctx));
  }
  const auto& m = ctx.matroid();
  CheckReport ann;
  CheckReport proj;
  std::mt19937_64 rng(seed);
  Straightener ring(ctx);
  DegreeMap deg(ctx);
  for (FlatId g = 0; g < m.top(); ++g) {
    if (ctx.mode() == RingMode::reduced && g == m.bottom()) continue;
    auto a = verify_annihilator(ctx, g);
    ann.checked += a.checked;
    for (auto& v : a.violations) ann.fail(std::move(v));
    PhiMap phi(ctx, g);
    const Polynomial x = x_element(ctx, g);
    for (int i = 0; i < 20; ++i) {
      const Polynomial y = random_homogeneous(ctx, deg.top_degree() - 1, 3, rng);
      auto r = verify_projection_formula(phi, ring, deg, x, y);
      ++proj.checked;
      if (!r.ok()) {
        proj.fail("G = " + std::to_string(g) + ", y = " + to_string(y) + ": " +
                  r.tensor_side.get_str() + " vs " + r.product_side.get_str());
      }
    }
  }
  add_report(checks, prefix + "annihilator", ann);
  add_report(checks, prefix + "projection formula", proj);
  return checks;
}

int print_checks(const Config& cfg, const std::vector<TheoremCheck>& checks, std::ostream& out) {
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.ok;
  if (cfg.output == "json") {
    Json j;
    j["ok"] = ok;
    j["checks"] = Json::array();
    for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    out << j.dump() << "\n";
  } else {
    for (const auto& c : checks) {
      out << (c.ok ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    out << (ok ? "all checks passed" : "verification failed") << "\n";
  }
  return ok ? 0 : 2;
}

std::vector<TheoremCheck> asl_checks(const MeetSemilattice& l, int d_max) {
  const auto r = check_asl(l, d_max);
  auto detail = [&](const char* key) {
    for (const auto& d : r.details) {
      if (d.rfind(key, 0) == 0) return d;
    }
    return std::string();
  };
  return {{"ASL axiom 1 (chain monomial basis)", r.axiom1_ok, detail("axiom 1")},
          {"ASL axiom 2 (straightening through meets)", r.axiom2_ok, detail("axiom 2")},
          {"h_0 non-zero-divisor", r.nzd_ok, detail("h_0")}};
}

int cmd_verify(const Config& cfg, const Input& in, std::ostream& out) {
  if (!in.matroid) {
    return print_checks(cfg, asl_checks(MeetSemilattice::from_poset(*in.poset), cfg.degree.value_or(4)), out);
  }
  std::vector<TheoremCheck> checks;
  std::vector<RingMode> modes;
  if (cfg.ring.empty()) {
    modes = {RingMode::augmented, RingMode::reduced};
  } else {
    modes = {ring_mode(cfg.ring)};
  }
  for (RingMode mode : modes) {
    auto c = verify_ring(RingContext::make(mode, *in.matroid), cfg.seed);
    checks.insert(checks.end(), c.begin(), c.end());
  }
  if (in.matroid->size() <= 17) {
    for (auto c : asl_checks(inverted_flat_poset(*in.matroid).lattice, cfg.degree.value_or(3))) {
      c.name = "inverted flats: " + c.name;
      checks.push_back(std::move(c));
    }
  }
  return print_checks(cfg, checks, out);
}

int cmd_asl(const Config& cfg, const Input& in, std::ostream& out) {
  const MeetSemilattice l = in.poset ? MeetSemilattice::from_poset(*in.poset)
                                     : inverted_flat_poset(*in.matroid).lattice;
  const int d_max = cfg.degree.value_or(4);
  const auto r = check_asl(l, d_max);
  if (cfg.output == "json") {
    Json j;
    j["axiom1_ok"] = r.axiom1_ok;
    j["axiom2_ok"] = r.axiom2_ok;
    j["nzd_ok"] = r.nzd_ok;
    j["details"] = r.details;
    out << j.dump() << "\n";
  } else {
    out << "axiom1_ok: " << (r.axiom1_ok ? "true" : "false") << "\n";
    out << "axiom2_ok: " << (r.axiom2_ok ? "true" : "false") << "\n";
    out << "nzd_ok: " << (r.nzd_ok ? "true" : "false") << "\n";
    for (const auto& d : r.details) out << "detail: " << d << "\n";
  }
  return r.ok() ? 0 : 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chow rings of matroids: straightening, degrees, pairings and verification", "chowctl"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Config cfg;
  app.add_option("--ring", cfg.ring, "Ring: aug (augmented) or red (reduced)")
      ->check(CLI::IsMember({"aug", "red"}));
  app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_option("--degree", cfg.degree, "Degree (pairing) or degree bound (asl-check, hilbert of a poset)");
  auto* input = app.add_option("--input", cfg.input, "Matroid or poset JSON file");
  auto* builtin = app.add_option("--builtin", cfg.builtin,
                                 "boolean N | uniform R N | graph K<n>")
                      ->expected(1, 3);
  input->excludes(builtin);

  auto* describe = app.add_subcommand("describe", "List flats with their indices");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series coefficients");
  auto* straighten_cmd = app.add_subcommand("straighten", "Normal form of a polynomial");
  straighten_cmd->add_option("expr", cfg.expr, "Polynomial, e.g. \"3*h[2]^2*h[5] - h[7]\"")->required();
  auto* degree = app.add_subcommand("degree", "Degree map of a polynomial");
  degree->add_option("expr", cfg.expr, "Polynomial")->required();
  auto* pairing = app.add_subcommand("pairing", "Pairing matrix in degree --degree");
  auto* verify = app.add_subcommand("verify", "Run the full verification suite");
  auto* asl = app.add_subcommand("asl-check", "Check the straightening-law axioms");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const Input in = load_input(cfg);
    if (describe->parsed()) return cmd_describe(cfg, in, out);
    if (hilbert->parsed()) return cmd_hilbert(cfg, in, out);
    if (straighten_cmd->parsed()) return cmd_straighten(cfg, in, out);
    if (degree->parsed()) return cmd_degree(cfg, in, out);
    if (pairing->parsed()) return cmd_pairing(cfg, in, out);
    if (verify->parsed()) return cmd_verify(cfg, in, out);
    if (asl->parsed()) return cmd_asl(cfg, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return (is_validation_failure(e.kind()) || e.kind() == ErrorKind::Internal) ? 2 : 1;
  }
  return 1;
}

}  // namespace chow
