#include "transverse/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <set>

#include "transverse/errors.hpp"
#include "transverse/io.hpp"
#include "transverse/simplicial.hpp"
#include "transverse/transversal.hpp"
#include "transverse/typedisj.hpp"
#include "transverse/verify.hpp"

namespace transverse {

namespace {

enum class Kind { Count, Rational, File, Mode };

struct Flag {
  std::string name;
  Kind kind;
  bool required = true;
};

const std::map<std::string, std::vector<Flag>>& verb_table() {
  static const std::map<std::string, std::vector<Flag>> table = {
      {"gen",
       {{"vertices", Kind::Count}, {"dim", Kind::Count}, {"density", Kind::Rational}, {"seed", Kind::Count},
        {"out", Kind::File}}},
      {"perturb",
       {{"complex", Kind::File}, {"map", Kind::File}, {"eps", Kind::Rational}, {"seed", Kind::Count},
        {"out", Kind::File}}},
      {"bounds", {{"n", Kind::Count}, {"m", Kind::Count}, {"d", Kind::Count}, {"t", Kind::Count}, {"T", Kind::Count}}},
      {"stab",
       {{"family", Kind::File}, {"sets", Kind::File}, {"mode", Kind::Mode}, {"budget", Kind::Count, false},
        {"seed", Kind::Count, false}}},
      {"count", {{"complex", Kind::File}, {"map", Kind::File}, {"plane", Kind::File}, {"nmax", Kind::Count}}},
      {"section", {{"complex", Kind::File}, {"map", Kind::File}, {"plane", Kind::File}, {"eps", Kind::Rational}}},
      {"cotype",
       {{"complex", Kind::File}, {"map", Kind::File}, {"plane", Kind::File}, {"q", Kind::Count},
        {"eps", Kind::Rational}}},
      {"verify", {{"grid", Kind::File}, {"trials", Kind::Count}, {"seed", Kind::Count}}},
  };
  return table;
}

std::uint64_t parse_count(const std::string& flag, const std::string& text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("--" + flag + ": expected a nonnegative integer, got '" + text + "'");
  }
  return value;
}

void validate(const Flag& flag, const std::string& value) {
  switch (flag.kind) {
    case Kind::Count: parse_count(flag.name, value); break;
    case Kind::Rational:
      try {
        parse_rat(value);
      } catch (const InputError& e) {
        throw InputError("--" + flag.name + ": " + e.what());
      }
      break;
    case Kind::File:
      if (value.empty()) throw InputError("--" + flag.name + ": empty path");
      break;
    case Kind::Mode:
      if (value != "linear" && value != "search" && value != "univariate") {
        throw InputError("--" + flag.name + ": expected linear, search or univariate, got '" + value + "'");
      }
      break;
  }
}

class Options {
 public:
  explicit Options(const Command& cmd) : cmd_(cmd) {}
  const std::string& text(const std::string& key) const { return cmd_.options.at(key); }
  bool has(const std::string& key) const { return cmd_.options.count(key) > 0; }
  std::uint64_t count(const std::string& key) const { return parse_count(key, text(key)); }
  long small(const std::string& key) const {
    const auto v = count(key);
    if (v > 1000000) throw InputError("--" + key + ": value too large");
    return static_cast<long>(v);
  }
  Rat rat(const std::string& key) const { return parse_rat(text(key)); }
  std::string file(const std::string& key) const { return read_file(text(key)); }

 private:
  const Command& cmd_;
};

std::string digest_of(const Command& cmd) {
  std::string data = cmd.verb + '\n';
  for (const auto& [k, v] : cmd.options) data += k + '=' + v + '\n';
  for (const auto& flag : verb_table().at(cmd.verb)) {
    if (flag.kind != Kind::File || flag.name == "out" || !cmd.options.count(flag.name)) continue;
    std::string content;
    try {
      content = read_file(cmd.options.at(flag.name));
    } catch (const InputError&) {
      content = "<unreadable>";
    }
    data += flag.name + ':' + std::to_string(content.size()) + '\n' + content;
  }
  return sha256_hex(data);
}

json simplex_ids(const SimplicialComplex& k, const Simplex& s) {
  json out = json::array();
  for (std::size_t v : s) out.push_back(k.vertex_ids()[v]);
  return out;
}

json witness_json(const StabWitness& w) {
  json lambdas = json::array(), points = json::array();
  for (const auto& l : w.lambdas) lambdas.push_back(vec_to_json(l));
  for (const auto& p : w.points) points.push_back(vec_to_json(p));
  return json{{"lambdas", lambdas}, {"plane", plane_to_json(w.plane)}, {"points", points}};
}

json poly_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_text(c));
  return out;
}

struct Loaded {
  SimplicialComplex k;
  PLMap g;
  GenericityCertificate cert;
};

Loaded load_certified(const Options& opt) {
  auto k = parse_complex(opt.file("complex"));
  auto g = parse_map(opt.file("map"), k);
  auto cert = certify_map(k, g);
  if (!cert.ok()) {
    throw GenericityError("map is not certified generic: condition '" +
                          cert.conditions()[*cert.failed_index()].description + "' vanishes");
  }
  g = g.with_certificate(cert);
  return {std::move(k), std::move(g), std::move(cert)};
}

ConcretePlane load_plane(const Options& opt, std::size_t m) {
  auto plane = plane_from_json(parse_json(opt.file("plane"), "plane"));
  if (plane.family().m != m) throw InputError("plane dimension does not match the map's m");
  return plane;
}

Report report_gen(const Options& opt) {
  const auto nv = static_cast<std::size_t>(opt.small("vertices"));
  const auto dim = static_cast<std::size_t>(opt.small("dim"));
  const Rat density = opt.rat("density");
  if (sgn(density) < 0 || density > 1) throw InputError("--density: must lie in [0, 1]");
  const auto k = random_complex(nv, dim, density, opt.count("seed"));
  write_file(opt.text("out"), serialize_complex(k));
  Report r;
  r.body["results"] = json{{"vertices", k.vertex_count()}, {"simplexes", k.simplexes().size()},
                           {"maximal", k.maximal_simplexes().size()}, {"dimension", k.dimension()},
                           {"out", opt.text("out")}};
  return r;
}

Report report_perturb(const Options& opt) {
  const auto k = parse_complex(opt.file("complex"));
  const auto theta = parse_map(opt.file("map"), k);
  const Rat eps = opt.rat("eps");
  if (sgn(eps) <= 0) throw InputError("--eps: must be positive");
  GenericPool pool(opt.count("seed"));
  const auto g = roberts_perturb(k, theta, eps, pool);
  write_file(opt.text("out"), serialize_map(g, k));
  Report r;
  r.body["results"] = json{{"m", g.m()}, {"vertices", k.vertex_count()}, {"seed_used", pool.seed()},
                           {"mesh_sq", to_text(mesh_squared(k, g))}, {"out", opt.text("out")}};
  r.body["certificate"] = certificate_summary(*g.certificate());
  return r;
}

Report report_bounds(const Options& opt) {
  const long n = opt.small("n"), m = opt.small("m"), d = opt.small("d"), t = opt.small("t"), T = opt.small("T");
  BoundQ b;
  try {
    b = bound_q(n, m, d, t, T);
  } catch (const PreconditionError& e) {
    throw InputError(std::string("invalid parameters: ") + e.what());
  }
  Report r;
  r.body["results"] = json{{"value", to_text(b.value)}, {"floor", b.floor.get_str()}, {"regime", to_string(b.regime)}};
  return r;
}

Report report_stab(const Options& opt) {
  const auto fam = family_from_json(parse_json(opt.file("family"), "family"));
  const auto sets = sets_from_json(parse_json(opt.file("sets"), "sets"), fam.m);
  const std::string mode = opt.text("mode");
  const std::size_t q = sets.size();
  const std::size_t k = fam.d - fam.t();
  json res{{"mode", mode}, {"q", q}, {"family", family_to_json(fam)}, {"lambdas", nullptr}, {"plane", nullptr}};
  json conditions = json::array();
  Report r;
  if (mode == "linear") {
    LinearDecision dec;
    try {
      dec = decide_linear(sets, fam);
    } catch (const PreconditionError& e) {
      throw InputError(std::string(e.what()));
    }
    conditions.push_back("q <= d - t + 1 (" + std::to_string(q) + " <= " + std::to_string(k + 1) + ")");
    conditions.push_back("coefficient rank " + std::to_string(dec.coefficient_rank) + ", augmented rank " +
                         std::to_string(dec.augmented_rank) + " over " + std::to_string(dec.unknowns) +
                         " unknowns and " + std::to_string(dec.equations) + " equations");
    res["certified"] = true;
    if (dec.witness) {
      res["status"] = "witness";
      res.update(witness_json(*dec.witness));
      conditions.push_back("witness re-verified exactly");
    } else {
      res["status"] = "infeasible";
    }
  } else if (mode == "search") {
    const std::size_t budget = opt.has("budget") ? static_cast<std::size_t>(opt.small("budget")) : 100;
    const std::uint64_t seed = opt.has("seed") ? opt.count("seed") : 0;
    const auto out = stab_search_general(sets, fam, budget, GenericPool(seed));
    res["certified"] = false;
    res["budget"] = budget;
    res["sweeps"] = out.sweeps;
    res["restarts"] = out.restarts;
    if (out.witness) {
      res["status"] = "witness";
      res["verified"] = true;
      res.update(witness_json(*out.witness));
      conditions.push_back("rank of projected differences <= " + std::to_string(k));
      conditions.push_back("witness re-verified exactly");
    } else {
      res["status"] = "not_found";
      res["verified"] = false;
      conditions.push_back("search exhausted its budget; no conclusion");
    }
  } else {
    const auto dec = stab_decide_univariate(sets, fam);
    res["reason"] = dec.reason;
    switch (dec.verdict) {
      case UnivariateVerdict::NotApplicable:
        res["status"] = "not_applicable";
        res["certified"] = false;
        break;
      case UnivariateVerdict::NoStab:
        res["status"] = "no_stab";
        res["certified"] = true;
        res["reduced"] = poly_json(dec.reduced);
        conditions.push_back("Sturm count of the reduced polynomial over R is 0");
        break;
      case UnivariateVerdict::Stab:
        res["status"] = "witness";
        res["certified"] = true;
        res["reduced"] = poly_json(dec.reduced);
        if (dec.witness) {
          res.update(witness_json(*dec.witness));
          res["root"] = to_text(*dec.root->exact);
          conditions.push_back("rational root; witness re-verified exactly");
        } else if (dec.root) {
          res["root_interval"] = json{{"lo", to_text(dec.root->lo)}, {"hi", to_text(dec.root->hi)},
                                      {"sign_lo", dec.root->sign_lo}, {"sign_hi", dec.root->sign_hi}};
          conditions.push_back("irrational root isolated by a sign change");
        }
        break;
    }
  }
  res["conditions_checked"] = conditions;
  r.body["results"] = res;
  return r;
}

json bound_json(long n, const PlaneFamily& f, std::optional<BoundQ>& out) {
  try {
    out = bound_q(n, static_cast<long>(f.m), static_cast<long>(f.d), static_cast<long>(f.t()),
                  static_cast<long>(f.T()));
  } catch (const PreconditionError& e) {
    // No bound applies to this parameter tuple; count is still reported.
    return json{{"n", n}, {"undefined", e.what()}};
  }
  return json{{"n", n}, {"value", to_text(out->value)}, {"floor", out->floor.get_str()},
              {"regime", to_string(out->regime)}};
}

Report report_count(const Options& opt) {
  const auto in = load_certified(opt);
  const auto plane = load_plane(opt, in.g.m());
  const auto nmax = static_cast<std::size_t>(opt.small("nmax"));
  const auto res = max_disjoint_stabbed(in.k, in.g, plane, nmax);
  json family = json::array();
  for (const auto& s : res.family) family.push_back(simplex_ids(in.k, s));
  const long n = std::min(static_cast<long>(nmax), static_cast<long>(std::max(in.k.dimension(), 0)));
  std::optional<BoundQ> bound;
  Report r;
  r.body["results"] = json{{"count", res.count}, {"family", family}, {"stabbed", res.stabbed.size()},
                           {"bound", bound_json(n, plane.family(), bound)}};
  r.body["certificate"] = certificate_summary(in.cert);
  if (bound && Int(static_cast<unsigned long>(res.count)) > bound->floor) r.exit_code = kExitViolation;
  r.body["results"]["within_bound"] = r.exit_code == kExitOk;
  return r;
}

json partition_json(const ComponentPartition& part, std::size_t pieces, const Rat& eps_sq) {
  Rat max_sq = 0;
  for (const auto& d : part.diameters_sq) max_sq = std::max(max_sq, d);
  return json{{"pieces", pieces}, {"components", part.components.size()}, {"max_diameter_sq", to_text(max_sq)},
              {"eps_sq", to_text(eps_sq)}};
}

Report report_section(const Options& opt) {
  const auto in = load_certified(opt);
  const auto plane = load_plane(opt, in.g.m());
  const Rat eps = opt.rat("eps");
  if (sgn(eps) <= 0) throw InputError("--eps: must be positive");
  const auto section = section_of_image(in.k, in.g, plane);
  const auto part = component_partition(section.pieces);
  Report r;
  json res = partition_json(part, section.pieces.size(), eps * eps);
  res["result"] = eps_disjoint_type(section, eps);
  r.body["results"] = res;
  r.body["certificate"] = certificate_summary(in.cert);
  return r;
}

Report report_cotype(const Options& opt) {
  const auto in = load_certified(opt);
  const auto plane = load_plane(opt, in.g.m());
  const Rat eps = opt.rat("eps");
  if (sgn(eps) <= 0) throw InputError("--eps: must be positive");
  const auto q = static_cast<std::size_t>(opt.small("q"));
  if (q == 0) throw InputError("--q: must be at least 1");
  const auto pre = preimage_polytopes(in.k, in.g, plane);
  CotypeResult c;
  try {
    c = cotype_check(pre, q, eps);
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }
  Report r;
  json res = partition_json(c.partition, pre.size(), eps * eps);
  res["result"] = c.ok;
  if (c.ok) res["clusters"] = c.clusters;
  r.body["results"] = res;
  r.body["certificate"] = certificate_summary(in.cert);
  return r;
}

Report report_verify(const Options& opt) {
  const auto grid = parse_json(opt.file("grid"), "grid");
  const auto out = batch_verify(grid, static_cast<std::size_t>(opt.small("trials")), opt.count("seed"));
  Report r;
  r.body["results"] = out.results;
  r.exit_code = out.exit_code;
  return r;
}

json argv_json(const std::vector<std::string>& args) {
  json out = json::array();
  for (const auto& a : args) out.push_back(a);
  return out;
}

}  // namespace

Command parse_command(const std::vector<std::string>& args) {
  if (args.empty()) throw InputError("missing verb; expected one of gen, perturb, bounds, stab, count, section, cotype, verify");
  const auto& table = verb_table();
  const auto it = table.find(args[0]);
  if (it == table.end()) throw InputError("unknown verb '" + args[0] + "'");

  CLI::App app{"transverse"};
  app.allow_extras(false);
  Command cmd;
  cmd.verb = args[0];
  cmd.argv = args;
  std::map<std::string, std::string> values;
  for (const auto& flag : it->second) app.add_option("--" + flag.name, values[flag.name]);
  std::vector<std::string> rest(args.begin() + 1, args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    throw InputError(cmd.verb + ": " + e.what());
  }
  // Malformed values are reported before missing ones.
  for (const auto& flag : it->second) {
    if (app.count("--" + flag.name) == 0) continue;
    validate(flag, values[flag.name]);
    cmd.options[flag.name] = values[flag.name];
  }
  for (const auto& flag : it->second) {
    if (flag.required && !cmd.options.count(flag.name)) {
      throw InputError(cmd.verb + ": --" + flag.name + " is required");
    }
  }
  return cmd;
}

Report execute(const Command& cmd) {
  const Options opt(cmd);
  Report r;
  try {
    if (cmd.verb == "gen") r = report_gen(opt);
    else if (cmd.verb == "perturb") r = report_perturb(opt);
    else if (cmd.verb == "bounds") r = report_bounds(opt);
    else if (cmd.verb == "stab") r = report_stab(opt);
    else if (cmd.verb == "count") r = report_count(opt);
    else if (cmd.verb == "section") r = report_section(opt);
    else if (cmd.verb == "cotype") r = report_cotype(opt);
    else if (cmd.verb == "verify") r = report_verify(opt);
    else throw InputError("unknown verb '" + cmd.verb + "'");
  } catch (const InputError& e) {
    r = Report{};
    r.body["results"] = json{{"error", e.what()}};
    r.exit_code = kExitInput;
  } catch (const PreconditionError& e) {
    r = Report{};
    r.body["results"] = json{{"error", e.what()}};
    r.exit_code = kExitInput;
  } catch (const GenericityError& e) {
    r = Report{};
    r.body["results"] = json{{"error", e.what()}};
    r.exit_code = kExitGenericity;
  }
  if (!r.body.contains("certificate")) r.body["certificate"] = nullptr;
  r.body["command"] = cmd.verb;
  r.body["argv"] = argv_json(cmd.argv);
  r.body["inputs_digest"] = digest_of(cmd);
  r.body["exit_code"] = r.exit_code;
  return r;
}

Report usage_report(const std::vector<std::string>& args, const std::string& message) {
  Report r;
  r.exit_code = kExitInput;
  r.body = json{{"command", args.empty() ? json(nullptr) : json(args[0])},
                {"argv", argv_json(args)},
                {"inputs_digest", nullptr},
                {"results", json{{"error", message}}},
                {"certificate", nullptr},
                {"exit_code", r.exit_code}};
  return r;
}

Report run_cli(const std::vector<std::string>& args) {
  Command cmd;
  try {
    cmd = parse_command(args);
  } catch (const InputError& e) {
    return usage_report(args, e.what());
  }
  return execute(cmd);
}

}  // namespace transverse
