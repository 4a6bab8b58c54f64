#include "transverse/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <set>
#include <thread>

#include "transverse/errors.hpp"
#include "transverse/io.hpp"
#include "transverse/lp.hpp"
#include "transverse/typedisj.hpp"

namespace transverse {

Rat random_rat(std::mt19937_64& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> dist(lo, hi);
  Rat out(Int(dist(rng)), Int(den));
  out.canonicalize();
  return out;
}

Vec random_barycentric(std::mt19937_64& rng, std::size_t k) {
  std::uniform_int_distribution<long> dist(1, 16);
  std::vector<long> w(k);
  long total = 0;
  for (auto& x : w) total += (x = dist(rng));
  Vec out;
  for (long x : w) {
    Rat r{Int(x), Int(total)};
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

SimplicialComplex random_complex(std::size_t vertices, std::size_t dim, const Rat& density, std::uint64_t seed) {
  std::mt19937_64 rng(mix_seed(seed));
  std::vector<std::string> ids;
  for (std::size_t v = 0; v < vertices; ++v) ids.push_back("v" + std::to_string(v));
  std::vector<Simplex> gens;
  const std::size_t k = dim + 1;
  if (k <= vertices) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    const Int scale = Int(1) << 32;
    while (true) {
      // u / 2^32 < density, compared exactly.
      Rat u{Int(static_cast<unsigned long>(rng() >> 32)), scale};
      u.canonicalize();
      if (u < density) gens.push_back(idx);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == vertices - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return SimplicialComplex::from_generators(std::move(ids), gens);
}

SimplicialComplex random_complex_of_dim(std::size_t vertices, std::size_t dim, const Rat& density,
                                        std::uint64_t seed) {
  if (dim + 1 > vertices || sgn(density) <= 0) throw PreconditionError("no complex of that dimension exists");
  for (std::uint64_t salt = 0;; ++salt) {
    auto k = random_complex(vertices, dim, density, derive_seed(seed, salt));
    if (k.dimension() == static_cast<int>(dim)) return k;
  }
}

PLMap random_lattice_map(const SimplicialComplex& k, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(mix_seed(seed));
  std::vector<Vec> images;
  for (std::size_t v = 0; v < k.vertex_count(); ++v) {
    Vec p;
    for (std::size_t c = 0; c < m; ++c) p.push_back(random_rat(rng, -8, 8, 1));
    images.push_back(std::move(p));
  }
  return PLMap(m, std::move(images));
}

GenericSets generic_point_sets(const std::vector<long>& n_list, std::size_t m, std::uint64_t seed) {
  const Rat eps(1, 16);
  for (int attempt = 0; attempt < kPerturbAttempts; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    GenericPool pool(s);
    std::mt19937_64 rng(mix_seed(s));
    GenericSets out;
    out.seed = s;
    std::uint64_t stream = 1;
    std::vector<Rat> coords;
    for (long n : n_list) {
      PointSet set;
      for (long j = 0; j <= n; ++j) {
        Vec p;
        for (std::size_t c = 0; c < m; ++c) {
          p.push_back(pool.draw_near(random_rat(rng, -32, 32, 8), eps, stream++));
          coords.push_back(p.back());
        }
        set.push_back(std::move(p));
      }
      out.sets.push_back(std::move(set));
    }
    std::vector<Condition> transcript;
    append_distinctness(transcript, coords, "coordinate");
    for (std::size_t i = 0; i < out.sets.size(); ++i) {
      if (out.sets[i].size() > m + 1) continue;
      transcript.push_back({"affine independence of set " + std::to_string(i + 1),
                            affine_independence_value(out.sets[i])});
    }
    out.certificate = certify(std::move(transcript));
    if (out.certificate.ok()) return out;
  }
  throw GenericityError("point-set certification failed after " + std::to_string(kPerturbAttempts) + " attempts");
}

PlaneFamily random_family(std::size_t m, std::size_t d, std::size_t t, std::size_t T, std::mt19937_64& rng) {
  std::vector<std::size_t> coords(m);
  for (std::size_t i = 0; i < m; ++i) coords[i] = i;
  std::shuffle(coords.begin(), coords.end(), rng);
  std::vector<std::size_t> span(coords.begin(), coords.begin() + static_cast<long>(T));
  std::shuffle(span.begin(), span.end(), rng);
  std::vector<std::size_t> fixed(span.begin(), span.begin() + static_cast<long>(t));
  return PlaneFamily::make(m, fixed, span, d);
}

namespace {

using nlohmann::json;

/// Nonnegative JSON integer; literals built in code are signed.
bool is_count(const json& j) { return j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0); }

std::size_t worker_count(const json& grid) {
  if (grid.contains("threads")) {
    if (!is_count(grid["threads"]) || grid["threads"].get<std::size_t>() == 0) {
      throw InputError("grid: 'threads' must be a positive integer");
    }
    return grid["threads"].get<std::size_t>();
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return std::clamp<std::size_t>(hw == 0 ? 1 : hw, 1, 8);
}

// Runs f(0..n-1) on a thread pool; results stay in index order and the
// exception of the lowest failing index is rethrown.
template <typename R>
std::vector<R> parallel_map(std::size_t n, std::size_t threads, const std::function<R(std::size_t)>& f) {
  std::vector<R> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < std::min(threads, n); ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

struct TrialOutcome {
  bool certified = false;
  std::size_t checks = 0;
  std::string tag;
  std::optional<json> violation;
};

struct SuiteTally {
  json summary = json::object();
  std::vector<json> violations;
};

std::size_t uint_field(const json& obj, const std::string& key, std::size_t fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  if (!is_count(obj[key])) throw InputError("grid." + where + ": '" + key + "' must be a nonnegative integer");
  return obj[key].get<std::size_t>();
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  const std::string path = where.empty() ? "grid" : "grid." + where;
  if (!obj.is_object()) throw InputError(path + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw InputError(path + ": unknown key '" + key + "'");
  }
}

void nondecreasing_lists(std::size_t q, long nmax, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> cur;
  std::function<void(long)> rec = [&](long lo) {
    if (cur.size() == q) {
      f(cur);
      return;
    }
    for (long v = lo; v <= nmax; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
}

struct Cell {
  long m, d, t, T;
  std::vector<long> n;
};

json cell_json(const Cell& c) { return json{{"m", c.m}, {"d", c.d}, {"t", c.t}, {"T", c.T}, {"n", c.n}}; }

json family_label(const PlaneFamily& f) { return family_to_json(f); }

SuiteTally tally(const std::string& suite, const std::vector<TrialOutcome>& outcomes, std::size_t cells) {
  SuiteTally out;
  std::size_t certified = 0, checks = 0;
  std::map<std::string, std::size_t> tags;
  for (const auto& o : outcomes) {
    if (o.certified) ++certified;
    checks += o.checks;
    if (!o.tag.empty()) ++tags[o.tag];
    if (o.violation) {
      json v = *o.violation;
      v["suite"] = suite;
      out.violations.push_back(std::move(v));
    }
  }
  out.summary = json{{"cells", cells},
                     {"trials", outcomes.size()},
                     {"certified", certified},
                     {"uncertified", outcomes.size() - certified},
                     {"violations", out.violations.size()}};
  if (checks > 0) out.summary["checks"] = checks;
  for (const auto& [tag, count] : tags) out.summary[tag] = count;
  return out;
}

enum SuiteSalt : std::uint64_t { kLinear = 1, kUnivariate = 2, kCompliance = 3, kEmbedding = 4, kFixtures = 5 };

SuiteTally linear_suite(const json& spec, std::size_t trials, std::uint64_t seed, std::size_t threads) {
  reject_unknown(spec, {"m_max", "n_max"}, "linear");
  const long m_max = static_cast<long>(uint_field(spec, "m_max", 5, "linear"));
  const long n_max = static_cast<long>(uint_field(spec, "n_max", 2, "linear"));
  std::vector<Cell> cells;
  for (long m = 1; m <= m_max; ++m)
    for (long T = 0; T <= m; ++T)
      for (long d = 0; d <= T; ++d)
        for (long t = 0; t <= d; ++t)
          for (long q = 1; q <= d - t + 1; ++q)
            nondecreasing_lists(static_cast<std::size_t>(q), n_max, [&](const std::vector<long>& n) {
              if (theorem11_case(n, m, d, t, T) == NonStabCase::CaseII) cells.push_back({m, d, t, T, n});
            });
  auto outcomes = parallel_map<TrialOutcome>(cells.size() * trials, threads, [&](std::size_t job) {
    const Cell& c = cells[job / trials];
    const std::uint64_t s = derive_seed(seed, kLinear, job);
    std::mt19937_64 rng(s);
    const auto fam = random_family(c.m, c.d, c.t, c.T, rng);
    TrialOutcome o;
    GenericSets gs;
    try {
      gs = generic_point_sets(c.n, static_cast<std::size_t>(c.m), derive_seed(s, 1));
    } catch (const GenericityError&) {
      return o;
    }
    o.certified = true;
    const auto dec = decide_linear(gs.sets, fam);
    if (dec.witness) {
      o.violation = json{{"cell", cell_json(c)}, {"trial", job % trials}, {"seed", s},
                         {"family", family_label(fam)}, {"sets", sets_to_json(gs.sets)}};
    }
    return o;
  });
  return tally("linear", outcomes, cells.size());
}

// The constraint flat's dimension is the same for every configuration off
// a proper algebraic subset, so one certified probe decides applicability.
bool generically_univariate(const std::vector<long>& n, long m, long d, long t, long T) {
  std::mt19937_64 rng(derive_seed(0x756e69, static_cast<std::uint64_t>(m)));
  const auto fam = random_family(static_cast<std::size_t>(m), static_cast<std::size_t>(d),
                                 static_cast<std::size_t>(t), static_cast<std::size_t>(T), rng);
  const auto gs = generic_point_sets(n, static_cast<std::size_t>(m), 0x756e69);
  return stab_decide_univariate(gs.sets, fam).verdict != UnivariateVerdict::NotApplicable;
}

SuiteTally univariate_suite(const json& spec, std::size_t trials, std::uint64_t seed, std::size_t threads) {
  reject_unknown(spec, {"m_max", "n_max"}, "univariate");
  const long m_max = static_cast<long>(uint_field(spec, "m_max", 5, "univariate"));
  const long n_max = static_cast<long>(uint_field(spec, "n_max", 2, "univariate"));
  std::vector<Cell> cells;
  for (long m = 1; m <= m_max; ++m)
    for (long T = 0; T <= m; ++T)
      for (long d = 0; d <= T; ++d)
        for (long t = 0; t <= d; ++t) {
          const long q = d - t + 2;
          nondecreasing_lists(static_cast<std::size_t>(q), n_max, [&](const std::vector<long>& n) {
            long total = 0;
            for (long x : n) total += x;
            if (total - (q - 1) * (m - T) != 1) return;
            if (theorem11_case(n, m, d, t, T) == NonStabCase::Inconclusive) return;
            if (!generically_univariate(n, m, d, t, T)) return;
            cells.push_back({m, d, t, T, n});
          });
        }
  auto outcomes = parallel_map<TrialOutcome>(cells.size() * trials, threads, [&](std::size_t job) {
    const Cell& c = cells[job / trials];
    const std::uint64_t s = derive_seed(seed, kUnivariate, job);
    std::mt19937_64 rng(s);
    const auto fam = random_family(c.m, c.d, c.t, c.T, rng);
    TrialOutcome o;
    GenericSets gs;
    try {
      gs = generic_point_sets(c.n, static_cast<std::size_t>(c.m), derive_seed(s, 1));
    } catch (const GenericityError&) {
      return o;
    }
    o.certified = true;
    const auto dec = stab_decide_univariate(gs.sets, fam);
    const json where{{"cell", cell_json(c)}, {"trial", job % trials}, {"seed", s}, {"family", family_label(fam)},
                     {"sets", sets_to_json(gs.sets)}};
    switch (dec.verdict) {
      case UnivariateVerdict::NoStab: o.tag = "no_stab"; break;
      case UnivariateVerdict::Stab:
        o.tag = "stab";
        o.violation = where;
        break;
      case UnivariateVerdict::NotApplicable:
        // The generic flat is one-dimensional for every listed tuple.
        o.tag = "not_applicable";
        o.violation = where;
        (*o.violation)["reason"] = dec.reason;
        break;
    }
    return o;
  });
  return tally("univariate", outcomes, cells.size());
}

ConcretePlane random_plane(const PlaneFamily& fam, std::mt19937_64& rng) {
  Vec base;
  for (std::size_t c = 0; c < fam.m; ++c) base.push_back(random_rat(rng, -160, 160, 16));
  std::vector<Vec> toward;
  for (std::size_t k = 0; k < fam.d - fam.t(); ++k) {
    Vec v = zeros(fam.m);
    for (std::size_t c : fam.free_coords()) v[c] = random_rat(rng, -4, 4, 1);
    toward.push_back(std::move(v));
  }
  return plane_through(fam, base, toward);
}

// Planes through image points of faces; every other call first tries a
// common transversal of d-t+1 disjoint simplex images.
ConcretePlane adversarial_plane(const PlaneFamily& fam, const PLMap& g, const std::vector<Simplex>& simplexes,
                                bool try_linear, std::mt19937_64& rng) {
  const std::size_t need = fam.d - fam.t() + 1;
  std::uniform_int_distribution<std::size_t> pick(0, simplexes.size() - 1);
  if (try_linear) {
    std::vector<Simplex> order = simplexes;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Simplex> chosen;
    for (const auto& s : order) {
      if (chosen.size() == need) break;
      if (std::all_of(chosen.begin(), chosen.end(), [&](const Simplex& o) { return simplexes_disjoint(o, s); })) {
        chosen.push_back(s);
      }
    }
    std::vector<PointSet> sets;
    for (const auto& s : chosen) sets.push_back(g.simplex_images(s));
    if (auto w = stab_exists_linear(sets, fam)) return w->plane;
  }
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < need; ++i) {
    const Simplex& s = simplexes[pick(rng)];
    pts.push_back(image_point(g, s, random_barycentric(rng, s.size())));
  }
  std::vector<Vec> toward;
  for (std::size_t i = 1; i < pts.size(); ++i) toward.push_back(sub(pts[i], pts[0]));
  return plane_through(fam, pts[0], toward);
}

SuiteTally compliance_suite(const json& spec, std::size_t trials, std::uint64_t seed, std::size_t threads) {
  reject_unknown(spec, {"m", "max_vertices", "max_dim", "planes"}, "compliance");
  std::vector<std::size_t> ms{4, 5};
  if (spec.contains("m")) {
    ms.clear();
    if (!spec["m"].is_array()) throw InputError("grid.compliance: 'm' must be an array");
    for (const auto& x : spec["m"]) {
      if (!is_count(x) || x.get<std::size_t>() == 0) throw InputError("grid.compliance: bad m");
      ms.push_back(x.get<std::size_t>());
    }
  }
  const std::size_t max_vertices = uint_field(spec, "max_vertices", 10, "compliance");
  const std::size_t max_dim = uint_field(spec, "max_dim", 2, "compliance");
  const std::size_t planes = uint_field(spec, "planes", 1000, "compliance");
  if (max_dim == 0 || max_vertices < max_dim + 2) throw InputError("grid.compliance: need max_vertices >= max_dim + 2");

  const std::size_t jobs = trials * ms.size();
  auto outcomes = parallel_map<TrialOutcome>(jobs, threads, [&](std::size_t job) {
    const std::size_t complex_index = job / ms.size();
    const std::size_t m = ms[job % ms.size()];
    const std::uint64_t sc = derive_seed(seed, kCompliance, complex_index);
    std::mt19937_64 rng(sc);
    const std::size_t dim = std::uniform_int_distribution<std::size_t>(1, max_dim)(rng);
    const std::size_t nv = std::uniform_int_distribution<std::size_t>(dim + 2, max_vertices)(rng);
    const auto k = random_complex_of_dim(nv, dim, Rat(1, 2), derive_seed(sc, 1));
    const auto theta = random_lattice_map(k, m, derive_seed(sc, 2, m));
    TrialOutcome o;
    GenericPool pool(derive_seed(sc, 3, m));
    std::optional<PLMap> g;
    try {
      g = roberts_perturb(k, theta, Rat(1, 4), pool);
    } catch (const GenericityError&) {
      return o;
    }
    o.certified = true;
    const long n = static_cast<long>(dim);
    const auto faces = k.simplexes_up_to(dim);
    std::uint64_t family_index = 0;
    for (std::size_t d = 0; d <= m; ++d)
      for (std::size_t t = 0; t <= d; ++t)
        for (std::size_t T = d; T <= m; ++T) {
          std::optional<BoundQ> bound;
          try {
            bound = bound_q(n, static_cast<long>(m), static_cast<long>(d), static_cast<long>(t), static_cast<long>(T));
          } catch (const PreconditionError&) {
            continue;
          }
          ++family_index;
          for (std::size_t p = 0; p < planes && !o.violation; ++p) {
            const std::uint64_t sp = derive_seed(sc, 1000 * m + family_index, p);
            std::mt19937_64 prng(sp);
            const auto fam = random_family(m, d, t, T, prng);
            const ConcretePlane plane =
                p % 2 == 0 ? random_plane(fam, prng) : adversarial_plane(fam, *g, faces, p % 4 == 1, prng);
            const auto res = max_disjoint_stabbed(k, *g, plane, dim);
            ++o.checks;
            if (Int(static_cast<unsigned long>(res.count)) > bound->floor) {
              o.violation = json{{"complex_index", complex_index}, {"m", m}, {"complex_seed", sc},
                                 {"plane_seed", sp}, {"count", res.count}, {"bound", to_text(bound->value)},
                                 {"plane", plane_to_json(plane)}, {"complex", serialize_complex(k)},
                                 {"map", serialize_map(*g, k)}};
            }
          }
        }
    return o;
  });
  SuiteTally out = tally("compliance", outcomes, ms.size());
  return out;
}

SuiteTally embedding_suite(const json& spec, std::size_t trials, std::uint64_t seed, std::size_t threads) {
  reject_unknown(spec, {"n_max", "max_vertices", "points"}, "embedding");
  const std::size_t n_max = uint_field(spec, "n_max", 2, "embedding");
  const std::size_t max_vertices = uint_field(spec, "max_vertices", 8, "embedding");
  const std::size_t points = uint_field(spec, "points", 20, "embedding");
  if (n_max == 0 || max_vertices < n_max + 2) throw InputError("grid.embedding: need max_vertices >= n_max + 2");
  auto outcomes = parallel_map<TrialOutcome>(trials, threads, [&](std::size_t job) {
    const std::size_t n = job % n_max + 1;
    const std::size_t m = 2 * n + 1;
    const std::uint64_t sc = derive_seed(seed, kEmbedding, job);
    std::mt19937_64 rng(sc);
    const std::size_t nv = std::uniform_int_distribution<std::size_t>(n + 2, max_vertices)(rng);
    const auto k = random_complex_of_dim(nv, n, Rat(1, 2), derive_seed(sc, 1));
    const auto theta = random_lattice_map(k, m, derive_seed(sc, 2));
    TrialOutcome o;
    GenericPool pool(derive_seed(sc, 3));
    std::optional<PLMap> g;
    try {
      g = roberts_perturb(k, theta, Rat(1, 4), pool);
    } catch (const GenericityError&) {
      return o;
    }
    o.certified = true;
    const json where{{"trial", job}, {"seed", sc}, {"n", n}, {"m", m}, {"complex", serialize_complex(k)},
                     {"map", serialize_map(*g, k)}};
    const auto& all = k.simplexes();
    for (std::size_t i = 0; i < all.size() && !o.violation; ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        if (!simplexes_disjoint(all[i], all[j])) continue;
        if (convex_hulls_meet(g->simplex_images(all[i]), g->simplex_images(all[j]))) {
          o.violation = where;
          (*o.violation)["meeting"] = json{{"a", all[i]}, {"b", all[j]}};
          break;
        }
      }
    }
    const auto bound = bound_q(static_cast<long>(n), static_cast<long>(m), 0, 0, static_cast<long>(m));
    std::vector<std::size_t> every(m);
    for (std::size_t c = 0; c < m; ++c) every[c] = c;
    const auto fam = PlaneFamily::make(m, {}, every, 0);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (std::size_t p = 0; p < points && !o.violation; ++p) {
      const Simplex& s = all[pick(rng)];
      const ConcretePlane point(fam, image_point(*g, s, random_barycentric(rng, s.size())), {});
      const auto comps = component_partition(preimage_polytopes(k, *g, point)).components.size();
      const auto count = max_disjoint_stabbed(k, *g, point, n).count;
      ++o.checks;
      if (Int(static_cast<unsigned long>(comps)) > bound.floor || Int(static_cast<unsigned long>(count)) > bound.floor) {
        o.violation = where;
        (*o.violation)["point"] = vec_to_json(point.basepoint());
        (*o.violation)["components"] = comps;
      }
    }
    return o;
  });
  return tally("embedding", outcomes, n_max);
}

SuiteTally fixture_suite(const json& spec, std::uint64_t seed) {
  if (!spec.is_array()) throw InputError("grid.fixtures: expected an array");
  std::vector<TrialOutcome> outcomes;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const json& fx = spec[i];
    const std::string where = "fixtures[" + std::to_string(i) + "]";
    reject_unknown(fx, {"name", "family", "sets", "mode", "expect", "budget"}, where);
    for (const char* key : {"name", "family", "sets", "mode", "expect"}) {
      if (!fx.contains(key)) throw InputError("grid." + where + ": missing '" + key + "'");
    }
    const auto fam = family_from_json(fx["family"]);
    const auto sets = sets_from_json(fx["sets"], fam.m);
    const std::string mode = fx["mode"].is_string() ? fx["mode"].get<std::string>() : "";
    const std::string expect = fx["expect"].is_string() ? fx["expect"].get<std::string>() : "";
    if (expect != "witness" && expect != "no_witness") {
      throw InputError("grid." + where + ": 'expect' must be \"witness\" or \"no_witness\"");
    }
    const std::size_t budget = uint_field(fx, "budget", 200, where);
    bool found = false;
    std::string detail;
    try {
      if (mode == "linear") {
        found = stab_exists_linear(sets, fam).has_value();
      } else if (mode == "search") {
        found = stab_search_general(sets, fam, budget, GenericPool(derive_seed(seed, kFixtures, i))).witness.has_value();
      } else if (mode == "univariate") {
        const auto dec = stab_decide_univariate(sets, fam);
        found = dec.verdict == UnivariateVerdict::Stab;
        detail = dec.reason;
      } else {
        throw InputError("grid." + where + ": 'mode' must be linear, search or univariate");
      }
    } catch (const PreconditionError& e) {
      throw InputError("grid." + where + ": " + e.what());
    }
    TrialOutcome o;
    o.certified = true;
    o.tag = found ? "witness" : "no_witness";
    if ((expect == "witness") != found) {
      o.violation = json{{"fixture", fx["name"]}, {"expect", expect}, {"observed", o.tag}, {"mode", mode}};
      if (!detail.empty()) (*o.violation)["detail"] = detail;
    }
    outcomes.push_back(std::move(o));
  }
  return tally("fixtures", outcomes, spec.size());
}

}  // namespace

BatchResult batch_verify(const json& grid, std::size_t trials, std::uint64_t seed) {
  reject_unknown(grid, {"linear", "univariate", "compliance", "embedding", "fixtures", "threads"}, "");
  const std::size_t threads = worker_count(grid);
  BatchResult out;
  json suites = json::object();
  json violations = json::array();
  if (trials > 0) {
    auto run = [&](const std::string& key, const std::function<SuiteTally(const json&)>& suite) {
      if (!grid.contains(key)) return;
      SuiteTally t = suite(grid[key]);
      suites[key] = t.summary;
      for (auto& v : t.violations) violations.push_back(std::move(v));
    };
    run("linear", [&](const json& s) { return linear_suite(s, trials, seed, threads); });
    run("univariate", [&](const json& s) { return univariate_suite(s, trials, seed, threads); });
    run("compliance", [&](const json& s) { return compliance_suite(s, trials, seed, threads); });
    run("embedding", [&](const json& s) { return embedding_suite(s, trials, seed, threads); });
    run("fixtures", [&](const json& s) { return fixture_suite(s, seed); });
  }
  out.violations = violations.size();
  out.exit_code = out.violations > 0 ? 1 : 0;
  out.results = json{{"suites", suites}, {"violations", violations}, {"violation_count", out.violations}};
  return out;
}

}  // namespace transverse
