#include "invgen/verify.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <functional>
#include <thread>

#include "invgen/builders.hpp"
#include "invgen/catalog.hpp"
#include "invgen/cohomology.hpp"
#include "invgen/errors.hpp"
#include "invgen/expr.hpp"
#include "invgen/meataxe.hpp"

namespace invgen {

namespace {

void parallel_for(std::size_t n, uint32_t threads, const std::function<void(std::size_t)> &fn) {
  threads = std::max<uint32_t>(1, std::min<uint32_t>(threads, uint32_t(n ? n : 1)));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (uint32_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  for (auto &th : pool) th.join();
}

CheckRow row_eq(std::string name, uint64_t expected, uint64_t actual) {
  return CheckRow{std::move(name), std::to_string(expected), std::to_string(actual),
                  expected == actual};
}

CheckRow row_true(std::string name, bool ok, std::string actual = "") {
  return CheckRow{std::move(name), "true", actual.empty() ? (ok ? "true" : "false") : actual,
                  ok};
}

SuiteReport suite_centraliser(const RunConfig &cfg) {
  SuiteReport rep{"centraliser", {}, true};
  const auto &cat = verification_catalog();
  std::vector<CheckRow> rows(cat.size());
  parallel_for(cat.size(), cfg.threads, [&](std::size_t i) {
    const auto &e = cat[i];
    uint64_t q = smallest_splitting_prime(*e.group);
    uint64_t mismatches = 0;
    GModule reg = regular_module(e.group, uint32_t(q), cfg.order_cap);
    for (uint32_t x = 0; x < e.group->order(); ++x) {
      uint32_t measured = fixed_space(reg, x).dim;
      uint64_t predicted = e.group->order() / e.group->element_order(x);
      if (measured != predicted) ++mismatches;
    }
    rows[i] = row_eq(e.expr + " q=" + std::to_string(q) + " mismatches", 0, mismatches);
  });
  rep.rows = std::move(rows);
  for (const auto &r : rep.rows) rep.pass = rep.pass && r.pass;
  return rep;
}

SuiteReport suite_wedderburn(const RunConfig &cfg) {
  SuiteReport rep{"wedderburn", {}, true};
  const auto &cat = verification_catalog();
  std::vector<CheckRow> rows(cat.size());
  parallel_for(cat.size(), cfg.threads, [&](std::size_t i) {
    const auto &e = cat[i];
    uint64_t q = smallest_splitting_prime(*e.group);
    GModule reg = regular_module(e.group, uint32_t(q), cfg.order_cap);
    bool ok = true;
    std::string note;
    std::vector<uint32_t> ref_dims;
    for (uint64_t seed = cfg.seed; seed < cfg.seed + 5; ++seed) {
      auto dec = meataxe_decompose(reg, seed);
      uint64_t sum_sq = 0;
      std::vector<uint32_t> dims;
      for (const auto &c : dec.components) {
        sum_sq += uint64_t(c.multiplicity) * c.multiplicity;
        dims.push_back(c.module.dim);
        if (c.multiplicity != c.module.dim) ok = false; // n_j = dim V_j
        if (c.endo_dim != 1) ok = false;                // absolute irreducibility
      }
      if (sum_sq != e.group->order()) ok = false;
      std::sort(dims.begin(), dims.end());
      if (seed == cfg.seed)
        ref_dims = dims;
      else if (dims != ref_dims)
        ok = false; // content must be seed independent
    }
    rows[i] = row_true(e.expr + " q=" + std::to_string(q) +
                           " sum nj^2=|G|, nj=dim, endo=1, 5 seeds",
                       ok);
  });
  rep.rows = std::move(rows);
  for (const auto &r : rep.rows) rep.pass = rep.pass && r.pass;
  return rep;
}

SuiteReport suite_h1(const RunConfig &cfg) {
  SuiteReport rep{"h1", {}, true};
  const auto &cat = verification_catalog();
  std::vector<CheckRow> rows;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < cat.size(); ++i)
    if (cat[i].group->order() <= cfg.cohomology_cap) idx.push_back(i);
  rows.resize(idx.size());
  parallel_for(idx.size(), cfg.threads, [&](std::size_t k) {
    const auto &e = cat[idx[k]];
    uint64_t q = smallest_splitting_prime(*e.group);
    auto dec = meataxe_decompose(regular_module(e.group, uint32_t(q), cfg.order_cap),
                                 cfg.seed);
    uint64_t nonzero = 0;
    for (const auto &c : dec.components)
      if (h1_dim(c.module, cfg.cohomology_cap) != 0) ++nonzero;
    rows[k] = row_eq(e.expr + " q=" + std::to_string(q) + " irreducibles with H1 != 0 (of " +
                         std::to_string(dec.components.size()) + ")",
                     0, nonzero);
  });
  rep.rows = std::move(rows);
  for (const auto &r : rep.rows) rep.pass = rep.pass && r.pass;
  return rep;
}

SuiteReport suite_lifting_iff(const RunConfig &cfg) {
  SuiteReport rep{"lifting-iff", {}, true};
  std::vector<std::string> gexprs = {"C2", "C3", "S3", "x(C2,C2)"};
  for (const auto &ge : gexprs) {
    auto G = parse_group_expr(ge, cfg.order_cap)->materialize().group;
    // Candidate faithful irreducible modules of dim <= 2: components of the
    // regular module at the smallest splitting prime and at the small coprime
    // primes (covers the non-splitting F_2 module of C_3).
    std::vector<uint64_t> primes{smallest_splitting_prime(*G)};
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull})
      if (G->order() % p != 0 && p != primes[0]) primes.push_back(p);
    std::vector<GModule> modules;
    for (uint64_t q : primes) {
      auto dec = meataxe_decompose(regular_module(G, uint32_t(q), cfg.order_cap), cfg.seed);
      for (const auto &c : dec.components)
        if (c.module.dim <= 2 && c.module.is_faithful()) modules.push_back(c.module);
    }
    uint64_t instances = 0, agreements = 0;
    for (const auto &V : modules) {
      for (uint32_t u = 1; u <= 3; ++u) {
        // extension order within the brute-force budget?
        uint64_t ext = G->order();
        bool fits = true;
        for (uint32_t t = 0; t < V.dim * u && fits; ++t) {
          ext *= V.q;
          if (ext > cfg.brute_budget) fits = false;
        }
        if (!fits) continue;
        for (uint32_t r = 1; r <= 3; ++r) {
          for (const auto &mset : invgen_multisets(*G, r, true, cfg.subgroup_cap)) {
            std::vector<uint32_t> gens;
            for (uint32_t c : mset) gens.push_back(G->conjugacy_classes()[c].rep);
            uint64_t bound = lifting_bound(V, gens, cfg.subgroup_cap);
            bool witness =
                find_lifting_witness(V, u, gens, cfg.brute_budget, cfg.subgroup_cap)
                    .has_value();
            ++instances;
            if (witness == (u <= bound)) ++agreements;
          }
        }
      }
    }
    rep.rows.push_back(CheckRow{ge + " witness exists iff u <= bound (" +
                                    std::to_string(instances) + " instances)",
                                std::to_string(instances), std::to_string(agreements),
                                instances == agreements});
  }
  for (const auto &r : rep.rows) rep.pass = rep.pass && r.pass;
  return rep;
}

SuiteReport suite_prop_geq(const RunConfig &cfg) {
  SuiteReport rep{"prop-geq", {}, true};
  auto S = prop_geq_group(2);
  rep.rows.push_back(CheckRow{"geq(2) order", "108", S->order().str(),
                              S->order().str() == "108"});
  auto G = S->materialize(cfg.order_cap).group;
  uint32_t gd = gaschutz_d(*S);
  uint32_t bd = d_min_generators(*G).d;
  rep.rows.push_back(row_eq("geq(2) gaschutz d", 2, gd));
  rep.rows.push_back(row_eq("geq(2) brute d", 2, bd));
  uint32_t di = compute_d_I(*G, cfg.subgroup_cap).value;
  rep.rows.push_back(row_eq("geq(2) brute d_I = 2d-1 = l(d-1)+1", 3, di));
  rep.rows.push_back(row_true("geq(2) supersoluble annotation",
                              S->supersoluble_by_annotation()));
  for (const auto &r : rep.rows) rep.pass = rep.pass && r.pass;
  return rep;
}

SuiteReport suite_tower(const RunConfig &cfg) {
  SuiteReport rep{"tower", {}, true};
  auto T1 = tower_group(2, 3, 1, cfg.order_cap);
  rep.rows.push_back(row_eq("tower(2,3,1) = C3^2 d_I",
                            2, compute_d_I(*T1->materialize().group, cfg.subgroup_cap).value));
  auto T2 = tower_group(2, 3, 2, cfg.order_cap);
  rep.rows.push_back(CheckRow{"tower(2,3,2) order", BigUint(9).mul_pow(7, 9).str(),
                              T2->order().str(),
                              T2->order().str() == BigUint(9).mul_pow(7, 9).str()});
  auto low = structured_dI_lower_bound(*T2, 2, cfg.subgroup_cap);
  rep.rows.push_back(row_true("tower(2,3,2) structured bound certifies d_I > 2",
                              low.certified));
  uint32_t up = structured_dI_upper_bound(*T2, cfg.subgroup_cap);
  rep.rows.push_back(row_eq("tower(2,3,2) recursion upper bound", 3, up));
  rep.rows.push_back(row_eq("tower(2,3,2) d_I = l(d-1)+1", 3, low.certified ? up : 0));
  rep.rows.push_back(row_eq("tower(2,3,2) gaschutz d", 2, gaschutz_d(*T2)));
  for (const auto &r : rep.rows) rep.pass = rep.pass && r.pass;
  return rep;
}

SuiteReport suite_dichotomy(const RunConfig &cfg) {
  SuiteReport rep{"dichotomy", {}, true};
  auto G = sdc_group(7, 3, 2);
  auto d = two_gen_dichotomy_check(G, cfg.subgroup_cap);
  rep.rows.push_back(row_eq("sdc(7,3,2) min prime", 3, d.min_prime));
  rep.rows.push_back(row_eq("sdc(7,3,2) d_I", 2, d.d_I));
  rep.rows.push_back(row_true("second horn taken", !d.first_horn));
  rep.rows.push_back(row_eq("wreath prime q", 43, d.q));
  rep.rows.push_back(row_eq("d(C43 wr G)", 2, d.h_d));
  rep.rows.push_back(row_true("certified d_I(H) > d_I(G)", d.certificate.certified));
  auto s3rep = two_gen_dichotomy_check(symmetric_group(3), cfg.subgroup_cap);
  rep.rows.push_back(row_true("S3 first horn: d_I >= min prime", s3rep.first_horn));
  for (const auto &r : rep.rows) rep.pass = rep.pass && r.pass;
  return rep;
}

SuiteReport suite_prop_le(const RunConfig &cfg) {
  SuiteReport rep{"prop-le", {}, true};
  const auto &cat = verification_catalog();
  std::vector<CheckRow> rows(cat.size());
  parallel_for(cat.size(), cfg.threads, [&](std::size_t i) {
    const auto &e = cat[i];
    auto dd = derived_data(*e.group);
    uint32_t d = d_min_generators(*e.group).d;
    uint64_t bound = e.group->order() == 1
                         ? 0
                         : uint64_t(dd.derived_length) * (d > 0 ? d - 1 : 0) + 1;
    auto seq = prop_le_construct(e.group, cfg.subgroup_cap, cfg.order_cap);
    bool ok = seq.size() <= bound || e.group->order() == 1;
    std::vector<uint32_t> classes;
    for (uint32_t x : seq) classes.push_back(e.group->class_of(x));
    if (e.group->order() > 1)
      ok = ok && invariably_generates(*e.group, classes, cfg.subgroup_cap).ok;
    rows[i] = CheckRow{e.expr + " constructed size vs l(d-1)+1",
                       "<= " + std::to_string(bound), std::to_string(seq.size()), ok};
  });
  rep.rows = std::move(rows);
  for (const auto &r : rep.rows) rep.pass = rep.pass && r.pass;
  return rep;
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = {
      "centraliser", "h1",    "wedderburn", "lifting-iff",
      "prop-geq",    "tower", "dichotomy",  "prop-le"};
  return names;
}

SuiteReport run_suite(const std::string &name, const RunConfig &cfg) {
  if (name == "centraliser") return suite_centraliser(cfg);
  if (name == "h1") return suite_h1(cfg);
  if (name == "wedderburn") return suite_wedderburn(cfg);
  if (name == "lifting-iff") return suite_lifting_iff(cfg);
  if (name == "prop-geq") return suite_prop_geq(cfg);
  if (name == "tower") return suite_tower(cfg);
  if (name == "dichotomy") return suite_dichotomy(cfg);
  if (name == "prop-le") return suite_prop_le(cfg);
  throw Error(ErrorKind::UnknownSuite, "no suite named \"" + name + "\"");
}

} // namespace invgen
