#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "invgen/catalog.hpp"
#include "invgen/config.hpp"
#include "invgen/errors.hpp"
#include "invgen/expr.hpp"
#include "invgen/serialize.hpp"
#include "invgen/verify.hpp"

using namespace invgen;
using nlohmann::json;

namespace {

// Exit codes: 0 pass, 1 check failure, 2 usage/parse error, 3 resource cap.
constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

int exit_code_for(const Error &e) {
  if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::UnknownSuite ||
      e.kind() == ErrorKind::NonCoprimePrime)
    return kExitUsage;
  if (e.is_cap()) return kExitCap;
  return kExitCheckFailure;
}

void add_common_flags(CLI::App *cmd, RunConfig &cfg) {
  cmd->add_option("--order-cap", cfg.order_cap, "Element enumeration cap");
  cmd->add_option("--subgroup-cap", cfg.subgroup_cap, "Subgroup enumeration cap");
  cmd->add_option("--cohomology-cap", cfg.cohomology_cap, "H^1 group-order cap");
  cmd->add_option("--brute-budget", cfg.brute_budget, "Witness search order budget");
  cmd->add_option("--seed", cfg.seed, "Meataxe seed");
  cmd->add_option("--format", cfg.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", cfg.out_path, "Write output to a file");
  cmd->add_option("--threads", cfg.threads, "Internal parallelism bound");
  cmd->add_flag("--recheck", cfg.recheck, "Re-verify emitted certificates from raw data");
}

void emit(const RunConfig &cfg, std::string text) {
  if (text.empty() || text.back() != '\n') text += '\n';
  if (cfg.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    out << text;
  }
}

std::string csv_escape(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string suite_csv(const SuiteReport &rep) {
  std::string out = "suite,check,expected,actual,pass\n";
  for (const auto &r : rep.rows)
    out += csv_escape(rep.suite) + "," + csv_escape(r.name) + "," + csv_escape(r.expected) +
           "," + csv_escape(r.actual) + "," + (r.pass ? "true" : "false") + "\n";
  return out;
}

std::string kv_csv(const json &j) {
  std::string out = "key,value\n";
  for (auto it = j.begin(); it != j.end(); ++it)
    out += csv_escape(it.key()) + "," + csv_escape(it.value().is_string()
                                                       ? it.value().get<std::string>()
                                                       : it.value().dump()) +
           "\n";
  return out;
}

int cmd_analyze(const std::string &expr, RunConfig &cfg) {
  auto S = parse_group_expr(expr, cfg.order_cap);
  json j;
  j["expr"] = expr;
  j["order"] = S->order().str();
  json fact;
  for (auto [p, e] : S->order_factorization()) fact[std::to_string(p)] = e;
  j["order_factored"] = fact;
  json pi = json::array();
  for (auto [p, e] : S->order_factorization()) pi.push_back(p);
  j["pi"] = pi;
  j["min_pi"] = S->min_prime();
  j["soluble"] = S->soluble();
  if (S->derived_length()) j["derived_length"] = *S->derived_length();

  json errors = json::object();
  bool cap_hit = false, check_failed = false;

  if (S->materializable(cfg.order_cap)) {
    PermGroupPtr G = S->materialize(cfg.order_cap).group;
    j["degree"] = G->degree();
    j["exponent"] = G->exponent();
    auto dd = derived_data(*G);
    if (dd.is_soluble) j["derived_length"] = dd.derived_length;
    j["n_conjugacy_classes"] = G->conjugacy_classes().size();
    j["d"] = d_min_generators(*G).d;
    try {
      auto di = compute_d_I(*G, cfg.subgroup_cap);
      j["d_I"] = di.value;
      json cert = certificate_json(*G, expr, di.cert, true);
      j["certificates"] = json{{"d_I", cert}};
      if (cfg.recheck) j["recheck"] = recheck_certificate(*G, cert, cfg.subgroup_cap);
    } catch (const Error &e) {
      errors["d_I"] = e.what();
      cap_hit = cap_hit || e.is_cap();
      check_failed = check_failed || !e.is_cap();
    }
  } else {
    // Structured-only analysis.
    try {
      if (S->annotation_complete())
        j["d"] = gaschutz_d(*S);
      else if (S->d_formula())
        j["d"] = *S->d_formula();
    } catch (const Error &e) {
      errors["d"] = e.what();
    }
    try {
      uint32_t upper = structured_dI_upper_bound(*S, cfg.subgroup_cap);
      uint32_t lower = compute_d_I(*S->top_group(), cfg.subgroup_cap).value;
      if (j.contains("d")) lower = std::max(lower, j["d"].get<uint32_t>());
      json tuples;
      while (lower < upper) {
        auto bound = structured_dI_lower_bound(*S, lower, cfg.subgroup_cap);
        if (!bound.certified) break;
        tuples = structured_bound_json(*S, bound);
        ++lower;
      }
      j["d_I_lower"] = lower;
      j["d_I_upper"] = upper;
      if (lower == upper) j["d_I"] = lower;
      if (!tuples.is_null()) j["certificates"] = json{{"d_I_lower", tuples}};
    } catch (const Error &e) {
      errors["d_I"] = e.what();
      cap_hit = cap_hit || e.is_cap();
      check_failed = check_failed || !e.is_cap();
    }
  }

  if (!errors.empty()) j["errors"] = errors;
  emit(cfg, cfg.format == "csv" ? kv_csv(j) : j.dump(2));
  if (cap_hit) return kExitCap;
  if (check_failed) return kExitCheckFailure;
  return kExitPass;
}

int cmd_verify(const std::string &suite, RunConfig &cfg) {
  auto rep = run_suite(suite, cfg);
  if (cfg.format == "csv") {
    emit(cfg, suite_csv(rep));
  } else {
    json j;
    j["suite"] = rep.suite;
    j["pass"] = rep.pass;
    json rows = json::array();
    for (const auto &r : rep.rows)
      rows.push_back(json{{"check", r.name},
                          {"expected", r.expected},
                          {"actual", r.actual},
                          {"pass", r.pass}});
    j["rows"] = rows;
    emit(cfg, j.dump(2));
  }
  return rep.pass ? kExitPass : kExitCheckFailure;
}

int cmd_decompose(const std::string &expr, uint64_t q, RunConfig &cfg) {
  auto S = parse_group_expr(expr, cfg.order_cap);
  PermGroupPtr G = S->materialize(cfg.order_cap).group;
  if (!is_prime_u64(q))
    throw Error(ErrorKind::ParseError, "q must be prime");
  if (G->order() % q == 0)
    throw Error(ErrorKind::NonCoprimePrime,
                "q = " + std::to_string(q) + " divides |G| = " + std::to_string(G->order()));
  GModule reg = regular_module(G, uint32_t(q), cfg.order_cap);
  auto dec = meataxe_decompose(reg, cfg.seed);
  json j = decomposition_json(expr, uint32_t(q), dec);
  // Splitting-field assertions when exp(G) | q - 1.
  bool splitting = (q - 1) % G->exponent() == 0;
  j["splitting_prime"] = splitting;
  bool ok = true;
  if (splitting) {
    uint64_t sum_sq = 0;
    for (const auto &c : dec.components) {
      if (c.endo_dim != 1 || c.multiplicity != c.module.dim) ok = false;
      sum_sq += uint64_t(c.multiplicity) * c.multiplicity;
    }
    if (sum_sq != G->order()) ok = false;
    j["splitting_checks_pass"] = ok;
    if (!ok)
      throw Error(ErrorKind::SplittingAssumptionViolated,
                  "splitting-field consequences failed at q = " + std::to_string(q));
  }
  if (cfg.recheck) {
    // Conjugating the action by the emitted basis must show the blocks.
    MatFp T = dec.change_of_basis;
    MatFp Ti = mat_inverse(T);
    bool blocks = true;
    for (const auto &g : reg.gen_action) {
      MatFp conj = mat_mul(mat_mul(T, g), Ti);
      uint32_t off = 0;
      for (const auto &c : dec.components)
        for (uint32_t copy = 0; copy < c.multiplicity; ++copy) {
          for (uint32_t i = 0; i < c.module.dim; ++i)
            for (uint32_t col = 0; col < conj.cols; ++col)
              if ((col < off || col >= off + c.module.dim) && conj.at(off + i, col) != 0)
                blocks = false;
          off += c.module.dim;
        }
    }
    j["recheck"] = blocks;
    if (!blocks) ok = false;
  }
  emit(cfg, cfg.format == "csv" ? kv_csv(j) : j.dump(2));
  return ok ? kExitPass : kExitCheckFailure;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"invgen: generation and invariable generation of finite soluble groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string expr, suite;
  uint64_t prime = 0;

  auto *analyze = app.add_subcommand("analyze", "Order, classes, d(G), d_I(G), certificates");
  analyze->add_option("expr", expr, "Group expression, e.g. S3, sdc(7,3,2), wr(43,1,sdc(7,3,2))")
      ->required();
  add_common_flags(analyze, cfg);

  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "One of: centraliser h1 wedderburn lifting-iff prop-geq tower dichotomy prop-le")
      ->required();
  add_common_flags(verify, cfg);

  auto *decompose = app.add_subcommand("decompose", "Split the regular module F_qG");
  decompose->add_option("expr", expr, "Group expression")->required();
  decompose->add_option("--prime,-q", prime, "Field characteristic (coprime to |G|)")
      ->required();
  add_common_flags(decompose, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(expr, cfg);
    if (verify->parsed()) return cmd_verify(suite, cfg);
    if (decompose->parsed()) return cmd_decompose(expr, prime, cfg);
  } catch (const Error &e) {
    json err;
    err["error"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return exit_code_for(e);
  } catch (const std::exception &e) {
    std::cerr << "{\"error\": \"" << e.what() << "\"}\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
