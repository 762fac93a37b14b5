// twloop: folded root data, structure constants, affine Cartan matrices,
// verification suites and the SU_3 decomposer.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "twloop/serialize.hpp"
#include "twloop/suites.hpp"

using namespace twloop;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CaseArgs {
  std::string type = "A";
  int rank = 4;
  int r = 2;

  void add(CLI::App* app) {
    app->add_option("--type", type, "A, D or E")->check(CLI::IsMember({"A", "D", "E"}));
    app->add_option("--rank", rank, "rank N of X_N")->check(CLI::Range(1, 8));
    app->add_option("--r", r, "order of the diagram automorphism")->check(CLI::IsMember({1, 2, 3}));
  }
  char t() const { return type[0]; }
  void require_supported() const {
    if (!supported_case(t(), rank, r))
      throw UsageError("unsupported case " + type + std::to_string(rank) + " with r = " + std::to_string(r));
  }
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// a matrix object, or any object carrying one under "matrix"
MatS read_matrix(const std::string& path) {
  json j = read_json(path);
  try {
    return mat_from_json(j.is_object() && j.contains("matrix") ? j.at("matrix") : j);
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int cmd_fold(const CaseArgs& c, bool as_json) {
  c.require_supported();
  FoldedSystem fs(RootSystem(c.t(), c.rank), c.r);
  json j = fold_json(fs);
  if (as_json) {
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << j["case"].get<std::string>() << "  X^sigma = " << j["label"].get<std::string>() << "\n";
  std::cout << "pi(Delta_+):\n";
  for (const auto& part : j["partition"]) {
    std::cout << "  " << part["type"].get<std::string>() << " " << part["length"].get<std::string>() << ":";
    for (const auto& m : part["roots"]) std::cout << " " << m.get<std::string>();
    std::cout << "\n";
  }
  std::cout << "correspondence:\n";
  for (const auto& f : j["roots"])
    std::cout << "  " << f["name"].get<std::string>() << " <-> " << f["corr"]["name"].get<std::string>() << "  ("
              << f["type"].get<std::string>() << (f["in_delta_sigma"].get<bool>() ? "" : ", not in Delta^sigma")
              << ")\n";
  return 0;
}

int cmd_constants(const CaseArgs& c) {
  c.require_supported();
  LoopAlgebra alg(c.t(), c.rank, c.r);
  std::cout << constants_json(alg).dump() << "\n";
  return 0;
}

int cmd_gcm(const CaseArgs& c, bool as_json) {
  c.require_supported();
  LoopAlgebra alg(c.t(), c.rank, c.r);
  AffineGCM g = chev_generators(alg);
  if (as_json) {
    std::cout << gcm_json(alg, g).dump() << "\n";
  } else {
    std::cout << alg.label() << (g.symmetrizable ? "  symmetrizable\n" : "  not symmetrizable\n");
    for (const auto& row : g.A) {
      for (int v : row) std::cout << (v >= 0 ? "  " : " ") << v;
      std::cout << "\n";
    }
  }
  return is_gcm(g.A) && g.symmetrizable ? 0 : 1;
}

int cmd_verify(SuiteConfig cfg, const CaseArgs& c, const std::string& model, bool as_json) {
  cfg.type = c.t();
  cfg.rank = c.rank;
  cfg.r = c.r;
  cfg.model = model == "natural" ? ModelKind::Natural : ModelKind::Adjoint;
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<Record> recs = run_suites(cfg);
  int pass = 0, fail = 0, skip = 0;
  for (const auto& rec : recs) {
    (rec.status == "pass" ? pass : rec.status == "fail" ? fail : skip)++;
    if (as_json) std::cout << to_json(rec).dump() << "\n";
  }
  if (!as_json) {
    size_t w = 0;
    for (const auto& rec : recs) w = std::max(w, rec.suite.size() + rec.name.size() + 2);
    for (const auto& rec : recs) {
      std::string id = rec.suite + "  " + rec.name;
      std::cout << (rec.status == "pass" ? "PASS  " : rec.status == "fail" ? "FAIL  " : "SKIP  ") << id
                << std::string(w - id.size() + 2, ' ') << rec.detail << "\n";
    }
    std::cout << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  }
  return all_passed(recs) ? 0 : 1;
}

int cmd_su3_check(const std::string& path) {
  MatS m = read_matrix(path);
  bool ok;
  try {
    ok = is_su3(m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
  std::cout << json{{"su3", ok}}.dump() << "\n";
  return ok ? 0 : 1;
}

int cmd_su3_decompose(const std::string& path, bool trace) {
  MatS m = read_matrix(path);
  if (m.dim() != 3 || m.r() != 2) throw UsageError(path + ": SU3 matrices are 3x3 with r = 2");
  std::pair<SU3Word, DecompTrace> res;
  try {
    res = decompose(m);
  } catch (const std::invalid_argument& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  bool ok = eval(res.first) == m;
  json out = {{"word", to_json(res.first)}, {"length", res.first.size()}, {"verified", ok}};
  if (trace) out["trace"] = to_json(res.second);
  std::cout << out.dump() << "\n";
  return ok ? 0 : 1;
}

int cmd_su3_random(int len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SU3Word w = random_su3_word(rng, len);
  std::cout << json{{"len", len}, {"seed", seed}, {"word", to_json(w)}, {"matrix", to_json(eval(w))}}.dump()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted loop groups: folding data, verification suites, SU3 decomposition"};
  app.require_subcommand(1);

  bool as_json = false;
  CaseArgs fold_case, const_case, gcm_case, verify_case;

  auto* fold = app.add_subcommand("fold", "folded root system and correspondence table");
  fold_case.add(fold);
  fold->add_flag("--json", as_json, "emit JSON");

  auto* constants = app.add_subcommand("constants", "Chevalley structure constants and k signs as JSON");
  const_case.add(constants);

  auto* gcm = app.add_subcommand("affine-gcm", "the affine generalized Cartan matrix");
  gcm_case.add(gcm);
  gcm->add_flag("--json", as_json, "emit JSON");

  SuiteConfig cfg;
  std::string model = "adjoint";
  std::string suite_help = "one of all";
  for (const auto& s : suite_names()) suite_help += ", " + s;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify_case.add(verify);
  verify->add_option("--suite", cfg.suite, suite_help);
  verify->add_option("--samples", cfg.samples, "sample count (default per suite)")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--nmax", cfg.nmax, "bound on |n| for affine roots")->check(CLI::NonNegativeNumber);
  verify->add_flag("--slow", cfg.slow, "include the E6 adjoint checks");
  verify->add_option("--model", model, "natural or adjoint")->check(CLI::IsMember({"natural", "adjoint"}));
  verify->add_flag("--json", as_json, "line-delimited JSON records");

  auto* su3 = app.add_subcommand("su3", "SU3 over Q[z^{1/2}, z^{-1/2}]");
  su3->require_subcommand(1);
  std::string path;
  bool trace = false;
  int len = 8;
  std::uint64_t seed = 1;
  auto* check = su3->add_subcommand("check", "test membership of a matrix file");
  check->add_option("file", path, "matrix JSON")->required();
  auto* dec = su3->add_subcommand("decompose", "write a member as a word in elementary generators");
  dec->add_option("file", path, "matrix JSON")->required();
  dec->add_flag("--trace", trace, "include the reduction trace");
  auto* rnd = su3->add_subcommand("random-word", "a random generator word and its matrix");
  rnd->add_option("--len", len, "word length")->check(CLI::NonNegativeNumber);
  rnd->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*fold) return cmd_fold(fold_case, as_json);
    if (*constants) return cmd_constants(const_case);
    if (*gcm) return cmd_gcm(gcm_case, as_json);
    if (*verify) return cmd_verify(cfg, verify_case, model, as_json);
    if (*check) return cmd_su3_check(path);
    if (*dec) return cmd_su3_decompose(path, trace);
    if (*rnd) return cmd_su3_random(len, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
