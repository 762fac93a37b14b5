#include "twloop/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

namespace twloop {

bool Record::operator<(const Record& o) const {
  return std::tie(suite, name, status, detail) < std::tie(o.suite, o.name, o.status, o.detail);
}

json to_json(const Record& rec) {
  return {{"suite", rec.suite}, {"case", rec.name}, {"status", rec.status}, {"detail", rec.detail}};
}

bool all_passed(const std::vector<Record>& recs) {
  return std::none_of(recs.begin(), recs.end(), [](const Record& r) { return r.status == "fail"; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"signs",  "affine", "chevalley-pairs", "norms", "agroup",
                                                 "matrep", "kernel", "gal-act",         "diagram", "su3"};
  return names;
}

bool supported_case(char type, int rank, int r) {
  switch (r) {
    case 1: return (type == 'A' && rank >= 1 && rank <= 5) || (type == 'D' && (rank == 4 || rank == 5)) ||
                   (type == 'E' && rank == 6);
    case 2: return (type == 'A' && rank >= 2 && rank <= 5) || (type == 'D' && (rank == 4 || rank == 5)) ||
                   (type == 'E' && rank == 6);
    case 3: return type == 'D' && rank == 4;
  }
  return false;
}

void validate(const SuiteConfig& cfg) {
  const auto& names = suite_names();
  if (cfg.suite != "all" && std::find(names.begin(), names.end(), cfg.suite) == names.end())
    throw std::invalid_argument("unknown suite: " + cfg.suite);
  if (!supported_case(cfg.type, cfg.rank, cfg.r))
    throw std::invalid_argument("unsupported case: " + std::string(1, cfg.type) + std::to_string(cfg.rank) +
                                " with r = " + std::to_string(cfg.r));
  if (cfg.samples < 0) throw std::invalid_argument("sample count must be >= 1");
  if (cfg.nmax < 0) throw std::invalid_argument("nmax must be >= 0");
  if (cfg.model == ModelKind::Natural && cfg.type != 'A')
    throw std::invalid_argument("the natural model exists for type A only");
}

namespace {

struct Ctx {
  const SuiteConfig& cfg;
  const LoopAlgebra& alg;
  std::string suite;
  std::vector<Record>& out;
  std::mt19937_64 rng;

  const FoldedSystem& fs() const { return alg.fs(); }
  int count(int fallback) const { return cfg.samples > 0 ? cfg.samples : fallback; }
  std::string key(const std::string& check) const { return alg.label() + "/" + check; }

  void pass(const std::string& check, const std::string& detail) { out.push_back({suite, key(check), "pass", detail}); }
  void fail(const std::string& check, const std::string& detail) { out.push_back({suite, key(check), "fail", detail}); }
  void skip(const std::string& check, const std::string& detail) { out.push_back({suite, key(check), "skip", detail}); }
  void check(const std::string& check, bool ok, const std::string& ok_detail, const std::string& bad_detail) {
    ok ? pass(check, ok_detail) : fail(check, bad_detail);
  }
  void report(const std::string& check, const std::vector<std::string>& fails, const std::string& ok_detail) {
    if (fails.empty()) pass(check, ok_detail);
    else fail(check, std::to_string(fails.size()) + " failures; first: " + fails[0]);
  }
};

std::string n_of(long n, const std::string& what) { return std::to_string(n) + " " + what; }

bool gated(Ctx& c, const std::string& check) {
  if (c.cfg.type == 'E' && !c.cfg.slow) {
    c.skip(check, "E6 adjoint checks need --slow");
    return true;
  }
  return false;
}

void run_signs(Ctx& c) {
  const RootSystem& R = c.alg.rs();
  long pairs = 0;
  for (int a = 0; a < R.size(); ++a)
    for (int b = 0; b < R.size(); ++b) pairs += R.sum_index(a, b) >= 0;
  c.report("identities", verify_sign_identities(c.fs(), c.alg.tbl()),
           n_of(R.size(), "roots, ") + n_of(pairs, "composable pairs"));
}

void run_affine(Ctx& c) {
  AffineGCM g = chev_generators(c.alg);
  bool same = g.A == gcm_from_form(c.alg);
  c.check("gcm", is_gcm(g.A) && g.symmetrizable && same, "symmetrizable GCM of size " + std::to_string(g.A.size()),
          std::string(is_gcm(g.A) ? "" : "not a GCM; ") + (g.symmetrizable ? "" : "not symmetrizable; ") +
              (same ? "" : "differs from the form"));
  c.report("serre", verify_serre(c.alg, g), "all generator relations hold");
}

void run_pairs(Ctx& c) {
  long n = static_cast<long>(real_roots(c.alg, c.cfg.nmax).size());
  c.report("pairs", verify_pairs(c.alg, c.cfg.nmax), n_of(n, "real roots with |n| <= " + std::to_string(c.cfg.nmax)));
}

void run_norms(Ctx& c) {
  const std::map<RootType, Rat> want = {
      {RootType::R1, 2}, {RootType::R2, 1}, {RootType::R3, Rat(1, 2)}, {RootType::R4, Rat(2, 3)}};
  std::map<RootType, std::pair<long, std::vector<std::string>>> seen;
  for (const AffRoot& x : real_roots(c.alg, c.cfg.nmax)) {
    RootType t = c.fs().at(x.a).type;
    auto& [n, fails] = seen[t];
    ++n;
    Rat got = norm_sq(c.alg, x);
    if (got != want.at(t))
      fails.push_back(root_string(x.a, "a") + " + " + std::to_string(x.n) + "delta has norm " + rat_to_string(got));
  }
  for (const auto& [t, v] : seen)
    c.report(type_name(t), v.second, "norm " + rat_to_string(want.at(t)) + " on " + n_of(v.first, "roots"));
}

// chi = (s, s sigma'(s)/2) + (0, u - sigma'(u)) covers A_K
AElt random_aelt(std::mt19937_64& rng) {
  Laurent s = random_laurent(rng, 2, 1 + static_cast<int>(rng() % 3));
  Laurent u = random_laurent(rng, 2, 1 + static_cast<int>(rng() % 2));
  return a_plus(a_act(s, {Laurent::constant(2, 1), Laurent::constant(2, Rat(1, 2))}),
                {Laurent(2), u - u.sigma_prime()});
}

void run_agroup(Ctx& c) {
  int n = c.count(1000);
  AElt zero = a_zero(2);
  std::map<std::string, std::vector<std::string>> fails;
  const char* laws[] = {"associativity", "unit", "inverse", "closure", "action"};
  for (const char* l : laws) fails[l];
  for (int i = 0; i < n; ++i) {
    AElt x = random_aelt(c.rng), y = random_aelt(c.rng), z = random_aelt(c.rng);
    Laurent s = random_laurent(c.rng, 2, 1 + static_cast<int>(c.rng() % 2));
    Laurent t = random_laurent(c.rng, 2, 1);
    std::string at = "triple " + std::to_string(i);
    if (!in_A(x) || !in_A(y) || !in_A(z)) fails["closure"].push_back(at + ": sampler left A_K");
    if (a_plus(a_plus(x, y), z) != a_plus(x, a_plus(y, z))) fails["associativity"].push_back(at);
    if (a_plus(x, zero) != x || a_plus(zero, x) != x) fails["unit"].push_back(at);
    if (a_plus(x, a_neg(x)) != zero || a_plus(a_neg(x), x) != zero) fails["inverse"].push_back(at);
    if (!in_A(a_plus(x, y)) || !in_A(a_neg(x)) || !in_A(a_act(s, x))) fails["closure"].push_back(at);
    if (a_act(s, a_act(t, x)) != a_act(s * t, x) || a_act(Laurent::constant(2, 1), x) != x ||
        a_act(s, a_plus(x, y)) != a_plus(a_act(s, x), a_act(s, y)))
      fails["action"].push_back(at);
  }
  for (const auto& [law, f] : fails) c.report(law, f, n_of(n, "random triples"));

  // h-atoms on an R-3 root are trivial exactly when the product of c(zeta, gamma) is 1
  const FoldedSystem& fs = c.fs();
  if (!fs.a_even()) {
    c.skip("mult-h", "no roots of type R-3");
    return;
  }
  Laurent one = Laurent::constant(2, 1), half = Laurent::constant(2, Rat(1, 2));
  std::vector<AElt> star;
  for (Laurent s : {one, -one, Laurent::constant(2, 2), Laurent::zmono(2, 1)}) star.push_back(a_act(s, {one, half}));
  star.push_back({Laurent(2), Laurent::zmono(2, 1)});
  star.push_back({Laurent(2), -Laurent::zmono(2, 1)});
  std::vector<std::pair<AElt, AElt>> pairs;
  for (const auto& z : star)
    for (const auto& g : star) pairs.push_back({z, g});
  std::vector<std::string> bad;
  long words = 0, trivial = 0;
  for (const auto& f : fs.roots()) {
    if (f.type != RootType::R3) continue;
    std::string at = root_string(f.coords, "a");
    for (size_t i = 0; i < pairs.size(); ++i) {
      GenAtom hi = ht(fs, f.coords, pairs[i].first, pairs[i].second);
      Laurent ci = c_of(pairs[i].first, pairs[i].second);
      ++words;
      trivial += ci.is_one();
      if (kernel_test(fs, {hi}) != ci.is_one()) bad.push_back(at + " single " + std::to_string(i));
      for (size_t k = 0; k < pairs.size(); ++k) {
        GenAtom hk = ht(fs, f.coords, pairs[k].first, pairs[k].second);
        bool one_c = (ci * c_of(pairs[k].first, pairs[k].second)).is_one();
        ++words;
        trivial += one_c;
        if (kernel_test(fs, {hi, hk}) != one_c) bad.push_back(at + " pair " + std::to_string(i) + "," + std::to_string(k));
      }
    }
  }
  c.report("mult-h", bad, n_of(words, "words, ") + n_of(trivial, "with trivial c-product"));
}

void run_matrep(Ctx& c) {
  const char* checks[] = {"xsx", "wsw", "hsh", "commutator", "eta", "agreement"};
  if (c.cfg.type == 'E' && !c.cfg.slow) {
    for (const char* k : checks) gated(c, k);
    return;
  }
  const FoldedSystem& fs = c.fs();
  const RootSystem& R = c.alg.rs();
  RepModel m(c.cfg.model, fs);
  RepModel adj_own(ModelKind::Adjoint, fs);
  const RepModel& adj = c.cfg.model == ModelKind::Adjoint ? m : adj_own;
  std::string model = model_name(m.kind());

  // at least `samples` payloads on every root type
  int per_type = c.count(100);
  std::map<RootType, int> roots_of;
  for (const auto& f : fs.roots()) ++roots_of[f.type];
  int fewest = std::min_element(roots_of.begin(), roots_of.end(), [](auto& a, auto& b) {
                 return a.second < b.second;
               })->second;
  int per_root = (per_type + fewest - 1) / fewest;
  std::uint64_t lemma_seed = c.rng();
  for (Lemma l : {Lemma::XSX, Lemma::WSW, Lemma::HSH})
    c.report(lemma_name(l), verify_lemma(l, m, per_root, lemma_seed),
             model + ", " + n_of(per_root, "payloads per root, ") + n_of(per_root * fewest, "or more per type"));

  CijTable cij = cij_table(adj);
  struct PairInput {
    int a, b;
    Laurent nu, mu, s;
  };
  std::vector<PairInput> inputs;
  for (int a = 0; a < R.size(); ++a)
    for (int b = 0; b < R.size(); ++b) {
      if (b == a || b == R.neg(a)) continue;
      Laurent nu = random_laurent(c.rng, m.r(), 2), mu = random_laurent(c.rng, m.r(), 1);
      inputs.push_back({a, b, nu, mu, random_unit(c.rng, m.r())});
    }
  std::vector<std::string> bad;
  for (const auto& p : inputs)
    if (!commutator_check(m, cij, p.a, p.b, p.nu, p.mu))
      bad.push_back(root_string(R.root(p.a), "alpha") + ", " + root_string(R.root(p.b), "alpha"));
  c.report("commutator", bad, model + ", " + n_of(static_cast<long>(inputs.size()), "ordered pairs"));

  bad.clear();
  long pairs = 0;
  for (int a = 0; a < R.size(); ++a)
    for (int b = 0; b < R.size(); ++b) {
      ++pairs;
      std::string at = root_string(R.root(a), "alpha") + ", " + root_string(R.root(b), "alpha");
      try {
        int e = eta_check(adj, a, b);
        if (a == b && e != -1) bad.push_back(at + ": eta(a, a) != -1");
        if (m.kind() == ModelKind::Natural && !conjugation_check(m, a, b, Laurent::constant(m.r(), 1), e))
          bad.push_back(at + ": conjugation in the natural model");
      } catch (const std::logic_error& e) {
        bad.push_back(at + ": " + e.what());
      }
    }
  c.report("eta", bad, n_of(pairs, "ordered pairs"));

  if (c.cfg.type != 'A') {
    c.skip("agreement", "the natural model exists for type A only");
    return;
  }
  RepModel other(m.kind() == ModelKind::Natural ? ModelKind::Adjoint : ModelKind::Natural, fs);
  const RepModel& nat = m.kind() == ModelKind::Natural ? m : other;
  bad.clear();
  for (Lemma l : {Lemma::XSX, Lemma::WSW, Lemma::HSH})
    if (verify_lemma(l, nat, per_root, lemma_seed) != verify_lemma(l, adj, per_root, lemma_seed))
      bad.push_back(lemma_name(l) + " reports differ");
  long shared = 0;
  for (const auto& p : inputs) {
    std::string at = root_string(R.root(p.a), "alpha") + ", " + root_string(R.root(p.b), "alpha");
    if (commutator_check(nat, cij, p.a, p.b, p.nu, p.mu) != commutator_check(adj, cij, p.a, p.b, p.nu, p.mu))
      bad.push_back(at + ": commutator truth values differ");
    int e = eta_check(adj, p.a, p.b);
    if (!conjugation_check(nat, p.a, p.b, p.s, e) || !conjugation_check(adj, p.a, p.b, p.s, e))
      bad.push_back(at + ": conjugation by w differs from eta");
    shared += 3;
  }
  c.report("agreement", bad, "natural and adjoint agree on 3 lemma scans and " + n_of(shared, "pair checks"));
}

void run_kernel(Ctx& c) {
  const FoldedSystem& fs = c.fs();
  int taus = c.count(20);
  std::vector<std::string> bad, bad_c;
  long fixed_checks = 0;
  for (int i = 0; i < taus; ++i) {
    Rat tau = random_rat(c.rng);
    GenWord w = phi(fs, zk_element(fs, tau));
    if (!kernel_test(fs, w)) bad.push_back("tau = " + rat_to_string(tau));
    // the (A_2l, 2) condition c(zeta, gamma) = sigma'(c(zeta, gamma)), read literally
    for (const GenAtom& g : w)
      if (g.kind == AtomKind::HT && fs.at(g.a).type == RootType::R3) {
        Laurent cz = c_of(g.chi, g.gamma);
        ++fixed_checks;
        if (cz != cz.sigma_prime()) bad_c.push_back("tau = " + rat_to_string(tau) + ": c = " + cz.str());
      }
  }
  c.report("center", bad, n_of(taus, "random tau"));
  if (fs.a_even()) c.report("c-fixed", bad_c, n_of(fixed_checks, "R-3 payloads"));

  const int perturbed = 50;
  bad.clear();
  for (int i = 0; i < perturbed; ++i) {
    Rat tau = random_rat(c.rng);
    std::vector<KMAtom> z = zk_element(fs, tau);
    size_t p = c.rng() % z.size();
    Rat rho;
    do rho = random_rat(c.rng);
    while (rho == 1 || rho == -1);
    z[p].nu *= rho;
    if (kernel_test(fs, phi(fs, z)))
      bad.push_back("tau = " + rat_to_string(tau) + ", index " + std::to_string(p) + " times " + rat_to_string(rho));
  }
  c.report("perturbed", bad, n_of(perturbed, "perturbed words rejected"));
}

void run_gal_act(Ctx& c) {
  if (gated(c, "identities")) return;
  c.report("identities", verify_gal_act(c.fs(), c.alg.tbl()), "comm-sigma and conj-sigma on every pair");
}

void run_diagram(Ctx& c) {
  if (gated(c, "psi-theta")) return;
  RepModel m(c.cfg.model, c.fs());
  int n = c.count(50);
  c.report("psi-theta", verify_diagram(m, n, c.rng()),
           model_name(m.kind()) + ", " + n_of(n, "atoms per root type and kind"));
}

void run_su3(Ctx& c) {
  const char* checks[] = {"round-trip", "membership", "descent", "measure"};
  if (!(c.cfg.type == 'A' && c.cfg.rank == 2 && c.cfg.r == 2)) {
    for (const char* k : checks) c.skip(k, "SU3 is the case A2 with r = 2");
    return;
  }
  int n = c.count(200);
  std::vector<std::string> trip, member, descent, growth;
  long steps = 0, euclid = 0;
  for (int i = 0; i < n; ++i) {
    int len = static_cast<int>(c.rng() % 13);
    SU3Word w = random_su3_word(c.rng, len);
    MatS m = eval(w);
    std::string at = "word " + std::to_string(i);
    try {
      auto [word, trace] = decompose(m);
      if (eval(word) != m) trip.push_back(at);
      // k11 + k31 never grows; swaps trade k11 for k31, so k11 alone can
      auto measure = [](const MatS& c) { return c.at(0, 0).spread() + c.at(2, 0).spread(); };
      int last = measure(m);
      for (size_t k = 0; k < trace.size(); ++k) {
        const TraceStep& s = trace[k];
        ++steps;
        if (!is_su3(s.state)) member.push_back(at + " step " + std::to_string(k));
        if (s.kind == StepKind::Terminal) continue;
        if (measure(s.state) > last) growth.push_back(at + " step " + std::to_string(k));
        last = measure(s.state);
        if (s.kind != StepKind::Euclid) continue;
        ++euclid;
        if (s.k11_after >= s.k11_before) descent.push_back(at + " step " + std::to_string(k));
      }
    } catch (const std::exception& e) {
      trip.push_back(at + ": " + e.what());
    }
  }
  c.report("round-trip", trip, n_of(n, "random words"));
  c.report("membership", member, n_of(steps, "intermediate states"));
  c.report("descent", descent, n_of(euclid, "euclid steps"));
  c.report("measure", growth, "k11 + k31 non-increasing over " + n_of(steps, "steps"));
}

const std::map<std::string, std::function<void(Ctx&)>>& runners() {
  static const std::map<std::string, std::function<void(Ctx&)>> m = {
      {"signs", run_signs},   {"affine", run_affine},   {"chevalley-pairs", run_pairs},
      {"norms", run_norms},   {"agroup", run_agroup},   {"matrep", run_matrep},
      {"kernel", run_kernel}, {"gal-act", run_gal_act}, {"diagram", run_diagram},
      {"su3", run_su3}};
  return m;
}

}  // namespace

std::vector<Record> run_suites(const SuiteConfig& cfg) {
  validate(cfg);
  LoopAlgebra alg(cfg.type, cfg.rank, cfg.r);
  std::vector<Record> out;
  const auto& names = suite_names();
  for (size_t i = 0; i < names.size(); ++i) {
    if (cfg.suite != "all" && cfg.suite != names[i]) continue;
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    Ctx c{cfg, alg, names[i], out, std::mt19937_64(seq)};
    try {
      runners().at(names[i])(c);
    } catch (const std::exception& e) {
      c.fail("error", e.what());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twloop
