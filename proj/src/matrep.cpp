#include "twloop/matrep.hpp"

#include <stdexcept>

#include "twloop/loopalg.hpp"

namespace twloop {

MatS::MatS(int r, int n) : r_(r), n_(n), e_(static_cast<size_t>(n) * n, Laurent(r)) {}

MatS MatS::identity(int r, int n) {
  MatS m(r, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Laurent::constant(r, 1);
  return m;
}

MatS MatS::operator*(const MatS& o) const {
  if (n_ != o.n_ || r_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
  MatS out(r_, n_);
  std::vector<std::vector<int>> nz(n_);
  for (int k = 0; k < n_; ++k)
    for (int j = 0; j < n_; ++j)
      if (!o.at(k, j).is_zero()) nz[k].push_back(j);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Laurent& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j : nz[k]) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

MatS MatS::operator+(const MatS& o) const {
  if (n_ != o.n_ || r_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
  MatS out = *this;
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
  return out;
}

MatS MatS::operator-(const MatS& o) const {
  if (n_ != o.n_ || r_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
  MatS out = *this;
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
  return out;
}

MatS MatS::transpose() const {
  MatS out(r_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

MatS MatS::sigma_prime() const {
  MatS out = *this;
  for (auto& x : out.e_) x = x.sigma_prime();
  return out;
}

MatS MatS::omega_prime() const {
  MatS out = *this;
  for (auto& x : out.e_) x = x.omega_prime();
  return out;
}

namespace {

// expansion over row-by-row column subsets
Laurent det_of(const MatS& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  int k = static_cast<int>(rows.size());
  if (k > 12) throw std::invalid_argument("determinant is limited to dimension 12");
  std::vector<Laurent> f(size_t(1) << k, Laurent(m.r()));
  f[0] = Laurent::constant(m.r(), 1);
  for (unsigned mask = 0; mask < f.size(); ++mask) {
    if (f[mask].is_zero()) continue;
    int row = __builtin_popcount(mask);
    if (row == k) continue;
    for (int c = 0; c < k; ++c) {
      if (mask & (1u << c)) continue;
      const Laurent& a = m.at(rows[row], cols[c]);
      if (a.is_zero()) continue;
      bool odd = __builtin_popcount(mask >> c) % 2 == 1;
      Laurent t = f[mask] * a;
      f[mask | (1u << c)] += odd ? -t : t;
    }
  }
  return f.back();
}

}  // namespace

Laurent MatS::det() const {
  std::vector<int> idx(n_);
  for (int i = 0; i < n_; ++i) idx[i] = i;
  return det_of(*this, idx, idx);
}

MatS MatS::inverse() const {
  Laurent d = det();
  if (!d.is_unit()) throw std::domain_error("determinant is not a unit");
  Laurent dinv = d.inv_unit();
  MatS out(r_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      std::vector<int> rows, cols;
      for (int k = 0; k < n_; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      Laurent c = det_of(*this, rows, cols) * dinv;
      out.at(i, j) = (i + j) % 2 ? -c : c;
    }
  return out;
}

bool MatS::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const Laurent& x = at(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

std::string model_name(ModelKind k) { return k == ModelKind::Natural ? "natural" : "adjoint"; }

RepModel::RepModel(ModelKind kind, const FoldedSystem& fs) : kind_(kind), fs_(fs), tbl_(fs) {
  if (kind == ModelKind::Natural) {
    if (fs.rs().type() != 'A') throw std::invalid_argument("the natural model exists for type A only");
    build_natural();
    if (fs.r() > 1) find_J();
  } else {
    build_adjoint();
  }
}

namespace {

using IMat = std::vector<long>;

IMat imul(const IMat& a, const IMat& b, int n) {
  IMat out(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long x = a[i * n + k];
      if (!x) continue;
      for (int j = 0; j < n; ++j) out[i * n + j] += x * b[k * n + j];
    }
  return out;
}

}  // namespace

void RepModel::build_natural() {
  const RootSystem& R = rs();
  int n = R.rank() + 1;
  dim_ = n;
  std::vector<IMat> x(R.size());
  auto comm = [&](const IMat& a, const IMat& b) {
    IMat ab = imul(a, b, n), ba = imul(b, a, n);
    for (size_t i = 0; i < ab.size(); ++i) ab[i] -= ba[i];
    return ab;
  };
  // positives first, then negatives; both in height order
  std::vector<int> order;
  for (int a = 0; a < R.num_pos(); ++a) order.push_back(a);
  for (int a = 0; a < R.num_pos(); ++a) order.push_back(R.neg(a));
  for (int a : order) {
    const Vec& v = R.root(a);
    bool pos = R.is_positive(a);
    IMat m(static_cast<size_t>(n) * n, 0);
    if (std::abs(RootSystem::height(v)) == 1) {
      int i = 0;
      while (v[i] == 0) ++i;
      if (pos) m[i * n + i + 1] = 1;
      else m[(i + 1) * n + i] = 1;
    } else {
      for (int i = 0; i < R.rank(); ++i) {
        int s = pos ? R.simple(i) : R.neg(R.simple(i));
        int b = R.index(vsub(v, R.root(s)));
        if (b < 0) continue;
        m = comm(x[s], x[b]);
        int N = tbl_.N(s, b);
        for (auto& e : m) e /= N;
        break;
      }
    }
    x[a] = m;
  }
  pow_.assign(R.size(), {});
  for (int a = 0; a < R.size(); ++a) {
    std::vector<Entry> es;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (x[a][i * n + j]) es.push_back({i, j, Rat(x[a][i * n + j])});
    if (es.size() != 1) throw std::logic_error("natural image of X_alpha is not elementary");
    pow_[a].push_back(es);
  }
}

void RepModel::build_adjoint() {
  const RootSystem& R = rs();
  int P = R.size();
  int n = P + R.rank();
  dim_ = n;
  pow_.assign(P, {});
  for (int a = 0; a < P; ++a) {
    IMat ad(static_cast<size_t>(n) * n, 0);
    for (int y = 0; y < n; ++y)
      for (auto [b, c] : lie_bracket(R, tbl_, a, y)) ad[b * n + y] += c;
    IMat p = ad;
    long fact = 1;
    for (int m = 1;; ++m) {
      fact *= m;
      std::vector<Entry> es;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          long v = p[i * n + j];
          if (!v) continue;
          if (v % fact) throw std::logic_error("divided power of ad X_alpha is not integral");
          es.push_back({i, j, Rat(v / fact)});
        }
      if (es.empty()) break;
      pow_[a].push_back(es);
      if (m > 4) throw std::logic_error("ad X_alpha is not nilpotent of degree <= 4");
      p = imul(p, ad, n);
    }
  }
  // X_beta -> k_beta X_{sigma beta}, H_i -> H_{sigma i}
  sperm_.resize(n);
  ssign_.resize(n);
  wperm_.resize(n);
  wsign_.resize(n);
  for (int b = 0; b < P; ++b) {
    sperm_[b] = fs_.sigma_root(b);
    ssign_[b] = tbl_.k(b);
    wperm_[b] = fs_.omega_root(b);
    wsign_[b] = tbl_.k_omega(b);
  }
  const DiagramAut& aut = fs_.aut();
  for (int i = 0; i < R.rank(); ++i) {
    sperm_[P + i] = P + aut.perm[i];
    ssign_[P + i] = 1;
    wperm_[P + i] = P + (aut.has_omega() ? aut.omega[i] : i);
    wsign_[P + i] = 1;
  }
}

void RepModel::find_J() {
  const RootSystem& R = rs();
  int n = dim_;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> j(n, 1);
    for (int k = 1; k < n; ++k) j[k] = (mask >> (k - 1)) & 1 ? -1 : 1;
    bool ok = true;
    for (int a = 0; a < R.size() && ok; ++a) {
      // -J tX J^{-1} = k_alpha X_{sigma alpha}
      const Entry& e = pow_[a][0][0];
      const Entry& t = pow_[fs_.sigma_root(a)][0][0];
      int row = n - 1 - e.j, col = n - 1 - e.i;
      Rat got = -e.v * j[row] * j[col];
      ok = t.i == row && t.j == col && t.v * tbl_.k(a) == got;
    }
    if (ok) {
      j_ = j;
      return;
    }
  }
  throw std::logic_error("no antidiagonal J realizes sigma");
}

MatS RepModel::xmat(int root) const {
  MatS m(r(), dim_);
  for (const auto& e : pow_[root][0]) m.at(e.i, e.j) = Laurent::constant(r(), e.v);
  return m;
}

MatS RepModel::unip(int root, const Laurent& s) const {
  MatS m = MatS::identity(r(), dim_);
  Laurent p = s;
  for (const auto& es : pow_[root]) {
    for (const auto& e : es) m.at(e.i, e.j) += p * Cyc(r(), e.v);
    p *= s;
  }
  return m;
}

MatS RepModel::eval(const GenWord& w) const {
  GenWord xs;
  for (const auto& g : w) {
    GenWord e = expand(fs_, tbl_, g);
    xs.insert(xs.end(), e.begin(), e.end());
  }
  MatS m = MatS::identity(r(), dim_);
  int n = dim_;
  for (const auto& g : xs) {
    if (g.s.is_zero()) continue;
    MatS add(r(), n);
    Laurent p = g.s;
    for (const auto& es : pow_[g.root]) {
      for (const auto& e : es) {
        Laurent c = p * Cyc(r(), e.v);
        for (int i = 0; i < n; ++i) {
          const Laurent& a = m.at(i, e.i);
          if (!a.is_zero()) add.at(i, e.j) += a * c;
        }
      }
      p *= g.s;
    }
    m = m + add;
  }
  return m;
}

std::vector<Rat> RepModel::act(int root, const Rat& s, const std::vector<Rat>& v) const {
  std::vector<Rat> out = v;
  Rat p = s;
  for (const auto& es : pow_[root]) {
    for (const auto& e : es) out[e.i] += p * e.v * v[e.j];
    p *= s;
  }
  return out;
}

MatS RepModel::sigma_mat(const MatS& c) const {
  if (r() == 1) return c;
  MatS sc = c.sigma_prime();
  int n = dim_;
  MatS out(r(), n);
  if (kind_ == ModelKind::Natural) {
    MatS d = sc.inverse().transpose();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) out.at(a, b) = d.at(n - 1 - a, n - 1 - b) * Cyc(r(), j_[a] * j_[b]);
    return out;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(sperm_[i], sperm_[j]) = sc.at(i, j) * Cyc(r(), ssign_[i] * ssign_[j]);
  return out;
}

MatS RepModel::omega_mat(const MatS& c) const {
  if (!fs_.aut().has_omega() || kind_ != ModelKind::Adjoint)
    throw std::invalid_argument("omega acts only in the adjoint model of (D4, 3)");
  MatS wc = c.omega_prime();
  int n = dim_;
  MatS out(r(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(wperm_[i], wperm_[j]) = wc.at(i, j) * Cyc(r(), wsign_[i] * wsign_[j]);
  return out;
}

bool RepModel::is_twisted_point(const MatS& c) const {
  if (sigma_mat(c) != c) return false;
  return !fs_.aut().has_omega() || omega_mat(c) == c;
}

namespace {

std::vector<Rat> basis_vec(int n, int i) {
  std::vector<Rat> v(n, 0);
  v[i] = 1;
  return v;
}

// c with [x_a(1), x_b(1)] = x_{a+b}(c), read off the action on a coroot
int c11(const RepModel& m, int a, int b) {
  const RootSystem& R = m.rs();
  int g = R.sum_index(a, b);
  int P = R.size();
  Vec e(R.rank(), 0);
  int i0 = 0, p = 0;
  for (; i0 < R.rank(); ++i0) {
    e.assign(R.rank(), 0);
    e[i0] = 1;
    p = R.inner(R.root(g), e);
    if (p) break;
  }
  std::vector<Rat> v = basis_vec(m.dim(), P + i0);
  v = m.act(b, -1, v);
  v = m.act(a, -1, v);
  v = m.act(b, 1, v);
  v = m.act(a, 1, v);
  Rat c = -v[g] / p;
  // x_g(c) H = H - c g(H) X_g
  std::vector<Rat> want = basis_vec(m.dim(), P + i0);
  want[g] = -c * p;
  if (v != want || c.get_den() != 1) throw std::logic_error("commutator is not a single root element");
  return static_cast<int>(c.get_num().get_si());
}

}  // namespace

CijTable cij_table(const RepModel& m) {
  if (m.kind() != ModelKind::Adjoint) throw std::invalid_argument("c^{ij} tables come from the adjoint model");
  const RootSystem& R = m.rs();
  CijTable out;
  for (int a = 0; a < R.size(); ++a)
    for (int b = 0; b < R.size(); ++b) {
      if (b == a || b == R.neg(a)) continue;
      auto& entries = out[{a, b}];
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          if (!R.is_root(vadd(vscale(R.root(a), i), vscale(R.root(b), j)))) continue;
          if (i != 1 || j != 1) throw std::logic_error("higher commutator terms do not occur in simply-laced types");
          entries.push_back({1, 1, c11(m, a, b)});
        }
    }
  return out;
}

bool commutator_check(const RepModel& m, int a, int b, const Laurent& nu, const Laurent& mu) {
  const RootSystem& R = m.rs();
  if (b == a || b == R.neg(a)) throw std::invalid_argument("commutator_check needs alpha != +-beta");
  MatS lhs = m.unip(a, nu) * m.unip(b, mu) * m.unip(a, -nu) * m.unip(b, -mu);
  MatS rhs = MatS::identity(m.r(), m.dim());
  int g = R.sum_index(a, b);
  if (g >= 0) {
    int c;
    if (m.kind() == ModelKind::Adjoint) {
      c = c11(m, a, b);
    } else {
      RepModel adj(ModelKind::Adjoint, m.fs());
      c = c11(adj, a, b);
    }
    rhs = m.unip(g, nu * mu * Cyc(m.r(), c));
  }
  return lhs == rhs;
}

bool commutator_check(const RepModel& m, const CijTable& cij, int a, int b, const Laurent& nu,
                      const Laurent& mu) {
  const RootSystem& R = m.rs();
  if (b == a || b == R.neg(a)) throw std::invalid_argument("commutator_check needs alpha != +-beta");
  MatS lhs = m.unip(a, nu) * m.unip(b, mu) * m.unip(a, -nu) * m.unip(b, -mu);
  MatS rhs = MatS::identity(m.r(), m.dim());
  int g = R.sum_index(a, b);
  if (g >= 0) {
    auto it = cij.find({a, b});
    if (it == cij.end() || it->second.size() != 1) throw std::invalid_argument("c^{ij} table has no entry for pair");
    rhs = m.unip(g, nu * mu * Cyc(m.r(), it->second[0].c));
  }
  return lhs == rhs;
}

bool conjugation_check(const RepModel& m, int a, int b, const Laurent& s, int eta) {
  const RootSystem& R = m.rs();
  int r = m.r();
  Laurent one = Laurent::constant(r, 1);
  MatS w = m.unip(a, one) * m.unip(R.neg(a), -one) * m.unip(a, one);
  MatS winv = m.unip(a, -one) * m.unip(R.neg(a), one) * m.unip(a, -one);
  int t = R.index(R.reflect(R.root(a), R.root(b)));
  return w * m.unip(b, s) * winv == m.unip(t, s * Cyc(r, eta));
}

int eta_check(const RepModel& m, int a, int b) {
  if (m.kind() != ModelKind::Adjoint) throw std::invalid_argument("eta is computed in the adjoint model");
  const RootSystem& R = m.rs();
  std::vector<Rat> v = basis_vec(m.dim(), b);
  v = m.act(a, 1, v);
  v = m.act(R.neg(a), -1, v);
  v = m.act(a, 1, v);
  int t = R.index(R.reflect(R.root(a), R.root(b)));
  Rat eta = v[t];
  std::vector<Rat> want = basis_vec(m.dim(), t);
  want[t] = eta;
  if (v != want || (eta != 1 && eta != -1)) throw std::logic_error("w_alpha(1) does not permute root vectors");
  return eta == 1 ? 1 : -1;
}

std::string lemma_name(Lemma l) {
  switch (l) {
    case Lemma::XSX: return "xsx";
    case Lemma::WSW: return "wsw";
    case Lemma::HSH: return "hsh";
  }
  return "?";
}

namespace {

std::string where(const FoldedRoot& f, int sample) {
  std::string s = "a=[";
  for (size_t i = 0; i < f.coords.size(); ++i) s += (i ? "," : "") + std::to_string(f.coords[i]);
  return s + "] " + type_name(f.type) + " sample " + std::to_string(sample);
}

}  // namespace

std::vector<std::string> verify_lemma(Lemma which, const RepModel& m, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const FoldedSystem& fs = m.fs();
  std::vector<std::string> fails;
  AtomKind kind = which == Lemma::XSX ? AtomKind::XT : which == Lemma::WSW ? AtomKind::WT : AtomKind::HT;
  for (const auto& f : fs.roots()) {
    for (int s = 0; s < samples; ++s) {
      GenAtom g = random_atom(fs, f.coords, kind, rng);
      MatS c = m.eval({g});
      if (!m.is_twisted_point(c)) fails.push_back(lemma_name(which) + " not Gamma-fixed: " + where(f, s));
      if (which == Lemma::XSX) continue;
      if (!(which == Lemma::WSW && f.type == RootType::R3) && c != m.eval(product_form(fs, g)))
        fails.push_back(lemma_name(which) + " product form differs: " + where(f, s));
      if (f.type == RootType::R3) continue;
      GenAtom inv = g;
      inv.s = which == Lemma::WSW ? -g.s : g.s.inv_unit();
      if (!(m.eval({inv}) * c).is_identity()) fails.push_back(lemma_name(which) + " inverse law fails: " + where(f, s));
    }
  }
  return fails;
}

std::vector<std::string> verify_gal_act(const FoldedSystem& fs, const ChevTable& tbl) {
  RepModel m(ModelKind::Adjoint, fs);
  const RootSystem& R = fs.rs();
  std::vector<std::string> fails;
  auto check = [&](const char* name, auto perm, auto k) {
    for (int a = 0; a < R.size(); ++a)
      for (int b = 0; b < R.size(); ++b) {
        if (b == a || b == R.neg(a)) continue;
        std::string tag = std::string(name) + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
        int g = R.sum_index(a, b);
        if (g >= 0 && c11(m, perm(a), perm(b)) * k(a) * k(b) != c11(m, a, b) * k(g))
          fails.push_back(tag + ": commutator signs");
        int p = std::abs(R.pairing(R.root(b), R.root(a)));
        int ka = p % 2 ? k(a) : 1;
        int t = R.index(R.reflect(R.root(a), R.root(b)));
        if (eta_check(m, perm(a), perm(b)) * k(b) * ka != eta_check(m, a, b) * k(t))
          fails.push_back(tag + ": conjugation signs");
      }
  };
  check("sigma", [&](int a) { return fs.sigma_root(a); }, [&](int a) { return tbl.k(a); });
  if (fs.aut().has_omega())
    check("omega", [&](int a) { return fs.omega_root(a); }, [&](int a) { return tbl.k_omega(a); });
  return fails;
}

std::vector<std::string> verify_diagram(const RepModel& m, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const FoldedSystem& fs = m.fs();
  const ChevTable& tbl = m.tbl();
  LoopAlgebra alg(fs.rs().type(), fs.rs().rank(), fs.r());
  std::vector<AffRoot> roots = real_roots(alg, 2);
  std::vector<std::string> fails;
  for (RootType t : {RootType::R1, RootType::R2, RootType::R3, RootType::R4}) {
    std::vector<AffRoot> pool;
    for (const auto& x : roots)
      if (fs.at(x.a).type == t) pool.push_back(x);
    if (pool.empty()) continue;
    for (AtomKind kind : {AtomKind::X, AtomKind::W, AtomKind::H}) {
      for (int s = 0; s < samples; ++s) {
        const AffRoot& x = pool[rng() % pool.size()];
        Rat nu = random_rat(rng);
        KMAtom k{kind, x, nu};
        std::string tag = type_name(t) + " " + kind_name(kind) + " sample " + std::to_string(s);
        UWord th = theta(fs, tbl, k);
        MatS phi_m = m.eval({phi(fs, k)});
        if (m.eval(psi(fs, th)) != phi_m) fails.push_back("Psi o Theta != Phi: " + tag);
        if (!m.is_twisted_point(phi_m)) fails.push_back("Phi image not Gamma-fixed: " + tag);
        if (kind == AtomKind::W) {
          GenWord def = {phi(fs, KMAtom{AtomKind::X, x, nu}), phi(fs, KMAtom{AtomKind::X, neg(x), -1 / nu}),
                         phi(fs, KMAtom{AtomKind::X, x, nu})};
          if (m.eval(def) != phi_m) fails.push_back("Phi(w) differs from its definition: " + tag);
        }
        if (kind == AtomKind::H) {
          GenWord def = {phi(fs, KMAtom{AtomKind::W, x, nu}), phi(fs, KMAtom{AtomKind::W, x, -1})};
          if (m.eval(def) != phi_m) fails.push_back("Phi(h) differs from its definition: " + tag);
        }
        for (const auto& u : th) {
          MatS pu = m.eval({psi(fs, u)});
          if (m.sigma_mat(pu) != m.eval({psi(fs, gamma_on_km(fs, tbl, GammaGen::Sigma, u))}))
            fails.push_back("Psi does not intertwine sigma: " + tag);
          if (fs.aut().has_omega() && m.kind() == ModelKind::Adjoint &&
              m.omega_mat(pu) != m.eval({psi(fs, gamma_on_km(fs, tbl, GammaGen::Omega, u))}))
            fails.push_back("Psi does not intertwine omega: " + tag);
        }
      }
    }
  }
  return fails;
}

}  // namespace twloop
