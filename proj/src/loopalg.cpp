#include "twloop/loopalg.hpp"

#include <sstream>
#include <stdexcept>

namespace twloop {

namespace {

Cyc xi_pow(int r, long n) { return Cyc::xi_pow(r, n); }

// H_alpha written in the simple coroots, as a LieElt with constant coefficient k
LieElt coroot_elt(const LoopAlgebra& alg, int root, const Cyc& k) {
  LieElt out(alg.r());
  const Vec& v = alg.rs().root(root);
  for (int i = 0; i < alg.rs().rank(); ++i)
    if (v[i] != 0) out.add(alg.h_index(i), Laurent(k * Cyc(alg.r(), v[i])));
  return out;
}

// rank of a rational matrix by Gaussian elimination
int rank_of(std::vector<std::vector<Rat>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[rank][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

LoopAlgebra::LoopAlgebra(char type, int rank, int r) : fs_(RootSystem(type, rank), r), tbl_(fs_) {}

std::string LoopAlgebra::label() const { return rs().label() + "^(" + std::to_string(r()) + ")"; }

int LoopAlgebra::kappa(int x, int y) const {
  int nr = rs().size();
  if (x < nr && y < nr) return rs().neg(x) == y ? 1 : 0;
  if (x >= nr && y >= nr) return rs().cartan()[x - nr][y - nr];
  return 0;
}

Laurent LieElt::coeff(int basis) const {
  auto it = terms_.find(basis);
  return it == terms_.end() ? Laurent(r_) : it->second;
}

void LieElt::add(int basis, const Laurent& s) {
  if (s.is_zero()) return;
  if (s.r() != r_) throw std::invalid_argument("LieElt: mismatched r");
  auto it = terms_.find(basis);
  if (it == terms_.end()) {
    terms_.emplace(basis, s);
    return;
  }
  it->second += s;
  if (it->second.is_zero()) terms_.erase(it);
}

LieElt LieElt::operator+(const LieElt& o) const {
  if (o.r_ != r_) throw std::invalid_argument("LieElt: mismatched r");
  LieElt out = *this;
  for (const auto& [b, s] : o.terms_) out.add(b, s);
  out.c_ += o.c_;
  out.d_ += o.d_;
  return out;
}

LieElt LieElt::operator-(const LieElt& o) const { return *this + o * Cyc(r_, -1); }

LieElt LieElt::operator*(const Cyc& k) const {
  LieElt out(r_);
  if (k.is_zero()) return out;
  for (const auto& [b, s] : terms_) out.add(b, s * k);
  out.c_ = c_ * k;
  out.d_ = d_ * k;
  return out;
}

LieElt LieElt::basis(int r, int b, const Laurent& s) {
  LieElt out(r);
  out.add(b, s);
  return out;
}

LieElt LieElt::central(int r, const Cyc& v) {
  LieElt out(r);
  out.c_ = v;
  return out;
}

LieElt LieElt::degree(int r, const Cyc& v) {
  LieElt out(r);
  out.d_ = v;
  return out;
}

std::string LieElt::str(const LoopAlgebra& alg) const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  for (const auto& [b, s] : terms_) {
    sep();
    os << "(" << s.str() << ")*";
    if (b < alg.rs().size()) {
      os << "X[";
      const Vec& v = alg.rs().root(b);
      for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
      os << "]";
    } else {
      os << "H" << (b - alg.rs().size() + 1);
    }
  }
  if (!c_.is_zero()) {
    sep();
    os << c_.str() << "*c";
  }
  if (!d_.is_zero()) {
    sep();
    os << d_.str() << "*d";
  }
  if (first) os << "0";
  return os.str();
}

LieElt bracket(const LoopAlgebra& alg, const LieElt& x, const LieElt& y) {
  if (x.r() != y.r()) throw std::invalid_argument("bracket: mismatched r");
  int r = x.r();
  LieElt out(r);
  for (const auto& [bx, sx] : x.terms()) {
    for (const auto& [by, sy] : y.terms()) {
      Laurent prod = sx * sy;
      for (const auto& [b, k] : lie_bracket(alg.rs(), alg.tbl(), bx, by)) out.add(b, prod * Cyc(r, k));
      int kap = alg.kappa(bx, by);
      if (kap == 0) continue;
      Cyc cc(r);
      for (const auto& [n, nu] : sx.terms()) {
        Cyc mu = sy.coeff(-n);
        if (!mu.is_zero()) cc += nu * mu * Cyc(r, static_cast<long>(n) * kap);
      }
      out.add_c(cc);
    }
  }
  // [d, X (x) nu z^{n/r}] = n X (x) nu z^{n/r}
  auto graded = [r](const LieElt& e) {
    LieElt g(r);
    for (const auto& [b, s] : e.terms()) {
      Laurent t(r);
      for (const auto& [n, c] : s.terms()) t.add_term(n, c * Cyc(r, n));
      g.add(b, t);
    }
    return g;
  };
  if (!x.d().is_zero()) out = out + graded(y) * x.d();
  if (!y.d().is_zero()) out = out - graded(x) * y.d();
  return out;
}

LieElt ad_power(const LoopAlgebra& alg, const LieElt& x, const LieElt& y, int times) {
  LieElt out = y;
  for (int i = 0; i < times && !out.is_zero(); ++i) out = bracket(alg, x, out);
  return out;
}

LieElt gamma_sigma(const LoopAlgebra& alg, const LieElt& x) {
  LieElt out = LieElt::central(x.r(), x.c()) + LieElt::degree(x.r(), x.d());
  int nr = alg.rs().size();
  const auto& perm = alg.fs().aut().perm;
  for (const auto& [b, s] : x.terms()) {
    Laurent t = s.sigma_prime();
    if (b < nr)
      out.add(alg.fs().sigma_root(b), t * Cyc(x.r(), alg.tbl().k(b)));
    else
      out.add(alg.h_index(perm[b - nr]), t);
  }
  return out;
}

LieElt gamma_omega(const LoopAlgebra& alg, const LieElt& x) {
  const DiagramAut& aut = alg.fs().aut();
  if (!aut.has_omega()) return x;
  LieElt out = LieElt::central(x.r(), x.c().omega_bar()) + LieElt::degree(x.r(), x.d().omega_bar());
  int nr = alg.rs().size();
  for (const auto& [b, s] : x.terms()) {
    Laurent t = s.omega_prime();
    if (b < nr)
      out.add(alg.fs().omega_root(b), t * Cyc(x.r(), alg.tbl().k_omega(b)));
    else
      out.add(alg.h_index(aut.omega[b - nr]), t);
  }
  return out;
}

bool is_fixed(const LoopAlgebra& alg, const LieElt& x) {
  return gamma_sigma(alg, x) == x && gamma_omega(alg, x) == x;
}

AffRoot neg(const AffRoot& x) { return {vneg(x.a), -x.n}; }

bool in_omega(const LoopAlgebra& alg, const AffRoot& x) {
  const FoldedSystem& fs = alg.fs();
  if (fs.find(x.a) < 0) return false;
  const FoldedRoot& f = fs.at(x.a);
  if (fs.a_even()) return f.in_delta_sigma || (x.n % 2 != 0);
  if (f.type == RootType::R1) return x.n % fs.r() == 0;
  return true;
}

std::vector<AffRoot> real_roots(const LoopAlgebra& alg, int nmax) {
  std::vector<AffRoot> out;
  for (const auto& f : alg.fs().roots())
    for (int n = -nmax; n <= nmax; ++n)
      if (in_omega(alg, {f.coords, n})) out.push_back({f.coords, n});
  return out;
}

LieElt x_tilde(const LoopAlgebra& alg, const AffRoot& x) {
  if (!in_omega(alg, x)) throw std::invalid_argument("x_tilde: (a', n) is not in Omega");
  const FoldedSystem& fs = alg.fs();
  int r = alg.r();
  int alpha = fs.correspondent(x.a);
  int terms = 1;
  switch (fs.at(x.a).type) {
    case RootType::R1: terms = 1; break;
    case RootType::R2:
    case RootType::R3: terms = 2; break;
    case RootType::R4: terms = 3; break;
  }
  LieElt out(r);
  for (int j = 0; j < terms; ++j)
    out.add(fs.sigma_root(alpha, j), Laurent::monomial(xi_pow(r, -static_cast<long>(j) * x.n), x.n));
  return out;
}

Rat norm_sq(const LoopAlgebra& alg, const AffRoot& x) {
  switch (alg.fs().at(x.a).type) {
    case RootType::R1: return Rat(2);
    case RootType::R2: return Rat(1);
    case RootType::R3: return Rat(1, 2);
    case RootType::R4: return Rat(2, 3);
  }
  throw std::logic_error("norm_sq: unknown root type");
}

LieElt h_part(const LoopAlgebra& alg, const Vec& a) {
  const FoldedSystem& fs = alg.fs();
  int r = alg.r();
  int alpha = fs.correspondent(a);
  Cyc one(r, 1);
  switch (fs.at(a).type) {
    case RootType::R1: return coroot_elt(alg, alpha, one);
    case RootType::R2: return coroot_elt(alg, alpha, one) + coroot_elt(alg, fs.sigma_root(alpha), one);
    case RootType::R3: {
      Cyc two(r, 2);
      return coroot_elt(alg, alpha, two) + coroot_elt(alg, fs.sigma_root(alpha), two);
    }
    case RootType::R4:
      return coroot_elt(alg, alpha, one) + coroot_elt(alg, fs.sigma_root(alpha, 1), one) +
             coroot_elt(alg, fs.sigma_root(alpha, 2), one);
  }
  throw std::logic_error("h_part: unknown root type");
}

LieElt h_hat(const LoopAlgebra& alg, const AffRoot& x) {
  Rat c = Rat(2 * x.n) / norm_sq(alg, x);
  c.canonicalize();
  return h_part(alg, x.a) + LieElt::central(alg.r(), Cyc(alg.r(), c));
}

Cyc pair_factor(const LoopAlgebra& alg, const AffRoot& x) {
  int r = alg.r();
  const FoldedRoot& f = alg.fs().at(x.a);
  // xi_a = 1 on positive roots and xi otherwise; eps_a = 1 or 2 likewise
  Cyc xi_a = f.positive ? Cyc(r, 1) : Cyc::xi(r);
  switch (f.type) {
    case RootType::R1:
    case RootType::R4: return Cyc(r, 1);
    case RootType::R2: return xi_a.pow(-x.n);
    case RootType::R3: return xi_a.pow(-x.n) * Cyc(r, f.positive ? 1 : 2);
  }
  throw std::logic_error("pair_factor: unknown root type");
}

std::pair<LieElt, LieElt> chevalley_pair(const LoopAlgebra& alg, const AffRoot& x) {
  AffRoot y = neg(x);
  return {x_tilde(alg, x) * pair_factor(alg, x), x_tilde(alg, y) * pair_factor(alg, y)};
}

namespace {

// a_q as a weight of the untwisted Cartan: one preimage suffices on sigma-fixed H
Vec simple_weight(const LoopAlgebra& alg, const A0Data& a0, int q) {
  if (q == 0) return vneg(alg.rs().root(a0.alpha));
  Vec v(alg.rs().rank(), 0);
  v[alg.fs().orbits()[q - 1][0]] = 1;
  return v;
}

Vec folded_simple(const LoopAlgebra& alg, const A0Data& a0, int q) {
  if (q == 0) return vneg(a0.minus_a0);
  Vec v(alg.fs().ell(), 0);
  v[q - 1] = 1;
  return v;
}

int integral(const Rat& q) {
  if (q.get_den() != 1) throw std::logic_error("expected an integer Cartan entry");
  return static_cast<int>(q.get_num().get_si());
}

}  // namespace

AffineGCM chev_generators(const LoopAlgebra& alg) {
  const FoldedSystem& fs = alg.fs();
  const RootSystem& rs = alg.rs();
  int r = alg.r();
  int ell = fs.ell();
  A0Data a0 = highest_a0(fs);
  AffineGCM g;
  g.H.assign(ell + 1, LieElt(r));
  g.E.assign(ell + 1, LieElt(r));
  g.F.assign(ell + 1, LieElt(r));

  Vec a0v = vneg(a0.minus_a0);
  auto [e0, f0] = chevalley_pair(alg, {a0v, 1});
  Laurent lead = e0.coeff(rs.neg(a0.alpha));
  if (!lead.coeff(1).is_positive()) {
    e0 = e0 * Cyc(r, -1);
    f0 = f0 * Cyc(r, -1);
  }
  g.E[0] = e0;
  g.F[0] = f0;
  g.H[0] = h_hat(alg, {a0v, 1});

  for (int p = 1; p <= ell; ++p) {
    const auto& orb = fs.orbits()[p - 1];
    bool doubled = false;
    for (int i : orb)
      for (int j : orb)
        if (i != j && rs.cartan()[i][j] != 0) doubled = true;
    Laurent k = Laurent::constant(r, doubled ? 2 : 1);
    Laurent one = Laurent::constant(r, 1);
    for (int i : orb) {
      g.H[p].add(alg.h_index(i), k);
      g.E[p].add(rs.simple(i), one);
      g.F[p].add(rs.neg(rs.simple(i)), k);
    }
  }

  // A[p][q] = a_q(H_p) read from the constant H-part of H_p
  g.A.assign(ell + 1, Vec(ell + 1, 0));
  for (int p = 0; p <= ell; ++p) {
    for (int q = 0; q <= ell; ++q) {
      Vec lam = simple_weight(alg, a0, q);
      Cyc v(r);
      for (int i = 0; i < rs.rank(); ++i) {
        Cyc hi = g.H[p].coeff(alg.h_index(i)).coeff(0);
        if (!hi.is_zero()) v += hi * Cyc(r, rs.pairing(lam, rs.root(rs.simple(i))));
      }
      if (!v.is_rational()) throw std::logic_error("chev_generators: irrational Cartan entry");
      g.A[p][q] = integral(v.a());
    }
  }

  g.d.resize(ell + 1);
  for (int p = 0; p <= ell; ++p) {
    Vec ap = folded_simple(alg, a0, p);
    g.d[p] = fs.inner(ap, ap) / 2;
  }
  g.symmetrizable = true;
  for (int p = 0; p <= ell; ++p) {
    if (g.d[p] <= 0) g.symmetrizable = false;
    for (int q = 0; q <= ell; ++q)
      if (g.d[p] * g.A[p][q] != g.d[q] * g.A[q][p]) g.symmetrizable = false;
  }
  return g;
}

std::vector<Vec> gcm_from_form(const LoopAlgebra& alg) {
  A0Data a0 = highest_a0(alg.fs());
  int ell = alg.fs().ell();
  std::vector<Vec> A(ell + 1, Vec(ell + 1, 0));
  for (int p = 0; p <= ell; ++p) {
    Vec ap = folded_simple(alg, a0, p);
    Rat np = alg.fs().inner(ap, ap);
    for (int q = 0; q <= ell; ++q) {
      Rat v = 2 * alg.fs().inner(ap, folded_simple(alg, a0, q)) / np;
      v.canonicalize();
      A[p][q] = integral(v);
    }
  }
  return A;
}

bool is_gcm(const std::vector<Vec>& A) {
  for (size_t p = 0; p < A.size(); ++p) {
    if (A[p].size() != A.size() || A[p][p] != 2) return false;
    for (size_t q = 0; q < A.size(); ++q) {
      if (p == q) continue;
      if (A[p][q] > 0) return false;
      if ((A[p][q] == 0) != (A[q][p] == 0)) return false;
    }
  }
  return true;
}

std::vector<std::string> verify_serre(const LoopAlgebra& alg, const AffineGCM& g) {
  std::vector<std::string> fails;
  int n = static_cast<int>(g.A.size());
  int r = alg.r();
  auto tag = [](const char* what, int p, int q) {
    return std::string(what) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
  };
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      Cyc apq(r, g.A[p][q]);
      if (!bracket(alg, g.H[p], g.H[q]).is_zero()) fails.push_back(tag("[H,H]", p, q));
      if (bracket(alg, g.H[p], g.E[q]) != g.E[q] * apq) fails.push_back(tag("[H,E]", p, q));
      if (bracket(alg, g.H[p], g.F[q]) != g.F[q] * (-apq)) fails.push_back(tag("[H,F]", p, q));
      LieElt ef = bracket(alg, g.E[p], g.F[q]);
      if (p == q ? ef != g.H[p] : !ef.is_zero()) fails.push_back(tag("[E,F]", p, q));
      if (p == q) continue;
      if (!ad_power(alg, g.E[p], g.E[q], 1 - g.A[p][q]).is_zero()) fails.push_back(tag("Serre E", p, q));
      if (!ad_power(alg, g.F[p], g.F[q], 1 - g.A[p][q]).is_zero()) fails.push_back(tag("Serre F", p, q));
    }
  }
  return fails;
}

std::vector<std::string> verify_pairs(const LoopAlgebra& alg, int nmax) {
  std::vector<std::string> fails;
  for (const auto& a : real_roots(alg, nmax)) {
    auto [x, y] = chevalley_pair(alg, a);
    std::ostringstream id;
    id << "(";
    for (size_t i = 0; i < a.a.size(); ++i) id << (i ? "," : "") << a.a[i];
    id << ") n=" << a.n;
    if (!is_fixed(alg, x) || !is_fixed(alg, y)) fails.push_back(id.str() + ": not fixed");
    if (bracket(alg, x, y) != h_hat(alg, a)) fails.push_back(id.str() + ": bracket");
  }
  return fails;
}

int graded_dim(const LoopAlgebra& alg, int n) {
  int r = alg.r();
  int comps = r == 3 ? 2 : 1;
  int dim = alg.dim();
  int cols = dim * comps;
  // Q-coordinates of the z^{n/r} coefficient
  auto coords = [&](const LieElt& e) {
    std::vector<Rat> v(cols, 0);
    for (const auto& [b, s] : e.terms()) {
      Cyc c = s.coeff(n);
      v[b * comps] = c.a();
      if (comps == 2) v[b * comps + 1] = c.b();
    }
    return v;
  };
  // the fixed space is the kernel of X -> (sigma X - X, omega X - X)
  std::vector<std::vector<Rat>> m(2 * cols, std::vector<Rat>(cols, 0));
  for (int b = 0; b < dim; ++b) {
    for (int k = 0; k < comps; ++k) {
      Cyc unit = k == 0 ? Cyc(r, 1) : Cyc::xi(r);
      LieElt e = LieElt::basis(r, b, Laurent::monomial(unit, n));
      auto s = coords(gamma_sigma(alg, e) - e);
      auto w = coords(gamma_omega(alg, e) - e);
      int col = b * comps + k;
      for (int i = 0; i < cols; ++i) {
        m[i][col] = s[i];
        m[cols + i][col] = w[i];
      }
    }
  }
  return cols - rank_of(std::move(m));
}

}  // namespace twloop
