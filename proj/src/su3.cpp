#include "twloop/su3.hpp"

#include <stdexcept>

namespace twloop {

namespace {

constexpr int kR = 2;

Laurent cst(const Rat& q) { return Laurent::constant(kR, q); }
Laurent zm(int n) { return Laurent::zmono(kR, n); }

void need(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

bool is_rational_unit(const Laurent& s) { return s.r() == kR && s.is_unit() && s.has_rational_coeffs(); }

AElt half_unit() { return make_aelt(cst(1), cst(Rat(1, 2))); }

// h'(1/2) w'((1, 1/2)) = antidiag(1, -1, 1), its own inverse
SU3Word swap_word() { return {SU3Atom::hp(cst(Rat(1, 2))), SU3Atom::wp(half_unit())}; }

SU3Word concat(SU3Word a, const SU3Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Rat top(const Laurent& s) { return s.coeff(s.deg_max()).a(); }

}  // namespace

std::string su3_kind_name(SU3Kind k) {
  switch (k) {
    case SU3Kind::X: return "x";
    case SU3Kind::XP: return "x'";
    case SU3Kind::W: return "w";
    case SU3Kind::WP: return "w'";
    case SU3Kind::HP: return "h'";
  }
  throw std::logic_error("unknown SU3 kind");
}

SU3Kind su3_kind_from_name(const std::string& s) {
  for (SU3Kind k : {SU3Kind::X, SU3Kind::XP, SU3Kind::W, SU3Kind::WP, SU3Kind::HP})
    if (su3_kind_name(k) == s) return k;
  throw std::invalid_argument("unknown SU3 atom kind: " + s);
}

SU3Atom SU3Atom::x(int sign, const AElt& chi) {
  SU3Atom a;
  a.kind = SU3Kind::X;
  a.sign = sign;
  a.chi = chi;
  a.s = Laurent(kR);
  validate(a);
  return a;
}

SU3Atom SU3Atom::xp(int sign, const Laurent& s) {
  SU3Atom a;
  a.kind = SU3Kind::XP;
  a.sign = sign;
  a.chi = a_zero(kR);
  a.s = s;
  validate(a);
  return a;
}

SU3Atom SU3Atom::w(const AElt& zeta) {
  SU3Atom a;
  a.kind = SU3Kind::W;
  a.chi = zeta;
  a.s = Laurent(kR);
  validate(a);
  return a;
}

SU3Atom SU3Atom::wp(const AElt& zeta) {
  SU3Atom a = w(zeta);
  a.kind = SU3Kind::WP;
  return a;
}

SU3Atom SU3Atom::hp(const Laurent& t) {
  SU3Atom a;
  a.kind = SU3Kind::HP;
  a.chi = a_zero(kR);
  a.s = t;
  validate(a);
  return a;
}

void validate(const SU3Atom& a) {
  need(a.sign == 1 || a.sign == -1, "SU3 atom sign must be +1 or -1");
  switch (a.kind) {
    case SU3Kind::X:
      need(a.chi.r() == kR && a.chi.x2.r() == kR && in_A(a.chi), "x payload must lie in A_K");
      return;
    case SU3Kind::XP:
      need(a.s.r() == kR && a.s.is_sigma_odd() && a.s.has_rational_coeffs(), "x' payload must be sigma'-odd");
      return;
    case SU3Kind::W:
    case SU3Kind::WP:
      need(a.sign == 1, "w atoms live on +a1");
      need(a.chi.r() == kR && a.chi.x2.r() == kR && in_A_star(a.chi), "w payload must lie in A*");
      return;
    case SU3Kind::HP:
      need(a.sign == 1, "h atoms live on +a1");
      need(is_rational_unit(a.s), "h' payload must be tau z^{n/2}");
      return;
  }
  throw std::logic_error("unknown SU3 kind");
}

MatS gen_matrix(const SU3Atom& a) {
  validate(a);
  MatS m = MatS::identity(kR, 3);
  switch (a.kind) {
    case SU3Kind::X:
    case SU3Kind::XP: {
      AElt chi = a.kind == SU3Kind::X ? a.chi : AElt{Laurent(kR), -a.s};
      if (a.sign > 0) {
        m.at(0, 1) = chi.x1;
        m.at(0, 2) = chi.x2.sigma_prime();
        m.at(1, 2) = chi.x1.sigma_prime();
      } else {
        m.at(1, 0) = chi.x1.sigma_prime();
        m.at(2, 0) = chi.x2.sigma_prime();
        m.at(2, 1) = chi.x1;
      }
      return m;
    }
    case SU3Kind::W:
    case SU3Kind::WP: {
      Laurent z2 = a.chi.x2;
      if (a.kind == SU3Kind::WP) z2 = z2.inv_unit();
      Laurent sz2 = z2.sigma_prime();
      MatS w(kR, 3);
      w.at(0, 2) = sz2;
      w.at(1, 1) = -z2 * sz2.inv_unit();
      w.at(2, 0) = z2.inv_unit();
      return w;
    }
    case SU3Kind::HP: {
      int n = a.s.deg_max();
      Laurent sgn = cst(n % 2 == 0 ? 1 : -1);
      m.at(0, 0) = a.s;
      m.at(1, 1) = sgn;
      m.at(2, 2) = sgn * a.s.inv_unit();
      return m;
    }
  }
  throw std::logic_error("unknown SU3 kind");
}

MatS eval(const SU3Word& w) {
  MatS m = MatS::identity(kR, 3);
  for (const auto& a : w) m = m * gen_matrix(a);
  return m;
}

SU3Atom inverse(const SU3Atom& a) {
  switch (a.kind) {
    case SU3Kind::X: return SU3Atom::x(a.sign, a_neg(a.chi));
    case SU3Kind::XP: return SU3Atom::xp(a.sign, -a.s);
    case SU3Kind::W: return SU3Atom::w(a_neg(a.chi));
    case SU3Kind::WP: {
      // w'(zeta)^{-1} = w((-zeta1/zeta2, sigma'(1/zeta2))) = w'(zeta'')
      Laurent z2 = a.chi.x2.sigma_prime();
      Laurent z1 = -a.chi.x1 * a.chi.x2.inv_unit() * z2;
      return SU3Atom::wp(make_aelt(z1, z2));
    }
    case SU3Kind::HP: return SU3Atom::hp(a.s.inv_unit());
  }
  throw std::logic_error("unknown SU3 kind");
}

SU3Word inverse(const SU3Word& w) {
  SU3Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

const std::vector<int>& su3_J() {
  static const std::vector<int> j{-1, 1, -1};
  return j;
}

bool is_su3(const MatS& c) {
  need(c.dim() == 3 && c.r() == kR, "is_su3 needs a 3x3 matrix over S_K with r = 2");
  if (!c.det().is_one()) return false;
  MatS J(kR, 3);
  for (int i = 0; i < 3; ++i) J.at(i, 2 - i) = cst(su3_J()[i]);
  return c.transpose() * J * c.sigma_prime() == J;
}

Reduction swap_reduce(const MatS& c) {
  if (deg_stats(c.at(2, 0)).k <= deg_stats(c.at(0, 0)).k) return {{}, c};
  SU3Word w = swap_word();
  return {w, eval(w) * c};
}

Reduction align_tops(const MatS& c) {
  const Laurent &s11 = c.at(0, 0), &s31 = c.at(2, 0);
  need(!s11.is_zero() && !s31.is_zero(), "align_tops needs s11 != 0 and s31 != 0");
  DegStats d11 = deg_stats(s11), d31 = deg_stats(s31);
  need(d31.k <= d11.k, "align_tops needs k31 <= k11");
  int diff = d31.M - d11.M;
  if (diff == 0) return {{}, c};
  if (diff % 2 == 0) {
    SU3Word w{SU3Atom::hp(zm(diff / 2))};
    return {w, eval(w) * c};
  }

  SU3Word w{SU3Atom::hp(zm((diff + 1) / 2))};
  MatS cur = gen_matrix(w[0]) * c;
  const int bound = d11.k + d31.k + 2;
  for (int iter = 0;; ++iter) {
    const Laurent &a = cur.at(0, 0), &b = cur.at(2, 0);
    if (a.is_zero() || b.is_zero()) break;
    int d = a.deg_max() - b.deg_max();
    if (d == 0 || deg_stats(a).k < d11.k) break;
    if (iter >= bound) throw std::logic_error("align_tops: inner loop exceeded k11 + k31 + 2 iterations");
    SU3Atom step;
    if (d == 1) {
      step = SU3Atom::xp(1, Laurent::monomial(Cyc(kR, -top(a) / top(b)), 1));
    } else if (d == -1) {
      step = SU3Atom::xp(-1, Laurent::monomial(Cyc(kR, -top(b) / top(a)), 1));
    } else {
      // rebalance the gap to 0 (even) or 1 (odd)
      step = SU3Atom::hp(zm(d % 2 == 0 ? -d / 2 : (1 - d) / 2));
    }
    w.insert(w.begin(), step);
    cur = gen_matrix(step) * cur;
  }
  return {w, cur};
}

Reduction euclid_step(const MatS& c) {
  const Laurent &s11 = c.at(0, 0), &s21 = c.at(1, 0), &s31 = c.at(2, 0);
  need(!s11.is_zero() && !s31.is_zero(), "euclid_step needs s11 != 0 and s31 != 0");
  DegStats d11 = deg_stats(s11), d21 = deg_stats(s21), d31 = deg_stats(s31);
  need(d11.M == d31.M, "euclid_step needs aligned tops");
  need(d31.k <= d11.k, "euclid_step needs k31 <= k11");
  int M = d11.M;
  need(!s21.is_zero() && d21.M == M, "aligned state violates M(s21) = M");
  Rat nu = top(s11), iota = top(s21), mu = top(s31);
  need(iota * iota == 2 * nu * mu, "aligned state violates iota^2 = 2 nu mu");
  need(d11.m <= d21.m && d11.m <= d31.m, "aligned state violates m11 <= min(m21, m31)");
  Rat c1 = -2 * nu / iota, c2 = 2 * nu * nu / (iota * iota);
  SU3Word w{SU3Atom::x(1, make_aelt(cst(c1), cst(c2)))};
  MatS out = gen_matrix(w[0]) * c;
  const Laurent& t = out.at(0, 0);
  if (!t.is_zero() && (t.deg_max() >= M || (d11.k > 0 && deg_stats(t).k >= d11.k)))
    throw std::logic_error("euclid_step failed to reduce k11");
  return {w, out};
}

SU3Word terminal_decompose(const MatS& c) {
  SU3Word prefix;
  MatS u = c;
  if (c.at(1, 0).is_zero() && c.at(2, 0).is_zero()) {
  } else if (c.at(0, 0).is_zero()) {
    prefix = swap_word();
    u = eval(prefix) * c;
  } else {
    throw std::invalid_argument("terminal_decompose needs s11 = 0 or s21 = s31 = 0");
  }
  need(u.at(1, 0).is_zero() && u.at(2, 0).is_zero() && u.at(2, 1).is_zero(),
       "terminal form is not upper triangular");
  const Laurent& d1 = u.at(0, 0);
  need(is_rational_unit(d1), "terminal corner is not a unit");
  // U = h'(d1) x_{a1}(chi) with chi1 = U12/d1 and sigma'(chi2) = U13/d1
  Laurent di = d1.inv_unit();
  Laurent x1 = u.at(0, 1) * di;
  Laurent x2 = (u.at(0, 2) * di).sigma_prime();
  need(in_A(AElt{x1, x2}), "terminal off-diagonal part is not in A_K");
  SU3Word tail;
  if (!d1.is_one()) tail.push_back(SU3Atom::hp(d1));
  if (x1.is_zero() && !x2.is_zero())
    tail.push_back(SU3Atom::xp(1, -x2));
  else if (!x1.is_zero())
    tail.push_back(SU3Atom::x(1, AElt{x1, x2}));
  need(eval(tail) == u, "terminal form does not match h'(d) x(chi)");
  return concat(prefix, tail);
}

std::string step_name(StepKind k) {
  switch (k) {
    case StepKind::Swap: return "swap";
    case StepKind::AlignI: return "align-I";
    case StepKind::AlignII: return "align-II";
    case StepKind::Euclid: return "euclid";
    case StepKind::Terminal: return "terminal";
  }
  throw std::logic_error("unknown step kind");
}

std::pair<SU3Word, DecompTrace> decompose(const MatS& c) {
  need(is_su3(c), "decompose needs a member of SU_3");
  DecompTrace trace;
  SU3Word left;  // eval(left) * c == cur
  MatS cur = c;
  auto k11 = [](const MatS& m) { return deg_stats(m.at(0, 0)).k; };
  auto record = [&](StepKind kind, const Reduction& r) {
    trace.push_back({kind, r.word, k11(cur), k11(r.result), r.result});
    left = concat(r.word, left);
    cur = r.result;
  };

  // (k11, k31) drops lexicographically every few steps; this only catches bugs
  const int guard = 16 * (deg_stats(c.at(0, 0)).k + deg_stats(c.at(2, 0)).k + 4);
  for (int it = 0;; ++it) {
    if (it > guard) throw std::logic_error("decompose: descent did not terminate");
    const Laurent &s11 = cur.at(0, 0), &s21 = cur.at(1, 0), &s31 = cur.at(2, 0);
    if ((s21.is_zero() && s31.is_zero()) || s11.is_zero()) break;
    Reduction sw = swap_reduce(cur);
    if (!sw.word.empty()) {
      record(StepKind::Swap, sw);
      continue;
    }
    if (s11.deg_max() != s31.deg_max()) {
      bool even = (s31.deg_max() - s11.deg_max()) % 2 == 0;
      record(even ? StepKind::AlignI : StepKind::AlignII, align_tops(cur));
      continue;
    }
    if (k11(cur) > 0) {
      record(StepKind::Euclid, euclid_step(cur));
      continue;
    }
    // k11 = 0 with a unit s11: one more x(chi) clears the corner, folded into the finish
    Reduction clr = euclid_step(cur);
    SU3Word fin = concat(inverse(clr.word), terminal_decompose(clr.result));
    trace.push_back({StepKind::Terminal, fin, k11(cur), 0, MatS::identity(kR, 3)});
    return {concat(inverse(left), fin), trace};
  }
  SU3Word fin = terminal_decompose(cur);
  trace.push_back({StepKind::Terminal, fin, k11(cur), 0, MatS::identity(kR, 3)});
  return {concat(inverse(left), fin), trace};
}

namespace {

Rat small_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 3), den(1, 3), sign(0, 1);
  Rat q(num(rng), den(rng));
  q.canonicalize();
  return sign(rng) ? q : Rat(-q);
}

// exponents in [-4, 4] of the given parity (-1 for any)
Laurent small_laurent(std::mt19937_64& rng, int terms, int parity) {
  std::vector<int> pool;
  for (int n = -4; n <= 4; ++n)
    if (parity < 0 || (n & 1) == parity) pool.push_back(n);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  Laurent out(kR);
  for (int t = 0; t < terms; ++t) out.add_term(pool[pick(rng)], Cyc(kR, small_rat(rng)));
  return out;
}

AElt small_star(std::mt19937_64& rng) {
  if (rng() % 2) return AElt{Laurent(kR), small_laurent(rng, 1, 1)};
  std::uniform_int_distribution<int> e(-2, 2);
  Laurent u = Laurent::monomial(Cyc(kR, small_rat(rng)), e(rng));
  return a_act(u, half_unit());
}

}  // namespace

SU3Atom random_su3_atom(std::mt19937_64& rng) {
  int sign = rng() % 2 ? 1 : -1;
  switch (rng() % 5) {
    case 0: {
      Laurent x1 = small_laurent(rng, 1 + static_cast<int>(rng() % 2), -1);
      Laurent odd = rng() % 2 ? small_laurent(rng, 1, 1) : Laurent(kR);
      return SU3Atom::x(sign, make_aelt(x1, x1 * x1.sigma_prime() * Cyc(kR, Rat(1, 2)) + odd));
    }
    case 1: return SU3Atom::xp(sign, small_laurent(rng, 1, 1));
    case 2: return SU3Atom::w(small_star(rng));
    case 3: return SU3Atom::wp(small_star(rng));
    default: return SU3Atom::hp(small_laurent(rng, 1, -1));
  }
}

SU3Word random_su3_word(std::mt19937_64& rng, int len) {
  need(len >= 0, "word length must be non-negative");
  SU3Word w;
  for (int i = 0; i < len; ++i) w.push_back(random_su3_atom(rng));
  return w;
}

}  // namespace twloop
