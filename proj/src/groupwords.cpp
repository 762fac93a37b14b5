#include "twloop/groupwords.hpp"

#include <algorithm>
#include <stdexcept>

namespace twloop {

namespace {

Laurent one(int r) { return Laurent::constant(r, 1); }

void require_aelt(const AElt& chi) {
  if (!in_A(chi)) throw std::invalid_argument("pair violates chi1 sigma'(chi1) = chi2 + sigma'(chi2)");
}

void require_unit(const Laurent& s) {
  if (!s.is_unit()) throw std::invalid_argument("payload is not a unit: " + s.str());
}

AElt half(int r) { return AElt{one(r), Laurent::constant(r, Rat(1, 2))}; }

}  // namespace

bool in_A(const AElt& chi) {
  if (chi.x1.r() != chi.x2.r()) return false;
  return chi.x1 * chi.x1.sigma_prime() == chi.x2 + chi.x2.sigma_prime();
}

bool in_A_star(const AElt& chi) { return in_A(chi) && chi.x2.is_unit(); }

AElt make_aelt(const Laurent& x1, const Laurent& x2) {
  AElt chi{x1, x2};
  require_aelt(chi);
  return chi;
}

AElt a_zero(int r) { return AElt{Laurent(r), Laurent(r)}; }

AElt a_plus(const AElt& chi, const AElt& phi) {
  require_aelt(chi);
  require_aelt(phi);
  return AElt{chi.x1 + phi.x1, chi.x2 + phi.x2 + chi.x1.sigma_prime() * phi.x1};
}

AElt a_neg(const AElt& chi) {
  require_aelt(chi);
  return AElt{-chi.x1, chi.x2.sigma_prime()};
}

AElt a_act(const Laurent& s, const AElt& chi) {
  return AElt{s * chi.x1, s * s.sigma_prime() * chi.x2};
}

Laurent c_of(const AElt& zeta, const AElt& gamma) {
  if (!in_A_star(zeta) || !in_A_star(gamma)) throw std::invalid_argument("c(zeta, gamma) needs A* arguments");
  return zeta.x2 * gamma.x2.sigma_prime().inv_unit();
}

std::string kind_name(AtomKind k) {
  switch (k) {
    case AtomKind::X: return "x";
    case AtomKind::W: return "w";
    case AtomKind::H: return "h";
    case AtomKind::XT: return "xt";
    case AtomKind::WT: return "wt";
    case AtomKind::HT: return "ht";
  }
  return "?";
}

GenAtom GenAtom::x(int root, const Laurent& s) {
  GenAtom g;
  g.kind = AtomKind::X;
  g.root = root;
  g.s = s;
  return g;
}

GenAtom GenAtom::w(int root, const Laurent& s) {
  GenAtom g = x(root, s);
  g.kind = AtomKind::W;
  return g;
}

GenAtom GenAtom::h(int root, const Laurent& s) {
  GenAtom g = x(root, s);
  g.kind = AtomKind::H;
  return g;
}

namespace {

GenAtom twisted(AtomKind kind, const Vec& a) {
  GenAtom g;
  g.kind = kind;
  g.a = a;
  return g;
}

bool doubled(const FoldedRoot& f) { return !f.in_delta_sigma; }

}  // namespace

void validate(const FoldedSystem& fs, const GenAtom& g) {
  int r = fs.r();
  if (g.kind == AtomKind::X || g.kind == AtomKind::W || g.kind == AtomKind::H) {
    if (g.root < 0 || g.root >= fs.rs().size()) throw std::invalid_argument("root index out of range");
    if (g.kind != AtomKind::X) require_unit(g.s);
    return;
  }
  if (fs.find(g.a) < 0) throw std::invalid_argument("not an element of pi(Delta)");
  const FoldedRoot& f = fs.at(g.a);
  if (f.type == RootType::R3) {
    std::vector<const AElt*> payloads{&g.chi};
    if (g.kind == AtomKind::HT) payloads.push_back(&g.gamma);
    for (const AElt* p : payloads) {
      if (p->r() != r || !in_A(*p)) throw std::invalid_argument("R-3 payload must lie in A_K");
      if (!p->x1.has_rational_coeffs() || !p->x2.has_rational_coeffs())
        throw std::invalid_argument("R-3 payload must have coefficients in K");
      if (g.kind != AtomKind::XT && !p->x2.is_unit()) throw std::invalid_argument("R-3 payload must lie in A*_K");
    }
    return;
  }
  const Laurent& s = g.s;
  if (s.r() != r) throw std::invalid_argument("payload has the wrong r");
  if (g.kind != AtomKind::XT) require_unit(s);
  switch (f.type) {
    case RootType::R1:
      if (doubled(f) && g.kind != AtomKind::HT) {
        if (!s.is_sigma_odd() || !s.has_rational_coeffs())
          throw std::invalid_argument("doubled-root payload must be sigma'-odd");
      } else if (!s.is_gamma_fixed()) {
        throw std::invalid_argument("R-1 payload must be Gamma-fixed");
      }
      break;
    case RootType::R2:
      if (!s.has_rational_coeffs()) throw std::invalid_argument("R-2 payload must lie in S_K");
      break;
    case RootType::R4:
      if (s.omega_prime() != s) throw std::invalid_argument("R-4 payload must be omega'-fixed");
      break;
    default:
      break;
  }
}

namespace {

GenAtom checked(const FoldedSystem& fs, GenAtom g, bool wants_pair) {
  bool r3 = fs.at(g.a).type == RootType::R3;
  if (r3 != wants_pair)
    throw std::invalid_argument(r3 ? "R-3 roots take an A_K payload" : "only R-3 roots take an A_K payload");
  validate(fs, g);
  return g;
}

}  // namespace

GenAtom xt(const FoldedSystem& fs, const Vec& a, const Laurent& s) {
  GenAtom g = twisted(AtomKind::XT, a);
  g.s = s;
  return checked(fs, g, false);
}

GenAtom xt(const FoldedSystem& fs, const Vec& a, const AElt& chi) {
  GenAtom g = twisted(AtomKind::XT, a);
  g.chi = chi;
  return checked(fs, g, true);
}

GenAtom wt(const FoldedSystem& fs, const Vec& a, const Laurent& q) {
  GenAtom g = twisted(AtomKind::WT, a);
  g.s = q;
  return checked(fs, g, false);
}

GenAtom wt(const FoldedSystem& fs, const Vec& a, const AElt& zeta) {
  GenAtom g = twisted(AtomKind::WT, a);
  g.chi = zeta;
  return checked(fs, g, true);
}

GenAtom ht(const FoldedSystem& fs, const Vec& a, const Laurent& q) {
  GenAtom g = twisted(AtomKind::HT, a);
  g.s = q;
  return checked(fs, g, false);
}

GenAtom ht(const FoldedSystem& fs, const Vec& a, const AElt& zeta, const AElt& gamma) {
  GenAtom g = twisted(AtomKind::HT, a);
  g.chi = zeta;
  g.gamma = gamma;
  return checked(fs, g, true);
}

namespace {

void append(GenWord& out, const GenWord& w) { out.insert(out.end(), w.begin(), w.end()); }

GenWord expand_w(int root, int neg_root, const Laurent& t) {
  return {GenAtom::x(root, t), GenAtom::x(neg_root, -t.inv_unit()), GenAtom::x(root, t)};
}

GenWord expand_x_twisted(const FoldedSystem& fs, const ChevTable& tbl, const Vec& a, const Laurent& s,
                         const AElt& chi) {
  const FoldedRoot& f = fs.at(a);
  int al = f.corr;
  switch (f.type) {
    case RootType::R1:
      return {GenAtom::x(al, s)};
    case RootType::R2:
      return {GenAtom::x(al, s), GenAtom::x(fs.sigma_root(al), s.sigma_prime())};
    case RootType::R3: {
      int sa = fs.sigma_root(al);
      int sum = fs.rs().sum_index(al, sa);
      return {GenAtom::x(al, chi.x1), GenAtom::x(sa, chi.x1.sigma_prime()),
              GenAtom::x(sum, chi.x2 * Cyc(fs.r(), tbl.N(sa, al)))};
    }
    case RootType::R4:
      return {GenAtom::x(al, s), GenAtom::x(fs.sigma_root(al, 1), s.sigma_prime(1)),
              GenAtom::x(fs.sigma_root(al, 2), s.sigma_prime(2))};
  }
  throw std::logic_error("unknown root type");
}

GenWord expand_w_twisted(const FoldedSystem& fs, const ChevTable& tbl, const Vec& a, const Laurent& q,
                         const AElt& zeta) {
  const FoldedRoot& f = fs.at(a);
  Vec na = vneg(a);
  GenWord out;
  if (f.type == RootType::R1) return expand_w(f.corr, fs.rs().neg(f.corr), q);
  if (f.type == RootType::R3) {
    Laurent s2 = zeta.x2.sigma_prime().inv_unit();
    append(out, expand_x_twisted(fs, tbl, a, {}, zeta));
    append(out, expand_x_twisted(fs, tbl, na, {}, a_act(-s2, zeta)));
    append(out, expand_x_twisted(fs, tbl, a, {}, a_act(zeta.x2 * s2, zeta)));
    return out;
  }
  Laurent mid = f.type == RootType::R2 ? -q.sigma_prime().inv_unit() : -q.inv_unit();
  append(out, expand_x_twisted(fs, tbl, a, q, {}));
  append(out, expand_x_twisted(fs, tbl, na, mid, {}));
  append(out, expand_x_twisted(fs, tbl, a, q, {}));
  return out;
}

}  // namespace

GenWord expand(const FoldedSystem& fs, const ChevTable& tbl, const GenAtom& g) {
  validate(fs, g);
  const RootSystem& rs = fs.rs();
  GenWord out;
  switch (g.kind) {
    case AtomKind::X:
      return {g};
    case AtomKind::W:
      return expand_w(g.root, rs.neg(g.root), g.s);
    case AtomKind::H:
      out = expand_w(g.root, rs.neg(g.root), g.s);
      append(out, expand_w(g.root, rs.neg(g.root), -one(g.s.r())));
      return out;
    case AtomKind::XT:
      return expand_x_twisted(fs, tbl, g.a, g.s, g.chi);
    case AtomKind::WT:
      return expand_w_twisted(fs, tbl, g.a, g.s, g.chi);
    case AtomKind::HT: {
      const FoldedRoot& f = fs.at(g.a);
      if (f.type == RootType::R1) return expand(fs, tbl, GenAtom::h(f.corr, g.s));
      if (f.type == RootType::R3) {
        out = expand_w_twisted(fs, tbl, g.a, {}, g.chi);
        append(out, expand_w_twisted(fs, tbl, g.a, {}, g.gamma));
        return out;
      }
      out = expand_w_twisted(fs, tbl, g.a, g.s, {});
      append(out, expand_w_twisted(fs, tbl, g.a, -one(fs.r()), {}));
      return out;
    }
  }
  throw std::logic_error("unknown atom kind");
}

GenWord expand(const FoldedSystem& fs, const ChevTable& tbl, const GenWord& word) {
  GenWord out;
  for (const auto& g : word) append(out, expand(fs, tbl, g));
  return out;
}

GenWord product_form(const FoldedSystem& fs, const GenAtom& g) {
  validate(fs, g);
  if (g.kind == AtomKind::X || g.kind == AtomKind::W || g.kind == AtomKind::H) return {g};
  if (g.kind == AtomKind::XT) throw std::invalid_argument("x-atoms have no product form");
  const FoldedRoot& f = fs.at(g.a);
  auto make = g.kind == AtomKind::WT ? GenAtom::w : GenAtom::h;
  int al = f.corr;
  switch (f.type) {
    case RootType::R1:
      return {make(al, g.s)};
    case RootType::R2:
      return {make(al, g.s), make(fs.sigma_root(al), g.s.sigma_prime())};
    case RootType::R4:
      return {make(al, g.s), make(fs.sigma_root(al, 1), g.s.sigma_prime(1)),
              make(fs.sigma_root(al, 2), g.s.sigma_prime(2))};
    case RootType::R3: {
      if (g.kind == AtomKind::WT) throw std::invalid_argument("no product form for w~ on an R-3 root");
      Laurent c = c_of(g.chi, g.gamma);
      return {GenAtom::h(al, c.sigma_prime()), GenAtom::h(fs.sigma_root(al), c)};
    }
  }
  throw std::logic_error("unknown root type");
}

GenWord inverse(const GenWord& word) {
  GenWord out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    GenAtom g = *it;
    switch (g.kind) {
      case AtomKind::X:
      case AtomKind::W:
        g.s = -g.s;
        break;
      case AtomKind::H:
        g.s = g.s.inv_unit();
        break;
      default:
        throw std::invalid_argument("inverse is defined on untwisted atoms only");
    }
    out.push_back(g);
  }
  return out;
}

TorusElt TorusElt::identity(int rank, int r) { return TorusElt{std::vector<Laurent>(rank, one(r))}; }

TorusElt TorusElt::operator*(const TorusElt& o) const {
  if (u.size() != o.u.size()) throw std::invalid_argument("torus rank mismatch");
  TorusElt out = *this;
  for (size_t i = 0; i < u.size(); ++i) out.u[i] *= o.u[i];
  return out;
}

bool TorusElt::is_identity() const {
  return std::all_of(u.begin(), u.end(), [](const Laurent& s) { return s.is_one(); });
}

TorusElt torus_h(const RootSystem& rs, int root, const Laurent& u) {
  require_unit(u);
  TorusElt t = TorusElt::identity(rs.rank(), u.r());
  const Vec& n = rs.root(root);
  for (int i = 0; i < rs.rank(); ++i) t.u[i] = u.pow(n[i]);
  return t;
}

TorusElt torus_of(const FoldedSystem& fs, const GenWord& word) {
  TorusElt t = TorusElt::identity(fs.rs().rank(), fs.r());
  for (const auto& g : word) {
    if (g.kind != AtomKind::H && g.kind != AtomKind::HT) throw std::invalid_argument("torus words hold h-atoms only");
    for (const auto& h : product_form(fs, g)) t = t * torus_h(fs.rs(), h.root, h.s);
  }
  return t;
}

bool kernel_test(const FoldedSystem& fs, const GenWord& word) { return torus_of(fs, word).is_identity(); }

namespace {

int eps(const FoldedRoot& f) { return f.positive ? 1 : 2; }

Cyc xi_a_pow(const FoldedSystem& fs, const FoldedRoot& f, int n) {
  return f.positive ? Cyc(fs.r(), 1) : Cyc::xi_pow(fs.r(), -n);
}

// nu z^{n/r} times the case prefactor (R-3 excluded)
Laurent scaled(const FoldedSystem& fs, const AffRoot& x, const Rat& nu) {
  const FoldedRoot& f = fs.at(x.a);
  Cyc c(fs.r(), nu);
  if (f.type == RootType::R2) c *= xi_a_pow(fs, f, x.n);
  return Laurent::monomial(c, x.n);
}

}  // namespace

AElt chi_hat(const FoldedSystem& fs, const AffRoot& x, const Rat& nu) {
  const FoldedRoot& f = fs.at(x.a);
  if (f.type != RootType::R3) throw std::invalid_argument("chi_hat needs an R-3 root");
  Cyc c = xi_a_pow(fs, f, x.n) * Cyc(fs.r(), nu * eps(f));
  return a_act(Laurent::monomial(c, x.n), half(fs.r()));
}

GenAtom phi(const FoldedSystem& fs, const KMAtom& k) {
  const FoldedRoot& f = fs.at(k.root.a);
  bool r3 = f.type == RootType::R3;
  if (k.kind != AtomKind::X && k.nu == 0) throw std::invalid_argument("w and h atoms need tau != 0");
  switch (k.kind) {
    case AtomKind::X:
      return r3 ? xt(fs, f.coords, chi_hat(fs, k.root, k.nu)) : xt(fs, f.coords, scaled(fs, k.root, k.nu));
    case AtomKind::W:
      return r3 ? wt(fs, f.coords, chi_hat(fs, k.root, k.nu)) : wt(fs, f.coords, scaled(fs, k.root, k.nu));
    case AtomKind::H:
      if (r3) return ht(fs, f.coords, chi_hat(fs, k.root, k.nu), chi_hat(fs, k.root, -1));
      return ht(fs, f.coords, Laurent::constant(fs.r(), k.nu));
    default:
      throw std::invalid_argument("Kac-Moody atoms are x, w or h");
  }
}

GenWord phi(const FoldedSystem& fs, const std::vector<KMAtom>& word) {
  GenWord out;
  for (const auto& k : word) out.push_back(phi(fs, k));
  return out;
}

std::vector<AffRoot> simple_affine_roots(const FoldedSystem& fs) {
  std::vector<AffRoot> out{{vneg(highest_a0(fs).minus_a0), 1}};
  for (int p = 0; p < fs.ell(); ++p) {
    Vec e(fs.ell(), 0);
    e[p] = 1;
    out.push_back({e, 0});
  }
  return out;
}

std::vector<int> zk_exponents(const FoldedSystem& fs) {
  std::vector<int> e(fs.ell() + 1, 1);
  Vec c = highest_a0(fs).c;
  for (int p = 0; p < fs.ell(); ++p) {
    Vec ep(fs.ell(), 0);
    ep[p] = 1;
    RootType t = fs.at(ep).type;
    if (fs.a_even()) {
      // parametrized by tau_ell; tau_0 = tau_p = tau_ell^2 elsewhere
      e[p + 1] = t == RootType::R3 ? 1 : 2;
    } else {
      e[p + 1] = t == RootType::R1 ? fs.r() * c[p] : c[p];
    }
  }
  if (fs.a_even()) e[0] = 2;
  return e;
}

std::vector<KMAtom> zk_element(const FoldedSystem& fs, const Rat& tau) {
  if (tau == 0) throw std::invalid_argument("tau must be nonzero");
  std::vector<AffRoot> s = simple_affine_roots(fs);
  std::vector<int> e = zk_exponents(fs);
  std::vector<KMAtom> out;
  for (size_t p = 0; p < s.size(); ++p) {
    Rat t = 1;
    for (int j = 0; j < e[p]; ++j) t *= tau;
    out.push_back(KMAtom{AtomKind::H, s[p], t});
  }
  return out;
}

UAtom gamma_on_km(const FoldedSystem& fs, const ChevTable& tbl, GammaGen g, const UAtom& u) {
  UAtom out = u;
  if (g == GammaGen::Sigma) {
    out.alpha = fs.sigma_root(u.alpha);
    if (u.kind != AtomKind::H) out.nu = Cyc(fs.r(), tbl.k(u.alpha)) * Cyc::xi_pow(fs.r(), -u.n) * u.nu;
  } else {
    if (!fs.aut().has_omega()) return out;
    out.alpha = fs.omega_root(u.alpha);
    out.nu = u.nu.omega_bar();
    if (u.kind != AtomKind::H) out.nu *= Cyc(fs.r(), tbl.k_omega(u.alpha));
  }
  return out;
}

namespace {

UWord theta_x(const FoldedSystem& fs, const ChevTable& tbl, const AffRoot& x, const Cyc& nu) {
  const FoldedRoot& f = fs.at(x.a);
  int r = fs.r(), n = x.n, al = f.corr;
  Cyc p = nu;
  if (f.type == RootType::R2) p *= xi_a_pow(fs, f, n);
  if (f.type == RootType::R3) p *= xi_a_pow(fs, f, n) * Cyc(r, eps(f));
  Cyc step = Cyc::xi_pow(r, -n);
  switch (f.type) {
    case RootType::R1:
      return {{AtomKind::X, al, n, p}};
    case RootType::R2:
      return {{AtomKind::X, al, n, p}, {AtomKind::X, fs.sigma_root(al), n, step * p}};
    case RootType::R3: {
      int sa = fs.sigma_root(al);
      Cyc third = Cyc(r, Rat(tbl.N(sa, al), 2)) * step * p * p;
      return {{AtomKind::X, al, n, p}, {AtomKind::X, sa, n, step * p},
              {AtomKind::X, fs.rs().sum_index(al, sa), 2 * n, third}};
    }
    case RootType::R4:
      return {{AtomKind::X, al, n, p}, {AtomKind::X, fs.sigma_root(al, 1), n, step * p},
              {AtomKind::X, fs.sigma_root(al, 2), n, step * step * p}};
  }
  throw std::logic_error("unknown root type");
}

UWord theta_w(const FoldedSystem& fs, const ChevTable& tbl, const AffRoot& x, const Cyc& tau) {
  UWord out = theta_x(fs, tbl, x, tau);
  UWord mid = theta_x(fs, tbl, neg(x), -tau.inv());
  out.insert(out.end(), mid.begin(), mid.end());
  UWord last = theta_x(fs, tbl, x, tau);
  out.insert(out.end(), last.begin(), last.end());
  return out;
}

}  // namespace

UWord theta(const FoldedSystem& fs, const ChevTable& tbl, const KMAtom& k) {
  Cyc nu(fs.r(), k.nu);
  switch (k.kind) {
    case AtomKind::X:
      return theta_x(fs, tbl, k.root, nu);
    case AtomKind::W:
      if (k.nu == 0) throw std::invalid_argument("w atoms need tau != 0");
      return theta_w(fs, tbl, k.root, nu);
    case AtomKind::H: {
      if (k.nu == 0) throw std::invalid_argument("h atoms need tau != 0");
      UWord out = theta_w(fs, tbl, k.root, nu);
      UWord tail = theta_w(fs, tbl, k.root, Cyc(fs.r(), -1));
      out.insert(out.end(), tail.begin(), tail.end());
      return out;
    }
    default:
      throw std::invalid_argument("Kac-Moody atoms are x, w or h");
  }
}

GenAtom psi(const FoldedSystem& fs, const UAtom& u) {
  if (u.nu.r() != fs.r()) throw std::invalid_argument("scalar has the wrong r");
  switch (u.kind) {
    case AtomKind::X:
      return GenAtom::x(u.alpha, Laurent::monomial(u.nu, u.n));
    case AtomKind::W:
      return GenAtom::w(u.alpha, Laurent::monomial(u.nu, u.n));
    case AtomKind::H:
      return GenAtom::h(u.alpha, Laurent(u.nu));
    default:
      throw std::invalid_argument("Kac-Moody atoms are x, w or h");
  }
}

GenWord psi(const FoldedSystem& fs, const UWord& word) {
  GenWord out;
  for (const auto& u : word) out.push_back(psi(fs, u));
  return out;
}

}  // namespace twloop

namespace twloop {

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 5), den(1, 3), sign(0, 1);
  Rat q(num(rng), den(rng));
  q.canonicalize();
  return sign(rng) ? q : Rat(-q);
}

namespace {

// exponents drawn from [-3, 3] restricted to the residue class (k mod step)
Laurent random_in_class(std::mt19937_64& rng, int r, int terms, int step, int k) {
  std::uniform_int_distribution<int> e(-3, 3);
  Laurent out(r);
  for (int t = 0; t < terms; ++t) out.add_term(step * e(rng) + k, Cyc(r, random_rat(rng)));
  return out;
}

}  // namespace

Laurent random_laurent(std::mt19937_64& rng, int r, int terms) { return random_in_class(rng, r, terms, 1, 0); }

Laurent random_unit(std::mt19937_64& rng, int r) { return random_in_class(rng, r, 1, 1, 0); }

GenAtom random_atom(const FoldedSystem& fs, const Vec& a, AtomKind kind, std::mt19937_64& rng) {
  const FoldedRoot& f = fs.at(a);
  int r = fs.r();
  int terms = kind == AtomKind::XT ? 1 + static_cast<int>(rng() % 3) : 1;
  auto make = [&](const Laurent& s) {
    return kind == AtomKind::XT ? xt(fs, a, s) : kind == AtomKind::WT ? wt(fs, a, s) : ht(fs, a, s);
  };
  if (f.type == RootType::R3) {
    auto star = [&]() {
      if (rng() % 2) return a_act(random_unit(rng, r), half(r));
      return AElt{Laurent(r), random_in_class(rng, r, 1, 2, 1)};
    };
    if (kind == AtomKind::WT) return wt(fs, a, star());
    if (kind == AtomKind::HT) return ht(fs, a, star(), star());
    Laurent x1 = random_laurent(rng, r, terms);
    Laurent odd = rng() % 2 ? random_in_class(rng, r, 1, 2, 1) : Laurent(r);
    Laurent x2 = x1 * x1.sigma_prime() * Cyc(r, Rat(1, 2)) + odd;
    return xt(fs, a, AElt{x1, x2});
  }
  if (f.type == RootType::R1) {
    if (!f.in_delta_sigma && kind != AtomKind::HT) return make(random_in_class(rng, r, terms, 2, 1));
    return make(random_in_class(rng, r, terms, r, 0));
  }
  return make(random_laurent(rng, r, terms));
}

}  // namespace twloop
