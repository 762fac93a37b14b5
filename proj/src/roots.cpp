#include "twloop/roots.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace twloop {

Vec vadd(const Vec& a, const Vec& b) {
  Vec out(a);
  for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vec vsub(const Vec& a, const Vec& b) {
  Vec out(a);
  for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vec vneg(const Vec& a) { return vscale(a, -1); }

Vec vscale(const Vec& a, int k) {
  Vec out(a);
  for (auto& x : out) x *= k;
  return out;
}

bool is_zero_vec(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

bool lex_less(const Vec& a, const Vec& b) {
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::string type_name(RootType t) { return "R-" + std::to_string(static_cast<int>(t)); }

std::string length_name(RootLength l) {
  switch (l) {
    case RootLength::Short: return "short";
    case RootLength::Long: return "long";
    case RootLength::ExtraLong: return "extra long";
  }
  return "";
}

namespace {

std::vector<Vec> cartan_matrix(char type, int n) {
  std::vector<Vec> a(n, Vec(n, 0));
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (type) {
    case 'A':
      if (n < 1) throw std::invalid_argument("A_N needs N >= 1");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'D':
      if (n < 4) throw std::invalid_argument("D_N needs N >= 4");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n != 6) throw std::invalid_argument("only E_6 is supported");
      link(0, 1);
      link(1, 2);
      link(2, 4);
      link(4, 5);
      link(2, 3);
      break;
    default:
      throw std::invalid_argument(std::string("unsupported root system type ") + type);
  }
  return a;
}

}  // namespace

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
  cartan_ = cartan_matrix(type, rank);

  std::set<Vec> seen;
  std::deque<Vec> todo;
  for (int i = 0; i < rank; ++i) {
    Vec e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  // simply laced: beta + alpha_i is a root iff (beta, alpha_i) = -1
  while (!todo.empty()) {
    Vec b = todo.front();
    todo.pop_front();
    for (int i = 0; i < rank; ++i) {
      int p = 0;
      for (int j = 0; j < rank; ++j) p += b[j] * cartan_[j][i];
      if (p != -1) continue;
      Vec c = b;
      ++c[i];
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  std::vector<Vec> pos(seen.begin(), seen.end());
  std::sort(pos.begin(), pos.end(), [](const Vec& x, const Vec& y) {
    int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return lex_less(x, y);
  });
  roots_ = pos;
  for (const auto& v : pos) roots_.push_back(vneg(v));
  for (int i = 0; i < size(); ++i) index_[roots_[i]] = i;
  for (int i = 0; i < rank; ++i) {
    Vec e(rank, 0);
    e[i] = 1;
    simple_.push_back(index_.at(e));
  }
  int n = size();
  sum_.assign(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) sum_[a * n + b] = index(vadd(roots_[a], roots_[b]));
}

int RootSystem::index(const Vec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::inner(const Vec& a, const Vec& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += a[i] * cartan_[i][j] * b[j];
  return s;
}

Vec RootSystem::reflect(const Vec& alpha, const Vec& beta) const {
  return vsub(beta, vscale(alpha, pairing(beta, alpha)));
}

int RootSystem::height(const Vec& v) {
  int h = 0;
  for (int x : v) h += x;
  return h;
}

DiagramAut diagram_aut(const RootSystem& rs, int r) {
  int n = rs.rank();
  DiagramAut out;
  out.r = r;
  out.perm.resize(n);
  for (int i = 0; i < n; ++i) out.perm[i] = i;
  if (r == 1) return out;
  if (r == 2 && rs.type() == 'A' && n >= 2) {
    for (int i = 0; i < n; ++i) out.perm[i] = n - 1 - i;
    return out;
  }
  if (r == 2 && rs.type() == 'D') {
    std::swap(out.perm[n - 2], out.perm[n - 1]);
    return out;
  }
  if (r == 2 && rs.type() == 'E') {
    out.perm = {5, 4, 2, 3, 1, 0};
    return out;
  }
  if (r == 3 && rs.type() == 'D' && n == 4) {
    out.perm = {2, 1, 3, 0};
    out.omega = {0, 1, 3, 2};
    return out;
  }
  throw std::invalid_argument("no diagram automorphism of order " + std::to_string(r) + " for " +
                              rs.label());
}

Vec permute(const std::vector<int>& perm, const Vec& v) {
  Vec out(v.size(), 0);
  for (size_t i = 0; i < v.size(); ++i) out[perm[i]] = v[i];
  return out;
}

namespace {

std::vector<int> root_perm(const RootSystem& rs, const std::vector<int>& perm) {
  std::vector<int> out(rs.size());
  for (int a = 0; a < rs.size(); ++a) out[a] = rs.index(permute(perm, rs.root(a)));
  return out;
}

}  // namespace

FoldedSystem::FoldedSystem(RootSystem rs, int r)
    : rs_(std::make_shared<const RootSystem>(std::move(rs))), aut_(diagram_aut(*rs_, r)) {
  const RootSystem& R = *rs_;
  int n = R.rank();
  a_even_ = r == 2 && R.type() == 'A' && n % 2 == 0;

  std::vector<bool> done(n, false);
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<int> orb;
    for (int j = i; !done[j]; j = aut_.perm[j]) {
      done[j] = true;
      orb.push_back(j);
    }
    std::sort(orb.begin(), orb.end());
    orbits_.push_back(orb);
  }
  // triality: a_1 = pi(alpha_2), a_2 = pi(alpha_1)
  if (r == 3) std::swap(orbits_[0], orbits_[1]);
  orbit_of_.assign(n, -1);
  for (int p = 0; p < ell(); ++p)
    for (int i : orbits_[p]) orbit_of_[i] = p;

  std::string l = std::to_string(ell());
  if (r == 1) label_ = R.label();
  else if (r == 3) label_ = "G2";
  else if (R.type() == 'E') label_ = "F4";
  else if (R.type() == 'D' || a_even_) label_ = "B" + l;
  else label_ = "C" + l;

  sigma_ = root_perm(R, aut_.perm);
  omega_ = aut_.has_omega() ? root_perm(R, aut_.omega) : std::vector<int>();
  if (omega_.empty()) {
    omega_.resize(R.size());
    for (int a = 0; a < R.size(); ++a) omega_[a] = a;
  }

  std::map<Vec, std::vector<int>> groups;
  for (int a = 0; a < R.size(); ++a) groups[project(R.root(a))].push_back(a);

  std::vector<Vec> pos, negs;
  for (const auto& [c, members] : groups) (R.is_positive(members.front()) ? pos : negs).push_back(c);
  auto order = [](const Vec& x, const Vec& y) {
    int hx = RootSystem::height(x), hy = RootSystem::height(y);
    if (hx != hy) return std::abs(hx) < std::abs(hy);
    return lex_less(x, y) == (hx > 0);
  };
  std::sort(pos.begin(), pos.end(), order);
  std::vector<Vec> all = pos;
  for (const auto& c : pos) all.push_back(vneg(c));

  for (const auto& c : all) {
    FoldedRoot f;
    f.coords = c;
    f.preimage = groups.at(c);
    int a = f.preimage.front();
    f.positive = R.is_positive(a);
    if (sigma_[a] == a) f.type = RootType::R1;
    else if (r == 3) f.type = RootType::R4;
    else f.type = R.sum_index(a, sigma_[a]) >= 0 ? RootType::R3 : RootType::R2;
    // one sigma-orbit per fiber of pi
    std::set<int> orb;
    for (int j = 0, b = a; j < r; ++j, b = sigma_[b]) orb.insert(b);
    if (orb != std::set<int>(f.preimage.begin(), f.preimage.end()))
      throw std::logic_error("projection fiber is not a single orbit");

    if (a_even_) {
      f.length = f.type == RootType::R1   ? RootLength::ExtraLong
                 : f.type == RootType::R2 ? RootLength::Long
                                          : RootLength::Short;
    } else if (r == 1) {
      f.length = RootLength::Long;
    } else {
      f.length = f.type == RootType::R1 ? RootLength::Long : RootLength::Short;
    }
    if (a_even_) {
      bool even = std::all_of(c.begin(), c.end(), [](int x) { return x % 2 == 0; });
      if (even) {
        Vec half = c;
        for (auto& x : half) x /= 2;
        f.in_delta_sigma = groups.count(half) == 0;
      }
    }

    if (f.type == RootType::R1) {
      f.corr = a;
    } else if (f.type == RootType::R4) {
      static const std::vector<Vec> listed = {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 1}};
      for (int b : f.preimage)
        for (const auto& v : listed)
          if (R.root(b) == v || R.root(b) == vneg(v)) f.corr = b;
    } else {
      for (int b : f.preimage)
        if (!lex_less(R.root(sigma_[b]), R.root(b))) f.corr = b;
    }
    if (f.corr < 0) throw std::logic_error("no corresponding root");
    findex_[c] = static_cast<int>(froots_.size());
    froots_.push_back(std::move(f));
  }
  folded_of_.resize(R.size());
  for (int a = 0; a < R.size(); ++a) folded_of_[a] = findex_.at(project(R.root(a)));
}

Vec FoldedSystem::project(const Vec& lambda) const {
  Vec out(ell(), 0);
  for (int i = 0; i < rs_->rank(); ++i) out[orbit_of_[i]] += lambda[i];
  return out;
}

int FoldedSystem::find(const Vec& a) const {
  auto it = findex_.find(a);
  return it == findex_.end() ? -1 : it->second;
}

const FoldedRoot& FoldedSystem::at(const Vec& a) const {
  int i = find(a);
  if (i < 0) throw std::invalid_argument("not an element of pi(Delta)");
  return froots_[i];
}

int FoldedSystem::correspondent(const Vec& a) const { return at(a).corr; }

int FoldedSystem::sigma_root(int root, int times) const {
  int t = ((times % r()) + r()) % r();
  for (int i = 0; i < t; ++i) root = sigma_[root];
  return root;
}

Vec FoldedSystem::lift(const Vec& a) const {
  Vec out(rs_->rank(), 0);
  for (int p = 0; p < ell(); ++p) out[orbits_[p].front()] = a[p];
  return out;
}

Rat FoldedSystem::inner(const Vec& a, const Vec& b) const {
  Vec la = lift(a), lb = lift(b);
  Rat s = 0;
  for (int j = 0; j < r(); ++j) {
    s += rs_->inner(la, lb);
    lb = permute(aut_.perm, lb);
  }
  return s / r();
}

A0Data highest_a0(const FoldedSystem& fs) {
  const RootSystem& R = fs.rs();
  int n = R.rank();
  Vec alpha;
  if (fs.r() == 1 || fs.a_even()) {
    alpha = R.highest_root();
  } else if (fs.r() == 3) {
    alpha = {1, 1, 1, 0};
  } else if (R.type() == 'A') {
    alpha = Vec(n, 1);
    alpha[n - 1] = 0;
  } else if (R.type() == 'D') {
    alpha = Vec(n, 1);
    alpha[n - 1] = 0;
  } else {
    alpha = {1, 2, 2, 1, 1, 1};
  }
  A0Data out;
  out.alpha = R.index(alpha);
  out.minus_a0 = fs.project(alpha);
  out.type = fs.root_type(out.alpha);
  out.c = out.minus_a0;
  return out;
}

std::vector<int> automorphism_signs(const RootSystem& rs, const std::vector<int>& rootperm,
                                    const std::vector<int>& n) {
  int sz = rs.size();
  int P = rs.num_pos();
  std::vector<int> k(sz, 0);
  auto N = [&](int a, int b) { return n[a * sz + b]; };
  for (int a = 0; a < P; ++a) {
    if (RootSystem::height(rs.root(a)) == 1) {
      k[a] = k[rs.neg(a)] = 1;
      continue;
    }
    for (int i = 0; i < rs.rank(); ++i) {
      int s = rs.simple(i);
      int b = rs.index(vsub(rs.root(a), rs.root(s)));
      if (b < 0) continue;
      k[a] = k[b] * N(rootperm[s], rootperm[b]) / N(s, b);
      int ns = rs.neg(s), nb = rs.neg(b);
      k[rs.neg(a)] = k[nb] * N(rootperm[ns], rootperm[nb]) / N(ns, nb);
      break;
    }
  }
  return k;
}

namespace {

// (-1)^{sum a_i b_j f_ij} with f_ii = 1 and f_ij = 1 for linked i < j
int cocycle(const RootSystem& rs, const Vec& a, const Vec& b) {
  long e = 0;
  int n = rs.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool f = i == j || (i < j && rs.cartan()[i][j] == -1);
      if (f) e += static_cast<long>(a[i]) * b[j];
    }
  return (e % 2 == 0) ? 1 : -1;
}

std::vector<bool> sums_of_orbit_pairs(const FoldedSystem& fs) {
  const RootSystem& R = fs.rs();
  std::vector<bool> out(R.size(), false);
  if (fs.r() == 1) return out;
  for (int b = 0; b < R.size(); ++b) {
    int s = R.sum_index(b, fs.sigma_root(b));
    if (s >= 0) out[s] = true;
  }
  return out;
}

}  // namespace

ChevTable::ChevTable(const FoldedSystem& fs) {
  const RootSystem& R = fs.rs();
  size_ = R.size();
  int P = R.num_pos();
  n_.assign(size_ * size_, 0);
  auto sgn = [&](int a) { return R.is_positive(a) ? 1 : -1; };
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) {
      int s = R.sum_index(a, b);
      if (s >= 0) n_[a * size_ + b] = sgn(a) * sgn(b) * sgn(s) * cocycle(R, R.root(a), R.root(b));
    }

  // Extraspecial normalization: N_{alpha, xi - alpha} > 0 for the least such alpha.
  std::vector<int> sign(size_, 1);
  auto cur = [&](int a, int b) { return sign[a] * sign[b] * sign[R.sum_index(a, b)] * n_[a * size_ + b]; };
  for (int x = 0; x < P; ++x) {
    for (int a = 0; a < x; ++a) {
      int b = R.index(vsub(R.root(x), R.root(a)));
      if (b < 0 || !R.is_positive(b)) continue;
      if (cur(a, b) < 0) sign[x] = sign[R.neg(x)] = -sign[x];
      break;
    }
  }
  auto rescale = [&](const std::vector<int>& e) {
    for (int a = 0; a < size_; ++a)
      for (int b = 0; b < size_; ++b) {
        int s = R.sum_index(a, b);
        if (s >= 0) n_[a * size_ + b] *= e[a] * e[b] * e[s];
      }
  };
  rescale(sign);
  flip_ = sign;

  std::vector<int> sig(size_), om(size_);
  for (int a = 0; a < size_; ++a) {
    sig[a] = fs.sigma_root(a);
    om[a] = fs.omega_root(a);
  }

  if (fs.r() > 1) {
    std::vector<bool> target_neg = sums_of_orbit_pairs(fs);
    std::vector<std::pair<const std::vector<int>*, std::vector<int>>> gens;
    gens.push_back({&sig, automorphism_signs(R, sig, n_)});
    if (fs.aut().has_omega()) gens.push_back({&om, automorphism_signs(R, om, n_)});

    std::vector<int> eps(size_, 0);
    for (int start = 0; start < P; ++start) {
      if (eps[start]) continue;
      eps[start] = 1;
      std::deque<int> todo{start};
      while (!todo.empty()) {
        int a = todo.front();
        todo.pop_front();
        for (size_t g = 0; g < gens.size(); ++g) {
          int b = (*gens[g].first)[a];
          int want = (g == 0 && target_neg[a]) ? -1 : 1;
          int kint = gens[g].second[a];
          if (b == a) {
            if (kint != want) throw std::runtime_error("sign adjustment failed at a fixed root");
            continue;
          }
          int e = eps[a] * kint * want;
          if (eps[b] == 0) {
            eps[b] = e;
            todo.push_back(b);
          } else if (eps[b] != e) {
            throw std::runtime_error("sign adjustment failed to converge");
          }
        }
      }
    }
    for (int a = 0; a < P; ++a) eps[R.neg(a)] = eps[a];
    rescale(eps);
    for (int a = 0; a < size_; ++a) flip_[a] *= eps[a];
  }

  k_ = automorphism_signs(R, sig, n_);
  if (fs.aut().has_omega()) kw_ = automorphism_signs(R, om, n_);
}

std::vector<std::string> verify_sign_identities(const FoldedSystem& fs, const ChevTable& tbl) {
  const RootSystem& R = fs.rs();
  std::vector<std::string> fails;
  std::vector<bool> target_neg = sums_of_orbit_pairs(fs);
  for (int a = 0; a < R.size(); ++a) {
    if (tbl.k(a) != (target_neg[a] ? -1 : 1)) fails.push_back("k-rule root " + std::to_string(a));
    if (tbl.k(a) != tbl.k(fs.sigma_root(a))) fails.push_back("k-orbit root " + std::to_string(a));
  }
  for (int a = 0; a < R.size(); ++a)
    for (int b = 0; b < R.size(); ++b) {
      int s = R.sum_index(a, b);
      if (s < 0) continue;
      std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      int lhs = tbl.N(fs.sigma_root(a), fs.sigma_root(b));
      if (lhs != tbl.k(s) * tbl.k(a) * tbl.k(b) * tbl.N(a, b)) fails.push_back("N-sigma " + pair);
      if (fs.aut().has_omega() && tbl.N(fs.omega_root(a), fs.omega_root(b)) != tbl.N(a, b))
        fails.push_back("N-omega " + pair);
    }
  return fails;
}

std::vector<std::pair<int, int>> lie_bracket(const RootSystem& rs, const ChevTable& tbl, int x, int y) {
  int P = rs.size();
  std::vector<std::pair<int, int>> out;
  if (x < P && y < P) {
    if (y == rs.neg(x)) {
      const Vec& h = rs.root(x);
      for (int i = 0; i < rs.rank(); ++i)
        if (h[i]) out.push_back({P + i, h[i]});
    } else {
      int s = rs.sum_index(x, y);
      if (s >= 0) out.push_back({s, tbl.N(x, y)});
    }
  } else if (x < P) {
    Vec e(rs.rank(), 0);
    e[y - P] = 1;
    int v = rs.inner(rs.root(x), e);
    if (v) out.push_back({x, -v});
  } else if (y < P) {
    Vec e(rs.rank(), 0);
    e[x - P] = 1;
    int v = rs.inner(rs.root(y), e);
    if (v) out.push_back({y, v});
  }
  return out;
}

}  // namespace twloop
