#pragma once
// The twisted loop algebra L(g; Gamma) with central element c and degree
// derivation d, its special elements and the affine Chevalley generators.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "twloop/roots.hpp"
#include "twloop/scalars.hpp"

namespace twloop {

// Folded system plus normalized Chevalley table for one (X_N, r).
class LoopAlgebra {
 public:
  LoopAlgebra(char type, int rank, int r);

  const FoldedSystem& fs() const { return fs_; }
  const ChevTable& tbl() const { return tbl_; }
  const RootSystem& rs() const { return fs_.rs(); }
  int r() const { return fs_.r(); }
  std::string label() const;
  // dimension of g; basis index b < |Delta| is X_{root b}, |Delta| + i is H_i
  int dim() const { return rs().size() + rs().rank(); }
  int h_index(int i) const { return rs().size() + i; }
  int kappa(int x, int y) const;

 private:
  FoldedSystem fs_;
  ChevTable tbl_;
};

class LieElt {
 public:
  explicit LieElt(int r = 1) : r_(r), c_(r), d_(r) {}

  int r() const { return r_; }
  const std::map<int, Laurent>& terms() const { return terms_; }
  const Cyc& c() const { return c_; }
  const Cyc& d() const { return d_; }
  Laurent coeff(int basis) const;

  void add(int basis, const Laurent& s);
  void add_c(const Cyc& v) { c_ += v; }
  void add_d(const Cyc& v) { d_ += v; }
  bool is_zero() const { return terms_.empty() && c_.is_zero() && d_.is_zero(); }

  LieElt operator+(const LieElt& o) const;
  LieElt operator-(const LieElt& o) const;
  LieElt operator*(const Cyc& k) const;
  bool operator==(const LieElt& o) const {
    return r_ == o.r_ && terms_ == o.terms_ && c_ == o.c_ && d_ == o.d_;
  }
  bool operator!=(const LieElt& o) const { return !(*this == o); }

  static LieElt basis(int r, int b, const Laurent& s);
  static LieElt central(int r, const Cyc& v);
  static LieElt degree(int r, const Cyc& v);

  std::string str(const LoopAlgebra& alg) const;

 private:
  int r_;
  std::map<int, Laurent> terms_;
  Cyc c_;
  Cyc d_;
};

LieElt bracket(const LoopAlgebra& alg, const LieElt& x, const LieElt& y);
LieElt ad_power(const LoopAlgebra& alg, const LieElt& x, const LieElt& y, int times);

LieElt gamma_sigma(const LoopAlgebra& alg, const LieElt& x);
LieElt gamma_omega(const LoopAlgebra& alg, const LieElt& x);
bool is_fixed(const LoopAlgebra& alg, const LieElt& x);

// a' + n delta with a' in pi(Delta)
struct AffRoot {
  Vec a;
  int n = 0;
  bool operator==(const AffRoot&) const = default;
};

AffRoot neg(const AffRoot& x);
bool in_omega(const LoopAlgebra& alg, const AffRoot& x);
// all real roots with |n| <= nmax
std::vector<AffRoot> real_roots(const LoopAlgebra& alg, int nmax);

LieElt x_tilde(const LoopAlgebra& alg, const AffRoot& x);
Rat norm_sq(const LoopAlgebra& alg, const AffRoot& x);
// the finite part of phi(H_a)
LieElt h_part(const LoopAlgebra& alg, const Vec& a);
LieElt h_hat(const LoopAlgebra& alg, const AffRoot& x);
// prefactor with phi(X_a) = factor * x_tilde(a)
Cyc pair_factor(const LoopAlgebra& alg, const AffRoot& x);
std::pair<LieElt, LieElt> chevalley_pair(const LoopAlgebra& alg, const AffRoot& x);

struct AffineGCM {
  std::vector<Vec> A;            // A[p][q] = a_q(H_p), p, q in {0, ..., ell}
  std::vector<LieElt> H, E, F;   // hat generators
  std::vector<Rat> d;            // symmetrizing factors, d_p A_pq = d_q A_qp
  bool symmetrizable = false;
};

AffineGCM chev_generators(const LoopAlgebra& alg);
// 2 (a_p, a_q) / (a_p, a_p) from the folded form
std::vector<Vec> gcm_from_form(const LoopAlgebra& alg);
bool is_gcm(const std::vector<Vec>& A);

std::vector<std::string> verify_serre(const LoopAlgebra& alg, const AffineGCM& g);
std::vector<std::string> verify_pairs(const LoopAlgebra& alg, int nmax);

int graded_dim(const LoopAlgebra& alg, int n);

}  // namespace twloop
