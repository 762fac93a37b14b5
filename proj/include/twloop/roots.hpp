#pragma once
// Simply-laced root systems, diagram automorphisms, folding and
// Chevalley structure constants.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "twloop/scalars.hpp"

namespace twloop {

using Vec = std::vector<int>;

Vec vadd(const Vec& a, const Vec& b);
Vec vsub(const Vec& a, const Vec& b);
Vec vneg(const Vec& a);
Vec vscale(const Vec& a, int k);
bool is_zero_vec(const Vec& a);

// lambda < mu iff the last nonzero coordinate of mu - lambda is positive
bool lex_less(const Vec& a, const Vec& b);

enum class RootType { R1 = 1, R2 = 2, R3 = 3, R4 = 4 };
enum class RootLength { Short, Long, ExtraLong };
std::string type_name(RootType t);
std::string length_name(RootLength l);

class RootSystem {
 public:
  RootSystem(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }
  const std::vector<Vec>& cartan() const { return cartan_; }

  // Roots 0..P-1 are positive in (height, lex) order; root P+i is -root(i).
  int size() const { return static_cast<int>(roots_.size()); }
  int num_pos() const { return static_cast<int>(roots_.size()) / 2; }
  const Vec& root(int i) const { return roots_[i]; }
  int index(const Vec& v) const;
  bool is_root(const Vec& v) const { return index(v) >= 0; }
  bool is_positive(int i) const { return i < num_pos(); }
  int neg(int i) const { return i < num_pos() ? i + num_pos() : i - num_pos(); }
  int simple(int i) const { return simple_[i]; }
  // index of root(a) + root(b), or -1
  int sum_index(int a, int b) const { return sum_[a * size() + b]; }

  int inner(const Vec& a, const Vec& b) const;
  // (beta, alpha^vee) = beta(H_alpha)
  int pairing(const Vec& beta, const Vec& alpha) const { return inner(beta, alpha); }
  Vec reflect(const Vec& alpha, const Vec& beta) const;
  // H_alpha = sum n_i H_i
  Vec coroot(const Vec& alpha) const { return alpha; }
  Vec highest_root() const { return roots_[num_pos() - 1]; }
  static int height(const Vec& v);

 private:
  char type_;
  int rank_;
  std::vector<Vec> cartan_;
  std::vector<Vec> roots_;
  std::map<Vec, int> index_;
  std::vector<int> simple_;
  std::vector<int> sum_;
};

struct DiagramAut {
  int r = 1;
  std::vector<int> perm;   // sigma on simple indices (0-based)
  std::vector<int> omega;  // the auxiliary involution of (D4, 3); empty otherwise
  bool has_omega() const { return !omega.empty(); }
};

DiagramAut diagram_aut(const RootSystem& rs, int r);
// image of a root vector under the permutation of simple roots
Vec permute(const std::vector<int>& perm, const Vec& v);

struct FoldedRoot {
  Vec coords;  // in the basis a_1..a_ell
  bool positive = true;
  RootType type = RootType::R1;
  RootLength length = RootLength::Long;
  bool in_delta_sigma = true;
  int corr = -1;               // the corresponding root a' <-> alpha
  std::vector<int> preimage;   // sigma-orbit projecting to coords
};

class FoldedSystem {
 public:
  FoldedSystem(RootSystem rs, int r);

  const RootSystem& rs() const { return *rs_; }
  const DiagramAut& aut() const { return aut_; }
  int r() const { return aut_.r; }
  int ell() const { return static_cast<int>(orbits_.size()); }
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  int orbit_of(int i) const { return orbit_of_[i]; }
  std::string label() const { return label_; }
  // (A_{2l}, 2)
  bool a_even() const { return a_even_; }

  Vec project(const Vec& lambda) const;
  const std::vector<FoldedRoot>& roots() const { return froots_; }
  int find(const Vec& a) const;
  const FoldedRoot& at(const Vec& a) const;
  int folded_of_root(int root) const { return folded_of_[root]; }
  int correspondent(const Vec& a) const;
  RootType root_type(int root) const { return froots_[folded_of_[root]].type; }

  int sigma_root(int root) const { return sigma_[root]; }
  int sigma_root(int root, int times) const;
  int omega_root(int root) const { return omega_[root]; }

  // (pi lambda, pi mu) evaluated on folded coordinates
  Rat inner(const Vec& a, const Vec& b) const;
  Vec lift(const Vec& a) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  DiagramAut aut_;
  std::vector<std::vector<int>> orbits_;
  std::vector<int> orbit_of_;
  std::string label_;
  bool a_even_ = false;
  std::vector<FoldedRoot> froots_;
  std::map<Vec, int> findex_;
  std::vector<int> folded_of_;
  std::vector<int> sigma_;
  std::vector<int> omega_;
};

struct A0Data {
  Vec minus_a0;  // -a_0 = sum c_p a_p
  int alpha;     // the tabulated root with -a_0 <-> alpha
  RootType type;
  Vec c;
};

A0Data highest_a0(const FoldedSystem& fs);

class ChevTable {
 public:
  explicit ChevTable(const FoldedSystem& fs);

  int N(int a, int b) const { return n_[a * size_ + b]; }
  int k(int a) const { return k_[a]; }
  int k_omega(int a) const { return kw_.empty() ? 1 : kw_[a]; }
  // sign applied to X_alpha by the orbit normalization
  int flip(int a) const { return flip_[a]; }
  int size() const { return size_; }

 private:
  int size_;
  std::vector<int> n_;
  std::vector<int> k_;
  std::vector<int> kw_;
  std::vector<int> flip_;
};

// sigma(X_alpha) = k_alpha X_{sigma alpha} for the automorphism fixing each X_{+-alpha_i}
std::vector<int> automorphism_signs(const RootSystem& rs, const std::vector<int>& rootperm,
                                    const std::vector<int>& n);

// Prop k_a, N-sigma and N-omega on every composable pair; returns failures.
std::vector<std::string> verify_sign_identities(const FoldedSystem& fs, const ChevTable& tbl);

// Bracket of two Chevalley basis elements of g.  Index b < |Delta| is X_{root b},
// index |Delta| + i is H_{alpha_i}.  Returns (basis index, coefficient) pairs.
std::vector<std::pair<int, int>> lie_bracket(const RootSystem& rs, const ChevTable& tbl, int x, int y);

}  // namespace twloop
