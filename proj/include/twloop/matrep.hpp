#pragma once
// Exact matrix realizations: the natural SL_{N+1} module for type A and the
// adjoint module for every supported type, with the semilinear Gamma-action.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twloop/groupwords.hpp"

namespace twloop {

class MatS {
 public:
  MatS() = default;
  MatS(int r, int n);
  static MatS identity(int r, int n);

  int r() const { return r_; }
  int dim() const { return n_; }
  Laurent& at(int i, int j) { return e_[i * n_ + j]; }
  const Laurent& at(int i, int j) const { return e_[i * n_ + j]; }

  MatS operator*(const MatS& o) const;
  MatS operator+(const MatS& o) const;
  MatS operator-(const MatS& o) const;
  bool operator==(const MatS& o) const { return r_ == o.r_ && n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const MatS& o) const { return !(*this == o); }

  MatS transpose() const;
  MatS sigma_prime() const;
  MatS omega_prime() const;
  Laurent det() const;
  // requires a unit determinant
  MatS inverse() const;
  bool is_identity() const;

 private:
  int r_ = 1;
  int n_ = 0;
  std::vector<Laurent> e_;
};

enum class ModelKind { Natural, Adjoint };
std::string model_name(ModelKind k);

class RepModel {
 public:
  RepModel(ModelKind kind, const FoldedSystem& fs);

  ModelKind kind() const { return kind_; }
  int dim() const { return dim_; }
  int r() const { return fs_.r(); }
  const FoldedSystem& fs() const { return fs_; }
  const ChevTable& tbl() const { return tbl_; }
  const RootSystem& rs() const { return fs_.rs(); }

  // image of X_alpha, as a constant matrix
  MatS xmat(int root) const;
  // sum_m s^m X^{(m)}
  MatS unip(int root, const Laurent& s) const;
  // twisted atoms are expanded first
  MatS eval(const GenWord& w) const;
  // unip(root, s) applied to a vector with rational entries
  std::vector<Rat> act(int root, const Rat& s, const std::vector<Rat>& v) const;

  MatS sigma_mat(const MatS& c) const;
  MatS omega_mat(const MatS& c) const;
  bool is_twisted_point(const MatS& c) const;
  // antidiagonal entries of J (natural model only)
  const std::vector<int>& J() const { return j_; }

 private:
  struct Entry {
    int i, j;
    Rat v;
  };
  void build_natural();
  void build_adjoint();
  void find_J();

  ModelKind kind_;
  FoldedSystem fs_;
  ChevTable tbl_;
  int dim_ = 0;
  // divided powers X^{(m)}, m = 1..; sparse
  std::vector<std::vector<std::vector<Entry>>> pow_;
  // adjoint basis permutation with signs under sigma and omega
  std::vector<int> sperm_, ssign_, wperm_, wsign_;
  std::vector<int> j_;
};

// [x_alpha(nu), x_beta(mu)] against the ordered product over Q_{alpha, beta}
bool commutator_check(const RepModel& m, int a, int b, const Laurent& nu, const Laurent& mu);

struct CijEntry {
  int i, j;
  int c;
};
using CijTable = std::map<std::pair<int, int>, std::vector<CijEntry>>;
// c^{i,j}_{alpha,beta} for every pair alpha != +-beta, from the adjoint model
CijTable cij_table(const RepModel& adjoint);
// w_alpha(1) X_beta = eta X_{s_alpha beta}
int eta_check(const RepModel& adjoint, int a, int b);
// the same commutator check with constants taken from a precomputed table
bool commutator_check(const RepModel& m, const CijTable& cij, int a, int b, const Laurent& nu,
                      const Laurent& mu);
// w_alpha(1) x_beta(s) w_alpha(1)^{-1} = x_{s_alpha beta}(eta s)
bool conjugation_check(const RepModel& m, int a, int b, const Laurent& s, int eta);

enum class Lemma { XSX, WSW, HSH };
std::string lemma_name(Lemma l);
// failure descriptions; empty means all samples passed
std::vector<std::string> verify_lemma(Lemma which, const RepModel& m, int samples, std::uint64_t seed);
std::vector<std::string> verify_gal_act(const FoldedSystem& fs, const ChevTable& tbl);
// Psi o Theta = Phi on atoms, Phi(w), Phi(h) against the images of their definitions,
// and Psi against the Gamma-actions
std::vector<std::string> verify_diagram(const RepModel& m, int samples, std::uint64_t seed);

}  // namespace twloop
