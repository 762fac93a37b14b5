#pragma once
// Generator words for the twisted loop group: the group A_K, twisted atoms and
// their expansion, torus coordinates, and the maps Phi, Theta, Psi on generators.

#include <random>
#include <string>
#include <vector>

#include "twloop/loopalg.hpp"
#include "twloop/roots.hpp"
#include "twloop/scalars.hpp"

namespace twloop {

// chi = (chi1, chi2) with chi1 sigma'(chi1) = chi2 + sigma'(chi2)
struct AElt {
  Laurent x1;
  Laurent x2;
  int r() const { return x1.r(); }
  bool operator==(const AElt&) const = default;
};

AElt make_aelt(const Laurent& x1, const Laurent& x2);  // throws unless in A_K
bool in_A(const AElt& chi);
bool in_A_star(const AElt& chi);
AElt a_zero(int r);
AElt a_plus(const AElt& chi, const AElt& phi);
AElt a_neg(const AElt& chi);
AElt a_act(const Laurent& s, const AElt& chi);
// zeta2 sigma'(gamma2)^{-1}
Laurent c_of(const AElt& zeta, const AElt& gamma);

enum class AtomKind { X, W, H, XT, WT, HT };
std::string kind_name(AtomKind k);

struct GenAtom {
  AtomKind kind = AtomKind::X;
  int root = -1;  // untwisted root index for X, W, H
  Vec a;          // folded root for XT, WT, HT
  Laurent s;      // scalar payload (types R-1, R-2, R-4 and untwisted atoms)
  AElt chi;       // A_K payload (type R-3)
  AElt gamma;     // second payload of an R-3 h-atom
  bool operator==(const GenAtom&) const = default;

  static GenAtom x(int root, const Laurent& s);
  static GenAtom w(int root, const Laurent& s);
  static GenAtom h(int root, const Laurent& s);
};
using GenWord = std::vector<GenAtom>;

// Validated constructors for twisted atoms.  The payload kind must match the
// type of a: u in R_K (R-1), s in S_K (R-2), chi in A_K (R-3), s in S_K^omega' (R-4).
// Doubled roots 2a of (A_2l, 2) take sigma'-odd payloads.
GenAtom xt(const FoldedSystem& fs, const Vec& a, const Laurent& s);
GenAtom xt(const FoldedSystem& fs, const Vec& a, const AElt& chi);
GenAtom wt(const FoldedSystem& fs, const Vec& a, const Laurent& q);
GenAtom wt(const FoldedSystem& fs, const Vec& a, const AElt& zeta);
GenAtom ht(const FoldedSystem& fs, const Vec& a, const Laurent& q);
GenAtom ht(const FoldedSystem& fs, const Vec& a, const AElt& zeta, const AElt& gamma);
void validate(const FoldedSystem& fs, const GenAtom& atom);

// Definitional expansion into untwisted x-atoms only.
GenWord expand(const FoldedSystem& fs, const ChevTable& tbl, const GenAtom& atom);
GenWord expand(const FoldedSystem& fs, const ChevTable& tbl, const GenWord& word);
// Closed product forms in untwisted w/h atoms (R-2, R-4 w and h; every h).
GenWord product_form(const FoldedSystem& fs, const GenAtom& atom);
// Inverse of a word of untwisted atoms.
GenWord inverse(const GenWord& word);

// prod_i h_{alpha_i}(u_i)
struct TorusElt {
  std::vector<Laurent> u;
  static TorusElt identity(int rank, int r);
  TorusElt operator*(const TorusElt& o) const;
  bool is_identity() const;
  bool operator==(const TorusElt&) const = default;
};

TorusElt torus_h(const RootSystem& rs, int root, const Laurent& u);
TorusElt torus_of(const FoldedSystem& fs, const GenWord& word);
bool kernel_test(const FoldedSystem& fs, const GenWord& word);

// Generators of the affine Kac-Moody group of the twisted type, over K = Q.
struct KMAtom {
  AtomKind kind = AtomKind::X;  // X, W or H
  AffRoot root;
  Rat nu;
};

// eps_a xi_a^{-n} nu z^{n/2} -> (1, 1/2)
AElt chi_hat(const FoldedSystem& fs, const AffRoot& x, const Rat& nu);
GenAtom phi(const FoldedSystem& fs, const KMAtom& atom);
GenWord phi(const FoldedSystem& fs, const std::vector<KMAtom>& word);

// The central subgroup Z_K at parameter tau, as h-atoms on the simple affine roots.
std::vector<KMAtom> zk_element(const FoldedSystem& fs, const Rat& tau);
std::vector<AffRoot> simple_affine_roots(const FoldedSystem& fs);
// exponent e_p with tau_p = tau^{e_p} in Z_K
std::vector<int> zk_exponents(const FoldedSystem& fs);

// Generators of the untwisted affine Kac-Moody group over Q(xi).
struct UAtom {
  AtomKind kind = AtomKind::X;  // X, W or H
  int alpha = -1;
  int n = 0;
  Cyc nu;
  bool operator==(const UAtom&) const = default;
};
using UWord = std::vector<UAtom>;

enum class GammaGen { Sigma, Omega };
UAtom gamma_on_km(const FoldedSystem& fs, const ChevTable& tbl, GammaGen g, const UAtom& atom);
UWord theta(const FoldedSystem& fs, const ChevTable& tbl, const KMAtom& atom);
// x_{alpha + n delta}(nu) -> x_alpha(nu z^{n/r})
GenAtom psi(const FoldedSystem& fs, const UAtom& atom);
GenWord psi(const FoldedSystem& fs, const UWord& word);

// Random valid payloads for sampled scans.
Rat random_rat(std::mt19937_64& rng);  // nonzero, small height
Laurent random_laurent(std::mt19937_64& rng, int r, int terms);
Laurent random_unit(std::mt19937_64& rng, int r);
// a twisted atom of the given kind on a, with a payload valid for the type of a
GenAtom random_atom(const FoldedSystem& fs, const Vec& a, AtomKind kind, std::mt19937_64& rng);

}  // namespace twloop
