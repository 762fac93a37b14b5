#pragma once
// SU_3 over S_K = Q[z^{1/2}, z^{-1/2}]: membership, generator matrices and the
// Euclidean reduction of a member to a word in elementary generators.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "twloop/groupwords.hpp"
#include "twloop/matrep.hpp"

namespace twloop {

// X   x_{+-a1}(chi), chi in A_K
// XP  x'_{+-a1}(s) = x_{+-a1}((0, -s)), s sigma'-odd
// W   w_{a1}(zeta), zeta in A*
// WP  w'_{a1}(zeta) = w_{a1}((zeta1/zeta2, 1/zeta2))
// HP  h'_{a1}(tau z^{n/2})
enum class SU3Kind { X, XP, W, WP, HP };
std::string su3_kind_name(SU3Kind k);
SU3Kind su3_kind_from_name(const std::string& s);

struct SU3Atom {
  SU3Kind kind = SU3Kind::X;
  int sign = 1;  // +a1 or -a1; only X and XP use -1
  AElt chi;      // X, W, WP
  Laurent s;     // XP, HP
  bool operator==(const SU3Atom&) const = default;

  static SU3Atom x(int sign, const AElt& chi);
  static SU3Atom xp(int sign, const Laurent& s);
  static SU3Atom w(const AElt& zeta);
  static SU3Atom wp(const AElt& zeta);
  static SU3Atom hp(const Laurent& t);
};
using SU3Word = std::vector<SU3Atom>;

// throws std::invalid_argument on a bad payload
void validate(const SU3Atom& a);
MatS gen_matrix(const SU3Atom& a);
MatS eval(const SU3Word& w);
SU3Atom inverse(const SU3Atom& a);
SU3Word inverse(const SU3Word& w);

const std::vector<int>& su3_J();  // antidiagonal of J
bool is_su3(const MatS& c);

struct Reduction {
  SU3Word word;  // left multiplier, written as a product
  MatS result;   // eval(word) * input
};

Reduction swap_reduce(const MatS& c);
Reduction align_tops(const MatS& c);
Reduction euclid_step(const MatS& c);
// C = eval(word) for C with s21 = s31 = 0, or s11 = 0
SU3Word terminal_decompose(const MatS& c);

enum class StepKind { Swap, AlignI, AlignII, Euclid, Terminal };
std::string step_name(StepKind k);

struct TraceStep {
  StepKind kind;
  SU3Word atoms;
  int k11_before = 0;
  int k11_after = 0;
  MatS state;  // matrix after the step
};
using DecompTrace = std::vector<TraceStep>;

std::pair<SU3Word, DecompTrace> decompose(const MatS& c);

// payload coefficients p/q with |p|, q <= 3 and exponents |n| <= 4
SU3Atom random_su3_atom(std::mt19937_64& rng);
SU3Word random_su3_word(std::mt19937_64& rng, int len);

}  // namespace twloop
