#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "twloop/su3.hpp"

using namespace twloop;

namespace {

Laurent zm(int n) { return Laurent::zmono(2, n); }
Laurent cst(const Rat& q) { return Laurent::constant(2, q); }
Laurent mono(const Rat& q, int n) { return Laurent::monomial(Cyc(2, q), n); }

MatS diag3(const Laurent& a, const Laurent& b, const Laurent& c) {
  MatS m(2, 3);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  m.at(2, 2) = c;
  return m;
}

MatS antidiag3(const Laurent& a, const Laurent& b, const Laurent& c) {
  MatS m(2, 3);
  m.at(0, 2) = a;
  m.at(1, 1) = b;
  m.at(2, 0) = c;
  return m;
}

const Rat half(1, 2);

AElt chi_sample() {
  // (1 + z^{1/2}, (1 + z^{1/2}) sigma'(1 + z^{1/2}) / 2 + z^{3/2})
  Laurent x1 = cst(1) + zm(1);
  Laurent x2 = x1 * x1.sigma_prime() * Cyc(2, half) + zm(3);
  return make_aelt(x1, x2);
}

AElt chi_even() {
  Laurent x1 = cst(1) + zm(1);
  return make_aelt(x1, x1 * x1.sigma_prime() * Cyc(2, half));
}

}  // namespace

TEST(IsSU3, Basics) {
  EXPECT_TRUE(is_su3(MatS::identity(2, 3)));
  EXPECT_FALSE(is_su3(diag3(zm(1), cst(1), zm(-1))));
  EXPECT_TRUE(is_su3(diag3(zm(2), cst(1), zm(-2))));
  EXPECT_TRUE(is_su3(diag3(cst(2), cst(1), cst(half))));
  EXPECT_FALSE(is_su3(diag3(cst(2), cst(1), cst(2))));
  EXPECT_THROW(is_su3(MatS::identity(2, 2)), std::invalid_argument);
  EXPECT_THROW(is_su3(MatS::identity(1, 3)), std::invalid_argument);
}

TEST(GenMatrix, Displays) {
  EXPECT_TRUE(gen_matrix(SU3Atom::x(1, a_zero(2))).is_identity());
  EXPECT_TRUE(gen_matrix(SU3Atom::x(-1, a_zero(2))).is_identity());
  EXPECT_EQ(gen_matrix(SU3Atom::w(make_aelt(cst(1), cst(half)))), antidiag3(cst(half), cst(-1), cst(2)));

  AElt chi = chi_sample();
  MatS up = MatS::identity(2, 3);
  up.at(0, 1) = chi.x1;
  up.at(0, 2) = chi.x2.sigma_prime();
  up.at(1, 2) = chi.x1.sigma_prime();
  EXPECT_EQ(gen_matrix(SU3Atom::x(1, chi)), up);
  MatS lo = MatS::identity(2, 3);
  lo.at(1, 0) = chi.x1.sigma_prime();
  lo.at(2, 0) = chi.x2.sigma_prime();
  lo.at(2, 1) = chi.x1;
  EXPECT_EQ(gen_matrix(SU3Atom::x(-1, chi)), lo);
}

TEST(GenMatrix, PrimedForms) {
  // h'(2 z^{3/2}) = diag(2 z^{3/2}, -1, -1/2 z^{-3/2})
  EXPECT_EQ(gen_matrix(SU3Atom::hp(mono(2, 3))), diag3(mono(2, 3), cst(-1), mono(Rat(-1, 2), -3)));
  EXPECT_EQ(gen_matrix(SU3Atom::hp(cst(half))), diag3(cst(half), cst(1), cst(2)));
  Laurent s = mono(3, 1) + mono(-1, -3);
  EXPECT_EQ(gen_matrix(SU3Atom::xp(1, s)), gen_matrix(SU3Atom::x(1, make_aelt(Laurent(2), -s))));
  EXPECT_EQ(gen_matrix(SU3Atom::xp(-1, s)), gen_matrix(SU3Atom::x(-1, make_aelt(Laurent(2), -s))));
  // w'((1, 1/2)) = w((2, 2))
  EXPECT_EQ(gen_matrix(SU3Atom::wp(make_aelt(cst(1), cst(half)))), antidiag3(cst(2), cst(-1), cst(half)));
}

TEST(GenMatrix, RejectsBadPayloads) {
  EXPECT_THROW(SU3Atom::xp(1, zm(2)), std::invalid_argument);
  EXPECT_THROW(SU3Atom::hp(zm(1) + cst(1)), std::invalid_argument);
  EXPECT_THROW(SU3Atom::hp(Laurent(2)), std::invalid_argument);
  EXPECT_THROW(SU3Atom::w(make_aelt(Laurent(2), Laurent(2))), std::invalid_argument);
  EXPECT_THROW(SU3Atom::x(1, AElt{cst(1), cst(1)}), std::invalid_argument);
  EXPECT_THROW(SU3Atom::x(2, a_zero(2)), std::invalid_argument);
}

TEST(GenMatrix, GeneratorsAreMembers) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    SU3Atom a = random_su3_atom(rng);
    MatS g = gen_matrix(a);
    EXPECT_TRUE(is_su3(g)) << su3_kind_name(a.kind);
    EXPECT_TRUE((g * gen_matrix(inverse(a))).is_identity()) << su3_kind_name(a.kind);
  }
}

TEST(GenMatrix, AdditionInA) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    SU3Atom a = random_su3_atom(rng), b = random_su3_atom(rng);
    if (a.kind != SU3Kind::X || b.kind != SU3Kind::X) continue;
    for (int sg : {1, -1})
      EXPECT_EQ(gen_matrix(SU3Atom::x(sg, a.chi)) * gen_matrix(SU3Atom::x(sg, b.chi)),
                gen_matrix(SU3Atom::x(sg, a_plus(a.chi, b.chi))));
  }
}

TEST(GenMatrix, GroupClosure) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    MatS c = eval(random_su3_word(rng, 6));
    EXPECT_TRUE(is_su3(c));
    EXPECT_TRUE(is_su3(c.inverse()));
    EXPECT_TRUE((c * eval(inverse(random_su3_word(rng, 3)))).det().is_one());
  }
}

TEST(GenMatrix, TorusFromWPairs) {
  // h(zeta, gamma) = w(zeta) w(gamma) with diagonal
  // (sigma' zeta2 / gamma2, +zeta2 gamma2 / sigma'(zeta2 gamma2), sigma' gamma2 / zeta2)
  AElt zeta = make_aelt(cst(1), cst(half));
  AElt gamma = make_aelt(Laurent(2), mono(half, -1));
  MatS h = gen_matrix(SU3Atom::w(zeta)) * gen_matrix(SU3Atom::w(gamma));
  EXPECT_EQ(h, diag3(zm(1), cst(-1), -zm(-1)));
  // the product definition of h'(tau z^{n/2}) yields h'(tau^{-1} z^{n/2})
  for (int n : {1, 2, 3}) {
    Rat tau(3), ht = half * tau, inv = 1 / tau;
    MatS p = MatS::identity(2, 3);
    for (int k = 0; k < n - 1; ++k) p = p * h;
    AElt g2 = make_aelt(Laurent(2), mono(ht, -1));
    p = p * gen_matrix(SU3Atom::w(zeta)) * gen_matrix(SU3Atom::w(g2));
    EXPECT_EQ(p, gen_matrix(SU3Atom::hp(mono(inv, n))));
    EXPECT_NE(p, gen_matrix(SU3Atom::hp(mono(tau, n))));
  }
}

TEST(GenMatrix, AgreesWithNaturalModel) {
  FoldedSystem fs(RootSystem('A', 2), 2);
  RepModel nat(ModelKind::Natural, fs);
  Vec a1 = fs.roots()[0].coords;
  for (const auto& f : fs.roots())
    if (f.positive && f.in_delta_sigma) a1 = f.coords;
  Vec na1 = a1;
  for (auto& v : na1) v = -v;
  AElt chi = chi_sample();
  EXPECT_EQ(nat.eval({xt(fs, a1, chi)}), gen_matrix(SU3Atom::x(1, chi)));
  EXPECT_EQ(nat.eval({xt(fs, na1, chi)}), gen_matrix(SU3Atom::x(-1, chi)));
  AElt zeta = make_aelt(cst(1), cst(half));
  EXPECT_EQ(nat.eval({wt(fs, a1, zeta)}), gen_matrix(SU3Atom::w(zeta)));
}

TEST(Swap, PermutesRows) {
  MatS e = eval(SU3Word{SU3Atom::hp(cst(half)), SU3Atom::wp(make_aelt(cst(1), cst(half)))});
  EXPECT_EQ(e, antidiag3(cst(1), cst(-1), cst(1)));

  Reduction id = swap_reduce(MatS::identity(2, 3));
  EXPECT_TRUE(id.word.empty());
  EXPECT_TRUE(id.result.is_identity());

  // k31 > k11 forces the swap
  MatS c = gen_matrix(SU3Atom::x(-1, chi_sample()));
  ASSERT_GT(deg_stats(c.at(2, 0)).k, deg_stats(c.at(0, 0)).k);
  Reduction r = swap_reduce(c);
  ASSERT_EQ(r.word.size(), 2u);
  EXPECT_EQ(r.result, e * c);
  for (int j = 0; j < 3; ++j) {
    EXPECT_EQ(r.result.at(0, j), c.at(2, j));
    EXPECT_EQ(r.result.at(1, j), -c.at(1, j));
    EXPECT_EQ(r.result.at(2, j), c.at(0, j));
  }
  EXPECT_LE(deg_stats(r.result.at(2, 0)).k, deg_stats(r.result.at(0, 0)).k);
  // k31 <= k11 leaves C alone
  Reduction again = swap_reduce(r.result);
  EXPECT_TRUE(again.word.empty());
  EXPECT_EQ(again.result, r.result);
}

TEST(Align, CaseIShift) {
  // after the swap s11 = (1 - z)/2 (M = 2) and s31 = 1 (M' = 0)
  MatS c = swap_reduce(gen_matrix(SU3Atom::x(-1, chi_even()))).result;
  DegStats d11 = deg_stats(c.at(0, 0)), d31 = deg_stats(c.at(2, 0));
  ASSERT_EQ((d31.M - d11.M) % 2, 0);
  ASSERT_NE(d31.M, d11.M);
  Reduction r = align_tops(c);
  ASSERT_EQ(r.word.size(), 1u);
  EXPECT_EQ(r.word[0], SU3Atom::hp(zm((d31.M - d11.M) / 2)));
  EXPECT_EQ(deg_stats(r.result.at(0, 0)).M, deg_stats(r.result.at(2, 0)).M);
  EXPECT_EQ(deg_stats(r.result.at(0, 0)).k, d11.k);
  EXPECT_EQ(deg_stats(r.result.at(2, 0)).k, d31.k);
  EXPECT_EQ(r.result, eval(r.word) * c);
}

TEST(Align, CaseIIFirstMultiplier) {
  std::mt19937_64 rng(21);
  int seen = 0;
  for (int i = 0; i < 400 && seen < 20; ++i) {
    MatS c = swap_reduce(eval(random_su3_word(rng, 5))).result;
    if (c.at(0, 0).is_zero() || c.at(2, 0).is_zero()) continue;
    DegStats d11 = deg_stats(c.at(0, 0)), d31 = deg_stats(c.at(2, 0));
    if ((d31.M - d11.M) % 2 == 0) continue;
    ++seen;
    Reduction r = align_tops(c);
    // the first multiplier already cuts k11, so the alternating loop never runs twice
    ASSERT_EQ(r.word.size(), 2u);
    // word = (..., x', h'(z^{(M'-M+1)/4})), the shift acting first
    int n = (d31.M - d11.M + 1) / 2;
    EXPECT_EQ(r.word.back(), SU3Atom::hp(zm(n)));
    Rat eps = n % 2 == 0 ? 1 : -1;
    Rat nu = c.at(0, 0).coeff(d11.M).a(), mu = c.at(2, 0).coeff(d31.M).a();
    Rat t = -eps * nu / mu;
    // the displayed multiplier has (1,3) entry -eps nu/mu z^{1/2}
    MatS x = gen_matrix(r.word[r.word.size() - 2]);
    EXPECT_EQ(x.at(0, 2), mono(t, 1));
    EXPECT_EQ(r.word[r.word.size() - 2], SU3Atom::xp(1, mono(t, 1)));
    // postcondition: aligned, or k11 decreased
    DegStats e11 = deg_stats(r.result.at(0, 0)), e31 = deg_stats(r.result.at(2, 0));
    EXPECT_TRUE(e11.M == e31.M || e11.k < d11.k || r.result.at(0, 0).is_zero());
    EXPECT_EQ(r.result, eval(r.word) * c);
  }
  EXPECT_EQ(seen, 20);
}

TEST(Align, AlreadyAlignedAndPreconditions) {
  MatS c = swap_reduce(gen_matrix(SU3Atom::x(-1, chi_sample()))).result;
  Reduction r = align_tops(c);
  Reduction again = align_tops(r.result);
  EXPECT_TRUE(again.word.empty());
  EXPECT_THROW(align_tops(MatS::identity(2, 3)), std::invalid_argument);
  EXPECT_THROW(align_tops(gen_matrix(SU3Atom::x(-1, chi_sample()))), std::invalid_argument);
}

TEST(Euclid, KillsTopCoefficient) {
  std::mt19937_64 rng(31);
  int seen = 0;
  for (int i = 0; i < 400 && seen < 30; ++i) {
    MatS c = eval(random_su3_word(rng, 6));
    c = swap_reduce(c).result;
    if (c.at(0, 0).is_zero() || c.at(2, 0).is_zero()) continue;
    c = align_tops(c).result;
    c = swap_reduce(c).result;
    if (c.at(0, 0).is_zero()) continue;
    DegStats d11 = deg_stats(c.at(0, 0)), d21 = deg_stats(c.at(1, 0)), d31 = deg_stats(c.at(2, 0));
    if (d11.M != d31.M || d11.k == 0) continue;
    ++seen;
    int M = d11.M;
    Rat nu = c.at(0, 0).coeff(M).a(), iota = c.at(1, 0).coeff(M).a(), mu = c.at(2, 0).coeff(M).a();
    // aligned-state invariants
    EXPECT_EQ(d21.M, M);
    EXPECT_EQ(iota * iota, 2 * nu * mu);
    EXPECT_LE(d11.m, std::min(d21.m, d31.m));
    Rat c1 = -2 * nu / iota, c2 = 2 * nu * nu / (iota * iota);
    EXPECT_EQ(Rat(nu + c1 * iota + c2 * mu), 0);
    Reduction r = euclid_step(c);
    ASSERT_EQ(r.word.size(), 1u);
    EXPECT_EQ(r.word[0], SU3Atom::x(1, make_aelt(cst(c1), cst(c2))));
    EXPECT_TRUE(r.result.at(0, 0).coeff(M).is_zero());
    EXPECT_LT(deg_stats(r.result.at(0, 0)).k, d11.k);
    EXPECT_TRUE(is_su3(r.result));
  }
  EXPECT_EQ(seen, 30);
}

TEST(Euclid, RejectsUnalignedInput) {
  EXPECT_THROW(euclid_step(MatS::identity(2, 3)), std::invalid_argument);
  MatS c = swap_reduce(gen_matrix(SU3Atom::x(-1, chi_even()))).result;
  EXPECT_THROW(euclid_step(c), std::invalid_argument);
}

TEST(Terminal, UpperTriangularFinish) {
  EXPECT_TRUE(terminal_decompose(MatS::identity(2, 3)).empty());
  // E'(E C) upper triangular with diagonal
  // (sigma'(s13)^{-1}, sigma'(s13)/s13, s13)
  Laurent s13 = mono(3, 1);
  AElt chi = chi_sample();
  MatS c = antidiag3(cst(1), cst(-1), cst(1)) * gen_matrix(SU3Atom::hp(s13.sigma_prime().inv_unit())) *
           gen_matrix(SU3Atom::x(1, chi));
  ASSERT_TRUE(c.at(0, 0).is_zero());
  ASSERT_TRUE(is_su3(c));
  EXPECT_EQ(c.at(0, 2), s13);
  MatS u = antidiag3(cst(1), cst(-1), cst(1)) * c;
  EXPECT_EQ(u.at(0, 0), s13.sigma_prime().inv_unit());
  EXPECT_EQ(u.at(1, 1), s13.sigma_prime() * s13.inv_unit());
  EXPECT_EQ(u.at(2, 2), s13);
  EXPECT_TRUE(u.at(1, 0).is_zero() && u.at(2, 0).is_zero() && u.at(2, 1).is_zero());
  EXPECT_EQ(eval(terminal_decompose(c)), c);
  // w((1, 1/2)) has a zero corner
  MatS w = gen_matrix(SU3Atom::w(make_aelt(cst(1), cst(half))));
  EXPECT_EQ(eval(terminal_decompose(w)), w);
  EXPECT_THROW(terminal_decompose(gen_matrix(SU3Atom::x(-1, chi))), std::invalid_argument);
}

TEST(Decompose, Identity) {
  auto [word, trace] = decompose(MatS::identity(2, 3));
  EXPECT_TRUE(word.empty());
  EXPECT_TRUE(eval(word).is_identity());
}

TEST(Decompose, RejectsNonMembers) {
  EXPECT_THROW(decompose(diag3(zm(1), cst(1), zm(-1))), std::invalid_argument);
}

TEST(Decompose, EachGenerator) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    SU3Atom a = random_su3_atom(rng);
    MatS g = gen_matrix(a);
    EXPECT_EQ(eval(decompose(g).first), g) << su3_kind_name(a.kind);
  }
  MatS w = gen_matrix(SU3Atom::w(make_aelt(cst(1), cst(half))));
  auto [word, trace] = decompose(w);
  EXPECT_EQ(eval(word), w);
  for (const auto& st : trace) EXPECT_NE(st.kind, StepKind::Euclid);
}

TEST(Decompose, RandomWordsRoundTrip) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> len(0, 12);
  int euclid = 0;
  for (int i = 0; i < 200; ++i) {
    MatS c = eval(random_su3_word(rng, len(rng)));
    ASSERT_TRUE(is_su3(c));
    auto [word, trace] = decompose(c);
    ASSERT_EQ(eval(word), c) << "word " << i;
    ASSERT_FALSE(trace.empty());
    EXPECT_EQ(trace.back().kind, StepKind::Terminal);
    int prev = deg_stats(c.at(0, 0)).k;
    for (const auto& st : trace) {
      EXPECT_TRUE(is_su3(st.state));
      EXPECT_EQ(st.k11_before, prev);
      EXPECT_EQ(st.k11_after, deg_stats(st.state.at(0, 0)).k);
      if (st.kind == StepKind::AlignII) EXPECT_EQ(st.atoms.size(), 2u);
      if (st.kind == StepKind::Euclid) {
        EXPECT_LT(st.k11_after, st.k11_before);
        ++euclid;
      }
      prev = st.k11_after;
    }
  }
  EXPECT_GT(euclid, 100);
}

TEST(RandomWord, Deterministic) {
  std::mt19937_64 a(5), b(5);
  EXPECT_EQ(random_su3_word(a, 12), random_su3_word(b, 12));
  std::mt19937_64 c(5);
  SU3Word w = random_su3_word(c, 12);
  EXPECT_EQ(w.size(), 12u);
  for (const auto& g : w) EXPECT_NO_THROW(validate(g));
}
