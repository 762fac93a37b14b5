#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "twloop/roots.hpp"

using namespace twloop;

namespace {

std::set<Vec> positive_set(const RootSystem& rs) {
  std::set<Vec> out;
  for (int i = 0; i < rs.num_pos(); ++i) out.insert(rs.root(i));
  return out;
}

// Folded roots of a given type among the positive part of pi(Delta).
std::set<Vec> folded_of(const FoldedSystem& fs, RootType t) {
  std::set<Vec> out;
  for (const auto& f : fs.roots())
    if (f.positive && f.type == t) out.insert(f.coords);
  return out;
}

struct CaseSpec {
  char type;
  int rank;
  int r;
};

const CaseSpec kTwisted[] = {{'A', 3, 2}, {'A', 4, 2}, {'A', 5, 2}, {'D', 4, 3}, {'D', 5, 2}, {'E', 6, 2}};

}  // namespace

TEST(RootSystem, A4PositiveRoots) {
  RootSystem rs('A', 4);
  std::set<Vec> want = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0},
                        {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 1, 1, 0}, {0, 1, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(positive_set(rs), want);
  EXPECT_EQ(rs.size(), 20);
}

TEST(RootSystem, D4PositiveRoots) {
  RootSystem rs('D', 4);
  std::set<Vec> want = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                        {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 0},
                        {0, 1, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}, {1, 2, 1, 1}};
  EXPECT_EQ(positive_set(rs), want);
  EXPECT_EQ(rs.size(), 24);
}

TEST(RootSystem, A1AndCounts) {
  RootSystem a1('A', 1);
  ASSERT_EQ(a1.size(), 2);
  EXPECT_EQ(a1.root(0), Vec{1});
  EXPECT_EQ(a1.root(a1.neg(0)), Vec{-1});
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(RootSystem('A', n).size(), n * (n + 1));
  for (int n = 4; n <= 6; ++n) EXPECT_EQ(RootSystem('D', n).size(), 2 * n * (n - 1));
  EXPECT_EQ(RootSystem('E', 6).size(), 72);
}

TEST(RootSystem, UnsupportedTypesThrow) {
  EXPECT_THROW(RootSystem('B', 2), std::invalid_argument);
  EXPECT_THROW(RootSystem('D', 3), std::invalid_argument);
  EXPECT_THROW(RootSystem('E', 7), std::invalid_argument);
  EXPECT_THROW(RootSystem('A', 0), std::invalid_argument);
}

TEST(RootSystem, CartanConvention) {
  RootSystem rs('E', 6);
  // chain 1-2-3-5-6 with 4 attached to 3
  EXPECT_EQ(rs.cartan()[0][1], -1);
  EXPECT_EQ(rs.cartan()[2][3], -1);
  EXPECT_EQ(rs.cartan()[2][4], -1);
  EXPECT_EQ(rs.cartan()[3][4], 0);
  EXPECT_EQ(rs.highest_root(), (Vec{1, 2, 3, 2, 2, 1}));
}

TEST(RootSystem, ReflectionAndPairing) {
  RootSystem a1('A', 1);
  EXPECT_EQ(a1.reflect({1}, {1}), Vec{-1});
  RootSystem a2('A', 2);
  EXPECT_EQ(a2.reflect({1, 0}, {0, 1}), (Vec{1, 1}));
  EXPECT_EQ(a2.pairing({0, 1}, {1, 0}), -1);
  EXPECT_EQ(a2.pairing({1, 1}, {1, 1}), 2);
}

TEST(RootSystem, CorootDecomposition) {
  RootSystem a2('A', 2);
  EXPECT_EQ(a2.coroot({1, 0}), (Vec{1, 0}));
  EXPECT_EQ(a2.coroot({1, 1}), (Vec{1, 1}));
  EXPECT_EQ(a2.coroot({-1, -1}), (Vec{-1, -1}));
}

TEST(DiagramAut, ListedCases) {
  RootSystem a4('A', 4);
  DiagramAut s = diagram_aut(a4, 2);
  EXPECT_EQ(s.perm, (std::vector<int>{3, 2, 1, 0}));
  EXPECT_FALSE(s.has_omega());

  RootSystem d4('D', 4);
  DiagramAut t = diagram_aut(d4, 3);
  EXPECT_EQ(t.perm, (std::vector<int>{2, 1, 3, 0}));
  ASSERT_TRUE(t.has_omega());
  EXPECT_EQ(t.omega, (std::vector<int>{0, 1, 3, 2}));

  RootSystem e6('E', 6);
  EXPECT_EQ(diagram_aut(e6, 1).perm, (std::vector<int>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(diagram_aut(e6, 2).perm, (std::vector<int>{5, 4, 2, 3, 1, 0}));
}

TEST(DiagramAut, MissingAutomorphismThrows) {
  EXPECT_THROW(diagram_aut(RootSystem('A', 4), 3), std::invalid_argument);
  EXPECT_THROW(diagram_aut(RootSystem('E', 6), 3), std::invalid_argument);
  EXPECT_THROW(diagram_aut(RootSystem('D', 5), 3), std::invalid_argument);
  EXPECT_THROW(diagram_aut(RootSystem('A', 1), 2), std::invalid_argument);
}

TEST(DiagramAut, OmegaRelations) {
  RootSystem d4('D', 4);
  DiagramAut t = diagram_aut(d4, 3);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(t.omega[t.omega[i]], i);
    EXPECT_EQ(t.omega[t.perm[t.omega[i]]], t.perm[t.perm[i]]);
  }
}

TEST(Fold, A4Example) {
  FoldedSystem fs(RootSystem('A', 4), 2);
  EXPECT_EQ(fs.ell(), 2);
  EXPECT_EQ(fs.label(), "B2");
  EXPECT_EQ(folded_of(fs, RootType::R3), (std::set<Vec>{{0, 1}, {1, 1}}));
  EXPECT_EQ(folded_of(fs, RootType::R2), (std::set<Vec>{{1, 0}, {1, 2}}));
  EXPECT_EQ(folded_of(fs, RootType::R1), (std::set<Vec>{{0, 2}, {2, 2}}));
  for (const auto& f : fs.roots()) {
    RootLength want = f.type == RootType::R3   ? RootLength::Short
                      : f.type == RootType::R2 ? RootLength::Long
                                               : RootLength::ExtraLong;
    EXPECT_EQ(f.length, want);
    EXPECT_EQ(f.in_delta_sigma, f.type != RootType::R1);
  }
  EXPECT_EQ(fs.project({1, 0, 0, 0}), (Vec{1, 0}));
  EXPECT_EQ(fs.project({0, 1, 1, 0}), (Vec{0, 2}));
}

TEST(Fold, D4TrialityExample) {
  FoldedSystem fs(RootSystem('D', 4), 3);
  EXPECT_EQ(fs.label(), "G2");
  EXPECT_EQ(fs.orbits(), (std::vector<std::vector<int>>{{1}, {0, 2, 3}}));
  EXPECT_EQ(folded_of(fs, RootType::R4), (std::set<Vec>{{0, 1}, {1, 1}, {1, 2}}));
  EXPECT_EQ(folded_of(fs, RootType::R1), (std::set<Vec>{{1, 0}, {1, 3}, {2, 3}}));
  for (const auto& f : fs.roots()) {
    EXPECT_TRUE(f.in_delta_sigma);
    EXPECT_EQ(f.length, f.type == RootType::R4 ? RootLength::Short : RootLength::Long);
  }
}

TEST(Fold, TrialityLexChains) {
  FoldedSystem fs(RootSystem('D', 4), 3);
  const RootSystem& rs = fs.rs();
  std::set<Vec> increasing, other;
  for (int i = 0; i < rs.num_pos(); ++i) {
    const Vec& a = rs.root(i);
    const Vec& s = rs.root(fs.sigma_root(i));
    const Vec& s2 = rs.root(fs.sigma_root(fs.sigma_root(i)));
    if (!lex_less(s, a) && !lex_less(s2, s)) increasing.insert(a);
    if (lex_less(a, s2) && lex_less(s2, s)) other.insert(a);
  }
  EXPECT_EQ(increasing, (std::set<Vec>{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 0, 0}, {1, 1, 1, 1}, {1, 2, 1, 1}}));
  EXPECT_EQ(other, (std::set<Vec>{{1, 1, 1, 0}}));
}

TEST(Fold, TrivialAutomorphism) {
  FoldedSystem fs(RootSystem('A', 3), 1);
  EXPECT_EQ(fs.label(), "A3");
  EXPECT_EQ(static_cast<int>(fs.roots().size()), 12);
  for (const auto& f : fs.roots()) {
    EXPECT_EQ(f.type, RootType::R1);
    EXPECT_TRUE(f.in_delta_sigma);
  }
}

TEST(Fold, FoldedLabels) {
  EXPECT_EQ(FoldedSystem(RootSystem('A', 3), 2).label(), "C2");
  EXPECT_EQ(FoldedSystem(RootSystem('A', 5), 2).label(), "C3");
  EXPECT_EQ(FoldedSystem(RootSystem('A', 2), 2).label(), "B1");
  EXPECT_EQ(FoldedSystem(RootSystem('D', 5), 2).label(), "B4");
  EXPECT_EQ(FoldedSystem(RootSystem('E', 6), 2).label(), "F4");
}

TEST(Correspondent, A4Table) {
  FoldedSystem fs(RootSystem('A', 4), 2);
  const RootSystem& rs = fs.rs();
  std::vector<std::pair<Vec, Vec>> table = {
      {{0, 1}, {0, 1, 0, 0}},     {{1, 1}, {1, 1, 0, 0}},       {{1, 0}, {1, 0, 0, 0}},
      {{1, 2}, {1, 1, 1, 0}},     {{0, 2}, {0, 1, 1, 0}},       {{2, 2}, {1, 1, 1, 1}},
      {{0, -1}, {0, 0, -1, 0}},   {{-1, -1}, {0, 0, -1, -1}},   {{-1, 0}, {0, 0, 0, -1}},
      {{-1, -2}, {0, -1, -1, -1}}, {{0, -2}, {0, -1, -1, 0}},   {{-2, -2}, {-1, -1, -1, -1}}};
  for (const auto& [a, alpha] : table) EXPECT_EQ(rs.root(fs.correspondent(a)), alpha);
}

TEST(Correspondent, D4Table) {
  FoldedSystem fs(RootSystem('D', 4), 3);
  const RootSystem& rs = fs.rs();
  std::vector<std::pair<Vec, Vec>> table = {
      {{0, 1}, {1, 0, 0, 0}},   {{1, 1}, {1, 1, 0, 0}},   {{1, 2}, {0, 1, 1, 1}},
      {{0, -1}, {-1, 0, 0, 0}}, {{-1, -1}, {-1, -1, 0, 0}}, {{-1, -2}, {0, -1, -1, -1}}};
  for (const auto& [a, alpha] : table) EXPECT_EQ(rs.root(fs.correspondent(a)), alpha);
}

TEST(Correspondent, TrivialAndErrors) {
  FoldedSystem fs(RootSystem('A', 2), 1);
  EXPECT_EQ(fs.rs().root(fs.correspondent({1, 1})), (Vec{1, 1}));
  FoldedSystem a4(RootSystem('A', 4), 2);
  EXPECT_THROW(a4.correspondent({3, 0}), std::invalid_argument);
  EXPECT_THROW(a4.correspondent({1}), std::invalid_argument);
}

TEST(Correspondent, ProjectionAndNegation) {
  for (auto c : kTwisted) {
    FoldedSystem fs(RootSystem(c.type, c.rank), c.r);
    const RootSystem& rs = fs.rs();
    for (const auto& f : fs.roots()) {
      int alpha = fs.correspondent(f.coords);
      EXPECT_EQ(fs.project(rs.root(alpha)), f.coords);
      if (c.r == 2) {
        Vec neg = f.coords;
        for (auto& x : neg) x = -x;
        EXPECT_EQ(fs.correspondent(neg), rs.neg(fs.sigma_root(alpha)));
      }
    }
  }
}

TEST(Fold, ClassificationTable) {
  for (auto c : kTwisted) {
    FoldedSystem fs(RootSystem(c.type, c.rank), c.r);
    bool a_even = c.type == 'A' && c.rank % 2 == 0;
    std::set<RootType> seen;
    for (const auto& f : fs.roots()) {
      seen.insert(f.type);
      RootLength want;
      if (a_even) {
        want = f.type == RootType::R1   ? RootLength::ExtraLong
               : f.type == RootType::R2 ? RootLength::Long
                                        : RootLength::Short;
        EXPECT_NE(f.type, RootType::R4);
      } else if (c.r == 3) {
        want = f.type == RootType::R1 ? RootLength::Long : RootLength::Short;
        EXPECT_TRUE(f.type == RootType::R1 || f.type == RootType::R4);
      } else {
        want = f.type == RootType::R1 ? RootLength::Long : RootLength::Short;
        EXPECT_TRUE(f.type == RootType::R1 || f.type == RootType::R2);
      }
      EXPECT_EQ(f.length, want) << c.type << c.rank;
    }
    EXPECT_EQ(seen.size(), a_even ? 3u : 2u);
  }
  FoldedSystem a2(RootSystem('A', 2), 2);
  for (const auto& f : a2.roots()) EXPECT_NE(f.type, RootType::R2);
}

TEST(Fold, EllMatchesOrbits) {
  for (auto c : kTwisted) {
    FoldedSystem fs(RootSystem(c.type, c.rank), c.r);
    EXPECT_EQ(static_cast<int>(fs.orbits().size()), fs.ell());
    int simple = 0;
    for (const auto& f : fs.roots()) {
      int h = 0;
      for (int x : f.coords) h += x;
      if (h == 1 && f.in_delta_sigma) ++simple;
    }
    EXPECT_EQ(simple, fs.ell());
  }
}

TEST(Chevalley, SignRule) {
  for (auto c : kTwisted) {
    FoldedSystem fs(RootSystem(c.type, c.rank), c.r);
    ChevTable tbl(fs);
    const RootSystem& rs = fs.rs();
    for (int a = 0; a < rs.size(); ++a) {
      bool is_sum = false;
      for (int b = 0; b < rs.size(); ++b)
        if (rs.sum_index(b, fs.sigma_root(b)) == a) is_sum = true;
      EXPECT_EQ(tbl.k(a), is_sum ? -1 : 1) << c.type << c.rank << " root " << a;
      EXPECT_EQ(tbl.k(a), tbl.k(fs.sigma_root(a)));
    }
  }
}

TEST(Chevalley, A4MiddleSign) {
  FoldedSystem fs(RootSystem('A', 4), 2);
  ChevTable tbl(fs);
  EXPECT_EQ(tbl.k(fs.rs().index({0, 1, 1, 0})), -1);
  // theta = (alpha1 + alpha2) + sigma(alpha1 + alpha2)
  EXPECT_EQ(tbl.k(fs.rs().index({1, 1, 1, 1})), -1);
  EXPECT_EQ(tbl.k(fs.rs().index({1, 1, 0, 0})), 1);
}

TEST(Chevalley, TrialitySignsTrivial) {
  FoldedSystem fs(RootSystem('D', 4), 3);
  ChevTable tbl(fs);
  for (int a = 0; a < fs.rs().size(); ++a) {
    EXPECT_EQ(tbl.k(a), 1);
    EXPECT_EQ(tbl.k_omega(a), 1);
  }
}

TEST(Chevalley, SignIdentitiesHold) {
  for (auto c : kTwisted) {
    FoldedSystem fs(RootSystem(c.type, c.rank), c.r);
    ChevTable tbl(fs);
    auto fails = verify_sign_identities(fs, tbl);
    EXPECT_TRUE(fails.empty()) << c.type << c.rank << ": " << (fails.empty() ? "" : fails.front());
  }
  FoldedSystem triv(RootSystem('A', 3), 1);
  EXPECT_TRUE(verify_sign_identities(triv, ChevTable(triv)).empty());
}

TEST(Chevalley, UnitStructureConstants) {
  for (auto c : kTwisted) {
    FoldedSystem fs(RootSystem(c.type, c.rank), c.r);
    ChevTable tbl(fs);
    const RootSystem& rs = fs.rs();
    for (int a = 0; a < rs.size(); ++a)
      for (int b = 0; b < rs.size(); ++b) {
        if (rs.sum_index(a, b) < 0) {
          EXPECT_EQ(tbl.N(a, b), 0);
          continue;
        }
        EXPECT_EQ(std::abs(tbl.N(a, b)), 1);
        EXPECT_EQ(tbl.N(a, b), -tbl.N(b, a));
        EXPECT_EQ(tbl.N(rs.neg(a), rs.neg(b)), -tbl.N(a, b));
      }
  }
}

TEST(Chevalley, ExtraspecialPairsPositiveBeforeAdjustment) {
  FoldedSystem fs(RootSystem('D', 5), 1);
  ChevTable tbl(fs);
  const RootSystem& rs = fs.rs();
  for (int x = 0; x < rs.num_pos(); ++x) {
    for (int a = 0; a < x; ++a) {
      int b = rs.index(vsub(rs.root(x), rs.root(a)));
      if (b >= 0 && b < rs.num_pos()) {
        EXPECT_GT(tbl.N(a, b), 0);
        break;
      }
    }
  }
}

TEST(Chevalley, JacobiIdentity) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 4}, {'D', 4}}) {
    FoldedSystem fs(RootSystem(t, n), 1);
    ChevTable tbl(fs);
    int dim = fs.rs().size() + fs.rs().rank();
    auto br = [&](const std::map<int, long>& x, int y) {
      std::map<int, long> out;
      for (auto [i, c] : x)
        for (auto [j, d] : lie_bracket(fs.rs(), tbl, i, y)) out[j] += c * d;
      return out;
    };
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b)
        for (int c = 0; c < dim; ++c) {
          std::map<int, long> total;
          for (auto [x, y, z] : {std::tuple{a, b, c}, {b, c, a}, {c, a, b}}) {
            std::map<int, long> xy;
            for (auto [j, d] : lie_bracket(fs.rs(), tbl, x, y)) xy[j] += d;
            for (auto [j, d] : br(xy, z)) total[j] += d;
          }
          for (auto [j, d] : total) ASSERT_EQ(d, 0) << t << n << " " << a << "," << b << "," << c;
        }
  }
}

TEST(Chevalley, OppositeBracketIsCoroot) {
  FoldedSystem fs(RootSystem('A', 4), 2);
  ChevTable tbl(fs);
  const RootSystem& rs = fs.rs();
  for (int a = 0; a < rs.size(); ++a) {
    std::map<int, long> want;
    Vec h = rs.coroot(rs.root(a));
    for (int i = 0; i < rs.rank(); ++i)
      if (h[i]) want[rs.size() + i] = h[i];
    std::map<int, long> got;
    for (auto [j, d] : lie_bracket(rs, tbl, a, rs.neg(a))) got[j] += d;
    EXPECT_EQ(got, want);
  }
}

TEST(HighestA0, TableRows) {
  {
    FoldedSystem fs(RootSystem('D', 4), 3);
    auto h = highest_a0(fs);
    EXPECT_EQ(h.minus_a0, (Vec{1, 2}));
    EXPECT_EQ(fs.rs().root(h.alpha), (Vec{1, 1, 1, 0}));
    EXPECT_EQ(h.type, RootType::R4);
  }
  {
    FoldedSystem fs(RootSystem('A', 4), 2);
    auto h = highest_a0(fs);
    EXPECT_EQ(h.minus_a0, (Vec{2, 2}));
    EXPECT_EQ(fs.rs().root(h.alpha), (Vec{1, 1, 1, 1}));
    EXPECT_EQ(h.type, RootType::R1);
  }
  {
    FoldedSystem fs(RootSystem('E', 6), 2);
    auto h = highest_a0(fs);
    EXPECT_EQ(h.minus_a0, (Vec{2, 3, 2, 1}));
    EXPECT_EQ(fs.rs().root(h.alpha), (Vec{1, 2, 2, 1, 1, 1}));
    EXPECT_EQ(h.type, RootType::R2);
  }
  {
    FoldedSystem fs(RootSystem('A', 5), 2);
    auto h = highest_a0(fs);
    EXPECT_EQ(h.minus_a0, (Vec{1, 2, 1}));
    EXPECT_EQ(fs.rs().root(h.alpha), (Vec{1, 1, 1, 1, 0}));
    EXPECT_EQ(h.type, RootType::R2);
  }
  {
    FoldedSystem fs(RootSystem('D', 5), 2);
    auto h = highest_a0(fs);
    EXPECT_EQ(h.minus_a0, (Vec{1, 1, 1, 1}));
    EXPECT_EQ(fs.rs().root(h.alpha), (Vec{1, 1, 1, 1, 0}));
    EXPECT_EQ(h.type, RootType::R2);
  }
  {
    FoldedSystem fs(RootSystem('A', 3), 1);
    auto h = highest_a0(fs);
    EXPECT_EQ(h.minus_a0, (Vec{1, 1, 1}));
    EXPECT_EQ(h.type, RootType::R1);
  }
}

TEST(Fold, FoldedInnerProduct) {
  FoldedSystem a4(RootSystem('A', 4), 2);
  EXPECT_EQ(a4.inner({0, 2}, {0, 2}), Rat(2));
  EXPECT_EQ(a4.inner({1, 0}, {1, 0}), Rat(1));
  EXPECT_EQ(a4.inner({0, 1}, {0, 1}), Rat(1, 2));
  FoldedSystem d4(RootSystem('D', 4), 3);
  EXPECT_EQ(d4.inner({0, 1}, {0, 1}), Rat(2, 3));
  EXPECT_EQ(d4.inner({1, 0}, {1, 0}), Rat(2));
}
