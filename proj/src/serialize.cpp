#include "twloop/serialize.hpp"

#include <cstdlib>
#include <regex>
#include <stdexcept>

namespace twloop {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

Rat rat_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field \"") + key + "\" must be a rational string");
  return rat_from_string(v.get<std::string>());
}

// a Laurent object, or a rational string read as a constant in level r
Laurent scalar_from_json(const json& j, int r) {
  if (j.is_string()) return Laurent::constant(r, rat_from_string(j.get<std::string>()));
  Laurent s = laurent_from_json(j);
  if (s.r() != r) bad("Laurent level " + std::to_string(s.r()) + " where " + std::to_string(r) + " is expected");
  return s;
}

json coords(const Vec& v) { return json(v); }

}  // namespace

std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

Rat rat_from_string(const std::string& s) {
  static const std::regex re("-?[0-9]+(/[0-9]+)?");
  if (!std::regex_match(s, re)) bad("not an exact rational: \"" + s + "\"");
  auto slash = s.find('/');
  if (slash != std::string::npos && s.find_first_not_of('0', slash + 1) == std::string::npos)
    bad("zero denominator: \"" + s + "\"");
  Rat q(s, 10);
  q.canonicalize();
  return q;
}

json to_json(const Laurent& s) {
  json terms = json::array();
  for (const auto& [n, c] : s.terms())
    terms.push_back({{"n", n}, {"a", rat_to_string(c.a())}, {"b", rat_to_string(c.b())}});
  return {{"r", s.r()}, {"terms", terms}};
}

Laurent laurent_from_json(const json& j) {
  int r = int_field(j, "r");
  if (r < 1 || r > 3) bad("Laurent level must be 1, 2 or 3");
  const json& terms = field(j, "terms");
  if (!terms.is_array()) bad("\"terms\" must be an array");
  Laurent s(r);
  for (const json& t : terms) {
    int n = int_field(t, "n");
    Rat a = rat_field(t, "a");
    Rat b = t.contains("b") ? rat_field(t, "b") : Rat(0);
    if (r <= 2 && b != 0) bad("\"b\" must be \"0\" when r <= 2");
    s.add_term(n, Cyc(r, a, b));
  }
  return s;
}

json to_json(const MatS& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.dim(); ++k) row.push_back(to_json(m.at(i, k)));
    rows.push_back(row);
  }
  return {{"r", m.r()}, {"dim", m.dim()}, {"entries", rows}};
}

MatS mat_from_json(const json& j) {
  int r = int_field(j, "r");
  int n = int_field(j, "dim");
  if (r < 1 || r > 3) bad("matrix level must be 1, 2 or 3");
  if (n < 1) bad("matrix dimension must be positive");
  const json& rows = field(j, "entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) bad("\"entries\" must have dim rows");
  MatS m(r, n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n) bad("each row must have dim entries");
    for (int k = 0; k < n; ++k) m.at(i, k) = scalar_from_json(rows[i][k], r);
  }
  return m;
}

json to_json(const AElt& chi) { return {{"x1", to_json(chi.x1)}, {"x2", to_json(chi.x2)}}; }

AElt aelt_from_json(const json& j) {
  Laurent x1 = laurent_from_json(field(j, "x1"));
  return {x1, scalar_from_json(field(j, "x2"), x1.r())};
}

std::string root_string(const Vec& v, const std::string& letter) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    int c = v[i];
    if (c == 0) continue;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += letter + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

json to_json(const FoldedSystem& fs, const GenAtom& a) {
  bool twisted = a.kind == AtomKind::XT || a.kind == AtomKind::WT || a.kind == AtomKind::HT;
  json j = {{"kind", kind_name(a.kind)}, {"root", coords(twisted ? a.a : fs.rs().root(a.root))}};
  if (twisted && fs.at(a.a).type == RootType::R3) {
    if (a.kind == AtomKind::HT) j["payload"] = {{"zeta", to_json(a.chi)}, {"gamma", to_json(a.gamma)}};
    else j["payload"] = to_json(a.chi);
  } else {
    j["payload"] = to_json(a.s);
  }
  return j;
}

json to_json(const FoldedSystem&, const KMAtom& a) {
  return {{"kind", kind_name(a.kind)}, {"root", coords(a.root.a)}, {"n", a.root.n}, {"payload", rat_to_string(a.nu)}};
}

json to_json(const SU3Atom& a) {
  json j = {{"kind", su3_kind_name(a.kind)}, {"root", json::array({a.sign})}};
  if (a.kind == SU3Kind::XP || a.kind == SU3Kind::HP) j["payload"] = to_json(a.s);
  else j["payload"] = to_json(a.chi);
  return j;
}

SU3Atom su3_atom_from_json(const json& j) {
  const json& k = field(j, "kind");
  if (!k.is_string()) bad("\"kind\" must be a string");
  SU3Kind kind = su3_kind_from_name(k.get<std::string>());
  int sign = 1;
  if (j.contains("root")) {
    const json& root = j.at("root");
    if (!root.is_array() || root.size() != 1 || !root[0].is_number_integer()) bad("\"root\" must be [1] or [-1]");
    sign = root[0].get<int>();
  }
  if (sign != 1 && sign != -1) bad("\"root\" must be [1] or [-1]");
  if (sign == -1 && kind != SU3Kind::X && kind != SU3Kind::XP) bad("only x and x' atoms take the root -a1");
  const json& p = field(j, "payload");
  switch (kind) {
    case SU3Kind::X: return SU3Atom::x(sign, aelt_from_json(p));
    case SU3Kind::XP: return SU3Atom::xp(sign, scalar_from_json(p, 2));
    case SU3Kind::W: return SU3Atom::w(aelt_from_json(p));
    case SU3Kind::WP: return SU3Atom::wp(aelt_from_json(p));
    case SU3Kind::HP: return SU3Atom::hp(scalar_from_json(p, 2));
  }
  bad("unknown SU3 atom kind");
}

json to_json(const SU3Word& w) {
  json out = json::array();
  for (const auto& a : w) out.push_back(to_json(a));
  return out;
}

SU3Word su3_word_from_json(const json& j) {
  if (!j.is_array()) bad("a word must be a JSON array of atoms");
  SU3Word w;
  for (const json& a : j) w.push_back(su3_atom_from_json(a));
  return w;
}

json to_json(const DecompTrace& t) {
  json out = json::array();
  for (const auto& s : t)
    out.push_back({{"step", step_name(s.kind)},
                   {"atoms", to_json(s.atoms)},
                   {"k11_before", s.k11_before},
                   {"k11_after", s.k11_after},
                   {"state", to_json(s.state)}});
  return out;
}

json fold_json(const FoldedSystem& fs) {
  const RootSystem& R = fs.rs();
  auto untwisted = [&](int i) {
    return json{{"coords", coords(R.root(i))}, {"name", root_string(R.root(i), "alpha")}};
  };
  json sigma = json::array();
  for (int p : fs.aut().perm) sigma.push_back(p + 1);
  json roots = json::array();
  for (const auto& f : fs.roots()) {
    json pre = json::array();
    for (int i : f.preimage) pre.push_back(root_string(R.root(i), "alpha"));
    roots.push_back({{"coords", coords(f.coords)},
                     {"name", root_string(f.coords, "a")},
                     {"positive", f.positive},
                     {"type", type_name(f.type)},
                     {"length", length_name(f.length)},
                     {"in_delta_sigma", f.in_delta_sigma},
                     {"corr", untwisted(f.corr)},
                     {"orbit", pre}});
  }
  // pi(Delta_+) grouped by type, types in decreasing order as in the usual display
  json partition = json::array();
  for (RootType t : {RootType::R4, RootType::R3, RootType::R2, RootType::R1}) {
    json members = json::array();
    std::string length;
    for (const auto& f : fs.roots())
      if (f.positive && f.type == t) {
        members.push_back(root_string(f.coords, "a"));
        length = length_name(f.length);
      }
    if (!members.empty()) partition.push_back({{"type", type_name(t)}, {"length", length}, {"roots", members}});
  }
  return {{"case", R.label() + "^(" + std::to_string(fs.r()) + ")"},
          {"type", std::string(1, R.type())},
          {"rank", R.rank()},
          {"r", fs.r()},
          {"ell", fs.ell()},
          {"label", fs.label()},
          {"sigma", sigma},
          {"roots", roots},
          {"partition", partition}};
}

json constants_json(const LoopAlgebra& alg) {
  const RootSystem& R = alg.rs();
  const ChevTable& tbl = alg.tbl();
  bool omega = alg.fs().aut().has_omega();
  json roots = json::array(), n = json::array(), k = json::array(), kw = json::array();
  for (int i = 0; i < R.size(); ++i) {
    roots.push_back({{"index", i}, {"coords", coords(R.root(i))}, {"name", root_string(R.root(i), "alpha")}});
    k.push_back(tbl.k(i));
    if (omega) kw.push_back(tbl.k_omega(i));
  }
  for (int a = 0; a < R.size(); ++a)
    for (int b = 0; b < R.size(); ++b)
      if (R.sum_index(a, b) >= 0) n.push_back({{"alpha", a}, {"beta", b}, {"N", tbl.N(a, b)}});
  json out = {{"case", alg.label()}, {"roots", roots}, {"N", n}, {"k", k}};
  if (omega) out["k_omega"] = kw;
  return out;
}

json gcm_json(const LoopAlgebra& alg, const AffineGCM& g) {
  json d = json::array();
  for (const Rat& q : g.d) d.push_back(rat_to_string(q));
  return {{"case", alg.label()}, {"A", g.A}, {"d", d}, {"is_gcm", is_gcm(g.A)}, {"symmetrizable", g.symmetrizable}};
}

}  // namespace twloop
