#pragma once
// JSON encodings for scalars, matrices, words and the exported tables.
// Parsers throw std::invalid_argument on malformed input.

#include <json.hpp>

#include <string>

#include "twloop/loopalg.hpp"
#include "twloop/matrep.hpp"
#include "twloop/su3.hpp"

namespace twloop {

using json = nlohmann::json;

// "p/q" in lowest terms, or "p" for integers
std::string rat_to_string(const Rat& q);
// accepts "p" and "p/q" with an optional leading '-'; no decimals
Rat rat_from_string(const std::string& s);

json to_json(const Laurent& s);
Laurent laurent_from_json(const json& j);
json to_json(const MatS& m);
// entries may be Laurent objects or "p/q" strings for constants
MatS mat_from_json(const json& j);
json to_json(const AElt& chi);
AElt aelt_from_json(const json& j);

// "a1+2a2", "-alpha1-alpha2"
std::string root_string(const Vec& v, const std::string& letter);

json to_json(const FoldedSystem& fs, const GenAtom& a);
json to_json(const FoldedSystem& fs, const KMAtom& a);

json to_json(const SU3Atom& a);
SU3Atom su3_atom_from_json(const json& j);
json to_json(const SU3Word& w);
SU3Word su3_word_from_json(const json& j);
json to_json(const DecompTrace& t);

json fold_json(const FoldedSystem& fs);
json constants_json(const LoopAlgebra& alg);
json gcm_json(const LoopAlgebra& alg, const AffineGCM& g);

}  // namespace twloop
