#pragma once

#include <json.hpp>

#include "cox/ball.hpp"
#include "cox/building.hpp"
#include "cox/classify.hpp"
#include "cox/flat_rank.hpp"
#include "cox/flats.hpp"
#include "cox/hull.hpp"
#include "cox/subgroup.hpp"

namespace cox {

using json = nlohmann::json;

json to_json(const CoxeterMatrix& m);
json word_json(const CoxeterMatrix& m, const Word& w);
Word parse_word_text(const CoxeterMatrix& m, const std::string& text);

json to_json(const Classification& c);
json to_json(const CoxeterMatrix& m, const FlatRankReport& r);
json to_json(const Group& g, const Ball& b);
json to_json(const Group& g, const WallSet& ws);
json to_json(const Group& g, const HullResult& h);
json to_json(const Group& g, const SplitResult& s);
json to_json(const Group& g, const ReflectionSubgroup& s);
json to_json(const Group& g, const ParabolicCoset& p);
json to_json(const Group& g, const DichotomyReport& d);
json to_json(const CoxeterMatrix& m, const ZnWitness& w);
json to_json(const ChamberGraph& g, const AxiomReport& r);
json address_json(const ChamberGraph& g, const Address& a);
Address parse_address_text(const ChamberGraph& g, const std::string& text);

}  // namespace cox
