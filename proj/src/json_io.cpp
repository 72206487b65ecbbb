#include "cox/json_io.hpp"

#include <numeric>
#include <sstream>

namespace cox {

json to_json(const CoxeterMatrix& m) {
  json orders = json::array();
  for (const auto& row : m.orders()) orders.push_back(row);
  return json{{"generators", m.generators()}, {"orders", orders}};
}

json word_json(const CoxeterMatrix& m, const Word& w) {
  json out = json::array();
  for (int c : w) out.push_back(m.label(c));
  return out;
}

Word parse_word_text(const CoxeterMatrix& m, const std::string& text) {
  Word out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "e" || tok == "1") continue;
    out.push_back(m.index_of(tok));
  }
  return out;
}

json to_json(const Classification& c) {
  json out{{"kind", kind_name(c.kind)}, {"family", c.family}};
  if (c.kind == Kind::Affine) out["dimension"] = c.euclidean_dimension;
  return out;
}

json to_json(const CoxeterMatrix& m, const FlatRankReport& r) {
  json witness = json::array();
  for (int i : r.witness) witness.push_back(m.label(i));
  json comps = json::array();
  for (const auto& part : r.contributions) {
    json labels = json::array();
    for (int i : part.component) labels.push_back(m.label(i));
    comps.push_back(json{{"component", labels},
                         {"classification", to_json(part.classification)},
                         {"contribution", part.contribution}});
  }
  return json{{"rank", r.rank}, {"witness", witness}, {"components", comps}};
}

json to_json(const Group& g, const Ball& b) {
  json elems = json::array();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Word& w = b.word(static_cast<int>(i));
    elems.push_back(json{{"word", word_json(g.matrix(), w)},
                         {"length", static_cast<int>(w.size())}});
  }
  return json{{"radius", b.radius()}, {"count", b.size()}, {"elements", elems}};
}

json to_json(const Group& g, const WallSet& ws) {
  json walls = json::array();
  for (const Wall& w : ws) walls.push_back(word_json(g.matrix(), w.reflection));
  return json{{"count", ws.size()}, {"walls", walls}};
}

json to_json(const Group& g, const HullResult& h) {
  json chambers = json::array();
  for (const Word& w : h.chambers) chambers.push_back(word_json(g.matrix(), w));
  return json{{"chambers", chambers},
              {"count", h.chambers.size()},
              {"ball_relative", h.ball_relative},
              {"radius", h.radius}};
}

json to_json(const Group& g, const SplitResult& s) {
  return json{{"z", word_json(g.matrix(), s.z)},
              {"M", to_json(g, s.m)},
              {"M_complement", to_json(g, s.mbar)}};
}

json to_json(const Group& g, const ReflectionSubgroup& s) {
  json gens = json::array();
  for (const Wall& w : s.canonical) gens.push_back(word_json(g.matrix(), w.reflection));
  return json{{"canonical_generators", gens},
              {"induced_matrix", to_json(s.induced)},
              {"certification",
               s.certification == Certification::Certified ? "certified" : "depth-exhausted"}};
}

json to_json(const Group& g, const ParabolicCoset& p) {
  json types = json::array();
  for (int t : p.types) types.push_back(g.matrix().label(t));
  return json{{"base", word_json(g.matrix(), p.base)},
              {"types", types},
              {"ball_relative", p.ball_relative}};
}

json to_json(const Group& g, const DichotomyReport& d) {
  json out{{"case", d.which == DichotomyReport::Case::Affine ? "ii" : "i"},
           {"flat_walls", to_json(g, d.walls)},
           {"verification", d.verification}};
  if (d.which == DichotomyReport::Case::CentralizedFamily) out["M"] = to_json(g, d.m);
  return out;
}

json to_json(const CoxeterMatrix& m, const ZnWitness& w) {
  json gens = json::array();
  for (const Word& g : w.generators) gens.push_back(word_json(m, g));
  json blocks = json::array();
  for (const auto& b : w.blocks) {
    json labels = json::array();
    for (int i : b.component) labels.push_back(m.label(i));
    json jb{{"component", labels}, {"certificate", b.certificate}};
    if (b.kind == WitnessBlock::Kind::AffineTranslations) {
      jb["kind"] = "affine-translations";
      // Exact field elements as integer quadruples (a, b, c, d) meaning
      // a + b*sqrt2 + c*sqrt3 + d*sqrt6, with a common denominator per row.
      json rows = json::array();
      for (const auto& r : b.translation_rows) {
        long long den = 1;
        for (const QF& q : r)
          for (const Rational* part : {&q.a, &q.b, &q.c, &q.d})
            den = std::lcm(den, denominator(*part));
        json row = json::array();
        for (const QF& q : r) {
          json quad = json::array();
          for (const Rational* part : {&q.a, &q.b, &q.c, &q.d})
            quad.push_back(numerator(*part) * (den / denominator(*part)));
          row.push_back(quad);
        }
        rows.push_back(json{{"denominator", den}, {"entries", row}});
      }
      jb["translation_matrix"] = rows;
    } else {
      jb["kind"] = "indefinite-element";
      json pair = json::array();
      for (const Word& p : b.pair_reflections) pair.push_back(word_json(m, p));
      jb["disjoint_wall_pair"] = pair;
    }
    blocks.push_back(std::move(jb));
  }
  return json{{"rank", w.rank},
              {"generators", gens},
              {"commutators_trivial", w.commutators_trivial},
              {"translation_rank_ok", w.translation_rank_ok},
              {"blocks", blocks}};
}

json to_json(const ChamberGraph& g, const AxiomReport& r) {
  json v = json::array();
  for (const auto& viol : r.violations) v.push_back(json{{"axiom", viol.axiom}, {"detail", viol.detail}});
  return json{{"samples", r.samples},
              {"violations", v},
              {"violation_count", r.violations.size()},
              {"chambers", g.size()}};
}

json address_json(const ChamberGraph& g, const Address& a) {
  json out = json::array();
  for (const auto& [s, d] : a) out.push_back(json::array({g.model().matrix.label(s), d}));
  return out;
}

Address parse_address_text(const ChamberGraph& g, const std::string& text) {
  Address out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "e" || tok == "1") continue;
    const auto colon = tok.find(':');
    std::string label = colon == std::string::npos ? tok : tok.substr(0, colon);
    int digit = colon == std::string::npos ? 1 : std::stoi(tok.substr(colon + 1));
    out.push_back({g.model().matrix.index_of(label), digit});
  }
  return g.canonical(std::move(out));
}

}  // namespace cox
