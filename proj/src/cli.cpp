#include "cox/cli.hpp"

#include <fstream>
#include <iostream>
#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "cox/json_io.hpp"
#include "cox/tits.hpp"

namespace cox {

namespace {

struct MatrixOpts {
  std::string inline_json;
  std::string file;

  CoxeterMatrix load() const {
    if (!inline_json.empty()) return parse_matrix(inline_json);
    if (file.empty()) throw validation_error("no matrix given: use --matrix or --matrix-file");
    std::ifstream in(file);
    if (!in) throw validation_error("cannot open matrix file '" + file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
  }
};

void add_matrix_opts(CLI::App* cmd, MatrixOpts& m) {
  cmd->add_option("--matrix", m.inline_json, "Coxeter matrix as inline JSON");
  cmd->add_option("--matrix-file", m.file, "path to a Coxeter matrix JSON document");
}

std::vector<int> parse_subset(const CoxeterMatrix& m, const std::string& csv) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(csv);
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(m.index_of(tok));
  }
  return out;
}

std::vector<std::string> split_list(const std::string& text, char sep = ';') {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, sep)) out.push_back(tok);
  return out;
}

std::vector<int> parse_thickness(const CoxeterMatrix& m, const std::string& csv) {
  if (csv.empty()) return std::vector<int>(m.rank(), 1);
  std::vector<int> out;
  std::string tok;
  std::istringstream is(csv);
  while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
  if (static_cast<int>(out.size()) == 1) return std::vector<int>(m.rank(), out[0]);
  if (static_cast<int>(out.size()) != m.rank())
    throw validation_error("thickness needs one entry per generator (or a single value)");
  return out;
}

std::vector<Wall> parse_reflections(const Group& g, const std::string& list) {
  std::vector<Wall> out;
  for (const std::string& text : split_list(list))
    out.push_back(wall_of_reflection(g, parse_word_text(g.matrix(), text)));
  if (out.empty()) throw validation_error("empty reflection list");
  return out;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"walls, flats and buildings of Coxeter groups"};
  app.require_subcommand(1);

  MatrixOpts mopts;
  std::string subset_csv, base_text, u_text, v_text, x_text, y_text;
  std::string chambers_list, walls_list, assign_list, thickness_csv;
  std::string anchor_text, types_csv, c0_text, output = "json";
  int radius = 4, window = 6, depth = kDefaultSubgroupDepth, samples = 500;
  std::uint64_t seed = 20240101;
  std::size_t cap = kDefaultBallCap;

  auto add_common = [&](CLI::App* cmd) {
    add_matrix_opts(cmd, mopts);
    cmd->add_option("--seed", seed, "seed for randomized checks");
    cmd->add_option("--output", output, "output format: json | dot | text");
  };

  auto* c_classify = app.add_subcommand("classify", "diagram components and their types");
  add_common(c_classify);
  c_classify->add_option("--T", subset_csv, "generator subset, comma separated");

  auto* c_rank = app.add_subcommand("rank", "flat rank by the diagram formula");
  add_common(c_rank);

  auto* c_hyp = app.add_subcommand("hyperbolic", "no-Z^2 test via the flat rank");
  add_common(c_hyp);

  auto* c_ball = app.add_subcommand("ball", "Cayley ball enumeration");
  add_common(c_ball);
  c_ball->add_option("--radius", radius, "ball radius");
  c_ball->add_option("--cap", cap, "element cap");

  auto* c_dist = app.add_subcommand("distance", "gallery distance and Weyl distance");
  add_common(c_dist);
  c_dist->add_option("--u", u_text, "first chamber, a word like 's t s'");
  c_dist->add_option("--v", v_text, "second chamber");

  auto* c_walls = app.add_subcommand("walls", "walls separating two chambers");
  add_common(c_walls);
  c_walls->add_option("--u", u_text, "first chamber");
  c_walls->add_option("--v", v_text, "second chamber");

  auto* c_hull = app.add_subcommand("hull", "combinatorial convex hull within a ball");
  add_common(c_hull);
  c_hull->add_option("--chambers", chambers_list, "chambers, ';' separated words");
  c_hull->add_option("--radius", radius, "ball radius");

  auto* c_split = app.add_subcommand("split", "convexity splitting along a wall subset");
  add_common(c_split);
  c_split->add_option("--x", u_text, "chamber x");
  c_split->add_option("--y", v_text, "chamber y");
  c_split->add_option("--M", walls_list, "reflection words of the subset M, ';' separated");

  auto* c_sub = app.add_subcommand("subgroup", "reflection subgroup with canonical generators");
  add_common(c_sub);
  c_sub->add_option("--reflections", walls_list, "reflection words, ';' separated");
  c_sub->add_option("--depth", depth, "verification depth bound");

  auto* c_tri = app.add_subcommand("triangle", "Euclidean triangle subgroup test");
  add_common(c_tri);
  c_tri->add_option("--reflections", walls_list, "reflection words, ';' separated");
  c_tri->add_option("--depth", depth, "verification depth bound");

  auto* c_clo = app.add_subcommand("closure", "parabolic closure by ball search");
  add_common(c_clo);
  c_clo->add_option("--reflections", walls_list, "reflection words, ';' separated");
  c_clo->add_option("--radius", radius, "search ball radius");

  auto* c_flat = app.add_subcommand("flat", "wall dichotomy of a standard flat");
  add_common(c_flat);
  c_flat->add_option("--T", subset_csv, "affine type set, comma separated");
  c_flat->add_option("--base", base_text, "coset representative word");
  c_flat->add_option("--window", window, "wall window depth");

  auto* c_wit = app.add_subcommand("witness", "free abelian witness of the flat rank");
  add_common(c_wit);
  c_wit->add_option("--T", subset_csv, "affine type set (default: flat-rank witness subset)");
  c_wit->add_option("--base", base_text, "coset representative word");

  auto* c_bch = app.add_subcommand("building-check", "building axioms Bu1-Bu3 on random triples");
  add_common(c_bch);
  c_bch->add_option("--thickness", thickness_csv, "q_s per generator, comma separated");
  c_bch->add_option("--samples", samples, "number of sampled triples");
  c_bch->add_option("--radius", radius, "sampling radius");

  auto* c_bpr = app.add_subcommand("building-project", "gate of a spherical residue");
  add_common(c_bpr);
  c_bpr->add_option("--thickness", thickness_csv, "q_s per generator");
  c_bpr->add_option("--anchor", anchor_text, "residue anchor address, e.g. 's:1 t:2'");
  c_bpr->add_option("--types", types_csv, "residue types, comma separated");
  c_bpr->add_option("--x", x_text, "chamber to project");
  c_bpr->add_option("--radius", radius, "materialization radius");

  auto* c_bap = app.add_subcommand("building-apartment", "extend a partial map to an apartment");
  add_common(c_bap);
  c_bap->add_option("--thickness", thickness_csv, "q_s per generator");
  c_bap->add_option("--chambers", chambers_list, "addresses, ';' separated");
  c_bap->add_option("--assign", assign_list, "image words in W, ';' separated");
  c_bap->add_option("--radius", radius, "apartment materialization radius");

  auto* c_bfl = app.add_subcommand("building-flat", "projection set of a standard flat");
  add_common(c_bfl);
  c_bfl->add_option("--thickness", thickness_csv, "q_s per generator");
  c_bfl->add_option("--T", subset_csv, "affine type set of the flat");
  c_bfl->add_option("--base", base_text, "coset representative word");
  c_bfl->add_option("--c0", c0_text, "projecting chamber address");
  c_bfl->add_option("--window", window, "flat window");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const std::string op = app.get_subcommands().front()->get_name();
  try {
    if (output != "json" && output != "dot" && output != "text")
      throw validation_error("unknown output format '" + output + "'");
    if (output == "dot" && op != "ball" && op != "hull")
      throw validation_error("--output dot is only valid for ball and hull");

    const CoxeterMatrix matrix = mopts.load();

    if (op == "classify") {
      const auto subset = subset_csv.empty() ? all_generators(matrix)
                                             : parse_subset(matrix, subset_csv);
      json comps = json::array();
      for (const auto& comp : components(matrix, subset)) {
        json labels = json::array();
        for (int i : comp) labels.push_back(matrix.label(i));
        comps.push_back(json{{"component", labels},
                             {"classification", to_json(classify(matrix, comp))}});
      }
      emit(out, json{{"components", comps}});
      err << op << ": " << comps.size() << " component(s)\n";
      return 0;
    }
    if (op == "rank") {
      const FlatRankReport r = flat_rank(matrix);
      emit(out, to_json(matrix, r));
      err << op << ": flat rank " << r.rank << "\n";
      return 0;
    }
    if (op == "hyperbolic") {
      const FlatRankReport r = flat_rank(matrix);
      emit(out, json{{"hyperbolic", r.rank <= 1}, {"flat_rank", r.rank}});
      err << op << ": " << (r.rank <= 1 ? "true" : "false") << "\n";
      return 0;
    }

    // Operations available on every matrix; labels outside {2,3,4,6,inf}
    // run on the interval backend and are flagged uncertified.
    if (op == "witness" && subset_csv.empty()) {
      const ZnWitness w = rank_witness(matrix);
      emit(out, to_json(matrix, w));
      err << op << ": rank " << w.rank << ", commutators "
          << (w.commutators_trivial ? "trivial" : "NONTRIVIAL") << "\n";
      return 0;
    }
    if (!matrix.exact_field() && (op == "ball" || op == "distance")) {
      if (op == "ball") {
        const auto words = enumerate_ball_uncertified(matrix, radius, cap);
        json elems = json::array();
        for (const Word& w : words)
          elems.push_back(json{{"word", word_json(matrix, w)},
                               {"length", static_cast<int>(w.size())}});
        emit(out, json{{"radius", radius}, {"count", words.size()},
                       {"elements", elems}, {"certified", false}});
      } else {
        Word w(parse_word_text(matrix, u_text));
        std::reverse(w.begin(), w.end());
        const Word v = parse_word_text(matrix, v_text);
        w.insert(w.end(), v.begin(), v.end());
        const Word delta = normal_form_uncertified(matrix, w);
        emit(out, json{{"distance", delta.size()}, {"delta", word_json(matrix, delta)},
                       {"certified", false}});
      }
      err << op << ": uncertified (labels outside the exact field)\n";
      return 0;
    }

    const Group g(matrix);

    if (op == "ball") {
      const Ball b(g, radius, cap);
      if (output == "dot") {
        out << b.to_dot();
      } else {
        emit(out, to_json(g, b));
      }
      err << op << ": " << b.size() << " elements within radius " << radius << "\n";
      return 0;
    }
    if (op == "distance") {
      const Word u = parse_word_text(matrix, u_text), v = parse_word_text(matrix, v_text);
      const Word delta = g.mul(g.inv(u), v);
      emit(out, json{{"distance", delta.size()}, {"delta", word_json(matrix, delta)}});
      err << op << ": " << delta.size() << "\n";
      return 0;
    }
    if (op == "walls") {
      const Word u = parse_word_text(matrix, u_text), v = parse_word_text(matrix, v_text);
      emit(out, to_json(g, separating_walls(g, u, v)));
      return 0;
    }
    if (op == "hull") {
      std::vector<Word> chambers;
      for (const auto& text : split_list(chambers_list))
        chambers.push_back(g.nf(parse_word_text(matrix, text)));
      const Ball b(g, radius, cap);
      const HullResult h = convex_hull(g, chambers, b);
      if (output == "dot") {
        // Hull as an induced subgraph of the Cayley ball.
        std::ostringstream os;
        os << "graph hull {\n";
        for (const auto& w : h.chambers) os << "  \"" << g.str(w) << "\";\n";
        for (const auto& w : h.chambers)
          for (int s = 0; s < g.rank(); ++s) {
            const Word n = g.mul(w, Word{s});
            if (shortlex_less(w, n) &&
                std::binary_search(h.chambers.begin(), h.chambers.end(), n, shortlex_less))
              os << "  \"" << g.str(w) << "\" -- \"" << g.str(n) << "\" [label=\""
                 << matrix.label(s) << "\"];\n";
          }
        os << "}\n";
        out << os.str();
      } else {
        emit(out, to_json(g, h));
      }
      err << op << ": " << h.chambers.size() << " chambers (ball-relative)\n";
      return 0;
    }
    if (op == "split") {
      const Word x = parse_word_text(matrix, u_text), y = parse_word_text(matrix, v_text);
      WallSet m;
      for (const Wall& w : parse_reflections(g, walls_list)) m.insert(w);
      emit(out, to_json(g, split_convex(g, x, y, m)));
      return 0;
    }
    if (op == "subgroup" || op == "triangle") {
      WallSet m;
      for (const Wall& w : parse_reflections(g, walls_list)) m.insert(w);
      const ReflectionSubgroup sub = reflection_subgroup(g, m, depth);
      if (op == "subgroup") {
        emit(out, to_json(g, sub));
      } else {
        const EuclideanTriangle t = is_euclidean_triangle(sub);
        emit(out, json{{"euclidean_triangle", t.is_triangle},
                       {"type", t.is_triangle ? json(t.type) : json()}});
      }
      return 0;
    }
    if (op == "closure") {
      const auto refl = parse_reflections(g, walls_list);
      const Ball b(g, radius, cap);
      emit(out, to_json(g, parabolic_closure(g, refl, b)));
      return 0;
    }
    if (op == "flat") {
      const StandardFlat f = make_standard_flat(g, parse_word_text(matrix, base_text),
                                                parse_subset(matrix, subset_csv));
      emit(out, to_json(g, dichotomy(g, f, window)));
      return 0;
    }
    if (op == "witness") {
      ZnWitness w;
      if (subset_csv.empty()) {
        w = rank_witness(matrix);
      } else {
        const StandardFlat f = make_standard_flat(g, parse_word_text(matrix, base_text),
                                                  parse_subset(matrix, subset_csv));
        w = extract_free_abelian(g, f);
      }
      emit(out, to_json(matrix, w));
      err << op << ": rank " << w.rank << ", commutators "
          << (w.commutators_trivial ? "trivial" : "NONTRIVIAL") << "\n";
      return 0;
    }

    // Building subcommands share the model construction.
    const BuildingModel model = make_building(matrix, parse_thickness(matrix, thickness_csv));
    if (op == "building-check") {
      const ChamberGraph graph(model, radius + 2, cap);
      const AxiomReport r = check_axioms(graph, samples, radius, seed);
      emit(out, to_json(graph, r));
      err << op << ": " << r.violations.size() << " violation(s) in " << samples
          << " samples\n";
      return r.violations.empty() ? 0 : 1;
    }
    if (op == "building-project") {
      const ChamberGraph graph(model, radius + 2, cap);
      const Address anchor = parse_address_text(graph, anchor_text);
      const Address x = parse_address_text(graph, x_text);
      const int anchor_id = graph.find(anchor), x_id = graph.find(x);
      if (anchor_id < 0 || x_id < 0)
        throw resource_error("building-project: address outside the materialized radius",
                             radius);
      const ResidueRef rho{anchor_id, parse_subset(matrix, types_csv)};
      const int p = project(graph, rho, x_id);
      emit(out, json{{"projection", address_json(graph, graph.address(p))},
                     {"numerical_distance", numerical_distance(graph, x_id, p)},
                     {"gate_checked", true}});
      return 0;
    }
    if (op == "building-apartment") {
      const ChamberGraph graph(model, radius + 2, cap);
      std::vector<int> chambers;
      for (const auto& text : split_list(chambers_list)) {
        const int id = graph.find(parse_address_text(graph, text));
        if (id < 0)
          throw resource_error("building-apartment: address outside the materialized radius",
                               radius);
        chambers.push_back(id);
      }
      std::vector<Word> images;
      for (const auto& text : split_list(assign_list))
        images.push_back(g.nf(parse_word_text(matrix, text)));
      if (images.empty())
        for (int c : chambers) images.push_back(w_distance(graph, chambers[0], c));
      const Apartment a = extend_apartment(graph, chambers, images, radius);
      json addresses = json::array();
      for (const auto& [w, id] : a.chamber_of)
        addresses.push_back(json{{"element", word_json(matrix, w)},
                                 {"address", address_json(graph, graph.address(id))}});
      emit(out, json{{"apartment", addresses}, {"radius", a.radius},
                     {"certified", a.certified}});
      return 0;
    }
    if (op == "building-flat") {
      const ChamberGraph graph(model, window + 4, cap);
      const StandardFlat f = make_standard_flat(g, parse_word_text(matrix, base_text),
                                                parse_subset(matrix, subset_csv));
      const int c0 = graph.find(parse_address_text(graph, c0_text));
      if (c0 < 0)
        throw resource_error("building-flat: c0 outside the materialized radius", window);
      const FlatProjectionResult r = flat_projection_set(graph, f, c0, window);
      json projections = json::array();
      for (int id : r.projections)
        projections.push_back(address_json(graph, graph.address(id)));
      emit(out, json{{"projections", projections},
                     {"count", r.projections.size()},
                     {"verdict", r.verdict},
                     {"partial", r.partial}});
      err << op << ": verdict " << (r.verdict ? "success" : "failure") << "\n";
      return r.verdict ? 0 : 1;
    }
    throw validation_error("unhandled subcommand '" + op + "'");
  } catch (const resource_error& e) {
    err << op << ": resource cap: " << e.what() << "\n";
    return 3;
  } catch (const validation_error& e) {
    err << op << ": invalid input: " << e.what() << "\n";
    return 1;
  } catch (const precondition_error& e) {
    err << op << ": precondition: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    err << op << ": internal error: " << e.what() << "\n";
    return 1;
  } catch (const ambiguous_sign_error& e) {
    err << op << ": uncertified arithmetic: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cox
