#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cox/flats.hpp"
#include "cox/json_io.hpp"

using namespace cox;

namespace {

const CoxeterMatrix kT333 = triangle_matrix(3, 3, 3);
const CoxeterMatrix kDinf = parse_matrix(R"({"generators":["s","t"],"orders":[[1,0],[0,1]]})");
const CoxeterMatrix kMix = orthogonal_join(kT333, kDinf);   // A~2 x A~1
const CoxeterMatrix kDinf2 = orthogonal_join(kDinf, kDinf); // A~1 x A~1

}  // namespace

TEST_CASE("standard flats: validation") {
  const Group g(kMix);
  CHECK_NOTHROW(make_standard_flat(g, {}, {0, 1, 2}));
  CHECK_NOTHROW(make_standard_flat(g, {0, 3}, {3, 4}));
  CHECK(flat_dimension(g, make_standard_flat(g, {}, {0, 1, 2, 3, 4})) == 3);
  // Spherical or indefinite components are rejected.
  CHECK_THROWS_AS(make_standard_flat(g, {}, {0, 1}), precondition_error);
  const Group h(triangle_matrix(3, 3, 4));
  CHECK_THROWS_AS(make_standard_flat(h, {}, {0, 1, 2}), precondition_error);
}

TEST_CASE("flat_walls: window reflections of the coset, verified membership") {
  const Group g(kT333);
  const StandardFlat f = make_standard_flat(g, {}, {0, 1, 2});
  const WallSet walls = flat_walls(g, f, 2);
  // The whole group is the flat here: the walls are the depth-2 reflections.
  CHECK(walls.size() == reflections_up_to(g, 2).size());
  for (const Wall& w : walls) {
    // Reflections lie in w W_T w^{-1} = W.
    CHECK(flat_component_of(g, f, w) == 0);
  }
}

TEST_CASE("flat_walls: component separation in products") {
  const Group g(kMix);
  // Only the A~1 part: walls use only letters {3, 4}.
  const StandardFlat f = make_standard_flat(g, {}, {3, 4});
  for (const Wall& w : flat_walls(g, f, 3))
    for (int c : w.reflection) CHECK(c >= 3);
  // Window 1 on the A~1 flat: exactly the two simple walls.
  const WallSet w1 = flat_walls(g, f, 1);
  CHECK(w1.size() == 4);  // depth-1 reflections of D_inf: 2d+2 with d=1
  const WallSet w0 = flat_walls(g, make_standard_flat(g, {}, {3, 4}), 1);
  CHECK(w0.contains(simple_wall(g, 3)));
  CHECK(w0.contains(simple_wall(g, 4)));
}

TEST_CASE("flat_walls: conjugated base and membership validation") {
  const Group g(kMix);
  const StandardFlat f = make_standard_flat(g, {0}, {3, 4});  // base s1 of the triangle
  for (const Wall& w : flat_walls(g, f, 2)) {
    const int comp = flat_component_of(g, f, w);
    CHECK(comp == 0);  // the only component of T = {3,4}
  }
  // A triangle wall does not belong to M(F).
  CHECK_THROWS_AS(flat_component_of(g, f, simple_wall(g, 0)), precondition_error);
}

TEST_CASE("f_parallel: spec examples and equivalence on the window") {
  const Group g(kT333);
  const StandardFlat f = make_standard_flat(g, {}, {0, 1, 2});
  const Wall m1 = simple_wall(g, 0);
  const Wall m2 = wall_of_reflection(g, {1, 2, 1});
  CHECK(f_parallel(g, f, m1, m1));
  CHECK(f_parallel(g, f, m1, m2));  // the B = -1 disjoint pair

  const Group gm(kMix);
  const StandardFlat fm = make_standard_flat(gm, {}, {0, 1, 2, 3, 4});
  CHECK(!f_parallel(gm, fm, simple_wall(gm, 0), simple_wall(gm, 3)));  // cross-component

  // Equivalence relation on a window.
  const WallSet walls = flat_walls(g, f, 3);
  for (const Wall& a : walls) CHECK(f_parallel(g, f, a, a));
  for (const Wall& a : walls)
    for (const Wall& b : walls) CHECK(f_parallel(g, f, a, b) == f_parallel(g, f, b, a));
  for (const Wall& a : walls)
    for (const Wall& b : walls)
      for (const Wall& c : walls)
        if (f_parallel(g, f, a, b) && f_parallel(g, f, b, c)) CHECK(f_parallel(g, f, a, c));
}

TEST_CASE("global parallelism implies F-parallelism") {
  const Group g(kMix);
  const StandardFlat f = make_standard_flat(g, {}, {0, 1, 2, 3, 4});
  const WallSet walls = flat_walls(g, f, 3);
  for (const Wall& a : walls)
    for (const Wall& b : walls)
      if (!(a == b) && order_of_product(g, a, b) == 0) CHECK(f_parallel(g, f, a, b));
}

TEST_CASE("parallel_class: chains through the pivot, growing with the window") {
  const Group g(kT333);
  const StandardFlat f = make_standard_flat(g, {}, {0, 1, 2});
  const Wall mu = simple_wall(g, 0);
  const auto r2 = parallel_class(g, f, mu, 2);
  CHECK(r2.chain == ChainClass::Segment);
  bool has_pivot = false, has_spec_partner = false;
  for (const Wall& m : r2.members) {
    if (m == mu) has_pivot = true;
    if (m == wall_of_reflection(g, {1, 2, 1})) has_spec_partner = true;
  }
  CHECK(has_pivot);
  CHECK(has_spec_partner);
  // Window growth: the class keeps acquiring walls (finite check of
  // "contains a line of walls").
  const auto r4 = parallel_class(g, f, mu, 4);
  const auto r6 = parallel_class(g, f, mu, 6);
  CHECK(r2.members.size() < r4.members.size());
  CHECK(r4.members.size() < r6.members.size());

  // A~1 flat: all walls lie in one chain-ordered class.
  const Group d(kDinf);
  const StandardFlat fd = make_standard_flat(d, {}, {0, 1});
  const auto rd = parallel_class(d, fd, simple_wall(d, 0), 3);
  CHECK(rd.members.size() == flat_walls(d, fd, 3).size());
}

TEST_CASE("parallel class subgroups are infinite dihedral (propertymeucl iii)") {
  const Group g(kT333);
  const StandardFlat f = make_standard_flat(g, {}, {0, 1, 2});
  for (const Wall& mu : flat_walls(g, f, 2)) {
    const auto cls = parallel_class(g, f, mu, 3);
    const ReflectionSubgroup sub = reflection_subgroup(g, WallSet(cls.members));
    CHECK(sub.certification == Certification::Certified);
    REQUIRE(sub.canonical.size() == 2);
    CHECK(sub.induced.order(0, 1) == 0);
  }
}

TEST_CASE("m_eucl: spec examples") {
  // T = A~2 only: every window wall is Euclidean.
  {
    const Group g(kT333);
    const StandardFlat f = make_standard_flat(g, {}, {0, 1, 2});
    const WallSet walls = flat_walls(g, f, 4);
    CHECK(m_eucl(g, f, 4) == walls);
  }
  // T = A~1 only: no triangles inside D_inf.
  {
    const Group g(kDinf);
    const StandardFlat f = make_standard_flat(g, {}, {0, 1});
    CHECK(m_eucl(g, f, 4).empty());
  }
  // T = A~2 x A~1: exactly the triangle-component walls.
  {
    const Group g(kMix);
    const StandardFlat f = make_standard_flat(g, {}, {0, 1, 2, 3, 4});
    const WallSet eucl = m_eucl(g, f, 4);
    CHECK(!eucl.empty());
    for (const Wall& w : flat_walls(g, f, 4)) {
      const bool triangle_side = flat_component_of(g, f, w) == 0;
      CHECK(eucl.contains(w) == triangle_side);
    }
  }
}

TEST_CASE("cor-Meucl, finite form: the euclidean wall set is W(M_Eucl)-stable") {
  const Group g(kT333);
  const StandardFlat f = make_standard_flat(g, {}, {0, 1, 2});
  const WallSet eucl = m_eucl(g, f, 4);
  const WallSet deeper = m_eucl(g, f, 6);
  // gamma ranges over a small ball of W(M_Eucl) = W here.
  const Ball b(g, 2);
  for (const Wall& m : eucl) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      const Word& gamma = b.word(static_cast<int>(i));
      const Wall moved = wall_of_reflection(g, g.conj(gamma, m.reflection));
      if (order_of_product(g, moved, m) == 0)  // disjoint from m
        CHECK(deeper.contains(moved));
    }
  }
}

TEST_CASE("dichotomy: predicted cases") {
  // Case (ii) for single affine components.
  for (const auto& labels : {std::array<int, 3>{3, 3, 3}, {2, 4, 4}, {2, 3, 6}}) {
    const Group g(triangle_matrix(labels[0], labels[1], labels[2]));
    const StandardFlat f = make_standard_flat(g, {}, {0, 1, 2});
    const DichotomyReport r = dichotomy(g, f, 4);
    CHECK(r.which == DichotomyReport::Case::Affine);
  }
  // Case (i) for products with an A~1 factor.
  {
    const Group g(kMix);
    const StandardFlat f = make_standard_flat(g, {}, {0, 1, 2, 3, 4});
    const DichotomyReport r = dichotomy(g, f, 4);
    CHECK(r.which == DichotomyReport::Case::CentralizedFamily);
    for (const Wall& w : r.m) CHECK(flat_component_of(g, f, w) == 1);
  }
  // Case (i) for a bare A~1 (M is everything, complement empty).
  {
    const Group g(kDinf);
    const StandardFlat f = make_standard_flat(g, {}, {0, 1});
    const DichotomyReport r = dichotomy(g, f, 4);
    CHECK(r.which == DichotomyReport::Case::CentralizedFamily);
    CHECK(r.m == r.walls);
  }
}

TEST_CASE("extract_free_abelian: spec examples") {
  // A~1: single generator u v.
  {
    const Group g(kDinf);
    const ZnWitness w = extract_free_abelian(g, make_standard_flat(g, {}, {0, 1}));
    CHECK(w.rank == 1);
    REQUIRE(w.generators.size() == 1);
    CHECK(w.generators[0] == Word{0, 1});
    CHECK(w.commutators_trivial);
    CHECK(w.translation_rank_ok);
  }
  // (3,3,3): two commuting translations of rank 2.
  {
    const Group g(kT333);
    const ZnWitness w = extract_free_abelian(g, make_standard_flat(g, {}, {0, 1, 2}));
    CHECK(w.rank == 2);
    CHECK(w.generators.size() == 2);
    CHECK(w.commutators_trivial);
    CHECK(w.translation_rank_ok);
    CHECK(witness_translation_rank(w) == 2);
  }
  // A~2 x A~2: four generators of rank 4.
  {
    const Group g(orthogonal_join(kT333, kT333));
    const ZnWitness w = extract_free_abelian(g, make_standard_flat(g, {}, {0, 1, 2, 3, 4, 5}));
    CHECK(w.rank == 4);
    CHECK(w.generators.size() == 4);
    CHECK(w.commutators_trivial);
    CHECK(w.translation_rank_ok);
  }
}

TEST_CASE("extract_free_abelian: conjugated base flats") {
  const Group g(kMix);
  const StandardFlat f = make_standard_flat(g, {0, 1}, {3, 4});
  const ZnWitness w = extract_free_abelian(g, f);
  CHECK(w.rank == 1);
  CHECK(w.commutators_trivial);
  // The generator is the conjugate of the basic translation.
  CHECK(w.generators[0] == g.conj({0, 1}, {3, 4}));
}

TEST_CASE("witness rank matches the flat-rank contribution of T") {
  const Group g(kMix);
  const StandardFlat f = make_standard_flat(g, {}, {0, 1, 2, 3, 4});
  const ZnWitness w = extract_free_abelian(g, f);
  CHECK(w.rank == 3);
  CHECK(w.rank == flat_dimension(g, f));
  CHECK(w.rank == flat_rank(kMix).rank);
}

TEST_CASE("rank_witness: acceptance-table matrices") {
  auto check_matrix = [](const CoxeterMatrix& m, int expected) {
    const ZnWitness w = rank_witness(m);
    CHECK(w.rank == expected);
    CHECK(w.rank == flat_rank(m).rank);
    CHECK(w.commutators_trivial);
    CHECK(w.translation_rank_ok);
  };
  check_matrix(parse_matrix(R"({"generators":["s","t"],"orders":[[1,3],[3,1]]})"), 0);
  check_matrix(kDinf, 1);
  check_matrix(kT333, 2);
  check_matrix(triangle_matrix(2, 4, 4), 2);
  check_matrix(triangle_matrix(2, 3, 6), 2);
  check_matrix(triangle_matrix(2, 3, 7), 1);
  check_matrix(kDinf2, 2);
  check_matrix(orthogonal_join(kT333, kT333), 4);
  check_matrix(kMix, 3);
}

TEST_CASE("rank_witness blocks carry certificates") {
  const ZnWitness w = rank_witness(triangle_matrix(2, 3, 7));
  REQUIRE(w.blocks.size() == 1);
  CHECK(w.blocks[0].kind == WitnessBlock::Kind::IndefiniteElement);
  CHECK(w.blocks[0].pair_reflections.size() == 2);
  CHECK(w.blocks[0].certificate.find("torsion bound") != std::string::npos);

  const ZnWitness wt = rank_witness(kT333);
  REQUIRE(wt.blocks.size() == 1);
  CHECK(wt.blocks[0].kind == WitnessBlock::Kind::AffineTranslations);
  CHECK(wt.blocks[0].translation_rows.size() == 2);
}

TEST_CASE("witness serialization has integer translation data") {
  const json j = to_json(kT333, rank_witness(kT333));
  CHECK(j["rank"] == 2);
  CHECK(j["commutators_trivial"] == true);
  REQUIRE(j["blocks"].size() == 1);
  const auto& rows = j["blocks"][0]["translation_matrix"];
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row.contains("denominator"));
    for (const auto& quad : row["entries"]) CHECK(quad.size() == 4);
  }
}
