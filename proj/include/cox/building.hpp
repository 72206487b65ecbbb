#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cox/flats.hpp"
#include "cox/group.hpp"

namespace cox {

// Address of a chamber: a reduced word decorated with panel digits. Digit d
// in {1..q_s} picks one of the q_s chambers beyond the panel's gate; the
// all-digits-1 addresses form the standard apartment. Thick models are
// right-angled, so addresses are canonical up to commutation moves.
using Address = std::vector<std::pair<int, int>>;

struct BuildingModel {
  CoxeterMatrix matrix;
  std::vector<int> thickness;  // q_s >= 1 per generator; all 1 = thin
  bool thick() const {
    for (int q : thickness)
      if (q != 1) return true;
    return false;
  }
};

// Validates: thickness positive, and labels in {2, inf} when any q_s > 1
// (general thick buildings have no comparable finite model).
BuildingModel make_building(CoxeterMatrix matrix, std::vector<int> thickness);

// The chamber system materialized out to a radius: chambers are canonical
// addresses, adjacency is grouped into panels of size q_s + 1. Immutable
// after construction; w_distance is the reduced type-word of a minimal
// gallery.
class ChamberGraph {
 public:
  ChamberGraph(BuildingModel model, int radius, std::size_t cap = kDefaultBallCap);

  const BuildingModel& model() const { return model_; }
  const Group& weyl() const { return weyl_; }
  int radius() const { return radius_; }
  std::size_t size() const { return addr_.size(); }
  const Address& address(int id) const { return addr_[id]; }
  int find(const Address& a) const;
  int base() const { return 0; }

  // The s-panel of a chamber: all chambers (including x) sharing its s-panel.
  // Panels touching the materialization boundary are flagged incomplete.
  struct Panel {
    std::vector<int> chambers;
    bool complete = true;
  };
  Panel panel(int id, int s) const;

  // Gallery word length of the chamber (distance to the base chamber).
  int depth(int id) const { return static_cast<int>(addr_[id].size()); }

  Address canonical(Address a) const;
  std::string address_str(const Address& a) const;

  // Corruption fixture for negative tests: swaps two chambers inside one
  // panel's adjacency, breaking the building axioms on purpose.
  void corrupt_panel_for_tests(int id, int s);

 private:
  friend Word w_distance_path(const ChamberGraph&, int, int);
  BuildingModel model_;
  Group weyl_;
  int radius_;
  std::vector<Address> addr_;
  std::map<Address, int> index_;
  // neighbour lists per generator (panel minus the chamber itself)
  std::vector<std::vector<std::vector<int>>> adj_;
};

// delta(x, y): the Weyl distance, computed as the reduced product of the
// types of a minimal gallery. Thin models satisfy delta(x,y) = x^{-1} y.
Word w_distance(const ChamberGraph& g, int x, int y);

int numerical_distance(const ChamberGraph& g, int x, int y);

struct AxiomViolation {
  std::string axiom;  // "Bu1", "Bu2", "Bu3"
  std::string detail;
};

struct AxiomReport {
  int samples = 0;
  std::vector<AxiomViolation> violations;
};

// Random triples tested verbatim against Bu1-Bu3, including the
// length-additivity branch of Bu2 and an exhibited z for Bu3.
AxiomReport check_axioms(const ChamberGraph& g, int samples, int radius, std::uint64_t seed);

struct ResidueRef {
  int anchor = 0;              // chamber id
  std::vector<int> types;      // U, spherical
};

// All chambers of the residue anchor * W_U (finite); requires the residue to
// be fully materialized.
std::vector<int> residue_chambers(const ChamberGraph& g, const ResidueRef& r);

// The gate: unique chamber of the residue at minimal numerical distance from
// x; the gate property delta(x,d) = delta(x,c) delta(c,d) is asserted against
// every chamber of the residue.
int project(const ChamberGraph& g, const ResidueRef& r, int x);

// An apartment materialized to a radius: a delta-isometric copy of the
// Weyl-group ball.
struct Apartment {
  std::map<Word, int> chamber_of;  // element -> chamber id
  int radius = 0;
  bool certified = true;
};

// Extends a delta-preserving partial map C -> W to a full apartment
// materialized to `radius`, by greedy panel choices with bounded backtracking.
Apartment extend_apartment(const ChamberGraph& g, const std::vector<int>& chambers,
                           const std::vector<Word>& images, int radius, int budget = 10000);

// Lemma-style extension: C lies in apartment A and projects onto rho at
// c in C; returns an apartment containing C and d in rho.
Apartment extend_by_projection(const ChamberGraph& g, const Apartment& a,
                               const std::vector<int>& c_set, const ResidueRef& rho, int c, int d,
                               int radius);

struct FlatProjectionResult {
  std::vector<int> projections;  // sorted chamber ids of C(F, c0)
  bool verdict = false;          // C(F, c0) fits in one apartment
  bool partial = false;          // some residue was truncated by the window
  Apartment apartment;           // the witnessing apartment when verdict holds
};

// C(F, c0) = { proj_{rho(x)}(c0) : x in F } for a standard flat embedded in
// the standard apartment; the verdict checks the projection set embeds in an
// apartment.
FlatProjectionResult flat_projection_set(const ChamberGraph& g, const StandardFlat& flat,
                                         int c0, int window);

// The standard apartment (all digits 1) materialized to a radius.
Apartment standard_apartment(const ChamberGraph& g, int radius);

Address address_of_element(const Word& w);

}  // namespace cox
