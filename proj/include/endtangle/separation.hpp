#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "endtangle/budgets.hpp"
#include "endtangle/truncation.hpp"

namespace endtangle {

enum class Side { kA, kB };
enum class Membership { kAOnly, kBOnly, kBoth };

struct SideAssignment {
  Vertex representative;  // minimum vertex of the component
  Side side;
};

// A finite-order separation stored intensionally: separator plus a side for
// every finite component of the graph minus the separator, computed on a
// truncation window. Sides are infinite sets; membership of any concrete
// vertex is answered by locating its component.
class OrientedSeparation {
 public:
  FamilyPtr family;
  VertexList separator;  // sorted; order() == separator.size()
  std::vector<SideAssignment> finite_components;  // sorted by representative
  Side end_side = Side::kB;
  int window = 0;
  std::shared_ptr<const ComponentsResult> layout;

  int order() const { return static_cast<int>(separator.size()); }
  bool in_tau() const { return end_side == Side::kB; }

  Membership side_of(Vertex v) const;

  // Same separation recomputed on a larger window.
  OrientedSeparation expand(int new_window, const Budgets& budgets = {}) const;

  // Window-independent canonical rendering: sorted separator, sorted A-side
  // finite-component representatives, end side.
  std::string canonical_text() const;
};

bool same_separation(const OrientedSeparation& s1, const OrientedSeparation& s2);

using SideChooser = std::function<Side(const Component&)>;

inline Side all_to_a(const Component&) { return Side::kA; }
inline Side all_to_b(const Component&) { return Side::kB; }

// Builds the orientation pointing toward the designated end: the
// contains-end component goes to B, finite components per `choose`.
OrientedSeparation orient_toward_end(const FamilyPtr& g,
                                     const VertexList& separator,
                                     const SideChooser& choose, int L,
                                     const Budgets& budgets = {});

// Same, but on a precomputed component layout (shared truncation); used by
// the windowed enumeration to avoid rebuilding truncations per separator.
OrientedSeparation orient_from_layout(
    const FamilyPtr& g, std::shared_ptr<const ComponentsResult> layout,
    const SideChooser& choose);

// The (V, D)-shaped separation: everything including the end on the A side.
// Never a tangle member; used as the limit point in closure evidence.
OrientedSeparation limit_shape(const FamilyPtr& g, const VertexList& separator,
                               int L, const Budgets& budgets = {});

struct RestrictionOnZ {
  VertexList domain;  // Z, sorted
  VertexList a_part;  // A ∩ Z
  VertexList b_part;  // B ∩ Z

  friend bool operator==(const RestrictionOnZ& l, const RestrictionOnZ& r) {
    return l.domain == r.domain && l.a_part == r.a_part && l.b_part == r.b_part;
  }
};

RestrictionOnZ restrict_to(const OrientedSeparation& s, const VertexList& Z);

bool agree_on(const OrientedSeparation& s1, const OrientedSeparation& s2,
              const VertexList& Z);

// (A ∪ C, B ∩ D) for two end-oriented separations; order is at most the sum
// of the two orders and the result is again end-oriented.
OrientedSeparation corner(const OrientedSeparation& s1,
                          const OrientedSeparation& s2,
                          const Budgets& budgets = {});

// A canonical-ray edge beyond all three separators, with both endpoints
// strictly on the big side of each: certifies the three small sides do not
// cover the graph.
struct TripleWitness {
  Vertex u;
  Vertex v;
  bool endpoints_in_big_sides = false;
};

TripleWitness tangle_triple_witness(const FamilyPtr& g,
                                    const OrientedSeparation& s1,
                                    const OrientedSeparation& s2,
                                    const OrientedSeparation& s3);

}  // namespace endtangle
