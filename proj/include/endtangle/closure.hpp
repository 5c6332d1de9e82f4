#pragma once

#include <optional>
#include <vector>

#include "endtangle/budgets.hpp"
#include "endtangle/deciders.hpp"
#include "endtangle/separation.hpp"

namespace endtangle {

// Finite evidence that the shape (V, D) is a limit point of the order-< k
// part of the end tangle: for each sampled finite Z, a tangle member of
// order < k agreeing with (V, D) on Z.
struct LimitPointEvidence {
  VertexList D;
  OrientedSeparation target;  // the (V, D) shape; never passes in_tau
  struct Sample {
    VertexList Z;
    OrientedSeparation agreeing;
    bool restrict_ok = false;
  };
  std::vector<Sample> samples;
};

enum class ClosureRoute { kParameter, kDecider, kLimitPoint };

struct ClosureVerdict {
  int k = 0;
  bool closed = false;
  ClosureRoute route = ClosureRoute::kParameter;
  std::optional<DeciderCertificate> decider;     // closed == true
  std::optional<LimitPointEvidence> evidence;    // closed == false
};

// A tangle member of order < k agreeing with (V, D) on Z: T separates Z
// minus the dominators from the end in the graph minus D, the end component
// of G - (T ∪ D) goes to B, everything else to A.
OrientedSeparation limit_point_witness(const FamilyPtr& g, int k,
                                       const VertexList& Z,
                                       const Budgets& budgets = {});

ClosureVerdict closure_check(const FamilyPtr& g, int k,
                             const Budgets& budgets = {});

}  // namespace endtangle
