#pragma once

#include <string>
#include <utility>
#include <vector>

#include "endtangle/budgets.hpp"
#include "endtangle/end_invariants.hpp"
#include "endtangle/separation.hpp"

namespace endtangle {

// A size-k vertex set X together with the objects proving it decides the
// end tangle restricted to separations of order < k by majority vote:
// dominating vertices D, disjoint ray tails starting at X \ D, and a
// pairwise linking-path system.
struct DeciderCertificate {
  int k = 0;
  VertexList X;  // sorted, |X| == k
  VertexList D;  // sorted, D subset of X
  std::vector<VertexList> rays;        // tails; rays[i].front() starts in X
  std::vector<VertexList> full_rays;   // prefixes from the original starts
  std::vector<std::string> tail_rules;
  std::vector<VertexList> linking_paths;  // endpoints inclusive
  // element indices per linking path: 0..|D|-1 are D vertices, |D|+i is
  // ray i
  std::vector<std::pair<int, int>> linked_elements;
  int window = 0;
};

DeciderCertificate find_relative_decider(const FamilyPtr& g, int k,
                                         const Budgets& budgets = {});

// All separations oriented toward the end whose separator has size < k and
// lives within `inner_level`, over every finite-component side assignment,
// deduplicated, in canonical order.
std::vector<OrientedSeparation> enumerate_end_separations(
    const FamilyPtr& g, int k, int inner_level, int L,
    const Budgets& budgets = {});

// The reverse orientation (B, A) of a separation.
OrientedSeparation reverse_orientation(const OrientedSeparation& s);

struct VoteCounts {
  int a = 0;
  int b = 0;
};

// Majority-vote evaluation shared between the infinite-family code path and
// the finite oracle: separator vertices count on both sides.
template <typename V, typename SideFn>
VoteCounts majority_counts(const std::vector<V>& X, SideFn side_of) {
  VoteCounts c;
  for (const V& x : X) {
    switch (side_of(x)) {
      case Membership::kAOnly:
        ++c.a;
        break;
      case Membership::kBOnly:
        ++c.b;
        break;
      case Membership::kBoth:
        ++c.a;
        ++c.b;
        break;
    }
  }
  return c;
}

struct VerifyResult {
  bool ok = false;
  long separations_checked = 0;
  int effective_inner_level = 0;
  std::vector<std::string> violations;  // canonical texts
};

// Exhaustive |A∩X| < |B∩X| check over the windowed enumeration. A pass is
// evidence over the window; the certificate is the general proof object.
VerifyResult verify_decider(const FamilyPtr& g, const VertexList& X, int k,
                            int inner_level, int L,
                            const Budgets& budgets = {});

// Vertices of level <= inner_level that dominate the end: the windowed part
// of the absolute-decider set.
VertexList absolute_decider_window(const FamilyPtr& g, int inner_level,
                                   const Budgets& budgets = {});

struct LinkCheck {
  bool ok = false;
  std::vector<VertexList> paths;
  std::string failure;
};

// Realizes the certificate's pairwise connectivity: min(|A|,|B|) disjoint
// A-B paths in the union of the extended linking paths, internally avoiding
// X and the ray tails.
LinkCheck disjoint_link_paths(const DeciderCertificate& cert,
                              const VertexList& A, const VertexList& B);

}  // namespace endtangle
