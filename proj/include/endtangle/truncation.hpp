#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "endtangle/graph_family.hpp"
#include "endtangle/vertex.hpp"

namespace endtangle {

// Finite subgraph of all vertices up to level L, with one virtual terminal
// standing for everything beyond. Vertices are stored in sorted order; the
// terminal is index size().
class Truncation {
 public:
  const GraphFamily& family() const { return *family_; }
  int level_bound() const { return L_; }

  int size() const { return static_cast<int>(verts_.size()); }
  int terminal() const { return size(); }

  const VertexList& vertices() const { return verts_; }
  Vertex vertex(int idx) const { return verts_[idx]; }

  // -1 when v is not in the truncation.
  int index_of(Vertex v) const;

  bool is_frontier(int idx) const { return frontier_[idx] != 0; }
  VertexList frontier() const;

  // Neighbor indices; the terminal appears for frontier vertices.
  const std::vector<int>& neighbors(int idx) const { return adj_[idx]; }

  friend Truncation truncate(const FamilyPtr& g, int L, long vertex_cap);

 private:
  FamilyPtr family_;
  int L_ = 0;
  VertexList verts_;
  std::unordered_map<Vertex, int, VertexHash> index_;
  std::vector<std::vector<int>> adj_;  // size() + 1 lists, last is terminal
  std::vector<char> frontier_;
};

Truncation truncate(const FamilyPtr& g, int L, long vertex_cap = 100000);

enum class ComponentLabel { kContainsEnd, kFinite, kUndetermined };

struct Component {
  std::vector<int> members;  // truncation indices, sorted
  ComponentLabel label = ComponentLabel::kUndetermined;
  Vertex representative;  // minimum vertex
};

// Partition of the truncation minus X into connected components, with
// end/finite labels justified by the escape property.
struct ComponentsResult {
  std::shared_ptr<const Truncation> truncation;
  VertexList removed;                // X, sorted
  std::vector<Component> components;
  std::vector<int> component_of;     // per truncation index; -1 for X
  int end_component = -1;            // index into components, -1 if none
};

ComponentsResult components_without(const std::shared_ptr<const Truncation>& t,
                                    const VertexList& X);

// Convenience wrapper that builds the truncation itself.
ComponentsResult components_without(const FamilyPtr& g, const VertexList& X,
                                    int L, long vertex_cap = 100000);

int max_level(const GraphFamily& g, const VertexList& X);  // -1 for empty X

}  // namespace endtangle
