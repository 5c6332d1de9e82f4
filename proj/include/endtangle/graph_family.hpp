#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "endtangle/vertex.hpp"

namespace endtangle {

// Test-only declared ground truth. Analysis code must never read these.
struct FamilyAnnotations {
  std::optional<int> degree;  // empty means infinite
  bool degree_infinite = false;
  std::optional<int> domination;
  bool domination_infinite = false;
};

// Oracle interface for a lazily generated infinite graph with one
// designated end, witnessed by a canonical ray.
class GraphFamily {
 public:
  virtual ~GraphFamily() = default;

  const std::string& name() const { return name_; }
  const std::map<std::string, int>& params() const { return params_; }

  virtual int level(Vertex v) const = 0;
  virtual bool contains(Vertex v) const = 0;

  // All neighbors of v with level <= max_level, sorted.
  virtual VertexList neighbors_up_to(Vertex v, int max_level) const = 0;

  // True iff v has some neighbor of level > max_level.
  virtual bool has_neighbor_beyond(Vertex v, int max_level) const = 0;

  // i-th vertex of the fixed witness ray of the designated end.
  virtual Vertex canonical_ray(int i) const = 0;

  // All vertices at exactly this level, sorted. Always finite.
  virtual VertexList vertices_at_level(int l) const = 0;

  // Human-readable vertex label used in reports and golden tests.
  virtual std::string label(Vertex v) const = 0;

  // Analytic declarations backing the semi-decision procedures.

  // Every vertex of level > l has finite degree in the full graph.
  virtual bool locally_finite_beyond(int l) const = 0;

  // The family exposes an unbounded stream of structurally equivalent
  // domination candidates (infinite-clique-like families).
  virtual bool infinite_dominating_stream() const { return false; }

  // Declared upper bound on any X-to-end separator size (after removing
  // dominating vertices), when the family structure provides one.
  virtual std::optional<int> degree_width_bound() const { return std::nullopt; }

  // Explicit infinite continuation of a ray prefix ending at a frontier
  // vertex: the next `count` vertices strictly after it. Empty when the
  // family declares no tail rule for this vertex.
  virtual VertexList tail_from(Vertex frontier, int count) const = 0;
  virtual std::string tail_rule_name(Vertex frontier) const = 0;

  const FamilyAnnotations& annotations() const { return annotations_; }

 protected:
  std::string name_;
  std::map<std::string, int> params_;
  FamilyAnnotations annotations_;
};

using FamilyPtr = std::shared_ptr<const GraphFamily>;

// Factory for the built-in families:
//   ray, ladder(m), grid, clique_ray, dominated_ray(m), complete.
// Throws UnknownFamily / InvalidParam.
FamilyPtr make_family(const std::string& name,
                      const std::map<std::string, int>& params = {});

// Parses the family specification text format: a `family=<name>` line plus
// any number of `param.<key>=<int>` lines. Blank lines and lines starting
// with '#' are ignored.
FamilyPtr parse_family_spec(const std::string& text);

}  // namespace endtangle
