#include "endtangle/separation.hpp"

#include <algorithm>

#include "endtangle/errors.hpp"

namespace endtangle {

namespace {

Side side_of_component(const OrientedSeparation& s, int comp_id) {
  const ComponentsResult& layout = *s.layout;
  if (comp_id == layout.end_component) {
    return s.end_side;
  }
  Vertex rep = layout.components[comp_id].representative;
  auto it = std::lower_bound(
      s.finite_components.begin(), s.finite_components.end(), rep,
      [](const SideAssignment& a, Vertex v) { return a.representative < v; });
  if (it == s.finite_components.end() || it->representative != rep) {
    throw Error("separation has no side for component of " +
                s.family->label(rep));
  }
  return it->side;
}

OrientedSeparation build(const FamilyPtr& g, const VertexList& separator,
                         const SideChooser& choose, Side end_side, int L,
                         const Budgets& budgets) {
  VertexList sep = separator;
  std::sort(sep.begin(), sep.end());
  sep.erase(std::unique(sep.begin(), sep.end()), sep.end());
  if (L <= max_level(*g, sep) + budgets.margin) {
    throw HorizonTooSmall("window must clear the separator by the margin");
  }
  OrientedSeparation s;
  s.family = g;
  s.separator = std::move(sep);
  s.end_side = end_side;
  s.window = L;
  s.layout = std::make_shared<const ComponentsResult>(
      components_without(g, s.separator, L, budgets.budget));
  for (std::size_t i = 0; i < s.layout->components.size(); ++i) {
    const Component& c = s.layout->components[i];
    if (static_cast<int>(i) == s.layout->end_component) continue;
    if (c.label == ComponentLabel::kUndetermined) {
      throw HorizonTooSmall("undetermined component at this window");
    }
    s.finite_components.push_back({c.representative, choose(c)});
  }
  std::sort(s.finite_components.begin(), s.finite_components.end(),
            [](const SideAssignment& a, const SideAssignment& b) {
              return a.representative < b.representative;
            });
  if (s.layout->end_component < 0) {
    throw HorizonTooSmall("no contains-end component at this window");
  }
  return s;
}

}  // namespace

Membership OrientedSeparation::side_of(Vertex v) const {
  if (std::binary_search(separator.begin(), separator.end(), v)) {
    return Membership::kBoth;
  }
  if (family->level(v) > window) {
    // Beyond the window the vertex lies in the end component.
    return end_side == Side::kB ? Membership::kBOnly : Membership::kAOnly;
  }
  int idx = layout->truncation->index_of(v);
  if (idx < 0) throw Error("vertex not in family: " + family->label(v));
  int comp_id = layout->component_of[idx];
  Side side = side_of_component(*this, comp_id);
  return side == Side::kA ? Membership::kAOnly : Membership::kBOnly;
}

OrientedSeparation OrientedSeparation::expand(int new_window,
                                              const Budgets& budgets) const {
  if (new_window == window) return *this;
  if (new_window < window) throw WindowTooSmall("cannot shrink a separation");
  auto sides = finite_components;
  SideChooser choose = [&](const Component& c) {
    auto it = std::lower_bound(
        sides.begin(), sides.end(), c.representative,
        [](const SideAssignment& a, Vertex v) { return a.representative < v; });
    if (it == sides.end() || it->representative != c.representative) {
      throw Error("new finite component appeared during re-expansion");
    }
    return it->side;
  };
  return build(family, separator, choose, end_side, new_window, budgets);
}

std::string OrientedSeparation::canonical_text() const {
  std::string out = "sep=[";
  for (std::size_t i = 0; i < separator.size(); ++i) {
    if (i) out += ",";
    out += family->label(separator[i]);
  }
  out += "];A=[";
  bool first = true;
  for (const SideAssignment& a : finite_components) {
    if (a.side != Side::kA) continue;
    if (!first) out += ",";
    first = false;
    out += family->label(a.representative);
  }
  out += "];end=";
  out += end_side == Side::kB ? "B" : "A";
  return out;
}

bool same_separation(const OrientedSeparation& s1,
                     const OrientedSeparation& s2) {
  return s1.canonical_text() == s2.canonical_text();
}

OrientedSeparation orient_toward_end(const FamilyPtr& g,
                                     const VertexList& separator,
                                     const SideChooser& choose, int L,
                                     const Budgets& budgets) {
  return build(g, separator, choose, Side::kB, L, budgets);
}

OrientedSeparation orient_from_layout(
    const FamilyPtr& g, std::shared_ptr<const ComponentsResult> layout,
    const SideChooser& choose) {
  OrientedSeparation s;
  s.family = g;
  s.separator = layout->removed;
  s.end_side = Side::kB;
  s.window = layout->truncation->level_bound();
  for (std::size_t i = 0; i < layout->components.size(); ++i) {
    const Component& c = layout->components[i];
    if (static_cast<int>(i) == layout->end_component) continue;
    if (c.label == ComponentLabel::kUndetermined) {
      throw HorizonTooSmall("undetermined component at this window");
    }
    s.finite_components.push_back({c.representative, choose(c)});
  }
  std::sort(s.finite_components.begin(), s.finite_components.end(),
            [](const SideAssignment& a, const SideAssignment& b) {
              return a.representative < b.representative;
            });
  if (layout->end_component < 0) {
    throw HorizonTooSmall("no contains-end component at this window");
  }
  s.layout = std::move(layout);
  return s;
}

OrientedSeparation limit_shape(const FamilyPtr& g, const VertexList& separator,
                               int L, const Budgets& budgets) {
  return build(g, separator, all_to_a, Side::kA, L, budgets);
}

RestrictionOnZ restrict_to(const OrientedSeparation& s, const VertexList& Z) {
  RestrictionOnZ r;
  r.domain = Z;
  std::sort(r.domain.begin(), r.domain.end());
  r.domain.erase(std::unique(r.domain.begin(), r.domain.end()), r.domain.end());
  for (Vertex z : r.domain) {
    if (s.family->level(z) > s.window) {
      throw WindowTooSmall("restriction vertex beyond the window");
    }
    switch (s.side_of(z)) {
      case Membership::kAOnly:
        r.a_part.push_back(z);
        break;
      case Membership::kBOnly:
        r.b_part.push_back(z);
        break;
      case Membership::kBoth:
        r.a_part.push_back(z);
        r.b_part.push_back(z);
        break;
    }
  }
  return r;
}

bool agree_on(const OrientedSeparation& s1, const OrientedSeparation& s2,
              const VertexList& Z) {
  return restrict_to(s1, Z) == restrict_to(s2, Z);
}

OrientedSeparation corner(const OrientedSeparation& s1,
                          const OrientedSeparation& s2,
                          const Budgets& budgets) {
  if (!s1.in_tau() || !s2.in_tau()) {
    throw Error("corner requires end-oriented separations");
  }
  const int W = std::max(s1.window, s2.window);
  OrientedSeparation e1 = s1.expand(W, budgets);
  OrientedSeparation e2 = s2.expand(W, budgets);

  // Separator of (A ∪ C, B ∩ D): the part of each separator on the other
  // separation's big side.
  VertexList sep;
  for (Vertex x : e1.separator) {
    if (e2.side_of(x) != Membership::kAOnly) sep.push_back(x);
  }
  for (Vertex x : e2.separator) {
    if (e1.side_of(x) != Membership::kAOnly) sep.push_back(x);
  }
  std::sort(sep.begin(), sep.end());
  sep.erase(std::unique(sep.begin(), sep.end()), sep.end());

  SideChooser choose = [&](const Component& c) {
    Vertex rep = c.representative;
    bool in_a_union_c = e1.side_of(rep) != Membership::kBOnly ||
                        e2.side_of(rep) != Membership::kBOnly;
    return in_a_union_c ? Side::kA : Side::kB;
  };
  return orient_toward_end(e1.family, sep, choose, W, budgets);
}

TripleWitness tangle_triple_witness(const FamilyPtr& g,
                                    const OrientedSeparation& s1,
                                    const OrientedSeparation& s2,
                                    const OrientedSeparation& s3) {
  int sep_level = -1;
  for (const OrientedSeparation* s : {&s1, &s2, &s3}) {
    if (!s->in_tau()) throw Error("witness requires end-oriented separations");
    sep_level = std::max(sep_level, max_level(*g, s->separator));
  }
  int i = 0;
  while (g->level(g->canonical_ray(i)) <= sep_level) ++i;
  TripleWitness w;
  w.u = g->canonical_ray(i);
  w.v = g->canonical_ray(i + 1);
  w.endpoints_in_big_sides = true;
  for (const OrientedSeparation* s : {&s1, &s2, &s3}) {
    for (Vertex x : {w.u, w.v}) {
      if (s->side_of(x) != Membership::kBOnly) w.endpoints_in_big_sides = false;
    }
  }
  return w;
}

}  // namespace endtangle
