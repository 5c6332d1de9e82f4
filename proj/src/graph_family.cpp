#include "endtangle/graph_family.hpp"

#include <algorithm>
#include <sstream>

#include "endtangle/errors.hpp"

namespace endtangle {

namespace {

int require_param(const std::map<std::string, int>& params,
                  const std::string& key, int min_value) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw InvalidParam("missing parameter '" + key + "'");
  }
  if (it->second < min_value) {
    throw InvalidParam("parameter '" + key + "' must be >= " +
                       std::to_string(min_value));
  }
  return it->second;
}

class RayFamily final : public GraphFamily {
 public:
  RayFamily() {
    name_ = "ray";
    annotations_.degree = 1;
    annotations_.domination = 0;
  }

  int level(Vertex v) const override { return v.a; }
  bool contains(Vertex v) const override { return v.a >= 0 && v.b == 0; }

  VertexList neighbors_up_to(Vertex v, int max_level) const override {
    VertexList out;
    if (v.a > 0) out.push_back({v.a - 1, 0});
    if (v.a + 1 <= max_level) out.push_back({v.a + 1, 0});
    return out;
  }

  bool has_neighbor_beyond(Vertex v, int max_level) const override {
    return v.a + 1 > max_level;
  }

  Vertex canonical_ray(int i) const override { return {i, 0}; }

  VertexList vertices_at_level(int l) const override { return {{l, 0}}; }

  std::string label(Vertex v) const override {
    return "v" + std::to_string(v.a);
  }

  bool locally_finite_beyond(int) const override { return true; }
  std::optional<int> degree_width_bound() const override { return 1; }

  VertexList tail_from(Vertex frontier, int count) const override {
    VertexList out;
    for (int i = 1; i <= count; ++i) out.push_back({frontier.a + i, 0});
    return out;
  }
  std::string tail_rule_name(Vertex) const override {
    return "increase ray index";
  }
};

class LadderFamily final : public GraphFamily {
 public:
  explicit LadderFamily(int m) : m_(m) {
    name_ = "ladder";
    params_["m"] = m;
    annotations_.degree = m;
    annotations_.domination = 0;
  }

  // Vertex (col, row), row in [0, m).
  int level(Vertex v) const override { return v.a; }
  bool contains(Vertex v) const override {
    return v.a >= 0 && v.b >= 0 && v.b < m_;
  }

  VertexList neighbors_up_to(Vertex v, int max_level) const override {
    VertexList out;
    if (v.a > 0) out.push_back({v.a - 1, v.b});
    if (v.b > 0) out.push_back({v.a, v.b - 1});
    if (v.b + 1 < m_) out.push_back({v.a, v.b + 1});
    if (v.a + 1 <= max_level) out.push_back({v.a + 1, v.b});
    std::sort(out.begin(), out.end());
    return out;
  }

  bool has_neighbor_beyond(Vertex v, int max_level) const override {
    return v.a + 1 > max_level;
  }

  Vertex canonical_ray(int i) const override { return {i, 0}; }

  VertexList vertices_at_level(int l) const override {
    VertexList out;
    for (int r = 0; r < m_; ++r) out.push_back({l, r});
    return out;
  }

  std::string label(Vertex v) const override {
    return "r" + std::to_string(v.b) + "c" + std::to_string(v.a);
  }

  bool locally_finite_beyond(int) const override { return true; }
  std::optional<int> degree_width_bound() const override { return m_; }

  VertexList tail_from(Vertex frontier, int count) const override {
    VertexList out;
    for (int i = 1; i <= count; ++i) out.push_back({frontier.a + i, frontier.b});
    return out;
  }
  std::string tail_rule_name(Vertex frontier) const override {
    return "continue along row " + std::to_string(frontier.b);
  }

 private:
  int m_;
};

class GridFamily final : public GraphFamily {
 public:
  GridFamily() {
    name_ = "grid";
    annotations_.degree_infinite = true;
    annotations_.domination = 0;
  }

  // Quarter grid; vertex (x, y), level max(x, y).
  int level(Vertex v) const override { return std::max(v.a, v.b); }
  bool contains(Vertex v) const override { return v.a >= 0 && v.b >= 0; }

  VertexList neighbors_up_to(Vertex v, int max_level) const override {
    VertexList out;
    const Vertex cand[4] = {
        {v.a - 1, v.b}, {v.a, v.b - 1}, {v.a, v.b + 1}, {v.a + 1, v.b}};
    for (const Vertex& u : cand) {
      if (u.a >= 0 && u.b >= 0 && level(u) <= max_level) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool has_neighbor_beyond(Vertex v, int max_level) const override {
    return std::max(v.a, v.b) + 1 > max_level;
  }

  Vertex canonical_ray(int i) const override { return {i, 0}; }

  VertexList vertices_at_level(int l) const override {
    VertexList out;
    for (int x = 0; x < l; ++x) out.push_back({x, l});
    for (int y = 0; y <= l; ++y) out.push_back({l, y});
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string label(Vertex v) const override {
    return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
  }

  bool locally_finite_beyond(int) const override { return true; }

  // East for shell vertices below the diagonal, north above it, and an
  // east/north staircase on the diagonal; tails of distinct frontier
  // vertices stay disjoint.
  VertexList tail_from(Vertex frontier, int count) const override {
    VertexList out;
    Vertex cur = frontier;
    bool east_next = true;
    for (int i = 0; i < count; ++i) {
      if (cur.a > cur.b) {
        cur = {cur.a + 1, cur.b};
      } else if (cur.b > cur.a) {
        cur = {cur.a, cur.b + 1};
      } else {
        cur = east_next ? Vertex{cur.a + 1, cur.b} : Vertex{cur.a, cur.b + 1};
        east_next = !east_next;
      }
      out.push_back(cur);
    }
    return out;
  }
  std::string tail_rule_name(Vertex frontier) const override {
    if (frontier.a > frontier.b) return "go east along row " + std::to_string(frontier.b);
    if (frontier.b > frontier.a) return "go north along column " + std::to_string(frontier.a);
    return "staircase along the diagonal";
  }
};

class CliqueRayFamily final : public GraphFamily {
 public:
  CliqueRayFamily() {
    name_ = "clique_ray";
    annotations_.degree_infinite = true;
    annotations_.domination = 0;
  }

  // Vertex (n, i): position i in the n-vertex block, level n - 1.
  int level(Vertex v) const override { return v.a - 1; }
  bool contains(Vertex v) const override {
    return v.a >= 1 && v.b >= 0 && v.b < v.a;
  }

  VertexList neighbors_up_to(Vertex v, int max_level) const override {
    VertexList out;
    for (int n = v.a - 1; n <= v.a + 1; ++n) {
      if (n < 1 || n - 1 > max_level) continue;
      for (int i = 0; i < n; ++i) {
        Vertex u{n, i};
        if (u != v) out.push_back(u);
      }
    }
    return out;  // already sorted by construction
  }

  bool has_neighbor_beyond(Vertex v, int max_level) const override {
    return v.a > max_level;  // the next block has level v.a
  }

  Vertex canonical_ray(int i) const override { return {i + 1, 0}; }

  VertexList vertices_at_level(int l) const override {
    VertexList out;
    for (int i = 0; i <= l; ++i) out.push_back({l + 1, i});
    return out;
  }

  std::string label(Vertex v) const override {
    return "K" + std::to_string(v.a) + ":" + std::to_string(v.b);
  }

  bool locally_finite_beyond(int) const override { return true; }

  VertexList tail_from(Vertex frontier, int count) const override {
    VertexList out;
    for (int i = 1; i <= count; ++i) out.push_back({frontier.a + i, frontier.b});
    return out;
  }
  std::string tail_rule_name(Vertex frontier) const override {
    return "advance through blocks at position " + std::to_string(frontier.b);
  }
};

class DominatedRayFamily final : public GraphFamily {
 public:
  explicit DominatedRayFamily(int m) : m_(m) {
    name_ = "dominated_ray";
    params_["m"] = m;
    annotations_.degree = 1;
    annotations_.domination = m;
  }

  // Ray vertex r_i = (0, i); apex a_j = (1, j), adjacent to every r_i.
  bool is_apex(Vertex v) const { return v.a == 1; }

  int level(Vertex v) const override { return is_apex(v) ? 0 : v.b; }
  bool contains(Vertex v) const override {
    if (v.a == 0) return v.b >= 0;
    return v.a == 1 && v.b >= 0 && v.b < m_;
  }

  VertexList neighbors_up_to(Vertex v, int max_level) const override {
    VertexList out;
    if (is_apex(v)) {
      for (int i = 0; i <= max_level; ++i) out.push_back({0, i});
      return out;
    }
    if (v.b > 0) out.push_back({0, v.b - 1});
    if (v.b + 1 <= max_level) out.push_back({0, v.b + 1});
    for (int j = 0; j < m_; ++j) out.push_back({1, j});
    return out;
  }

  bool has_neighbor_beyond(Vertex v, int max_level) const override {
    if (is_apex(v)) return true;
    return v.b + 1 > max_level;
  }

  Vertex canonical_ray(int i) const override { return {0, i}; }

  VertexList vertices_at_level(int l) const override {
    VertexList out;
    out.push_back({0, l});
    if (l == 0) {
      for (int j = 0; j < m_; ++j) out.push_back({1, j});
    }
    return out;
  }

  std::string label(Vertex v) const override {
    return (is_apex(v) ? "a" : "r") + std::to_string(v.b);
  }

  bool locally_finite_beyond(int) const override { return true; }
  std::optional<int> degree_width_bound() const override { return 1; }

  VertexList tail_from(Vertex frontier, int count) const override {
    if (is_apex(frontier)) return {};
    VertexList out;
    for (int i = 1; i <= count; ++i) out.push_back({0, frontier.b + i});
    return out;
  }
  std::string tail_rule_name(Vertex frontier) const override {
    return is_apex(frontier) ? "none" : "increase ray index";
  }

 private:
  int m_;
};

class CompleteFamily final : public GraphFamily {
 public:
  CompleteFamily() {
    name_ = "complete";
    annotations_.degree_infinite = true;
    annotations_.domination_infinite = true;
  }

  int level(Vertex v) const override { return v.a; }
  bool contains(Vertex v) const override { return v.a >= 0 && v.b == 0; }

  VertexList neighbors_up_to(Vertex v, int max_level) const override {
    VertexList out;
    for (int i = 0; i <= max_level; ++i) {
      if (i != v.a) out.push_back({i, 0});
    }
    return out;
  }

  bool has_neighbor_beyond(Vertex, int) const override { return true; }

  Vertex canonical_ray(int i) const override { return {i, 0}; }

  VertexList vertices_at_level(int l) const override { return {{l, 0}}; }

  std::string label(Vertex v) const override {
    return "v" + std::to_string(v.a);
  }

  bool locally_finite_beyond(int) const override { return false; }
  bool infinite_dominating_stream() const override { return true; }

  VertexList tail_from(Vertex, int) const override { return {}; }
  std::string tail_rule_name(Vertex) const override { return "none"; }
};

}  // namespace

FamilyPtr make_family(const std::string& name,
                      const std::map<std::string, int>& params) {
  if (name == "ray") return std::make_shared<RayFamily>();
  if (name == "ladder") {
    return std::make_shared<LadderFamily>(require_param(params, "m", 1));
  }
  if (name == "grid") return std::make_shared<GridFamily>();
  if (name == "clique_ray") return std::make_shared<CliqueRayFamily>();
  if (name == "dominated_ray") {
    return std::make_shared<DominatedRayFamily>(require_param(params, "m", 1));
  }
  if (name == "complete") return std::make_shared<CompleteFamily>();
  throw UnknownFamily("unknown family '" + name + "'");
}

FamilyPtr parse_family_spec(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string name;
  std::map<std::string, int> params;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidParam("malformed family spec line: " + line);
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "family") {
      name = value;
    } else if (key.rfind("param.", 0) == 0) {
      try {
        params[key.substr(6)] = std::stoi(value);
      } catch (const std::exception&) {
        throw InvalidParam("non-integer parameter value: " + line);
      }
    } else {
      throw InvalidParam("unknown family spec key: " + key);
    }
  }
  if (name.empty()) throw InvalidParam("family spec missing 'family=' line");
  return make_family(name, params);
}

}  // namespace endtangle
