#pragma once

#include <cstdint>
#include <functional>
#include <tuple>
#include <vector>

namespace endtangle {

// Canonical vertex coordinates. The meaning of (a, b) is family-specific:
// ray index, (row, column), (x, y), (block, position), or an apex slot.
struct Vertex {
  std::int32_t a = 0;
  std::int32_t b = 0;

  friend bool operator==(const Vertex& l, const Vertex& r) {
    return l.a == r.a && l.b == r.b;
  }
  friend bool operator!=(const Vertex& l, const Vertex& r) { return !(l == r); }
  friend bool operator<(const Vertex& l, const Vertex& r) {
    return std::tie(l.a, l.b) < std::tie(r.a, r.b);
  }
  friend bool operator<=(const Vertex& l, const Vertex& r) { return !(r < l); }
  friend bool operator>(const Vertex& l, const Vertex& r) { return r < l; }
};

using VertexList = std::vector<Vertex>;

struct VertexHash {
  std::size_t operator()(const Vertex& v) const {
    std::uint64_t key =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.a)) << 32) |
        static_cast<std::uint32_t>(v.b);
    key ^= key >> 33;
    key *= 0xff51afd7ed558ccdULL;
    key ^= key >> 33;
    return static_cast<std::size_t>(key);
  }
};

}  // namespace endtangle
