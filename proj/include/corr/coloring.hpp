#pragma once

#include <vector>

#include "corr/correspondence.hpp"

namespace corr {

// Total or partial vertex coloring with colors in {1..k}; 0 means uncolored.
struct Coloring {
  std::vector<int> color;  // index 0 unused

  Coloring() : color(1, 0) {}
  explicit Coloring(int n) : color(n + 1, 0) {}

  int n() const { return static_cast<int>(color.size()) - 1; }
  int at(int v) const { return color[v]; }
  void set(int v, int c) { color[v] = c; }
  bool colored(int v) const { return color[v] != 0; }
  bool total() const;
  std::vector<int> domain() const;

  bool operator==(const Coloring&) const = default;
};

// Validity on colored pairs: for every edge uv with both ends colored, either
// f(u) is outside dom(C_uv) or C_uv(f(u)) != f(v).
bool coloring_valid(const CorrespondenceAssignment& c, const Coloring& f);

}  // namespace corr
