#include "corr/coloring.hpp"

namespace corr {

bool Coloring::total() const {
  for (int v = 1; v <= n(); ++v)
    if (color[v] == 0) return false;
  return true;
}

std::vector<int> Coloring::domain() const {
  std::vector<int> d;
  for (int v = 1; v <= n(); ++v)
    if (color[v] != 0) d.push_back(v);
  return d;
}

bool coloring_valid(const CorrespondenceAssignment& c, const Coloring& f) {
  for (auto [u, v] : c.edges()) {
    if (u > f.n() || v > f.n()) continue;
    int a = f.at(u), b = f.at(v);
    if (a == 0 || b == 0) continue;
    if (c.between(u, v).map(a) == b) return false;
  }
  return true;
}

}  // namespace corr
