#include "corr/partial_injection.hpp"

#include <algorithm>

namespace corr {

PartialInjection::PartialInjection(int k) : k_(k), fwd_(k + 1, 0), rev_(k + 1, 0) {
  if (k < 1) throw Error("number of colors must be positive");
}

PartialInjection PartialInjection::identity(int k) {
  PartialInjection m(k);
  for (int c = 1; c <= k; ++c) m.add(c, c);
  return m;
}

PartialInjection PartialInjection::from_pairs(int k, const std::vector<std::pair<int, int>>& pairs) {
  PartialInjection m(k);
  for (auto [a, b] : pairs) m.add(a, b);
  return m;
}

void PartialInjection::check_color(int c) const {
  if (c < 1 || c > k_) throw Error("color " + std::to_string(c) + " out of range 1.." + std::to_string(k_));
}

bool PartialInjection::defined(int c) const {
  check_color(c);
  return fwd_[c] != 0;
}

int PartialInjection::map(int c) const {
  check_color(c);
  return fwd_[c];
}

int PartialInjection::preimage(int c) const {
  check_color(c);
  return rev_[c];
}

void PartialInjection::add(int source, int target) {
  check_color(source);
  check_color(target);
  if (fwd_[source] != 0) throw Error("source color " + std::to_string(source) + " already mapped");
  if (rev_[target] != 0) throw Error("target color " + std::to_string(target) + " already hit");
  fwd_[source] = target;
  rev_[target] = source;
}

PartialInjection PartialInjection::inverse() const {
  PartialInjection m(k_);
  m.fwd_ = rev_;
  m.rev_ = fwd_;
  return m;
}

std::vector<int> PartialInjection::domain() const {
  std::vector<int> d;
  for (int c = 1; c <= k_; ++c)
    if (fwd_[c] != 0) d.push_back(c);
  return d;
}

int PartialInjection::domain_size() const {
  int n = 0;
  for (int c = 1; c <= k_; ++c)
    if (fwd_[c] != 0) ++n;
  return n;
}

std::vector<std::pair<int, int>> PartialInjection::pairs() const {
  std::vector<std::pair<int, int>> ps;
  for (int c = 1; c <= k_; ++c)
    if (fwd_[c] != 0) ps.emplace_back(c, fwd_[c]);
  return ps;
}

bool PartialInjection::straight() const {
  for (int c = 1; c <= k_; ++c)
    if (fwd_[c] != 0 && fwd_[c] != c) return false;
  return true;
}

bool PartialInjection::full() const {
  for (int c = 1; c <= k_; ++c)
    if (fwd_[c] == 0) return false;
  return true;
}

PartialInjection compose(const PartialInjection& first, const PartialInjection& then) {
  if (first.k() != then.k()) throw Error("composition of maps with different k");
  PartialInjection m(first.k());
  for (int c = 1; c <= first.k(); ++c) {
    int mid = first.map(c);
    if (mid == 0) continue;
    int out = then.map(mid);
    if (out == 0) continue;
    m.add(c, out);
  }
  return m;
}

}  // namespace corr
