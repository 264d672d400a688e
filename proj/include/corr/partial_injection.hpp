#pragma once

#include <utility>
#include <vector>

#include "corr/error.hpp"

namespace corr {

// Injective partial map on the color set {1..k}.  Both directions are kept
// so that applying and inverting are O(1).
class PartialInjection {
 public:
  PartialInjection() = default;
  explicit PartialInjection(int k);

  static PartialInjection identity(int k);
  // Throws if a source or target repeats or a color is out of range.
  static PartialInjection from_pairs(int k, const std::vector<std::pair<int, int>>& pairs);

  int k() const { return k_; }
  bool defined(int c) const;
  // Image of c, or 0 when c is outside the domain.
  int map(int c) const;
  // Preimage of c, or 0 when c is outside the image.
  int preimage(int c) const;
  void add(int source, int target);

  PartialInjection inverse() const;
  std::vector<int> domain() const;
  int domain_size() const;
  // Pairs (source, target) sorted by source.
  std::vector<std::pair<int, int>> pairs() const;

  // map(c) == c for every c in the domain.
  bool straight() const;
  // Domain is all of {1..k}.
  bool full() const;

  bool operator==(const PartialInjection&) const = default;

 private:
  void check_color(int c) const;

  int k_ = 0;
  std::vector<int> fwd_;  // fwd_[c] = image of c, 0 if unset
  std::vector<int> rev_;  // rev_[c] = preimage of c, 0 if unset
};

// Composition in walk order: c -> then(first(c)).  The domain consists of all
// c in dom(first) with first(c) in dom(then).
PartialInjection compose(const PartialInjection& first, const PartialInjection& then);

}  // namespace corr
