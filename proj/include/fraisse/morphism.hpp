#pragma once

#include <memory>
#include <vector>

#include "fraisse/structure.hpp"

namespace fraisse {

/// Map between two structures over the same signature. The entry map()[x]
/// is the image of source element x. Structures are shared immutably, so
/// copies are cheap.
class Morphism {
 public:
  Morphism(FinStructure source, FinStructure target, std::vector<int> map);
  Morphism(std::shared_ptr<const FinStructure> source,
           std::shared_ptr<const FinStructure> target, std::vector<int> map);

  const FinStructure& source() const { return *source_; }
  const FinStructure& target() const { return *target_; }
  const std::vector<int>& map() const { return map_; }
  int operator()(int x) const { return map_[x]; }

  std::shared_ptr<const FinStructure> source_ptr() const { return source_; }
  std::shared_ptr<const FinStructure> target_ptr() const { return target_; }

  bool operator==(const Morphism& o) const {
    return map_ == o.map_ && *source_ == *o.source_ && *target_ == *o.target_;
  }

 private:
  std::shared_ptr<const FinStructure> source_;
  std::shared_ptr<const FinStructure> target_;
  std::vector<int> map_;
};

Morphism identity_morphism(const FinStructure& s);

/// g after f; requires f.target and g.source to be literally equal.
Morphism compose(const Morphism& f, const Morphism& g);

/// True when every fiber of m lies inside a single block of the partition.
/// The partition must cover the source universe exactly.
bool refines(const Morphism& m, const std::vector<std::vector<int>>& partition);

}  // namespace fraisse
