#include "fraisse/morphism.hpp"

#include <algorithm>

namespace fraisse {

namespace {

void check_shape(const FinStructure& src, const FinStructure& tgt,
                 const std::vector<int>& map) {
  if (!(src.sig == tgt.sig))
    throw Error("morphism: source and target signatures differ");
  if ((int)map.size() != src.size)
    throw Error("morphism: map length does not match the source universe");
  for (int v : map)
    if (v < 0 || v >= tgt.size)
      throw Error("morphism: map entry leaves the target universe");
}

}  // namespace

Morphism::Morphism(FinStructure source, FinStructure target, std::vector<int> map)
    : source_(std::make_shared<const FinStructure>(std::move(source))),
      target_(std::make_shared<const FinStructure>(std::move(target))),
      map_(std::move(map)) {
  check_shape(*source_, *target_, map_);
}

Morphism::Morphism(std::shared_ptr<const FinStructure> source,
                   std::shared_ptr<const FinStructure> target,
                   std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  check_shape(*source_, *target_, map_);
}

Morphism identity_morphism(const FinStructure& s) {
  std::vector<int> id(s.size);
  for (int i = 0; i < s.size; ++i) id[i] = i;
  auto shared = std::make_shared<const FinStructure>(s);
  return Morphism(shared, shared, std::move(id));
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (f.target_ptr().get() != g.source_ptr().get() &&
      !(f.target() == g.source()))
    throw Error("compose: middle structures do not match");
  std::vector<int> h(f.map().size());
  for (size_t i = 0; i < h.size(); ++i) h[i] = g.map()[f.map()[i]];
  return Morphism(f.source_ptr(), g.target_ptr(), std::move(h));
}

bool refines(const Morphism& m, const std::vector<std::vector<int>>& partition) {
  int n = m.source().size;
  std::vector<int> block_of(n, -1);
  for (size_t b = 0; b < partition.size(); ++b) {
    if (partition[b].empty()) throw Error("refines: empty partition block");
    for (int v : partition[b]) {
      if (v < 0 || v >= n)
        throw Error("refines: partition element leaves the universe");
      if (block_of[v] != -1) throw Error("refines: partition blocks overlap");
      block_of[v] = (int)b;
    }
  }
  for (int v = 0; v < n; ++v)
    if (block_of[v] == -1)
      throw Error("refines: partition does not cover the universe");

  std::vector<int> fiber_block(m.target().size, -1);
  for (int x = 0; x < n; ++x) {
    int y = m.map()[x];
    if (fiber_block[y] == -1)
      fiber_block[y] = block_of[x];
    else if (fiber_block[y] != block_of[x])
      return false;
  }
  return true;
}

}  // namespace fraisse
