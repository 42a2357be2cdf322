#include "fraisse/sequence.hpp"

#include <map>
#include <mutex>

namespace fraisse {

std::vector<FinStructure> FamilyEnumerator::members_up_to(int size_bound) const {
  std::vector<FinStructure> out;
  if (member_count) {
    for (int i = 0; i < *member_count; ++i) {
      FinStructure s = member(i);
      if (s.size <= size_bound) out.push_back(std::move(s));
    }
  } else {
    for (int i = 0;; ++i) {
      FinStructure s = member(i);
      if (s.size > size_bound) break;
      out.push_back(std::move(s));
    }
  }
  return out;
}

struct FundamentalSequence::Impl {
  std::string name;
  LevelFn level_fn;
  BondFn bond_fn;
  std::optional<int> max_level;
  ClassFn class_fn;

  std::mutex mu;
  std::map<int, std::shared_ptr<const FinStructure>> levels;
  std::map<int, std::vector<int>> bonds;
};

FundamentalSequence::FundamentalSequence(std::string name, LevelFn level,
                                         BondFn bond, std::optional<int> max_level,
                                         ClassFn classes)
    : impl_(std::make_shared<Impl>()) {
  impl_->name = std::move(name);
  impl_->level_fn = std::move(level);
  impl_->bond_fn = std::move(bond);
  impl_->max_level = max_level;
  impl_->class_fn = std::move(classes);
}

const std::string& FundamentalSequence::name() const { return impl_->name; }

std::optional<int> FundamentalSequence::max_level() const {
  return impl_->max_level;
}

std::shared_ptr<const FinStructure> FundamentalSequence::level_ptr(int n) const {
  if (!impl_) throw Error("sequence: empty");
  if (n < 0) throw Error("sequence: negative level");
  if (impl_->max_level && n > *impl_->max_level)
    throw Error("sequence " + impl_->name + ": level " + std::to_string(n) +
                " beyond available depth " + std::to_string(*impl_->max_level));
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->levels.find(n);
    if (it != impl_->levels.end()) return it->second;
  }
  auto built = std::make_shared<const FinStructure>(impl_->level_fn(n));
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto [it, inserted] = impl_->levels.emplace(n, built);
  (void)inserted;
  return it->second;
}

FinStructure FundamentalSequence::level(int n) const { return *level_ptr(n); }

Morphism FundamentalSequence::bond(int n) const {
  auto from = level_ptr(n + 1);
  auto to = level_ptr(n);
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->bonds.find(n);
    if (it != impl_->bonds.end()) return Morphism(from, to, it->second);
  }
  std::vector<int> map = impl_->bond_fn(n, *from, *to);
  Morphism m(from, to, map);
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->bonds.emplace(n, std::move(map));
  return m;
}

Morphism FundamentalSequence::bond_compose(int n, int m) const {
  if (n > m) throw Error("bond_compose: expected n <= m");
  if (n == m) {
    auto l = level_ptr(n);
    std::vector<int> id(l->size);
    for (int i = 0; i < l->size; ++i) id[i] = i;
    return Morphism(l, l, std::move(id));
  }
  Morphism acc = bond(m - 1);
  for (int i = m - 2; i >= n; --i) acc = compose(acc, bond(i));
  return acc;
}

std::vector<int> FundamentalSequence::vertex_classes(int n) const {
  auto l = level_ptr(n);
  std::vector<int> raw;
  if (impl_->class_fn)
    raw = impl_->class_fn(n, *l);
  else {
    raw.resize(l->size);
    for (int i = 0; i < l->size; ++i) raw[i] = i;
  }
  if ((int)raw.size() != l->size)
    throw Error("sequence: vertex class list has wrong length");
  for (int v : raw)
    if (v < 0 || v >= l->size)
      throw Error("sequence: vertex class id out of range");
  // Compact ids ordered by least element.
  std::vector<int> remap(raw.size(), -1);
  int next = 0;
  std::vector<int> out(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    int& slot = remap[raw[i]];
    if (slot == -1) slot = next++;
    out[i] = slot;
  }
  return out;
}

}  // namespace fraisse
