#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "fraisse/epi.hpp"

namespace fraisse {

/// Deterministic, duplicate-free enumeration of a family of structures over
/// one signature. member(i) must be defined for 0 <= i < member_count, or
/// for all i >= 0 with non-decreasing, unbounded sizes when member_count
/// is absent.
struct FamilyEnumerator {
  std::string name;
  Signature sig;
  std::function<FinStructure(int)> member;
  std::optional<int> member_count;

  /// Every member of size <= size_bound, in enumeration order.
  std::vector<FinStructure> members_up_to(int size_bound) const;
};

/// Inverse sequence D_0 <- D_1 <- ... given by lazily generated levels and
/// bond epimorphisms bond(n): level(n+1) -> level(n). Levels and bonds are
/// memoized; instances share immutable state and are cheap to copy.
class FundamentalSequence {
 public:
  using LevelFn = std::function<FinStructure(int)>;
  /// Receives the already-built endpoint structures.
  using BondFn = std::function<std::vector<int>(int, const FinStructure& from,
                                                const FinStructure& to)>;
  /// Vertex classes used when extracting quotient graphs; identity when
  /// absent. Receives the level structure, returns one class id per element.
  using ClassFn = std::function<std::vector<int>(int, const FinStructure&)>;

  FundamentalSequence() = default;
  FundamentalSequence(std::string name, LevelFn level, BondFn bond,
                      std::optional<int> max_level = {}, ClassFn classes = {});

  const std::string& name() const;
  std::optional<int> max_level() const;

  FinStructure level(int n) const;
  Morphism bond(int n) const;
  /// Composed bond level(m) -> level(n) for n <= m.
  Morphism bond_compose(int n, int m) const;
  /// Compact class ids (0..classes-1), one per element of level(n), ordered
  /// by the least element of each class.
  std::vector<int> vertex_classes(int n) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  std::shared_ptr<const FinStructure> level_ptr(int n) const;
};

}  // namespace fraisse
