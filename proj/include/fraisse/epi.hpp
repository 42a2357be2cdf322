#pragma once

#include <cstddef>
#include <optional>

#include "fraisse/morphism.hpp"

namespace fraisse {

/// True iff m is surjective and carries every relation exactly onto its
/// target interpretation: r^B equals the coordinatewise image of r^A.
bool is_epimorphism(const Morphism& m);

/// Bijective epimorphism check.
bool is_isomorphism(const Morphism& m);

struct EnumOptions {
  /// Stop after this many results; 0 means enumerate everything.
  std::size_t max_results = 0;
  /// Emit only the lexicographically least map of each orbit under
  /// post-composition with target automorphisms.
  bool up_to_target_automorphisms = false;
  /// Optional per-source-element candidate lists (each sorted ascending);
  /// empty means every target element is allowed everywhere.
  std::vector<std::vector<int>> allowed;
};

/// All epimorphisms source -> target in lexicographic map order.
/// Backtracking over source elements in increasing order with forward
/// image pruning, unary counting pruning and surjectivity counting.
std::vector<Morphism> enumerate_epimorphisms(const FinStructure& a,
                                             const FinStructure& b,
                                             const EnumOptions& opt = {});

/// Epimorphisms a -> a; on a finite structure these are exactly the
/// automorphisms.
std::vector<Morphism> enumerate_automorphisms(const FinStructure& a);

struct EpiClassification {
  enum class Kind { none, unique, multiple };
  Kind kind = Kind::none;
  std::optional<Morphism> witness;  // set when kind == unique
  std::size_t count = 0;
};

EpiClassification unique_epimorphism(const FinStructure& a, const FinStructure& b);

}  // namespace fraisse
