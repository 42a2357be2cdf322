#pragma once

#include "fraisse/sequence.hpp"

namespace fraisse {

/// Disjoint sum: fresh unary block predicates P1..Pk, the distinguished
/// relation is the blockwise union, and every other symbol is interpreted
/// inside its own block. Symbols shared by components (same name and arity)
/// are merged blockwise; equal names with different arities are an error.
struct SumStructure {
  FinStructure structure;
  std::vector<FinStructure> components;
  std::vector<int> offsets;                 // block start per component
  std::vector<std::string> block_symbols;   // P name per component
};

SumStructure oplus(const FinStructure& a1, const FinStructure& a2);
SumStructure oplus_many(const std::vector<FinStructure>& components);

/// Blockwise union of epimorphisms: acts as f1 on the first block and f2 on
/// the second.
Morphism oplus_epi(const Morphism& f1, const Morphism& f2);

/// Splits an epimorphism between sums into its component epimorphisms.
/// Throws Error naming a witness element when the map crosses blocks.
std::vector<Morphism> decompose_oplus_epi(const Morphism& f,
                                          const SumStructure& source_sum,
                                          const SumStructure& target_sum);

/// Product: universe pairs in row-major order, the distinguished relation
/// holds conjunctionwise, fresh binary r1/r2 relate pairs with equal first/
/// second coordinate, and a factor's other symbols depend only on its own
/// coordinates. A non-distinguished name occurring in both factors is kept
/// apart with ".1"/".2" suffixes.
struct ProductStructure {
  FinStructure structure;
  FinStructure left, right;
  std::string row_symbol, col_symbol;  // r1, r2
};

ProductStructure otimes(const FinStructure& a, const FinStructure& b);

/// Coordinatewise product map (a,b) |-> (psi(a), theta(b)).
Morphism otimes_epi(const Morphism& psi, const Morphism& theta);

/// Recovers the factor maps of an epimorphism between products.
/// Throws Error with a witnessing pair when the map is not rectangular.
std::pair<Morphism, Morphism> factorize_product_epi(const Morphism& f,
                                                    const ProductStructure& source,
                                                    const ProductStructure& target);

/// Levelwise sum/product sequences; bonds act blockwise / coordinatewise and
/// are verified to be epimorphisms when built.
FundamentalSequence oplus_family(const FundamentalSequence& s1,
                                 const FundamentalSequence& s2);
FundamentalSequence otimes_family(const FundamentalSequence& s1,
                                  const FundamentalSequence& s2);

/// Named anchor elements of a level structure, e.g. the order extrema of a
/// chain. Anchors must be stable under the bonds (checked when levels are
/// built).
using AnchorFn =
    std::function<std::vector<std::pair<std::string, int>>(const FinStructure&)>;

/// Anchors "min" and "max" at the ends of a canonical chain level.
AnchorFn chain_extrema();

struct AnchorRef {
  int component = 0;
  std::string anchor;
};

/// Gluing data: component sequences, their anchor schemes, and the anchor
/// pairs to identify. The identification is closed into an equivalence
/// relation on the anchors.
struct GlueSpec {
  std::vector<FundamentalSequence> components;
  std::vector<AnchorFn> anchors;
  std::vector<std::pair<AnchorRef, AnchorRef>> identified;
};

/// Sequence of levelwise sums carrying a fresh symmetric symbol S: the
/// distinguished relation together with all pairs of identified anchors.
/// S becomes the distinguished symbol, so quotient graphs are taken over it;
/// anchors identified across different components are merged into one
/// quotient vertex, while a pair inside a single component stays an S-edge.
FundamentalSequence identify(const GlueSpec& spec);

struct GraphInput {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // loops and parallel edges allowed
};

/// One arc sequence per edge, endpoints glued according to the incidence of
/// g. For a loop-free g the level-n quotient graph is the 2^n-fold edge
/// subdivision of g.
FundamentalSequence graph_family(const GraphInput& g);

}  // namespace fraisse
