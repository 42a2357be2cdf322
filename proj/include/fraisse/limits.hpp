#pragma once

#include "fraisse/sequence.hpp"

namespace fraisse {

enum class LevelProperty {
  reflexive,
  symmetric,
  antisymmetric,
  transitive,
  total,
  has_first,
  has_last,
  connected,
};

LevelProperty parse_level_property(const std::string& name);
std::string to_string(LevelProperty p);

/// Evaluates the property for the named binary relation of s.
/// Throws Error when the symbol is missing or not binary.
bool check_level_property(const FinStructure& s, const std::string& rel,
                          LevelProperty p);

/// Certificate that a property holds at every level 0..depth, with a plain
/// statement of what levelwise validity yields for the inverse limit.
struct PropertyCertificate {
  std::string relation;
  std::string property;
  int depth = 0;
  bool certified = false;
  int failing_level = -1;  // -1 when certified
  std::string claim;
};

PropertyCertificate certify(const FundamentalSequence& seq, const std::string& rel,
                            LevelProperty p, int depth);

/// Finite approximant of the quotient space: vertices are the level's
/// elements (merged along the sequence's vertex classes), edges the
/// symmetrized distinguished relation minus the diagonal. `loops` records
/// whether the relation contains the full diagonal at this level.
struct QuotientGraph {
  int level = 0;
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
  bool loops = false;
};

QuotientGraph quotient_graph(const FundamentalSequence& seq, int n);

/// True when the composed bond level(m) -> level(n) descends to a vertex- and
/// edge-surjective graph morphism of the quotient approximants.
bool quotient_coherence(const FundamentalSequence& seq, int n, int m);

enum class GraphFormat { dot, json };

std::string export_graph(const QuotientGraph& g, GraphFormat format);

}  // namespace fraisse
