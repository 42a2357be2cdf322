#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fraisse {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tuples over a universe {0,...,size-1}.
using Tuple = std::vector<int>;

/// Relation interpretations are kept as sorted, duplicate-free tuple vectors.
using TupleSet = std::vector<Tuple>;

TupleSet normalize_tuples(TupleSet tuples);
bool tuple_set_contains(const TupleSet& set, const Tuple& t);

struct RelationSymbol {
  std::string name;
  int arity = 0;

  bool operator==(const RelationSymbol&) const = default;
  bool operator<(const RelationSymbol& o) const {
    return name != o.name ? name < o.name : arity < o.arity;
  }
};

/// Finite relational signature with a distinguished binary symbol.
/// `constants` and `functions` declare pre-relational symbols; they may only
/// be non-empty on inputs destined for relationalize().
struct Signature {
  std::vector<RelationSymbol> relations;
  std::string distinguished = "R";
  std::vector<std::string> constants;
  std::vector<std::pair<std::string, int>> functions;

  const RelationSymbol* find(const std::string& name) const;
  bool operator==(const Signature&) const = default;
};

/// Finite structure; the universe is always {0,...,size-1}.
struct FinStructure {
  Signature sig;
  int size = 0;
  std::map<std::string, TupleSet> interp;

  const TupleSet& rel(const std::string& name) const;
  const TupleSet& distinguished_rel() const { return rel(sig.distinguished); }

  bool operator==(const FinStructure&) const = default;
};

/// Normalizes all tuple sets; use when assembling interpretations by hand.
FinStructure make_structure(Signature sig, int size,
                            std::map<std::string, TupleSet> interp);

/// Deterministic order used when sorting search pools: size first, then a
/// lexicographic comparison of the remaining fields.
bool structure_less(const FinStructure& a, const FinStructure& b);

struct Violation {
  std::string kind;    // signature | size | coverage | unknown-symbol |
                       // arity | range | pre-relational | constant | function
  std::string detail;
};

/// Well-formedness report; an empty result means the structure is valid.
std::vector<Violation> validate(const FinStructure& s);

/// Structure together with constant assignments and total function tables.
/// Table rows are (arguments..., value); the declared arity in `base.sig`
/// counts the arguments only.
struct PartialStructure {
  FinStructure base;
  std::map<std::string, int> constant_values;
  std::map<std::string, TupleSet> function_tables;
};

std::vector<Violation> validate(const PartialStructure& p);

/// Replaces every constant c by a fresh unary relation R_c = {c} and every
/// m-ary function f by its (m+1)-ary graph R_f. Throws Error when the input
/// fails validation.
FinStructure relationalize(const PartialStructure& p);

/// Literal equality of signature, size and interpretation.
bool equal(const FinStructure& a, const FinStructure& b);

}  // namespace fraisse
