#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "fraisse/sequence.hpp"

namespace fraisse {

/// Chain(k): universe {0,...,k-1} with the total order `le` and the
/// distinguished reflexive adjacency R = {(i,j) : |i-j| <= 1}.
FinStructure chain(int k);

/// True when s is literally Chain(s.size).
bool is_chain(const FinStructure& s);

/// Arc approximants: level n is Chain(2^n + 1).
FinStructure arc_level(int n);

/// Halving bond k |-> floor(k/2) from arc_level(n+1) onto arc_level(n).
Morphism arc_bond(int n);

/// The doubling sequence of chains with halving bonds.
FundamentalSequence arc_sequence();

/// Sequence with every level Chain(1) and identity bonds.
FundamentalSequence singleton_sequence();

/// Amalgamation witness for two chain epimorphisms phi: B -> A and
/// psi: C -> A sharing the target. D is a chain of size
/// sum_j max(|phi^-1(a_j)|, |psi^-1(a_j)|); theta and rho map the j-th
/// block of D onto the j-th fibers in an increasing way, so that
/// phi.theta = psi.rho.
struct Amalgam {
  FinStructure d;
  Morphism theta;  // D -> B
  Morphism rho;    // D -> C
};
Amalgam arc_amalgamate(const Morphism& phi, const Morphism& psi);

/// Level relations for the Cantor-with-identifications family: two words are
/// related when they admit equivalent extensions. `related` decides that for
/// words of equal length; levels beyond truncation_depth are unavailable
/// because the unary compatibility predicates rho_s stop at that depth.
struct GlueSystem {
  std::string name;
  int truncation_depth = 0;
  std::function<bool(std::string_view, std::string_view)> related;
};

/// The dyadic identification: u ~ u' iff u = u' or {u,u'} = {v01^a, v10^a}.
GlueSystem dyadic_glue(int truncation_depth);

/// Level n: universe 2^n indexed by binary value, distinguished R from the
/// glue system, plus unary rho_s (|s| <= truncation depth) holding on the
/// words compatible with s. Requires n <= truncation depth.
FinStructure cantor_level(const GlueSystem& g, int n);

/// Restriction bond w |-> w restricted to its first n letters.
Morphism cantor_bond(const GlueSystem& g, int n);

FundamentalSequence cantor_sequence(const GlueSystem& g);

/// Reflexivity/symmetry of each level relation and bond compatibility of the
/// supplied glue system, checked for all levels <= depth.
std::vector<Violation> validate_glue_levels(const GlueSystem& g, int depth);

/// All chains, member(i) = Chain(i+1).
FamilyEnumerator chain_family();

/// Single member Chain(1).
FamilyEnumerator singleton_family();

/// Members are the Cantor levels of g: member(i) = cantor_level(g, i).
FamilyEnumerator cantor_family(const GlueSystem& g);

/// Family backed by an explicit list of structures over one signature.
FamilyEnumerator explicit_family(std::string name, std::vector<FinStructure> members);

}  // namespace fraisse
