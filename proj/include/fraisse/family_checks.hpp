#pragma once

#include "fraisse/sequence.hpp"

namespace fraisse {

/// Self-contained piece of evidence: the structures involved plus morphisms
/// whose endpoints are indices into `structures`. Every morphism re-verifies
/// under is_epimorphism, and commuting squares re-verify by composition.
struct Witness {
  std::string kind;
  std::vector<int> indices;  // positions in the enclosing enumeration
  std::vector<FinStructure> structures;
  std::vector<std::pair<std::string, Morphism>> morphisms;  // role -> map
};

struct PropertyReport {
  std::string property;
  std::vector<std::pair<std::string, int>> bounds;
  bool verified = false;  // within the stated bounds only
  std::vector<Witness> witnesses;
  std::vector<Witness> failures;
  std::string note;

  std::string status() const {
    return verified ? "verified-within-bounds" : "counterexample";
  }
};

/// Joint projection: every pair of members of size <= pair_bound admits a
/// common member of size <= search_bound mapping onto both. Witness search
/// runs by increasing size, then lexicographic structure order; the first
/// witness wins.
PropertyReport check_jpp(const FamilyEnumerator& fam, int pair_bound,
                         int search_bound);

/// Amalgamation: every cospan phi1: D -> C <- E :phi2 with member sizes
/// <= size_bound is completed by some member F of size <= search_bound and
/// epimorphisms psi1, psi2 with phi1.psi1 = phi2.psi2.
PropertyReport check_ap(const FamilyEnumerator& fam, int size_bound,
                        int search_bound);

/// Bounded fundamental-sequence check: (1) every member of size <=
/// member_bound is the image of some level <= depth; (2) for every n <=
/// depth, members E, F and epimorphisms phi1: F -> E, phi2: level(n) -> E
/// there are m <= factor_depth and psi: level(m) -> F with phi1.psi =
/// phi2 . bond(n..m). Stops at the first failure.
PropertyReport check_fundamental_sequence(const FundamentalSequence& seq,
                                          const FamilyEnumerator& fam, int depth,
                                          int member_bound, int factor_depth);

/// For all n <= m <= depth there is exactly one epimorphism
/// level(m) -> level(n), and it equals the composed bond.
PropertyReport check_rigidity(const FundamentalSequence& seq, int depth);

}  // namespace fraisse
