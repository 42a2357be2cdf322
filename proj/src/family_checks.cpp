#include "fraisse/family_checks.hpp"

#include <algorithm>

namespace fraisse {

namespace {

const char* kBoundedNote = "verified within the stated bounds only";

std::vector<FinStructure> search_pool(const FamilyEnumerator& fam,
                                      int search_bound) {
  auto pool = fam.members_up_to(search_bound);
  std::stable_sort(pool.begin(), pool.end(), structure_less);
  return pool;
}

/// First psi: F -> D with phi1 . psi = rho, found by constraining every
/// element to the fiber of its required image.
std::optional<Morphism> find_commuting(const FinStructure& f,
                                       const FinStructure& d,
                                       const std::vector<int>& phi1,
                                       const std::vector<int>& rho) {
  // phi1 maps d onto the shared target; rho prescribes phi1 . psi.
  std::vector<std::vector<int>> fiber_of;
  for (size_t x = 0; x < phi1.size(); ++x) {
    if ((size_t)phi1[x] >= fiber_of.size()) fiber_of.resize(phi1[x] + 1);
    fiber_of[phi1[x]].push_back((int)x);
  }
  EnumOptions opt;
  opt.max_results = 1;
  opt.allowed.resize(f.size);
  for (int x = 0; x < f.size; ++x) {
    if ((size_t)rho[x] >= fiber_of.size()) return std::nullopt;
    opt.allowed[x] = fiber_of[rho[x]];
  }
  auto found = enumerate_epimorphisms(f, d, opt);
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace

PropertyReport check_jpp(const FamilyEnumerator& fam, int pair_bound,
                         int search_bound) {
  PropertyReport rep;
  rep.property = "joint-projection";
  rep.bounds = {{"pair_bound", pair_bound}, {"search_bound", search_bound}};
  rep.note = kBoundedNote;
  rep.verified = true;

  auto members = fam.members_up_to(pair_bound);
  auto pool = search_pool(fam, search_bound);

  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i; j < members.size(); ++j) {
      const auto& d = members[i];
      const auto& e = members[j];
      bool found = false;
      for (const auto& f : pool) {
        EnumOptions first_only;
        first_only.max_results = 1;
        auto onto_d = enumerate_epimorphisms(f, d, first_only);
        if (onto_d.empty()) continue;
        auto onto_e = enumerate_epimorphisms(f, e, first_only);
        if (onto_e.empty()) continue;
        Witness w;
        w.kind = "jpp-pair";
        w.indices = {(int)i, (int)j};
        w.structures = {d, e, f};
        w.morphisms = {{"onto_first", onto_d.front()}, {"onto_second", onto_e.front()}};
        rep.witnesses.push_back(std::move(w));
        found = true;
        break;
      }
      if (!found) {
        rep.verified = false;
        Witness w;
        w.kind = "jpp-pair-uncovered";
        w.indices = {(int)i, (int)j};
        w.structures = {d, e};
        rep.failures.push_back(std::move(w));
        return rep;
      }
    }
  return rep;
}

PropertyReport check_ap(const FamilyEnumerator& fam, int size_bound,
                        int search_bound) {
  PropertyReport rep;
  rep.property = "amalgamation";
  rep.bounds = {{"size_bound", size_bound}, {"search_bound", search_bound}};
  rep.note = kBoundedNote;
  rep.verified = true;

  auto members = fam.members_up_to(size_bound);
  auto pool = search_pool(fam, search_bound);

  for (size_t ci = 0; ci < members.size(); ++ci)
    for (size_t di = 0; di < members.size(); ++di)
      for (size_t ei = 0; ei < members.size(); ++ei) {
        const auto& c = members[ci];
        const auto& d = members[di];
        const auto& e = members[ei];
        auto phis1 = enumerate_epimorphisms(d, c);
        if (phis1.empty()) continue;
        auto phis2 = enumerate_epimorphisms(e, c);
        if (phis2.empty()) continue;
        for (size_t p1 = 0; p1 < phis1.size(); ++p1)
          for (size_t p2 = 0; p2 < phis2.size(); ++p2) {
            bool found = false;
            for (const auto& f : pool) {
              for (const auto& psi1 : enumerate_epimorphisms(f, d)) {
                // rho(x) = phi1(psi1(x)) pins psi2 to fibers of phi2.
                std::vector<int> rho(f.size);
                for (int x = 0; x < f.size; ++x)
                  rho[x] = phis1[p1].map()[psi1.map()[x]];
                auto psi2 = find_commuting(f, e, phis2[p2].map(), rho);
                if (!psi2) continue;
                Witness w;
                w.kind = "ap-square";
                w.indices = {(int)ci, (int)di, (int)ei, (int)p1, (int)p2};
                w.structures = {c, d, e, f};
                w.morphisms = {{"phi1", phis1[p1]},
                               {"phi2", phis2[p2]},
                               {"psi1", psi1},
                               {"psi2", *psi2}};
                rep.witnesses.push_back(std::move(w));
                found = true;
                break;
              }
              if (found) break;
            }
            if (!found) {
              rep.verified = false;
              Witness w;
              w.kind = "ap-square-unamalgamated";
              w.indices = {(int)ci, (int)di, (int)ei, (int)p1, (int)p2};
              w.structures = {c, d, e};
              w.morphisms = {{"phi1", phis1[p1]}, {"phi2", phis2[p2]}};
              rep.failures.push_back(std::move(w));
              return rep;
            }
          }
      }
  return rep;
}

PropertyReport check_fundamental_sequence(const FundamentalSequence& seq,
                                          const FamilyEnumerator& fam, int depth,
                                          int member_bound, int factor_depth) {
  PropertyReport rep;
  rep.property = "fundamental-sequence";
  rep.bounds = {{"depth", depth},
                {"member_bound", member_bound},
                {"factor_depth", factor_depth}};
  rep.note = kBoundedNote;
  rep.verified = true;

  auto members = fam.members_up_to(member_bound);

  // Condition 1: cofinality over the bounded members.
  for (size_t mi = 0; mi < members.size(); ++mi) {
    const auto& d = members[mi];
    bool reached = false;
    for (int n = 0; n <= depth && !reached; ++n) {
      EnumOptions first_only;
      first_only.max_results = 1;
      auto onto = enumerate_epimorphisms(seq.level(n), d, first_only);
      if (!onto.empty()) {
        Witness w;
        w.kind = "cofinal-member";
        w.indices = {(int)mi, n};
        w.structures = {d, seq.level(n)};
        w.morphisms = {{"onto_member", onto.front()}};
        rep.witnesses.push_back(std::move(w));
        reached = true;
      }
    }
    if (!reached) {
      rep.verified = false;
      Witness w;
      w.kind = "unreachable-member";
      w.indices = {(int)mi};
      w.structures = {d};
      rep.failures.push_back(std::move(w));
      return rep;
    }
  }

  // Condition 2: factorization of cospans through deeper levels.
  for (int n = 0; n <= depth; ++n) {
    FinStructure level_n = seq.level(n);
    for (size_t ei = 0; ei < members.size(); ++ei)
      for (size_t fi = 0; fi < members.size(); ++fi) {
        const auto& e = members[ei];
        const auto& f = members[fi];
        auto phis1 = enumerate_epimorphisms(f, e);
        if (phis1.empty()) continue;
        auto phis2 = enumerate_epimorphisms(level_n, e);
        for (size_t p1 = 0; p1 < phis1.size(); ++p1)
          for (size_t p2 = 0; p2 < phis2.size(); ++p2) {
            bool found = false;
            for (int m = n; m <= factor_depth && !found; ++m) {
              Morphism pi = seq.bond_compose(n, m);
              std::vector<int> rho(pi.map().size());
              for (size_t x = 0; x < rho.size(); ++x)
                rho[x] = phis2[p2].map()[pi.map()[x]];
              auto psi = find_commuting(pi.source(), f, phis1[p1].map(), rho);
              if (psi) {
                Witness w;
                w.kind = "factorized-square";
                w.indices = {n, (int)ei, (int)fi, (int)p1, (int)p2, m};
                w.structures = {e, f, level_n, pi.source()};
                w.morphisms = {{"phi1", phis1[p1]},
                               {"phi2", phis2[p2]},
                               {"psi", *psi},
                               {"bond", pi}};
                rep.witnesses.push_back(std::move(w));
                found = true;
              }
            }
            if (!found) {
              rep.verified = false;
              Witness w;
              w.kind = "unfactorable-square";
              w.indices = {n, (int)ei, (int)fi, (int)p1, (int)p2};
              w.structures = {e, f, level_n};
              w.morphisms = {{"phi1", phis1[p1]}, {"phi2", phis2[p2]}};
              rep.failures.push_back(std::move(w));
              return rep;
            }
          }
      }
  }
  return rep;
}

PropertyReport check_rigidity(const FundamentalSequence& seq, int depth) {
  PropertyReport rep;
  rep.property = "rigidity";
  rep.bounds = {{"depth", depth}};
  rep.verified = true;

  for (int n = 0; n <= depth; ++n)
    for (int m = n; m <= depth; ++m) {
      auto cls = unique_epimorphism(seq.level(m), seq.level(n));
      Morphism pi = seq.bond_compose(n, m);
      if (cls.kind == EpiClassification::Kind::unique &&
          cls.witness->map() == pi.map()) {
        Witness w;
        w.kind = "unique-bond";
        w.indices = {n, m};
        w.structures = {seq.level(n), seq.level(m)};
        w.morphisms = {{"bond", pi}};
        rep.witnesses.push_back(std::move(w));
        continue;
      }
      rep.verified = false;
      Witness w;
      w.structures = {seq.level(n), seq.level(m)};
      w.indices = {n, m};
      if (cls.kind == EpiClassification::Kind::none) {
        w.kind = "rigidity-no-epimorphism";
      } else if (cls.kind == EpiClassification::Kind::multiple) {
        w.kind = "rigidity-multiple";
        auto all = enumerate_epimorphisms(seq.level(m), seq.level(n));
        for (size_t i = 0; i < all.size() && i < 2; ++i)
          w.morphisms.push_back({"epi" + std::to_string(i + 1), all[i]});
      } else {
        w.kind = "rigidity-bond-mismatch";
        w.morphisms = {{"unique_epi", *cls.witness}, {"bond", pi}};
      }
      rep.failures.push_back(std::move(w));
      return rep;
    }
  rep.note =
      "unique bonding epimorphisms at every checked pair of levels; pairwise "
      "uniqueness forces the factorization property of a fundamental sequence "
      "within the checked depth";
  return rep;
}

}  // namespace fraisse
