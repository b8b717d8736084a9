#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "catfam/sequence.hpp"

namespace catfam {

// One member of the Catalan family tree. The naming rules need the names of
// a member and all its older siblings, so that list travels with the node;
// it is not recoverable from the full name alone.
struct FamilyNode {
  Sequence full_name;
  // Names of this node and its older siblings, oldest first, own name last.
  std::vector<Term> sibship;

  int generation() const { return full_name.generation(); }
  Term name() const { return full_name.name(); }
  // 0 = oldest sibling.
  std::size_t seniority() const { return sibship.size() - 1; }
  // A sibling of seniority s gets s + 2 children.
  std::size_t child_count() const { return sibship.size() + 1; }
};

// The root: full name (0), sibship [0]. It has two children, named 0 and 1.
FamilyNode family_root();

// The children of x, oldest first. Their names are x's sibship followed by
// their own generation number; child i inherits the first i + 1 of those
// names as its sibship.
std::vector<FamilyNode> children(const FamilyNode& x);

// Visits every generation-n member once, in lexicographic order of full
// names (equal to age order within every sibship), without materializing
// the level.
void visit_family_generation(int generation,
                             const std::function<void(const FamilyNode&)>& visit);

// The whole generation, in the same canonical order. Size is catalan(n+1).
std::vector<FamilyNode> family_generation(int generation);

// Membership by the naming rules alone: every prefix extension must be a
// legal child name. Deliberately not implemented via delta, so delta-
// fixedness stays an independent cross-check.
bool is_family_member(const Sequence& s);

// How many generation-n members carry each name r = 0..n. counts[r] equals
// catalan(r) * catalan(n - r), and the total is the generation size.
struct NameDistribution {
  int generation = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
};

NameDistribution name_distribution(int generation);

}  // namespace catfam
