#include "catfam/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace catfam {

FamilyNode family_root() { return FamilyNode{Sequence({0}), {0}}; }

std::vector<FamilyNode> children(const FamilyNode& x) {
  const Term child_generation = static_cast<Term>(x.generation() + 1);
  std::vector<Term> names = x.sibship;
  names.push_back(child_generation);

  std::vector<FamilyNode> out;
  out.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::vector<Term> full = x.full_name.terms();
    full.push_back(names[i]);
    out.push_back(FamilyNode{
        Sequence(std::move(full)),
        std::vector<Term>(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(i) + 1)});
  }
  return out;
}

namespace {

void walk(const FamilyNode& node, int target,
          const std::function<void(const FamilyNode&)>& visit) {
  if (node.generation() == target) {
    visit(node);
    return;
  }
  for (const FamilyNode& child : children(node)) walk(child, target, visit);
}

}  // namespace

void visit_family_generation(int generation,
                             const std::function<void(const FamilyNode&)>& visit) {
  if (generation < 0) throw std::invalid_argument("negative generation");
  // depth-first at fixed depth: sibship names increase with age, so this is
  // lexicographic order of full names
  walk(family_root(), generation, visit);
}

std::vector<FamilyNode> family_generation(int generation) {
  std::vector<FamilyNode> out;
  visit_family_generation(generation,
                          [&](const FamilyNode& node) { out.push_back(node); });
  return out;
}

bool is_family_member(const Sequence& s) {
  if (s[0] != 0) return false;
  std::vector<Term> sibship{0};
  for (std::size_t i = 1; i < s.size(); ++i) {
    // legal names at step i are the sibship followed by i itself, a
    // strictly increasing list; keeping the prefix up to the match gives
    // the next sibship
    const Term wanted = s[i];
    if (wanted == i) {
      sibship.push_back(wanted);
      continue;
    }
    const auto it = std::lower_bound(sibship.begin(), sibship.end(), wanted);
    if (it == sibship.end() || *it != wanted) return false;
    sibship.erase(it + 1, sibship.end());
  }
  return true;
}

std::uint64_t NameDistribution::total() const {
  std::uint64_t sum = 0;
  for (std::uint64_t c : counts) sum += c;
  return sum;
}

NameDistribution name_distribution(int generation) {
  NameDistribution dist{generation,
                        std::vector<std::uint64_t>(static_cast<std::size_t>(generation) + 1, 0)};
  visit_family_generation(generation,
                          [&](const FamilyNode& node) { ++dist.counts[node.name()]; });
  return dist;
}

}  // namespace catfam
