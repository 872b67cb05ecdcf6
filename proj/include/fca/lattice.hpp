#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "fca/attr_set.hpp"
#include "fca/context.hpp"

namespace fca {

struct Concept {
  ObjSet extent;
  AttrSet intent;
};

// The concept lattice represented by its intents, kept in lectic order.
// Concept i lies below concept j iff intent i strictly contains intent j.
class ConceptLattice {
 public:
  ConceptLattice() = default;

  std::size_t size() const { return intents_.size(); }
  const std::vector<AttrSet>& intents() const { return intents_; }
  const AttrSet& intent(std::size_t i) const { return intents_[i]; }

  // Position of an intent, or size() when absent.
  std::size_t find(const AttrSet& intent) const;
  bool contains(const AttrSet& intent) const { return find(intent) != size(); }

  // Concept i below concept j (smaller extent, larger intent).
  bool less(std::size_t i, std::size_t j) const { return intents_[j].proper_subset_of(intents_[i]); }
  bool comparable(std::size_t i, std::size_t j) const { return less(i, j) || less(j, i); }

  // Smallest and largest intents: closure(∅) and M''.
  std::size_t top() const;
  std::size_t bottom() const;

  Concept concept_at(const FormalContext& ctx, std::size_t i) const { return {extent(ctx, intents_[i]), intents_[i]}; }

 private:
  friend ConceptLattice build_lattice(std::vector<AttrSet> intents);

  std::vector<AttrSet> intents_;
  std::unordered_map<AttrSet, std::size_t> index_;
};

// Throws InputError on duplicate intents.
ConceptLattice build_lattice(std::vector<AttrSet> intents);

// Raw counts behind the indices, over unordered pairs of distinct concepts.
struct PairCounts {
  std::size_t pairs = 0;
  std::size_t comparable = 0;
  std::size_t union_closed = 0;
};

PairCounts count_pairs(const ConceptLattice& lat);

// Comparable pairs over all unordered pairs; 1 when |L| <= 1.
double linearity(const ConceptLattice& lat);
// Pairs whose intent union is again an intent, over all unordered pairs;
// 1 when |L| <= 1.
double distributivity(const ConceptLattice& lat);

}  // namespace fca
