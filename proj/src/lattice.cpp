#include "fca/lattice.hpp"

#include <algorithm>

#include "fca/errors.hpp"

namespace fca {

std::size_t ConceptLattice::find(const AttrSet& intent) const {
  auto it = index_.find(intent);
  return it == index_.end() ? size() : it->second;
}

std::size_t ConceptLattice::top() const {
  // The top intent is contained in every other one, so it has the fewest
  // attributes; ties are impossible among distinct comparable sets.
  return static_cast<std::size_t>(std::min_element(intents_.begin(), intents_.end(),
                                                   [](const AttrSet& a, const AttrSet& b) {
                                                     return a.count() < b.count();
                                                   }) -
                                  intents_.begin());
}

std::size_t ConceptLattice::bottom() const {
  return static_cast<std::size_t>(std::max_element(intents_.begin(), intents_.end(),
                                                   [](const AttrSet& a, const AttrSet& b) {
                                                     return a.count() < b.count();
                                                   }) -
                                  intents_.begin());
}

ConceptLattice build_lattice(std::vector<AttrSet> intents) {
  ConceptLattice lat;
  std::sort(intents.begin(), intents.end(), LecticLess{});
  lat.index_.reserve(intents.size());
  for (std::size_t i = 0; i < intents.size(); ++i) {
    if (!lat.index_.emplace(intents[i], i).second) throw InputError("duplicate intent in lattice input");
  }
  lat.intents_ = std::move(intents);
  return lat;
}

PairCounts count_pairs(const ConceptLattice& lat) {
  PairCounts c;
  const std::size_t n = lat.size();
  c.pairs = n < 2 ? 0 : n * (n - 1) / 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const AttrSet& a = lat.intent(i);
      const AttrSet& b = lat.intent(j);
      if (a.subset_of(b) || b.subset_of(a)) {
        // The union of comparable intents is the larger one.
        ++c.comparable;
        ++c.union_closed;
      } else if (lat.contains(a | b)) {
        ++c.union_closed;
      }
    }
  }
  return c;
}

double linearity(const ConceptLattice& lat) {
  const auto c = count_pairs(lat);
  return c.pairs == 0 ? 1.0 : static_cast<double>(c.comparable) / static_cast<double>(c.pairs);
}

double distributivity(const ConceptLattice& lat) {
  const auto c = count_pairs(lat);
  return c.pairs == 0 ? 1.0 : static_cast<double>(c.union_closed) / static_cast<double>(c.pairs);
}

}  // namespace fca
