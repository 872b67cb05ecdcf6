#pragma once

// Shared fixtures and test-only oracles. The oracles here work on plain
// std::vector<bool> incidence tables and std::set<int> attribute sets so that
// they share no code path with the bitset engine they check.

#include <cstdint>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fca/attr_set.hpp"
#include "fca/context.hpp"

namespace fca::test {

inline std::string fixture_path(const std::string& name) { return std::string(FCA_TEST_DATA) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FormalContext load_cxt(const std::string& name) { return parse_burmeister(read_fixture(name)); }

inline FormalContext make_context(const std::vector<std::string>& grid) {
  std::vector<std::string> objects, attributes;
  std::vector<AttrSet> rows;
  const std::size_t n = grid.empty() ? 0 : grid[0].size();
  for (std::size_t m = 0; m < n; ++m) attributes.push_back("m" + std::to_string(m + 1));
  for (std::size_t g = 0; g < grid.size(); ++g) {
    objects.push_back("g" + std::to_string(g + 1));
    AttrSet r;
    for (std::size_t m = 0; m < n; ++m)
      if (grid[g][m] == 'X') r.set(m);
    rows.push_back(r);
  }
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

// Object i holds attributes 0..i; the lattice is a chain of n concepts.
inline FormalContext staircase(std::size_t n) {
  std::vector<std::string> grid(n, std::string(n, '.'));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) grid[i][j] = 'X';
  return make_context(grid);
}

// Identity grid: the nominal scale.
inline FormalContext nominal(std::size_t n) {
  std::vector<std::string> grid(n, std::string(n, '.'));
  for (std::size_t i = 0; i < n; ++i) grid[i][i] = 'X';
  return make_context(grid);
}

// Complement of the identity: every attribute subset is closed.
inline FormalContext boolean_context(std::size_t n) {
  std::vector<std::string> grid(n, std::string(n, 'X'));
  for (std::size_t i = 0; i < n; ++i) grid[i][i] = '.';
  return make_context(grid);
}

inline FormalContext random_context(std::mt19937_64& rng, std::size_t max_objects, std::size_t max_attrs) {
  const std::size_t g = rng() % (max_objects + 1);
  const std::size_t m = rng() % (max_attrs + 1);
  const unsigned density = 15 + static_cast<unsigned>(rng() % 70);  // percent
  std::vector<std::string> grid(g, std::string(m, '.'));
  for (auto& row : grid)
    for (auto& c : row)
      if (rng() % 100 < density) c = 'X';
  if (g == 0) {
    std::vector<std::string> attributes;
    for (std::size_t j = 0; j < m; ++j) attributes.push_back("m" + std::to_string(j + 1));
    return FormalContext({}, std::move(attributes), {});
  }
  return make_context(grid);
}

// ---------------------------------------------------------------------------
// Naive oracles over an explicit incidence table.

using NaiveSet = std::set<int>;

struct NaiveContext {
  int objects = 0;
  int attributes = 0;
  std::vector<std::vector<bool>> incidence;

  explicit NaiveContext(const FormalContext& ctx)
      : objects(static_cast<int>(ctx.num_objects())), attributes(static_cast<int>(ctx.num_attributes())) {
    for (int g = 0; g < objects; ++g) {
      std::vector<bool> row(static_cast<std::size_t>(attributes));
      for (int m = 0; m < attributes; ++m) row[static_cast<std::size_t>(m)] = ctx.incident(g, m);
      incidence.push_back(row);
    }
  }

  NaiveSet closure(const NaiveSet& b) const {
    NaiveSet out;
    for (int m = 0; m < attributes; ++m) {
      bool shared = true;
      for (int g = 0; g < objects && shared; ++g) {
        bool has_all = true;
        for (int x : b)
          if (!incidence[g][x]) has_all = false;
        if (has_all && !incidence[g][m]) shared = false;
      }
      if (shared) out.insert(m);
    }
    return out;
  }

  std::vector<NaiveSet> all_subsets() const {
    std::vector<NaiveSet> out;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << attributes); ++r) {
      NaiveSet s;
      for (int m = 0; m < attributes; ++m)
        if ((r >> m) & 1u) s.insert(m);
      out.push_back(s);
    }
    return out;
  }

  std::vector<NaiveSet> intents() const {
    std::vector<NaiveSet> out;
    for (const auto& s : all_subsets())
      if (closure(s) == s) out.push_back(s);
    return out;
  }
};

inline NaiveSet to_naive(const AttrSet& s) {
  NaiveSet out;
  s.for_each([&](std::size_t m) { out.insert(static_cast<int>(m)); });
  return out;
}

inline std::set<NaiveSet> to_naive(const std::vector<AttrSet>& sets) {
  std::set<NaiveSet> out;
  for (const auto& s : sets) out.insert(to_naive(s));
  return out;
}

inline bool naive_subset(const NaiveSet& a, const NaiveSet& b) {
  for (int x : a)
    if (!b.count(x)) return false;
  return true;
}

// Unordered pairs of distinct intents: {comparable, union-is-intent}.
inline std::pair<std::size_t, std::size_t> naive_pair_counts(const std::vector<NaiveSet>& intents) {
  std::set<NaiveSet> lookup(intents.begin(), intents.end());
  std::size_t comparable = 0, union_closed = 0;
  for (std::size_t i = 0; i < intents.size(); ++i) {
    for (std::size_t j = i + 1; j < intents.size(); ++j) {
      if (naive_subset(intents[i], intents[j]) || naive_subset(intents[j], intents[i])) ++comparable;
      NaiveSet u = intents[i];
      u.insert(intents[j].begin(), intents[j].end());
      if (lookup.count(u)) ++union_closed;
    }
  }
  return {comparable, union_closed};
}

}  // namespace fca::test
