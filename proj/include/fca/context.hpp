#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fca/attr_set.hpp"

namespace fca {

// A binary formal context (G, M, I). Immutable after construction; row g holds
// the attributes of object g, and the per-attribute columns are cached so that
// extents can be computed by column intersection.
class FormalContext {
 public:
  FormalContext() = default;

  // Throws InputError on duplicate names, a row/name count mismatch or a row
  // bit outside the attribute range; CapacityError if |M| exceeds
  // AttrSet::kCapacity.
  FormalContext(std::vector<std::string> object_names, std::vector<std::string> attribute_names,
                std::vector<AttrSet> rows);

  std::size_t num_objects() const { return rows_.size(); }
  std::size_t num_attributes() const { return attribute_names_.size(); }

  const std::vector<std::string>& object_names() const { return object_names_; }
  const std::vector<std::string>& attribute_names() const { return attribute_names_; }
  const std::vector<AttrSet>& rows() const { return rows_; }
  const AttrSet& row(std::size_t g) const { return rows_[g]; }
  const ObjSet& column(std::size_t m) const { return columns_[m]; }
  bool incident(std::size_t g, std::size_t m) const { return rows_[g].test(m); }

  // M as an AttrSet.
  AttrSet all_attributes() const { return AttrSet::full(num_attributes()); }

  std::size_t cross_count() const;
  double density() const;

  // "{a, d}" using attribute names.
  std::string format(const AttrSet& s) const;
  // Inverse of format() for a list of names; throws InputError on unknown names.
  AttrSet attrs(const std::vector<std::string>& names) const;

  friend bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.object_names_ == b.object_names_ && a.attribute_names_ == b.attribute_names_ &&
           a.rows_ == b.rows_;
  }

 private:
  std::vector<std::string> object_names_;
  std::vector<std::string> attribute_names_;
  std::vector<AttrSet> rows_;
  std::vector<ObjSet> columns_;
};

// B' : objects whose rows contain every attribute of B. extent(∅) = G.
ObjSet extent(const FormalContext& ctx, const AttrSet& attrs);

// A' : attributes shared by every object of A. intent_of(∅) = M.
AttrSet intent_of(const FormalContext& ctx, const ObjSet& objects);

// B''. Computed in one pass over the rows without materializing B'.
AttrSet closure(const FormalContext& ctx, const AttrSet& attrs);

// |B'|
std::size_t support(const FormalContext& ctx, const AttrSet& attrs);

struct ClarifiedContext {
  FormalContext context;
  // multiplicities[i] = number of original rows that kept row i stands for.
  std::vector<std::size_t> multiplicities;
  // Names of all original objects merged into kept row i, first one first.
  std::vector<std::vector<std::string>> merged_names;
};

// Merge identical rows, keeping the first occurrence's name and position order.
ClarifiedContext clarify_rows(const FormalContext& ctx);

// Burmeister CXT. Parsing throws InputError on any format violation.
FormalContext parse_burmeister(std::string_view text);
std::string write_burmeister(const FormalContext& ctx);

// Dense 0/1 CSV: header row `id,<attr>...`, then one row per object. The first
// `label_columns` columns are object labels (the first one names the object);
// only the first `max_attrs` data columns are kept when given.
FormalContext parse_dense_csv(std::string_view text, std::optional<std::size_t> max_attrs = std::nullopt,
                              std::size_t label_columns = 1);
std::string write_dense_csv(const FormalContext& ctx);

}  // namespace fca
