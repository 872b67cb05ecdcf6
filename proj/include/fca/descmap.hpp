#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fca/charsets.hpp"
#include "fca/context.hpp"

namespace fca {

// One distinct flag combination of the descriptions context and the number
// of attribute subsets that carry it.
struct DescriptionRow {
  CharFlags flags;
  std::uint64_t count = 0;

  friend bool operator==(const DescriptionRow&, const DescriptionRow&) = default;
};

using DescriptionSink = std::function<void(const AttrSet&, const CharFlags&)>;

// Classifies every subset of M, in lectic order, and hands each record to
// `sink` as it is produced. Throws CapacityError when |M| > 25.
void build_descriptions_context(const FormalContext& ctx, const DescriptionSink& sink);

// Same stream, classified from already enumerated classes.
void build_descriptions_context(const FormalContext& ctx, const CharacteristicSets& sets, const DescriptionSink& sink);

// Accumulates flag combinations. Merging is associative and commutative.
class DescriptionGrouper {
 public:
  void add(const CharFlags& flags, std::uint64_t count = 1);
  void merge(const DescriptionGrouper& other);
  // Rows sorted by descending flag vector, read in column order generator,
  // intent, key, passkey, pseudo-intent, proper premise. This is a linear
  // extension of descending flag-set inclusion; ties cannot occur.
  std::vector<DescriptionRow> rows() const;
  std::uint64_t total() const;

 private:
  std::map<unsigned, std::uint64_t> counts_;
};

std::vector<DescriptionRow> group_descriptions(const FormalContext& ctx);

// Grouped rows computed from the class lists alone: every listed subset is
// counted once under its flags and the remaining subsets form the
// generator-only row, which is never materialized.
std::vector<DescriptionRow> summarize_descriptions(const FormalContext& ctx, const CharacteristicSets& sets);

// Column labels of the description lattice context, alias columns included.
const std::array<std::string_view, 9>& description_columns();

// Objects are the grouped rows, named by their count; attributes are the nine
// description columns.
FormalContext export_description_lattice_context(const std::vector<DescriptionRow>& rows);

// `descriptions,<nine labels>` then one line per row with `x` marks.
std::string write_description_csv(const std::vector<DescriptionRow>& rows);

}  // namespace fca
