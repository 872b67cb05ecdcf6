#include "fca/descmap.hpp"

#include <algorithm>
#include <unordered_set>

#include "fca/errors.hpp"

namespace fca {

namespace {

// Bit 5 is the most significant so that comparing codes compares flag vectors
// lexicographically in column order.
unsigned encode(const CharFlags& f) {
  return (unsigned{f.is_generator} << 5) | (unsigned{f.is_intent} << 4) | (unsigned{f.is_key} << 3) |
         (unsigned{f.is_passkey} << 2) | (unsigned{f.is_pseudo_intent} << 1) | unsigned{f.is_proper_premise};
}

CharFlags decode(unsigned code) {
  CharFlags f;
  f.is_generator = (code >> 5) & 1u;
  f.is_intent = (code >> 4) & 1u;
  f.is_key = (code >> 3) & 1u;
  f.is_passkey = (code >> 2) & 1u;
  f.is_pseudo_intent = (code >> 1) & 1u;
  f.is_proper_premise = code & 1u;
  return f;
}

using SetIndex = std::unordered_set<AttrSet>;

SetIndex index_of(const std::vector<AttrSet>& sets) { return SetIndex(sets.begin(), sets.end()); }

}  // namespace

void build_descriptions_context(const FormalContext& ctx, const DescriptionSink& sink) {
  if (ctx.num_attributes() > kMaxExhaustiveAttributes)
    throw CapacityError("descriptions context over 2^" + std::to_string(ctx.num_attributes()) +
                        " subsets exceeds the limit of 2^" + std::to_string(kMaxExhaustiveAttributes));
  build_descriptions_context(ctx, enumerate_all(ctx), sink);
}

void build_descriptions_context(const FormalContext& ctx, const CharacteristicSets& sets,
                                const DescriptionSink& sink) {
  const std::size_t n = ctx.num_attributes();
  if (n > kMaxExhaustiveAttributes)
    throw CapacityError("descriptions context over 2^" + std::to_string(n) + " subsets exceeds the limit of 2^" +
                        std::to_string(kMaxExhaustiveAttributes));
  const SetIndex intents = index_of(sets.intents);
  const SetIndex pseudo = index_of(sets.pseudo_intents);
  const SetIndex keys = index_of(sets.keys);
  const SetIndex passkeys = index_of(sets.passkeys);
  const SetIndex premises = index_of(sets.proper_premises);

  // Walk ranks 0 .. 2^n - 1 with attribute 0 as the high bit, toggling bits
  // incrementally instead of rebuilding each subset.
  const std::uint64_t total = std::uint64_t{1} << n;
  AttrSet current;
  for (std::uint64_t r = 0; r < total; ++r) {
    if (r > 0) {
      const std::uint64_t flipped = r ^ (r - 1);
      for (std::size_t b = 0; b < n && ((flipped >> b) & 1u); ++b) {
        const std::size_t attr = n - 1 - b;
        if ((r >> b) & 1u)
          current.set(attr);
        else
          current.reset(attr);
      }
    }
    CharFlags f;
    f.is_intent = intents.contains(current);
    f.is_pseudo_intent = pseudo.contains(current);
    f.is_key = keys.contains(current);
    f.is_passkey = f.is_key && passkeys.contains(current);
    f.is_proper_premise = f.is_key && premises.contains(current);
    sink(current, f);
  }
}

void DescriptionGrouper::add(const CharFlags& flags, std::uint64_t count) { counts_[encode(flags)] += count; }

void DescriptionGrouper::merge(const DescriptionGrouper& other) {
  for (const auto& [code, count] : other.counts_) counts_[code] += count;
}

std::vector<DescriptionRow> DescriptionGrouper::rows() const {
  std::vector<DescriptionRow> out;
  for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) {
    if (it->second > 0) out.push_back({decode(it->first), it->second});
  }
  return out;
}

std::uint64_t DescriptionGrouper::total() const {
  std::uint64_t t = 0;
  for (const auto& [code, count] : counts_) t += count;
  return t;
}

std::vector<DescriptionRow> group_descriptions(const FormalContext& ctx) {
  DescriptionGrouper g;
  build_descriptions_context(ctx, [&](const AttrSet&, const CharFlags& f) { g.add(f); });
  return g.rows();
}

std::vector<DescriptionRow> summarize_descriptions(const FormalContext& ctx, const CharacteristicSets& sets) {
  const std::size_t n = ctx.num_attributes();
  if (n > 63) throw CapacityError("2^" + std::to_string(n) + " descriptions do not fit a 64-bit count");
  std::unordered_map<AttrSet, CharFlags> flagged;
  for (const auto& s : sets.intents) flagged[s].is_intent = true;
  for (const auto& s : sets.pseudo_intents) flagged[s].is_pseudo_intent = true;
  for (const auto& s : sets.keys) flagged[s].is_key = true;
  for (const auto& s : sets.passkeys) flagged[s].is_passkey = true;
  for (const auto& s : sets.proper_premises) flagged[s].is_proper_premise = true;

  DescriptionGrouper g;
  for (const auto& [set, flags] : flagged) g.add(flags);
  g.add(CharFlags{}, (std::uint64_t{1} << n) - flagged.size());
  return g.rows();
}

const std::array<std::string_view, 9>& description_columns() {
  static const std::array<std::string_view, 9> columns{
      "is generator", "is closed descr",   "is minimal gen", "is minimum gen", "is pseudo intent",
      "is proper premise", "is key",       "is passkey",     "is intent"};
  return columns;
}

namespace {

std::array<bool, 9> columns_of(const CharFlags& f) {
  return {f.is_generator, f.is_intent, f.is_key,     f.is_passkey, f.is_pseudo_intent,
          f.is_proper_premise, f.is_key, f.is_passkey, f.is_intent};
}

}  // namespace

FormalContext export_description_lattice_context(const std::vector<DescriptionRow>& rows) {
  std::vector<std::string> objects;
  std::vector<AttrSet> incidence;
  std::unordered_set<std::string> used;
  for (const auto& row : rows) {
    std::string name = std::to_string(row.count);
    // Equal counts get a numeric suffix so object names stay unique.
    for (int k = 2; used.contains(name); ++k) name = std::to_string(row.count) + "_" + std::to_string(k);
    used.insert(name);
    objects.push_back(name);
    const auto cols = columns_of(row.flags);
    AttrSet r;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (cols[c]) r.set(c);
    incidence.push_back(r);
  }
  std::vector<std::string> attributes(description_columns().begin(), description_columns().end());
  return FormalContext(std::move(objects), std::move(attributes), std::move(incidence));
}

std::string write_description_csv(const std::vector<DescriptionRow>& rows) {
  std::string out = "descriptions";
  for (auto c : description_columns()) out += "," + std::string(c);
  out += "\n";
  for (const auto& row : rows) {
    out += std::to_string(row.count);
    for (bool b : columns_of(row.flags)) out += b ? ",x" : ",";
    out += "\n";
  }
  return out;
}

}  // namespace fca
