#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fca/attr_set.hpp"
#include "fca/context.hpp"

namespace fca {

// Membership of one attribute subset in every characteristic class.
// Aliases: minimal generator = key, minimum generator = passkey,
// closed description = intent.
struct CharFlags {
  bool is_generator = true;  // every subset generates its own closure
  bool is_intent = false;
  bool is_pseudo_intent = false;
  bool is_key = false;
  bool is_passkey = false;
  bool is_proper_premise = false;

  friend bool operator==(const CharFlags&, const CharFlags&) = default;
};

// premise -> conclusion with the two sides disjoint; the conclusion is
// closure(premise) \ premise.
struct Implication {
  AttrSet premise;
  AttrSet conclusion;

  friend bool operator==(const Implication&, const Implication&) = default;
};

enum class CharClass { generator, intent, pseudo_intent, key, passkey, proper_premise };

std::string_view to_string(CharClass c);
// Accepts the names produced by to_string; throws InputError otherwise.
CharClass parse_char_class(std::string_view name);

// Closed sets B'' = B in lectic order (Next Closure).
std::vector<AttrSet> enumerate_intents(const FormalContext& ctx);

// Pseudo-intents in lectic order. Runs Next Closure over the operator that
// closes a set under the implications found so far, applying an implication
// only when its premise is a proper subset; the fixed points of that
// operator are exactly intents ∪ pseudo-intents.
std::vector<AttrSet> enumerate_pseudo_intents(const FormalContext& ctx);

// Duquenne-Guigues basis: one implication P -> P'' \ P per pseudo-intent P.
std::vector<Implication> dg_basis(const FormalContext& ctx);

// Least superset of `attrs` closed under every implication of `basis`.
AttrSet implication_closure(const AttrSet& attrs, std::span<const Implication> basis);

// A ∪ ⋃_{n ∈ A} (A \ {n})'' ≠ A''
bool is_proper_premise(const FormalContext& ctx, const AttrSet& attrs);

// No single-element removal preserves the closure.
bool is_key(const FormalContext& ctx, const AttrSet& attrs);

// All keys, ordered by size and lectically within a size. Generated levelwise:
// a (k+1)-candidate is tested only when all of its k-subsets are keys, and is a
// key iff its support is strictly below the support of every immediate subset.
std::vector<AttrSet> enumerate_keys(const FormalContext& ctx);

// intent -> size of its smallest key
using MinKeySizeIndex = std::unordered_map<AttrSet, std::size_t>;
MinKeySizeIndex min_key_sizes(const FormalContext& ctx, std::span<const AttrSet> keys);

// Keys of minimum cardinality within their closure class, same order as keys.
std::vector<AttrSet> enumerate_passkeys(const FormalContext& ctx);
std::vector<AttrSet> select_passkeys(const FormalContext& ctx, std::span<const AttrSet> keys);

// Proper premises, filtered from the keys (every proper premise is a key).
std::vector<AttrSet> enumerate_proper_premises(const FormalContext& ctx);
std::vector<AttrSet> select_proper_premises(const FormalContext& ctx, std::span<const AttrSet> keys);

// Size of the smallest generator of closure(attrs), by increasing-size search
// over subsets of the closure.
std::size_t min_generator_size(const FormalContext& ctx, const AttrSet& attrs);

// Evaluates every flag for one subset. `pseudo_intents` must be the full,
// lectically ordered output of enumerate_pseudo_intents. The passkey flag uses
// `index` when given and falls back to min_generator_size otherwise.
CharFlags classify(const FormalContext& ctx, const AttrSet& attrs, std::span<const AttrSet> pseudo_intents,
                   const MinKeySizeIndex* index = nullptr);

// Definitional membership scan over all 2^|M| subsets, in lectic order.
// Independent of the enumerators above; used as their oracle.
// Throws CapacityError when |M| > 25.
std::vector<AttrSet> brute_force_class(const FormalContext& ctx, CharClass cls);

// Pseudo-intents by literal recursion over subsets of increasing size. With
// `strict_containment` the condition reads Q'' ⊊ P instead of Q'' ⊆ P.
std::vector<AttrSet> brute_force_pseudo_intents(const FormalContext& ctx, bool strict_containment);

inline constexpr std::size_t kMaxExhaustiveAttributes = 25;

// Which classes to compute in enumerate_all. Passkeys and proper premises pull
// in the keys.
struct ClassSelection {
  bool intents = true;
  bool pseudo_intents = true;
  bool keys = true;
  bool passkeys = true;
  bool proper_premises = true;
};

struct CharacteristicSets {
  std::vector<AttrSet> intents;
  std::vector<AttrSet> pseudo_intents;
  std::vector<AttrSet> keys;
  std::vector<AttrSet> passkeys;
  std::vector<AttrSet> proper_premises;
};

CharacteristicSets enumerate_all(const FormalContext& ctx, const ClassSelection& which = {});

}  // namespace fca
