#include "fca/charsets.hpp"

#include <algorithm>
#include <unordered_set>

#include "fca/errors.hpp"

namespace fca {

namespace {

// One step of Next Closure: the lectically next closed set after `current`
// under `close`, or false when `current` is the last one.
template <class Close>
bool next_closure(AttrSet& current, std::size_t n, Close&& close) {
  AttrSet a = current;
  for (std::size_t i = n; i-- > 0;) {
    if (a.test(i)) {
      a.reset(i);
      continue;
    }
    AttrSet candidate = a;
    candidate.set(i);
    candidate = close(candidate);
    if ((candidate - a).prefix(i).empty()) {
      current = candidate;
      return true;
    }
  }
  return false;
}

// Subset with lectic rank r among the subsets of {0..n-1}.
AttrSet subset_from_rank(std::uint64_t r, std::size_t n) {
  AttrSet s;
  for (std::size_t i = 0; i < n; ++i)
    if ((r >> (n - 1 - i)) & 1u) s.set(i);
  return s;
}

void require_exhaustive(const FormalContext& ctx) {
  if (ctx.num_attributes() > kMaxExhaustiveAttributes)
    throw CapacityError("exhaustive scan over 2^" + std::to_string(ctx.num_attributes()) +
                        " subsets exceeds the limit of 2^" + std::to_string(kMaxExhaustiveAttributes));
}

// B'' through the prime operators themselves, for the oracles.
AttrSet prime_closure(const FormalContext& ctx, const AttrSet& b) { return intent_of(ctx, extent(ctx, b)); }

// Closes `start` under implications whose premise is a proper subset of the
// growing set. Fixed points are the intents and pseudo-intents once `basis`
// holds every pseudo-intent lectically below them.
class QuasiClosure {
 public:
  explicit QuasiClosure(const std::vector<Implication>& basis) : basis_(basis) {}

  AttrSet operator()(AttrSet x) {
    applied_.assign(basis_.size(), 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (applied_[k] || !basis_[k].premise.proper_subset_of(x)) continue;
        applied_[k] = 1;
        if (!basis_[k].conclusion.subset_of(x)) {
          x |= basis_[k].conclusion;
          changed = true;
        }
      }
    }
    return x;
  }

 private:
  const std::vector<Implication>& basis_;
  std::vector<char> applied_;
};

}  // namespace

std::string_view to_string(CharClass c) {
  switch (c) {
    case CharClass::generator: return "generator";
    case CharClass::intent: return "intent";
    case CharClass::pseudo_intent: return "pseudo_intent";
    case CharClass::key: return "key";
    case CharClass::passkey: return "passkey";
    case CharClass::proper_premise: return "proper_premise";
  }
  return "unknown";
}

CharClass parse_char_class(std::string_view name) {
  for (auto c : {CharClass::generator, CharClass::intent, CharClass::pseudo_intent, CharClass::key,
                 CharClass::passkey, CharClass::proper_premise}) {
    if (to_string(c) == name) return c;
  }
  throw InputError("unknown characteristic class '" + std::string(name) + "'");
}

std::vector<AttrSet> enumerate_intents(const FormalContext& ctx) {
  const std::size_t n = ctx.num_attributes();
  auto close = [&](const AttrSet& b) { return closure(ctx, b); };
  std::vector<AttrSet> out;
  AttrSet a = close(AttrSet{});
  do {
    out.push_back(a);
  } while (next_closure(a, n, close));
  return out;
}

std::vector<AttrSet> enumerate_pseudo_intents(const FormalContext& ctx) {
  std::vector<AttrSet> out;
  for (const auto& imp : dg_basis(ctx)) out.push_back(imp.premise);
  return out;
}

std::vector<Implication> dg_basis(const FormalContext& ctx) {
  const std::size_t n = ctx.num_attributes();
  const AttrSet top = ctx.all_attributes();
  std::vector<Implication> basis;
  QuasiClosure close(basis);
  AttrSet a;
  while (true) {
    const AttrSet c = closure(ctx, a);
    if (c != a) basis.push_back({a, c - a});
    if (a == top || !next_closure(a, n, close)) break;
  }
  return basis;
}

AttrSet implication_closure(const AttrSet& attrs, std::span<const Implication> basis) {
  AttrSet x = attrs;
  std::vector<char> applied(basis.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (applied[k] || !basis[k].premise.subset_of(x)) continue;
      applied[k] = 1;
      if (!basis[k].conclusion.subset_of(x)) {
        x |= basis[k].conclusion;
        changed = true;
      }
    }
  }
  return x;
}

bool is_proper_premise(const FormalContext& ctx, const AttrSet& attrs) {
  AttrSet reach = attrs;
  attrs.for_each([&](std::size_t m) {
    AttrSet smaller = attrs;
    smaller.reset(m);
    reach |= closure(ctx, smaller);
  });
  return reach != closure(ctx, attrs);
}

bool is_key(const FormalContext& ctx, const AttrSet& attrs) {
  // Removing m keeps the closure iff it keeps the extent, iff it keeps |extent|.
  const std::size_t s = support(ctx, attrs);
  bool key = true;
  attrs.for_each([&](std::size_t m) {
    if (!key) return;
    AttrSet smaller = attrs;
    smaller.reset(m);
    if (support(ctx, smaller) == s) key = false;
  });
  return key;
}

std::vector<AttrSet> enumerate_keys(const FormalContext& ctx) {
  const std::size_t n = ctx.num_attributes();
  struct Entry {
    AttrSet attrs;
    ObjSet ext;
  };
  std::unordered_map<AttrSet, std::size_t> supports;
  std::vector<Entry> level{{AttrSet{}, ObjSet(ctx.num_objects(), true)}};
  supports.emplace(AttrSet{}, ctx.num_objects());
  std::vector<AttrSet> keys{AttrSet{}};

  while (!level.empty()) {
    std::vector<Entry> next;
    for (const auto& [k, ext] : level) {
      const std::size_t start = k.empty() ? 0 : k.last() + 1;
      const std::size_t k_support = ext.count();
      for (std::size_t m = start; m < n; ++m) {
        AttrSet cand = k;
        cand.set(m);
        std::size_t min_sub = k_support;
        bool all_keys = true;
        k.for_each([&](std::size_t x) {
          if (!all_keys) return;
          AttrSet sub = cand;
          sub.reset(x);
          auto it = supports.find(sub);
          if (it == supports.end())
            all_keys = false;
          else
            min_sub = std::min(min_sub, it->second);
        });
        if (!all_keys) continue;
        ObjSet cand_ext = ext & ctx.column(m);
        const std::size_t s = cand_ext.count();
        if (s < min_sub) next.push_back({cand, std::move(cand_ext)});
      }
    }
    std::sort(next.begin(), next.end(), [](const Entry& a, const Entry& b) { return lectic_less(a.attrs, b.attrs); });
    for (const auto& e : next) {
      supports.emplace(e.attrs, e.ext.count());
      keys.push_back(e.attrs);
    }
    level = std::move(next);
  }
  return keys;
}

MinKeySizeIndex min_key_sizes(const FormalContext& ctx, std::span<const AttrSet> keys) {
  MinKeySizeIndex index;
  for (const auto& k : keys) {
    auto [it, inserted] = index.try_emplace(closure(ctx, k), k.count());
    if (!inserted) it->second = std::min(it->second, k.count());
  }
  return index;
}

std::vector<AttrSet> select_passkeys(const FormalContext& ctx, std::span<const AttrSet> keys) {
  const auto index = min_key_sizes(ctx, keys);
  std::vector<AttrSet> out;
  for (const auto& k : keys)
    if (index.at(closure(ctx, k)) == k.count()) out.push_back(k);
  return out;
}

std::vector<AttrSet> enumerate_passkeys(const FormalContext& ctx) { return select_passkeys(ctx, enumerate_keys(ctx)); }

std::vector<AttrSet> select_proper_premises(const FormalContext& ctx, std::span<const AttrSet> keys) {
  std::vector<AttrSet> out;
  for (const auto& k : keys)
    if (is_proper_premise(ctx, k)) out.push_back(k);
  return out;
}

std::vector<AttrSet> enumerate_proper_premises(const FormalContext& ctx) {
  return select_proper_premises(ctx, enumerate_keys(ctx));
}

std::size_t min_generator_size(const FormalContext& ctx, const AttrSet& attrs) {
  const AttrSet target = closure(ctx, attrs);
  const auto pos = target.positions();
  const std::size_t n = pos.size();
  // Combinations of `size` positions, as index vectors in increasing order.
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      AttrSet sub;
      for (auto i : idx) sub.set(pos[i]);
      if (closure(ctx, sub) == target) return size;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return n;
}

CharFlags classify(const FormalContext& ctx, const AttrSet& attrs, std::span<const AttrSet> pseudo_intents,
                   const MinKeySizeIndex* index) {
  CharFlags f;
  const AttrSet c = closure(ctx, attrs);
  f.is_intent = c == attrs;
  f.is_pseudo_intent = std::binary_search(pseudo_intents.begin(), pseudo_intents.end(), attrs, LecticLess{});
  f.is_key = is_key(ctx, attrs);
  f.is_proper_premise = is_proper_premise(ctx, attrs);
  if (f.is_key) {
    const std::size_t min_size = index ? index->at(c) : min_generator_size(ctx, c);
    f.is_passkey = attrs.count() == min_size;
  }
  return f;
}

std::vector<AttrSet> brute_force_class(const FormalContext& ctx, CharClass cls) {
  require_exhaustive(ctx);
  const std::size_t n = ctx.num_attributes();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<AttrSet> out;

  auto key_by_definition = [&](const AttrSet& d) {
    const AttrSet dc = prime_closure(ctx, d);
    bool key = true;
    d.for_each([&](std::size_t m) {
      AttrSet smaller = d;
      smaller.reset(m);
      if (prime_closure(ctx, smaller) == dc) key = false;
    });
    return key;
  };

  switch (cls) {
    case CharClass::generator:
      for (std::uint64_t r = 0; r < total; ++r) out.push_back(subset_from_rank(r, n));
      break;
    case CharClass::intent:
      for (std::uint64_t r = 0; r < total; ++r) {
        const AttrSet b = subset_from_rank(r, n);
        if (prime_closure(ctx, b) == b) out.push_back(b);
      }
      break;
    case CharClass::pseudo_intent:
      return brute_force_pseudo_intents(ctx, false);
    case CharClass::key:
      for (std::uint64_t r = 0; r < total; ++r) {
        const AttrSet d = subset_from_rank(r, n);
        if (key_by_definition(d)) out.push_back(d);
      }
      break;
    case CharClass::passkey: {
      std::vector<AttrSet> keys;
      for (std::uint64_t r = 0; r < total; ++r) {
        const AttrSet d = subset_from_rank(r, n);
        if (key_by_definition(d)) keys.push_back(d);
      }
      for (const auto& d : keys) {
        const AttrSet dc = prime_closure(ctx, d);
        bool smaller_exists = false;
        for (const auto& e : keys)
          if (e.count() < d.count() && prime_closure(ctx, e) == dc) smaller_exists = true;
        if (!smaller_exists) out.push_back(d);
      }
      break;
    }
    case CharClass::proper_premise:
      for (std::uint64_t r = 0; r < total; ++r) {
        const AttrSet a = subset_from_rank(r, n);
        AttrSet lhs = a;
        a.for_each([&](std::size_t m) {
          AttrSet smaller = a;
          smaller.reset(m);
          lhs |= prime_closure(ctx, smaller);
        });
        if (lhs != prime_closure(ctx, a)) out.push_back(a);
      }
      break;
  }
  return out;
}

std::vector<AttrSet> brute_force_pseudo_intents(const FormalContext& ctx, bool strict_containment) {
  require_exhaustive(ctx);
  const std::size_t n = ctx.num_attributes();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<AttrSet> by_size;
  by_size.reserve(total);
  for (std::uint64_t r = 0; r < total; ++r) by_size.push_back(subset_from_rank(r, n));
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const AttrSet& a, const AttrSet& b) { return a.count() < b.count(); });

  // Every pseudo-intent Q ⊊ P is smaller than P, so it is already decided.
  std::vector<AttrSet> found;
  for (const auto& p : by_size) {
    if (prime_closure(ctx, p) == p) continue;
    bool ok = true;
    for (const auto& q : found) {
      if (!q.proper_subset_of(p)) continue;
      const AttrSet qc = prime_closure(ctx, q);
      if (strict_containment ? !qc.proper_subset_of(p) : !qc.subset_of(p)) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(p);
  }
  std::sort(found.begin(), found.end(), LecticLess{});
  return found;
}

CharacteristicSets enumerate_all(const FormalContext& ctx, const ClassSelection& which) {
  CharacteristicSets out;
  if (which.intents) out.intents = enumerate_intents(ctx);
  if (which.pseudo_intents) out.pseudo_intents = enumerate_pseudo_intents(ctx);
  if (which.keys || which.passkeys || which.proper_premises) {
    auto keys = enumerate_keys(ctx);
    if (which.passkeys) out.passkeys = select_passkeys(ctx, keys);
    if (which.proper_premises) out.proper_premises = select_proper_premises(ctx, keys);
    if (which.keys) out.keys = std::move(keys);
  }
  return out;
}

}  // namespace fca
