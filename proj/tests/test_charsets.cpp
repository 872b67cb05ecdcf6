#include <doctest.h>

#include <algorithm>
#include <set>

#include "fca/charsets.hpp"
#include "fca/errors.hpp"
#include "support.hpp"

using namespace fca;
using fca::test::load_cxt;
using fca::test::to_naive;

namespace {

std::vector<AttrSet> sets(const FormalContext& ctx, std::initializer_list<std::vector<std::string>> lists) {
  std::vector<AttrSet> out;
  for (const auto& l : lists) out.push_back(ctx.attrs(l));
  return out;
}

bool contains(const std::vector<AttrSet>& v, const AttrSet& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

std::set<fca::test::NaiveSet> as_set(const std::vector<AttrSet>& v) { return to_naive(v); }

}  // namespace

TEST_CASE("intents") {
  SUBCASE("geometric figures") {
    const auto ctx = load_cxt("table1.cxt");
    const auto intents = enumerate_intents(ctx);
    CHECK(contains(intents, ctx.attrs({"b", "c"})));
    CHECK(contains(intents, ctx.all_attributes()));
    // 9 by an exhaustive scan of the 32 subsets.
    CHECK(intents.size() == 9);
    CHECK(std::is_sorted(intents.begin(), intents.end(), LecticLess{}));
  }
  SUBCASE("nominal scale") {
    const auto ctx = load_cxt("nominal3.cxt");
    CHECK(as_set(enumerate_intents(ctx)) == as_set({AttrSet{}, AttrSet{0}, AttrSet{1}, AttrSet{2}, AttrSet{0, 1, 2}}));
  }
  SUBCASE("no attributes") {
    const auto ctx = fca::test::make_context({"", ""});
    CHECK(enumerate_intents(ctx) == std::vector<AttrSet>{AttrSet{}});
  }
}

TEST_CASE("pseudo-intents and the canonical basis") {
  SUBCASE("geometric figures") {
    const auto ctx = load_cxt("table1.cxt");
    const auto expected = sets(ctx, {{"b"}, {"e"}, {"c", "d"}, {"a", "b", "c"}});
    CHECK(as_set(enumerate_pseudo_intents(ctx)) == as_set(expected));

    const auto basis = dg_basis(ctx);
    REQUIRE(basis.size() == 4);
    for (const auto& imp : basis) {
      CHECK_FALSE(imp.premise.intersects(imp.conclusion));
      CHECK((imp.premise | imp.conclusion) == closure(ctx, imp.premise));
    }
    // Both readings of the containment condition agree here.
    CHECK(brute_force_pseudo_intents(ctx, true) == brute_force_pseudo_intents(ctx, false));
  }
  SUBCASE("boolean context has none") {
    const auto ctx = fca::test::boolean_context(4);
    CHECK(enumerate_pseudo_intents(ctx).empty());
    CHECK(dg_basis(ctx).empty());
  }
  SUBCASE("nominal scale: every pair implies the rest") {
    const auto ctx = load_cxt("nominal3.cxt");
    const auto basis = dg_basis(ctx);
    REQUIRE(basis.size() == 3);
    std::set<fca::test::NaiveSet> premises;
    for (const auto& imp : basis) {
      CHECK(imp.premise.count() == 2);
      CHECK(imp.conclusion.count() == 1);
      CHECK((imp.premise | imp.conclusion) == ctx.all_attributes());
      premises.insert(to_naive(imp.premise));
    }
    CHECK(premises == as_set({AttrSet{0, 1}, AttrSet{0, 2}, AttrSet{1, 2}}));
  }
  SUBCASE("empty set is a pseudo-intent iff it is not closed") {
    const auto ctx = fca::test::make_context({"X.", "XX"});
    CHECK(contains(enumerate_pseudo_intents(ctx), AttrSet{}));
    CHECK_FALSE(contains(enumerate_pseudo_intents(load_cxt("table1.cxt")), AttrSet{}));
  }
}

TEST_CASE("implication closure") {
  const auto ctx = load_cxt("table1.cxt");
  const auto basis = dg_basis(ctx);
  CHECK(implication_closure(ctx.attrs({"b"}), basis) == ctx.attrs({"b", "c"}));
  CHECK(implication_closure(ctx.attrs({"a", "d"}), {}) == ctx.attrs({"a", "d"}));
  CHECK(implication_closure(ctx.all_attributes(), basis) == ctx.all_attributes());
}

TEST_CASE("proper premises") {
  const auto ctx = load_cxt("table1.cxt");
  CHECK(is_proper_premise(ctx, ctx.attrs({"a", "b"})));
  // {a,c,d} ∪ {a,c}'' ∪ {a,d}'' ∪ {c,d}'' = {a,b,c,d} ≠ {a,b,c,d,e}: the
  // definition makes it a proper premise.
  CHECK(is_proper_premise(ctx, ctx.attrs({"a", "c", "d"})));
  CHECK_FALSE(is_proper_premise(ctx, ctx.attrs({"b", "c"})));
  CHECK_FALSE(is_proper_premise(ctx, {}));  // ∅'' = ∅ here
  CHECK(is_proper_premise(fca::test::make_context({"X."}), {}));
  CHECK(as_set(enumerate_proper_premises(ctx)) ==
        as_set(sets(ctx, {{"a", "b"}, {"a", "c", "d"}, {"b"}, {"c", "d"}, {"e"}})));
}

TEST_CASE("keys and passkeys") {
  const auto ctx = load_cxt("table1.cxt");
  const auto keys = enumerate_keys(ctx);
  CHECK(contains(keys, ctx.attrs({"a", "c", "d"})));
  CHECK(contains(keys, AttrSet{}));
  CHECK(keys.size() == 12);

  const auto passkeys = enumerate_passkeys(ctx);
  CHECK(closure(ctx, ctx.attrs({"b", "d"})) == ctx.attrs({"b", "c", "d"}));
  CHECK(contains(passkeys, ctx.attrs({"b", "d"})));
  CHECK_FALSE(contains(passkeys, ctx.attrs({"a", "c", "d"})));
  CHECK(contains(passkeys, ctx.attrs({"e"})));
  CHECK(passkeys.size() == 10);

  SUBCASE("empty attribute set") {
    const auto empty = fca::test::make_context({"", ""});
    CHECK(enumerate_keys(empty) == std::vector<AttrSet>{AttrSet{}});
    CHECK(brute_force_class(empty, CharClass::key) == std::vector<AttrSet>{AttrSet{}});
  }
  SUBCASE("chain: one key per intent, and it is the passkey") {
    const auto chain = fca::test::staircase(6);
    const auto ks = enumerate_keys(chain);
    CHECK(ks.size() == enumerate_intents(chain).size());
    CHECK(enumerate_passkeys(chain) == ks);
    std::set<fca::test::NaiveSet> closures;
    for (const auto& k : ks) closures.insert(to_naive(closure(chain, k)));
    CHECK(closures.size() == ks.size());
  }
  SUBCASE("min generator search agrees with the key index") {
    const auto index = min_key_sizes(ctx, keys);
    for (const auto& intent : enumerate_intents(ctx)) CHECK(min_generator_size(ctx, intent) == index.at(intent));
  }
}

TEST_CASE("classify") {
  const auto ctx = load_cxt("table1.cxt");
  const auto pseudo = enumerate_pseudo_intents(ctx);

  const auto bc = classify(ctx, ctx.attrs({"b", "c"}), pseudo);
  CHECK(bc.is_intent);
  CHECK_FALSE(bc.is_pseudo_intent);

  const auto e = classify(ctx, ctx.attrs({"e"}), pseudo);
  CHECK(e.is_generator);
  CHECK_FALSE(e.is_intent);
  CHECK(e.is_pseudo_intent);
  CHECK(e.is_key);
  CHECK(e.is_passkey);
  CHECK(e.is_proper_premise);

  CHECK(classify(ctx, ctx.all_attributes(), pseudo).is_intent);
  CHECK(classify(ctx, ctx.attrs({"a", "b"}), pseudo).is_proper_premise);

  const auto acd = classify(ctx, ctx.attrs({"a", "c", "d"}), pseudo);
  CHECK(acd.is_key);
  CHECK_FALSE(acd.is_passkey);

  // With and without the supplied index, every subset classifies the same.
  const auto index = min_key_sizes(ctx, enumerate_keys(ctx));
  for (const auto& s : brute_force_class(ctx, CharClass::generator))
    CHECK(classify(ctx, s, pseudo) == classify(ctx, s, pseudo, &index));
}

TEST_CASE("brute-force oracle") {
  SUBCASE("pseudo-intents of the geometric figures") {
    const auto ctx = load_cxt("table1.cxt");
    CHECK(as_set(brute_force_class(ctx, CharClass::pseudo_intent)) ==
          as_set(sets(ctx, {{"b"}, {"e"}, {"c", "d"}, {"a", "b", "c"}})));
  }
  SUBCASE("nominal intents") { CHECK(brute_force_class(load_cxt("nominal3.cxt"), CharClass::intent).size() == 5); }
  SUBCASE("generators are all subsets, lectically") {
    const auto all = brute_force_class(load_cxt("table1.cxt"), CharClass::generator);
    CHECK(all.size() == 32);
    CHECK(std::is_sorted(all.begin(), all.end(), LecticLess{}));
  }
  SUBCASE("capacity") {
    std::vector<std::string> attrs;
    for (int i = 0; i < 26; ++i) attrs.push_back("a" + std::to_string(i));
    const FormalContext wide({"g"}, attrs, {AttrSet{}});
    CHECK_THROWS_AS(brute_force_class(wide, CharClass::intent), CapacityError);
  }
  SUBCASE("names") {
    for (auto c : {CharClass::generator, CharClass::intent, CharClass::pseudo_intent, CharClass::key,
                   CharClass::passkey, CharClass::proper_premise})
      CHECK(parse_char_class(to_string(c)) == c);
    CHECK_THROWS_AS(parse_char_class("concept"), InputError);
  }
}

TEST_CASE("enumerators match the definitional scan on fuzzed contexts") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 80; ++iter) {
    const auto ctx = fca::test::random_context(rng, 8, 10);
    CAPTURE(write_burmeister(ctx));
    const auto all = enumerate_all(ctx);
    CHECK(as_set(all.intents) == as_set(brute_force_class(ctx, CharClass::intent)));
    CHECK(as_set(all.pseudo_intents) == as_set(brute_force_class(ctx, CharClass::pseudo_intent)));
    CHECK(as_set(all.keys) == as_set(brute_force_class(ctx, CharClass::key)));
    CHECK(as_set(all.passkeys) == as_set(brute_force_class(ctx, CharClass::passkey)));
    CHECK(as_set(all.proper_premises) == as_set(brute_force_class(ctx, CharClass::proper_premise)));
    CHECK(brute_force_pseudo_intents(ctx, true) == brute_force_pseudo_intents(ctx, false));

    // The naive std::set oracle agrees on intents too.
    const fca::test::NaiveContext naive(ctx);
    const auto naive_intents = naive.intents();
    CHECK(as_set(all.intents) == std::set<fca::test::NaiveSet>(naive_intents.begin(), naive_intents.end()));
  }
}

TEST_CASE("basis properties on fuzzed contexts") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 40; ++iter) {
    const auto ctx = fca::test::random_context(rng, 10, 12);
    const auto basis = dg_basis(ctx);
    const auto subsets = brute_force_class(ctx, CharClass::generator);
    const auto premises = enumerate_proper_premises(ctx);
    for (const auto& b : subsets) {
      const AttrSet c = closure(ctx, b);
      CHECK(implication_closure(b, basis) == c);
      AttrSet one_pass = b;
      for (const auto& q : premises)
        if (q.subset_of(b)) one_pass |= closure(ctx, q);
      CHECK(one_pass == c);
    }
    // Dropping any implication loses its own premise's closure.
    for (std::size_t k = 0; k < basis.size(); ++k) {
      auto reduced = basis;
      reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(k));
      CHECK(implication_closure(basis[k].premise, reduced) != closure(ctx, basis[k].premise));
    }
  }
}

TEST_CASE("class algebra on fuzzed contexts") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 60; ++iter) {
    const auto ctx = fca::test::random_context(rng, 9, 9);
    const auto all = enumerate_all(ctx);
    const auto keys = as_set(all.keys);
    const auto intents = as_set(all.intents);
    for (const auto& p : all.passkeys) CHECK(keys.count(to_naive(p)));
    for (const auto& p : all.proper_premises) CHECK(keys.count(to_naive(p)));
    for (const auto& p : all.pseudo_intents) CHECK_FALSE(intents.count(to_naive(p)));
    std::set<fca::test::NaiveSet> key_closures, passkey_closures;
    for (const auto& k : all.keys) {
      const auto c = to_naive(closure(ctx, k));
      CHECK(intents.count(c));
      key_closures.insert(c);
    }
    for (const auto& k : all.passkeys) passkey_closures.insert(to_naive(closure(ctx, k)));
    CHECK(key_closures == intents);
    CHECK(passkey_closures == intents);
  }
}
