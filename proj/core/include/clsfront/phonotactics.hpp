#pragma once

#include "clsfront/inventory.hpp"
#include "clsfront/profile.hpp"
#include "clsfront/rule_pack.hpp"
#include "clsfront/sequence.hpp"

namespace clsfront {

// Indo-Aryan schwa deletion over one word:
//   1. a word-final "a" after a consonant is dropped if another vowel remains;
//   2. one left-to-right pass drops a medial "a" in V C _ C V when it is not
//      the word's first vowel and no run of three consonants results.
// Never deletes anything but "a" and never empties a word of vowels.
ClsSequence schwa_delete(const ClsSequence& seq, const Inventory& inventory);

// Visarga ("hq") realisation:
//   word-final after a vowel -> "h" + echo (ai -> i, au -> u, else the
//   vowel's short form); before a sibilant -> copy of the sibilant;
//   elsewhere -> "h".
ClsSequence visarga_rules(const ClsSequence& seq, const Inventory& inventory);

// V C F# -> V F C for F in {i, u}; identity otherwise.
ClsSequence epenthesis(const ClsSequence& seq, const Inventory& inventory);

// pre_family packs, then the family rule (IA: schwa_delete, DR: identity),
// then post_family packs, then fallback of every extended label.
// Throws Errc::unknown_rule_pack.
ClsSequence apply_rules(const ClsSequence& seq, const LanguageProfile& profile,
                        const PackRegistry& packs, const Inventory& inventory);

}  // namespace clsfront
