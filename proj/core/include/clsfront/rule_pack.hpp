#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clsfront/inventory.hpp"
#include "clsfront/sequence.hpp"

namespace clsfront {

enum class Stage { pre_family, post_family };

std::string_view to_string(Stage s) noexcept;

// A named, ordered list of context-sensitive rewrites over CLS labels,
// written A -> B / L _ R. Pack files look like:
//
//   {"schema_version": 1, "name": "...", "stage": "pre_family",
//    "classes": {"sibilant": ["sh", "sx", "s"]},
//    "maps": {"echo": {"aa": "a"}},
//    "rules": [{"id": "...", "left": [...], "match": [...], "right": [...],
//               "replace": [...]}]}
//
// Pattern elements: a label string, "#" (word edge, first of `left` or last
// of `right` only), {"class": name} where name is a pack class or an
// inventory category, or {"any": [labels]}. Class and any elements may
// carry "capture": name. Replacement elements: a label string,
// {"ref": capture} or {"ref": capture, "map": map_name}; labels missing
// from the map pass through unchanged.
//
// Application is one left-to-right pass: at each position the first rule in
// file order whose context matches wins, its `match` span is replaced and
// scanning resumes after it. Contexts are read from the input, so rewrites
// never feed each other within a pass. Plain references keep the captured
// nasal flag; literals and mapped references come out oral.
class RulePack {
 public:
  // Throws Errc::malformed_data.
  static RulePack from_json(std::string_view text, const Inventory& inventory);

  const std::string& name() const noexcept { return name_; }
  Stage stage() const noexcept { return stage_; }
  std::size_t rule_count() const noexcept { return rules_.size(); }

  ClsSequence apply(const ClsSequence& seq) const;

  // Every label a replacement can introduce.
  std::vector<std::string> output_labels() const;

 private:
  struct Element {
    enum class Kind { label, edge, set } kind = Kind::label;
    std::string label;
    std::vector<std::string> set;
    std::string capture;
  };
  struct Output {
    std::string label;  // literal when ref is empty
    std::string ref;
    const std::map<std::string, std::string>* map = nullptr;
  };
  struct Rule {
    std::string id;
    std::vector<Element> left, match, right;
    std::vector<Output> replace;
  };
  struct Capture {
    std::string label;
    bool nasal;
  };
  using Captures = std::map<std::string, Capture, std::less<>>;

  static bool element_matches(const Element& e, const std::string& label);
  bool rule_matches(const Rule& rule, const ClsSequence& seq, std::size_t at,
                    Captures& captures) const;

  std::string name_;
  Stage stage_ = Stage::pre_family;
  std::vector<Rule> rules_;
  // Node-based so Output::map pointers stay valid across moves.
  std::shared_ptr<const std::map<std::string, std::map<std::string, std::string>>> maps_;
};

// Packs available to language profiles, by name.
class PackRegistry {
 public:
  void add(RulePack pack);
  bool contains(std::string_view name) const noexcept;
  // Throws Errc::unknown_rule_pack.
  const RulePack& get(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, RulePack, std::less<>> packs_;
};

}  // namespace clsfront
