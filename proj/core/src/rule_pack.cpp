#include "clsfront/rule_pack.hpp"

#include <set>

#include <json.hpp>

#include "clsfront/errors.hpp"

namespace clsfront {

using nlohmann::json;

std::string_view to_string(Stage s) noexcept {
  return s == Stage::pre_family ? "pre_family" : "post_family";
}

namespace {

std::vector<std::string> category_members(const Inventory& inventory, Category category) {
  std::vector<std::string> out;
  for (const Phone& p : inventory.phones()) {
    if (p.category == category) out.push_back(p.label);
  }
  return out;
}

void require_label(const Inventory& inventory, const std::string& label, const std::string& where) {
  if (!inventory.contains(label)) {
    throw Error(Errc::malformed_data, where + ": label '" + label + "' is not in the inventory");
  }
}

}  // namespace

RulePack RulePack::from_json(std::string_view text, const Inventory& inventory) {
  RulePack pack;
  try {
    const json doc = json::parse(text);
    if (doc.at("schema_version").get<int>() != 1) {
      throw Error(Errc::malformed_data, "rule pack: unsupported schema_version");
    }
    pack.name_ = doc.at("name").get<std::string>();
    const std::string stage = doc.at("stage").get<std::string>();
    if (stage == "pre_family") {
      pack.stage_ = Stage::pre_family;
    } else if (stage == "post_family") {
      pack.stage_ = Stage::post_family;
    } else {
      throw Error(Errc::malformed_data, pack.name_ + ": unknown stage '" + stage + "'");
    }

    std::map<std::string, std::vector<std::string>> classes{
        {"vowel", category_members(inventory, Category::vowel)},
        {"consonant", category_members(inventory, Category::consonant)},
        {"modifier", category_members(inventory, Category::modifier)},
    };
    if (auto it = doc.find("classes"); it != doc.end()) {
      for (const auto& [name, members] : it->items()) {
        auto labels = members.get<std::vector<std::string>>();
        for (const auto& l : labels) require_label(inventory, l, pack.name_ + ".classes." + name);
        classes.insert_or_assign(name, std::move(labels));
      }
    }

    auto maps = std::make_shared<std::map<std::string, std::map<std::string, std::string>>>();
    if (auto it = doc.find("maps"); it != doc.end()) {
      for (const auto& [name, table] : it->items()) {
        auto entries = table.get<std::map<std::string, std::string>>();
        for (const auto& [from, to] : entries) {
          require_label(inventory, from, pack.name_ + ".maps." + name);
          require_label(inventory, to, pack.name_ + ".maps." + name);
        }
        maps->emplace(name, std::move(entries));
      }
    }
    pack.maps_ = maps;

    const json& rules = doc.at("rules");
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const json& jr = rules[r];
      Rule rule;
      rule.id = jr.value("id", "rule" + std::to_string(r));
      const std::string where = pack.name_ + "." + rule.id;
      std::set<std::string> captures;

      auto parse_elements = [&](const char* key, std::vector<Element>& out) {
        auto it = jr.find(key);
        if (it == jr.end()) return;
        for (const json& je : *it) {
          Element e;
          if (je.is_string()) {
            const auto s = je.get<std::string>();
            if (s == "#") {
              e.kind = Element::Kind::edge;
            } else {
              require_label(inventory, s, where);
              e.label = s;
            }
          } else if (je.contains("class")) {
            const auto cls = je.at("class").get<std::string>();
            auto found = classes.find(cls);
            if (found == classes.end()) {
              throw Error(Errc::malformed_data, where + ": unknown class '" + cls + "'");
            }
            e.kind = Element::Kind::set;
            e.set = found->second;
          } else if (je.contains("any")) {
            e.kind = Element::Kind::set;
            e.set = je.at("any").get<std::vector<std::string>>();
            for (const auto& l : e.set) require_label(inventory, l, where);
          } else {
            throw Error(Errc::malformed_data, where + ": unrecognised pattern element");
          }
          if (je.is_object() && je.contains("capture")) {
            e.capture = je.at("capture").get<std::string>();
            if (!captures.insert(e.capture).second) {
              throw Error(Errc::malformed_data, where + ": duplicate capture '" + e.capture + "'");
            }
          }
          out.push_back(std::move(e));
        }
      };
      parse_elements("left", rule.left);
      parse_elements("match", rule.match);
      parse_elements("right", rule.right);

      if (rule.match.empty()) {
        throw Error(Errc::malformed_data, where + ": match must not be empty");
      }
      for (const auto& e : rule.match) {
        if (e.kind == Element::Kind::edge) {
          throw Error(Errc::malformed_data, where + ": '#' is not allowed inside match");
        }
      }
      for (std::size_t i = 1; i < rule.left.size(); ++i) {
        if (rule.left[i].kind == Element::Kind::edge) {
          throw Error(Errc::malformed_data, where + ": '#' must start the left context");
        }
      }
      for (std::size_t i = 0; i + 1 < rule.right.size(); ++i) {
        if (rule.right[i].kind == Element::Kind::edge) {
          throw Error(Errc::malformed_data, where + ": '#' must end the right context");
        }
      }

      for (const json& jo : jr.at("replace")) {
        Output o;
        if (jo.is_string()) {
          o.label = jo.get<std::string>();
          require_label(inventory, o.label, where);
        } else {
          o.ref = jo.at("ref").get<std::string>();
          if (!captures.count(o.ref)) {
            throw Error(Errc::malformed_data, where + ": reference to unknown capture '" + o.ref + "'");
          }
          if (jo.contains("map")) {
            const auto map_name = jo.at("map").get<std::string>();
            auto found = pack.maps_->find(map_name);
            if (found == pack.maps_->end()) {
              throw Error(Errc::malformed_data, where + ": unknown map '" + map_name + "'");
            }
            o.map = &found->second;
          }
        }
        rule.replace.push_back(std::move(o));
      }
      pack.rules_.push_back(std::move(rule));
    }
  } catch (const json::exception& e) {
    throw Error(Errc::malformed_data, std::string("rule pack: ") + e.what());
  }
  return pack;
}

bool RulePack::element_matches(const Element& e, const std::string& label) {
  switch (e.kind) {
    case Element::Kind::label: return e.label == label;
    case Element::Kind::set:
      for (const auto& s : e.set) {
        if (s == label) return true;
      }
      return false;
    case Element::Kind::edge: return false;
  }
  return false;
}

bool RulePack::rule_matches(const Rule& rule, const ClsSequence& seq, std::size_t at,
                            Captures& captures) const {
  captures.clear();
  const std::size_t n = seq.size();
  auto take = [&](const Element& e, std::size_t pos) {
    if (!e.capture.empty()) captures.insert_or_assign(e.capture, Capture{seq.labels[pos], seq.nasal_flags[pos]});
  };

  // Left context, read backwards from `at`.
  std::size_t pos = at;
  for (auto it = rule.left.rbegin(); it != rule.left.rend(); ++it) {
    if (it->kind == Element::Kind::edge) {
      if (pos != 0) return false;
      continue;
    }
    if (pos == 0 || !element_matches(*it, seq.labels[pos - 1])) return false;
    --pos;
    take(*it, pos);
  }

  pos = at;
  for (const Element& e : rule.match) {
    if (pos >= n || !element_matches(e, seq.labels[pos])) return false;
    take(e, pos);
    ++pos;
  }
  for (const Element& e : rule.right) {
    if (e.kind == Element::Kind::edge) {
      if (pos != n) return false;
      continue;
    }
    if (pos >= n || !element_matches(e, seq.labels[pos])) return false;
    take(e, pos);
    ++pos;
  }
  return true;
}

ClsSequence RulePack::apply(const ClsSequence& seq) const {
  ClsSequence out;
  out.word = seq.word;
  out.script = seq.script;
  out.is_break = seq.is_break;
  out.labels.reserve(seq.size());
  out.nasal_flags.reserve(seq.size());

  Captures captures;
  std::size_t i = 0;
  while (i < seq.size()) {
    const Rule* fired = nullptr;
    for (const Rule& rule : rules_) {
      if (rule_matches(rule, seq, i, captures)) {
        fired = &rule;
        break;
      }
    }
    if (fired == nullptr) {
      out.push_back(seq.labels[i], seq.nasal_flags[i]);
      ++i;
      continue;
    }
    for (const Output& o : fired->replace) {
      if (o.ref.empty()) {
        out.push_back(o.label, false);
        continue;
      }
      const Capture& c = captures.find(o.ref)->second;
      if (o.map != nullptr) {
        auto m = o.map->find(c.label);
        out.push_back(m != o.map->end() ? m->second : c.label, false);
        continue;
      }
      out.push_back(c.label, c.nasal);
    }
    i += fired->match.size();
  }
  return out;
}

std::vector<std::string> RulePack::output_labels() const {
  std::set<std::string> labels;
  for (const Rule& rule : rules_) {
    for (const Output& o : rule.replace) {
      if (o.ref.empty()) {
        labels.insert(o.label);
      } else if (o.map != nullptr) {
        for (const auto& [from, to] : *o.map) labels.insert(to);
      }
    }
  }
  return {labels.begin(), labels.end()};
}

void PackRegistry::add(RulePack pack) {
  std::string name = pack.name();
  packs_.insert_or_assign(std::move(name), std::move(pack));
}

bool PackRegistry::contains(std::string_view name) const noexcept {
  return packs_.find(name) != packs_.end();
}

const RulePack& PackRegistry::get(std::string_view name) const {
  auto it = packs_.find(name);
  if (it == packs_.end()) {
    throw Error(Errc::unknown_rule_pack, "no rule pack named '" + std::string(name) + "'");
  }
  return it->second;
}

std::vector<std::string> PackRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, pack] : packs_) out.push_back(name);
  return out;
}

}  // namespace clsfront
