#include "clsfront/profile.hpp"

#include <algorithm>

#include <json.hpp>

#include "clsfront/errors.hpp"
#include "clsfront/unicode.hpp"

namespace clsfront {

using nlohmann::json;

std::string_view to_string(Family f) noexcept {
  return f == Family::indo_aryan ? "IA" : "DR";
}

Family family_from_string(std::string_view text) {
  if (text == "IA") return Family::indo_aryan;
  if (text == "DR") return Family::dravidian;
  throw Error(Errc::malformed_data, "unknown family '" + std::string(text) + "'");
}

namespace {

[[noreturn]] void malformed(const std::string& path, const std::string& why) {
  throw Error(Errc::malformed_profile, path + ": " + why);
}

const json& require(const json& doc, const char* key, json::value_t type, const char* type_name) {
  auto it = doc.find(key);
  if (it == doc.end()) malformed(key, "missing");
  if (it->type() != type) malformed(key, std::string("expected ") + type_name);
  return *it;
}

}  // namespace

LanguageProfile parse_profile(std::string_view text, const PackRegistry& packs,
                              const Inventory& inventory) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed("$", e.what());
  }
  if (!doc.is_object()) malformed("$", "expected an object");

  static const std::vector<std::string> known = {"schema_version", "name",       "script",
                                                 "family",         "rule_packs", "exceptions",
                                                 "priors",         "notes"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      malformed(key, "unknown field");
    }
  }
  if (auto it = doc.find("schema_version"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<int>() != 1) malformed("schema_version", "unsupported");
  }

  LanguageProfile p;
  p.name = require(doc, "name", json::value_t::string, "string").get<std::string>();
  if (p.name.empty()) malformed("name", "empty");

  const auto script = require(doc, "script", json::value_t::string, "string").get<std::string>();
  try {
    p.script = script_from_string(script);
  } catch (const Error&) {
    malformed("script", "unknown script '" + script + "'");
  }
  const auto family = require(doc, "family", json::value_t::string, "string").get<std::string>();
  try {
    p.family = family_from_string(family);
  } catch (const Error&) {
    malformed("family", "expected IA or DR, got '" + family + "'");
  }

  if (auto it = doc.find("rule_packs"); it != doc.end()) {
    if (!it->is_array()) malformed("rule_packs", "expected array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& v = (*it)[i];
      const std::string path = "rule_packs[" + std::to_string(i) + "]";
      if (!v.is_string()) malformed(path, "expected string");
      const auto name = v.get<std::string>();
      if (!packs.contains(name)) {
        throw Error(Errc::unknown_rule_pack,
                    path + ": profile '" + p.name + "' references unknown pack '" + name + "'");
      }
      p.rule_packs.push_back(name);
    }
  }

  if (auto it = doc.find("exceptions"); it != doc.end()) {
    if (!it->is_object()) malformed("exceptions", "expected object");
    for (const auto& [grapheme, labels] : it->items()) {
      const std::string path = "exceptions." + grapheme;
      if (!labels.is_array()) malformed(path, "expected array of labels");
      std::vector<std::string> out;
      for (const json& l : labels) {
        if (!l.is_string()) malformed(path, "expected array of labels");
        const auto label = l.get<std::string>();
        if (!inventory.is_base(label)) malformed(path, "'" + label + "' is not a base label");
        out.push_back(label);
      }
      std::string key;
      try {
        key = normalize_text(grapheme);
      } catch (const Error&) {
        malformed(path, "key is not valid UTF-8");
      }
      p.exceptions.insert_or_assign(std::move(key), std::move(out));
    }
  }

  if (auto it = doc.find("priors"); it != doc.end()) {
    if (!it->is_object()) malformed("priors", "expected object");
    for (const auto& [key, value] : it->items()) {
      if (!value.is_number()) malformed("priors." + key, "expected number");
      const double w = value.get<double>();
      if (!(w >= 0.0 && w <= 1.0)) malformed("priors." + key, "outside [0,1]");
      p.priors.emplace(key, w);
    }
  }

  if (auto it = doc.find("notes"); it != doc.end()) {
    if (!it->is_string()) malformed("notes", "expected string");
    p.notes = it->get<std::string>();
  }
  return p;
}

}  // namespace clsfront
