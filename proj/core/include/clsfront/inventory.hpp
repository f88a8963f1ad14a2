#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clsfront {

enum class Category { vowel, consonant, modifier };
enum class Length { short_vowel, long_vowel, not_applicable };
enum class Place { velar, palatal, retroflex, dental, labial, glottal, uvular, not_applicable };

std::string_view to_string(Category c) noexcept;
std::string_view to_string(Length l) noexcept;
std::string_view to_string(Place p) noexcept;

struct Features {
  Length length = Length::not_applicable;
  bool aspirated = false;
  bool voiced = false;
  Place place = Place::not_applicable;
  bool nasal = false;

  bool operator==(const Features&) const = default;
};

// One label of the extended Common Label Set.
struct Phone {
  std::string label;
  Category category = Category::consonant;
  Features features;
  bool extended = false;
  std::optional<std::string> fallback;  // required iff extended
  std::string rationale;
};

// A documented pair of articulation places an extended phone may fall back
// across.
struct PlaceProximity {
  Place from;
  Place to;
  std::string rationale;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// Immutable phone inventory. Base (non-extended) labels form the 72-token
// set; extended labels fall back to a base label in exactly one step.
class Inventory {
 public:
  static constexpr std::size_t kBaseLabelCount = 72;

  Inventory(std::vector<Phone> phones, std::vector<PlaceProximity> proximity,
            std::string version);

  // Parses the JSON inventory format. Throws Errc::malformed_data.
  static Inventory from_json(std::string_view text);

  // Throws Errc::unknown_label.
  const Phone& lookup(std::string_view label) const;
  const Phone* find(std::string_view label) const noexcept;
  bool contains(std::string_view label) const noexcept { return find(label) != nullptr; }

  // Base labels map to themselves, extended labels to their declared base.
  const std::string& fallback(std::string_view label) const;

  bool is_base(std::string_view label) const noexcept;
  bool is_vowel(std::string_view label) const noexcept;
  bool is_consonant(std::string_view label) const noexcept;

  std::span<const Phone> phones() const noexcept { return phones_; }
  std::span<const PlaceProximity> proximity() const noexcept { return proximity_; }
  const std::string& version() const noexcept { return version_; }

  std::vector<std::string> base_labels() const;

 private:
  std::vector<Phone> phones_;
  std::vector<PlaceProximity> proximity_;
  std::string version_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// Lists every violated inventory invariant; an empty report means valid.
ValidationReport validate_inventory(const Inventory& inventory);

}  // namespace clsfront
