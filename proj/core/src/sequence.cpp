#include "clsfront/sequence.hpp"

#include "clsfront/errors.hpp"

namespace clsfront {

std::string_view to_string(Script s) noexcept {
  switch (s) {
    case Script::devanagari: return "devanagari";
    case Script::kannada: return "kannada";
    case Script::telugu: return "telugu";
  }
  return "?";
}

Script script_from_string(std::string_view name) {
  for (Script s : {Script::devanagari, Script::kannada, Script::telugu}) {
    if (to_string(s) == name) return s;
  }
  throw Error(Errc::malformed_data, "unknown script '" + std::string(name) + "'");
}

ClsSequence make_sequence(std::vector<std::string> labels, Script script) {
  ClsSequence seq;
  seq.nasal_flags.assign(labels.size(), false);
  seq.labels = std::move(labels);
  seq.script = script;
  return seq;
}

std::string join_labels(const std::vector<std::string>& labels, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i != 0) out.append(separator);
    out.append(labels[i]);
  }
  return out;
}

}  // namespace clsfront
