#include "cli_app.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "clsfront/data_source.hpp"
#include "clsfront/errors.hpp"
#include "clsfront/frontend.hpp"
#include "clsfront/mcd.hpp"
#include "clsfront/selector.hpp"
#include "clsfront/wav.hpp"

namespace clsfront::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct Failure {
  std::string message;
};

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

unsigned resolve_jobs(unsigned requested, std::size_t items) {
  unsigned jobs = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(items, 1)));
}

// Runs fn(i) for every index on up to `jobs` threads. Results land in input
// order; an exception becomes a Failure for that index only.
template <typename T, typename Fn>
std::vector<std::variant<T, Failure>> parallel_map(std::size_t n, unsigned jobs, Fn fn) {
  std::vector<std::variant<T, Failure>> results(n, Failure{});
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = fn(i);
      } catch (const std::exception& e) {
        results[i] = Failure{e.what()};
      }
    }
  };
  jobs = resolve_jobs(jobs, n);
  if (jobs <= 1) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) {
      if (start < text.size() || lines.empty()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  for (auto& l : lines)
    if (!l.empty() && l.back() == '\r') l.pop_back();
  return lines;
}

ordered_json word_json(const ClsSequence& seq) {
  ordered_json w;
  w["grapheme"] = seq.word;
  if (seq.is_break) w["break"] = true;
  w["cls"] = seq.labels;
  w["nasal_flags"] = seq.nasal_flags;
  return w;
}

ordered_json line_json(std::size_t line_no, const std::vector<ClsSequence>& words) {
  ordered_json line;
  line["schema_version"] = kSchemaVersion;
  line["line_no"] = line_no;
  line["words"] = ordered_json::array();
  for (const auto& seq : words) line["words"].push_back(word_json(seq));
  return line;
}

std::string line_text(const std::vector<ClsSequence>& words) {
  std::string out;
  for (const auto& seq : words) {
    if (!out.empty()) out += ' ';
    out += join_labels(seq.labels, "-");
  }
  return out;
}

// Shared state for one invocation.
struct Context {
  std::optional<fs::path> data_dir;
  std::optional<Frontend> frontend_;

  const Frontend& frontend() {
    if (!frontend_) frontend_ = Frontend::load(DataSource::resolve(data_dir));
    return *frontend_;
  }
};

// ---- parse ----------------------------------------------------------------

struct ParseArgs {
  std::string lang;
  std::optional<std::string> text;
  std::optional<fs::path> in;
  std::string format = "jsonl";
  bool fail_fast = false;
  bool collect_errors = false;
  unsigned jobs = 0;
};

int cmd_parse(Context& ctx, const ParseArgs& a, std::ostream& out, std::ostream& err) {
  const Frontend& fe = ctx.frontend();
  const LanguageProfile profile = fe.profile(a.lang);
  const std::string input = a.text ? *a.text : read_file(*a.in);
  // --in tolerates bad lines unless told otherwise; --text stops at the first.
  const bool collect = a.collect_errors || (!a.fail_fast && a.in.has_value());

  const std::vector<std::string> lines = split_lines(input);
  auto results = parallel_map<std::vector<ClsSequence>>(
      lines.size(), a.jobs, [&](std::size_t i) { return fe.parse_text(lines[i], profile); });

  ordered_json doc;
  if (a.format == "json") {
    doc["schema_version"] = kSchemaVersion;
    doc["lines"] = ordered_json::array();
  }
  bool failed = false;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (auto* f = std::get_if<Failure>(&results[i])) {
      err << "line " << i + 1 << ": " << f->message << '\n';
      failed = true;
      if (!collect) break;
      continue;
    }
    const auto& words = std::get<std::vector<ClsSequence>>(results[i]);
    if (a.format == "jsonl") {
      out << line_json(i + 1, words).dump() << '\n';
    } else if (a.format == "json") {
      ordered_json line = line_json(i + 1, words);
      line.erase("schema_version");
      doc["lines"].push_back(std::move(line));
    } else {
      out << line_text(words) << '\n';
    }
  }
  if (a.format == "json") out << doc.dump(2) << '\n';
  return failed ? kDataError : kOk;
}

// ---- inventory ------------------------------------------------------------

int cmd_inventory(Context& ctx, const std::string& lang, const std::string& format,
                  std::ostream& out) {
  const Frontend& fe = ctx.frontend();
  const LanguageProfile profile = fe.profile(lang);
  const auto phones = fe.reachable_phones(profile);
  if (format == "json") {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["profile"] = profile.name;
    doc["family"] = std::string(to_string(profile.family));
    doc["script"] = std::string(to_string(profile.script));
    doc["phones"] = phones;
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& p : phones) out << p << '\n';
  }
  return kOk;
}

// ---- select ---------------------------------------------------------------

struct SelectArgs {
  std::string target;
  std::optional<fs::path> synths;
  std::optional<fs::path> corpus;
  std::string format = "text";
};

int cmd_select(Context& ctx, const SelectArgs& a, std::ostream& out, std::ostream& err) {
  const Frontend& fe = ctx.frontend();
  const LanguageProfile profile = fe.profile(a.target);
  const auto candidates = a.synths ? load_synthesizers(*a.synths, fe.inventory())
                                   : load_synthesizers(fe.data(), fe.inventory());

  bool failed = false;
  std::set<std::string> phones;
  std::string source = "profile";
  if (a.corpus) {
    source = "corpus";
    const auto lines = split_lines(read_file(*a.corpus));
    for (std::size_t i = 0; i < lines.size(); ++i) {
      try {
        for (const auto& seq : fe.parse_text(lines[i], profile)) {
          if (!seq.is_break) phones.insert(seq.labels.begin(), seq.labels.end());
        }
      } catch (const Error& e) {
        err << "line " << i + 1 << ": " << e.what() << '\n';
        failed = true;
      }
    }
  } else {
    const auto reachable = fe.reachable_phones(profile);
    phones.insert(reachable.begin(), reachable.end());
  }

  const auto ranked = rank(profile, phones, candidates);
  if (a.format == "json") {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["target"] = profile.name;
    doc["family"] = std::string(to_string(profile.family));
    doc["phone_source"] = source;
    doc["target_phones"] = phones;
    doc["candidates"] = ordered_json::array();
    for (const auto& r : ranked) {
      doc["candidates"].push_back({{"rank", r.rank},
                                   {"name", r.name},
                                   {"family_match", r.family_match},
                                   {"coverage", r.coverage},
                                   {"prior_sum", r.prior_sum}});
    }
    out << doc.dump(2) << '\n';
  } else {
    std::size_t width = 4;
    for (const auto& r : ranked) width = std::max(width, r.name.size());
    auto pad = [&](const std::string& s) { return s + std::string(width - s.size() + 2, ' '); };
    out << "rank  " << pad("name") << "family  coverage  prior_sum\n";
    for (const auto& r : ranked) {
      out << r.rank << std::string(r.rank < 10 ? 5 : 4, ' ') << pad(r.name)
          << (r.family_match ? "match   " : "-       ") << fixed4(r.coverage) << "    "
          << fixed4(r.prior_sum) << '\n';
    }
  }
  return failed ? kDataError : kOk;
}

// ---- mcd ------------------------------------------------------------------

MelCepstrumConfig load_config(Context& ctx, const std::optional<fs::path>& path) {
  if (path) return MelCepstrumConfig::from_json(read_file(*path));
  return MelCepstrumConfig::from_json(ctx.frontend().data().read("mcd_config.json"));
}

ordered_json mcd_json(const std::string& ref, const std::string& syn, const McdResult& r) {
  return {{"ref", ref},
          {"syn", syn},
          {"mcd_db", r.mcd_db},
          {"path_length", r.path_length},
          {"ref_frames", r.ref_frames},
          {"syn_frames", r.syn_frames}};
}

struct McdArgs {
  fs::path ref, syn;
  std::optional<fs::path> config;
  std::string format = "text";
};

int cmd_mcd(Context& ctx, const McdArgs& a, std::ostream& out) {
  const MelCepstrumConfig cfg = load_config(ctx, a.config);
  const McdResult r = mcd_score(load_pcm_wav(a.ref), load_pcm_wav(a.syn), cfg);
  if (a.format == "json") {
    ordered_json doc = mcd_json(a.ref.string(), a.syn.string(), r);
    doc["schema_version"] = kSchemaVersion;
    out << doc.dump(2) << '\n';
  } else {
    out << fixed4(r.mcd_db) << '\n';
  }
  return kOk;
}

struct BatchArgs {
  fs::path pairs;
  std::optional<fs::path> config;
  std::string format = "text";
  unsigned jobs = 0;
};

struct ManifestRow {
  std::size_t line_no;
  std::string ref, syn;  // as written in the manifest
};

int cmd_batch_mcd(Context& ctx, const BatchArgs& a, std::ostream& out, std::ostream& err) {
  const MelCepstrumConfig cfg = load_config(ctx, a.config);
  const fs::path base = a.pairs.parent_path();
  const auto lines = split_lines(read_file(a.pairs));

  bool failed = false;
  std::vector<ManifestRow> rows;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& l = lines[i];
    if (l.empty() || l[0] == '#') continue;
    const auto tab = l.find('\t');
    if (tab == std::string::npos || l.find('\t', tab + 1) != std::string::npos) {
      err << "line " << i + 1 << ": expected ref_path<TAB>syn_path\n";
      failed = true;
      continue;
    }
    rows.push_back({i + 1, l.substr(0, tab), l.substr(tab + 1)});
  }

  auto resolve = [&](const std::string& p) {
    const fs::path path(p);
    return path.is_absolute() ? path : base / path;
  };
  auto results = parallel_map<McdResult>(rows.size(), a.jobs, [&](std::size_t i) {
    return mcd_score(load_pcm_wav(resolve(rows[i].ref)), load_pcm_wav(resolve(rows[i].syn)), cfg);
  });

  double sum = 0.0;
  std::size_t scored = 0;
  ordered_json pairs = ordered_json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (auto* f = std::get_if<Failure>(&results[i])) {
      err << "line " << rows[i].line_no << ": " << f->message << '\n';
      failed = true;
      continue;
    }
    const McdResult& r = std::get<McdResult>(results[i]);
    sum += r.mcd_db;
    ++scored;
    if (a.format == "json") {
      pairs.push_back(mcd_json(rows[i].ref, rows[i].syn, r));
    } else {
      out << rows[i].ref << '\t' << rows[i].syn << '\t' << fixed4(r.mcd_db) << '\n';
    }
  }
  const std::optional<double> mean =
      scored > 0 ? std::optional<double>(sum / static_cast<double>(scored)) : std::nullopt;
  if (a.format == "json") {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["pairs"] = std::move(pairs);
    doc["mean"] = mean ? ordered_json(*mean) : ordered_json(nullptr);
    out << doc.dump(2) << '\n';
  } else {
    out << "mean\t" << (mean ? fixed4(*mean) : std::string("n/a")) << '\n';
  }
  return failed ? kDataError : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Indic text to Common Label Set front end, synthesizer selection and MCD scoring",
               "clsfront"};
  app.require_subcommand(1);
  Context ctx;
  std::string data_dir;
  app.add_option("--data-dir", data_dir,
                 "Data directory (inventory, scripts, packs, profiles, synths); "
                 "defaults to $CLSFRONT_DATA_DIR, then the built-in copy");

  const std::vector<std::string> text_formats{"text", "json"};

  ParseArgs pa;
  std::string text_arg, in_arg;
  auto* parse = app.add_subcommand("parse", "Convert text to CLS label sequences");
  parse->add_option("--lang", pa.lang, "Profile name or profile file")->required();
  auto* text_opt = parse->add_option("--text", text_arg, "Text to parse");
  auto* in_opt = parse->add_option("--in", in_arg, "UTF-8 file, one record per line");
  text_opt->excludes(in_opt);
  parse->add_option("--format", pa.format, "jsonl | json | text")
      ->check(CLI::IsMember({"jsonl", "json", "text"}));
  auto* ff = parse->add_flag("--fail-fast", pa.fail_fast, "Stop at the first bad line");
  auto* ce = parse->add_flag("--collect-errors", pa.collect_errors,
                             "Report bad lines and continue (default for --in)");
  ff->excludes(ce);
  parse->add_option("--jobs", pa.jobs, "Worker threads (0 = all cores)");
  parse->callback([&] {
    if (text_opt->count() == 0 && in_opt->count() == 0) {
      throw CLI::RequiredError("--text or --in");
    }
  });

  std::string inv_lang, inv_format = "text";
  auto* inventory = app.add_subcommand("inventory", "List the phones a profile can produce");
  inventory->add_option("--lang", inv_lang, "Profile name or profile file")->required();
  inventory->add_option("--format", inv_format, "text | json")->check(CLI::IsMember(text_formats));

  SelectArgs sa;
  std::string synths_arg, corpus_arg;
  auto* select = app.add_subcommand("select", "Rank synthesizers for a target language");
  select->add_option("--target", sa.target, "Profile name or profile file")->required();
  auto* synths_opt = select->add_option("--synths", synths_arg, "Directory of synthesizer profiles")
                         ->check(CLI::ExistingDirectory);
  auto* corpus_opt = select->add_option("--corpus", corpus_arg, "Sample text for the target phone set");
  select->add_option("--format", sa.format, "text | json")->check(CLI::IsMember(text_formats));

  McdArgs ma;
  std::string mcd_config;
  auto* mcd = app.add_subcommand("mcd", "Mel-cepstral distortion of one file pair");
  mcd->add_option("--ref", ma.ref, "Reference WAV")->required();
  mcd->add_option("--syn", ma.syn, "Synthesized WAV")->required();
  auto* mcd_cfg = mcd->add_option("--config", mcd_config, "Extraction settings JSON");
  mcd->add_option("--format", ma.format, "text | json")->check(CLI::IsMember(text_formats));

  BatchArgs ba;
  std::string batch_config;
  auto* batch = app.add_subcommand("batch-mcd", "Score every pair in a TSV manifest");
  batch->add_option("--pairs", ba.pairs, "TSV of ref_path<TAB>syn_path")->required();
  auto* batch_cfg = batch->add_option("--config", batch_config, "Extraction settings JSON");
  batch->add_option("--format", ba.format, "text | json")->check(CLI::IsMember(text_formats));
  batch->add_option("--jobs", ba.jobs, "Worker threads (0 = all cores)");

  for (auto* sub : {parse, inventory, select, mcd, batch}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* failing = &app;
    for (auto* sub : app.get_subcommands()) failing = sub;
    err << failing->help();
    return kUsageError;
  }

  if (!data_dir.empty()) ctx.data_dir = fs::path(data_dir);
  try {
    if (parse->parsed()) {
      if (text_opt->count() > 0) pa.text = text_arg;
      if (in_opt->count() > 0) pa.in = fs::path(in_arg);
      return cmd_parse(ctx, pa, out, err);
    }
    if (inventory->parsed()) return cmd_inventory(ctx, inv_lang, inv_format, out);
    if (select->parsed()) {
      if (synths_opt->count() > 0) sa.synths = fs::path(synths_arg);
      if (corpus_opt->count() > 0) sa.corpus = fs::path(corpus_arg);
      return cmd_select(ctx, sa, out, err);
    }
    if (mcd->parsed()) {
      if (mcd_cfg->count() > 0) ma.config = fs::path(mcd_config);
      return cmd_mcd(ctx, ma, out);
    }
    if (batch->parsed()) {
      if (batch_cfg->count() > 0) ba.config = fs::path(batch_config);
      return cmd_batch_mcd(ctx, ba, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace clsfront::cli
