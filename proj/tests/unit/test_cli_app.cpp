#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "doctest.h"

#include "audio.hpp"
#include "cli_app.hpp"
#include "clsfront/wav.hpp"
#include "fixtures.hpp"
#include "printing.hpp"

using namespace clsfront;
using namespace clsfront::testing;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> jsonl(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(json::parse(line));
  return out;
}

void write(const std::filesystem::path& p, const std::string& s) { std::ofstream(p) << s; }

}  // namespace

TEST_SUITE("cli parse") {
  TEST_CASE("jsonl example") {
    const auto r = run({"parse", "--lang", "sanskrit", "--text", "विकास", "--format", "jsonl"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    const auto lines = jsonl(r.out);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0]["schema_version"] == 1);
    CHECK(lines[0]["line_no"] == 1);
    REQUIRE(lines[0]["words"].size() == 1);
    CHECK(lines[0]["words"][0]["grapheme"] == "विकास");
    CHECK(lines[0]["words"][0]["cls"] == json({"w", "i", "k", "aa", "s", "a"}));
    CHECK(lines[0]["words"][0]["nasal_flags"].size() == 6);
  }

  TEST_CASE("breaks, formats and the hindi rules") {
    const auto r = run({"parse", "--lang", "hindi", "--text", "विकास। कमल"});
    REQUIRE(r.code == 0);
    const auto words = jsonl(r.out).at(0)["words"];
    REQUIRE(words.size() == 3);
    CHECK(words[0]["cls"] == json({"w", "i", "k", "aa", "s"}));
    CHECK(words[1]["break"] == true);
    CHECK(words[1]["grapheme"] == "।");
    CHECK(words[1]["cls"] == json({"sil"}));

    const auto t = run({"parse", "--lang", "hindi", "--text", "विकास। कमल", "--format", "text"});
    CHECK(t.out == "w-i-k-aa-s sil k-a-m-a-l\n");

    const auto j = run({"parse", "--lang", "hindi", "--text", "क\nख", "--format", "json"});
    const auto doc = json::parse(j.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["lines"].size() == 2);
    CHECK(doc["lines"][1]["line_no"] == 2);
  }

  TEST_CASE("every emitted label is a base label") {
    TempDir dir;
    write(dir / "in.txt", "अन्तःस्थ विकास\nगौः, देवैः\n\nक़िला ड़ ढ़\n");
    for (const auto& lang : shipped().profile_names()) {
      if (shipped().profile(lang).script != Script::devanagari) continue;
      const auto r = run({"parse", "--lang", lang, "--in", (dir / "in.txt").string()});
      CHECK(r.code == 0);
      const auto lines = jsonl(r.out);
      CHECK(lines.size() == 4);
      for (const auto& line : lines)
        for (const auto& w : line["words"])
          for (const auto& l : w["cls"]) {
            const std::string label = l.get<std::string>();
            if (label != "sil") CHECK(shipped().inventory().is_base(label));
          }
    }
  }

  TEST_CASE("collect-errors is the default for files, fail-fast for text") {
    TempDir dir;
    write(dir / "in.txt", "क\nकx\nख\n");
    const auto collect = run({"parse", "--lang", "hindi", "--in", (dir / "in.txt").string()});
    CHECK(collect.code == 1);
    CHECK(jsonl(collect.out).size() == 2);
    CHECK(collect.err.find("line 2") != std::string::npos);

    const auto fast =
        run({"parse", "--lang", "hindi", "--in", (dir / "in.txt").string(), "--fail-fast"});
    CHECK(fast.code == 1);
    CHECK(jsonl(fast.out).size() == 1);

    const auto text = run({"parse", "--lang", "hindi", "--text", "क\nकx\nख"});
    CHECK(text.code == 1);
    CHECK(jsonl(text.out).size() == 1);

    const auto text_collect =
        run({"parse", "--lang", "hindi", "--text", "क\nकx\nख", "--collect-errors"});
    CHECK(jsonl(text_collect.out).size() == 2);
  }

  TEST_CASE("output is identical across job counts") {
    TempDir dir;
    std::string corpus;
    for (int i = 0; i < 200; ++i) corpus += "विकास कमल रचना। अन्तःस्थ\n";
    write(dir / "in.txt", corpus);
    const auto one = run({"parse", "--lang", "maithili", "--in", (dir / "in.txt").string(), "--jobs", "1"});
    const auto many = run({"parse", "--lang", "maithili", "--in", (dir / "in.txt").string(), "--jobs", "8"});
    CHECK(one.code == 0);
    CHECK(one.out == many.out);
    CHECK(jsonl(one.out).size() == 200);
  }

  TEST_CASE("usage errors exit 2") {
    auto r = run({"parse", "--bogus"});
    CHECK(r.code == 2);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"parse", "--lang", "hindi"}).code == 2);
    CHECK(run({"parse", "--lang", "hindi", "--text", "क", "--in", "x"}).code == 2);
    CHECK(run({"parse", "--lang", "hindi", "--text", "क", "--format", "xml"}).code == 2);
    CHECK(run({"parse", "--lang", "hindi", "--text", "क", "--fail-fast", "--collect-errors"}).code == 2);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("parse") != std::string::npos);
  }

  TEST_CASE("data errors exit 1") {
    CHECK(run({"parse", "--lang", "klingon", "--text", "क"}).code == 1);
    CHECK(run({"parse", "--lang", "hindi", "--in", "/nonexistent/file"}).code == 1);
    CHECK(run({"--data-dir", "/nonexistent/dir", "parse", "--lang", "hindi", "--text", "क"}).code == 1);
  }

  TEST_CASE("profile files and data directories") {
    TempDir dir;
    write(dir / "mine.json",
          R"({"schema_version": 1, "name": "mine", "script": "kannada", "family": "IA", "rule_packs": []})");
    const auto r = run({"parse", "--lang", (dir / "mine.json").string(), "--text", "ವಿಕಾಸ"});
    CHECK(r.code == 0);
    CHECK(jsonl(r.out).at(0)["words"][0]["cls"] == json({"w", "i", "k", "aa", "s"}));

    write(dir / "bad.json",
          R"({"schema_version": 1, "name": "bad", "script": "kannada", "family": "XX", "rule_packs": []})");
    const auto bad = run({"parse", "--lang", (dir / "bad.json").string(), "--text", "ವಿಕಾಸ"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("family") != std::string::npos);

    const auto shipped_dir = run({"--data-dir", CLSFRONT_SOURCE_DATA_DIR, "parse", "--lang",
                                  "sanskrit", "--text", "नमः", "--format", "text"});
    CHECK(shipped_dir.code == 0);
    CHECK(shipped_dir.out == "n-a-m-a-h-a\n");
  }
}

TEST_SUITE("cli inventory and select") {
  TEST_CASE("inventory lists base labels only") {
    const auto r = run({"inventory", "--lang", "sanskrit"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string label;
    int n = 0;
    while (std::getline(in, label)) {
      CHECK(shipped().inventory().is_base(label));
      CHECK(label != "hq");
      ++n;
    }
    CHECK(n > 40);
    const auto j = json::parse(run({"inventory", "--lang", "kurukh", "--format", "json"}).out);
    CHECK(j["family"] == "IA");
  }

  TEST_CASE("select tables") {
    const auto r = run({"select", "--target", "sanskrit", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = json::parse(r.out);
    REQUIRE(doc["candidates"].size() == 4);
    CHECK(doc["candidates"][0]["name"] == "kannada");
    CHECK(doc["candidates"][1]["name"] == "telugu");
    CHECK(doc["candidates"][0]["rank"] == 1);

    const auto text = run({"select", "--target", "maharashtrian_konkani"});
    CHECK(text.out.rfind("rank", 0) == 0);
    CHECK(text.out.find("1     marathi") != std::string::npos);
  }

  TEST_CASE("select with a corpus and a synthesizer directory") {
    TempDir dir;
    std::filesystem::create_directories(dir / "synths");
    write(dir / "synths/small.json",
          R"({"schema_version": 1, "name": "small", "language": "x", "family": "DR", "phone_inventory": ["k", "a"], "priors": {}})");
    write(dir / "synths/wide.json",
          R"({"schema_version": 1, "name": "wide", "language": "x", "family": "DR", "phone_inventory": ["k", "a", "m", "l"], "priors": {}})");
    write(dir / "corpus.txt", "ಕಮಲ\n");
    const auto r = run({"select", "--target", "kannada", "--synths", (dir / "synths").string(),
                        "--corpus", (dir / "corpus.txt").string(), "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["target_phones"] == json({"a", "k", "l", "m"}));
    CHECK(doc["candidates"][0]["name"] == "wide");
    CHECK(doc["candidates"][0]["coverage"] == 1.0);
    CHECK(doc["candidates"][1]["coverage"] == 0.5);
  }
}

TEST_SUITE("cli mcd") {
  TEST_CASE("self score prints zero") {
    TempDir dir;
    std::mt19937 rng(1);
    write_pcm_wav(dir / "a.wav", babble(0.5, 16000, rng));
    const auto r = run({"mcd", "--ref", (dir / "a.wav").string(), "--syn", (dir / "a.wav").string()});
    CHECK(r.code == 0);
    CHECK(r.out == "0.0000\n");
  }

  TEST_CASE("errors") {
    TempDir dir;
    write(dir / "junk.wav", "0123456789");
    CHECK(run({"mcd", "--ref", (dir / "junk.wav").string(), "--syn", (dir / "junk.wav").string()}).code == 1);
    CHECK(run({"mcd", "--ref", "x.wav"}).code == 2);
  }

  TEST_CASE("batch scoring keeps manifest order") {
    TempDir dir;
    std::mt19937 rng(2);
    for (int i = 0; i < 4; ++i) write_pcm_wav(dir / ("w" + std::to_string(i) + ".wav"), babble(0.4, 16000, rng));
    write(dir / "pairs.tsv",
          "# ref\tsyn\nw0.wav\tw0.wav\nw0.wav\tw1.wav\nw2.wav\tw3.wav\n" +
              (dir / "w3.wav").string() + "\tw3.wav\n");
    const auto one = run({"batch-mcd", "--pairs", (dir / "pairs.tsv").string(), "--jobs", "1"});
    const auto many = run({"batch-mcd", "--pairs", (dir / "pairs.tsv").string(), "--jobs", "4"});
    CHECK(one.code == 0);
    CHECK(one.out == many.out);
    CHECK(one.out.rfind("w0.wav\tw0.wav\t0.0000\n", 0) == 0);
    CHECK(one.out.find("\nmean\t") != std::string::npos);

    const auto j = json::parse(run({"batch-mcd", "--pairs", (dir / "pairs.tsv").string(), "--format", "json"}).out);
    REQUIRE(j["pairs"].size() == 4);
    double sum = 0;
    for (const auto& p : j["pairs"]) sum += p["mcd_db"].get<double>();
    CHECK(j["mean"].get<double>() == doctest::Approx(sum / 4));

    write(dir / "broken.tsv", "w0.wav\tmissing.wav\nw0.wav\tw0.wav\nnot a pair\n");
    const auto broken = run({"batch-mcd", "--pairs", (dir / "broken.tsv").string()});
    CHECK(broken.code == 1);
    CHECK(broken.out == "w0.wav\tw0.wav\t0.0000\nmean\t0.0000\n");
    CHECK(broken.err.find("line 1") != std::string::npos);
    CHECK(broken.err.find("line 3") != std::string::npos);
  }
}
