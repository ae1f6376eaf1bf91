// Copyright 2026 The morphoseg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// morphoseg command-line front end. One subcommand per stage plus the
// end-to-end segment/desegment pipeline.
//
// Exit codes: 0 success, 1 best-effort repairs were needed (diagnostics on
// stderr), 2 usage, configuration or parse error.

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "morphoseg/affix.h"
#include "morphoseg/bpe.h"
#include "morphoseg/compound.h"
#include "morphoseg/core.h"
#include "morphoseg/lemmatag.h"
#include "morphoseg/parallel.h"
#include "morphoseg/pipeline.h"

namespace {

using namespace morphoseg;

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitError = 2;
constexpr std::size_t kBatchLines = 1 << 16;

struct Io {
  std::string input = "-";
  std::string output = "-";
  std::size_t jobs = 1;
  bool strict = false;

  Strictness strictness() const { return strict ? Strictness::kStrict : Strictness::kBestEffort; }
};

struct CompoundFlags {
  std::size_t min_part_size = 4;
  std::uint64_t min_part_count = 2;
  std::uint64_t max_part_count = 999999999;
  std::size_t max_parts = 4;
  std::string fillers;  // comma separated; empty = German default

  CompoundConfig config() const {
    CompoundConfig c;
    c.min_part_size = min_part_size;
    c.min_part_count = min_part_count;
    c.max_part_count = max_part_count;
    c.max_parts = max_parts;
    if (fillers.empty()) {
      c.fillers = default_fillers();
    } else {
      std::stringstream ss(fillers);
      for (std::string f; std::getline(ss, f, ',');) {
        if (!f.empty()) c.fillers.push_back(f);
      }
    }
    c.validate();
    return c;
  }
};

class InputFile {
 public:
  explicit InputFile(const std::string& path) {
    if (path == "-") {
      in_ = &std::cin;
    } else {
      file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
      if (!*file_) throw ConfigError("cannot open input: " + path);
      in_ = file_.get();
    }
  }
  std::istream& get() { return *in_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* in_ = nullptr;
};

class OutputFile {
 public:
  explicit OutputFile(const std::string& path) {
    if (path == "-") {
      out_ = &std::cout;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ConfigError("cannot open output: " + path);
      out_ = file_.get();
    }
  }
  ~OutputFile() { out_->flush(); }
  std::ostream& get() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_ = nullptr;
};

using LineFn = std::function<std::string(const std::string&, Diagnostics&)>;

// Streams the input in batches; each batch is mapped in parallel and written
// in order. Returns the exit code.
int run_lines(const Io& io, const LineFn& fn) {
  InputFile in(io.input);
  OutputFile out(io.output);
  std::size_t base = 0;
  bool any_diag = false;
  std::vector<std::string> lines;
  std::string line;
  bool eof = false;
  while (!eof) {
    lines.clear();
    while (lines.size() < kBatchLines) {
      if (!std::getline(in.get(), line)) {
        eof = true;
        break;
      }
      lines.push_back(line);
    }
    auto results = parallel_map(lines.size(), io.jobs,
                                [&](std::size_t i, Diagnostics& d) { return fn(lines[i], d); });
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (results[i].error) {
        try {
          std::rethrow_exception(results[i].error);
        } catch (const std::exception& e) {
          throw MalformedInput("line " + std::to_string(base + i + 1) + ": " + e.what());
        }
      }
      for (const std::string& m : results[i].diag.messages) {
        std::cerr << "line " << base + i + 1 << ": " << m << '\n';
        any_diag = true;
      }
      out.get() << results[i].output << '\n';
    }
    base += lines.size();
  }
  return any_diag ? kExitDiagnostics : kExitOk;
}

std::vector<std::string> read_all_lines(const std::string& path) {
  InputFile in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in.get(), line);) lines.push_back(line);
  return lines;
}

int report_diagnostics(const std::vector<ItemResult>& results, std::ostream& out,
                       const char* unit) {
  bool any = false;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].error) {
      try {
        std::rethrow_exception(results[i].error);
      } catch (const std::exception& e) {
        throw MalformedInput(std::string(unit) + " " + std::to_string(i + 1) + ": " + e.what());
      }
    }
    for (const std::string& m : results[i].diag.messages) {
      std::cerr << unit << ' ' << i + 1 << ": " << m << '\n';
      any = true;
    }
    out << results[i].output << '\n';
  }
  return any ? kExitDiagnostics : kExitOk;
}

void add_io(CLI::App* sub, Io& io, bool with_strict = false) {
  sub->add_option("--input", io.input, "Input file, '-' for stdin")->capture_default_str();
  sub->add_option("--output", io.output, "Output file, '-' for stdout")->capture_default_str();
  sub->add_option("--jobs", io.jobs, "Worker threads; output order is preserved")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  if (with_strict) sub->add_flag("--strict", io.strict, "Fail on malformed marker streams");
}

void add_compound_flags(CLI::App* sub, CompoundFlags& f) {
  sub->add_option("--min-part-size", f.min_part_size, "Minimum characters per part")
      ->capture_default_str();
  sub->add_option("--min-part-count", f.min_part_count, "Minimum corpus count per part")
      ->capture_default_str();
  sub->add_option("--max-part-count", f.max_part_count, "Count cap inside the score")
      ->capture_default_str();
  sub->add_option("--max-parts", f.max_parts, "Maximum number of parts")->capture_default_str();
  sub->add_option("--fillers", f.fillers, "Comma-separated filler list (default: German set)");
}

const AffixRuleSet& select_rules(const std::string& lang, const std::string& rules_path,
                                 std::optional<AffixRuleSet>& storage) {
  if (!rules_path.empty()) {
    storage = load_rules(rules_path);
    return *storage;
  }
  return builtin_rules(parse_language(lang));
}

std::string version_string() {
  return "morphoseg " + std::string(kVersion) + " (merge table: " + std::string(kBpeHeader) +
         ", rules: " + std::string(kAffixHeader) + ")";
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"Reversible, linguistically informed subword segmentation"};
  app.set_version_flag("--version", version_string());
  app.set_config("--config", "", "key=value file supplying any flag set");
  app.require_subcommand(1);

  const MarkerScheme scheme;
  Io io;
  CompoundFlags cflags;
  std::string lang = "de";
  std::string rules_path;
  std::string bpe_path;
  std::string freq_path;
  std::string truecase_path;
  std::string inflex_path;
  std::string freq_list_path;
  std::string strategy = "segmentation";
  std::size_t num_merges = 29500;
  std::vector<std::string> extra_inputs;
  bool revert = false;
  bool join = false;
  bool skip_bpe = false;
  bool no_hyphen = false;
  std::string src_path, tgt_path, out_src, out_tgt;
  FilterConfig fconfig;
  std::string json_path;

  std::function<int()> action;

  // BPE
  auto* learn_bpe_cmd = app.add_subcommand("learn-bpe", "Learn a BPE merge table");
  add_io(learn_bpe_cmd, io);
  learn_bpe_cmd->add_option("--merges", num_merges, "Number of merge operations")
      ->capture_default_str();
  learn_bpe_cmd->add_option("--also", extra_inputs, "Further corpora for joint learning");
  learn_bpe_cmd->callback([&] {
    action = [&] {
      WordCounts counts;
      std::vector<std::string> inputs{io.input};
      inputs.insert(inputs.end(), extra_inputs.begin(), extra_inputs.end());
      for (const std::string& path : inputs) {
        InputFile in(path);
        for (std::string line; std::getline(in.get(), line);) {
          add_word_counts(counts, parse_line(line, scheme));
        }
      }
      BpeConfig config;
      config.num_merges = num_merges;
      const MergeTable table = learn_bpe(counts, config);
      OutputFile out(io.output);
      write_merges(out.get(), table);
      return kExitOk;
    };
  });

  auto* apply_bpe_cmd = app.add_subcommand("apply-bpe", "Split tokens with a merge table");
  add_io(apply_bpe_cmd, io);
  apply_bpe_cmd->add_option("--bpe", bpe_path, "Merge table")->required();
  apply_bpe_cmd->callback([&] {
    action = [&] {
      const MergeTable merges = load_merges(bpe_path);
      return run_lines(io, [&](const std::string& line, Diagnostics&) {
        return join_tokens(apply_bpe(parse_line(line, scheme), merges, scheme));
      });
    };
  });

  auto* merge_bpe_cmd = app.add_subcommand("merge-bpe", "Undo BPE continuation markers");
  add_io(merge_bpe_cmd, io, true);
  merge_bpe_cmd->callback([&] {
    action = [&] {
      return run_lines(io, [&](const std::string& line, Diagnostics& d) {
        return join_tokens(merge_bpe(parse_line(line, scheme), scheme, io.strictness(), &d));
      });
    };
  });

  // Suffixes
  auto* split_suffixes_cmd = app.add_subcommand("split-suffixes", "Detach suffixes as $$ tokens");
  add_io(split_suffixes_cmd, io);
  split_suffixes_cmd->add_option("--lang", lang, "de, cs-light or cs-aggressive")->capture_default_str();
  split_suffixes_cmd->add_option("--rules", rules_path, "Rules file overriding --lang");
  split_suffixes_cmd->callback([&] {
    action = [&] {
      std::optional<AffixRuleSet> storage;
      const AffixRuleSet& rules = select_rules(lang, rules_path, storage);
      return run_lines(io, [&](const std::string& line, Diagnostics&) {
        return join_tokens(split_suffixes(parse_line(line, scheme), rules, scheme));
      });
    };
  });

  auto* join_suffixes_cmd = app.add_subcommand("join-suffixes", "Reattach $$ suffix tokens");
  add_io(join_suffixes_cmd, io, true);
  join_suffixes_cmd->callback([&] {
    action = [&] {
      return run_lines(io, [&](const std::string& line, Diagnostics& d) {
        return join_tokens(join_suffixes(parse_line(line, scheme), scheme, io.strictness(), &d));
      });
    };
  });

  // Compounds
  auto* learn_freq_cmd = app.add_subcommand("learn-freq", "Build a frequency lexicon");
  add_io(learn_freq_cmd, io);
  learn_freq_cmd->callback([&] {
    action = [&] {
      FrequencyLexicon lexicon;
      InputFile in(io.input);
      for (std::string line; std::getline(in.get(), line);) {
        add_to_lexicon(lexicon, parse_line(line, scheme));
      }
      OutputFile out(io.output);
      write_lexicon(out.get(), lexicon);
      return kExitOk;
    };
  });

  auto* split_compounds_cmd = app.add_subcommand("split-compounds", "Split compounds");
  add_io(split_compounds_cmd, io);
  split_compounds_cmd->add_option("--freq", freq_path, "Frequency lexicon")->required();
  add_compound_flags(split_compounds_cmd, cflags);
  split_compounds_cmd->callback([&] {
    action = [&] {
      const FrequencyLexicon lexicon = load_lexicon(freq_path);
      const CompoundConfig config = cflags.config();
      return run_lines(io, [&](const std::string& line, Diagnostics&) {
        return join_tokens(split_compounds(parse_line(line, scheme), lexicon, config, scheme));
      });
    };
  });

  auto* join_compounds_cmd = app.add_subcommand("join-compounds", "Reassemble split compounds");
  add_io(join_compounds_cmd, io, true);
  join_compounds_cmd->callback([&] {
    action = [&] {
      return run_lines(io, [&](const std::string& line, Diagnostics& d) {
        return join_tokens(join_compound(parse_line(line, scheme), scheme, io.strictness(), &d));
      });
    };
  });

  // Lemma-tag
  auto* encode_cmd = app.add_subcommand("encode-lemmatag", "Annotations to tag/lemma streams");
  add_io(encode_cmd, io);
  encode_cmd->callback([&] {
    action = [&] {
      std::vector<AnnotatedSentence> corpus;
      {
        InputFile in(io.input);
        corpus = read_annotations(in.get());
      }
      OutputFile out(io.output);
      auto results = parallel_map(corpus.size(), io.jobs, [&](std::size_t i, Diagnostics&) {
        return join_tokens(encode_lemmatag(corpus[i], scheme));
      });
      return report_diagnostics(results, out.get(), "sentence");
    };
  });

  auto* decode_cmd = app.add_subcommand("decode-lemmatag", "Re-inflect tag/lemma streams");
  add_io(decode_cmd, io, true);
  decode_cmd->add_option("--inflex", inflex_path, "Inflection lexicon")->required();
  decode_cmd->callback([&] {
    action = [&] {
      const InflectionLexicon lexicon = load_inflection_lexicon(inflex_path);
      return run_lines(io, [&](const std::string& line, Diagnostics& d) {
        const TokenStream merged = merge_bpe(parse_line(line, scheme), scheme, io.strictness(), &d);
        return join_tokens(decode_lemmatag(merged, lexicon, scheme, &d));
      });
    };
  });

  auto* build_inflex_cmd = app.add_subcommand("build-inflex", "Build an inflection lexicon");
  add_io(build_inflex_cmd, io);
  build_inflex_cmd->add_option("--freq-list", freq_list_path, "Frequency lexicon overriding counts");
  build_inflex_cmd->callback([&] {
    action = [&] {
      std::vector<AnnotatedSentence> corpus;
      {
        InputFile in(io.input);
        corpus = read_annotations(in.get());
      }
      std::optional<FrequencyLexicon> freq;
      if (!freq_list_path.empty()) freq = load_lexicon(freq_list_path);
      const InflectionLexicon lexicon = build_inflection_lexicon(corpus, freq ? &*freq : nullptr);
      OutputFile out(io.output);
      write_inflection_lexicon(out.get(), lexicon);
      return kExitOk;
    };
  });

  // Truecasing and hyphens
  auto* learn_tc_cmd = app.add_subcommand("learn-truecase", "Learn a truecasing model");
  add_io(learn_tc_cmd, io);
  learn_tc_cmd->callback([&] {
    action = [&] {
      std::vector<std::vector<std::string>> sentences;
      InputFile in(io.input);
      for (std::string line; std::getline(in.get(), line);) sentences.push_back(split_words(line));
      OutputFile out(io.output);
      write_truecase_model(out.get(), learn_truecaser(sentences));
      return kExitOk;
    };
  });

  auto* truecase_cmd = app.add_subcommand("truecase", "Apply or revert truecasing");
  add_io(truecase_cmd, io);
  truecase_cmd->add_option("--model", truecase_path, "Truecasing model");
  truecase_cmd->add_flag("--revert", revert, "Re-capitalise sentence-initial words");
  truecase_cmd->callback([&] {
    action = [&] {
      if (!revert && truecase_path.empty()) throw ConfigError("truecase needs --model (or --revert)");
      std::optional<TruecaseModel> model;
      if (!revert) model = load_truecase_model(truecase_path);
      return run_lines(io, [&](const std::string& line, Diagnostics&) {
        const std::vector<std::string> words = split_words(line);
        return join_words(revert ? revert_truecase(words, scheme) : apply_truecase(words, *model));
      });
    };
  });

  auto* hyphen_cmd = app.add_subcommand("hyphen-split", "Split internal hyphens into @-@ tokens");
  add_io(hyphen_cmd, io, true);
  hyphen_cmd->add_flag("--join", join, "Rejoin @-@ tokens instead");
  hyphen_cmd->callback([&] {
    action = [&] {
      return run_lines(io, [&](const std::string& line, Diagnostics& d) {
        const TokenStream s = parse_line(line, scheme);
        return join_tokens(join ? hyphen_join(s, scheme, io.strictness(), &d) : hyphen_split(s, scheme));
      });
    };
  });

  auto* tokenize_cmd = app.add_subcommand("tokenize", "Whitespace and punctuation tokenizer");
  add_io(tokenize_cmd, io);
  tokenize_cmd->callback([&] {
    action = [&] {
      return run_lines(io, [](const std::string& line, Diagnostics&) { return join_words(tokenize(line)); });
    };
  });

  auto* classify_cmd = app.add_subcommand("classify", "Print the token kind of every token");
  add_io(classify_cmd, io);
  classify_cmd->callback([&] {
    action = [&] {
      return run_lines(io, [&](const std::string& line, Diagnostics&) {
        std::vector<std::string> kinds;
        for (const Token& t : parse_line(line, scheme)) kinds.emplace_back(kind_name(t.kind));
        return join_words(kinds);
      });
    };
  });

  // Filtering
  auto* filter_cmd = app.add_subcommand("filter", "Two-stage length filter for parallel data");
  filter_cmd->add_option("--src", src_path, "Source side")->required();
  filter_cmd->add_option("--tgt", tgt_path, "Target side")->required();
  filter_cmd->add_option("--out-src", out_src, "Filtered source output")->required();
  filter_cmd->add_option("--out-tgt", out_tgt, "Filtered target output")->required();
  filter_cmd->add_option("--bpe", bpe_path, "Baseline merge table for the second stage")->required();
  filter_cmd->add_option("--max-len-raw", fconfig.max_len_raw, "Stage 1 limit")->capture_default_str();
  filter_cmd->add_option("--max-len-bpe", fconfig.max_len_bpe, "Stage 2 limit")->capture_default_str();
  filter_cmd->add_option("--output", io.output, "Report output")->capture_default_str();
  filter_cmd->add_option("--jobs", io.jobs, "Accepted for uniformity; filtering is sequential")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  filter_cmd->callback([&] {
    action = [&] {
      if (fconfig.max_len_raw > fconfig.max_len_bpe) {
        throw ConfigError("--max-len-raw must not exceed --max-len-bpe");
      }
      const MergeTable merges = load_merges(bpe_path);
      const std::vector<std::string> src = read_all_lines(src_path);
      const std::vector<std::string> tgt = read_all_lines(tgt_path);
      FilterReport report;
      const std::vector<std::size_t> kept = filter_lengths(src, tgt, fconfig, merges, scheme, report);
      OutputFile os(out_src);
      OutputFile ot(out_tgt);
      for (std::size_t i : kept) {
        os.get() << src[i] << '\n';
        ot.get() << tgt[i] << '\n';
      }
      OutputFile out(io.output);
      out.get() << "pairs\t" << report.total << '\n'
                << "dropped_raw\t" << report.dropped_raw << '\n'
                << "dropped_bpe\t" << report.dropped_bpe << '\n'
                << "kept\t" << report.kept << '\n';
      return kExitOk;
    };
  });

  // Pipeline
  auto pipeline_options = [&](CLI::App* sub) {
    sub->add_option("--strategy", strategy, "segmentation, baseline or lemmatag")->capture_default_str();
    sub->add_option("--lang", lang, "de, cs-light or cs-aggressive")->capture_default_str();
    sub->add_option("--rules", rules_path, "Rules file overriding --lang");
  };
  auto make_config = [&] {
    PipelineConfig config;
    config.strategy = parse_strategy(strategy);
    config.language = parse_language(lang);
    config.compound = cflags.config();
    config.hyphen_split = !no_hyphen;
    config.skip_bpe = skip_bpe;
    config.strictness = io.strictness();
    return config;
  };

  auto* segment_cmd = app.add_subcommand("segment", "Run the full segmentation cascade");
  add_io(segment_cmd, io);
  pipeline_options(segment_cmd);
  segment_cmd->add_option("--bpe", bpe_path, "Merge table");
  segment_cmd->add_option("--freq", freq_path, "Frequency lexicon (segmentation)");
  segment_cmd->add_option("--truecase", truecase_path, "Truecasing model");
  segment_cmd->add_flag("--skip-bpe", skip_bpe, "Stop before BPE");
  segment_cmd->add_flag("--no-hyphen-split", no_hyphen, "Keep hyphenated words whole");
  add_compound_flags(segment_cmd, cflags);
  segment_cmd->callback([&] {
    action = [&] {
      const PipelineConfig config = make_config();
      std::optional<AffixRuleSet> rules_storage;
      std::optional<MergeTable> merges;
      std::optional<FrequencyLexicon> freq;
      std::optional<TruecaseModel> truecase;
      Resources res;
      if (config.strategy == Strategy::kSegmentation) res.rules = &select_rules(lang, rules_path, rules_storage);
      if (!bpe_path.empty()) res.merges = &merges.emplace(load_merges(bpe_path));
      if (!freq_path.empty()) res.freq = &freq.emplace(load_lexicon(freq_path));
      if (!truecase_path.empty()) res.truecase = &truecase.emplace(load_truecase_model(truecase_path));
      const Pipeline pipeline(config, res);
      pipeline.require_segment_resources();
      if (config.strategy == Strategy::kLemmaTag) {
        std::vector<AnnotatedSentence> corpus;
        {
          InputFile in(io.input);
          corpus = read_annotations(in.get());
        }
        OutputFile out(io.output);
        auto results = parallel_map(corpus.size(), io.jobs, [&](std::size_t i, Diagnostics&) {
          return join_tokens(pipeline.segment(corpus[i]));
        });
        return report_diagnostics(results, out.get(), "sentence");
      }
      return run_lines(io, [&](const std::string& line, Diagnostics&) {
        return join_tokens(pipeline.segment(line));
      });
    };
  });

  auto* desegment_cmd = app.add_subcommand("desegment", "Invert the segmentation cascade");
  add_io(desegment_cmd, io, true);
  pipeline_options(desegment_cmd);
  desegment_cmd->add_option("--inflex", inflex_path, "Inflection lexicon (lemmatag)");
  desegment_cmd->callback([&] {
    action = [&] {
      const PipelineConfig config = make_config();
      std::optional<InflectionLexicon> inflex;
      Resources res;
      if (!inflex_path.empty()) res.inflex = &inflex.emplace(load_inflection_lexicon(inflex_path));
      const Pipeline pipeline(config, res);
      pipeline.require_desegment_resources();
      return run_lines(io, [&](const std::string& line, Diagnostics& d) {
        return pipeline.desegment(line, &d);
      });
    };
  });

  // Statistics
  auto* stats_cmd = app.add_subcommand("stats", "Vocabulary statistics");
  add_io(stats_cmd, io);
  stats_cmd->add_option("--json", json_path, "Also write a JSON summary to this file");
  stats_cmd->callback([&] {
    action = [&] {
      VocabCounter counter(scheme);
      InputFile in(io.input);
      for (std::string line; std::getline(in.get(), line);) counter.add_line(line);
      const VocabStats stats = counter.stats();
      OutputFile out(io.output);
      write_stats(out.get(), stats);
      if (!json_path.empty()) {
        nlohmann::ordered_json j;
        j["tokens"] = stats.tokens;
        j["types"] = stats.types;
        j["type_token_ratio"] = stats.type_token_ratio();
        j["kinds"] = stats.kinds;
        OutputFile jout(json_path);
        jout.get() << j.dump(2) << '\n';
      }
      return kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "morphoseg: " << e.what() << '\n';
    return kExitError;
  }
}
