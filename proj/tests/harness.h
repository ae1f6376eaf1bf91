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

// Shared test helpers: process runner, fixture suite, independent oracles
// and the fuzz sentence generator.

#ifndef MORPHOSEG_TESTS_HARNESS_H_
#define MORPHOSEG_TESTS_HARNESS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "morphoseg/bpe.h"
#include "morphoseg/compound.h"

namespace morphoseg::testing {

struct CommandResult {
  std::string output;  // stdout only
  int exit_code = -1;
};

// Runs `command` through /bin/sh and captures stdout.
CommandResult run_command(const std::string& command);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
std::vector<std::string> read_lines(const std::string& path);
std::string shell_quote(const std::string& s);

// Creates a fresh directory under the system temp dir.
std::string make_temp_dir(const std::string& tag);

struct FixtureResult {
  std::string id;
  bool passed = false;
  std::string detail;
};

// Runs every fixture directory below `root` through the CLI binary.
std::vector<FixtureResult> run_fixture_suite(const std::string& root, const std::string& cli);

// Brute-force BPE: recounts every adjacent pair from scratch after each merge.
MergeTable oracle_learn_bpe(const WordCounts& words, std::size_t num_merges);

struct OracleSplit {
  bool split = false;
  std::vector<std::string> parts;
  std::vector<std::string> fillers;
};

// Exhaustive compound argmax over every segmentation of the word.
OracleSplit oracle_best_split(const std::string& word, const FrequencyLexicon& lexicon,
                              const CompoundConfig& config);

// Random sentences of single-space separated tokens mixing German words,
// marker look-alikes, hyphens and arbitrary Unicode.
std::vector<std::string> fuzz_sentences(std::size_t n, std::uint64_t seed,
                                        const std::vector<std::string>& vocabulary);

}  // namespace morphoseg::testing

#endif  // MORPHOSEG_TESTS_HARNESS_H_
