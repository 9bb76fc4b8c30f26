// Copyright 2026 The Clarith Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The proof corpus shipped under tests/data/corpus.

#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "clarith/proof.hpp"

namespace clarith::testing {

struct CorpusEntry {
  std::string name;
  Proof proof;
};

inline std::vector<CorpusEntry> load_corpus(const std::string& kind) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(fs::path(CLARITH_CORPUS_DIR) / kind))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files)
    out.push_back({f.stem().string(), load_proof_file(f.string())});
  return out;
}

inline bool uses_rule(const Proof& p, const char* rule) {
  return std::any_of(p.nodes().begin(), p.nodes().end(),
                     [&](const ProofNode& n) { return n.rule == rule; });
}

}  // namespace clarith::testing
