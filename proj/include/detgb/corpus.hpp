// Copyright 2026 The Authors.
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


#ifndef DETGB_CORPUS_HPP_
#define DETGB_CORPUS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "detgb/matrix_file.hpp"

namespace detgb {

struct CorpusEntry {
  std::string name;
  std::string description;
  MatrixSpec spec;
};

// Built-in matrices, also shipped as corpus/<name>.mat.
const std::vector<CorpusEntry>& corpus_entries();
std::optional<CorpusEntry> find_corpus_entry(std::string_view name);

}  // namespace detgb

#endif  // DETGB_CORPUS_HPP_
