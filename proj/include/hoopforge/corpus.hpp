// Copyright 2026 The hoopforge Authors
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

#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include "hoopforge/enumerate.hpp"
#include "hoopforge/error.hpp"
#include "hoopforge/hoop.hpp"
#include "hoopforge/text_format.hpp"

namespace hoopforge {

// A corpus file that failed to load; what() starts with the path.
class CorpusFileError : public Error {
 public:
  CorpusFileError(std::string path, const std::string& why)
      : Error(path + ": " + why), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// One <name>.alg file per algebra; names come from enumerate_hoops
// (n<order>_<seq>), so a directory listing sorts like the corpus.
inline void save_corpus(const std::string& dir,
                        const std::vector<FiniteHoop>& corpus) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create '" + dir + "': " + ec.message());
  }
  for (auto const& h : corpus) {
    if (h.name().empty()) {
      throw IoError("corpus algebras need names");
    }
    auto const path = (fs::path(dir) / (h.name() + ".alg")).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw IoError("cannot write '" + path + "'");
    }
    out << format_algebra(h);
    if (!out) {
      throw IoError("write failed for '" + path + "'");
    }
  }
}

inline std::vector<FiniteHoop> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError("corpus directory '" + dir + "' not found");
  }
  std::vector<std::string> paths;
  for (auto const& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".alg") {
      paths.push_back(entry.path().string());
    }
  }
  std::sort(paths.begin(), paths.end());
  std::vector<FiniteHoop> out;
  for (auto const& p : paths) {
    try {
      out.push_back(load_algebra(p));
    } catch (const Error& e) {
      throw CorpusFileError(p, e.what());
    }
  }
  // n10_* sorts before n3_* as text
  std::stable_sort(out.begin(), out.end(),
                   [](const FiniteHoop& a, const FiniteHoop& b) {
                     return a.order() < b.order();
                   });
  return out;
}

inline std::optional<std::string> corpus_dir_from_env() {
  if (char const* v = std::getenv("HOOPFORGE_CORPUS"); v && *v) {
    return std::string(v);
  }
  return std::nullopt;
}

// Hoops of order <= max_order: from the directory when given (filtered by
// order), otherwise enumerated.
inline std::vector<FiniteHoop> corpus_up_to(
    std::size_t max_order, const std::optional<std::string>& dir = {}) {
  if (dir) {
    auto all = load_corpus(*dir);
    std::vector<FiniteHoop> out;
    for (auto& h : all) {
      if (h.order() <= max_order) {
        out.push_back(std::move(h));
      }
    }
    return out;
  }
  return enumerate_corpus(max_order);
}

}  // namespace hoopforge
