// Copyright 2026 The cryobudget Authors
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

#ifndef CRYOBUDGET_CORE_JSON_READER_HPP
#define CRYOBUDGET_CORE_JSON_READER_HPP

// Strict reader over nlohmann::json: every key must be consumed, every value
// must have the expected type, and failures name the JSON path.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "core/errors.hpp"

namespace cryo::detail {

using Json = nlohmann::json;

// Parses text; syntax errors become Error(parse) with line/column.
Json parse_json_text(const std::string& text, const std::string& origin);
std::string read_text_file(const std::string& path);

class ObjectReader {
 public:
  ObjectReader(const Json& node, std::string path, ErrorCode code = ErrorCode::config);

  bool has(const std::string& key) const;
  const Json& raw(const std::string& key);

  double number(const std::string& key);
  std::optional<double> opt_number(const std::string& key);
  double number_or(const std::string& key, double fallback);
  int integer(const std::string& key);
  int integer_or(const std::string& key, int fallback);
  std::string string(const std::string& key);
  std::optional<std::string> opt_string(const std::string& key);
  std::string string_or(const std::string& key, const std::string& fallback);
  bool boolean_or(const std::string& key, bool fallback);
  std::vector<double> number_list(const std::string& key);
  std::vector<std::pair<double, double>> pair_list(const std::string& key);

  ObjectReader object(const std::string& key);
  std::vector<ObjectReader> object_list(const std::string& key);

  std::string child_path(const std::string& key) const;
  const std::string& path() const { return path_; }
  [[noreturn]] void fail(const std::string& key, const std::string& message) const;

  // Rejects keys that were never read.
  void finish() const;

 private:
  const Json& require(const std::string& key);

  const Json* node_;
  std::string path_;
  ErrorCode code_;
  std::set<std::string> consumed_;
};

}  // namespace cryo::detail

#endif  // CRYOBUDGET_CORE_JSON_READER_HPP
