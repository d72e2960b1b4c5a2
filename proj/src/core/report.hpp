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

#ifndef CRYOBUDGET_CORE_REPORT_HPP
#define CRYOBUDGET_CORE_REPORT_HPP

// RFC 4180 CSV with LF line endings and locale-independent numbers.

#include <string>
#include <vector>

namespace cryo {

/// Shortest "%.12g" rendering; independent of the C locale.
std::string format_number(double value);

std::string csv_escape(const std::string& field);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  CsvWriter& row(const std::vector<std::string>& fields);
  const std::string& str() const { return text_; }

 private:
  std::size_t width_;
  std::string text_;
};

/// Splits one record; `where` prefixes diagnostics (Error(parse)).
std::vector<std::string> split_csv_record(const std::string& line, const std::string& where);
double parse_csv_number(const std::string& field, const std::string& where);

}  // namespace cryo

#endif  // CRYOBUDGET_CORE_REPORT_HPP
