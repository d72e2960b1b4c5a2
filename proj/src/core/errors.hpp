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

#ifndef CRYOBUDGET_CORE_ERRORS_HPP
#define CRYOBUDGET_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cryo {

enum class ErrorCode {
  invalid_argument,
  range,
  lookup,
  topology,
  config,
  parse,
  domain,
  io,
  fit,
  internal,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as cryo::Error; the C API maps the code onto
// cb_status and the CLI maps it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cryo

#endif  // CRYOBUDGET_CORE_ERRORS_HPP
