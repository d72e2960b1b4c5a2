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

#include "core/json_reader.hpp"

#include <fstream>
#include <sstream>

namespace cryo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::range: return "range";
    case ErrorCode::lookup: return "lookup";
    case ErrorCode::topology: return "topology";
    case ErrorCode::config: return "config";
    case ErrorCode::parse: return "parse";
    case ErrorCode::domain: return "domain";
    case ErrorCode::io: return "io";
    case ErrorCode::fit: return "fit";
    case ErrorCode::internal: return "internal";
  }
  return "internal";
}

namespace detail {

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports "... at line L, column C: ..."
    throw Error(ErrorCode::parse, origin + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

const char* type_name(const Json& j) { return j.type_name(); }

}  // namespace

ObjectReader::ObjectReader(const Json& node, std::string path, ErrorCode code)
    : node_(&node), path_(std::move(path)), code_(code) {
  if (!node.is_object()) {
    throw Error(code_, path_ + ": expected object, got " + type_name(node));
  }
}

std::string ObjectReader::child_path(const std::string& key) const {
  return path_ + "." + key;
}

void ObjectReader::fail(const std::string& key, const std::string& message) const {
  throw Error(code_, child_path(key) + ": " + message);
}

bool ObjectReader::has(const std::string& key) const {
  auto it = node_->find(key);
  return it != node_->end() && !it->is_null();
}

const Json& ObjectReader::require(const std::string& key) {
  consumed_.insert(key);
  auto it = node_->find(key);
  if (it == node_->end() || it->is_null()) fail(key, "required key missing");
  return *it;
}

const Json& ObjectReader::raw(const std::string& key) { return require(key); }

double ObjectReader::number(const std::string& key) {
  const Json& v = require(key);
  if (!v.is_number()) fail(key, std::string("expected number, got ") + type_name(v));
  return v.get<double>();
}

std::optional<double> ObjectReader::opt_number(const std::string& key) {
  consumed_.insert(key);
  if (!has(key)) return std::nullopt;
  return number(key);
}

double ObjectReader::number_or(const std::string& key, double fallback) {
  return opt_number(key).value_or(fallback);
}

int ObjectReader::integer(const std::string& key) {
  const Json& v = require(key);
  if (!v.is_number_integer()) fail(key, std::string("expected integer, got ") + type_name(v));
  return v.get<int>();
}

int ObjectReader::integer_or(const std::string& key, int fallback) {
  consumed_.insert(key);
  if (!has(key)) return fallback;
  return integer(key);
}

std::string ObjectReader::string(const std::string& key) {
  const Json& v = require(key);
  if (!v.is_string()) fail(key, std::string("expected string, got ") + type_name(v));
  return v.get<std::string>();
}

std::optional<std::string> ObjectReader::opt_string(const std::string& key) {
  consumed_.insert(key);
  if (!has(key)) return std::nullopt;
  return string(key);
}

std::string ObjectReader::string_or(const std::string& key, const std::string& fallback) {
  return opt_string(key).value_or(fallback);
}

bool ObjectReader::boolean_or(const std::string& key, bool fallback) {
  consumed_.insert(key);
  if (!has(key)) return fallback;
  const Json& v = require(key);
  if (!v.is_boolean()) fail(key, std::string("expected boolean, got ") + type_name(v));
  return v.get<bool>();
}

std::vector<double> ObjectReader::number_list(const std::string& key) {
  const Json& v = require(key);
  if (!v.is_array()) fail(key, std::string("expected array, got ") + type_name(v));
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) fail(key + "[" + std::to_string(i) + "]", "expected number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

std::vector<std::pair<double, double>> ObjectReader::pair_list(const std::string& key) {
  const Json& v = require(key);
  if (!v.is_array()) fail(key, std::string("expected array, got ") + type_name(v));
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Json& p = v[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      fail(key + "[" + std::to_string(i) + "]", "expected [number, number]");
    }
    out.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return out;
}

ObjectReader ObjectReader::object(const std::string& key) {
  return ObjectReader(require(key), child_path(key), code_);
}

std::vector<ObjectReader> ObjectReader::object_list(const std::string& key) {
  const Json& v = require(key);
  if (!v.is_array()) fail(key, std::string("expected array, got ") + type_name(v));
  std::vector<ObjectReader> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.emplace_back(v[i], child_path(key) + "[" + std::to_string(i) + "]", code_);
  }
  return out;
}

void ObjectReader::finish() const {
  for (auto it = node_->begin(); it != node_->end(); ++it) {
    if (!consumed_.count(it.key())) fail(it.key(), "unknown key");
  }
}

}  // namespace detail
}  // namespace cryo
