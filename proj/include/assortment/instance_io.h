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

// Instance files and seeded instance generation.
//
// Instance document (schema_version "1"):
//
//   {
//     "schema_version": "1",
//     "capacity": 3,                      // optional
//     "products": [ {"id": 1, "weight": "0.5", "price": "12"}, ... ],
//     "metadata": { ... }                 // optional, free-form
//   }
//
// Weights and prices are decimal strings holding the shortest representation
// that round-trips the binary64 value, so parse(serialize(x)) is bit-exact.

#ifndef ASSORTMENT_INSTANCE_IO_H_
#define ASSORTMENT_INSTANCE_IO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "assortment/assortment.h"

namespace assortment {

inline constexpr std::string_view kInstanceSchemaVersion = "1";

// Weights are log-uniform on [weight_lo, weight_hi], prices uniform on
// [price_lo, price_hi]. Only raw 64-bit engine output is consumed, so the
// same spec yields the same instance on every platform.
struct GeneratorSpec {
  int n = 0;
  double weight_lo = 0.1;
  double weight_hi = 10.0;
  double price_lo = 1.0;
  double price_hi = 100.0;
  std::uint64_t seed = 0;
  std::optional<int> capacity;

  void Validate() const;
};

Instance GenerateInstance(const GeneratorSpec& spec);

// Shortest round-trip decimal text for a finite double.
std::string FormatDecimal(double value);
double ParseDecimal(std::string_view text);

nlohmann::json InstanceToJson(const Instance& instance,
                              const nlohmann::json& metadata = nlohmann::json::object());
Instance InstanceFromJson(const nlohmann::json& doc,
                          nlohmann::json* metadata = nullptr);

// Canonical text form: two-space indented JSON with sorted keys and a
// trailing newline.
std::string SerializeInstance(const Instance& instance,
                              const nlohmann::json& metadata = nlohmann::json::object());
// Throws kSchema, kDuplicateId, kNonpositiveWeight or kNegativePrice.
Instance ParseInstance(std::string_view bytes,
                       nlohmann::json* metadata = nullptr);

// 16 hex digits of FNV-1a over the canonical serialization without metadata.
std::string InstanceDigest(const Instance& instance);

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace assortment

#endif  // ASSORTMENT_INSTANCE_IO_H_
