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

#include "assortment/instance_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "assortment/hash.h"

namespace assortment {

using nlohmann::json;

void GeneratorSpec::Validate() const {
  if (n < 0) throw Error(ErrorCode::kInvalidRange, "N must be >= 0");
  if (!(weight_lo > 0.0) || !(weight_hi >= weight_lo) ||
      !std::isfinite(weight_hi)) {
    throw Error(ErrorCode::kInvalidRange,
                "weight range must satisfy 0 < lo <= hi < inf");
  }
  if (!(price_lo >= 0.0) || !(price_hi >= price_lo) ||
      !std::isfinite(price_hi)) {
    throw Error(ErrorCode::kInvalidRange,
                "price range must satisfy 0 <= lo <= hi < inf");
  }
  if (capacity && (*capacity < 0 || *capacity > n)) {
    throw Error(ErrorCode::kInvalidRange, "capacity must lie in [0, N]");
  }
}

Instance GenerateInstance(const GeneratorSpec& spec) {
  spec.Validate();
  std::mt19937_64 engine(spec.seed);
  const double log_lo = std::log(spec.weight_lo);
  const double log_hi = std::log(spec.weight_hi);
  std::vector<Product> products;
  products.reserve(static_cast<std::size_t>(spec.n));
  for (int id = 1; id <= spec.n; ++id) {
    const double a = UnitInterval(engine());
    const double b = UnitInterval(engine());
    Product p;
    p.id = id;
    p.weight = std::exp(log_lo + a * (log_hi - log_lo));
    p.price = spec.price_lo + b * (spec.price_hi - spec.price_lo);
    products.push_back(p);
  }
  return Instance(std::move(products), spec.capacity);
}

std::string FormatDecimal(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kSchema, "cannot serialize a non-finite number");
  }
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw Error(ErrorCode::kSchema, "number formatting failed");
  return std::string(buffer, ptr);
}

double ParseDecimal(std::string_view text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() ||
      !std::isfinite(value)) {
    throw Error(ErrorCode::kSchema,
                "malformed decimal '" + std::string(text) + "'");
  }
  return value;
}

json InstanceToJson(const Instance& instance, const json& metadata) {
  json doc = json::object();
  doc["schema_version"] = kInstanceSchemaVersion;
  if (instance.capacity()) doc["capacity"] = *instance.capacity();
  json products = json::array();
  for (const Product& p : instance.products()) {
    products.push_back({{"id", p.id},
                        {"weight", FormatDecimal(p.weight)},
                        {"price", FormatDecimal(p.price)}});
  }
  doc["products"] = std::move(products);
  doc["metadata"] = metadata.is_null() ? json::object() : metadata;
  return doc;
}

namespace {

double NumberField(const json& product, const char* key) {
  auto it = product.find(key);
  if (it == product.end()) {
    throw Error(ErrorCode::kSchema, std::string("product is missing '") + key + "'");
  }
  if (it->is_string()) return ParseDecimal(it->get_ref<const std::string&>());
  if (it->is_number()) return it->get<double>();
  throw Error(ErrorCode::kSchema,
              std::string("product field '") + key + "' must be a decimal string");
}

}  // namespace

Instance InstanceFromJson(const json& doc, json* metadata) {
  if (!doc.is_object()) throw Error(ErrorCode::kSchema, "instance must be a JSON object");
  auto version = doc.find("schema_version");
  if (version == doc.end() || !version->is_string() ||
      version->get<std::string>() != kInstanceSchemaVersion) {
    throw Error(ErrorCode::kSchema, "unsupported or missing schema_version");
  }
  auto products_it = doc.find("products");
  if (products_it == doc.end() || !products_it->is_array()) {
    throw Error(ErrorCode::kSchema, "'products' must be an array");
  }
  std::vector<Product> products;
  std::set<ProductId> seen;
  for (const json& item : *products_it) {
    if (!item.is_object()) throw Error(ErrorCode::kSchema, "product must be an object");
    auto id_it = item.find("id");
    if (id_it == item.end() || !id_it->is_number_integer()) {
      throw Error(ErrorCode::kSchema, "product 'id' must be an integer");
    }
    Product p;
    p.id = id_it->get<ProductId>();
    if (!seen.insert(p.id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate product id " + std::to_string(p.id));
    }
    p.weight = NumberField(item, "weight");
    p.price = NumberField(item, "price");
    products.push_back(p);
  }
  std::optional<int> capacity;
  if (auto cap = doc.find("capacity"); cap != doc.end() && !cap->is_null()) {
    if (!cap->is_number_integer()) {
      throw Error(ErrorCode::kSchema, "'capacity' must be an integer");
    }
    capacity = cap->get<int>();
  }
  if (metadata) {
    auto meta = doc.find("metadata");
    *metadata = (meta == doc.end()) ? json::object() : *meta;
  }
  try {
    return Instance(std::move(products), capacity);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidInstance) {
      throw Error(ErrorCode::kSchema, e.what());
    }
    throw;
  }
}

std::string SerializeInstance(const Instance& instance, const json& metadata) {
  return InstanceToJson(instance, metadata).dump(2) + "\n";
}

Instance ParseInstance(std::string_view bytes, json* metadata) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchema, std::string("invalid JSON: ") + e.what());
  }
  return InstanceFromJson(doc, metadata);
}

std::string InstanceDigest(const Instance& instance) {
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(
                    Fnv1a64(SerializeInstance(instance))));
  return buffer;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path.string() + "' failed");
}

}  // namespace assortment
