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

#include "assortment/assortment.h"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace assortment {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidAssortment: return "invalid_assortment";
    case ErrorCode::kInvalidChoice: return "invalid_choice";
    case ErrorCode::kInvalidInstance: return "invalid_instance";
    case ErrorCode::kInvalidConfig: return "invalid_config";
    case ErrorCode::kInvalidRange: return "invalid_range";
    case ErrorCode::kSchema: return "schema_violation";
    case ErrorCode::kDuplicateId: return "duplicate_id";
    case ErrorCode::kNonpositiveWeight: return "nonpositive_weight";
    case ErrorCode::kNegativePrice: return "negative_price";
    case ErrorCode::kEnumerationCap: return "enumeration_cap_exceeded";
    case ErrorCode::kUndefined: return "undefined_quantity";
    case ErrorCode::kMalformedTrace: return "malformed_trace";
    case ErrorCode::kIo: return "io_error";
    case ErrorCode::kUsage: return "usage_error";
    case ErrorCode::kAssertion: return "assertion_failure";
  }
  return "unknown";
}

Instance::Instance(std::vector<Product> products, std::optional<int> capacity)
    : products_(std::move(products)), capacity_(capacity) {
  std::sort(products_.begin(), products_.end(),
            [](const Product& a, const Product& b) { return a.id < b.id; });
  for (std::size_t k = 0; k < products_.size(); ++k) {
    const Product& p = products_[k];
    if (k > 0 && products_[k - 1].id == p.id) {
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate product id " + std::to_string(p.id));
    }
    if (!(p.weight > 0.0) || !std::isfinite(p.weight)) {
      throw Error(ErrorCode::kNonpositiveWeight,
                  "product " + std::to_string(p.id) +
                      " must have a finite positive weight");
    }
    if (!(p.price >= 0.0) || !std::isfinite(p.price)) {
      throw Error(ErrorCode::kNegativePrice,
                  "product " + std::to_string(p.id) +
                      " must have a finite nonnegative price");
    }
  }
  for (std::size_t k = 0; k < products_.size(); ++k) {
    if (products_[k].id != static_cast<ProductId>(k + 1)) {
      throw Error(ErrorCode::kInvalidInstance,
                  "product ids must be exactly 1..N; found id " +
                      std::to_string(products_[k].id));
    }
  }
  if (capacity_ && (*capacity_ < 0 || *capacity_ > size())) {
    throw Error(ErrorCode::kInvalidInstance,
                "capacity " + std::to_string(*capacity_) +
                    " outside [0, N]");
  }
}

const Product& Instance::product(ProductId id) const {
  if (!contains(id)) {
    throw Error(ErrorCode::kInvalidAssortment,
                "unknown product id " + std::to_string(id));
  }
  return products_[static_cast<std::size_t>(id - 1)];
}

std::vector<ProductId> Instance::ids() const {
  std::vector<ProductId> out(products_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = products_[k].id;
  return out;
}

Assortment::Assortment(std::initializer_list<ProductId> ids)
    : Assortment(std::vector<ProductId>(ids)) {}

Assortment::Assortment(std::vector<ProductId> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error(ErrorCode::kInvalidAssortment,
                "assortment contains a duplicate product id");
  }
}

bool Assortment::contains(ProductId id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

bool Assortment::is_subset_of(const Assortment& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

Assortment Assortment::with(ProductId id) const {
  Assortment out;
  out.members_.reserve(members_.size() + 1);
  auto pos = std::lower_bound(members_.begin(), members_.end(), id);
  if (pos != members_.end() && *pos == id) {
    throw Error(ErrorCode::kInvalidAssortment,
                "product " + std::to_string(id) + " already in assortment");
  }
  out.members_.assign(members_.begin(), pos);
  out.members_.push_back(id);
  out.members_.insert(out.members_.end(), pos, members_.end());
  return out;
}

Assortment Assortment::without(ProductId id) const {
  Assortment out = *this;
  auto pos = std::lower_bound(out.members_.begin(), out.members_.end(), id);
  if (pos == out.members_.end() || *pos != id) {
    throw Error(ErrorCode::kInvalidAssortment,
                "product " + std::to_string(id) + " not in assortment");
  }
  out.members_.erase(pos);
  return out;
}

Assortment Assortment::exchanged(ProductId out, ProductId in) const {
  return without(out).with(in);
}

std::string Assortment::encode() const {
  std::string text;
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k > 0) text.push_back(',');
    text += std::to_string(members_[k]);
  }
  return text;
}

Assortment Assortment::decode(std::string_view text) {
  std::vector<ProductId> ids;
  if (text.empty()) return Assortment();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(start, comma - start);
    ProductId id = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw Error(ErrorCode::kInvalidAssortment,
                  "malformed assortment encoding '" + std::string(text) + "'");
    }
    ids.push_back(id);
    start = comma + 1;
  }
  Assortment out(std::move(ids));
  if (out.encode() != text) {
    throw Error(ErrorCode::kInvalidAssortment,
                "assortment encoding '" + std::string(text) +
                    "' is not canonical");
  }
  return out;
}

void ValidateAssortment(const Instance& instance, const Assortment& m) {
  for (ProductId id : m) {
    if (!instance.contains(id)) {
      throw Error(ErrorCode::kInvalidAssortment,
                  "assortment references unknown product id " +
                      std::to_string(id));
    }
  }
}

}  // namespace assortment
