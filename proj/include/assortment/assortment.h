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

// Core value types shared by every module: products, instances, assortments
// and the library's error type.

#ifndef ASSORTMENT_ASSORTMENT_H_
#define ASSORTMENT_ASSORTMENT_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace assortment {

using ProductId = int;

// The no-purchase alternative. Its MNL weight is fixed at 1.
inline constexpr ProductId kNoPurchase = 0;

enum class ErrorCode {
  kInvalidAssortment,
  kInvalidChoice,
  kInvalidInstance,
  kInvalidConfig,
  kInvalidRange,
  kSchema,
  kDuplicateId,
  kNonpositiveWeight,
  kNegativePrice,
  kEnumerationCap,
  kUndefined,
  kMalformedTrace,
  kIo,
  kUsage,
  kAssertion,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Product {
  ProductId id = 0;
  double weight = 1.0;  // MNL preference weight, > 0
  double price = 0.0;   // revenue per sale, >= 0

  friend bool operator==(const Product&, const Product&) = default;
};

// Product universe with identifiers 1..N. Products are stored in id order so
// lookup is an index computation.
class Instance {
 public:
  Instance() = default;
  // Validates ids, weights and prices; throws Error on violation.
  explicit Instance(std::vector<Product> products,
                    std::optional<int> capacity = std::nullopt);

  int size() const { return static_cast<int>(products_.size()); }
  bool empty() const { return products_.empty(); }
  bool contains(ProductId id) const { return id >= 1 && id <= size(); }

  const Product& product(ProductId id) const;
  std::span<const Product> products() const { return products_; }
  std::optional<int> capacity() const { return capacity_; }

  // All ids, ascending.
  std::vector<ProductId> ids() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Product> products_;
  std::optional<int> capacity_;
};

// A set of product ids kept in ascending order, so equality, ordering and the
// text encoding are canonical.
class Assortment {
 public:
  Assortment() = default;
  Assortment(std::initializer_list<ProductId> ids);
  explicit Assortment(std::vector<ProductId> ids);

  std::span<const ProductId> members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(ProductId id) const;
  bool is_subset_of(const Assortment& other) const;

  Assortment with(ProductId id) const;
  Assortment without(ProductId id) const;
  Assortment exchanged(ProductId out, ProductId in) const;

  // Ascending ids joined by ','; "" for the empty set. Stable across releases:
  // the noise hash is keyed on it.
  std::string encode() const;
  static Assortment decode(std::string_view text);

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  // Lexicographic over the ascending id sequence.
  friend auto operator<=>(const Assortment&, const Assortment&) = default;
  friend bool operator==(const Assortment&, const Assortment&) = default;

 private:
  std::vector<ProductId> members_;
};

// Throws kInvalidAssortment unless every member of `m` exists in `instance`.
void ValidateAssortment(const Instance& instance, const Assortment& m);

}  // namespace assortment

#endif  // ASSORTMENT_ASSORTMENT_H_
