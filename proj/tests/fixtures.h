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

// Golden fixture definitions shared by the fixture writer and the tests.

#ifndef ASSORTMENT_TESTS_FIXTURES_H_
#define ASSORTMENT_TESTS_FIXTURES_H_

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "assortment/instance_io.h"
#include "assortment/reference.h"
#include "assortment/report.h"

namespace fixtures {

inline constexpr std::uint64_t kGeneratedSeed = 20260308;
inline constexpr int kGeneratedN = 8;
inline constexpr int kGeneratedCapacity = 3;

inline constexpr std::uint64_t kWitnessSeed = 6;
inline constexpr int kWitnessN = 6;
inline constexpr int kWitnessCapacity = 3;
inline constexpr int kWitnessAttempts = 500;

inline const char* kGeneratedFile = "generated_n8.json";
inline const char* kWitnessFile = "nesting_witness.json";

inline assortment::GeneratorSpec GeneratedSpec() {
  assortment::GeneratorSpec spec;
  spec.n = kGeneratedN;
  spec.seed = kGeneratedSeed;
  spec.capacity = kGeneratedCapacity;
  return spec;
}

inline std::string GeneratedDocument() {
  const assortment::GeneratorSpec spec = GeneratedSpec();
  nlohmann::json metadata = {{"generator", {{"N", spec.n}, {"seed", spec.seed}}}};
  return assortment::SerializeInstance(assortment::GenerateInstance(spec),
                                       metadata);
}

inline assortment::NestingWitness FindWitness() {
  auto witness = assortment::FindNestingWitness(kWitnessSeed, kWitnessN,
                                                kWitnessCapacity,
                                                kWitnessAttempts);
  if (!witness) throw std::runtime_error("no nesting witness found");
  return *witness;
}

inline std::string WitnessDocument(const assortment::NestingWitness& w) {
  nlohmann::json metadata = {
      {"nesting_witness",
       {{"search_seed", kWitnessSeed},
        {"attempt", w.attempt},
        {"instance_seed", w.instance_seed},
        {"c1", w.smaller_capacity},
        {"c2", w.larger_capacity},
        {"opt_c1", assortment::AssortmentToJson(w.smaller_optimum)},
        {"opt_c2", assortment::AssortmentToJson(w.larger_optimum)}}}};
  return assortment::SerializeInstance(w.instance, metadata);
}

// Reads a witness back from its fixture document.
inline assortment::NestingWitness ParseWitness(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  const nlohmann::json& meta = doc.at("metadata").at("nesting_witness");
  assortment::NestingWitness w;
  w.instance = assortment::InstanceFromJson(doc);
  w.smaller_capacity = meta.at("c1").get<int>();
  w.larger_capacity = meta.at("c2").get<int>();
  w.smaller_optimum = assortment::AssortmentFromJson(meta.at("opt_c1"));
  w.larger_optimum = assortment::AssortmentFromJson(meta.at("opt_c2"));
  w.attempt = meta.at("attempt").get<int>();
  w.instance_seed = meta.at("instance_seed").get<std::uint64_t>();
  return w;
}

inline void WriteAll(const std::filesystem::path& dir) {
  assortment::WriteTextFile(dir / kGeneratedFile, GeneratedDocument());
  assortment::WriteTextFile(dir / kWitnessFile, WitnessDocument(FindWitness()));
}

}  // namespace fixtures

#endif  // ASSORTMENT_TESTS_FIXTURES_H_
