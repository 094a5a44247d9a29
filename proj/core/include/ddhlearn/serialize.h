// Copyright 2026 The ddhlearn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ddhlearn/bool_dist.h"
#include "ddhlearn/distribution.h"
#include "ddhlearn/games.h"
#include "ddhlearn/numtheory.h"
#include "ddhlearn/prf.h"

namespace ddhlearn {

using Json = nlohmann::ordered_json;

// {"n", "p", "q", "g", "g_a"[, "a_secret"]} with decimal-string values, in
// that order.
Json InstanceToJson(const GroupInstance& inst);
// Throws ParseError on missing or malformed fields, InvalidInstance when the
// parameters fail validation or "n"/"q" disagree with p.
GroupInstance InstanceFromJson(const nlohmann::json& j);

// The instance object (without the secret) followed by a decimal "key".
Json LearnedGeneratorToJson(const GroupInstance& inst, const PrfKey& key);
// Reads the "key" field of a learned-generator object. Throws ParseError.
BigInt KeyFromJson(const nlohmann::json& j);

// One bitstring per line, each newline-terminated.
std::string FormatSamples(const std::vector<BitString>& samples);
// Blank lines are skipped; a trailing '\r' is tolerated. Throws ParseError on
// any other character or on lines of differing lengths.
std::vector<BitString> ParseSamples(std::string_view text);

// Exact decimal expansion when the denominator is of the form 2^a 5^b,
// otherwise "num/den".
std::string RationalToDecimal(const Rational& r);
// Accepts "0.125", "1/8" or "1". Throws ParseError.
Rational RationalFromString(std::string_view text);

// {"n_bits": .., "probs": {bitstring: probability, ...}} in key order.
Json TableToJson(const ExactTable& table);
Json TableToJson(const FloatTable& table);
ExactTable ExactTableFromJson(const nlohmann::json& j);

Json AdvantageToJson(const AdvantageEstimate& est);
Json InferenceToJson(const InferenceResult& result,
                     const std::optional<ReductionStats>& stats = std::nullopt);
Json ExactGeneratorReportToJson(const ExactGeneratorReport& report);

// Whole-file helpers. Throw ParseError when the file cannot be read and Error
// when it cannot be written.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view content);

// Parses JSON text, converting parser failures to ParseError.
nlohmann::json ParseJson(std::string_view text);

}  // namespace ddhlearn
