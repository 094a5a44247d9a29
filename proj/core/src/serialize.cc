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

#include "ddhlearn/serialize.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ddhlearn/error.h"

namespace ddhlearn {

namespace {

BigInt ParseDecimal(std::string_view text, std::string_view field) {
  DDHLEARN_ENFORCE(!text.empty(), ParseError, "field '" + std::string(field) + "' is empty");
  for (char c : text) {
    DDHLEARN_ENFORCE(c >= '0' && c <= '9', ParseError,
                     "field '" + std::string(field) + "' is not a decimal integer: '" +
                         std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

BigInt DecimalField(const nlohmann::json& j, const char* field) {
  DDHLEARN_ENFORCE(j.is_object(), ParseError, "expected a JSON object");
  auto it = j.find(field);
  DDHLEARN_ENFORCE(it != j.end(), ParseError, std::string("missing field '") + field + "'");
  if (it->is_number_unsigned()) {
    return BigInt(it->get<uint64_t>());
  }
  DDHLEARN_ENFORCE(it->is_string(), ParseError,
                   std::string("field '") + field + "' must be a decimal string");
  return ParseDecimal(it->get<std::string>(), field);
}

}  // namespace

Json InstanceToJson(const GroupInstance& inst) {
  Json j;
  j["n"] = std::to_string(inst.n());
  j["p"] = inst.p().str();
  j["q"] = inst.q().str();
  j["g"] = inst.g().str();
  j["g_a"] = inst.g_a().str();
  if (inst.a_secret()) {
    j["a_secret"] = inst.a_secret()->str();
  }
  return j;
}

GroupInstance InstanceFromJson(const nlohmann::json& j) {
  const BigInt n = DecimalField(j, "n");
  const BigInt p = DecimalField(j, "p");
  const BigInt q = DecimalField(j, "q");
  const BigInt g = DecimalField(j, "g");
  const BigInt g_a = DecimalField(j, "g_a");
  std::optional<BigInt> a_secret;
  if (j.contains("a_secret")) {
    a_secret = DecimalField(j, "a_secret");
  }
  GroupInstance inst = GroupInstance::Create(p, g, g_a, a_secret);
  DDHLEARN_ENFORCE(inst.q() == q, InvalidInstance, "field 'q' is not (p - 1) / 2");
  DDHLEARN_ENFORCE(BigInt(inst.n()) == n, InvalidInstance,
                   "field 'n' is not the bit length of p");
  return inst;
}

Json LearnedGeneratorToJson(const GroupInstance& inst, const PrfKey& key) {
  Json j = InstanceToJson(inst.WithoutSecret());
  j["key"] = key.value().str();
  return j;
}

BigInt KeyFromJson(const nlohmann::json& j) { return DecimalField(j, "key"); }

std::string FormatSamples(const std::vector<BitString>& samples) {
  std::string out;
  for (const BitString& s : samples) {
    out += s.ToString();
    out += '\n';
  }
  return out;
}

std::vector<BitString> ParseSamples(std::string_view text) {
  std::vector<BitString> samples;
  size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (line.empty()) {
      continue;
    }
    try {
      samples.push_back(BitString::FromString(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    DDHLEARN_ENFORCE(samples.back().size() == samples.front().size(), ParseError,
                     "line " + std::to_string(line_no) + " has " +
                         std::to_string(samples.back().size()) + " bits, expected " +
                         std::to_string(samples.front().size()));
  }
  return samples;
}

std::string RationalToDecimal(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt num = numerator(r);
  const BigInt den = denominator(r);
  const bool negative = num < 0;
  if (negative) {
    num = -num;
  }

  BigInt rest = den;
  unsigned twos = 0;
  unsigned fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) {
    return (negative ? "-" : "") + num.str() + "/" + den.str();
  }

  const unsigned digits = std::max(twos, fives);
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) {
    scale *= 10;
  }
  const BigInt scaled = num * scale / den;
  std::string text = scaled.str();
  if (digits > 0) {
    if (text.size() <= digits) {
      text.insert(0, digits + 1 - text.size(), '0');
    }
    text.insert(text.size() - digits, ".");
  }
  return (negative ? "-" : "") + text;
}

Rational RationalFromString(std::string_view text) {
  DDHLEARN_ENFORCE(!text.empty(), ParseError, "empty probability");
  const size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    const BigInt num = ParseDecimal(text.substr(0, slash), "numerator");
    const BigInt den = ParseDecimal(text.substr(slash + 1), "denominator");
    DDHLEARN_ENFORCE(den != 0, ParseError, "zero denominator");
    return Rational(num, den);
  }
  const size_t dot = text.find('.');
  if (dot != std::string_view::npos && text.front() == '-') {
    return -RationalFromString(text.substr(1));
  }
  if (dot == std::string_view::npos) {
    return Rational(ParseDecimal(text, "probability"));
  }
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = text.substr(dot + 1);
  BigInt scale = 1;
  for (size_t i = 0; i < frac.size(); ++i) {
    scale *= 10;
  }
  const BigInt int_part = whole.empty() ? BigInt(0) : ParseDecimal(whole, "probability");
  const BigInt frac_part = frac.empty() ? BigInt(0) : ParseDecimal(frac, "probability");
  return Rational(int_part * scale + frac_part, scale);
}

Json TableToJson(const ExactTable& table) {
  Json probs = Json::object();
  for (const auto& [x, mass] : table.probs()) {
    probs[x.ToString()] = RationalToDecimal(mass);
  }
  Json j;
  j["n_bits"] = table.n_bits();
  j["probs"] = std::move(probs);
  return j;
}

Json TableToJson(const FloatTable& table) {
  Json probs = Json::object();
  for (const auto& [x, mass] : table.probs()) {
    probs[x.ToString()] = mass;
  }
  Json j;
  j["n_bits"] = table.n_bits();
  j["probs"] = std::move(probs);
  return j;
}

ExactTable ExactTableFromJson(const nlohmann::json& j) {
  DDHLEARN_ENFORCE(j.is_object() && j.contains("n_bits") && j.contains("probs"), ParseError,
                   "table must have 'n_bits' and 'probs'");
  DDHLEARN_ENFORCE(j["n_bits"].is_number_unsigned(), ParseError, "'n_bits' must be a count");
  DDHLEARN_ENFORCE(j["probs"].is_object(), ParseError, "'probs' must be an object");
  std::map<BitString, Rational> probs;
  for (const auto& [key, value] : j["probs"].items()) {
    DDHLEARN_ENFORCE(value.is_string(), ParseError,
                     "probability of '" + key + "' must be a decimal string");
    probs[BitString::FromString(key)] = RationalFromString(value.get<std::string>());
  }
  try {
    return ExactTable(j["n_bits"].get<size_t>(), std::move(probs));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Json AdvantageToJson(const AdvantageEstimate& est) {
  Json j;
  j["game"] = est.game;
  j["n"] = est.n;
  j["trials"] = est.trials;
  j["p_real"] = est.p_real;
  j["p_random"] = est.p_random;
  j["advantage"] = est.advantage;
  j["ci"] = est.ci_halfwidth;
  j["seed"] = est.seed;
  j["adversary"] = est.adversary;
  j["flavor"] = OracleFlavorName(est.flavor);
  j["real_trials"] = est.real_trials;
  j["random_trials"] = est.random_trials;
  j["invalid_trials"] = est.invalid_trials;
  return j;
}

Json InferenceToJson(const InferenceResult& result, const std::optional<ReductionStats>& stats) {
  // The common result keys are filled with the pass rate against the 1/2
  // baseline of a blind guess.
  Json j;
  j["game"] = result.game;
  j["n"] = result.n;
  j["trials"] = result.trials;
  j["p_real"] = result.pass_rate;
  j["p_random"] = 0.5;
  j["advantage"] = result.pass_rate - 0.5;
  j["ci"] = result.ci_halfwidth;
  j["seed"] = result.seed;
  j["strategy"] = result.strategy;
  j["pass_rate"] = result.pass_rate;
  j["passes"] = result.passes;
  j["scored_trials"] = result.scored_trials;
  j["violations"] = result.violations;
  j["invalid_trials"] = result.invalid_trials;
  j["bound"] = InferenceBound(result.n);
  j["exceeds_bound"] = result.pass_rate > InferenceBound(result.n);
  if (stats) {
    Json cases;
    cases["a"] = stats->case_a;
    cases["a1"] = stats->case_a_passed;
    cases["b"] = stats->case_b;
    cases["c"] = stats->case_c;
    cases["learner_failures"] = stats->learner_failures;
    cases["samples_simulated"] = stats->samples_simulated;
    j["cases"] = std::move(cases);
  }
  if (!result.transcripts.empty()) {
    Json transcripts = Json::array();
    for (const InferenceTranscript& t : result.transcripts) {
      Json entry;
      Json queries = Json::array();
      for (const OracleRecord& r : t.queries) {
        queries.push_back(Json{{"query", r.query.ToString()}, {"response", r.response.str()}});
      }
      entry["queries"] = std::move(queries);
      entry["exam_string"] = t.exam_string.ToString();
      Json pair = Json::array();
      for (const BigInt& v : t.exam_pair) {
        pair.push_back(v.str());
      }
      entry["exam_pair"] = std::move(pair);
      entry["true_index"] = t.true_index;
      entry["guess"] = t.guess;
      entry["passed"] = t.passed;
      entry["protocol_violation"] = t.protocol_violation;
      transcripts.push_back(std::move(entry));
    }
    j["transcripts"] = std::move(transcripts);
  }
  return j;
}

Json ExactGeneratorReportToJson(const ExactGeneratorReport& report) {
  Json j;
  j["n"] = report.n;
  j["m"] = report.m;
  j["c"] = report.c_hex;
  j["functions_enumerated"] = report.functions_enumerated;
  j["exact_generators"] = report.exact_generators;
  j["permutations_enumerated"] = report.permutations_enumerated;
  j["distinct_padded_permuted"] = report.distinct_padded_permuted;
  j["sets_equal"] = report.sets_equal;
  return j;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  DDHLEARN_ENFORCE(in.good(), ParseError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  DDHLEARN_ENFORCE(out.good(), Error, "cannot write '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  DDHLEARN_ENFORCE(out.good(), Error, "failed writing '" + path + "'");
}

nlohmann::json ParseJson(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace ddhlearn
