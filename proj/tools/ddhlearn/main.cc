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

#include <cmath>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ddhlearn/error.h"
#include "ddhlearn/games.h"
#include "ddhlearn/generator.h"
#include "ddhlearn/learner.h"
#include "ddhlearn/serialize.h"
#include "ddhlearn/verify.h"

namespace {

using namespace ddhlearn;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string format = "json";
  std::string out;
  std::string engine = "bsgs";
};

void Emit(const Common& common, const std::string& text) {
  if (common.out.empty()) {
    std::cout << text;
  } else {
    WriteFile(common.out, text);
  }
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

LearnerOptions MakeLearnerOptions(const Common& common) {
  LearnerOptions options;
  options.engine = ParseDlogEngine(common.engine);
  return options;
}

void AddFormatFlags(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", common.out, "Write the output to this file instead of stdout");
}

void AddEngineFlag(CLI::App* cmd, Common& common) {
  cmd->add_option("--engine", common.engine, "Discrete-log engine")
      ->check(CLI::IsMember({"brute", "bsgs"}))
      ->capture_default_str();
}

// ---------------------------------------------------------------------------
// instance
// ---------------------------------------------------------------------------

struct InstanceArgs {
  unsigned n = 8;
  uint64_t seed = 0;
  bool with_secret = false;
};

int RunInstance(const InstanceArgs& args, const Common& common) {
  InstanceOptions options;
  options.keep_secret = args.with_secret;
  Rng rng = DeriveRng(args.seed, "cli-instance", 0);
  const GroupInstance inst = GenerateInstance(args.n, rng, options);
  if (common.format == "json") {
    Emit(common, Dump(InstanceToJson(inst)));
  } else {
    std::ostringstream out;
    out << "n = " << inst.n() << "\np = " << inst.p() << "\nq = " << inst.q()
        << "\ng = " << inst.g() << "\ng_a = " << inst.g_a() << "\n";
    if (inst.a_secret()) out << "a = " << *inst.a_secret() << "\n";
    Emit(common, out.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------

struct SampleArgs {
  std::string instance_file;
  std::string key;
  uint64_t count = 1;
  uint64_t seed = 0;
};

int RunSample(const SampleArgs& args, const Common& common) {
  const GroupInstance inst = InstanceFromJson(ParseJson(ReadFile(args.instance_file)));
  BigInt key_value;
  try {
    key_value = BigInt(args.key);
  } catch (const std::exception&) {
    throw ParseError("--key must be a decimal integer, got '" + args.key + "'");
  }
  DDHLEARN_ENFORCE(key_value >= 1 && key_value <= inst.q(), InvalidArgument,
                   "--key must lie in {1.." + inst.q().str() + "}, got " + args.key);
  SampleOracle oracle(MakeGenSpec(inst, PrfKey(inst, key_value)),
                      DeriveRng(args.seed, "cli-sample", 0));
  std::vector<BitString> samples;
  samples.reserve(args.count);
  for (uint64_t i = 0; i < args.count; ++i) samples.push_back(oracle.Sample());
  Emit(common, FormatSamples(samples));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// learn
// ---------------------------------------------------------------------------

struct LearnArgs {
  std::string sample_file;
  std::string target_key;
};

int RunLearn(const LearnArgs& args, const Common& common) {
  const std::vector<BitString> samples = ParseSamples(ReadFile(args.sample_file));
  DDHLEARN_ENFORCE(!samples.empty(), ParseError,
                   "sample file '" + args.sample_file + "' contains no samples");
  const LearnerOptions options = MakeLearnerOptions(common);
  const LearnedGenerator learned = LearnFromSample(samples.front(), options);
  const GroupInstance& inst = learned.instance;

  uint64_t consistent = 0;
  for (const BitString& s : samples) {
    const BitString x = s.Slice(0, inst.n());
    consistent += learned.generator(x) == s ? 1 : 0;
  }

  Json j = LearnedGeneratorToJson(inst, learned.key);
  j["samples"] = samples.size();
  j["consistent_samples"] = consistent;
  std::optional<double> kl;
  if (!args.target_key.empty()) {
    const PrfKey target(inst, BigInt(args.target_key));
    const GeneratorSpec target_gen = MakeGenSpec(inst, target);
    j["target_key"] = target.value().str();
    j["key_matches_target"] = target == learned.key;
    if (inst.n() <= kMaxExactSeedBits) {
      kl = KlDivergence(TabulateExact(target_gen), TabulateExact(learned.generator));
    } else if (inst.n() <= kMaxFloatSeedBits) {
      kl = KlDivergence(TabulateFloat(target_gen), TabulateFloat(learned.generator));
    }
    if (kl && std::isinf(*kl)) {
      j["kl_to_target"] = "inf";
    } else if (kl) {
      j["kl_to_target"] = *kl;
    } else {
      j["kl_to_target"] = nullptr;
    }
  }

  if (common.format == "json") {
    Emit(common, Dump(j));
  } else {
    std::ostringstream out;
    out << "key = " << learned.key.value() << "\n"
        << "instance: n = " << inst.n() << ", p = " << inst.p() << ", g = " << inst.g()
        << ", g_a = " << inst.g_a() << "\n"
        << "consistent samples: " << consistent << " / " << samples.size() << "\n";
    if (!args.target_key.empty()) {
      out << "kl to target: ";
      if (kl) {
        out << *kl << "\n";
      } else {
        out << "not computed (n too large)\n";
      }
    }
    Emit(common, out.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// game
// ---------------------------------------------------------------------------

struct GameArgs {
  std::string game;
  unsigned n = 8;
  uint64_t trials = 400;
  uint64_t seed = 0;
  std::string adversary = "key-learner";
  std::string flavor = "mq";
  std::string strategy = "key-learner";
  std::string learner = "exact";
  std::string form = "gen";
  std::optional<uint64_t> budget;
  size_t transcripts = 0;
};

std::string Fixed(double v) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(4);
  out << v;
  return out.str();
}

int RunGame(const GameArgs& args, const Common& common) {
  const LearnerOptions learner_options = MakeLearnerOptions(common);
  Json j;
  std::ostringstream text;

  if (args.game == "distinguish") {
    std::unique_ptr<Distinguisher> adversary;
    if (args.adversary == "key-learner") {
      adversary = MakeKeyLearnerDistinguisher(learner_options);
    } else if (args.adversary == "constant") {
      adversary = MakeConstantDistinguisher(true);
    } else {
      adversary = MakeCoinFlipDistinguisher();
    }
    DistinguisherGameOptions options;
    options.flavor = ParseOracleFlavor(args.flavor);
    options.n = args.n;
    options.trials = args.trials;
    options.seed = args.seed;
    options.query_budget = args.budget;
    const AdvantageEstimate est = RunDistinguisherGame(*adversary, options);
    j = AdvantageToJson(est);
    text << "distinguish (" << est.adversary << ", " << OracleFlavorName(est.flavor)
         << ") n = " << est.n << ", trials = " << est.trials << "\n"
         << "p_real = " << Fixed(est.p_real) << ", p_random = " << Fixed(est.p_random)
         << ", advantage = " << Fixed(est.advantage) << " +/- " << Fixed(est.ci_halfwidth)
         << "\n";
    if (est.invalid_trials > 0) text << "invalid trials: " << est.invalid_trials << "\n";
  } else {
    InferenceGameOptions options;
    options.n = args.n;
    options.trials = args.trials;
    options.seed = args.seed;
    options.query_budget = args.budget;
    options.keep_transcripts = args.transcripts;

    InferenceFactory factory;
    std::optional<ReductionStats> stats_copy;
    std::shared_ptr<ReductionStats> stats;
    if (args.game == "infer") {
      options.strategy_name = args.strategy;
      if (args.strategy == "key-learner") {
        factory = KeyLearnerStrategy(learner_options);
      } else if (args.strategy == "random") {
        factory = RandomGuesserStrategy();
      } else {
        factory = ReplayStrategy();
      }
    } else {
      options.strategy_name = "reduction/" + args.learner + "/" + args.form;
      std::shared_ptr<GeneratorLearner> learner = args.learner == "exact"
                                                      ? MakeExactGeneratorLearner(learner_options)
                                                      : MakeUniformGeneratorLearner();
      ReductionOptions reduction;
      reduction.epsilon = std::log2(static_cast<double>(std::max(args.n, 2u)));
      reduction.delta = 0.5;
      reduction.form = args.form == "gen" ? SampleForm::kGen : SampleForm::kKgen;
      stats = std::make_shared<ReductionStats>();
      factory = KearnsReduction(learner, reduction, stats);
    }
    InferenceResult result = RunInferenceGame(factory, options);
    result.game = args.game;
    if (stats) stats_copy = *stats;
    j = InferenceToJson(result, stats_copy);
    text << result.game << " (" << result.strategy << ") n = " << result.n
         << ", trials = " << result.trials << "\n"
         << "pass rate = " << Fixed(result.pass_rate) << " +/- " << Fixed(result.ci_halfwidth)
         << " (bound " << Fixed(InferenceBound(result.n)) << ")\n";
    if (result.violations > 0) text << "protocol violations: " << result.violations << "\n";
    if (result.invalid_trials > 0) text << "invalid trials: " << result.invalid_trials << "\n";
    if (stats) {
      text << "cases: a = " << stats->case_a << " (a1 = " << stats->case_a_passed
           << "), b = " << stats->case_b << ", c = " << stats->case_c << "\n";
    }
  }

  Emit(common, common.format == "json" ? Dump(j) : text.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  uint64_t seed = 0;
};

int RunVerify(const VerifyArgs& args, const Common& common) {
  const SuiteReport report = RunVerifySuite(args.suite, args.seed);
  if (common.format == "json") {
    Emit(common, Dump(SuiteReportToJson(report)));
  } else {
    std::ostringstream out;
    size_t passed = 0;
    for (const Check& c : report.checks) {
      out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
      passed += c.passed ? 1 : 0;
    }
    out << passed << " / " << report.checks.size() << " checks passed\n";
    Emit(common, out.str());
  }
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learning experiments on the DDH-based GGM keyed function family"};
  app.require_subcommand(1);

  Common common;

  InstanceArgs instance_args;
  CLI::App* instance = app.add_subcommand("instance", "Generate a group instance");
  instance->add_option("--n", instance_args.n, "Bit length of the safe prime (>= 3)")
      ->capture_default_str();
  instance->add_option("--seed", instance_args.seed, "Master seed")->capture_default_str();
  instance->add_flag("--with-secret", instance_args.with_secret,
                     "Include the secret exponent a in the output");
  AddFormatFlags(instance, common);

  SampleArgs sample_args;
  CLI::App* sample = app.add_subcommand("sample", "Draw GEN samples for a key");
  sample->add_option("--instance", sample_args.instance_file, "Instance JSON file")->required();
  sample->add_option("--key", sample_args.key, "Key in {1..q}")->required();
  sample->add_option("--count", sample_args.count, "Number of samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sample->add_option("--seed", sample_args.seed, "Master seed")->capture_default_str();
  sample->add_option("--out", common.out, "Write the samples to this file instead of stdout");

  LearnArgs learn_args;
  CLI::App* learn = app.add_subcommand("learn", "Learn the generator from a sample file");
  learn->add_option("samples", learn_args.sample_file, "Sample file (one bitstring per line)")
      ->required();
  learn->add_option("--target-key", learn_args.target_key,
                    "Key of the sampling generator, for a divergence report");
  AddEngineFlag(learn, common);
  AddFormatFlags(learn, common);

  GameArgs game_args;
  CLI::App* game = app.add_subcommand("game", "Run a security game and report statistics");
  game->add_option("game", game_args.game, "distinguish, infer or reduction")
      ->required()
      ->check(CLI::IsMember({"distinguish", "infer", "reduction"}));
  game->add_option("--n", game_args.n, "Bit length")->capture_default_str();
  game->add_option("--trials", game_args.trials, "Number of trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  game->add_option("--seed", game_args.seed, "Master seed")->capture_default_str();
  game->add_option("--adversary", game_args.adversary, "Distinguisher")
      ->check(CLI::IsMember({"key-learner", "constant", "coin-flip"}))
      ->capture_default_str();
  game->add_option("--flavor", game_args.flavor, "Oracle flavor")
      ->check(CLI::IsMember({"mq", "pex"}))
      ->capture_default_str();
  game->add_option("--strategy", game_args.strategy, "Inference strategy")
      ->check(CLI::IsMember({"key-learner", "random", "replay"}))
      ->capture_default_str();
  game->add_option("--learner", game_args.learner, "Generator learner for the reduction")
      ->check(CLI::IsMember({"exact", "uniform"}))
      ->capture_default_str();
  game->add_option("--form", game_args.form, "Sample form handed to the learner")
      ->check(CLI::IsMember({"gen", "kgen"}))
      ->capture_default_str();
  game->add_option("--budget", game_args.budget, "Per-trial query cap (default 10 n^2)");
  game->add_option("--transcripts", game_args.transcripts,
                   "Number of inference transcripts to include")
      ->capture_default_str();
  AddEngineFlag(game, common);
  AddFormatFlags(game, common);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run exhaustive invariant checks");
  verify->add_option("--suite", verify_args.suite, "Suite to run")
      ->check(CLI::IsMember(VerifySuiteNames()))
      ->capture_default_str();
  verify->add_option("--seed", verify_args.seed, "Seed for the randomized checks")
      ->capture_default_str();
  AddFormatFlags(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*instance) return RunInstance(instance_args, common);
    if (*sample) return RunSample(sample_args, common);
    if (*learn) return RunLearn(learn_args, common);
    if (*game) return RunGame(game_args, common);
    if (*verify) return RunVerify(verify_args, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
