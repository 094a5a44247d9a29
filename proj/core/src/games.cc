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

#include "ddhlearn/games.h"

#include <cmath>
#include <set>
#include <utility>

#include "ddhlearn/error.h"

namespace ddhlearn {

double HoeffdingHalfWidth(uint64_t trials) {
  if (trials == 0) {
    return 1.0;
  }
  return std::sqrt(std::log(2.0 / 0.01) / (2.0 * static_cast<double>(trials)));
}

uint64_t DefaultQueryBudget(unsigned n) { return uint64_t{10} * n * n; }

double InferenceBound(unsigned n) {
  DDHLEARN_ENFORCE(n > 0, InvalidArgument, "n must be positive");
  return 0.5 + 1.0 / (11.0 * static_cast<double>(n) * static_cast<double>(n));
}

const char* OracleFlavorName(OracleFlavor flavor) {
  return flavor == OracleFlavor::kMq ? "mq" : "pex";
}

OracleFlavor ParseOracleFlavor(const std::string& name) {
  if (name == "mq") {
    return OracleFlavor::kMq;
  }
  if (name == "pex") {
    return OracleFlavor::kPex;
  }
  throw InvalidArgument("unknown oracle flavor '" + name + "' (expected mq or pex)");
}

GameOracle::GameOracle(OracleFlavor flavor, KeyedFunction& fn, Rng example_rng,
                       std::optional<uint64_t> budget)
    : flavor_(flavor), fn_(fn), mq_(fn, budget), pex_(fn, std::move(example_rng), budget) {}

ZqElement GameOracle::Query(const BitString& x) {
  DDHLEARN_ENFORCE(flavor_ == OracleFlavor::kMq, ProtocolViolation,
                   "membership query on a random-example oracle");
  return mq_.Query(x);
}

LabeledExample GameOracle::Example() {
  DDHLEARN_ENFORCE(flavor_ == OracleFlavor::kPex, ProtocolViolation,
                   "example request on a membership oracle");
  return pex_.Query();
}

uint64_t GameOracle::queries() const {
  return flavor_ == OracleFlavor::kMq ? mq_.count() : pex_.count();
}

namespace {

BitString RandomOtherThan(const BitString& avoid, Rng& rng) {
  for (;;) {
    BitString x = BitString::Random(avoid.size(), rng);
    if (x != avoid) {
      return x;
    }
  }
}

class KeyLearnerDistinguisher final : public Distinguisher {
 public:
  explicit KeyLearnerDistinguisher(LearnerOptions options) : options_(options) {}

  std::string name() const override { return "key-learner"; }

  bool Decide(const GroupInstance& inst, GameOracle& oracle, Rng& rng) override {
    if (oracle.flavor() == OracleFlavor::kMq) {
      const BitString x = BitString::Random(inst.n(), rng);
      const PrfKey key = LearnKey(inst, x, oracle.Query(x), options_);
      const BitString probe = RandomOtherThan(x, rng);
      return PrfEval(inst, key, probe) == oracle.Query(probe);
    }
    const LabeledExample first = oracle.Example();
    const PrfKey key = LearnKey(inst, first.x, first.value, options_);
    for (;;) {
      const LabeledExample next = oracle.Example();
      if (next.x != first.x) {
        return PrfEval(inst, key, next.x) == next.value;
      }
    }
  }

 private:
  LearnerOptions options_;
};

class ConstantDistinguisher final : public Distinguisher {
 public:
  explicit ConstantDistinguisher(bool verdict) : verdict_(verdict) {}
  std::string name() const override { return "constant"; }
  bool Decide(const GroupInstance&, GameOracle&, Rng&) override { return verdict_; }

 private:
  bool verdict_;
};

class CoinFlipDistinguisher final : public Distinguisher {
 public:
  std::string name() const override { return "coin-flip"; }
  bool Decide(const GroupInstance&, GameOracle&, Rng& rng) override { return rng.Coin(); }
};

double Rate(uint64_t hits, uint64_t total) {
  return total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
}

}  // namespace

std::unique_ptr<Distinguisher> MakeKeyLearnerDistinguisher(LearnerOptions options) {
  return std::make_unique<KeyLearnerDistinguisher>(options);
}

std::unique_ptr<Distinguisher> MakeConstantDistinguisher(bool verdict) {
  return std::make_unique<ConstantDistinguisher>(verdict);
}

std::unique_ptr<Distinguisher> MakeCoinFlipDistinguisher() {
  return std::make_unique<CoinFlipDistinguisher>();
}

AdvantageEstimate RunDistinguisherGame(Distinguisher& adversary,
                                       const DistinguisherGameOptions& options) {
  DDHLEARN_ENFORCE(options.trials > 0, InvalidArgument, "trials must be positive");
  const unsigned n = options.n;
  const uint64_t seed = options.seed;
  const auto budget = options.query_budget.value_or(DefaultQueryBudget(n));
  const uint64_t real_count = (options.trials + 1) / 2;
  const uint64_t random_count = options.trials / 2;

  AdvantageEstimate est;
  est.game = "distinguish";
  est.adversary = adversary.name();
  est.flavor = options.flavor;
  est.n = n;
  est.seed = seed;
  est.trials = options.trials;

  uint64_t real_hits = 0;
  uint64_t random_hits = 0;
  InstanceOptions inst_options;
  inst_options.keep_secret = false;

  for (uint64_t i = 0; i < real_count; ++i) {
    Rng inst_rng = DeriveRng(seed, "instance", i);
    const GroupInstance inst = GenerateInstance(n, inst_rng, inst_options);

    {
      Rng key_rng = DeriveRng(seed, "key", i);
      PrfFunction fn(inst, PrfKey::Random(inst, key_rng));
      GameOracle oracle(options.flavor, fn, DeriveRng(seed, "examples-real", i), budget);
      Rng adv_rng = DeriveRng(seed, "adversary-real", i);
      try {
        real_hits += adversary.Decide(inst, oracle, adv_rng) ? 1 : 0;
        ++est.real_trials;
      } catch (const QueryBudgetExceeded&) {
        ++est.invalid_trials;
      }
    }

    if (i < random_count) {
      LazyRandomFunction fn(n, inst.q(), DeriveRng(seed, "random-function", i));
      GameOracle oracle(options.flavor, fn, DeriveRng(seed, "examples-random", i), budget);
      Rng adv_rng = DeriveRng(seed, "adversary-random", i);
      try {
        random_hits += adversary.Decide(inst, oracle, adv_rng) ? 1 : 0;
        ++est.random_trials;
      } catch (const QueryBudgetExceeded&) {
        ++est.invalid_trials;
      }
    }
  }

  est.p_real = Rate(real_hits, est.real_trials);
  est.p_random = Rate(random_hits, est.random_trials);
  est.advantage = est.p_real - est.p_random;
  est.ci_halfwidth = 2.0 * HoeffdingHalfWidth(est.real_trials + est.random_trials);
  return est;
}

// ---------------------------------------------------------------------------
// Inference game
// ---------------------------------------------------------------------------

namespace {

class RandomGuesser final : public InferenceStrategy {
 public:
  BitString ChooseExam(const GroupInstance& inst, MembershipOracle&, Rng& rng) override {
    return BitString::Random(inst.n(), rng);
  }
  size_t Answer(const ZqElement&, const ZqElement&, Rng& rng) override {
    return rng.Coin() ? 1 : 0;
  }
};

class Replayer final : public InferenceStrategy {
 public:
  BitString ChooseExam(const GroupInstance& inst, MembershipOracle& oracle, Rng& rng) override {
    const BitString x = BitString::Random(inst.n(), rng);
    oracle.Query(x);
    return x;
  }
  size_t Answer(const ZqElement&, const ZqElement&, Rng& rng) override {
    return rng.Coin() ? 1 : 0;
  }
};

class KeyLearnerInference final : public InferenceStrategy {
 public:
  explicit KeyLearnerInference(LearnerOptions options) : options_(options) {}

  BitString ChooseExam(const GroupInstance& inst, MembershipOracle& oracle, Rng& rng) override {
    const BitString x = BitString::Random(inst.n(), rng);
    const PrfKey key = LearnKey(inst, x, oracle.Query(x), options_);
    const BitString exam = RandomOtherThan(x, rng);
    prediction_ = PrfEval(inst, key, exam).value();
    return exam;
  }

  size_t Answer(const ZqElement& first, const ZqElement& second, Rng& rng) override {
    if (first.value() == prediction_ && second.value() != prediction_) {
      return 0;
    }
    if (second.value() == prediction_ && first.value() != prediction_) {
      return 1;
    }
    return rng.Coin() ? 1 : 0;
  }

 private:
  LearnerOptions options_;
  BigInt prediction_;
};

}  // namespace

InferenceFactory RandomGuesserStrategy() {
  return [] { return std::make_unique<RandomGuesser>(); };
}

InferenceFactory ReplayStrategy() {
  return [] { return std::make_unique<Replayer>(); };
}

InferenceFactory KeyLearnerStrategy(LearnerOptions options) {
  return [options] { return std::make_unique<KeyLearnerInference>(options); };
}

InferenceResult RunInferenceGame(const InferenceFactory& factory,
                                 const InferenceGameOptions& options) {
  DDHLEARN_ENFORCE(options.trials > 0, InvalidArgument, "trials must be positive");
  const unsigned n = options.n;
  const uint64_t seed = options.seed;
  const auto budget = options.query_budget.value_or(DefaultQueryBudget(n));

  InferenceResult result;
  result.game = "infer";
  result.strategy = options.strategy_name;
  result.n = n;
  result.seed = seed;
  result.trials = options.trials;

  InstanceOptions inst_options;
  inst_options.keep_secret = false;

  for (uint64_t i = 0; i < options.trials; ++i) {
    Rng inst_rng = DeriveRng(seed, "instance", i);
    const GroupInstance inst = GenerateInstance(n, inst_rng, inst_options);
    Rng key_rng = DeriveRng(seed, "key", i);
    const PrfKey key = PrfKey::Random(inst, key_rng);
    PrfFunction fn(inst, key);
    MembershipOracle oracle(fn, budget);
    Rng strategy_rng = DeriveRng(seed, "strategy", i);
    Rng challenge_rng = DeriveRng(seed, "challenge", i);

    std::unique_ptr<InferenceStrategy> strategy = factory();
    InferenceTranscript transcript;
    try {
      transcript.exam_string = strategy->ChooseExam(inst, oracle, strategy_rng);
    } catch (const QueryBudgetExceeded&) {
      ++result.invalid_trials;
      continue;
    }
    transcript.queries = oracle.records();

    bool fresh = transcript.exam_string.size() == n;
    for (const OracleRecord& record : oracle.records()) {
      if (record.query == transcript.exam_string) {
        fresh = false;
        break;
      }
    }

    if (!fresh) {
      transcript.protocol_violation = true;
      ++result.violations;
    } else {
      const ZqElement fx = PrfEval(inst, key, transcript.exam_string);
      const ZqElement y(challenge_rng.UniformRange(BigInt(1), inst.q()), inst.q());
      transcript.true_index = challenge_rng.Coin() ? 1 : 0;
      const ZqElement& first = transcript.true_index == 0 ? fx : y;
      const ZqElement& second = transcript.true_index == 0 ? y : fx;
      transcript.exam_pair = {first.value(), second.value()};
      transcript.guess = strategy->Answer(first, second, strategy_rng);
      if (transcript.guess > 1) {
        transcript.protocol_violation = true;
        ++result.violations;
      } else if (fx == y) {
        transcript.passed = challenge_rng.Coin();
      } else {
        transcript.passed = transcript.guess == transcript.true_index;
      }
    }

    strategy->OnResult(transcript.passed);
    ++result.scored_trials;
    result.passes += transcript.passed ? 1 : 0;
    if (result.transcripts.size() < options.keep_transcripts) {
      result.transcripts.push_back(std::move(transcript));
    }
  }

  result.pass_rate = Rate(result.passes, result.scored_trials);
  result.ci_halfwidth = HoeffdingHalfWidth(result.scored_trials);
  return result;
}

// ---------------------------------------------------------------------------
// Reduction
// ---------------------------------------------------------------------------

namespace {

class ExactGeneratorLearner final : public GeneratorLearner {
 public:
  explicit ExactGeneratorLearner(LearnerOptions options) : options_(options) {}

  std::string name() const override { return "exact"; }

  GeneratorSpec Learn(const SampleSource& sample, unsigned n, double, double, Rng&) override {
    LearnedGenerator learned = LearnFromSample(sample(), options_);
    DDHLEARN_ENFORCE(learned.instance.n() == n, InvalidInstance,
                     "sample encodes a " + std::to_string(learned.instance.n()) +
                         "-bit instance, expected " + std::to_string(n));
    return std::move(learned.generator);
  }

 private:
  LearnerOptions options_;
};

class UniformGeneratorLearner final : public GeneratorLearner {
 public:
  std::string name() const override { return "uniform"; }

  GeneratorSpec Learn(const SampleSource&, unsigned n, double, double, Rng&) override {
    return GeneratorSpec(2 * n, 2 * n, GeneratorKind::kCustom, "uniform",
                         [](const BitString& seed) { return seed; });
  }
};

class ReductionStrategy final : public InferenceStrategy {
 public:
  ReductionStrategy(std::shared_ptr<GeneratorLearner> learner, ReductionOptions options,
                    std::shared_ptr<ReductionStats> stats)
      : learner_(std::move(learner)), options_(options), stats_(std::move(stats)) {}

  BitString ChooseExam(const GroupInstance& inst, MembershipOracle& oracle, Rng& rng) override {
    const unsigned n = inst.n();
    std::set<BitString> queried;
    SampleSource source = [&]() {
      BitString x = BitString::Random(n, rng);
      const ZqElement value = oracle.Query(x);
      queried.insert(x);
      ++stats_->samples_simulated;
      BitString out = x + BinN(value.value(), n);
      if (options_.form == SampleForm::kGen) {
        out = out + EncodeParams(inst);
      }
      return out;
    };

    std::optional<BitString> candidate;
    try {
      const GeneratorSpec gen = learner_->Learn(source, n, options_.epsilon, options_.delta, rng);
      const BitString out = SampleFrom(gen, rng);
      if (out.size() >= 2 * size_t{n}) {
        candidate = out.Slice(0, n);
        guess_value_ = out.Slice(n, n).ToInt();
      } else {
        ++stats_->learner_failures;
      }
    } catch (const QueryBudgetExceeded&) {
      throw;
    } catch (const Error&) {
      ++stats_->learner_failures;
    }

    if (candidate && queried.count(*candidate) == 0) {
      fresh_ = true;
      return *candidate;
    }
    fresh_ = false;
    ++stats_->case_c;
    return Unqueried(n, queried, rng);
  }

  size_t Answer(const ZqElement& first, const ZqElement& second, Rng& rng) override {
    if (fresh_) {
      if (guess_value_ == first.value()) {
        case_a_ = true;
        ++stats_->case_a;
        return 0;
      }
      if (guess_value_ == second.value()) {
        case_a_ = true;
        ++stats_->case_a;
        return 1;
      }
      ++stats_->case_b;
    }
    return rng.Coin() ? 1 : 0;
  }

  void OnResult(bool passed) override {
    if (case_a_ && passed) {
      ++stats_->case_a_passed;
    }
  }

 private:
  static BitString Unqueried(unsigned n, const std::set<BitString>& queried, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      BitString x = BitString::Random(n, rng);
      if (queried.count(x) == 0) {
        return x;
      }
    }
    DDHLEARN_ENFORCE(n < 64, ProtocolViolation, "could not find an unqueried exam string");
    for (uint64_t i = 0; i < (uint64_t{1} << n); ++i) {
      BitString x = BitString::FromUint(i, n);
      if (queried.count(x) == 0) {
        return x;
      }
    }
    throw ProtocolViolation("every input has been queried; no exam string is available");
  }

  std::shared_ptr<GeneratorLearner> learner_;
  ReductionOptions options_;
  std::shared_ptr<ReductionStats> stats_;
  BigInt guess_value_;
  bool fresh_ = false;
  bool case_a_ = false;
};

}  // namespace

std::shared_ptr<GeneratorLearner> MakeExactGeneratorLearner(LearnerOptions options) {
  return std::make_shared<ExactGeneratorLearner>(options);
}

std::shared_ptr<GeneratorLearner> MakeUniformGeneratorLearner() {
  return std::make_shared<UniformGeneratorLearner>();
}

InferenceFactory KearnsReduction(std::shared_ptr<GeneratorLearner> learner,
                                 ReductionOptions options,
                                 std::shared_ptr<ReductionStats> stats) {
  DDHLEARN_ENFORCE(learner != nullptr, InvalidArgument, "reduction needs a learner");
  if (!stats) {
    stats = std::make_shared<ReductionStats>();
  }
  return [learner = std::move(learner), options, stats = std::move(stats)] {
    return std::make_unique<ReductionStrategy>(learner, options, stats);
  };
}

}  // namespace ddhlearn
