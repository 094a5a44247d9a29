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

#include "ddhlearn/verify.h"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "ddhlearn/bool_dist.h"
#include "ddhlearn/error.h"
#include "ddhlearn/generator.h"
#include "ddhlearn/learner.h"
#include "ddhlearn/prf.h"

namespace ddhlearn {

bool SuiteReport::passed() const {
  for (const Check& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const std::vector<std::string>& VerifySuiteNames() {
  static const std::vector<std::string> names = {"numtheory", "kgen", "boollemmas", "all"};
  return names;
}

Json SuiteReportToJson(const SuiteReport& report) {
  Json checks = Json::array();
  for (const Check& c : report.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  Json j;
  j["suite"] = report.suite;
  j["passed"] = report.passed();
  j["checks"] = std::move(checks);
  return j;
}

// ---------------------------------------------------------------------------
// Crafted tables
// ---------------------------------------------------------------------------

namespace {

std::map<BitString, double> Normalize(std::map<BitString, double> weights) {
  double total = 0.0;
  for (const auto& [x, w] : weights) total += w;
  for (auto& [x, w] : weights) w /= total;
  return weights;
}

double PositiveReal(Rng& rng) { return rng.UniformReal() + 1e-9; }

}  // namespace

FloatTable CraftNearbyTable(const std::vector<BitString>& support, Rng& rng) {
  DDHLEARN_ENFORCE(!support.empty(), InvalidArgument, "empty support");
  const size_t bits = support.front().size();
  const double n = static_cast<double>(bits / 2);
  std::vector<BitString> order = support;
  rng.Shuffle(order);
  const size_t heavy = 1 + static_cast<size_t>(rng.UniformBelow(order.size()));

  std::map<BitString, double> weights;
  if (rng.Coin()) {
    // Two levels: every light string sits a random distance below
    // 2^-(2+n), the heavy strings share what is left, then small jitter.
    const double light = std::exp2(-(2.0 + n) - rng.UniformReal() * n);
    const double light_total = light * static_cast<double>(order.size() - heavy);
    if (light_total >= 1.0) return CraftNearbyTable(support, rng);
    const double each_heavy = (1.0 - light_total) / static_cast<double>(heavy);
    const double jitter = 0.1 * rng.UniformReal();
    for (size_t i = 0; i < order.size(); ++i) {
      weights[order[i]] = (i < heavy ? each_heavy : light) * (1.0 + jitter * rng.UniformReal());
    }
    return FloatTable(bits, Normalize(std::move(weights)));
  }

  // Heavy block: a random number of support strings share most of the mass.
  const double heavy_share = 0.5 + 0.5 * rng.UniformReal();
  // The rest of the support is diluted by a random factor 2^-u.
  const double dilution = std::exp2(-rng.UniformReal() * 3.0 * n);
  const double skew = 1.0 + 3.0 * rng.UniformReal();

  double heavy_total = 0.0;
  double light_total = 0.0;
  for (size_t i = 0; i < order.size(); ++i) {
    const double w = std::pow(PositiveReal(rng), skew);
    weights[order[i]] = w;
    (i < heavy ? heavy_total : light_total) += w;
  }
  for (size_t i = 0; i < order.size(); ++i) {
    double& w = weights[order[i]];
    if (i < heavy) {
      w *= heavy_share / heavy_total;
    } else {
      w *= (1.0 - heavy_share) * dilution / light_total;
    }
  }

  // Off-support strings absorb a random share of the remaining mass.
  const double off_share = rng.Coin() ? 0.0 : 0.5 * rng.UniformReal();
  const size_t off_count = 1 + static_cast<size_t>(rng.UniformBelow(order.size()));
  double off_total = 0.0;
  std::map<BitString, double> off;
  for (size_t i = 0; i < off_count && off_share > 0.0; ++i) {
    BitString y = BitString::Random(bits, rng);
    if (weights.count(y) == 0) {
      const double w = PositiveReal(rng);
      off[y] += w;
      off_total += w;
    }
  }
  if (off_total > 0.0) {
    double on_total = 0.0;
    for (const auto& [x, w] : weights) on_total += w;
    for (const auto& [y, w] : off) {
      weights[y] = w / off_total * off_share / (1.0 - off_share) * on_total;
    }
  }
  return FloatTable(bits, Normalize(std::move(weights)));
}

uint64_t HeavySupportCount(const FloatTable& table, const std::vector<BitString>& support,
                           double epsilon) {
  uint64_t count = 0;
  for (const BitString& s : support) {
    const double n = static_cast<double>(s.size() / 2);
    if (table(s) >= std::exp2(-(2.0 + epsilon + n))) ++count;
  }
  return count;
}

HeavySupportSummary HeavySupportSearch(unsigned n, uint64_t trials, uint64_t seed) {
  DDHLEARN_ENFORCE(n >= 3 && n <= 10, InvalidArgument, "heavy-support search needs 3 <= n <= 10");
  HeavySupportSummary summary;
  summary.n = n;
  summary.min_heavy = uint64_t{1} << n;
  const double bound = std::exp2(static_cast<double>(n)) / static_cast<double>(n);
  while (summary.trials < trials) {
    const uint64_t index = summary.attempts++;
    Rng rng = DeriveRng(seed, "heavy-support", index);
    const GroupInstance inst = GenerateInstance(n, rng);
    const PrfKey key = PrfKey::Random(inst, rng);
    const ExactTable exact = TabulateExact(MakeKgenSpec(inst, key));
    std::vector<BitString> support;
    for (const auto& [x, mass] : exact.probs()) support.push_back(x);
    const FloatTable target = ToFloat(exact);

    const FloatTable crafted = CraftNearbyTable(support, rng);
    const double kl = KlDivergence(target, crafted);
    if (!(kl < static_cast<double>(n) - 2.0)) continue;

    ++summary.trials;
    summary.max_divergence = std::max(summary.max_divergence, kl);
    const uint64_t heavy = HeavySupportCount(crafted, support, kl);
    summary.min_heavy = std::min(summary.min_heavy, heavy);
    if (static_cast<double>(heavy) < bound) ++summary.violations;
  }
  return summary;
}

std::pair<FloatTable, FloatTable> RandomFiniteKlPair(size_t bits, Rng& rng) {
  DDHLEARN_ENFORCE(bits >= 1 && bits <= 16, InvalidArgument, "pair width must be in [1, 16]");
  const uint64_t domain = uint64_t{1} << bits;
  std::map<BitString, double> p;
  std::map<BitString, double> q;
  const double skew = 1.0 + 4.0 * rng.UniformReal();
  const bool near = rng.Coin();
  for (uint64_t x = 0; x < domain; ++x) {
    const BitString s = BitString::FromUint(x, bits);
    const bool in_q = x == 0 || rng.UniformReal() < 0.8;
    if (!in_q) continue;
    const double wq = std::pow(PositiveReal(rng), skew);
    q[s] = wq;
    const bool in_p = x == 0 || rng.UniformReal() < 0.7;
    if (in_p) {
      p[s] = near ? wq * (1.0 + 0.2 * (rng.UniformReal() - 0.5)) : std::pow(PositiveReal(rng), skew);
    }
  }
  return {FloatTable(bits, Normalize(std::move(p))), FloatTable(bits, Normalize(std::move(q)))};
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

namespace {

constexpr uint64_t kNumtheoryLimit = 4096;

void Add(SuiteReport& report, std::string name, bool passed, std::string detail) {
  report.checks.push_back({std::move(name), passed, std::move(detail)});
}

bool TrialDivisionPrime(uint64_t v) {
  if (v < 2) return false;
  for (uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::vector<uint64_t> SafePrimesBelow(uint64_t limit) {
  std::vector<uint64_t> out;
  for (uint64_t p = 5; p < limit; ++p) {
    if (TrialDivisionPrime(p) && TrialDivisionPrime((p - 1) / 2)) out.push_back(p);
  }
  return out;
}

void NumtheorySuite(SuiteReport& report) {
  {
    uint64_t mismatches = 0;
    uint64_t safe = 0;
    for (uint64_t v = 2; v < kNumtheoryLimit; ++v) {
      const bool expected = TrialDivisionPrime(v) && v >= 5 && TrialDivisionPrime((v - 1) / 2);
      safe += expected ? 1 : 0;
      if (IsSafePrime(BigInt(v)) != expected) ++mismatches;
    }
    Add(report, "safe-prime classification below 4096", mismatches == 0,
        std::to_string(safe) + " safe primes, " + std::to_string(mismatches) + " mismatches");
  }

  const std::vector<uint64_t> primes = SafePrimesBelow(kNumtheoryLimit);
  uint64_t fold_failures = 0;
  uint64_t generator_failures = 0;
  uint64_t primes_checked = 0;
  for (uint64_t p : primes) {
    if (p == 5) continue;
    ++primes_checked;
    const uint64_t q = (p - 1) / 2;
    std::vector<bool> is_qr(p, false);
    for (uint64_t x = 1; x < p; ++x) is_qr[x * x % p] = true;

    std::vector<bool> hit(q + 1, false);
    uint64_t residues = 0;
    for (uint64_t x = 1; x < p; ++x) {
      if (IsQr(BigInt(p), BigInt(x)) != is_qr[x]) ++fold_failures;
      if (!is_qr[x]) continue;
      ++residues;
      const ZqElement y = QrToZq(BigInt(p), BigInt(x));
      const uint64_t v = y.value().convert_to<uint64_t>();
      if (v < 1 || v > q || hit[v]) ++fold_failures;
      if (v <= q) hit[v] = true;
      if (ZqToQr(BigInt(p), y.value()) != x) ++fold_failures;

      if (x != 1) {
        uint64_t order = 1;
        for (uint64_t acc = x; acc != 1; acc = acc * x % p) ++order;
        if (order != q) ++generator_failures;
      }
    }
    if (residues != q) ++fold_failures;
  }
  Add(report, "fold is a bijection QR_p -> {1..q} with inverse", fold_failures == 0,
      std::to_string(primes_checked) + " safe primes 7 <= p < 4096, " +
          std::to_string(fold_failures) + " failures");
  Add(report, "every non-identity residue generates QR_p", generator_failures == 0,
      std::to_string(primes_checked) + " safe primes, " + std::to_string(generator_failures) +
          " failures");

  {
    bool collapses = QrToZq(5, 1) == QrToZq(5, 4);
    bool rejected = false;
    try {
      GroupInstance::Create(5, 4, 4);
    } catch (const InvalidInstance&) {
      rejected = true;
    }
    Add(report, "p = 5 is excluded from the instance family", collapses && rejected,
        "fold maps both residues {1, 4} to 1; instance creation rejects p = 5");
  }

  {
    uint64_t failures = 0;
    uint64_t solved = 0;
    for (uint64_t p : primes) {
      if (p == 5 || p > 1024) continue;
      const BigInt P(p);
      const DiscreteLogSolver brute(P, 4, DlogEngine::kBrute, kMaxDlogBits);
      const DiscreteLogSolver bsgs(P, 4, DlogEngine::kBsgs, kMaxDlogBits);
      for (uint64_t y = 1; y < p; ++y) {
        if (!IsQr(P, BigInt(y))) continue;
        const ZqElement a = brute.Solve(y);
        const ZqElement b = bsgs.Solve(y);
        ++solved;
        if (!(a == b) || ModExp(P, 4, a.value()) != y) ++failures;
      }
    }
    Add(report, "brute and baby-step giant-step logs agree", failures == 0,
        std::to_string(solved) + " logs below p = 1024, " + std::to_string(failures) +
            " failures");
  }
}

void KgenSuite(SuiteReport& report, uint64_t seed) {
  {
    uint64_t failures = 0;
    for (unsigned n = 3; n <= 10; ++n) {
      Rng rng = DeriveRng(seed, "verify-kgen", n);
      const GroupInstance inst = GenerateInstance(n, rng);
      const PrfKey key = PrfKey::Random(inst, rng);
      const ExactTable table = TabulateExact(MakeKgenSpec(inst, key));
      const Rational mass(BigInt(1), BigInt(1) << n);
      bool ok = table.support_size() == (size_t{1} << n);
      for (uint64_t x = 0; ok && x < (uint64_t{1} << n); ++x) {
        const BitString xs = BitString::FromUint(x, n);
        const BitString point = xs + BinN(PrfEval(inst, key, xs).value(), n);
        ok = table(point) == mass;
      }
      failures += ok ? 0 : 1;
    }
    Add(report, "KGEN table is uniform on x || F(k, x)", failures == 0,
        "n = 3..10, exact arithmetic, " + std::to_string(failures) + " failures");
  }

  {
    uint64_t failures = 0;
    uint64_t runs = 0;
    for (unsigned n = 3; n <= 10; ++n) {
      for (uint64_t i = 0; i < 5; ++i) {
        Rng rng = DeriveRng(seed, "verify-pac-" + std::to_string(n), i);
        const GroupInstance inst = GenerateInstance(n, rng);
        const PrfKey key = PrfKey::Random(inst, rng);
        const GeneratorSpec target = MakeGenSpec(inst, key);
        SampleOracle oracle(target, DeriveRng(seed, "verify-pac-oracle", n * 100 + i));
        const PacLearnResult result = PacGeneratorLearn(oracle, 0.1, 0.1);
        const ExactTable want = TabulateExact(target);
        const ExactTable got = TabulateExact(result.learned.generator);
        ++runs;
        if (!(want == got) || KlDivergence(want, got) != 0.0 || result.samples_used != 1 ||
            !(result.learned.key == key)) {
          ++failures;
        }
      }
    }
    Add(report, "one GEN sample recovers the exact generator", failures == 0,
        std::to_string(runs) + " runs at n = 3..10, " + std::to_string(failures) + " failures");
  }

  {
    uint64_t failures = 0;
    uint64_t runs = 0;
    for (unsigned n = 3; n <= 16; ++n) {
      for (uint64_t i = 0; i < 20; ++i) {
        Rng rng = DeriveRng(seed, "verify-learn-" + std::to_string(n), i);
        const GroupInstance inst = GenerateInstance(n, rng);
        const PrfKey key = PrfKey::Random(inst, rng);
        const BitString x = BitString::Random(n, rng);
        ++runs;
        if (!(LearnKey(inst, x, PrfEval(inst, key, x)) == key)) ++failures;
      }
    }
    Add(report, "tree reversal recovers the key", failures == 0,
        std::to_string(runs) + " triples at n = 3..16, " + std::to_string(failures) +
            " failures");
  }

  for (unsigned n : {5u, 6u}) {
    const HeavySupportSummary s = HeavySupportSearch(n, 1000, seed);
    std::ostringstream detail;
    detail << s.trials << " crafted tables (" << s.attempts << " drafts), min heavy count "
           << s.min_heavy << " vs bound " << std::exp2(n) / n << ", " << s.violations
           << " violations";
    Add(report, "heavy support count at n = " + std::to_string(n), s.violations == 0,
        detail.str());
  }

  {
    uint64_t violations = 0;
    double worst = -1.0;
    for (uint64_t i = 0; i < 1000; ++i) {
      Rng rng = DeriveRng(seed, "verify-pinsker", i);
      const size_t bits = 1 + static_cast<size_t>(rng.UniformBelow(6));
      const auto [p, q] = RandomFiniteKlPair(bits, rng);
      const double tv = TvDistance(p, q);
      const double bound = std::log(2.0) * std::sqrt(KlDivergence(p, q));
      worst = std::max(worst, tv - bound);
      if (tv > bound + 1e-12) ++violations;
    }
    std::ostringstream detail;
    detail << "1000 pairs at n <= 6, max tv - bound " << worst << ", " << violations
           << " violations";
    Add(report, "Pinsker bound tv <= ln 2 * sqrt(kl)", violations == 0, detail.str());
  }
}

void BoolDistSuite(SuiteReport& report, uint64_t seed) {
  {
    uint64_t failures = 0;
    for (uint64_t h = 0; h < 16; ++h) {
      for (uint64_t c = 0; c < 16; ++c) {
        const BoolFn fh = BoolFn::FromIndex(2, h);
        const BoolFn fc = BoolFn::FromIndex(2, c);
        const ExactTable th = TabulateExact(GenFromFunction(fh));
        const ExactTable tc = TabulateExact(GenFromFunction(fc));
        const Rational want = DisagreementProb(fh, fc);
        if (TvDistance(th, tc) != want ||
            std::abs(TvDistance(ToFloat(th), ToFloat(tc)) - want.convert_to<double>()) > 1e-12) {
          ++failures;
        }
      }
    }
    Rng rng = DeriveRng(seed, "verify-inter", 4);
    for (int i = 0; i < 200; ++i) {
      const BoolFn fh = BoolFn::Random(4, rng);
      const BoolFn fc = BoolFn::Random(4, rng);
      const ExactTable th = TabulateExact(GenFromFunction(fh));
      const ExactTable tc = TabulateExact(GenFromFunction(fc));
      const Rational want = DisagreementProb(fh, fc);
      if (TvDistance(th, tc) != want ||
          std::abs(TvDistance(ToFloat(th), ToFloat(tc)) - want.convert_to<double>()) > 1e-12) {
        ++failures;
      }
    }
    Add(report, "tv(D_h, D_c) equals Pr[h != c]", failures == 0,
        "256 pairs at n = 2, 200 random pairs at n = 4, " + std::to_string(failures) +
            " failures");
  }

  {
    uint64_t failures = 0;
    uint64_t cases = 0;
    Rng rng = DeriveRng(seed, "verify-short", 0);
    for (size_t n = 1; n <= 4; ++n) {
      std::vector<BoolFn> concepts;
      if (n <= 3) {
        for (uint64_t c = 0; c < (uint64_t{1} << (size_t{1} << n)); ++c) {
          concepts.push_back(BoolFn::FromIndex(n, c));
        }
      } else {
        for (int i = 0; i < 32; ++i) concepts.push_back(BoolFn::Random(n, rng));
      }
      for (const BoolFn& c : concepts) {
        const ExactTable tc = TabulateExact(GenFromFunction(c));
        for (size_t m = 0; m < n; ++m) {
          const Rational want = Rational(1) - Rational(BigInt(1), BigInt(1) << (n - m));
          ++cases;
          if (TvDistance(TabulateExact(OptimalShortGenerator(c, m)), tc) != want) ++failures;
        }
      }
    }
    Add(report, "optimal short generator has tv 1 - 2^(m-n)", failures == 0,
        std::to_string(cases) + " (c, m) cases with m < n <= 4, " + std::to_string(failures) +
            " failures");
  }

  {
    uint64_t failures = 0;
    uint64_t generators = 0;
    for (uint64_t c = 0; c < 16; ++c) {
      const ShortGeneratorSearch s = ExhaustiveMinTv(BoolFn::FromIndex(2, c), 1);
      generators += s.generators;
      if (s.min_tv != Rational(1, 2) || s.below_half != 0) ++failures;
    }
    Add(report, "no one-bit-seed generator beats tv 1/2 at n = 2", failures == 0,
        std::to_string(generators) + " generators over 16 concepts, " +
            std::to_string(failures) + " failures");
  }

  {
    struct Shape {
      size_t n, m;
      uint64_t expected;
    };
    // Seeds spread evenly over the 2^n support strings: (2^m)! / ((2^(m-n))!)^(2^n).
    const Shape shapes[] = {{1, 1, 2}, {1, 2, 6}, {2, 2, 24}};
    for (const Shape& shape : shapes) {
      uint64_t failures = 0;
      uint64_t concepts = 0;
      for (uint64_t c = 0; c < (uint64_t{1} << (size_t{1} << shape.n)); ++c) {
        const ExactGeneratorReport r = ClassifyExactGenerators(BoolFn::FromIndex(shape.n, c), shape.m);
        ++concepts;
        if (!r.sets_equal || r.exact_generators != shape.expected ||
            r.distinct_padded_permuted != shape.expected) {
          ++failures;
        }
      }
      Add(report,
          "exact generators are padded permutations at n = " + std::to_string(shape.n) +
              ", m = " + std::to_string(shape.m),
          failures == 0,
          std::to_string(concepts) + " concepts, " + std::to_string(shape.expected) +
              " exact generators each, " + std::to_string(failures) + " failures");
    }
  }
}

}  // namespace

SuiteReport RunVerifySuite(const std::string& suite, uint64_t seed) {
  SuiteReport report;
  report.suite = suite;
  if (suite == "numtheory") {
    NumtheorySuite(report);
  } else if (suite == "kgen") {
    KgenSuite(report, seed);
  } else if (suite == "boollemmas") {
    BoolDistSuite(report, seed);
  } else if (suite == "all") {
    NumtheorySuite(report);
    KgenSuite(report, seed);
    BoolDistSuite(report, seed);
  } else {
    throw InvalidArgument("unknown verification suite '" + suite +
                          "' (expected numtheory, kgen, boollemmas or all)");
  }
  return report;
}

}  // namespace ddhlearn
