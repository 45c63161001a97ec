// Copyright 2026 The bentforge Authors.
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

// Acceptance run: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock limits below.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bentforge/boolfun.h"
#include "bentforge/constructions.h"
#include "bentforge/dillon.h"
#include "bentforge/eainv.h"
#include "bentforge/expsums.h"
#include "bentforge/gf2m.h"
#include "bentforge/parallel.h"
#include "bentforge/polyform.h"

namespace bentforge {
namespace {

// Wall-clock limits in seconds. Criteria without a stated limit get a loose
// ceiling so a runaway loop still shows up as a failure.
constexpr double kLimitExample1 = 1.0;
constexpr double kLimitExample2 = 5.0;
constexpr double kLimitExample3 = 1.0;
constexpr double kLimitThm1Small = 10.0;  // m = 6 and 8 together
constexpr double kLimitThm1M10 = 600.0;
constexpr double kLimitDefault = 600.0;

constexpr int kSamplesS = 10000;
constexpr int kDillonSamples = 1000;
constexpr int kAffineTransforms = 100;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok) detail << "first failure: " << why << "; ";
    ok = false;
  }
  void check(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

// A timed stage inside one criterion.
struct Stage {
  std::string name;
  double limit;
  std::function<void(Outcome&)> body;
};

bool run_criterion(int id, const std::string& title, const std::vector<Stage>& stages) {
  Outcome out;
  std::ostringstream timing;
  for (const auto& s : stages) {
    const auto start = std::chrono::steady_clock::now();
    try {
      s.body(out);
    } catch (const std::exception& e) {
      out.fail(s.name + " threw: " + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s %.2fs/%.0fs ", s.name.c_str(), secs, s.limit);
    timing << buf;
    if (secs >= s.limit) out.fail(s.name + " over time limit");
  }
  std::printf("%s %2d %s | %s| %s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), timing.str().c_str(),
              out.detail.str().c_str());
  std::fflush(stdout);
  return out.ok;
}

bool all_abs_equal(const WalshSpectrum& s, int32_t v) {
  return std::all_of(s.values.begin(), s.values.end(), [v](int32_t w) { return std::abs(w) == v; });
}

Element random_element(const Field& f, std::mt19937_64& rng) { return f.element(static_cast<uint32_t>(rng() % f.size())); }
Element random_nonzero(const Field& f, std::mt19937_64& rng) {
  return f.element(static_cast<uint32_t>(rng() % f.order()) + 1);
}

// ---- 1-3: worked examples --------------------------------------------------

void example1(Outcome& o) {
  auto f = field_new(6, 0x5B);
  for (Element b : {f->w(7), f->w(1)}) {
    const auto s = walsh(rational_h(f->one(), b, f));
    o.check(all_abs_equal(s, 8), "spectrum not +-8 for b=" + to_hex(b));
  }
  o.detail << "2/2 spectra +-8; ";
}

void example2(Outcome& o) {
  auto f = field_new(12, 0x10EB);
  const KloostermanCache k(f);
  const struct {
    Element a1, a2, b;
    const char* condition;
  } cases[] = {{f->w(195), f->w(1), f->one(), "1"},
               {f->one(), f->w(258), f->w(63), "2"},
               {f->one(), f->w(60), f->w(63), "3"}};
  int good = 0;
  for (const auto& c : cases) {
    const bool bent = all_abs_equal(walsh(build_h({{c.a1, c.a2}, c.b, Combiner::x1x2()}, f)), 64);
    const auto v = thm2_check(k, c.a1, c.a2, c.b);
    o.check(bent, std::string("not bent, condition ") + c.condition);
    o.check(v.holds && v.condition == c.condition,
            std::string("expected condition ") + c.condition + ", got '" + v.condition + "'");
    good += bent && v.holds && v.condition == c.condition;
  }
  o.detail << good << "/3 triples; ";
}

void example3(Outcome& o) {
  auto f = field_new(6, 0x5B);
  const KloostermanCache k(f);
  const int cases[][4] = {{27, 9, 1, 0}, {27, 1, 5, 0}, {27, 16, 34, 7}, {27, 16, 11, 7}, {27, 1, 3, 7}, {27, 3, 9, 1}};
  int expected = 1, good = 0;
  for (const auto& c : cases) {
    const Element a1 = f->w(c[0]), a2 = f->w(c[1]), a3 = f->w(c[2]), b = f->w(c[3]);
    const bool bent = all_abs_equal(walsh(build_h({{a1, a2, a3}, b, Combiner::majority3()}, f)), 8);
    const auto v = thm3_check(k, a1, a2, a3, b);
    const std::string want = std::to_string(expected);
    o.check(bent, "quadruple " + want + " not bent");
    o.check(v.holds && v.condition == want, "quadruple " + want + " matched '" + v.condition + "'");
    good += bent && v.holds && v.condition == want;
    ++expected;
  }
  o.detail << good << "/6 quadruples; ";
}

// ---- 4: Theorem 1 --------------------------------------------------------

void theorem1(Outcome& o, int m) {
  auto f = field_new(m);
  const KloostermanCache k(f);
  std::vector<Element> a1s;
  for (Element a : f->half_field())
    if (!a.is_zero()) a1s.push_back(a);
  const uint64_t nb = f->order();
  const uint64_t total = a1s.size() * nb;
  std::atomic<uint64_t> mismatches{0}, bent{0};
  parallel_ranges(total, 0, [&](std::size_t begin, std::size_t end) {
    uint64_t mis = 0, hits = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const Element a1 = a1s[i / nb];
      const Element b = f->element(static_cast<uint32_t>(i % nb) + 1);
      const bool full = is_bent(rational_h(a1, b, f));
      mis += thm1_check(k, a1, b).holds != full;
      hits += full;
    }
    mismatches += mis;
    bent += hits;
  });
  o.check(mismatches == 0, "m=" + std::to_string(m) + " mismatches=" + std::to_string(mismatches.load()));
  o.check(bent > 0, "m=" + std::to_string(m) + " no bent pairs");
  o.detail << "m=" << m << ": " << total << " pairs, " << bent << " bent, " << mismatches << " exceptions; ";
}

// ---- 5: closed forms -----------------------------------------------------

void xi_exhaustive(Outcome& o) {
  for (int m : {6, 8}) {
    auto f = field_new(m);
    const KloostermanCache k(f);
    uint64_t checked = 0, bad = 0;
    for (Element a : f->elements()) {
      for (Element b : f->nonzero_elements()) {
        bad += xi_closed(k, a, b) != xi_brute(*f, a, b);
        ++checked;
      }
    }
    o.check(bad == 0, "xi m=" + std::to_string(m));
    o.detail << "xi m=" << m << ": " << checked << " pairs, " << bad << " mismatches; ";
  }
}

bool s_hypothesis(Element A, Element B, Element d) { return !(B.square() / A.square() + B / A + d).is_zero(); }

void s_closed_forms(Outcome& o) {
  {
    auto f = Field::make(4);
    uint64_t checked = 0, bad = 0;
    for (Element A : f->nonzero_elements())
      for (Element B : f->elements())
        for (Element d : f->elements()) {
          if (!s_hypothesis(A, B, d)) continue;
          bad += rational_sum_S(*f, A, B, d, SumMode::kClosed) != rational_sum_S(*f, A, B, d, SumMode::kBrute);
          ++checked;
        }
    o.check(bad == 0, "S n=4");
    o.detail << "S n=4: " << checked << " exhaustive, " << bad << " mismatches; ";
  }
  std::mt19937_64 rng(2026);
  for (int n : {6, 8, 10, 12}) {
    auto f = Field::make(n);
    int done = 0, bad = 0;
    while (done < kSamplesS) {
      const Element A = random_nonzero(*f, rng), B = random_element(*f, rng), d = random_element(*f, rng);
      if (!s_hypothesis(A, B, d)) continue;
      bad += rational_sum_S(*f, A, B, d, SumMode::kClosed) != rational_sum_S(*f, A, B, d, SumMode::kBrute);
      ++done;
    }
    o.check(bad == 0, "S n=" + std::to_string(n));
    o.detail << "S n=" << n << ": " << done << " samples, " << bad << " mismatches; ";
  }
}

void variant(Outcome& o) {
  uint64_t checked = 0, bad = 0;
  for (int n = 1; n <= 8; ++n) {
    auto f = Field::make(n);
    for (Element a : f->nonzero_elements()) {
      bad += 2 * kloosterman_variant(*f, a) != -kloosterman(*f, a);
      ++checked;
    }
  }
  o.check(bad == 0, "variant");
  o.detail << "variant n<=8: " << checked << " values, " << bad << " mismatches; ";
}

// ---- 6: Kloosterman structure ----------------------------------------------

void kloosterman_structure(Outcome& o) {
  uint64_t checked = 0, bad = 0;
  for (int n = 4; n <= 10; ++n) {
    auto f = Field::make(n);
    // K - 1 lies in [-2^(n/2+1), 2^(n/2+1)], i.e. (K - 1)^2 <= 2^(n+2).
    const int64_t bound = int64_t{1} << (n + 2);
    for (Element a : f->nonzero_elements()) {
      const int64_t v = kloosterman(*f, a);
      const bool good = v % 4 == 0 && (v - 1) * (v - 1) <= bound;
      if (!good) o.fail("n=" + std::to_string(n) + " a=" + to_hex(a) + " K=" + std::to_string(v));
      bad += !good;
      ++checked;
    }
  }
  o.detail << checked << " values for n=4..10, " << bad << " exceptions; ";
}

// ---- 7: Dillon-like equivalences -------------------------------------------

struct DillonTally {
  uint64_t checked = 0, bent = 0, bad = 0;
};

void check_dillon(const TruthTable& t, DillonTally& tally, Outcome& o) {
  const auto d = detect_dillon(t);
  ++tally.checked;
  if (!d) {
    ++tally.bad;
    o.fail("function not detected as Dillon-like");
    return;
  }
  const auto spectrum = walsh(t);
  const bool full = is_bent(spectrum, t.field().m());
  const bool circle = bent_criterion_U(*d);
  const bool hyper = is_hyper_bent_def(t);
  const bool same_spectrum = restricted_spectrum(*d) == spectrum;
  const bool good = full == circle && full == hyper && same_spectrum;
  if (!good) o.fail("equivalence broken at m=" + std::to_string(t.field().m()));
  tally.bad += !good;
  tally.bent += full;
}

void dillon_equivalences(Outcome& o) {
  {
    auto f = field_new(6);
    DillonTally tally;
    for (Element a : f->nonzero_elements())
      for (Element b : f->nonzero_elements()) check_dillon(rational_h(a, b, f), tally, o);
    o.check(tally.bent > 0, "no bent member of the family at m=6");
    o.detail << "family m=6: " << tally.checked << " functions, " << tally.bent << " bent, " << tally.bad
             << " exceptions; ";
  }
  std::mt19937_64 rng(7);
  for (int m : {8, 10}) {
    auto f = field_new(m);
    const uint32_t q = f->q();
    DillonTally tally;
    for (int i = 0; i < kDillonSamples; ++i) {
      // Alternate between uniform circle values (almost never bent) and
      // circle values with the bent weight, so both sides get exercised.
      const int g0 = rng() & 1;
      std::vector<uint8_t> g(q + 1, 0);
      if (i % 2 == 0) {
        for (auto& v : g) v = rng() & 1;
      } else {
        std::fill_n(g.begin(), g0 ? q / 2 + 1 : q / 2, 1);
        std::shuffle(g.begin(), g.end(), rng);
      }
      check_dillon(to_truth_table(make_dillon(f, std::move(g), g0)), tally, o);
    }
    o.check(tally.bent > 0 && tally.bent < tally.checked, "one-sided sample at m=" + std::to_string(m));
    o.detail << "random m=" << m << ": " << tally.checked << " functions, " << tally.bent << " bent, " << tally.bad
             << " exceptions; ";
  }
}

// ---- 8: polynomial form --------------------------------------------------

void expansion(Outcome& o) {
  for (int m : {6, 8}) {
    auto f = field_new(m);
    const uint64_t n = f->size();
    const uint64_t nb = f->order();
    std::atomic<uint64_t> bad_expansion{0}, bad_degree{0}, bent{0};
    parallel_ranges(n * nb, 0, [&](std::size_t begin, std::size_t end) {
      uint64_t e = 0, d = 0, hits = 0;
      for (std::size_t i = begin; i < end; ++i) {
        const Element a = f->element(static_cast<uint32_t>(i / nb));
        const Element b = f->element(static_cast<uint32_t>(i % nb) + 1);
        e += !verify_expansion(a, b, f);
        const auto h = rational_h(a, b, f);
        if (is_bent(h)) {
          ++hits;
          d += anf_degree(h) != m / 2;
        }
      }
      bad_expansion += e;
      bad_degree += d;
      bent += hits;
    });
    o.check(bad_expansion == 0, "expansion m=" + std::to_string(m));
    o.check(bad_degree == 0, "degree m=" + std::to_string(m));
    o.check(bent > 0, "no bent h1 at m=" + std::to_string(m));
    o.detail << "m=" << m << ": " << n * nb << " pairs, " << bad_expansion << " expansion failures, " << bent
             << " bent with " << bad_degree << " off-degree; ";
  }
}

// ---- 9: generic combiners ------------------------------------------------

void combiners(Outcome& o) {
  auto f = field_new(6);
  const KloostermanCache k(f);
  const struct {
    const char* name;
    Combiner c;
  } cases[] = {{"X1", Combiner::x1()},
               {"X1X2", Combiner::x1x2()},
               {"MAJ3", Combiner::majority3()},
               {"X1X2X3", Combiner::x1x2x3()}};
  for (const auto& cs : cases) {
    const Combiner& c = cs.c;
    const uint64_t total = parameter_count(*f, c);
    const bool triple = c == Combiner::x1x2x3();
    std::atomic<uint64_t> bad{0}, bad_triple{0}, bent{0};
    parallel_ranges(total, 0, [&](std::size_t begin, std::size_t end) {
      uint64_t mis = 0, mis3 = 0, hits = 0;
      for (std::size_t i = begin; i < end; ++i) {
        const HParams p = params_at(*f, c, i);
        const bool full = is_bent(build_h(p, f));
        mis += xxeq_criterion(p, k) != full;
        if (triple) {
          const auto [lhs, rhs] = triple_product_relation(p.a[0], p.a[1], p.a[2], p.b, k);
          mis3 += (lhs == rhs) != full;
        }
        hits += full;
      }
      bad += mis;
      bad_triple += mis3;
      bent += hits;
    });
    o.check(bad == 0, std::string(cs.name) + " criterion mismatches");
    o.check(bad_triple == 0, std::string(cs.name) + " triple relation mismatches");
    o.check(bent > 0, std::string(cs.name) + " has no bent parameter set");
    o.detail << cs.name << ": " << total << " sets, " << bent << " bent, " << bad << " exceptions";
    if (triple) o.detail << ", relation exceptions " << bad_triple;
    o.detail << "; ";
  }
}

// ---- 10: EA invariants ---------------------------------------------------

// First (a1 = 1, b) with a bent h1, scanning b upward.
TruthTable first_bent_h1(FieldPtr f) {
  for (Element b : f->nonzero_elements()) {
    auto h = rational_h(f->one(), b, f);
    if (is_bent(h)) return h;
  }
  throw std::runtime_error("no bent h1 with a1 = 1");
}

// Tr(c x^d) for the first c that makes it bent, if any.
std::optional<TruthTable> bent_monomial(FieldPtr f, uint32_t d) {
  for (uint32_t c = 1; c < f->size(); ++c) {
    auto t = TruthTable::from_function(f, [&](uint32_t x) { return f->tr(f->mul(c, f->pow(x, d))); });
    if (is_bent(t)) return t;
  }
  return std::nullopt;
}

void fingerprint_invariance(Outcome& o) {
  std::mt19937_64 rng(10);
  for (int m : {6, 8}) {
    auto f = field_new(m);
    std::vector<TruthTable> functions = {first_bent_h1(f), *bent_monomial(f, 3),
                                         rational_h(f->w(3), f->w(5), f)};
    uint64_t checked = 0, bad = 0;
    for (const auto& t : functions) {
      const auto ref = fingerprint(t);
      for (int i = 0; i < kAffineTransforms; ++i) {
        bad += !ref.ea_invariants_equal(fingerprint(AffineTransform::random(m, rng).apply(t)));
        ++checked;
      }
    }
    o.check(bad == 0, "fingerprint changed at m=" + std::to_string(m));
    o.detail << "m=" << m << ": " << checked << " transforms, " << bad << " changes; ";
  }
}

void degree_separation(Outcome& o) {
  for (int m : {8, 10, 12}) {
    auto f = field_new(m);
    const int n = m / 2;
    const auto h1 = first_bent_h1(f);
    o.check(anf_degree(h1) == n, "h1 degree at m=" + std::to_string(m));
    struct Family {
      const char* name;
      uint32_t exponent;
      int degree;
    };
    std::vector<Family> families = {{"gold", 3, 2}};
    // Leander's exponent needs n/2 odd, the other one needs 3 | n.
    const uint32_t leander_root = (1u << (n / 2)) + 1;
    if (n % 4 == 2) families.push_back({"leander", leander_root * leander_root, 3});
    if (n % 3 == 0) families.push_back({"cck", (1u << (2 * n / 3)) + (1u << (n / 3)) + 1, 3});
    o.detail << "m=" << m << " h1 deg " << anf_degree(h1);
    for (const auto& fam : families) {
      const auto g = bent_monomial(f, fam.exponent);
      if (!g) {
        o.fail(std::string(fam.name) + " has no bent coefficient at m=" + std::to_string(m));
        continue;
      }
      const int deg = anf_degree(*g);
      o.check(deg == fam.degree, std::string(fam.name) + " degree at m=" + std::to_string(m));
      o.check(distinguish(h1, *g).degree_differs, std::string(fam.name) + " not separated by degree");
      o.detail << ", " << fam.name << "(d=" << fam.exponent << ") deg " << deg;
    }
    o.detail << "; ";
  }
}

}  // namespace
}  // namespace bentforge

int main() {
  using namespace bentforge;
  int failed = 0;
  auto crit = [&](int id, const char* title, std::vector<Stage> stages) {
    failed += !run_criterion(id, title, stages);
  };
  crit(1, "example 1 spectra", {{"m6", kLimitExample1, example1}});
  crit(2, "example 2 bent and conditions", {{"m12", kLimitExample2, example2}});
  crit(3, "example 3 bent and conditions", {{"m6", kLimitExample3, example3}});
  crit(4, "theorem 1 equivalence",
       {{"m6+m8", kLimitThm1Small,
         [](Outcome& o) {
           theorem1(o, 6);
           theorem1(o, 8);
         }},
        {"m10", kLimitThm1M10, [](Outcome& o) { theorem1(o, 10); }}});
  crit(5, "closed-form sums",
       {{"xi", kLimitDefault, xi_exhaustive}, {"S", kLimitDefault, s_closed_forms}, {"variant", kLimitDefault, variant}});
  crit(6, "kloosterman mod 4 and range", {{"n4-10", kLimitDefault, kloosterman_structure}});
  crit(7, "dillon-like equivalences", {{"all", kLimitDefault, dillon_equivalences}});
  crit(8, "polynomial expansion and degree", {{"m6+m8", kLimitDefault, expansion}});
  crit(9, "generic combiner criterion", {{"m6", kLimitDefault, combiners}});
  crit(10, "ea invariants and degree separation",
       {{"invariance", kLimitDefault, fingerprint_invariance}, {"separation", kLimitDefault, degree_separation}});
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
