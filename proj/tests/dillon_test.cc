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

#include "bentforge/dillon.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace bentforge {
namespace {

DillonFunction random_dillon(FieldPtr f, std::mt19937_64& rng) {
  std::vector<uint8_t> g(f->q() + 1);
  for (auto& b : g) b = rng() & 1;
  return make_dillon(f, std::move(g), static_cast<int>(rng() & 1));
}

// A random Dillon-like function that satisfies the circle criterion: the
// number of ones on U is fixed by g(0).
DillonFunction random_bent_dillon(FieldPtr f, std::mt19937_64& rng) {
  const uint32_t q = f->q();
  const int g0 = rng() & 1;
  std::vector<uint8_t> g(q + 1, 0);
  const uint32_t ones = g0 ? q / 2 + 1 : q / 2;
  for (uint32_t i = 0; i < ones; ++i) g[i] = 1;
  std::shuffle(g.begin(), g.end(), rng);
  return make_dillon(f, std::move(g), g0);
}

TEST(DetectTest, RationalFunctionsAreDillonLike) {
  auto f = field_new(6);
  for (Element a : f->nonzero_elements()) {
    for (Element b : {f->one(), f->w(7), f->w(1), f->w(30)}) {
      const auto h = rational_h(a, b, f);
      const auto d = detect_dillon(h);
      ASSERT_TRUE(d.has_value());
      EXPECT_EQ(to_truth_table(*d), h);
    }
  }
}

TEST(DetectTest, LinearFunctionIsNot) {
  auto f = field_new(6);
  const auto t = TruthTable::from_function(f, [&](uint32_t x) { return f->tr(x); });
  EXPECT_FALSE(detect_dillon(t).has_value());
}

TEST(DetectTest, DillonMonomialsRoundTrip) {
  auto f = field_new(6);
  for (uint32_t k = 1; k <= 8; ++k) {
    for (Element a : {f->one(), f->w(5), f->w(40)}) {
      const auto t = TruthTable::from_function(f, [&](uint32_t x) { return f->tr(f->mul(a.bits(), f->pow(x, 7 * k))); });
      const auto d = detect_dillon(t);
      ASSERT_TRUE(d.has_value());
      EXPECT_EQ(to_truth_table(*d), t);
      // The circle values are g(lambda) = Tr(a lambda^k).
      const auto u = unit_circle(*f);
      for (uint32_t i = 0; i < u.size(); ++i) EXPECT_EQ(d->g(i), (a * u.elements[i].pow(k)).tr());
    }
  }
}

TEST(DetectTest, RoundTripFromCircleValuesExhaustiveAtM6) {
  auto f = field_new(6);
  // All 2^9 circle assignments times both values at zero.
  for (uint32_t mask = 0; mask < (1u << 9); ++mask) {
    for (int g0 : {0, 1}) {
      std::vector<uint8_t> g(9);
      for (int i = 0; i < 9; ++i) g[i] = (mask >> i) & 1;
      const auto d = make_dillon(f, g, g0);
      const auto back = detect_dillon(to_truth_table(d));
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(back->g_on_circle, d.g_on_circle);
      EXPECT_EQ(back->g_at_zero, d.g_at_zero);
    }
  }
  EXPECT_THROW(make_dillon(f, std::vector<uint8_t>(8), 0), std::invalid_argument);
}

TEST(RestrictedWalshTest, ZeroFunction) {
  auto f = field_new(6);
  const auto d = make_dillon(f, std::vector<uint8_t>(9, 0), 0);
  EXPECT_EQ(restricted_walsh(d, f->zero()), 64);
  EXPECT_FALSE(bent_criterion_U(d));
  EXPECT_FALSE(hyperbent_weight_criterion(d));
}

TEST(RestrictedWalshTest, MatchesFullSpectrum) {
  std::mt19937_64 rng(17);
  auto f6 = field_new(6);
  for (Element b : {f6->w(7), f6->w(1)}) {
    const auto d = *detect_dillon(rational_h(f6->one(), b, f6));
    EXPECT_EQ(restricted_spectrum(d), walsh(to_truth_table(d)));
  }
  for (int m : {6, 8, 10}) {
    auto f = field_new(m);
    for (int rep = 0; rep < 20; ++rep) {
      const auto d = rep % 2 ? random_dillon(f, rng) : random_bent_dillon(f, rng);
      ASSERT_EQ(restricted_spectrum(d), walsh(to_truth_table(d))) << m;
    }
  }
}

TEST(CriterionTest, ExhaustiveOverRationalFamilyAtM6) {
  auto f = field_new(6);
  int bent = 0;
  for (Element a : f->nonzero_elements()) {
    for (Element b : f->nonzero_elements()) {
      const auto h = rational_h(a, b, f);
      const auto d = *detect_dillon(h);
      const bool full = is_bent(h);
      ASSERT_EQ(bent_criterion_U(d), full);
      ASSERT_EQ(is_hyper_bent_def(h), full);
      ASSERT_EQ(hyperbent_weight_criterion(d), full);
      bent += full;
    }
  }
  EXPECT_GT(bent, 0);
}

TEST(CriterionTest, SampledAtM8AndClosedSpectrum) {
  std::mt19937_64 rng(23);
  auto f = field_new(8);
  for (int rep = 0; rep < 200; ++rep) {
    const auto d = rep % 2 ? random_dillon(f, rng) : random_bent_dillon(f, rng);
    const auto t = to_truth_table(d);
    const bool full = is_bent(t);
    ASSERT_EQ(bent_criterion_U(d), full);
    ASSERT_EQ(hyperbent_weight_criterion(d), full);
    if (rep % 10 == 0) ASSERT_EQ(is_hyper_bent_def(t), full);
    if (!full) continue;
    // W(alpha) = q (-1)^g(alpha^(q^2-q)), with g read on U and at 0.
    const auto s = walsh(t);
    const auto u = unit_circle(*f);
    std::map<uint32_t, int> g;
    for (uint32_t i = 0; i < u.size(); ++i) g[u.elements[i].bits()] = d.g(i);
    g[0] = d.g_at_zero;
    const int64_t e = int64_t{f->q()} * f->q() - f->q();
    for (uint32_t alpha = 0; alpha < f->size(); ++alpha) {
      ASSERT_EQ(s[alpha], static_cast<int>(f->q()) * chi(g.at(f->pow(alpha, e))));
    }
  }
}

TEST(CriterionTest, RefusesQEqualsTwo) {
  auto f = field_new(2);
  EXPECT_THROW(bent_criterion_U(make_dillon(f, {0, 0, 1}, 0)), std::invalid_argument);
}

TEST(DualTest, MatchesBooleanDual) {
  std::mt19937_64 rng(29);
  auto f6 = field_new(6);
  std::vector<DillonFunction> cases;
  for (Element b : {f6->w(7), f6->w(1)}) cases.push_back(*detect_dillon(rational_h(f6->one(), b, f6)));
  auto f8 = field_new(8);
  for (int i = 0; i < 10; ++i) cases.push_back(random_bent_dillon(f8, rng));
  for (const auto& d : cases) {
    const auto dd = dillon_dual(d);
    EXPECT_EQ(to_truth_table(dd), dual(to_truth_table(d)));
    EXPECT_TRUE(bent_criterion_U(dd));
    EXPECT_EQ(dillon_dual(dd).g_on_circle, d.g_on_circle);
  }
  EXPECT_THROW(dillon_dual(make_dillon(f6, std::vector<uint8_t>(9, 0), 0)), std::invalid_argument);
}

TEST(CsvTest, CircleExport) {
  auto f = field_new(6);
  const auto d = *detect_dillon(rational_h(f->one(), f->w(7), f));
  std::stringstream s;
  write_circle_csv(s, d);
  std::string line;
  std::getline(s, line);
  EXPECT_EQ(line, "lambda_hex,g_bit");
  std::getline(s, line);
  EXPECT_EQ(line.substr(0, 4), "0x1,");
  int rows = 1;
  while (std::getline(s, line)) ++rows;
  EXPECT_EQ(rows, 9);
}

}  // namespace
}  // namespace bentforge
