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

#include "bentforge/eainv.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace bentforge {
namespace {

TruthTable monomial(FieldPtr f, Element a, uint32_t d) {
  const Field& field = *f;
  return TruthTable::from_function(f, [&](uint32_t x) { return field.tr(field.mul(a.bits(), field.pow(x, d))); });
}

TEST(AffineTest, RandomTransformsArePermutations) {
  std::mt19937_64 rng(12);
  for (int m : {4, 6, 8}) {
    for (int rep = 0; rep < 50; ++rep) {
      const auto t = AffineTransform::random(m, rng);
      ASSERT_EQ(t.columns.size(), static_cast<std::size_t>(m));
      std::set<uint32_t> image;
      for (uint32_t x = 0; x < (1u << m); ++x) {
        uint32_t y = t.shift;
        for (int i = 0; i < m; ++i) {
          if ((x >> i) & 1) y ^= t.columns[i];
        }
        image.insert(y);
      }
      ASSERT_EQ(image.size(), std::size_t{1} << m);
    }
  }
}

TEST(FingerprintTest, InvariantUnderRandomAffineMaps) {
  std::mt19937_64 rng(13);
  for (int m : {6, 8}) {
    auto f = field_new(m);
    std::vector<TruthTable> subjects = {rational_h(f->one(), f->w(f->q() - 1), f), rational_h(f->one(), f->gen(), f),
                                        monomial(f, f->gen(), 3)};
    // A non-bent function too, so the multiset has more than one value.
    subjects.push_back(TruthTable::from_function(f, [&](uint32_t) { return static_cast<int>(rng() & 1); }));
    for (const auto& s : subjects) {
      const auto base = fingerprint(s);
      ASSERT_GE(base.degree, 2);
      for (int rep = 0; rep < 100; ++rep) {
        const auto moved = fingerprint(AffineTransform::random(m, rng).apply(s));
        ASSERT_TRUE(base.ea_invariants_equal(moved));
        ASSERT_EQ(base.degree, moved.degree);
      }
    }
  }
}

// The profile looks at f(x^i), which is not compatible with GF(2)-affine
// changes of coordinates.
TEST(FingerprintTest, HyperProfileIsNotAnEaInvariant) {
  std::mt19937_64 rng(14);
  auto f = field_new(6);
  const auto h = rational_h(f->one(), f->w(7), f);
  const auto base = fingerprint(h);
  ASSERT_TRUE(base.hyper_profile.has_value());
  bool found = false;
  for (int rep = 0; rep < 100 && !found; ++rep) {
    const auto g = AffineTransform::random(6, rng).apply(h);
    const auto fp = fingerprint(g);
    ASSERT_TRUE(base.ea_invariants_equal(fp));
    if (fp.hyper_profile != base.hyper_profile) {
      found = true;
      const auto r = distinguish(h, g);
      EXPECT_TRUE(r.hyper_profile_differs);
      EXPECT_FALSE(r.distinguished());
    }
  }
  EXPECT_TRUE(found);
}

TEST(FingerprintTest, CanonicalLine) {
  auto f = field_new(6);
  const auto fp = fingerprint(rational_h(f->one(), f->w(7), f));
  const auto line = fp.canonical();
  EXPECT_EQ(line.rfind("m=6|deg=3|8:64|hyper=", 0), 0u) << line;
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_EQ(line, fingerprint(rational_h(f->one(), f->w(7), f)).canonical());
  const auto big = fingerprint(TruthTable(field_new(14)));
  EXPECT_FALSE(big.hyper_profile.has_value());
  EXPECT_NE(big.canonical().find("hyper=na"), std::string::npos);
}

TEST(DistinguishTest, SelfAndGold) {
  auto f = field_new(6);
  const auto h = rational_h(f->one(), f->w(7), f);
  EXPECT_FALSE(distinguish(h, h).distinguished());
  EXPECT_EQ(distinguish(h, h).summary(), "indistinguishable by these invariants");
  const auto gold = monomial(f, f->gen(), 3);
  ASSERT_TRUE(is_bent(gold));
  const auto r = distinguish(h, gold);
  EXPECT_TRUE(r.degree_differs);
  EXPECT_FALSE(r.walsh_multiset_differs);
  EXPECT_EQ(r.summary(), "distinguished by degree");
  EXPECT_THROW(distinguish(h, TruthTable(field_new(8))), std::invalid_argument);
  EXPECT_THROW(distinguish(h, TruthTable(field_new(6, 0x43))), std::invalid_argument);
}

TEST(DistinguishTest, DillonMonomialsShareTheInvariants) {
  // Bent Tr(a x^7) at m = 6 has degree 3 like every bent h1, so the
  // invariants cannot tell them apart.
  auto f = field_new(6);
  const auto h = rational_h(f->one(), f->w(7), f);
  int bent = 0;
  for (Element a : f->nonzero_elements()) {
    const auto g = monomial(f, a, 7);
    const auto r = distinguish(h, g);
    EXPECT_EQ(r.distinguished(), !is_bent(g));
    bent += is_bent(g);
  }
  EXPECT_GT(bent, 0);
}

TEST(DegreeTest, BentRationalFunctionsHaveHalfDegree) {
  auto f = field_new(6);
  int bent = 0;
  for (Element a : f->nonzero_elements()) {
    for (Element b : f->nonzero_elements()) {
      const auto h = rational_h(a, b, f);
      if (!is_bent(h)) continue;
      ASSERT_EQ(fingerprint(h).degree, 3);
      ++bent;
    }
  }
  EXPECT_GT(bent, 0);
}

}  // namespace
}  // namespace bentforge
