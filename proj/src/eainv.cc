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

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace bentforge {

std::string InvariantFingerprint::canonical() const {
  std::ostringstream s;
  s << "m=" << m << "|deg=" << degree << '|';
  bool first = true;
  for (const auto& [v, n] : walsh_multiset) {
    s << (first ? "" : ",") << v << ':' << n;
    first = false;
  }
  s << "|hyper=";
  if (!hyper_profile) {
    s << "na";
  } else {
    // FNV-1a over the profile bits keeps the line short at m = 12.
    uint64_t h = 1469598103934665603ull;
    for (uint8_t b : *hyper_profile) h = (h ^ b) * 1099511628211ull;
    s << std::hex << h;
  }
  return s.str();
}

InvariantFingerprint fingerprint(const TruthTable& f) {
  InvariantFingerprint fp;
  const int m = f.field().m();
  fp.m = m;
  fp.degree = anf_degree(f);
  for (int32_t v : walsh(f).values) ++fp.walsh_multiset[std::abs(v)];
  if (m <= kMaxHyperBentDegree && m % 2 == 0) {
    std::vector<uint8_t> profile;
    for (uint32_t i : coprime_coset_leaders(m)) profile.push_back(is_bent(compose_power(f, i)));
    fp.hyper_profile = std::move(profile);
  }
  return fp;
}

std::string DistinguishReport::summary() const {
  if (!distinguished()) {
    return hyper_profile_differs ? "indistinguishable by these invariants (hyper profile differs, not an EA-invariant)"
                                 : "indistinguishable by these invariants";
  }
  std::string s = "distinguished by";
  if (degree_differs) s += " degree";
  if (walsh_multiset_differs) s += degree_differs ? ", walsh multiset" : " walsh multiset";
  return s;
}

DistinguishReport distinguish(const TruthTable& f, const TruthTable& g) {
  if (f.field().m() != g.field().m() || f.field().poly() != g.field().poly()) {
    throw std::invalid_argument("distinguish: functions live on different fields");
  }
  const auto a = fingerprint(f);
  const auto b = fingerprint(g);
  DistinguishReport r;
  r.degree_differs = a.degree != b.degree;
  r.walsh_multiset_differs = a.walsh_multiset != b.walsh_multiset;
  r.hyper_profile_differs = a.hyper_profile != b.hyper_profile;
  return r;
}

TruthTable AffineTransform::apply(const TruthTable& f) const {
  return TruthTable::from_function(f.field_ptr(), [&](uint32_t x) {
    uint32_t y = shift;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if ((x >> i) & 1) y ^= columns[i];
    }
    return f[y] ^ (std::popcount(x & linear_form) & 1) ^ constant;
  });
}

AffineTransform AffineTransform::random(int m, std::mt19937_64& rng) {
  const uint32_t mask = (m >= 32) ? ~0u : ((1u << m) - 1);
  AffineTransform t;
  // Draw columns until they are independent; Gaussian elimination on the fly.
  while (static_cast<int>(t.columns.size()) < m) {
    t.columns.clear();
    std::vector<uint32_t> basis;  // distinct leading bits, descending
    for (int i = 0; i < m; ++i) {
      const uint32_t c = static_cast<uint32_t>(rng()) & mask;
      uint32_t r = c;
      for (uint32_t v : basis) r = std::min(r, r ^ v);
      if (r == 0) break;
      basis.push_back(r);
      std::sort(basis.begin(), basis.end(), std::greater<>());
      t.columns.push_back(c);
    }
  }
  t.shift = static_cast<uint32_t>(rng()) & mask;
  t.linear_form = static_cast<uint32_t>(rng()) & mask;
  t.constant = static_cast<int>(rng() & 1);
  return t;
}

}  // namespace bentforge
