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

#ifndef BENTFORGE_EAINV_H_
#define BENTFORGE_EAINV_H_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bentforge/boolfun.h"

namespace bentforge {

// Degree and the |W_f| multiset are EA-invariants. The hyper profile (is
// x -> f(x^i) bent, per coprime coset leader i) depends on the field
// structure rather than the GF(2)-affine one, so it is reported alongside
// but never used to separate functions.
struct InvariantFingerprint {
  int m = 0;
  int degree = 0;
  std::map<int32_t, uint32_t> walsh_multiset;  // |W| -> multiplicity
  std::optional<std::vector<uint8_t>> hyper_profile;  // absent for m > 12

  // Degree and multiset only.
  bool ea_invariants_equal(const InvariantFingerprint& o) const {
    return degree == o.degree && walsh_multiset == o.walsh_multiset;
  }
  // "deg=3|8:64|hyper=1f2e..." on a single line.
  std::string canonical() const;
};

InvariantFingerprint fingerprint(const TruthTable& f);

struct DistinguishReport {
  bool degree_differs = false;
  bool walsh_multiset_differs = false;
  // Informational; a differing profile does not separate EA classes.
  bool hyper_profile_differs = false;

  bool distinguished() const { return degree_differs || walsh_multiset_differs; }
  std::string summary() const;
};

// Throws if f and g live on different fields.
DistinguishReport distinguish(const TruthTable& f, const TruthTable& g);

// x -> f(M x + c) + <u, x> + e in the polynomial-basis coordinates, with M
// an invertible GF(2) matrix given by its columns.
struct AffineTransform {
  std::vector<uint32_t> columns;
  uint32_t shift = 0;
  uint32_t linear_form = 0;
  int constant = 0;

  TruthTable apply(const TruthTable& f) const;
  static AffineTransform random(int m, std::mt19937_64& rng);
};

}  // namespace bentforge

#endif  // BENTFORGE_EAINV_H_
