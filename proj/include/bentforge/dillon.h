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

#ifndef BENTFORGE_DILLON_H_
#define BENTFORGE_DILLON_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "bentforge/boolfun.h"
#include "bentforge/gf2m.h"

namespace bentforge {

// f(x) = g(x^(q-1)), kept as the values of g on U and at 0.
// g_on_circle[k] = g(w^(k(q-1))), the order of unit_circle().
struct DillonFunction {
  FieldPtr field;
  std::vector<uint8_t> g_on_circle;
  uint8_t g_at_zero = 0;

  // sum over lambda in U of (-1)^g(lambda)
  int circle_sum() const;
  int g(uint32_t circle_index) const { return g_on_circle[circle_index]; }
};

// Builds a DillonFunction from explicit circle values; checks the size.
DillonFunction make_dillon(FieldPtr field, std::vector<uint8_t> g_on_circle, int g_at_zero);

// Present iff f(w^(q+1) x) = f(x) for all x.
std::optional<DillonFunction> detect_dillon(const TruthTable& f);

TruthTable to_truth_table(const DillonFunction& d);

// Walsh value at alpha computed from the circle values alone.
int restricted_walsh(const DillonFunction& d, Element alpha);
WalshSpectrum restricted_spectrum(const DillonFunction& d);

// Bent iff sum_{lambda in U} (-1)^g(lambda) = (-1)^f(0). Throws for q = 2.
bool bent_criterion_U(const DillonFunction& d);

// Hyper-bent iff wt(f(1), f(w), ..., f(w^q)) = q/2, applied to f + 1 when
// f(0) = 1.
bool hyperbent_weight_criterion(const DillonFunction& d);

// x -> g(x^(q^2 - q)). Throws if d is not bent.
DillonFunction dillon_dual(const DillonFunction& d);

// CSV "lambda_hex,g_bit" ordered by powers of the circle generator.
void write_circle_csv(std::ostream& out, const DillonFunction& d);

}  // namespace bentforge

#endif  // BENTFORGE_DILLON_H_
