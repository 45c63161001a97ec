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

#include "bentforge/constructions.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <random>
#include <stdexcept>
#include <string>

#include "bentforge/parallel.h"

namespace bentforge {

// --- Combiner ----------------------------------------------------------------

Combiner::Combiner(int t, uint32_t table) : t_(t), table_(table) {
  if (t < 1 || t > kMaxArity) throw std::invalid_argument("combiner arity must be in [1, 4]");
  const uint32_t points = 1u << t;
  if (points < 32 && (table >> points) != 0) {
    throw std::invalid_argument("combiner table " + to_hex(table) + " has more than 2^" + std::to_string(t) +
                                " bits");
  }
  walsh_.assign(points, 0);
  for (uint32_t alpha = 0; alpha < points; ++alpha) {
    int s = 0;
    for (uint32_t x = 0; x < points; ++x) s += chi((*this)(x) ^ (std::popcount(alpha & x) & 1));
    walsh_[alpha] = s;
  }
}

Combiner Combiner::parse(std::string_view spec) {
  std::string s(spec);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "x1") return x1();
  if (s == "x1x2") return x1x2();
  if (s == "maj3") return majority3();
  if (s == "x1x2x3") return x1x2x3();
  const auto colon = s.find(':');
  if (colon != std::string::npos) {
    int t = 0;
    try {
      t = std::stoi(s.substr(0, colon));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad combiner arity in '" + s + "'");
    }
    return Combiner(t, parse_hex(s.substr(colon + 1)));
  }
  const uint32_t table = parse_hex(s);
  int t = 1;
  while (t < kMaxArity && (table >> (1u << t)) != 0) ++t;
  return Combiner(t, table);
}

// --- building h ----------------------------------------------------------------------

namespace {

void require_h_shape(const HParams& p, const Field& f) {
  if (static_cast<int>(p.a.size()) != p.combiner.t()) {
    throw std::invalid_argument("combiner has arity " + std::to_string(p.combiner.t()) + " but " +
                                std::to_string(p.a.size()) + " coefficients were given");
  }
  if (p.b.is_zero()) throw std::invalid_argument("b must be nonzero");
  if (!f.is_quadratic()) throw std::invalid_argument("h needs an even-degree field");
}

// F's input bits at y, i.e. bit i is Tr(a_(i+1) / (y + b)).
uint32_t inputs_at(const Field& f, const HParams& p, uint32_t y) {
  uint32_t x = 0;
  const uint32_t d = y ^ p.b.bits();
  for (std::size_t i = 0; i < p.a.size(); ++i) x |= static_cast<uint32_t>(f.tr(f.div(p.a[i].bits(), d))) << i;
  return x;
}

}  // namespace

uint32_t h_inputs_at_zero(const HParams& p) { return inputs_at(p.b.field(), p, 0); }

TruthTable build_h(const HParams& p, FieldPtr field) {
  const Field& f = *field;
  require_h_shape(p, f);
  const uint32_t q = f.q();
  // x^(q-1) only takes the q+1 values on U, so evaluate there once.
  std::vector<uint8_t> circle(q + 1);
  for (uint32_t k = 0; k <= q; ++k) circle[k] = static_cast<uint8_t>(p.combiner(inputs_at(f, p, f.exp(k * (q - 1)))));
  const int at_zero = p.combiner(inputs_at(f, p, 0));
  return TruthTable::from_function(std::move(field), [&](uint32_t x) -> int {
    return x == 0 ? at_zero : circle[circle_index(f, x)];
  });
}

bool xxeq_criterion(const HParams& p, const KloostermanCache& k) {
  const Field& f = k.field();
  require_h_shape(p, f);
  if (f.q() <= 2) throw std::invalid_argument("the combiner criterion needs q > 2");
  const int t = p.combiner.t();
  const auto& w = p.combiner.walsh();
  int rhs = 0;
  for (uint32_t alpha = 0; alpha < (1u << t); ++alpha) {
    if (w[alpha] == 0) continue;
    Element s = f.zero();
    for (int i = 0; i < t; ++i) {
      if ((alpha >> i) & 1) s += p.a[i];
    }
    rhs += w[alpha] * xi_closed(k, s, p.b);
  }
  const int lhs = (1 << t) * chi(p.combiner(h_inputs_at_zero(p)));
  return lhs == rhs;
}

std::pair<int, int> triple_product_relation(Element a1, Element a2, Element a3, Element b,
                                            const KloostermanCache& k) {
  const int q = static_cast<int>(k.field().q());
  const int h0 = (a1 / b).tr() & (a2 / b).tr() & (a3 / b).tr();
  auto x = [&](Element a) { return xi_closed(k, a, b); };
  const int rhs = 3 * (q + 1) + x(a1) + x(a2) + x(a3) + x(a1 + a2 + a3) - x(a1 + a2) - x(a1 + a3) - x(a2 + a3);
  return {4 * chi(h0), rhs};
}

// --- theorem checkers ---------------------------------------------------------------

namespace {

void require_a1_in_half(Element a1) {
  if (a1.is_zero() || !a1.in_half_field()) {
    throw std::invalid_argument("a1 must lie in GF(2^n)*; normalize the parameters first");
  }
}

// Tr_n^{2n}(x * conj(b)) == 0.
bool relative_trace_vanishes(Element x, Element b) {
  const Element t = x * b.conj();
  return (t + t.conj()).is_zero();
}

Verdict yes(std::string c) { return {true, std::move(c)}; }

}  // namespace

Verdict thm1_check(const KloostermanCache& k, Element a1, Element b) {
  require_a1_in_half(a1);
  if (b.is_zero()) throw std::invalid_argument("b must be nonzero");
  const Element one = k.field().one();
  if (b == one) return {};
  if (b.on_circle()) {
    if ((a1 / b).tr() == 0) return yes("1");
    return {};
  }
  const Element nb = b.norm();
  if (k(a1 / (one + nb)) == 0 && (a1 * (b + b.conj()) / ((one + nb) * nb)).tr_half() == 0) return yes("2");
  return {};
}

Verdict thm2_check(const KloostermanCache& k, Element a1, Element a2, Element b) {
  const Field& f = k.field();
  if (f.n() < 6) throw std::invalid_argument("the product criterion needs n >= 6");
  require_a1_in_half(a1);
  if (a2.is_zero() || b.is_zero()) throw std::invalid_argument("a2 and b must be nonzero");
  if (a1 == a2) throw std::invalid_argument("a1 and a2 must differ");
  const Element one = f.one();
  const int h0 = (a1 / b).tr() & (a2 / b).tr();
  if (b == one) {
    if (a1.tr_half() == 1 && !a2.in_half_field()) return yes("1");
    return {};
  }
  if (!b.on_circle()) return {};
  if (relative_trace_vanishes(a2, b) && a2.norm().tr_half() == 1 && h0 == 0) return yes("2");
  const Element s = a1 + a2;
  if (relative_trace_vanishes(s, b) && (s * (a1 + a2.conj())).tr_half() == 0 && h0 == 0) return yes("3");
  return {};
}

namespace {

// Conditions (1)-(6) for one ordering of (a2, a3); empty when none holds.
std::string thm3_conditions(const KloostermanCache& k, Element a1, Element a2, Element a3, Element b, int h0) {
  const Field& f = k.field();
  const Element one = f.one();
  const Element s = a1 + a2 + a3;
  if (b == one) {
    if (a2.in_half_field() && !a3.in_half_field() && (a1 + a2).tr_half() == 1) return "1";
    const Element d = a2 + a3;
    if (!a2.in_half_field() && !a3.in_half_field() && d.in_half_field() && d.tr_half() == 0 && a2.tr() == 0) {
      return "2";
    }
    return "";
  }
  if (b.on_circle()) {
    const bool z2 = relative_trace_vanishes(a2, b);
    const bool z3 = relative_trace_vanishes(a3, b);
    const bool zs = relative_trace_vanishes(s, b);
    if (h0 != 0) return "";
    if (z2 && z3 && (a2.norm() + a3.norm()).tr_half() == 1) return "3";
    if (z2 && !z3 && zs && a2.norm().tr_half() == (s * (a1 + a2.conj() + a3.conj())).tr_half()) return "4";
    if (!z2 && !z3 && !zs) return "5";
    return "";
  }
  const Element nb = b.norm();
  const Element kden = one + nb.square();
  const Element uden = one + nb;
  auto kk = [&](Element x) { return k(x.norm() / kden); };
  auto u = [&](Element x) { return (x.conj() * b / uden).tr(); };
  const int u1 = u(a1), u2 = u(a2), u3 = u(a3);
  const int rhs = 2 * chi((u1 & u2) ^ (u1 & u3) ^ (u2 & u3)) + chi(u(s)) * kk(s) -
                  (chi(u1) * kk(a1) + chi(u2) * kk(a2) + chi(u3) * kk(a3));
  return 2 * chi(h0) == rhs ? "6" : "";
}

}  // namespace

Verdict thm3_check(const KloostermanCache& k, Element a1, Element a2, Element a3, Element b) {
  const Field& f = k.field();
  if (f.n() <= 2) throw std::invalid_argument("the majority criterion needs n > 2");
  require_a1_in_half(a1);
  if (a2.is_zero() || a3.is_zero() || b.is_zero()) throw std::invalid_argument("a2, a3 and b must be nonzero");
  if (a1 == a2 || a1 == a3 || a2 == a3) throw std::invalid_argument("a1, a2, a3 must be pairwise different");
  if ((a1 + a2 + a3).is_zero()) throw std::invalid_argument("a1 + a2 + a3 must be nonzero");
  const int x1 = (a1 / b).tr(), x2 = (a2 / b).tr(), x3 = (a3 / b).tr();
  const int h0 = (x1 & x2) ^ (x1 & x3) ^ (x2 & x3);
  if (auto c = thm3_conditions(k, a1, a2, a3, b, h0); !c.empty()) return yes(c);
  if (auto c = thm3_conditions(k, a1, a3, a2, b, h0); !c.empty()) return yes(c + "'");
  return {};
}

Normalized normalize_a1(const HParams& p) {
  if (p.a.empty() || p.a[0].is_zero()) throw std::invalid_argument("a1 must be nonzero");
  const Field& f = p.b.field();
  const uint32_t q = f.q();
  // a1 / w^(i(q-1)) is in GF(2^n) iff (q+1) | log(a1) + 2i; 2 is invertible mod q+1.
  const uint32_t e = f.log(p.a[0].bits()) % (q + 1);
  const uint32_t half = (q + 2) / 2;
  const uint32_t i = static_cast<uint32_t>((uint64_t{(q + 1 - e) % (q + 1)} * half) % (q + 1));
  const Element c = f.w(int64_t{i} * (q - 1));
  Normalized out{p, i};
  for (auto& a : out.params.a) a = a / c;
  out.params.b = p.b / c;
  if (!out.params.a[0].in_half_field()) throw std::logic_error("normalize_a1 failed to reach GF(2^n)");
  return out;
}

std::string theorem_label(const HParams& p, const KloostermanCache& k) {
  const Field& f = k.field();
  const auto& a = p.a;
  const bool a1_ok = !a.empty() && !a[0].is_zero() && a[0].in_half_field();
  if (!a1_ok || p.b.is_zero()) return "n/a";
  auto label = [](const char* thm, const Verdict& v) {
    return std::string(thm) + ":" + (v.holds ? v.condition : "none");
  };
  if (p.combiner == Combiner::x1()) return label("thm1", thm1_check(k, a[0], p.b));
  if (p.combiner == Combiner::x1x2()) {
    if (f.n() < 6 || a[1].is_zero() || a[0] == a[1]) return "n/a";
    return label("thm2", thm2_check(k, a[0], a[1], p.b));
  }
  if (p.combiner == Combiner::majority3()) {
    if (f.n() <= 2 || a[1].is_zero() || a[2].is_zero() || a[0] == a[1] || a[0] == a[2] || a[1] == a[2] ||
        (a[0] + a[1] + a[2]).is_zero()) {
      return "n/a";
    }
    return label("thm3", thm3_check(k, a[0], a[1], a[2], p.b));
  }
  return "n/a";
}

// --- search -------------------------------------------------------------------------

Scope Scope::parse(std::string_view s) {
  if (s == "exhaustive") return exhaustive();
  if (s.rfind("sample:", 0) == 0) {
    const std::string k(s.substr(7));
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == k.size() && used > 0) return sample(v);
  }
  throw std::invalid_argument("scope must be 'exhaustive' or 'sample:K', got '" + std::string(s) + "'");
}

std::string Scope::to_string() const {
  return kind == Kind::kExhaustive ? "exhaustive" : "sample:" + std::to_string(samples);
}

uint64_t parameter_count(const Field& field, const Combiner& f) {
  const uint64_t nonzero = field.order();
  uint64_t count = field.q() - 1;
  for (int i = 0; i < f.t(); ++i) {
    // Saturate instead of overflowing; anything this big is only sampled.
    if (count > (uint64_t{1} << 62) / nonzero) return uint64_t{1} << 62;
    count *= nonzero;
  }
  return count;
}

HParams params_at(const Field& field, const Combiner& f, uint64_t index) {
  const uint64_t nonzero = field.order();
  HParams p;
  p.combiner = f;
  p.a.assign(f.t(), field.zero());
  p.b = field.element(static_cast<uint32_t>(index % nonzero) + 1);
  index /= nonzero;
  for (int i = f.t() - 1; i >= 1; --i) {
    p.a[i] = field.element(static_cast<uint32_t>(index % nonzero) + 1);
    index /= nonzero;
  }
  if (index >= field.q() - 1) throw std::out_of_range("parameter index out of range");
  p.a[0] = field.w(static_cast<int64_t>(index) * (field.q() + 1));
  return p;
}

ScopeCursor::ScopeCursor(const Field& field, const Combiner& f, const Scope& scope, uint64_t seed)
    : exhaustive_(scope.kind == Scope::Kind::kExhaustive),
      count_(parameter_count(field, f)),
      size_(exhaustive_ ? count_ : scope.samples),
      rng_(seed) {
  if (exhaustive_ && count_ > kMaxExhaustive) {
    throw std::invalid_argument("exhaustive scope has " + std::to_string(count_) +
                                " parameter sets, above the limit of 2^24; use sample:K");
  }
}

void ScopeCursor::skip(uint64_t k) {
  k = std::min(k, size_ - position_);
  if (!exhaustive_) rng_.discard(k);
  position_ += k;
}

std::vector<uint64_t> ScopeCursor::next(uint64_t k) {
  k = std::min(k, size_ - position_);
  std::vector<uint64_t> out(k);
  for (auto& i : out) {
    // Plain modulo keeps the stream identical across standard libraries.
    i = exhaustive_ ? position_ : rng_() % count_;
    ++position_;
  }
  return out;
}

std::vector<uint64_t> scope_indices(const Field& field, const Combiner& f, const Scope& scope, uint64_t seed) {
  ScopeCursor c(field, f, scope, seed);
  return c.next(c.size());
}

std::vector<SweepRecord> evaluate_indices(const KloostermanCache& k, const Combiner& f,
                                          std::span<const uint64_t> indices, int jobs) {
  std::vector<SweepRecord> out(indices.size());
  const Field& field = k.field();
  parallel_ranges(indices.size(), jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      SweepRecord& r = out[i];
      r.params = params_at(field, f, indices[i]);
      r.bent = xxeq_criterion(r.params, k);
      r.matched_condition = theorem_label(r.params, k);
      r.walsh_verified = is_bent(build_h(r.params, k.field_ptr()));
    }
  });
  return out;
}

std::vector<HParams> enumerate_bent(const KloostermanCache& k, const Combiner& f, const Scope& scope, uint64_t seed,
                                    int jobs) {
  const Field& field = k.field();
  const auto indices = scope_indices(field, f, scope, seed);
  std::vector<uint8_t> hit(indices.size(), 0);
  parallel_ranges(indices.size(), jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) hit[i] = xxeq_criterion(params_at(field, f, indices[i]), k);
  });
  std::vector<HParams> out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (hit[i]) out.push_back(params_at(field, f, indices[i]));
  }
  return out;
}

}  // namespace bentforge
