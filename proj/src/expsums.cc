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

#include "bentforge/expsums.h"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bentforge/boolfun.h"

namespace bentforge {

namespace {

void require_nonzero(Element a, const char* what) {
  if (a.is_zero()) throw std::invalid_argument(std::string(what) + ": argument must be nonzero");
}

}  // namespace

int kloosterman(const Field& field, Element a) {
  require_nonzero(a, "kloosterman");
  int s = 0;
  for (uint32_t x = 0; x < field.size(); ++x) {
    s += chi(field.tr(field.inv(x) ^ field.mul(a.bits(), x)));
  }
  return s;
}

int kloosterman_half(const Field& field, Element a) {
  require_nonzero(a, "kloosterman_half");
  if (!a.in_half_field()) throw std::invalid_argument("kloosterman_half: argument outside GF(2^n)");
  int s = 0;
  for (Element x : field.half_field()) s += chi((x.inv() + a * x).tr_half());
  return s;
}

int kloosterman_variant(const Field& field, Element a) {
  require_nonzero(a, "kloosterman_variant");
  int s = 0;
  for (uint32_t y = 0; y < field.size(); ++y) {
    if (field.tr(field.div(a.bits(), y)) == 1) s += chi(field.tr(y));
  }
  return s;
}

bool kloosterman_value_plausible(int n, int value) {
  if (value % 4 != 0) return false;
  // |K - 1| <= 2^(n/2 + 1)  <=>  (K - 1)^2 <= 2^(n + 2)
  const int64_t d = value - 1;
  return d * d <= (int64_t{1} << (n + 2));
}

// --- KloostermanTable ----------------------------------------------------------

KloostermanTable KloostermanTable::compute(int n) {
  FieldPtr field = Field::make(n);
  const Field& f = *field;
  // K(a) = sum_x (-1)^(Tr(1/x) + Tr(a x)) is the Walsh spectrum of Tr(1/x).
  const TruthTable tr_inv = TruthTable::from_function(field, [&](uint32_t x) { return f.tr(f.inv(x)); });
  const WalshSpectrum s = walsh(tr_inv);
  std::vector<int> values(f.size(), 0);
  for (uint32_t a = 1; a < f.size(); ++a) values[a] = s.values[a];
  return KloostermanTable(n, std::move(field), std::move(values), Source::kComputed);
}

int KloostermanTable::at(uint32_t a) const {
  if (a == 0 || a >= values_.size()) {
    throw std::out_of_range("Kloosterman table has no entry for " + to_hex(a));
  }
  return values_[a];
}

void KloostermanTable::save(std::ostream& out) const {
  out << "n=" << n_ << '\n';
  for (uint32_t a = 1; a < values_.size(); ++a) out << to_hex(a) << ',' << values_[a] << '\n';
}

KloostermanTable KloostermanTable::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("n=", 0) != 0) {
    throw std::runtime_error("Kloosterman table: missing 'n=<int>' header");
  }
  int n = 0;
  try {
    n = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    throw std::runtime_error("Kloosterman table: bad header '" + line + "'");
  }
  if (n < 1 || n > kMaxDegree) throw std::runtime_error("Kloosterman table: n out of range");
  FieldPtr field = Field::make(n);
  std::vector<int> values(field->size(), 0);
  std::vector<uint8_t> seen(field->size(), 0);
  std::size_t rows = 0;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("Kloosterman table line " + std::to_string(line_no) + ": expected 'a_hex,value'");
    }
    uint32_t a = 0;
    int v = 0;
    try {
      a = parse_hex(line.substr(0, comma));
      std::size_t used = 0;
      const std::string rest = line.substr(comma + 1);
      v = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception& e) {
      throw std::runtime_error("Kloosterman table line " + std::to_string(line_no) + ": " + e.what());
    }
    if (a == 0 || a >= field->size() || seen[a]) {
      throw std::runtime_error("Kloosterman table line " + std::to_string(line_no) + ": bad or repeated key " +
                               to_hex(a));
    }
    if (!kloosterman_value_plausible(n, v)) {
      throw std::runtime_error("Kloosterman table line " + std::to_string(line_no) + ": value " +
                               std::to_string(v) + " is not a multiple of 4 within the Weil range");
    }
    seen[a] = 1;
    values[a] = v;
    ++rows;
  }
  if (rows != field->order()) {
    throw std::runtime_error("Kloosterman table: expected " + std::to_string(field->order()) + " rows, got " +
                             std::to_string(rows));
  }
  return KloostermanTable(n, std::move(field), std::move(values), Source::kLoaded);
}

// --- KloostermanCache ----------------------------------------------------------

KloostermanCache::KloostermanCache(FieldPtr field) : field_(std::move(field)), values_(field_->size(), 0) {
  const Field& f = *field_;
  if (!f.is_quadratic()) throw std::invalid_argument("KloostermanCache needs an even-degree field");
  const auto half = f.half_field();
  std::vector<int> tr_inv(f.size(), 0);
  for (Element x : half) tr_inv[x.bits()] = x.inv().tr_half();
  for (Element a : half) {
    if (a.is_zero()) continue;
    int s = 0;
    for (Element x : half) s += chi(tr_inv[x.bits()] ^ (a * x).tr_half());
    values_[a.bits()] = s;
  }
}

KloostermanCache::KloostermanCache(FieldPtr field, const KloostermanTable& table)
    : field_(std::move(field)), values_(field_->size(), 0) {
  const Field& f = *field_;
  if (!f.is_quadratic() || table.n() != f.n()) {
    throw std::invalid_argument("Kloosterman table degree does not match the half field");
  }
  // Find a root r of the table field's polynomial inside GF(2^n); then
  // x^i -> r^i is a field isomorphism onto the half field.
  const uint32_t p = table.field()->poly();
  auto eval = [&](Element r) {
    Element acc = f.zero();
    Element power = f.one();
    for (int i = 0; i <= f.n(); ++i) {
      if ((p >> i) & 1) acc += power;
      power = power * r;
    }
    return acc;
  };
  Element root = f.zero();
  for (Element r : f.half_field()) {
    if (!r.is_zero() && eval(r).is_zero()) {
      root = r;
      break;
    }
  }
  if (root.is_zero()) throw std::logic_error("no root of the half-field polynomial");
  std::vector<Element> basis;
  for (int i = 0; i < f.n(); ++i) basis.push_back(root.pow(i));
  for (uint32_t s = 1; s < table.field()->size(); ++s) {
    Element image = f.zero();
    for (int i = 0; i < f.n(); ++i) {
      if ((s >> i) & 1) image += basis[i];
    }
    values_[image.bits()] = table.at(s);
  }
}

int KloostermanCache::operator()(Element a) const {
  if (a.is_zero()) throw std::invalid_argument("K_n(0) is undefined");
  return values_[a.bits()];
}

// --- closed-form sums --------------------------------------------------------------

int rational_sum_S(const Field& field, Element A, Element B, Element delta, SumMode mode) {
  if (A.is_zero()) throw std::invalid_argument("rational_sum_S: A must be nonzero");
  if ((B.square() / A.square() + B / A + delta).is_zero()) {
    throw std::invalid_argument("rational_sum_S: B^2/A^2 + B/A + delta must be nonzero");
  }
  if (mode == SumMode::kBrute) {
    int s = 0;
    for (Element x : field.elements()) s += chi(((A * x + B) / (x.square() + x + delta)).tr());
    return s;
  }
  const Element C = (A * B + A.square() * delta).sqrt();
  const Element BC = B + C;
  if (BC.is_zero()) throw std::logic_error("rational_sum_S: B + C vanished under the precondition");
  const int u = chi(A.tr());
  const int v = chi((BC / A).tr());
  const int k = kloosterman(field, BC);
  if (delta.tr() == 1) return u + v - k * u;
  return -u - v + k * u + 2;
}

int xi_brute(const Field& field, Element a, Element b) {
  if (b.is_zero()) throw std::invalid_argument("xi: b must be nonzero");
  int s = 0;
  for (Element lambda : unit_circle(field).elements) s += chi((a / (lambda + b)).tr());
  return s;
}

int xi_closed(const KloostermanCache& k, Element a, Element b) {
  if (b.is_zero()) throw std::invalid_argument("xi: b must be nonzero");
  const Field& f = k.field();
  const int q = static_cast<int>(f.q());
  if (a.is_zero()) return q + 1;
  const Element one = f.one();
  if (b.on_circle()) {
    const Element t = a * b.conj();
    if ((t + t.conj()).is_zero()) return 1 + chi(a.norm().tr_half()) * q;
    return 1;
  }
  const Element bb = b.norm();
  const int kv = k(a.norm() / (one + bb.square()));
  return (1 - kv) * chi((a.conj() * b / (one + bb)).tr());
}

int xi(const KloostermanCache& k, Element a, Element b, SumMode mode) {
  return mode == SumMode::kClosed ? xi_closed(k, a, b) : xi_brute(k.field(), a, b);
}

int m_sum(const Field& field, Element a, Element b) {
  if (b.is_zero()) throw std::invalid_argument("m_sum: b must be nonzero");
  int s = 0;
  for (Element lambda : unit_circle(field).elements) {
    if (!lambda.is_one()) s += chi((a / (lambda + b)).tr());
  }
  return s;
}

}  // namespace bentforge
