// Copyright 2026 The ocg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ocg/ntsweep.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "ocg/wideint.hpp"

namespace ocg {

namespace {

bool pow2(u64 v) { return v && !(v & (v - 1)); }

bool brute_prime_power(u64 q) {
  if (q < 2) return false;
  u64 p = 0;
  for (u64 d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  while (q % p == 0) q /= p;
  return q == 1;
}

int mobius(u64 m) {
  int k = 0;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      m /= d;
      if (m % d == 0) return 0;
      ++k;
    }
  }
  if (m > 1) ++k;
  return (k % 2 == 0) ? 1 : -1;
}

// Cyclotomic value by Mobius inversion over the x^d - 1, deliberately a
// different route from the library's ascending divisor recurrence.
Wide<8> mobius_cyclotomic(u64 n, u64 x) {
  Wide<8> num = Wide<8>::one();
  Wide<8> den = Wide<8>::one();
  for (u64 d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(n / d);
    if (mu == 0) continue;
    Wide<8> term = Wide<8>::pow_u64(x, static_cast<uint32_t>(d));
    term.sub(Wide<8>::one());
    if (mu == 1) {
      num = num.mul(term);
    } else {
      den = den.mul(term);
    }
  }
  Wide<8> rem;
  Wide<8> quot = num.divmod(den, rem);
  if (!rem.is_zero()) {
    throw std::logic_error("ntsweep: cyclotomic inversion left a remainder");
  }
  return quot;
}

u64 iterated_order(u64 q, u64 s) {
  u64 b = q % s;
  u64 acc = b;
  u64 i = 1;
  while (acc != 1) {
    acc = static_cast<u64>(static_cast<u128>(acc) * b % s);
    ++i;
  }
  return i;
}

enum class OracleKind { Found, ProvenNone, OutOfRange };

// Least odd witness by brute factoring; past 64 bits, certified by scanning
// the arithmetic progression 1 mod n up to the library's own bound.
std::pair<OracleKind, u64> oracle_least_witness(u64 q, u64 n) {
  Wide<8> v = mobius_cyclotomic(n, q);
  if (v.fits_u64()) {
    for (u64 s : odd_prime_factors(v.to_u64())) {
      if (iterated_order(q, s) == n) return {OracleKind::Found, s};
    }
    return {OracleKind::ProvenNone, 0};
  }
  for (u64 p : odd_prime_factors(n)) {
    while (v.mod_u64(p) == 0) v = v.div_u64_exact(p);
  }
  while (v.mod_u64(2) == 0) v = v.div_u64_exact(2);
  const u64 limit = u64{1} << 24;
  const u64 step = (n & 1u) ? 2 * n : n;
  for (u64 s = step + 1; s <= limit; s += step) {
    if (v.mod_u64(s) == 0) return {OracleKind::Found, s};
  }
  return {OracleKind::OutOfRange, 0};
}

ZsigmondyException expected_exception(u64 q, u64 n) {
  if (q == 2 && (n == 1 || n == 6)) return ZsigmondyException::QTwoN1orN6;
  if (n == 1 && pow2(q - 1)) return ZsigmondyException::FermatOrNineN1;
  if (n == 2 && pow2(q + 1)) return ZsigmondyException::MersenneN2;
  return ZsigmondyException::None;
}

std::string set_text(const std::vector<u64>& v) {
  std::string out = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

std::vector<u64> clip(std::vector<u64> v, u64 bound) {
  std::vector<u64> out;
  for (u64 x : v) {
    if (x <= bound) out.push_back(x);
  }
  return out;
}

SweepCheck against_list(const char* name, std::vector<u64> got,
                        std::vector<u64> want) {
  SweepCheck c;
  c.name = name;
  c.cases = got.size();
  c.pass = got == want;
  c.detail = c.pass ? "recovered " + set_text(got)
                    : "got " + set_text(got) + ", want " + set_text(want);
  return c;
}

}  // namespace

SweepCheck zsigmondy_oracle_sweep(u64 qmax, u64 nmax) {
  if (qmax > kOracleSweepMaxBase || nmax > kOracleSweepMaxExponent) {
    throw std::invalid_argument(
        "oracle sweep accepts q <= 16384 and n <= 24");
  }
  SweepCheck c;
  c.name = "zsigmondy_vs_oracle";
  c.pass = true;
  u64 exceptions = 0, found = 0, out_of_range = 0;
  for (u64 q = 2; q <= qmax && c.pass; ++q) {
    if (!brute_prime_power(q)) continue;
    for (u64 n = 1; n <= nmax && c.pass; ++n) {
      ++c.cases;
      auto fail = [&](const std::string& why) {
        c.pass = false;
        c.detail = "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                   ": " + why;
      };
      std::optional<ZsigmondyOutcome> got;
      try {
        got = zsigmondy_prime(q, n);
      } catch (const OverflowError&) {
        got = std::nullopt;
      }
      ZsigmondyException want_exc = expected_exception(q, n);
      auto [kind, witness] = oracle_least_witness(q, n);
      if (want_exc != ZsigmondyException::None) {
        ++exceptions;
        if (!got || got->exception != want_exc) {
          fail("exception pattern missed");
        } else if (kind != OracleKind::ProvenNone) {
          fail("oracle found a witness inside an exception case");
        }
        continue;
      }
      if (kind == OracleKind::ProvenNone) {
        fail("oracle proved no witness outside the exception patterns");
      } else if (kind == OracleKind::Found) {
        ++found;
        if (!got || !got->has_prime()) {
          fail("library missed the witness " + std::to_string(witness));
        } else if (got->prime != witness) {
          fail("library witness " + std::to_string(got->prime) +
               " differs from oracle witness " + std::to_string(witness));
        } else if (witness % 2 == 0 || iterated_order(q, witness) != n) {
          fail("witness is not an odd prime of the right order");
        }
      } else {
        ++out_of_range;
        if (got) fail("library certified a witness past the oracle bound");
      }
    }
  }
  if (c.pass) {
    c.detail = std::to_string(found) + " witnesses, " +
               std::to_string(exceptions) + " exception cases, " +
               std::to_string(out_of_range) + " past the 2^24 bound";
  }
  return c;
}

std::vector<SweepCheck> smooth_neighborhood_sweeps(u64 qmax) {
  if (qmax > kClassicalListBound) {
    throw std::invalid_argument(
        "smooth neighborhood lists are certified for q <= 10000");
  }
  std::vector<u64> qm1, qp1, q2m1, q2m1_23, q2m1_35;
  for (u64 q = 2; q <= qmax; ++q) {
    if (!brute_prime_power(q)) continue;
    if (smooth_within(q - 1, {2})) qm1.push_back(q);
    if (smooth_within(q + 1, {2})) qp1.push_back(q);
    if (smooth_within(q * q - 1, {2})) q2m1.push_back(q);
    if (smooth_within(q * q - 1, {2, 3})) q2m1_23.push_back(q);
    if (smooth_within(q * q - 1, {3, 5})) q2m1_35.push_back(q);
  }
  std::vector<SweepCheck> out;
  out.push_back(against_list("q_minus_one_two_smooth", qm1,
                             clip({2, 3, 5, 9, 17, 257}, qmax)));
  out.push_back(against_list("q_plus_one_two_smooth", qp1,
                             clip({3, 7, 31, 127, 8191}, qmax)));
  out.push_back(
      against_list("q_squared_minus_one_two_smooth", q2m1, clip({3}, qmax)));
  out.push_back(against_list("q_squared_minus_one_two_three_smooth", q2m1_23,
                             clip({2, 3, 5, 7, 17}, qmax)));
  out.push_back(against_list("q_squared_minus_one_three_five_smooth",
                             q2m1_35, clip({2, 4}, qmax)));
  return out;
}

std::vector<SweepCheck> cyclotomic_pattern_sweeps(u64 xmax, u64 nmax) {
  if (xmax > kClassicalListBound || nmax > kOracleSweepMaxExponent) {
    throw std::invalid_argument(
        "cyclotomic pattern lists are certified for x <= 10000, n <= 24");
  }
  auto wide_smooth = [](Wide<8> v, const std::vector<u64>& primes) {
    for (u64 p : primes) {
      while (v.mod_u64(p) == 0) v = v.div_u64_exact(p);
    }
    return v == Wide<8>::one();
  };
  using Pairs = std::vector<std::pair<u64, u64>>;
  Pairs two_power, three_power, three_five;
  for (u64 x = 2; x <= xmax; ++x) {
    if (!is_prime(x)) continue;
    for (u64 n = 1; n <= nmax; ++n) {
      Wide<8> w = mobius_cyclotomic(n, x);
      if (wide_smooth(w, {2})) two_power.push_back({n, x});
      if (wide_smooth(w, {3})) three_power.push_back({n, x});
      if (wide_smooth(w, {3, 5})) three_five.push_back({n, x});
    }
  }
  auto expect = [&](Pairs all) {
    Pairs kept;
    for (auto [n, x] : all) {
      if (n <= nmax && x <= xmax) kept.push_back({n, x});
    }
    return kept;
  };
  auto sorted = [](Pairs v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto pair_text = [](const Pairs& v) {
    std::string out = "{";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += "(" + std::to_string(v[i].first) + "," +
             std::to_string(v[i].second) + ")";
    }
    return out + "}";
  };
  auto check = [&](const char* name, const Pairs& got, const Pairs& want) {
    SweepCheck c;
    c.name = name;
    c.cases = got.size();
    c.pass = sorted(got) == sorted(want);
    c.detail = c.pass ? "recovered " + pair_text(sorted(got))
                      : "got " + pair_text(sorted(got)) + ", want " +
                            pair_text(sorted(want));
    return c;
  };
  // Fermat and Mersenne primes below 10^4 close out the 2-power column.
  Pairs want_two;
  for (u64 x : {2, 3, 5, 17, 257}) want_two.push_back({1, x});
  for (u64 x : {3, 7, 31, 127, 8191}) want_two.push_back({2, x});
  std::vector<SweepCheck> out;
  out.push_back(check("cyclotomic_two_power", two_power, expect(want_two)));
  out.push_back(check("cyclotomic_three_power", three_power,
                      expect({{1, 2}, {2, 2}, {6, 2}})));
  out.push_back(check("cyclotomic_three_five_smooth", three_five,
                      expect({{1, 2}, {2, 2}, {4, 2}, {6, 2}})));
  return out;
}

}  // namespace ocg
