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

#ifndef OCG_NUMTHEORY_HPP
#define OCG_NUMTHEORY_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "ocg/wideint.hpp"

namespace ocg {

using u64 = uint64_t;
using u128 = unsigned __int128;

// Ascending list of distinct primes.
using PrimeSet = std::vector<u64>;

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

// Deterministic for all inputs below 2^64.
bool is_prime(u64 n);

// Prime -> exponent map, keys ascending.
std::map<u64, int> prime_factorization(u64 n);

PrimeSet prime_factors(u64 n);
PrimeSet odd_prime_factors(u64 n);

// Largest power of p dividing n.
u64 p_part(u64 n, u64 p);

bool is_prime_power(u64 n, u64* base = nullptr, int* exp = nullptr);

// Least i >= 1 with q^i == 1 mod r. Requires r > 1 and gcd(q, r) == 1.
// Computed by direct iteration of powers, not from a factorization.
u64 multiplicative_order(u64 q, u64 r);

// Value of the n-th cyclotomic polynomial at x >= 2, via the divisor
// recurrence x^n - 1 = prod_{d | n} phi_d(x) with exact division.
// Throws OverflowError when the value does not fit in 64 bits.
u64 cyclotomic_eval(u64 n, u64 x);

// Same value as a 512-bit integer; covers n <= 64, x <= 64 and beyond.
Wide<8> cyclotomic_eval_wide(u64 n, u64 x);

// True iff prime_factors(n) is a subset of allowed.
bool smooth_within(u64 n, const PrimeSet& allowed);

enum class ZsigmondyException {
    None,            // a witness prime exists
    MersenneN2,      // n == 2 and q + 1 a 2-power, so q is a Mersenne prime
    FermatOrNineN1,  // n == 1 and q - 1 a 2-power, so q is 9 or a Fermat prime
    QTwoN1orN6,      // q == 2 and n in {1, 6}
};

struct ZsigmondyOutcome {
    ZsigmondyException exception = ZsigmondyException::None;
    u64 prime = 0;  // least odd witness when exception == None

    bool has_prime() const { return exception == ZsigmondyException::None; }
};

// Least odd prime s dividing q^n - 1 with multiplicative_order(q, s) == n,
// or the matching exception case. Requires q >= 2 a prime power, n >= 1.
// Throws OverflowError when a witness exists but the least one cannot be
// certified within 64-bit arithmetic (it then exceeds 2^24).
ZsigmondyOutcome zsigmondy_prime(u64 q, u64 n);

}  // namespace ocg

#endif  // OCG_NUMTHEORY_HPP
