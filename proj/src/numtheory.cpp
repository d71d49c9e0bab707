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

#include "ocg/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace ocg {

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1u) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

namespace {

bool miller_rabin(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while (!(d & 1u)) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Brent's cycle variant of Pollard rho. n must be odd, composite, > 1.
// Returns a nontrivial factor.
u64 pollard_brent(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 y = 2, d = 1, q = 1, x = 2, ys = 2;
        const u64 block = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            while (k < r && d == 1) {
                ys = y;
                u64 lim = std::min(block, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                k += lim;
            }
            r <<= 1;
        }
        if (d == n) {
            d = 1;
            do {
                ys = f(ys);
                u64 diff = x > ys ? x - ys : ys - x;
                d = std::gcd(diff, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::map<u64, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    u64 d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

bool is_power_of_two(u64 n) { return n && !(n & (n - 1)); }

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // These twelve bases decide primality for every n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

std::map<u64, int> prime_factorization(u64 n) {
    if (n == 0) throw std::domain_error("prime_factorization(0)");
    std::map<u64, int> out;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    factor_rec(n, out);
    return out;
}

PrimeSet prime_factors(u64 n) {
    PrimeSet out;
    for (const auto& [p, e] : prime_factorization(n)) out.push_back(p);
    return out;
}

PrimeSet odd_prime_factors(u64 n) {
    PrimeSet out;
    for (const auto& [p, e] : prime_factorization(n)) {
        if (p != 2) out.push_back(p);
    }
    return out;
}

u64 p_part(u64 n, u64 p) {
    u64 r = 1;
    while (n % p == 0) {
        r *= p;
        n /= p;
    }
    return r;
}

bool is_prime_power(u64 n, u64* base, int* exp) {
    if (n < 2) return false;
    auto f = prime_factorization(n);
    if (f.size() != 1) return false;
    if (base) *base = f.begin()->first;
    if (exp) *exp = f.begin()->second;
    return true;
}

u64 multiplicative_order(u64 q, u64 r) {
    if (r < 2) throw std::domain_error("multiplicative_order: modulus must exceed 1");
    u64 b = q % r;
    if (std::gcd(b, r) != 1) throw std::domain_error("multiplicative_order: arguments not coprime");
    u64 acc = b;
    u64 i = 1;
    while (acc != 1) {
        acc = mulmod(acc, b, r);
        ++i;
    }
    return i;
}

Wide<8> cyclotomic_eval_wide(u64 n, u64 x) {
    if (n == 0) throw std::domain_error("cyclotomic_eval: n must be positive");
    if (x < 2) throw std::domain_error("cyclotomic_eval: x must be at least 2");
    try {
        std::vector<u64> divs;
        for (u64 d = 1; d <= n; ++d) {
            if (n % d == 0) divs.push_back(d);
        }
        std::vector<Wide<8>> phi(divs.size());
        for (size_t i = 0; i < divs.size(); ++i) {
            Wide<8> num = Wide<8>::pow_u64(x, static_cast<uint32_t>(divs[i]));
            num.sub(Wide<8>::one());
            for (size_t j = 0; j < i; ++j) {
                if (divs[i] % divs[j] == 0) {
                    Wide<8> rem;
                    num = num.divmod(phi[j], rem);
                    if (!rem.is_zero()) throw std::logic_error("cyclotomic recurrence: inexact division");
                }
            }
            phi[i] = num;
        }
        return phi.back();
    } catch (const std::overflow_error&) {
        throw OverflowError("cyclotomic_eval: intermediate exceeds 512 bits");
    }
}

u64 cyclotomic_eval(u64 n, u64 x) {
    Wide<8> v = cyclotomic_eval_wide(n, x);
    if (!v.fits_u64()) throw OverflowError("cyclotomic_eval: value exceeds 64 bits");
    return v.to_u64();
}

bool smooth_within(u64 n, const PrimeSet& allowed) {
    if (n == 0) return false;
    for (u64 p : allowed) {
        while (n % p == 0) n /= p;
    }
    return n == 1;
}

ZsigmondyOutcome zsigmondy_prime(u64 q, u64 n) {
    if (n < 1 || !is_prime_power(q)) {
        throw std::domain_error("zsigmondy_prime: requires prime power q and n >= 1");
    }
    if (q == 2 && (n == 1 || n == 6)) return {ZsigmondyException::QTwoN1orN6, 0};
    if (n == 1 && is_power_of_two(q - 1)) return {ZsigmondyException::FermatOrNineN1, 0};
    if (n == 2 && is_power_of_two(q + 1)) return {ZsigmondyException::MersenneN2, 0};

    // Every witness divides phi_n(q), and every odd prime factor of phi_n(q)
    // either divides n or has order exactly n. When the cyclotomic value fits
    // in 64 bits, factor it and take the least factor passing the order test.
    Wide<8> value = cyclotomic_eval_wide(n, q);
    if (value.fits_u64()) {
        for (u64 s : odd_prime_factors(value.to_u64())) {
            if (multiplicative_order(q, s) == n) return {ZsigmondyException::None, s};
        }
        throw std::logic_error("zsigmondy_prime: no witness outside the known exceptions");
    }

    // Wide value: strip the factors that cannot be witnesses. Every prime
    // factor of the stripped residue is == 1 mod n, so the least divisor of
    // the residue in that progression is prime and is the least witness.
    for (u64 p : odd_prime_factors(n)) {
        while (value.mod_u64(p) == 0) value = value.div_u64_exact(p);
    }
    while (value.mod_u64(2) == 0) value = value.div_u64_exact(2);
    const u64 scan_limit = u64{1} << 24;
    const u64 step = (n & 1u) ? 2 * n : n;  // keep candidates odd
    for (u64 s = step + 1; s <= scan_limit; s += step) {
        if (value.mod_u64(s) == 0) {
            if (multiplicative_order(q, s) != n) {
                throw std::logic_error("zsigmondy_prime: stripped residue kept a non-witness factor");
            }
            return {ZsigmondyException::None, s};
        }
    }
    throw OverflowError("zsigmondy_prime: least witness is not certifiable in 64-bit range");
}

}  // namespace ocg
