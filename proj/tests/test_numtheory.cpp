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

#include <doctest.h>

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ocg/numtheory.hpp"
#include "ocg/wideint.hpp"

using namespace ocg;

namespace {

bool pow2(u64 v) { return v && !(v & (v - 1)); }

std::vector<u64> sieve_primes(u64 limit) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return out;
}

// Trial-division prime power test, independent of the library.
bool brute_prime_power(u64 q, u64* base = nullptr) {
    if (q < 2) return false;
    u64 p = 0;
    for (u64 d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;
    u64 v = q;
    while (v % p == 0) v /= p;
    if (v != 1) return false;
    if (base) *base = p;
    return true;
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

// Cyclotomic value by Mobius inversion over x^d - 1, a different route from
// the library's ascending divisor recurrence.
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
    Wide<8> q = num.divmod(den, rem);
    REQUIRE(rem.is_zero());
    return q;
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

struct OracleResult {
    OracleKind kind;
    u64 prime = 0;
};

// Brute-force reference for the least odd Zsigmondy witness: factor the
// relevant part of q^n - 1 and test orders by iteration. When the cyclotomic
// value exceeds 64 bits, certify by scanning the progression 1 mod n up to
// the same bound the library uses.
OracleResult oracle_least_witness(u64 q, u64 n) {
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
        if (v.mod_u64(s) == 0) {
            REQUIRE(iterated_order(q, s) == n);
            return {OracleKind::Found, s};
        }
    }
    return {OracleKind::OutOfRange, 0};
}

ZsigmondyException expected_exception(u64 q, u64 n) {
    if (q == 2 && (n == 1 || n == 6)) return ZsigmondyException::QTwoN1orN6;
    if (n == 1 && pow2(q - 1)) return ZsigmondyException::FermatOrNineN1;
    if (n == 2 && pow2(q + 1)) return ZsigmondyException::MersenneN2;
    return ZsigmondyException::None;
}

}  // namespace

TEST_CASE("wide integer arithmetic agrees with native reference") {
    std::mt19937_64 rng(0x5eed);
    for (int iter = 0; iter < 2000; ++iter) {
        u64 a = rng(), b = rng();
        Wide<4> wa(a), wb(b);
        u128 prod = static_cast<u128>(a) * b;
        Wide<4> wp = wa.mul(wb);
        CHECK(wp.limb[0] == static_cast<u64>(prod));
        CHECK(wp.limb[1] == static_cast<u64>(prod >> 64));
        CHECK(wp.limb[2] == 0);

        Wide<4> sum = wa;
        sum.add(wb);
        u128 s = static_cast<u128>(a) + b;
        CHECK(sum.limb[0] == static_cast<u64>(s));
        CHECK(sum.limb[1] == static_cast<u64>(s >> 64));
    }
    for (int iter = 0; iter < 500; ++iter) {
        Wide<4> a;
        for (auto& l : a.limb) l = rng();
        a.limb[3] >>= 1;
        Wide<4> d(rng() | 1u);
        if (rng() % 2) d.limb[1] = rng() >> 40;
        Wide<4> r;
        Wide<4> q = a.divmod(d, r);
        CHECK(r < d);
        Wide<4> back = q.mul(d);
        back.add(r);
        CHECK(back == a);
        u64 dd = (d.limb[1] == 0) ? d.limb[0] : 0;
        if (dd) CHECK(a.mod_u64(dd) == r.limb[0]);
    }
    CHECK(Wide<4>::pow_u64(10, 12).to_u64() == 1000000000000ull);
    CHECK(Wide<4>::pow_u64(2, 200).to_string() ==
          "1606938044258990275541962092341162602522202993782792835301376");
    for (int iter = 0; iter < 200; ++iter) {
        u64 a = rng(), b = rng(), m = rng() | 1u;
        CHECK(wide_mulmod(Wide<4>(a), Wide<4>(b), Wide<4>(m)).to_u64() == mulmod(a, b, m));
        CHECK(wide_powmod(Wide<4>(a), Wide<4>(b % 1000), Wide<4>(m)).to_u64() ==
              powmod(a, b % 1000, m));
    }
}

TEST_CASE("primality matches a sieve and known landmarks") {
    auto primes = sieve_primes(100000);
    std::set<u64> pset(primes.begin(), primes.end());
    for (u64 n = 0; n <= 100000; ++n) {
        CHECK(is_prime(n) == (pset.count(n) > 0));
    }
    CHECK(is_prime((u64{1} << 61) - 1));
    CHECK(!is_prime(561));
    CHECK(!is_prime(3215031751ull));
    CHECK(is_prime(2147483647ull));
}

TEST_CASE("prime factorization reconstructs its input") {
    auto f = prime_factorization(5616);
    CHECK(f == std::map<u64, int>{{2, 4}, {3, 3}, {13, 1}});
    CHECK(prime_factors(5616) == PrimeSet{2, 3, 13});
    CHECK(prime_factors(29120) == PrimeSet{2, 5, 7, 13});
    CHECK(prime_factors(1).empty());
    CHECK(odd_prime_factors(29120) == PrimeSet{5, 7, 13});

    std::mt19937_64 rng(0xfade);
    for (int iter = 0; iter < 300; ++iter) {
        u64 n = (rng() % (u64{1} << 50)) + 2;
        u64 back = 1;
        u64 last = 0;
        for (const auto& [p, e] : prime_factorization(n)) {
            CHECK(is_prime(p));
            CHECK(p > last);
            last = p;
            for (int i = 0; i < e; ++i) back *= p;
        }
        CHECK(back == n);
    }
    CHECK(p_part(5616, 2) == 16);
    CHECK(p_part(5616, 3) == 27);
    CHECK(p_part(5616, 5) == 1);
    u64 b = 0;
    int e = 0;
    CHECK(is_prime_power(243, &b, &e));
    CHECK(b == 3);
    CHECK(e == 5);
    CHECK(!is_prime_power(12));
    CHECK(!is_prime_power(1));
}

TEST_CASE("multiplicative order by direct iteration") {
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(3, 13) == 3);
    CHECK(multiplicative_order(4, 17) == 4);
    CHECK(multiplicative_order(2, 3) == 2);

    for (u64 r : sieve_primes(500)) {
        for (u64 q : {2ull, 3ull, 4ull, 5ull, 7ull, 9ull, 64ull, 128ull}) {
            if (q % r == 0) {
                CHECK_THROWS_AS(multiplicative_order(q, r), std::domain_error);
                continue;
            }
            u64 d = multiplicative_order(q, r);
            CHECK((r - 1) % d == 0);
            CHECK(powmod(q, d, r) == 1);
            for (u64 m = 1; m < d; ++m) {
                if (d % m == 0) CHECK(powmod(q, m, r) != 1);
            }
        }
    }
}

TEST_CASE("cyclotomic values satisfy the product identity") {
    CHECK(cyclotomic_eval(1, 2) == 1);
    CHECK(cyclotomic_eval(6, 2) == 3);
    CHECK(cyclotomic_eval(4, 2) == 5);
    CHECK(cyclotomic_eval(2, 3) == 4);
    CHECK(cyclotomic_eval(12, 2) == 13);

    for (u64 n = 1; n <= 64; ++n) {
        for (u64 x = 2; x <= 64; ++x) {
            Wide<8> prod = Wide<8>::one();
            for (u64 d = 1; d <= n; ++d) {
                if (n % d == 0) prod = prod.mul(cyclotomic_eval_wide(d, x));
            }
            Wide<8> target = Wide<8>::pow_u64(x, static_cast<uint32_t>(n));
            target.sub(Wide<8>::one());
            CHECK(prod == target);

            Wide<8> w = cyclotomic_eval_wide(n, x);
            CHECK(w == mobius_cyclotomic(n, x));
            if (w.fits_u64()) {
                CHECK(cyclotomic_eval(n, x) == w.to_u64());
            } else {
                CHECK_THROWS_AS(cyclotomic_eval(n, x), OverflowError);
            }
        }
    }
}

TEST_CASE("smoothness against an explicit prime set") {
    CHECK(smooth_within(8, {2}));
    CHECK(smooth_within(3 * 3 - 1, {2}));
    CHECK(!smooth_within(24, {2}));
    CHECK(smooth_within(1, {}));
    CHECK(smooth_within(45, {3, 5}));
    CHECK(!smooth_within(44, {3, 5}));
}

TEST_CASE("cyclotomic two-power and three-power value patterns") {
    auto wide_smooth = [](Wide<8> v, const std::vector<u64>& primes) {
        for (u64 p : primes) {
            while (v.mod_u64(p) == 0) v = v.div_u64_exact(p);
        }
        return v == Wide<8>::one();
    };
    std::set<std::pair<u64, u64>> two_power, three_power, three_five;
    for (u64 p : sieve_primes(1000)) {
        for (u64 n = 1; n <= 24; ++n) {
            Wide<8> w = cyclotomic_eval_wide(n, p);
            if (wide_smooth(w, {2})) two_power.insert({n, p});
            if (wide_smooth(w, {3})) three_power.insert({n, p});
            if (wide_smooth(w, {3, 5})) three_five.insert({n, p});
        }
    }
    std::set<std::pair<u64, u64>> want_two;
    for (u64 p : {2ull, 3ull, 5ull, 17ull, 257ull}) want_two.insert({1, p});
    for (u64 p : {3ull, 7ull, 31ull, 127ull}) want_two.insert({2, p});
    CHECK(two_power == want_two);
    CHECK(three_power == std::set<std::pair<u64, u64>>{{1, 2}, {2, 2}, {6, 2}});
    CHECK(three_five == std::set<std::pair<u64, u64>>{{1, 2}, {2, 2}, {4, 2}, {6, 2}});
}

TEST_CASE("prime powers with two-power smooth neighborhoods") {
    std::vector<u64> qm1, qp1, q2m1, q2m1_23, q2m1_35;
    for (u64 q = 2; q <= 10000; ++q) {
        if (!is_prime_power(q)) continue;
        if (smooth_within(q - 1, {2})) qm1.push_back(q);
        if (smooth_within(q + 1, {2})) qp1.push_back(q);
        if (smooth_within(q * q - 1, {2})) q2m1.push_back(q);
        if (smooth_within(q * q - 1, {2, 3})) q2m1_23.push_back(q);
        if (smooth_within(q * q - 1, {3, 5})) q2m1_35.push_back(q);
    }
    CHECK(qm1 == std::vector<u64>{2, 3, 5, 9, 17, 257});
    CHECK(qp1 == std::vector<u64>{3, 7, 31, 127, 8191});
    CHECK(q2m1 == std::vector<u64>{3});
    CHECK(q2m1_23 == std::vector<u64>{2, 3, 5, 7, 17});
    CHECK(q2m1_35 == std::vector<u64>{2, 4});
}

TEST_CASE("zsigmondy witness frozen examples") {
    CHECK(zsigmondy_prime(2, 6).exception == ZsigmondyException::QTwoN1orN6);
    CHECK(zsigmondy_prime(2, 1).exception == ZsigmondyException::QTwoN1orN6);
    CHECK(zsigmondy_prime(3, 2).exception == ZsigmondyException::MersenneN2);
    CHECK(zsigmondy_prime(9, 1).exception == ZsigmondyException::FermatOrNineN1);
    CHECK(zsigmondy_prime(17, 1).exception == ZsigmondyException::FermatOrNineN1);

    auto z = zsigmondy_prime(2, 4);
    REQUIRE(z.has_prime());
    CHECK(z.prime == 5);
    CHECK(zsigmondy_prime(4, 3).prime == 7);
    CHECK(zsigmondy_prime(2, 12).prime == 13);
    CHECK(zsigmondy_prime(13, 6).prime == 157);
    CHECK_THROWS_AS(zsigmondy_prime(6, 2), std::domain_error);
    CHECK_THROWS_AS(zsigmondy_prime(2, 0), std::domain_error);
}

TEST_CASE("zsigmondy agrees with a factoring oracle across the sweep") {
    int exceptions_seen = 0;
    int out_of_range_seen = 0;
    for (u64 q = 2; q <= 128; ++q) {
        if (!brute_prime_power(q)) continue;
        for (u64 n = 1; n <= 24; ++n) {
            ZsigmondyException want_exc = expected_exception(q, n);
            std::optional<ZsigmondyOutcome> got;
            try {
                got = zsigmondy_prime(q, n);
            } catch (const OverflowError&) {
                got = std::nullopt;
            }
            OracleResult oracle = oracle_least_witness(q, n);
            INFO("q=", q, " n=", n);
            if (want_exc != ZsigmondyException::None) {
                ++exceptions_seen;
                REQUIRE(got.has_value());
                CHECK(got->exception == want_exc);
                CHECK(oracle.kind == OracleKind::ProvenNone);
                continue;
            }
            CHECK(oracle.kind != OracleKind::ProvenNone);
            if (oracle.kind == OracleKind::Found) {
                REQUIRE(got.has_value());
                REQUIRE(got->has_prime());
                CHECK(got->prime == oracle.prime);
                CHECK(got->prime % 2 == 1);
                CHECK(iterated_order(q, got->prime) == n);
            } else {
                ++out_of_range_seen;
                CHECK(!got.has_value());
            }
        }
    }
    // 2 pairs for q=2, four Fermat-or-nine values, four Mersenne values.
    CHECK(exceptions_seen == 10);
    CHECK(out_of_range_seen > 0);
}
