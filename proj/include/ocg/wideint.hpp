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

#ifndef OCG_WIDEINT_HPP
#define OCG_WIDEINT_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ocg {

// Fixed-width unsigned integer with L 64-bit limbs, little-endian limb order.
// Only the operations needed for exact cyclotomic values and factoring of
// q^n - 1 are provided. Overflow on add/mul throws instead of wrapping.
template <int L>
struct Wide {
    std::array<uint64_t, L> limb{};

    Wide() = default;
    explicit Wide(uint64_t v) { limb[0] = v; }

    static Wide zero() { return Wide(); }
    static Wide one() { return Wide(1); }

    bool is_zero() const {
        for (int i = 0; i < L; ++i)
            if (limb[i]) return false;
        return true;
    }

    bool fits_u64() const {
        for (int i = 1; i < L; ++i)
            if (limb[i]) return false;
        return true;
    }

    uint64_t to_u64() const {
        if (!fits_u64()) throw std::overflow_error("wide value exceeds 64 bits");
        return limb[0];
    }

    int cmp(const Wide& o) const {
        for (int i = L - 1; i >= 0; --i) {
            if (limb[i] != o.limb[i]) return limb[i] < o.limb[i] ? -1 : 1;
        }
        return 0;
    }
    bool operator==(const Wide& o) const { return cmp(o) == 0; }
    bool operator!=(const Wide& o) const { return cmp(o) != 0; }
    bool operator<(const Wide& o) const { return cmp(o) < 0; }
    bool operator<=(const Wide& o) const { return cmp(o) <= 0; }

    int bit_length() const {
        for (int i = L - 1; i >= 0; --i) {
            if (limb[i]) return 64 * i + 64 - __builtin_clzll(limb[i]);
        }
        return 0;
    }

    bool bit(int k) const { return (limb[k / 64] >> (k % 64)) & 1u; }

    Wide& add(const Wide& o) {
        unsigned __int128 carry = 0;
        for (int i = 0; i < L; ++i) {
            carry += limb[i];
            carry += o.limb[i];
            limb[i] = static_cast<uint64_t>(carry);
            carry >>= 64;
        }
        if (carry) throw std::overflow_error("wide add overflow");
        return *this;
    }

    // Requires *this >= o.
    Wide& sub(const Wide& o) {
        unsigned __int128 borrow = 0;
        for (int i = 0; i < L; ++i) {
            unsigned __int128 lhs = limb[i];
            unsigned __int128 rhs = static_cast<unsigned __int128>(o.limb[i]) + borrow;
            if (lhs >= rhs) {
                limb[i] = static_cast<uint64_t>(lhs - rhs);
                borrow = 0;
            } else {
                limb[i] = static_cast<uint64_t>((lhs + (static_cast<unsigned __int128>(1) << 64)) - rhs);
                borrow = 1;
            }
        }
        if (borrow) throw std::underflow_error("wide sub underflow");
        return *this;
    }

    Wide mul(const Wide& o) const {
        std::array<uint64_t, 2 * L> acc{};
        for (int i = 0; i < L; ++i) {
            if (!limb[i]) continue;
            unsigned __int128 carry = 0;
            for (int j = 0; j < L; ++j) {
                unsigned __int128 cur = acc[i + j];
                cur += static_cast<unsigned __int128>(limb[i]) * o.limb[j];
                cur += carry;
                acc[i + j] = static_cast<uint64_t>(cur);
                carry = cur >> 64;
            }
            int k = i + L;
            while (carry) {
                unsigned __int128 cur = acc[k];
                cur += carry;
                acc[k] = static_cast<uint64_t>(cur);
                carry = cur >> 64;
                ++k;
            }
        }
        for (int i = L; i < 2 * L; ++i) {
            if (acc[i]) throw std::overflow_error("wide mul overflow");
        }
        Wide r;
        for (int i = 0; i < L; ++i) r.limb[i] = acc[i];
        return r;
    }

    Wide mul_u64(uint64_t m) const { return mul(Wide(m)); }

    Wide& shl1() {
        uint64_t carry = 0;
        for (int i = 0; i < L; ++i) {
            uint64_t next = limb[i] >> 63;
            limb[i] = (limb[i] << 1) | carry;
            carry = next;
        }
        if (carry) throw std::overflow_error("wide shl overflow");
        return *this;
    }

    // Long division; returns quotient, stores remainder into rem.
    Wide divmod(const Wide& d, Wide& rem) const {
        if (d.is_zero()) throw std::domain_error("wide division by zero");
        Wide q, r;
        for (int k = bit_length() - 1; k >= 0; --k) {
            r.shl1();
            if (bit(k)) r.limb[0] |= 1u;
            if (d <= r) {
                r.sub(d);
                q.limb[k / 64] |= (uint64_t{1} << (k % 64));
            }
        }
        rem = r;
        return q;
    }

    Wide mod(const Wide& d) const {
        Wide r;
        divmod(d, r);
        return r;
    }

    uint64_t mod_u64(uint64_t d) const {
        if (!d) throw std::domain_error("wide division by zero");
        unsigned __int128 r = 0;
        for (int i = L - 1; i >= 0; --i) {
            r = (r << 64) | limb[i];
            r %= d;
        }
        return static_cast<uint64_t>(r);
    }

    // Exact division by a u64; throws if a remainder is left.
    Wide div_u64_exact(uint64_t d) const {
        Wide q;
        unsigned __int128 r = 0;
        for (int i = L - 1; i >= 0; --i) {
            r = (r << 64) | limb[i];
            q.limb[i] = static_cast<uint64_t>(r / d);
            r %= d;
        }
        if (r) throw std::domain_error("inexact wide division");
        return q;
    }

    static Wide pow_u64(uint64_t base, uint32_t exp) {
        Wide r = one();
        Wide b(base);
        while (exp) {
            if (exp & 1u) r = r.mul(b);
            b = exp > 1 ? b.mul(b) : b;
            exp >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        Wide v = *this;
        std::string s;
        while (!v.is_zero()) {
            Wide r;
            v = v.divmod(Wide(10), r);
            s.push_back(static_cast<char>('0' + r.limb[0]));
        }
        return std::string(s.rbegin(), s.rend());
    }
};

// Modular helpers over Wide moduli, used when factoring cyclotomic values
// whose size exceeds 64 bits.
template <int L>
Wide<L> wide_mulmod(const Wide<L>& a, const Wide<L>& b, const Wide<L>& m) {
    std::array<uint64_t, 2 * L> acc{};
    for (int i = 0; i < L; ++i) {
        if (!a.limb[i]) continue;
        unsigned __int128 carry = 0;
        for (int j = 0; j < L; ++j) {
            unsigned __int128 cur = acc[i + j];
            cur += static_cast<unsigned __int128>(a.limb[i]) * b.limb[j];
            cur += carry;
            acc[i + j] = static_cast<uint64_t>(cur);
            carry = cur >> 64;
        }
        int k = i + L;
        while (carry) {
            unsigned __int128 cur = acc[k];
            cur += carry;
            acc[k] = static_cast<uint64_t>(cur);
            carry = cur >> 64;
            ++k;
        }
    }
    // Shift-subtract reduction of the double-width product.
    // Requires m.bit_length() <= 64*L - 1 so the running remainder never
    // overflows when shifted.
    int prod_bits = 0;
    for (int i = 2 * L - 1; i >= 0; --i) {
        if (acc[i]) {
            prod_bits = 64 * i + 64 - __builtin_clzll(acc[i]);
            break;
        }
    }
    Wide<L> r;
    for (int k = prod_bits - 1; k >= 0; --k) {
        r.shl1();
        if ((acc[k / 64] >> (k % 64)) & 1u) r.limb[0] |= 1u;
        if (m <= r) r.sub(m);
    }
    return r;
}

template <int L>
Wide<L> wide_powmod(Wide<L> base, Wide<L> exp, const Wide<L>& m) {
    Wide<L> r = Wide<L>::one();
    r = r.mod(m);
    base = base.mod(m);
    for (int k = 0; k < exp.bit_length(); ++k) {
        if (exp.bit(k)) r = wide_mulmod(r, base, m);
        base = wide_mulmod(base, base, m);
    }
    return r;
}

}  // namespace ocg

#endif  // OCG_WIDEINT_HPP
