#include "dopt/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace dopt {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
    sign_ = value < 0 ? -1 : 1;
    auto mag = static_cast<std::uint64_t>(value < 0 ? -(value + 1) : value);
    if (value < 0) mag += 1;  // two's-complement-safe |LLONG_MIN|
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 1;
}

int BigInt::compare_magnitude(const BigInt& x, const BigInt& y) {
    if (x.limbs_.size() != y.limbs_.size())
        return x.limbs_.size() < y.limbs_.size() ? -1 : 1;
    for (std::size_t i = x.limbs_.size(); i-- > 0;) {
        if (x.limbs_[i] != y.limbs_[i]) return x.limbs_[i] < y.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& x,
                                                 const std::vector<std::uint32_t>& y) {
    const auto& longer = x.size() >= y.size() ? x : y;
    const auto& shorter = x.size() >= y.size() ? y : x;
    std::vector<std::uint32_t> out;
    out.reserve(longer.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < longer.size(); ++i) {
        std::uint64_t acc = carry + longer[i] + (i < shorter.size() ? shorter[i] : 0u);
        out.push_back(static_cast<std::uint32_t>(acc & 0xffffffffu));
        carry = acc >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

// Requires |x| >= |y|.
std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& x,
                                                 const std::vector<std::uint32_t>& y) {
    std::vector<std::uint32_t> out;
    out.reserve(x.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::int64_t acc = static_cast<std::int64_t>(x[i]) - borrow -
                           (i < y.size() ? static_cast<std::int64_t>(y[i]) : 0);
        if (acc < 0) {
            acc += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(acc));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.limbs_.empty()) out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.sign_ = 1;
    return out;
}

BigInt BigInt::operator+(const BigInt& other) const {
    BigInt out;
    if (sign() == 0) return other;
    if (other.sign() == 0) return *this;
    if (sign_ == other.sign_) {
        out.sign_ = sign_;
        out.limbs_ = add_magnitude(limbs_, other.limbs_);
    } else {
        int cmp = compare_magnitude(*this, other);
        if (cmp == 0) return BigInt();
        if (cmp > 0) {
            out.sign_ = sign_;
            out.limbs_ = sub_magnitude(limbs_, other.limbs_);
        } else {
            out.sign_ = other.sign_;
            out.limbs_ = sub_magnitude(other.limbs_, limbs_);
        }
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-(const BigInt& other) const { return *this + (-other); }

BigInt BigInt::operator*(const BigInt& other) const {
    if (is_zero() || other.is_zero()) return BigInt();
    BigInt out;
    out.sign_ = sign_ * other.sign_;
    out.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
            std::uint64_t acc = static_cast<std::uint64_t>(limbs_[i]) * other.limbs_[j] +
                                out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(acc & 0xffffffffu);
            carry = acc >> 32;
        }
        std::size_t k = i + other.limbs_.size();
        while (carry) {
            std::uint64_t acc = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(acc & 0xffffffffu);
            carry = acc >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

// Knuth algorithm D on 32-bit limbs with a single-limb fast path.
void BigInt::divmod_magnitude(const std::vector<std::uint32_t>& num,
                              const std::vector<std::uint32_t>& den,
                              std::vector<std::uint32_t>& quot,
                              std::vector<std::uint32_t>& rem) {
    quot.clear();
    rem.clear();
    if (den.empty()) throw std::domain_error("division by zero");

    if (den.size() == 1) {
        const std::uint64_t d = den[0];
        quot.assign(num.size(), 0);
        std::uint64_t r = 0;
        for (std::size_t i = num.size(); i-- > 0;) {
            std::uint64_t cur = (r << 32) | num[i];
            quot[i] = static_cast<std::uint32_t>(cur / d);
            r = cur % d;
        }
        while (!quot.empty() && quot.back() == 0) quot.pop_back();
        if (r) rem.push_back(static_cast<std::uint32_t>(r));
        return;
    }

    if (num.size() < den.size()) {
        rem = num;
        return;
    }

    // Normalize so the top divisor limb has its high bit set.
    int shift = 0;
    for (std::uint32_t top = den.back(); !(top & 0x80000000u); top <<= 1) ++shift;

    const std::size_t n = den.size();
    const std::size_t m = num.size() - n;

    auto shl = [shift](const std::vector<std::uint32_t>& src, bool extra) {
        std::vector<std::uint32_t> dst(src.size() + (extra ? 1 : 0), 0);
        for (std::size_t i = 0; i < src.size(); ++i) {
            dst[i] |= src[i] << shift;
            if (shift && i + 1 < dst.size()) dst[i + 1] = src[i] >> (32 - shift);
        }
        return dst;
    };
    std::vector<std::uint32_t> u = shl(num, true);
    std::vector<std::uint32_t> d = shl(den, false);

    quot.assign(m + 1, 0);
    const std::uint64_t dtop = d[n - 1];
    const std::uint64_t dnext = d[n - 2];

    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t numerator = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = numerator / dtop;
        std::uint64_t rhat = numerator % dtop;
        if (qhat > 0xffffffffu) {
            qhat = 0xffffffffu;
            rhat = numerator - qhat * dtop;
        }
        while (rhat <= 0xffffffffu && qhat * dnext > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += dtop;
        }

        // u[j .. j+n] -= qhat * d
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * d[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(u[j + i]) -
                             static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
            if (t < 0) {
                t += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[j + i] = static_cast<std::uint32_t>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(u[j + n]) - static_cast<std::int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large; add the divisor back.
            t += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t acc = static_cast<std::uint64_t>(u[j + i]) + d[i] + c;
                u[j + i] = static_cast<std::uint32_t>(acc & 0xffffffffu);
                c = acc >> 32;
            }
            t += static_cast<std::int64_t>(c);
            t &= 0xffffffff;
        }
        u[j + n] = static_cast<std::uint32_t>(t);
        quot[j] = static_cast<std::uint32_t>(qhat);
    }

    while (!quot.empty() && quot.back() == 0) quot.pop_back();

    // Denormalize the remainder.
    rem.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
    if (shift) {
        for (std::size_t i = 0; i < n; ++i) {
            rem[i] >>= shift;
            if (i + 1 < n) rem[i] |= u[i + 1] << (32 - shift);
        }
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
}

BigInt BigInt::div_exact(const BigInt& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero");
    if (is_zero()) return BigInt();
    BigInt out;
    std::vector<std::uint32_t> rem;
    divmod_magnitude(limbs_, divisor.limbs_, out.limbs_, rem);
    if (!rem.empty()) throw std::domain_error("inexact division");
    out.sign_ = sign_ * divisor.sign_;
    out.trim();
    return out;
}

bool BigInt::operator==(const BigInt& other) const {
    return sign() == other.sign() && limbs_ == other.limbs_;
}

bool BigInt::operator<(const BigInt& other) const {
    if (sign() != other.sign()) return sign() < other.sign();
    int cmp = compare_magnitude(*this, other);
    return sign() >= 0 ? cmp < 0 : cmp > 0;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> cur = limbs_;
    std::vector<std::uint32_t> chunk_div{1000000000u};
    std::string digits;
    while (!cur.empty()) {
        std::vector<std::uint32_t> q, r;
        divmod_magnitude(cur, chunk_div, q, r);
        std::uint32_t chunk = r.empty() ? 0u : r[0];
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        cur = std::move(q);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

long long BigInt::to_longlong() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigInt does not fit in long long");
    std::uint64_t mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    if (sign_ >= 0) {
        if (mag > 0x7fffffffffffffffull) throw std::overflow_error("BigInt does not fit in long long");
        return static_cast<long long>(mag);
    }
    if (mag > 0x8000000000000000ull) throw std::overflow_error("BigInt does not fit in long long");
    return -static_cast<long long>(mag - 1) - 1;
}

BigInt pow(const BigInt& base, unsigned exponent) {
    BigInt result(1);
    BigInt acc = base;
    while (exponent) {
        if (exponent & 1u) result = result * acc;
        acc = acc * acc;
        exponent >>= 1;
    }
    return result;
}

}  // namespace dopt
