#pragma once

// Minimal signed arbitrary-precision integer: just the operations the exact
// determinant and bound computations need (add, sub, mul, exact division,
// powers, decimal printing). Base 2^32 limbs, little endian, no leading zeros.

#include <cstdint>
#include <string>
#include <vector>

namespace dopt {

class BigInt {
  public:
    BigInt() = default;
    BigInt(long long value);  // NOLINT(google-explicit-constructor) integer literals are the common case

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return limbs_.empty() ? 0 : sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& other) const;
    BigInt operator-(const BigInt& other) const;
    BigInt operator*(const BigInt& other) const;

    // Quotient of an exact division; throws std::domain_error when the
    // division leaves a remainder or the divisor is zero.
    BigInt div_exact(const BigInt& divisor) const;

    bool operator==(const BigInt& other) const;
    bool operator!=(const BigInt& other) const { return !(*this == other); }
    bool operator<(const BigInt& other) const;
    bool operator>(const BigInt& other) const { return other < *this; }
    bool operator<=(const BigInt& other) const { return !(other < *this); }
    bool operator>=(const BigInt& other) const { return !(*this < other); }

    std::string to_string() const;

    // Round-trip helper for values known to fit; throws std::overflow_error otherwise.
    long long to_longlong() const;

  private:
    int sign_ = 1;                      // meaningful only when limbs_ nonempty
    std::vector<std::uint32_t> limbs_;  // little endian, normalized

    static int compare_magnitude(const BigInt& x, const BigInt& y);
    static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& x,
                                                    const std::vector<std::uint32_t>& y);
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& x,
                                                    const std::vector<std::uint32_t>& y);
    void trim();
    // Magnitude division, quotient into *this semantics handled by caller.
    static void divmod_magnitude(const std::vector<std::uint32_t>& num,
                                 const std::vector<std::uint32_t>& den,
                                 std::vector<std::uint32_t>& quot,
                                 std::vector<std::uint32_t>& rem);
};

BigInt pow(const BigInt& base, unsigned exponent);

}  // namespace dopt
