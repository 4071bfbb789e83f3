#ifndef RLAB_BIGINT_HPP
#define RLAB_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rlab {

// Arbitrary-precision non-negative integer, base 2^32 little-endian limbs.
// Covers what exact walk counting and degree-matrix propagation need:
// add, mul, divmod, gcd, pow, compare, decimal output.
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t value);  // NOLINT(google-explicit-constructor)

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;  // throws if it does not fit
    std::string to_string() const;

    static int compare(const BigNat& a, const BigNat& b);
    friend bool operator==(const BigNat& a, const BigNat& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigNat& a, const BigNat& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigNat& a, const BigNat& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigNat& a, const BigNat& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigNat& a, const BigNat& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigNat& a, const BigNat& b) { return compare(a, b) >= 0; }

    BigNat& operator+=(const BigNat& rhs);
    friend BigNat operator+(BigNat a, const BigNat& b) { a += b; return a; }
    // requires *this >= rhs
    BigNat& operator-=(const BigNat& rhs);
    friend BigNat operator-(BigNat a, const BigNat& b) { a -= b; return a; }
    friend BigNat operator*(const BigNat& a, const BigNat& b);
    BigNat& operator*=(const BigNat& rhs) { *this = *this * rhs; return *this; }

    // Quotient and remainder; divisor must be non-zero.
    static void divmod(const BigNat& num, const BigNat& den, BigNat& quot, BigNat& rem);
    friend BigNat operator/(const BigNat& a, const BigNat& b);
    friend BigNat operator%(const BigNat& a, const BigNat& b);

    static BigNat gcd(BigNat a, BigNat b);
    static BigNat pow(const BigNat& base, unsigned exp);

    double to_double() const;

private:
    std::vector<std::uint32_t> limbs_;
    void trim();
};

// Exact positive rational, kept normalized (gcd(num, den) = 1, den >= 1).
struct BigRat {
    BigNat num;
    BigNat den{1};

    BigRat() = default;
    BigRat(BigNat n, BigNat d);

    static BigRat mul(const BigRat& a, std::uint64_t num, std::uint64_t den);
    static bool equal(const BigRat& a, const BigRat& b);
};

} // namespace rlab

#endif
