#include "rlab/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace rlab {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigNat::BigNat(std::uint64_t value) {
    while (value) {
        limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
        value >>= 32;
    }
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::uint64_t BigNat::to_u64() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigNat::to_u64: value too large");
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
}

int BigNat::compare(const BigNat& a, const BigNat& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
    const std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
    limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = carry + limbs_[i] + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
        carry = sum >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigNat& BigNat::operator-=(const BigNat& rhs) {
    if (compare(*this, rhs) < 0) throw std::underflow_error("BigNat subtraction underflow");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow -
                            (i < rhs.limbs_.size() ? static_cast<std::int64_t>(rhs.limbs_[i]) : 0);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(diff);
    }
    trim();
    return *this;
}

BigNat operator*(const BigNat& a, const BigNat& b) {
    BigNat out;
    if (a.is_zero() || b.is_zero()) return out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] +
                                static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

void BigNat::divmod(const BigNat& num, const BigNat& den, BigNat& quot, BigNat& rem) {
    if (den.is_zero()) throw std::domain_error("BigNat division by zero");
    quot = BigNat();
    rem = BigNat();
    if (compare(num, den) < 0) {
        rem = num;
        return;
    }
    // Binary long division: dependable and fast enough for the limb
    // counts this library ever produces.
    const std::size_t bits = num.limbs_.size() * 32;
    quot.limbs_.assign(num.limbs_.size(), 0);
    for (std::size_t bit = bits; bit-- > 0;) {
        // rem = rem*2 + bit(num, bit)
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < rem.limbs_.size(); ++i) {
            std::uint32_t next = rem.limbs_[i] >> 31;
            rem.limbs_[i] = (rem.limbs_[i] << 1) | carry;
            carry = next;
        }
        if (carry) rem.limbs_.push_back(carry);
        if ((num.limbs_[bit / 32] >> (bit % 32)) & 1u) {
            if (rem.limbs_.empty()) rem.limbs_.push_back(1);
            else {
                std::uint64_t sum = static_cast<std::uint64_t>(rem.limbs_[0]) + 1;
                rem.limbs_[0] = static_cast<std::uint32_t>(sum & 0xffffffffu);
                std::uint64_t c = sum >> 32;
                std::size_t i = 1;
                while (c) {
                    if (i == rem.limbs_.size()) { rem.limbs_.push_back(1); break; }
                    std::uint64_t s = static_cast<std::uint64_t>(rem.limbs_[i]) + c;
                    rem.limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
                    c = s >> 32;
                    ++i;
                }
            }
        }
        if (compare(rem, den) >= 0) {
            rem -= den;
            quot.limbs_[bit / 32] |= (1u << (bit % 32));
        }
    }
    quot.trim();
    rem.trim();
}

BigNat operator/(const BigNat& a, const BigNat& b) {
    BigNat q, r;
    BigNat::divmod(a, b, q, r);
    return q;
}

BigNat operator%(const BigNat& a, const BigNat& b) {
    BigNat q, r;
    BigNat::divmod(a, b, q, r);
    return r;
}

BigNat BigNat::gcd(BigNat a, BigNat b) {
    while (!b.is_zero()) {
        BigNat r = a % b;
        a = b;
        b = r;
    }
    return a;
}

BigNat BigNat::pow(const BigNat& base, unsigned exp) {
    BigNat result{1};
    BigNat acc = base;
    while (exp) {
        if (exp & 1u) result = result * acc;
        exp >>= 1u;
        if (exp) acc = acc * acc;
    }
    return result;
}

std::string BigNat::to_string() const {
    if (is_zero()) return "0";
    BigNat value = *this;
    const BigNat chunk{1'000'000'000ull};
    std::vector<std::uint32_t> parts;
    while (!value.is_zero()) {
        BigNat q, r;
        divmod(value, chunk, q, r);
        parts.push_back(r.is_zero() ? 0u : r.limbs_[0]);
        value = q;
    }
    std::string out = std::to_string(parts.back());
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
        std::string piece = std::to_string(parts[i]);
        out += std::string(9 - piece.size(), '0') + piece;
    }
    return out;
}

double BigNat::to_double() const {
    double out = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) out = out * 4294967296.0 + limbs_[i];
    return out;
}

BigRat::BigRat(BigNat n, BigNat d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("BigRat: zero denominator");
    BigNat g = BigNat::gcd(num, den);
    if (!g.is_zero() && g != BigNat{1}) {
        num = num / g;
        den = den / g;
    }
    if (num.is_zero()) den = BigNat{1};
}

BigRat BigRat::mul(const BigRat& a, std::uint64_t num, std::uint64_t den) {
    return BigRat(a.num * BigNat{num}, a.den * BigNat{den});
}

bool BigRat::equal(const BigRat& a, const BigRat& b) {
    return a.num * b.den == b.num * a.den;
}

} // namespace rlab
