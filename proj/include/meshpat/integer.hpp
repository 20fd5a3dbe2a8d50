#pragma once

// Exact signed integer with 128-bit storage. Every arithmetic operation is
// overflow-checked and throws meshpat::overflow_error instead of wrapping.

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace meshpat {

struct overflow_error : std::overflow_error {
    using std::overflow_error::overflow_error;
};

class Integer {
public:
    using storage_type = __int128;

    constexpr Integer() = default;
    template <std::integral T>
    constexpr Integer(T v) : v_(static_cast<storage_type>(v)) {}  // NOLINT(google-explicit-constructor)

    static constexpr Integer from_raw(storage_type v) {
        Integer r;
        r.v_ = v;
        return r;
    }

    constexpr storage_type raw() const { return v_; }

    friend constexpr Integer operator+(Integer a, Integer b) {
        storage_type r{};
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw overflow_error("integer overflow in addition");
        return from_raw(r);
    }
    friend constexpr Integer operator-(Integer a, Integer b) {
        storage_type r{};
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw overflow_error("integer overflow in subtraction");
        return from_raw(r);
    }
    friend constexpr Integer operator*(Integer a, Integer b) {
        storage_type r{};
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw overflow_error("integer overflow in multiplication");
        return from_raw(r);
    }
    // Truncating division; division by zero throws std::domain_error.
    friend constexpr Integer operator/(Integer a, Integer b) {
        if (b.v_ == 0) throw std::domain_error("integer division by zero");
        if (b.v_ == -1) return Integer{} - a;
        return from_raw(a.v_ / b.v_);
    }
    friend constexpr Integer operator%(Integer a, Integer b) {
        if (b.v_ == 0) throw std::domain_error("integer division by zero");
        if (b.v_ == -1) return Integer{};
        return from_raw(a.v_ % b.v_);
    }
    constexpr Integer operator-() const { return Integer{} - *this; }

    constexpr Integer& operator+=(Integer o) { return *this = *this + o; }
    constexpr Integer& operator-=(Integer o) { return *this = *this - o; }
    constexpr Integer& operator*=(Integer o) { return *this = *this * o; }
    constexpr Integer& operator/=(Integer o) { return *this = *this / o; }
    constexpr Integer& operator++() { return *this += 1; }

    friend constexpr bool operator==(Integer, Integer) = default;
    friend constexpr std::strong_ordering operator<=>(Integer a, Integer b) { return a.v_ <=> b.v_; }

    constexpr bool is_zero() const { return v_ == 0; }

    // Narrowing conversions throw if the value does not fit.
    constexpr std::uint64_t to_u64() const {
        if (v_ < 0 || v_ > static_cast<storage_type>(UINT64_MAX)) throw overflow_error("value does not fit in uint64");
        return static_cast<std::uint64_t>(v_);
    }
    constexpr std::int64_t to_i64() const {
        if (v_ < INT64_MIN || v_ > INT64_MAX) throw overflow_error("value does not fit in int64");
        return static_cast<std::int64_t>(v_);
    }

    std::string to_string() const {
        if (v_ == 0) return "0";
        std::string out;
        bool neg = v_ < 0;
        // Work on the negative magnitude so INT128_MIN is representable.
        storage_type x = neg ? v_ : -v_;
        while (x != 0) {
            out.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
            x /= 10;
        }
        if (neg) out.push_back('-');
        return {out.rbegin(), out.rend()};
    }

    // Parses an optionally signed decimal literal; throws std::invalid_argument.
    static Integer parse(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty integer literal");
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("malformed integer literal");
        Integer r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer literal");
            r = r * 10 + Integer(s[i] - '0');
        }
        return neg ? -r : r;
    }

    friend std::ostream& operator<<(std::ostream& os, Integer x) { return os << x.to_string(); }

private:
    storage_type v_ = 0;
};

// Binomial coefficient computed by the multiplicative formula; each partial
// product is itself a binomial coefficient, so every division is exact.
inline Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * Integer(n - k + i) / Integer(i);
    return r;
}

}  // namespace meshpat
