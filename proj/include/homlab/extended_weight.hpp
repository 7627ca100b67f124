#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "homlab/errors.hpp"

namespace homlab {

/// A 64-bit integer weight extended with negative infinity.
///
/// NEG_INF absorbs addition and compares below every integer. Integer
/// addition that would overflow throws WeightOverflow.
class ExtendedWeight {
public:
    constexpr ExtendedWeight() noexcept = default;
    constexpr ExtendedWeight(std::int64_t v) noexcept : value_(v) {} // NOLINT: implicit by design of the algebra

    static constexpr ExtendedWeight neg_inf() noexcept {
        ExtendedWeight w;
        w.neg_inf_ = true;
        return w;
    }

    constexpr bool is_neg_inf() const noexcept { return neg_inf_; }

    std::int64_t value() const {
        if (neg_inf_)
            throw ContractViolation("value() of -inf weight");
        return value_;
    }

    friend ExtendedWeight operator+(ExtendedWeight a, ExtendedWeight b) {
        if (a.neg_inf_ || b.neg_inf_)
            return neg_inf();
        std::int64_t r;
        if (__builtin_add_overflow(a.value_, b.value_, &r))
            throw WeightOverflow("weight addition overflow");
        return ExtendedWeight(r);
    }

    ExtendedWeight& operator+=(ExtendedWeight o) { return *this = *this + o; }

    friend constexpr bool operator==(ExtendedWeight a, ExtendedWeight b) noexcept {
        if (a.neg_inf_ || b.neg_inf_)
            return a.neg_inf_ == b.neg_inf_;
        return a.value_ == b.value_;
    }

    friend constexpr std::strong_ordering operator<=>(ExtendedWeight a, ExtendedWeight b) noexcept {
        if (a.neg_inf_ && b.neg_inf_)
            return std::strong_ordering::equal;
        if (a.neg_inf_)
            return std::strong_ordering::less;
        if (b.neg_inf_)
            return std::strong_ordering::greater;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const { return neg_inf_ ? std::string("-inf") : std::to_string(value_); }

    /// Parses an integer or the literal `-inf`.
    static ExtendedWeight parse(std::string_view text) {
        if (text == "-inf")
            return neg_inf();
        std::string s(text);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw MalformedInput("bad weight '" + s + "'");
        }
        if (used != s.size())
            throw MalformedInput("bad weight '" + s + "'");
        return ExtendedWeight(static_cast<std::int64_t>(v));
    }

    friend std::ostream& operator<<(std::ostream& os, ExtendedWeight w) { return os << w.to_string(); }

private:
    std::int64_t value_ = 0;
    bool neg_inf_ = false;
};

inline constexpr ExtendedWeight NEG_INF = ExtendedWeight::neg_inf();

} // namespace homlab
