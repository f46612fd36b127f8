#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "clonedex/common.hpp"

namespace clonedex {

/// Similarity threshold θ in (0, 1], held as an exact rational so that
/// ⌈θ·s⌉ and ⌊s/θ⌋ are integer arithmetic and boundary cases are
/// deterministic.
class Threshold {
public:
    /// Defaults to 0.7.
    Threshold() : num_(7), den_(10) {}

    static Threshold from_ratio(std::uint64_t num, std::uint64_t den) {
        if (den == 0 || num == 0 || num > den)
            throw DomainError("threshold must be in (0, 1]");
        std::uint64_t g = std::gcd(num, den);
        Threshold t;
        t.num_ = num / g;
        t.den_ = den / g;
        return t;
    }

    /// Accepts a decimal ("0.7", "1", ".85") or a ratio ("7/10").
    static Threshold parse(std::string_view s) {
        auto slash = s.find('/');
        if (slash != std::string_view::npos) {
            std::uint64_t n = parse_uint(s.substr(0, slash));
            std::uint64_t d = parse_uint(s.substr(slash + 1));
            return from_ratio(n, d);
        }
        auto dot = s.find('.');
        std::string_view ip = dot == std::string_view::npos ? s : s.substr(0, dot);
        std::string_view fp = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
        if (fp.size() > 18) fp = fp.substr(0, 18);
        std::uint64_t den = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
        std::uint64_t num = (ip.empty() ? 0 : parse_uint(ip)) * den +
                            (fp.empty() ? 0 : parse_uint(fp));
        return from_ratio(num, den);
    }

    /// Rounds the double to nine decimal places, then reduces. Exact for
    /// any threshold a user can reasonably write.
    explicit Threshold(double value) {
        if (!(value > 0.0) || !(value <= 1.0))
            throw DomainError("threshold must be in (0, 1]");
        *this = from_ratio(static_cast<std::uint64_t>(std::llround(value * 1e9)), 1000000000ull);
    }

    std::uint64_t numerator() const { return num_; }
    std::uint64_t denominator() const { return den_; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// ⌈θ·size⌉: the overlap a clone of a block of this size must reach.
    std::uint64_t required_overlap(std::uint64_t size) const {
        return (num_ * size + den_ - 1) / den_;
    }

    std::uint64_t required_overlap_pair(std::uint64_t size_a, std::uint64_t size_b) const {
        return required_overlap(size_a > size_b ? size_a : size_b);
    }

    /// Smallest partner size that can still qualify against `size`.
    std::uint64_t min_partner_size(std::uint64_t size) const { return required_overlap(size); }

    /// ⌊size/θ⌋: largest partner size that can still qualify against `size`.
    std::uint64_t max_partner_size(std::uint64_t size) const { return size * den_ / num_; }

    std::string to_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    bool operator==(const Threshold&) const = default;

private:
    static std::uint64_t parse_uint(std::string_view s) {
        if (s.empty()) throw DomainError("bad threshold literal");
        std::uint64_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') throw DomainError("bad threshold literal");
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return v;
    }

    std::uint64_t num_;
    std::uint64_t den_;
};

/// Length of the sorted-bag prefix (the sub-block) that any qualifying
/// clone must share a token with: size − ⌈θ·size⌉ + 1.
inline std::uint64_t compute_prefix_length(std::uint64_t size, Threshold theta) {
    if (size == 0) throw DomainError("compute_prefix_length: size must be >= 1");
    return size - theta.required_overlap(size) + 1;
}

}  // namespace clonedex
