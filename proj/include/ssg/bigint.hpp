#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace ssg {

// Unsigned arbitrary-precision integer, just big enough for exact level-quotient
// orders (products of orbit sizes). Stored little-endian in base 10^9.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    explicit BigUint(std::uint64_t v) {
        if (v == 0) limbs_.push_back(0);
        while (v != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
            v /= kBase;
        }
    }

    void mul_small(std::uint64_t f) {
        if (f == 0) { limbs_.assign(1, 0); return; }
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
            limb = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
    }

    static BigUint pow(std::uint64_t base, std::uint64_t exp) {
        BigUint r(1);
        for (std::uint64_t i = 0; i < exp; ++i) r.mul_small(base);
        return r;
    }

    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUint& o) const { return !(*this == o); }

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

    std::string str() const {
        std::string out = std::to_string(limbs_.back());
        for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
            std::string chunk = std::to_string(*it);
            out += std::string(9 - chunk.size(), '0') + chunk;
        }
        return out;
    }

    // log2 of the value, accurate enough for dimension estimates.
    double log2() const {
        if (is_zero()) return 0.0;
        double top = 0.0;
        int take = 0;
        for (auto it = limbs_.rbegin(); it != limbs_.rend() && take < 3; ++it, ++take)
            top = top * static_cast<double>(kBase) + static_cast<double>(*it);
        double rest = static_cast<double>(limbs_.size() - take) * std::log2(static_cast<double>(kBase));
        return std::log2(top) + rest;
    }

private:
    static constexpr std::uint64_t kBase = 1000000000ull;
    std::vector<std::uint32_t> limbs_;
};

} // namespace ssg
