#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ssg/errors.hpp"

namespace ssg {

// Exact rational number on 64-bit numerator/denominator with 128-bit
// intermediates. Overflow past 64 bits after reduction throws OverflowError;
// the abelian operations stay far below that at desk scale.
class Rat {
public:
    Rat() : n_(0), d_(1) {}
    Rat(std::int64_t n) : n_(n), d_(1) {}
    Rat(std::int64_t n, std::int64_t d) { assign(n, d); }

    static Rat parse(const std::string& s);

    std::int64_t num() const { return n_; }
    std::int64_t den() const { return d_; }

    bool is_integer() const { return d_ == 1; }
    bool is_zero() const { return n_ == 0; }

    Rat operator+(const Rat& o) const { return combined(o, +1); }
    Rat operator-(const Rat& o) const { return combined(o, -1); }
    Rat operator-() const { return Rat(-n_, d_); }

    Rat operator*(const Rat& o) const {
        return from128(static_cast<__int128>(n_) * o.n_,
                       static_cast<__int128>(d_) * o.d_);
    }

    Rat operator/(const Rat& o) const {
        if (o.n_ == 0) throw Error("rational division by zero");
        return from128(static_cast<__int128>(n_) * o.d_,
                       static_cast<__int128>(d_) * o.n_);
    }

    bool operator==(const Rat& o) const { return n_ == o.n_ && d_ == o.d_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const {
        return static_cast<__int128>(n_) * o.d_ < static_cast<__int128>(o.n_) * d_;
    }
    bool operator<=(const Rat& o) const { return !(o < *this); }

    double to_double() const { return static_cast<double>(n_) / static_cast<double>(d_); }

    std::string str() const {
        if (d_ == 1) return std::to_string(n_);
        return std::to_string(n_) + "/" + std::to_string(d_);
    }

private:
    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw Error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        n_ = n;
        d_ = d;
    }

    static Rat from128(__int128 n, __int128 d) {
        if (d == 0) throw Error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
        if (n > lim || n < -lim || d > lim) throw OverflowError("rational overflow");
        Rat r;
        r.n_ = static_cast<std::int64_t>(n);
        r.d_ = static_cast<std::int64_t>(d);
        return r;
    }

    Rat combined(const Rat& o, int sign) const {
        __int128 n = static_cast<__int128>(n_) * o.d_ +
                     static_cast<__int128>(sign) * o.n_ * d_;
        return from128(n, static_cast<__int128>(d_) * o.d_);
    }

    std::int64_t n_, d_;
};

inline Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw ParseError("bad rational: '" + s + "'");
    }
}

using RatVec = std::vector<Rat>;

// Small dense rational matrix.
class RatMat {
public:
    RatMat() : n_(0), m_(0) {}
    RatMat(int rows, int cols) : n_(rows), m_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RatMat identity(int n) {
        RatMat r(n, n);
        for (int i = 0; i < n; ++i) r.at(i, i) = Rat(1);
        return r;
    }

    int rows() const { return n_; }
    int cols() const { return m_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * m_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * m_ + j]; }

    bool operator==(const RatMat& o) const { return n_ == o.n_ && m_ == o.m_ && a_ == o.a_; }

    RatMat operator*(const RatMat& o) const {
        RatMat r(n_, o.m_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < m_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (int j = 0; j < o.m_; ++j)
                    r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        return r;
    }

    RatMat operator-(const RatMat& o) const {
        RatMat r(n_, m_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    RatVec apply(const RatVec& v) const {
        RatVec r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < m_; ++j) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    Rat det() const;
    // Solves A x = b by exact Gaussian elimination; throws on singular A.
    RatVec solve(RatVec b) const;

private:
    int n_, m_;
    std::vector<Rat> a_;
};

inline Rat RatMat::det() const {
    RatMat u = *this;
    int n = n_;
    Rat d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (!u.at(r, c).is_zero()) { p = r; break; }
        if (p < 0) return Rat(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(u.at(p, j), u.at(c, j));
            d = -d;
        }
        d = d * u.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (u.at(r, c).is_zero()) continue;
            Rat f = u.at(r, c) / u.at(c, c);
            for (int j = c; j < n; ++j) u.at(r, j) = u.at(r, j) - f * u.at(c, j);
        }
    }
    return d;
}

inline RatVec RatMat::solve(RatVec b) const {
    RatMat u = *this;
    int n = n_;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (!u.at(r, c).is_zero()) { p = r; break; }
        if (p < 0) throw Error("singular rational system");
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(u.at(p, j), u.at(c, j));
            std::swap(b[p], b[c]);
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || u.at(r, c).is_zero()) continue;
            Rat f = u.at(r, c) / u.at(c, c);
            for (int j = c; j < n; ++j) u.at(r, j) = u.at(r, j) - f * u.at(c, j);
            b[r] = b[r] - f * b[c];
        }
    }
    for (int i = 0; i < n; ++i) b[i] = b[i] / u.at(i, i);
    return b;
}

} // namespace ssg
