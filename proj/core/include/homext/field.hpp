#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace homext {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Prime field used as the fast second opinion next to exact rationals.
// p = 2^61 - 1, far above every matrix dimension that ever appears here.
class Fp {
public:
    static constexpr std::uint64_t P = (std::uint64_t(1) << 61) - 1;

    Fp() : v_(0) {}
    Fp(long long x) {
        long long r = x % static_cast<long long>(P);
        if (r < 0) r += static_cast<long long>(P);
        v_ = static_cast<std::uint64_t>(r);
    }

    std::uint64_t value() const { return v_; }

    friend Fp operator+(Fp a, Fp b) {
        std::uint64_t s = a.v_ + b.v_;
        if (s >= P) s -= P;
        return from_raw(s);
    }
    friend Fp operator-(Fp a, Fp b) {
        std::uint64_t s = a.v_ + P - b.v_;
        if (s >= P) s -= P;
        return from_raw(s);
    }
    friend Fp operator*(Fp a, Fp b) {
        __uint128_t p = static_cast<__uint128_t>(a.v_) * b.v_;
        return from_raw(static_cast<std::uint64_t>(p % P));
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return from_raw(v_ == 0 ? 0 : P - v_); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    bool is_zero() const { return v_ == 0; }

    Fp inverse() const {
        // Fermat
        Fp base = *this, acc = Fp(1);
        std::uint64_t e = P - 2;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

private:
    static Fp from_raw(std::uint64_t raw) {
        Fp r;
        r.v_ = raw;
        return r;
    }
    std::uint64_t v_;
};

inline bool field_is_zero(const Rational& x) { return x.is_zero(); }
inline bool field_is_zero(const Fp& x) { return x.is_zero(); }

enum class FieldMode { Rational, Prime };

}  // namespace homext
