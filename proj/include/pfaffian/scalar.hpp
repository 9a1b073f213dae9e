#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "pfaffian/errors.hpp"

namespace pfaffian {

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Checks that p is a prime larger than 3, the only moduli this library works over.
inline void require_prime(std::int64_t p) {
    if (p <= 3 || !is_prime(p)) throw BadPrime("modulus must be a prime > 3");
}

/// Element of the prime field F_p. The modulus travels with the value so one
/// binary can serve every test prime.
class Fp {
public:
    Fp(std::int64_t value, std::int64_t p) {
        require_prime(p);
        p_ = p;
        v_ = value % p;
        if (v_ < 0) v_ += p;
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.match(b);
        return Fp(unchecked{}, (a.v_ + b.v_) % a.p_, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        a.match(b);
        return Fp(unchecked{}, (a.v_ - b.v_ + a.p_) % a.p_, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        a.match(b);
        return Fp(unchecked{}, (a.v_ * b.v_) % a.p_, a.p_);
    }
    Fp operator-() const { return Fp(unchecked{}, v_ == 0 ? 0 : p_ - v_, p_); }

    Fp inv() const {
        if (v_ == 0) throw DivisionByZero();
        return pow(p_ - 2);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    Fp pow(std::int64_t e) const {
        std::int64_t base = v_, acc = 1 % p_;
        while (e > 0) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return Fp(unchecked{}, acc, p_);
    }

    bool operator==(const Fp& b) const { return p_ == b.p_ && v_ == b.v_; }
    bool operator!=(const Fp& b) const { return !(*this == b); }

private:
    struct unchecked {};
    Fp(unchecked, std::int64_t v, std::int64_t p) : v_(v), p_(p) {}
    void match(const Fp& b) const {
        if (p_ != b.p_) throw ModulusMismatch();
    }

    std::int64_t v_ = 0;
    std::int64_t p_ = 0;
};

/// Exact rational in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw DivisionByZero();
        if (d < 0) {
            n = -n;
            d = -d;
        }
        std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = n;
        den_ = d;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DivisionByZero();
        return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    bool operator==(const Rational& b) const { return num_ == b.num_ && den_ == b.den_; }
    bool operator!=(const Rational& b) const { return !(*this == b); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow();
        return r;
    }
    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw Overflow();
        return r;
    }

    std::int64_t num_;
    std::int64_t den_;
};

/// Image of a rational under the reduction map Q -> F_p.
inline Fp reduce_mod_p(const Rational& q, std::int64_t p) {
    require_prime(p);
    if (q.den() % p == 0) throw DenominatorDivisibleByP();
    Fp num(q.num(), p);
    Fp den(q.den(), p);
    return num * den.inv();
}

}  // namespace pfaffian
