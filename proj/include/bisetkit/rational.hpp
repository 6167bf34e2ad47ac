#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bisetkit {

using Int = boost::multiprecision::cpp_int;

/// Exact rational with arbitrary-precision integer parts.
///
/// Always stored reduced, denominator > 0.  Every arithmetic result is
/// normalized, so equality is plain member comparison.
class BRational {
public:
    BRational() : num_(0), den_(1) {}
    BRational(long long n) : num_(n), den_(1) {}          // NOLINT: implicit on purpose
    BRational(const Int& n) : num_(n), den_(1) {}          // NOLINT
    BRational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    BRational operator-() const { BRational r; r.num_ = -num_; r.den_ = den_; return r; }

    BRational& operator+=(const BRational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    BRational& operator-=(const BRational& o) { return *this += -o; }
    BRational& operator*=(const BRational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    BRational& operator/=(const BRational& o) {
        if (o.num_ == 0) throw std::domain_error("BRational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend BRational operator+(BRational a, const BRational& b) { return a += b; }
    friend BRational operator-(BRational a, const BRational& b) { return a -= b; }
    friend BRational operator*(BRational a, const BRational& b) { return a *= b; }
    friend BRational operator/(BRational a, const BRational& b) { return a /= b; }

    friend bool operator==(const BRational& a, const BRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BRational& a, const BRational& b) { return !(a == b); }
    friend bool operator<(const BRational& a, const BRational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const BRational& a, const BRational& b) { return b < a; }
    friend bool operator<=(const BRational& a, const BRational& b) { return !(b < a); }
    friend bool operator>=(const BRational& a, const BRational& b) { return !(a < b); }

    /// |num * den| — the pivot-selection magnitude used by exact elimination.
    Int pivot_magnitude() const { return boost::multiprecision::abs(num_ * den_); }

    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BRational& r) { return os << r.str(); }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("BRational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        if (num_ == 0) { den_ = 1; return; }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    Int num_;
    Int den_;
};

inline BRational rat(long long n, long long d) { return BRational(Int(n), Int(d)); }

}  // namespace bisetkit
