#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace cacforge {

using Rational = boost::rational<std::int64_t>;

// Exact element a + b*sqrt(r) of Q(sqrt r). r == 0 marks a plain rational.
class Surd {
public:
    Surd() = default;
    Surd(Rational a, Rational b, int radicand);
    Surd(std::int64_t a) : a_(a) {}  // NOLINT: implicit from integers is convenient

    static Surd root(int radicand) { return Surd(0, 1, radicand); }

    Rational a() const { return a_; }
    Rational b() const { return b_; }
    int radicand() const { return b_.numerator() == 0 ? 0 : r_; }

    double value() const;
    bool is_zero() const { return a_.numerator() == 0 && b_.numerator() == 0; }

    Surd operator-() const { return Surd(-a_, -b_, r_); }
    Surd& operator+=(const Surd& o);
    Surd& operator-=(const Surd& o) { return *this += -o; }
    Surd& operator*=(const Surd& o);
    Surd& operator/=(const Surd& o);
    Surd inverse() const;

    friend Surd operator+(Surd x, const Surd& y) { return x += y; }
    friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
    friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
    friend Surd operator/(Surd x, const Surd& y) { return x /= y; }
    friend bool operator==(const Surd& x, const Surd& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.numerator() == 0 || x.r_ == y.r_);
    }
    friend bool operator<(const Surd& x, const Surd& y);

    // "a+b*sqrt(r)" with rationals printed as p/q
    std::string str() const;

private:
    int unify(const Surd& o) const;

    Rational a_{0};
    Rational b_{0};
    int r_ = 0;
};

}  // namespace cacforge
