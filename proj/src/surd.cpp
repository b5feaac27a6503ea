#include "cacforge/surd.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cacforge {

namespace {

double to_double(Rational q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

std::string rat_str(Rational q) {
    std::ostringstream os;
    os << q.numerator();
    if (q.denominator() != 1) os << '/' << q.denominator();
    return os.str();
}

}  // namespace

Surd::Surd(Rational a, Rational b, int radicand) : a_(a), b_(b), r_(radicand) {
    if (b_.numerator() != 0 && r_ <= 1) throw std::invalid_argument("surd radicand must be > 1");
}

int Surd::unify(const Surd& o) const {
    if (b_.numerator() == 0) return o.r_;
    if (o.b_.numerator() == 0 || o.r_ == r_) return r_;
    throw std::domain_error("mixing surds with different radicands");
}

double Surd::value() const {
    return to_double(a_) + (b_.numerator() == 0 ? 0.0 : to_double(b_) * std::sqrt(static_cast<double>(r_)));
}

Surd& Surd::operator+=(const Surd& o) {
    r_ = unify(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Surd& Surd::operator*=(const Surd& o) {
    int r = unify(o);
    Rational a = a_ * o.a_ + (r == 0 ? Rational(0) : b_ * o.b_ * r);
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    r_ = r;
    return *this;
}

Surd Surd::inverse() const {
    if (is_zero()) throw std::domain_error("surd division by zero");
    if (b_.numerator() == 0) return Surd(1 / a_, 0, r_);
    Rational norm = a_ * a_ - b_ * b_ * r_;
    return Surd(a_ / norm, -b_ / norm, r_);
}

Surd& Surd::operator/=(const Surd& o) { return *this *= o.inverse(); }

bool operator<(const Surd& x, const Surd& y) {
    if (x == y) return false;
    return x.value() < y.value();
}

std::string Surd::str() const {
    if (b_.numerator() == 0) return rat_str(a_);
    std::ostringstream os;
    if (a_.numerator() != 0) os << rat_str(a_) << (b_.numerator() > 0 ? "+" : "");
    os << rat_str(b_) << "*sqrt(" << r_ << ")";
    return os.str();
}

}  // namespace cacforge
