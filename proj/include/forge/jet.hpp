#pragma once

// Truncated second-order Taylor (jet) arithmetic. A Jet carries the value of
// a function together with its first two derivatives with respect to one
// variable; composing jets with the rules below propagates exact derivative
// formulas through arbitrary closed-form expressions. This is what backs
// every "analytic derivatives" contract in the library.

#include <cmath>
#include <functional>

namespace forge {

template <class T>
struct Jet {
    T v{};   // value
    T d1{};  // first derivative
    T d2{};  // second derivative

    constexpr Jet() = default;
    constexpr Jet(T value) : v(value), d1(T(0)), d2(T(0)) {}
    constexpr Jet(T value, T first, T second) : v(value), d1(first), d2(second) {}

    // The independent variable x: d/dx x = 1.
    static constexpr Jet variable(T x) { return Jet(x, T(1), T(0)); }
};

template <class T> constexpr Jet<T> operator+(const Jet<T>& a, const Jet<T>& b) {
    return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
}
template <class T> constexpr Jet<T> operator-(const Jet<T>& a, const Jet<T>& b) {
    return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}
template <class T> constexpr Jet<T> operator-(const Jet<T>& a) {
    return {-a.v, -a.d1, -a.d2};
}
template <class T> constexpr Jet<T> operator*(const Jet<T>& a, const Jet<T>& b) {
    return {a.v * b.v,
            a.d1 * b.v + a.v * b.d1,
            a.d2 * b.v + T(2) * a.d1 * b.d1 + a.v * b.d2};
}
template <class T> constexpr Jet<T> operator/(const Jet<T>& a, const Jet<T>& b) {
    const T q = a.v / b.v;
    const T q1 = (a.d1 - q * b.d1) / b.v;
    const T q2 = (a.d2 - T(2) * q1 * b.d1 - q * b.d2) / b.v;
    return {q, q1, q2};
}
template <class T> constexpr Jet<T> operator+(const Jet<T>& a, T s) { return a + Jet<T>(s); }
template <class T> constexpr Jet<T> operator+(T s, const Jet<T>& a) { return Jet<T>(s) + a; }
template <class T> constexpr Jet<T> operator-(const Jet<T>& a, T s) { return a - Jet<T>(s); }
template <class T> constexpr Jet<T> operator-(T s, const Jet<T>& a) { return Jet<T>(s) - a; }
template <class T> constexpr Jet<T> operator*(const Jet<T>& a, T s) { return {a.v * s, a.d1 * s, a.d2 * s}; }
template <class T> constexpr Jet<T> operator*(T s, const Jet<T>& a) { return a * s; }
template <class T> constexpr Jet<T> operator/(const Jet<T>& a, T s) { return {a.v / s, a.d1 / s, a.d2 / s}; }
template <class T> constexpr Jet<T> operator/(T s, const Jet<T>& a) { return Jet<T>(s) / a; }

// Composition with an elementary u: (u∘f)'' = u''(f) f'^2 + u'(f) f''.
template <class T>
constexpr Jet<T> compose(T u, T du, T d2u, const Jet<T>& f) {
    return {u, du * f.d1, d2u * f.d1 * f.d1 + du * f.d2};
}

template <class T> Jet<T> sin(const Jet<T>& f) {
    const T s = std::sin(f.v), c = std::cos(f.v);
    return compose(s, c, -s, f);
}
template <class T> Jet<T> cos(const Jet<T>& f) {
    const T s = std::sin(f.v), c = std::cos(f.v);
    return compose(c, -s, -c, f);
}
template <class T> Jet<T> sinh(const Jet<T>& f) {
    const T s = std::sinh(f.v), c = std::cosh(f.v);
    return compose(s, c, s, f);
}
template <class T> Jet<T> cosh(const Jet<T>& f) {
    const T s = std::sinh(f.v), c = std::cosh(f.v);
    return compose(c, s, c, f);
}
template <class T> Jet<T> tanh(const Jet<T>& f) {
    const T t = std::tanh(f.v);
    const T sech2 = T(1) - t * t;
    return compose(t, sech2, T(-2) * t * sech2, f);
}
// sech = 1/cosh, kept as a primitive to avoid overflow of cosh followed by
// division for large arguments.
template <class T> Jet<T> sech(const Jet<T>& f) {
    const T s = T(1) / std::cosh(f.v);
    const T t = std::tanh(f.v);
    return compose(s, -s * t, s * (t * t - s * s), f);
}
template <class T> Jet<T> exp(const Jet<T>& f) {
    const T e = std::exp(f.v);
    return compose(e, e, e, f);
}
template <class T> Jet<T> sqrt(const Jet<T>& f) {
    const T r = std::sqrt(f.v);
    const T d1 = f.d1 / (T(2) * r);
    const T d2 = (f.d2 - T(2) * d1 * d1) / (T(2) * r);
    return {r, d1, d2};
}

// Two-argument arctangent of a pair of jets; derivative of the angle of the
// point (w(x), y(x)) around the origin.
template <class T>
Jet<T> atan2(const Jet<T>& y, const Jet<T>& w) {
    const T den = w.v * w.v + y.v * y.v;
    const T num = w.v * y.d1 - y.v * w.d1;
    const T d1 = num / den;
    const T dnum = w.v * y.d2 - y.v * w.d2;
    const T dden = T(2) * (w.v * w.d1 + y.v * y.d1);
    const T d2 = (dnum - d1 * dden) / den;
    return {std::atan2(y.v, w.v), d1, d2};
}

using JetD = Jet<double>;
using JetL = Jet<long double>;

// Scalar function with analytic value/first/second derivative.
using FnJet = std::function<JetD(double)>;
// Same, carried in extended precision (used where double cancellation bites).
using FnJetL = std::function<JetL(long double)>;

inline FnJet narrow(const FnJetL& f) {
    return [f](double x) {
        const JetL j = f(static_cast<long double>(x));
        return JetD{static_cast<double>(j.v), static_cast<double>(j.d1),
                    static_cast<double>(j.d2)};
    };
}

}  // namespace forge
