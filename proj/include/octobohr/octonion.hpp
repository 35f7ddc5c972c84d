#pragma once

/**
 * @file octonion.hpp
 * @brief Quaternions and octonions via the Cayley-Dickson doubling.
 *
 * An octonion is stored as a pair of quaternions (a, b) standing for a + l b,
 * which is the same as eight real coordinates on the basis
 * {1, i, j, k, l, li, lj, lk}. The product is
 *
 *   (a + l b)(c + l d) = (a c - d conj(b)) + l (conj(a) d + c b)
 *
 * evaluated with quaternion products only. The algebra is neither
 * commutative nor associative, but it is alternative: the associator
 * (x y) z - x (y z) vanishes whenever two arguments coincide.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>
#include <random>
#include <stdexcept>

namespace octobohr {

template <typename T>
struct BasicQuaternion {
    T w{}, x{}, y{}, z{};  // w + x i + y j + z k

    constexpr BasicQuaternion() = default;
    constexpr BasicQuaternion(T w_, T x_, T y_, T z_) : w{w_}, x{x_}, y{y_}, z{z_} {}

    constexpr bool operator==(BasicQuaternion const&) const = default;

    constexpr BasicQuaternion operator+(BasicQuaternion const& o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    constexpr BasicQuaternion operator-(BasicQuaternion const& o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    constexpr BasicQuaternion operator-() const { return {-w, -x, -y, -z}; }
    constexpr BasicQuaternion operator*(T s) const { return {w * s, x * s, y * s, z * s}; }

    // Hamilton product
    constexpr BasicQuaternion operator*(BasicQuaternion const& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    constexpr BasicQuaternion conj() const { return {w, -x, -y, -z}; }
    constexpr T norm_sq() const { return w * w + x * x + y * y + z * z; }
    T norm() const { return std::sqrt(norm_sq()); }
};

template <typename T>
class BasicOctonion {
public:
    using scalar_type = T;
    using quaternion_type = BasicQuaternion<T>;

    constexpr BasicOctonion() = default;
    constexpr BasicOctonion(quaternion_type a, quaternion_type b) : a_{a}, b_{b} {}
    constexpr explicit BasicOctonion(T re) : a_{re, T{}, T{}, T{}} {}
    constexpr explicit BasicOctonion(std::array<T, 8> const& c)
        : a_{c[0], c[1], c[2], c[3]}, b_{c[4], c[5], c[6], c[7]} {}

    /// Basis element e_n of {1, i, j, k, l, li, lj, lk}.
    static constexpr BasicOctonion unit(std::size_t n) {
        std::array<T, 8> c{};
        c.at(n) = T{1};
        return BasicOctonion{c};
    }

    constexpr quaternion_type const& first() const { return a_; }
    constexpr quaternion_type const& second() const { return b_; }

    constexpr std::array<T, 8> coords() const {
        return {a_.w, a_.x, a_.y, a_.z, b_.w, b_.x, b_.y, b_.z};
    }
    constexpr T operator[](std::size_t n) const { return coords()[n]; }

    constexpr T re() const { return a_.w; }
    constexpr BasicOctonion im() const {
        return {quaternion_type{T{}, a_.x, a_.y, a_.z}, b_};
    }

    constexpr bool operator==(BasicOctonion const&) const = default;

    constexpr BasicOctonion operator+(BasicOctonion const& o) const { return {a_ + o.a_, b_ + o.b_}; }
    constexpr BasicOctonion operator-(BasicOctonion const& o) const { return {a_ - o.a_, b_ - o.b_}; }
    constexpr BasicOctonion operator-() const { return {-a_, -b_}; }
    constexpr BasicOctonion operator*(T s) const { return {a_ * s, b_ * s}; }
    constexpr BasicOctonion operator/(T s) const { return {a_ * (T{1} / s), b_ * (T{1} / s)}; }
    friend constexpr BasicOctonion operator*(T s, BasicOctonion const& x) { return x * s; }

    constexpr BasicOctonion& operator+=(BasicOctonion const& o) { return *this = *this + o; }
    constexpr BasicOctonion& operator-=(BasicOctonion const& o) { return *this = *this - o; }
    constexpr BasicOctonion& operator*=(T s) { return *this = *this * s; }

    // Cayley-Dickson: (a + l b)(c + l d) = (a c - d conj(b)) + l (conj(a) d + c b)
    constexpr BasicOctonion operator*(BasicOctonion const& o) const {
        auto const& c = o.a_;
        auto const& d = o.b_;
        return {a_ * c - d * b_.conj(), a_.conj() * d + c * b_};
    }

    constexpr BasicOctonion conj() const { return {a_.conj(), -b_}; }
    constexpr T norm_sq() const { return a_.norm_sq() + b_.norm_sq(); }
    T norm() const {
        auto c = coords();
        T scale{};
        for (T v : c) scale = std::max(scale, std::abs(v));
        if (scale == T{}) return T{};
        T s{};
        for (T v : c) s += (v / scale) * (v / scale);
        return scale * std::sqrt(s);
    }

    BasicOctonion inv() const {
        T n2 = norm_sq();
        if (n2 == T{}) throw std::domain_error("zero divisor query in a division algebra");
        return conj() / n2;
    }

private:
    quaternion_type a_{};
    quaternion_type b_{};
};

using Quaternion = BasicQuaternion<double>;
using Octonion = BasicOctonion<double>;

template <typename T>
constexpr BasicOctonion<T> conj(BasicOctonion<T> const& x) { return x.conj(); }
template <typename T>
T abs(BasicOctonion<T> const& x) { return x.norm(); }
template <typename T>
BasicOctonion<T> inv(BasicOctonion<T> const& x) { return x.inv(); }

/// Euclidean inner product on R^8; equals Re(x conj(y)).
template <typename T>
constexpr T dot(BasicOctonion<T> const& x, BasicOctonion<T> const& y) {
    auto a = x.coords();
    auto b = y.coords();
    T s{};
    for (std::size_t n = 0; n < 8; ++n) s += a[n] * b[n];
    return s;
}

/// (x y) z - x (y z)
template <typename T>
constexpr BasicOctonion<T> associator(BasicOctonion<T> const& x, BasicOctonion<T> const& y,
                                      BasicOctonion<T> const& z) {
    return (x * y) * z - x * (y * z);
}

template <typename T>
constexpr BasicOctonion<T> commutator(BasicOctonion<T> const& x, BasicOctonion<T> const& y) {
    return x * y - y * x;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, BasicOctonion<T> const& x) {
    auto c = x.coords();
    os << '(';
    for (std::size_t n = 0; n < 8; ++n) os << (n ? ", " : "") << c[n];
    return os << ')';
}

/// x = alpha + beta * unit with beta >= 0 and unit in the sphere of imaginary units.
template <typename T>
struct BasicSlicePoint {
    T alpha{};
    T beta{};
    BasicOctonion<T> unit = BasicOctonion<T>::unit(1);

    BasicOctonion<T> reconstruct() const { return BasicOctonion<T>{alpha} + unit * beta; }
    std::complex<T> as_complex() const { return {alpha, beta}; }
};

using SlicePoint = BasicSlicePoint<double>;

/// Real points get unit i.
template <typename T>
BasicSlicePoint<T> slice_decompose(BasicOctonion<T> const& x) {
    BasicSlicePoint<T> p;
    p.alpha = x.re();
    auto imag = x.im();
    p.beta = imag.norm();
    if (p.beta > T{}) p.unit = imag / p.beta;
    return p;
}

/// Element p + q I of the slice C_I.
template <typename T>
constexpr BasicOctonion<T> in_slice(std::complex<T> z, BasicOctonion<T> const& unit) {
    return BasicOctonion<T>{z.real()} + unit * z.imag();
}

/// Distance from x to the slice C_I = span{1, I}.
template <typename T>
T distance_to_slice(BasicOctonion<T> const& x, BasicOctonion<T> const& unit) {
    auto proj = BasicOctonion<T>{x.re()} + unit * dot(x, unit);
    return (x - proj).norm();
}

/// Uniform sample on the 6-sphere of imaginary units: a normalized
/// 7-dimensional standard Gaussian placed in the imaginary coordinates.
template <typename URBG>
Octonion random_imaginary_unit(URBG& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        std::array<double, 8> c{};
        for (std::size_t n = 1; n < 8; ++n) c[n] = gauss(rng);
        Octonion v{c};
        double r = v.norm();
        if (r > 1e-8) return v / r;
    }
}

/// Uniform sample on the unit 7-sphere of all octonions.
template <typename URBG>
Octonion random_unit_octonion(URBG& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        std::array<double, 8> c{};
        for (auto& v : c) v = gauss(rng);
        Octonion v{c};
        double r = v.norm();
        if (r > 1e-8) return v / r;
    }
}

template <typename URBG>
Octonion random_octonion(URBG& rng, double scale = 1.0) {
    std::normal_distribution<double> gauss(0.0, scale);
    std::array<double, 8> c{};
    for (auto& v : c) v = gauss(rng);
    return Octonion{c};
}

}  // namespace octobohr
