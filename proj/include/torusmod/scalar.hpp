/*
   Copyright 2026 The torusmod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TORUSMOD_SCALAR_HPP
#define TORUSMOD_SCALAR_HPP

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace torusmod {

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

namespace detail {

inline Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::string_view body = text;
    bool negative = false;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) throw std::invalid_argument("rational literal has no digits: '" + std::string(text) + "'");
    std::size_t slashes = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c == '/') {
            ++slashes;
            if (i == 0 || i + 1 == body.size())
                throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
        } else if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
        }
    }
    if (slashes > 1) throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    Rational value;
    value.set_str(std::string(body), 10);
    if (value.get_den() == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

inline std::string rational_text(const Rational& q) { return q.get_str(10); }

}  // namespace detail

/// Gaussian rational re + im*i. The base field of every computation in
/// this library; there is no floating point anywhere.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar fraction(long num, long den) {
        if (den == 0) throw std::domain_error("zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return Scalar(q);
    }
    static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

    /// Accepts "a", "a/b", "a/b+c/di", "c/d i", "i", "-i" (spaces ignored).
    static Scalar parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
        if (s.empty()) throw std::invalid_argument("empty scalar literal");
        if (s.back() != 'i') return Scalar(detail::parse_rational(s));
        s.pop_back();
        // split at the last sign that is not the leading one
        std::size_t split = std::string::npos;
        for (std::size_t i = s.size(); i-- > 1;) {
            if (s[i] == '+' || s[i] == '-') {
                split = i;
                break;
            }
        }
        std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
        std::string im_text = split == std::string::npos ? s : s.substr(split);
        Rational im;
        if (im_text.empty() || im_text == "+")
            im = 1;
        else if (im_text == "-")
            im = -1;
        else
            im = detail::parse_rational(im_text);
        Rational re = re_text.empty() ? Rational(0) : detail::parse_rational(re_text);
        return Scalar(re, im);
    }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }
    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        if (is_real() && o.is_real()) {
            re_ *= o.re_;
            return *this;
        }
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::domain_error("division by zero scalar");
        if (o.is_real()) {
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
        Rational r = (re_ * o.re_ + im_ * o.im_) / norm;
        Rational i = (im_ * o.re_ - re_ * o.im_) / norm;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text: "a/b", "c/di" or "a/b+c/di"; parse(to_string()) is exact.
    std::string to_string() const {
        if (is_real()) return detail::rational_text(re_);
        std::string im_text = detail::rational_text(im_) + "i";
        if (sgn(re_) == 0) return im_text;
        return detail::rational_text(re_) + (sgn(im_) > 0 ? "+" : "") + im_text;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    Rational re_{0};
    Rational im_{0};
};

}  // namespace torusmod

#endif  // TORUSMOD_SCALAR_HPP
