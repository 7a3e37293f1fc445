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

#ifndef TORUSMOD_TEXT_HPP
#define TORUSMOD_TEXT_HPP

// Shared reader/writer for the "c * t^[r1,...,rN] d_a" and
// "c * x^[k1,...,kN] D_a" term sums.

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "multi_index.hpp"
#include "scalar.hpp"

namespace torusmod::text {

struct Term {
    Scalar coeff;
    MultiIndex exponent;
    std::size_t direction = 0;  // 0-based
};

struct Syntax {
    char base;                // 't' or 'x'
    std::string_view deriv;   // "d_" or "D_"
};

inline constexpr Syntax torus_syntax{'t', "d_"};
inline constexpr Syntax poly_syntax{'x', "D_"};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at offset " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class Reader {
public:
    explicit Reader(std::string_view s) : s_(s) {}

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip();
        return i_ >= s_.size();
    }
    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool accept(std::string_view tok) {
        skip();
        if (s_.substr(i_, tok.size()) == tok) {
            i_ += tok.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }
    long integer() {
        skip();
        std::size_t start = i_;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
        std::size_t digits = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == digits) fail("expected integer");
        return std::stol(std::string(s_.substr(start, i_ - start)));
    }
    /// A bare scalar literal, stopping at '*' or ')' .
    Scalar scalar_until(char stop) {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && s_[i_] != stop) ++i_;
        if (i_ == start) fail("expected scalar");
        try {
            return Scalar::parse(s_.substr(start, i_ - start));
        } catch (const std::exception& e) {
            throw ParseError(e.what(), start);
        }
    }
    std::size_t pos() const { return i_; }
    void set_pos(std::size_t p) { i_ = p; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace detail

/// Parses a sum of terms. The dimension N is taken from the first exponent
/// and enforced on the rest; "0" parses to an empty sum.
inline std::vector<Term> parse_terms(std::string_view s, Syntax syn) {
    detail::Reader rd(s);
    std::vector<Term> out;
    if (rd.done()) throw ParseError("empty expression", 0);
    if (rd.accept("0")) {
        if (!rd.done()) rd.fail("trailing input after 0");
        return out;
    }
    bool first = true;
    while (!rd.done()) {
        Scalar sign = 1;
        if (rd.accept("+")) {
        } else if (rd.accept("-")) {
            sign = -1;
        } else if (!first) {
            rd.fail("expected '+' or '-'");
        }
        first = false;
        Scalar coeff = 1;
        if (rd.peek() == '(') {
            rd.expect("(");
            coeff = rd.scalar_until(')');
            rd.expect(")");
            rd.expect("*");
        } else if (rd.peek() != syn.base) {
            coeff = rd.scalar_until('*');
            rd.expect("*");
        }
        rd.expect(std::string_view(&syn.base, 1));
        rd.expect("^");
        rd.expect("[");
        std::vector<long> e;
        if (!rd.accept("]")) {
            do {
                e.push_back(rd.integer());
            } while (rd.accept(","));
            rd.expect("]");
        }
        rd.expect(syn.deriv);
        long dir = rd.integer();
        if (dir < 1 || static_cast<std::size_t>(dir) > e.size()) rd.fail("direction out of range");
        if (!out.empty() && out.front().exponent.size() != e.size()) rd.fail("inconsistent dimension");
        out.push_back(Term{sign * coeff, MultiIndex(std::move(e)), static_cast<std::size_t>(dir - 1)});
    }
    return out;
}

inline std::string coefficient_prefix(const Scalar& c) {
    if (c == Scalar(1)) return "";
    if (c.is_real()) return c.to_string() + " * ";
    return "(" + c.to_string() + ") * ";
}

/// Canonical printing; terms appear in the order given.
inline std::string print_terms(const std::vector<Term>& terms, Syntax syn) {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms) {
        Scalar c = t.coeff;
        bool negative = c.is_real() && sgn(c.re()) < 0;
        if (negative) c = -c;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        s += coefficient_prefix(c);
        s += syn.base;
        s += '^';
        s += t.exponent.to_string();
        s += ' ';
        s += syn.deriv;
        s += std::to_string(t.direction + 1);
    }
    return s;
}

}  // namespace torusmod::text

#endif  // TORUSMOD_TEXT_HPP
