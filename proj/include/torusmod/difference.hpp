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

#ifndef TORUSMOD_DIFFERENCE_HPP
#define TORUSMOD_DIFFERENCE_HPP

// Difference calculus on Z^N for matrix-valued functions: difference
// derivatives, bivariate interpolation on triangular grids, polynomiality
// detection and discrete antiderivatives.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "multi_index.hpp"
#include "scalar.hpp"

namespace torusmod {

/// Matrix-valued function sampled on an explicit finite subset of Z^N.
/// Evaluation outside the sampled set is an error, never an implicit zero.
class GridFunction {
public:
    using Samples = std::map<MultiIndex, Matrix>;

    GridFunction(std::size_t n, std::size_t rows, std::size_t cols) : n_(n), rows_(rows), cols_(cols) {}

    static GridFunction sample(const std::vector<MultiIndex>& points,
                               const std::function<Matrix(const MultiIndex&)>& f) {
        if (points.empty()) throw std::invalid_argument("GridFunction: empty domain");
        Matrix first = f(points.front());
        GridFunction g(points.front().size(), first.rows(), first.cols());
        for (const auto& p : points) g.set(p, p == points.front() ? first : f(p));
        return g;
    }

    /// Samples f on the box [lo, hi]^N.
    static GridFunction on_box(std::size_t n, long lo, long hi, const std::function<Matrix(const MultiIndex&)>& f) {
        return sample(box_points(n, lo, hi), f);
    }

    /// Samples f on base + {i e_a + j e_b : i, j >= 0, i + j <= k}.
    static GridFunction on_triangle(const MultiIndex& base, std::size_t a, std::size_t b, long k,
                                    const std::function<Matrix(const MultiIndex&)>& f) {
        std::vector<MultiIndex> pts;
        for (long i = 0; i <= k; ++i)
            for (long j = 0; i + j <= k; ++j) {
                MultiIndex p = base;
                p[a] += i;
                p[b] += j;
                pts.push_back(p);
            }
        return sample(pts, f);
    }

    void set(const MultiIndex& s, Matrix value) {
        if (s.size() != n_) throw std::invalid_argument("GridFunction: point dimension mismatch");
        if (value.rows() != rows_ || value.cols() != cols_)
            throw std::invalid_argument("GridFunction: sample shape mismatch at " + s.to_string());
        samples_.insert_or_assign(s, std::move(value));
    }

    void erase(const MultiIndex& s) { samples_.erase(s); }

    std::size_t dimension() const noexcept { return n_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Samples& samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    bool contains(const MultiIndex& s) const { return samples_.count(s) != 0; }

    const Matrix& at(const MultiIndex& s) const {
        auto it = samples_.find(s);
        if (it == samples_.end()) throw std::out_of_range("GridFunction: " + s.to_string() + " is outside the domain");
        return it->second;
    }

    /// Componentwise bounds of the domain.
    std::pair<MultiIndex, MultiIndex> bounds() const {
        if (samples_.empty()) throw std::logic_error("GridFunction: empty domain");
        MultiIndex lo = samples_.begin()->first, hi = lo;
        for (const auto& [s, _] : samples_)
            for (std::size_t i = 0; i < n_; ++i) {
                lo[i] = std::min(lo[i], s[i]);
                hi[i] = std::max(hi[i], s[i]);
            }
        return {lo, hi};
    }

    /// One record per point: "[i1,...,iN] e11 e12 ... " (row-major Scalar text),
    /// preceded by a "grid N rows cols" header line.
    void dump(std::ostream& os) const {
        os << "grid " << n_ << ' ' << rows_ << ' ' << cols_ << '\n';
        for (const auto& [s, m] : samples_) {
            os << s.to_string();
            for (const auto& x : m.data()) os << ' ' << x.to_string();
            os << '\n';
        }
    }

    static GridFunction load(std::istream& is) {
        std::string tag;
        std::size_t n = 0, rows = 0, cols = 0;
        if (!(is >> tag >> n >> rows >> cols) || tag != "grid")
            throw std::invalid_argument("grid dump: missing 'grid N rows cols' header");
        GridFunction g(n, rows, cols);
        std::string line;
        std::getline(is, line);
        std::size_t lineno = 1;
        while (std::getline(is, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::istringstream ls(line);
            std::string idx;
            ls >> idx;
            if (idx.size() < 2 || idx.front() != '[' || idx.back() != ']')
                throw std::invalid_argument("grid dump line " + std::to_string(lineno) + ": expected index list");
            std::vector<long> e;
            std::string body = idx.substr(1, idx.size() - 2);
            std::istringstream es(body);
            std::string part;
            while (std::getline(es, part, ',')) e.push_back(std::stol(part));
            if (e.size() != n)
                throw std::invalid_argument("grid dump line " + std::to_string(lineno) + ": wrong index length");
            Matrix m(rows, cols);
            for (std::size_t k = 0; k < rows * cols; ++k) {
                std::string tok;
                if (!(ls >> tok))
                    throw std::invalid_argument("grid dump line " + std::to_string(lineno) + ": too few entries");
                m.data()[k] = Scalar::parse(tok);
            }
            g.set(MultiIndex(std::move(e)), std::move(m));
        }
        return g;
    }

private:
    std::size_t n_;
    std::size_t rows_;
    std::size_t cols_;
    Samples samples_;
};

/// partial_r f(s) = f(s + r) - f(s), on {s : s, s + r in the domain}.
inline GridFunction diff_deriv(const GridFunction& f, const MultiIndex& r) {
    GridFunction out(f.dimension(), f.rows(), f.cols());
    for (const auto& [s, v] : f.samples()) {
        auto it = f.samples().find(s + r);
        if (it != f.samples().end()) out.set(s, it->second - v);
    }
    if (out.size() == 0) throw std::domain_error("diff_deriv: result domain is empty");
    return out;
}

/// partial_a^m partial_b^n f at a single point, straight from the binomial stencil.
inline std::optional<Matrix> mixed_deriv_at(const GridFunction& f, std::size_t a, long m, std::size_t b, long n,
                                            const MultiIndex& s) {
    Matrix acc(f.rows(), f.cols());
    for (long i = 0; i <= m; ++i)
        for (long j = 0; j <= n; ++j) {
            MultiIndex p = s;
            p[a] += i;
            p[b] += j;
            auto it = f.samples().find(p);
            if (it == f.samples().end()) return std::nullopt;
            Rational c = binomial(m, i) * binomial(n, j);
            if ((m + n - i - j) % 2) c = -c;
            acc += Scalar(c) * it->second;
        }
    return acc;
}

/// partial_a^m partial_b^n f on every point whose stencil lies in the domain.
inline GridFunction mixed_deriv(const GridFunction& f, std::size_t a, long m, std::size_t b, long n) {
    if (m < 0 || n < 0) throw std::invalid_argument("mixed_deriv: negative order");
    if (a >= f.dimension() || b >= f.dimension()) throw std::out_of_range("mixed_deriv: direction out of range");
    GridFunction out(f.dimension(), f.rows(), f.cols());
    for (const auto& [s, _] : f.samples())
        if (auto v = mixed_deriv_at(f, a, m, b, n, s)) out.set(s, std::move(*v));
    if (out.size() == 0) throw std::domain_error("mixed_deriv: stencil exceeds domain");
    return out;
}

namespace detail {

/// Monomial-basis matrix polynomial: exponent -> coefficient matrix.
using MonoPoly = std::map<MultiIndex, Matrix>;

inline void mono_add(MonoPoly& p, const MultiIndex& k, const Matrix& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

/// p * (X_v - c)
inline MonoPoly mono_mul_linear(const MonoPoly& p, std::size_t v, const Scalar& c) {
    MonoPoly out;
    for (const auto& [k, m] : p) {
        MultiIndex up = k;
        up[v] += 1;
        mono_add(out, up, m);
        if (!c.is_zero()) mono_add(out, k, -(c * m));
    }
    return out;
}

inline Scalar eval_monomial(const MultiIndex& k, const std::vector<Scalar>& x) {
    Scalar p = 1;
    for (std::size_t i = 0; i < k.size(); ++i)
        for (long e = 0; e < k[i]; ++e) p *= x[i];
    return p;
}

}  // namespace detail

/// Matrix polynomial sum_k (r^k / k!) C_k in N variables; zero coefficients
/// are never stored.
class MatrixPoly {
public:
    using Coeffs = std::map<MultiIndex, Matrix>;

    MatrixPoly(std::size_t n, std::size_t rows, std::size_t cols) : n_(n), rows_(rows), cols_(cols) {}

    static MatrixPoly from_monomial(std::size_t n, std::size_t rows, std::size_t cols, const detail::MonoPoly& p) {
        MatrixPoly out(n, rows, cols);
        for (const auto& [k, m] : p) out.add(k, Scalar(factorial_mi(k)) * m);
        return out;
    }

    std::size_t variables() const noexcept { return n_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Coeffs& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient C_k of r^k/k!.
    Matrix coefficient(const MultiIndex& k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Matrix(rows_, cols_) : it->second;
    }

    void add(const MultiIndex& k, const Matrix& c) {
        if (k.size() != n_ || !k.nonnegative()) throw std::invalid_argument("MatrixPoly: bad exponent " + k.to_string());
        if (c.rows() != rows_ || c.cols() != cols_) throw std::invalid_argument("MatrixPoly: coefficient shape mismatch");
        detail::mono_add(coeffs_, k, c);
    }

    /// Max |k| over the support; -1 for the zero polynomial.
    long degree() const {
        long d = -1;
        for (const auto& [k, _] : coeffs_) d = std::max(d, weight(k));
        return d;
    }

    detail::MonoPoly monomial() const {
        detail::MonoPoly p;
        for (const auto& [k, m] : coeffs_) {
            Scalar f = Scalar(factorial_mi(k));
            p.emplace(k, Scalar(1) / f * m);
        }
        return p;
    }

    Matrix evaluate(const std::vector<Scalar>& x) const {
        if (x.size() != n_) throw std::invalid_argument("MatrixPoly::evaluate: dimension mismatch");
        Matrix acc(rows_, cols_);
        for (const auto& [k, m] : coeffs_) {
            Scalar w = detail::eval_monomial(k, x) / Scalar(factorial_mi(k));
            if (!w.is_zero()) acc += w * m;
        }
        return acc;
    }
    Matrix evaluate(const MultiIndex& r) const {
        std::vector<Scalar> x;
        for (long v : r) x.emplace_back(v);
        return evaluate(x);
    }

    MatrixPoly& operator+=(const MatrixPoly& o) {
        for (const auto& [k, m] : o.coeffs_) add(k, m);
        return *this;
    }
    MatrixPoly& operator-=(const MatrixPoly& o) {
        for (const auto& [k, m] : o.coeffs_) add(k, -m);
        return *this;
    }
    friend MatrixPoly operator+(MatrixPoly a, const MatrixPoly& b) { return a += b; }
    friend MatrixPoly operator-(MatrixPoly a, const MatrixPoly& b) { return a -= b; }
    friend bool operator==(const MatrixPoly&, const MatrixPoly&) = default;

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (const auto& [k, m] : coeffs_) {
            if (!s.empty()) s += " + ";
            s += "r^" + k.to_string() + "/k! * " + m.to_string();
        }
        return s;
    }

private:
    std::size_t n_;
    std::size_t rows_;
    std::size_t cols_;
    Coeffs coeffs_;
};

/// Samples p on the given points.
inline GridFunction sample(const MatrixPoly& p, const std::vector<MultiIndex>& points) {
    return GridFunction::sample(points, [&](const MultiIndex& r) { return p.evaluate(r); });
}

namespace detail {

/// Univariate Newton interpolation in variable v of an n-variable monomial poly.
inline MonoPoly interpolate_1d(std::size_t nvars, std::size_t v, const std::vector<Scalar>& xs,
                               const std::vector<Matrix>& values) {
    std::size_t k = xs.size();
    std::vector<Matrix> dd = values;  // divided differences, in place
    for (std::size_t level = 1; level < k; ++level)
        for (std::size_t i = k - 1; i >= level; --i) {
            dd[i] = Scalar(1) / (xs[i] - xs[i - level]) * (dd[i] - dd[i - 1]);
            if (i == level) break;
        }
    // Horner on the Newton form
    MonoPoly p;
    mono_add(p, MultiIndex(nvars), dd[k - 1]);
    for (std::size_t i = k - 1; i-- > 0;) {
        p = mono_mul_linear(p, v, xs[i]);
        mono_add(p, MultiIndex(nvars), dd[i]);
    }
    return p;
}

inline Matrix mono_eval(const MonoPoly& p, const std::vector<Scalar>& x, std::size_t rows, std::size_t cols) {
    Matrix acc(rows, cols);
    for (const auto& [k, m] : p) acc += eval_monomial(k, x) * m;
    return acc;
}

/// P(X,Y) = R(X) + (Y - y0) Q(X,Y) with R the interpolant of a_{i0}.
inline MonoPoly interpolate_triangle(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys,
                                     const std::function<Matrix(std::size_t, std::size_t)>& a, std::size_t rows,
                                     std::size_t cols) {
    std::size_t k = xs.size() - 1;
    std::vector<Matrix> first_row;
    for (std::size_t i = 0; i <= k; ++i) first_row.push_back(a(i, 0));
    MonoPoly r = interpolate_1d(2, 0, xs, first_row);
    if (k == 0) return r;
    std::vector<Scalar> qx(xs.begin(), xs.end() - 1), qy(ys.begin() + 1, ys.end());
    auto b = [&](std::size_t i, std::size_t j) {
        Matrix ri = mono_eval(r, {xs[i], ys[0]}, rows, cols);
        return Scalar(1) / (ys[j + 1] - ys[0]) * (a(i, j + 1) - ri);
    };
    MonoPoly q = interpolate_triangle(qx, qy, b, rows, cols);
    MonoPoly yq = mono_mul_linear(q, 1, ys[0]);
    for (const auto& [e, m] : yq) mono_add(r, e, m);
    return r;
}

}  // namespace detail

/// Node (x_i, y_j, a_ij) of a triangular interpolation grid.
struct InterpolationNode {
    Scalar x;
    Scalar y;
    Matrix value;
};

/// Unique P of degree <= K with P(x_i, y_j) = a_ij for i + j <= K.
/// xs and ys hold x_0..x_K and y_0..y_K; a(i, j) supplies the values.
inline MatrixPoly interpolate_2d(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys,
                                 const std::function<Matrix(std::size_t, std::size_t)>& a) {
    if (xs.empty() || xs.size() != ys.size()) throw std::invalid_argument("interpolate_2d: need K+1 abscissae of each kind");
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (xs[i] == xs[j]) throw std::invalid_argument("interpolate_2d: duplicate x abscissa");
            if (ys[i] == ys[j]) throw std::invalid_argument("interpolate_2d: duplicate y abscissa");
        }
    Matrix probe = a(0, 0);
    auto mono = detail::interpolate_triangle(xs, ys, a, probe.rows(), probe.cols());
    return MatrixPoly::from_monomial(2, probe.rows(), probe.cols(), mono);
}

/// Node-list form. The x value shared by the most nodes is x_0, the next x_1,
/// and likewise for y; the nodes must fill {i + j <= K} exactly.
inline MatrixPoly interpolate_2d(const std::vector<InterpolationNode>& nodes) {
    std::size_t count = nodes.size();
    std::size_t k = 0;
    while ((k + 1) * (k + 2) / 2 < count) ++k;
    if (count == 0 || (k + 1) * (k + 2) / 2 != count)
        throw std::invalid_argument("interpolate_2d: node count must be (K+1)(K+2)/2");
    auto order = [&](bool use_x) {
        std::vector<std::pair<Scalar, std::size_t>> tally;
        for (const auto& nd : nodes) {
            const Scalar& v = use_x ? nd.x : nd.y;
            auto it = std::find_if(tally.begin(), tally.end(), [&](const auto& t) { return t.first == v; });
            if (it == tally.end())
                tally.emplace_back(v, 1);
            else
                ++it->second;
        }
        if (tally.size() != k + 1) throw std::invalid_argument("interpolate_2d: nodes do not form a triangular grid");
        std::stable_sort(tally.begin(), tally.end(), [](const auto& p, const auto& q) { return p.second > q.second; });
        std::vector<Scalar> out;
        for (std::size_t i = 0; i < tally.size(); ++i) {
            if (tally[i].second != k + 1 - i)
                throw std::invalid_argument("interpolate_2d: nodes do not form a triangular grid");
            out.push_back(tally[i].first);
        }
        return out;
    };
    std::vector<Scalar> xs = order(true), ys = order(false);
    std::map<std::pair<std::size_t, std::size_t>, const Matrix*> grid;
    for (const auto& nd : nodes) {
        std::size_t i = std::find(xs.begin(), xs.end(), nd.x) - xs.begin();
        std::size_t j = std::find(ys.begin(), ys.end(), nd.y) - ys.begin();
        if (i + j > k || !grid.emplace(std::pair{i, j}, &nd.value).second)
            throw std::invalid_argument("interpolate_2d: duplicate or off-triangle node");
    }
    return interpolate_2d(xs, ys, [&](std::size_t i, std::size_t j) { return *grid.at({i, j}); });
}

/// True iff F and G agree on S = S_1 x ... x S_N (each |S_i| = K + 1). Both
/// degrees must be <= K, in which case agreement means F == G.
inline bool equal_on_cube(const MatrixPoly& f, const MatrixPoly& g, const std::vector<std::vector<Scalar>>& cube) {
    if (f.variables() != g.variables() || cube.size() != f.variables())
        throw std::invalid_argument("equal_on_cube: dimension mismatch");
    std::size_t side = cube.front().size();
    for (const auto& s : cube) {
        if (s.size() != side) throw std::invalid_argument("equal_on_cube: sets must share a size");
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (s[i] == s[j]) throw std::invalid_argument("equal_on_cube: repeated coordinate");
    }
    long k = static_cast<long>(side) - 1;
    if (f.degree() > k || g.degree() > k) throw std::domain_error("equal_on_cube: degree exceeds K");
    std::vector<std::size_t> idx(cube.size(), 0);
    while (true) {
        std::vector<Scalar> pt;
        for (std::size_t v = 0; v < cube.size(); ++v) pt.push_back(cube[v][idx[v]]);
        if (f.evaluate(pt) != g.evaluate(pt)) return false;
        std::size_t v = 0;
        while (v < idx.size() && ++idx[v] == side) idx[v++] = 0;
        if (v == idx.size()) return true;
    }
}

/// Failure of detect_polynomial: `witness` is a point where a difference of
/// order `order` (m, n) is nonzero, or where the interpolant disagrees.
class DetectionFailure : public std::runtime_error {
public:
    DetectionFailure(const std::string& what, MultiIndex witness, std::pair<long, long> order)
        : std::runtime_error(what), witness_(std::move(witness)), order_(order) {}
    const MultiIndex& witness() const noexcept { return witness_; }
    std::pair<long, long> order() const noexcept { return order_; }

private:
    MultiIndex witness_;
    std::pair<long, long> order_;
};

/// Finds the minimal K <= k_max such that all mixed differences of total
/// order K + 1 vanish wherever their stencil fits, interpolates on a corner
/// triangle and checks the interpolant against every sample. N must be 2;
/// the domain may be a box with holes (e.g. the origin removed).
inline MatrixPoly detect_polynomial(const GridFunction& f, long k_max) {
    if (f.dimension() != 2) throw std::invalid_argument("detect_polynomial: bivariate grids only");
    if (k_max < 0) throw std::invalid_argument("detect_polynomial: negative K_max");
    auto [lo, hi] = f.bounds();
    for (std::size_t i = 0; i < 2; ++i)
        if (hi[i] - lo[i] + 1 < 2 * k_max + 2)
            throw std::invalid_argument("detect_polynomial: box side must be at least 2*K_max+2");

    std::optional<DetectionFailure> last;
    for (long k = 0; k <= k_max; ++k) {
        bool vanish = true;
        for (long m = k + 1; m >= 0 && vanish; --m) {
            long n = k + 1 - m;
            for (const auto& [s, _] : f.samples()) {
                auto d = mixed_deriv_at(f, 0, m, 1, n, s);
                if (d && !d->is_zero()) {
                    last.emplace("difference of order (" + std::to_string(m) + "," + std::to_string(n) +
                                     ") is nonzero at " + s.to_string(),
                                 s, std::pair{m, n});
                    vanish = false;
                    break;
                }
            }
        }
        if (!vanish) continue;

        // first corner whose triangle lies in the domain
        std::optional<MatrixPoly> p;
        for (long sx : {1L, -1L})
            for (long sy : {1L, -1L}) {
                if (p) break;
                MultiIndex corner{sx > 0 ? lo[0] : hi[0], sy > 0 ? lo[1] : hi[1]};
                bool fits = true;
                for (long i = 0; i <= k && fits; ++i)
                    for (long j = 0; i + j <= k && fits; ++j) fits = f.contains(MultiIndex{corner[0] + sx * i, corner[1] + sy * j});
                if (!fits) continue;
                std::vector<Scalar> xs, ys;
                for (long i = 0; i <= k; ++i) {
                    xs.emplace_back(corner[0] + sx * i);
                    ys.emplace_back(corner[1] + sy * i);
                }
                p = interpolate_2d(xs, ys, [&](std::size_t i, std::size_t j) {
                    return f.at(MultiIndex{corner[0] + sx * static_cast<long>(i), corner[1] + sy * static_cast<long>(j)});
                });
            }
        if (!p) throw std::invalid_argument("detect_polynomial: no corner triangle lies inside the domain");

        bool agrees = true;
        for (const auto& [s, v] : f.samples())
            if (p->evaluate(s) != v) {
                last.emplace("interpolant of degree " + std::to_string(k) + " disagrees at " + s.to_string(), s,
                             std::pair{k + 1, 0L});
                agrees = false;
                break;
            }
        if (agrees) return *p;
    }
    throw *last;
}

namespace detail {

/// P(r + e_a) - P(r) in the monomial basis.
inline MonoPoly forward_difference(const MonoPoly& p, std::size_t a) {
    MonoPoly out;
    for (const auto& [k, m] : p) {
        for (long j = 0; j < k[a]; ++j) {
            MultiIndex e = k;
            e[a] = j;
            mono_add(out, e, Scalar(binomial(k[a], j)) * m);
        }
    }
    return out;
}

}  // namespace detail

/// Q with Q(r + e_a) - Q(r) = P(r) and Q|_{r_a = 0} = 0. Built from the Newton
/// expansion P = sum_j binom(r_a, j) p_j, giving Q = sum_j binom(r_a, j+1) p_j.
inline MatrixPoly antiderivative(const MatrixPoly& p, std::size_t a) {
    std::size_t n = p.variables();
    if (a >= n) throw std::out_of_range("antiderivative: direction out of range");
    detail::MonoPoly cur = p.monomial(), q;
    // binom(r_a, j+1) as a scalar polynomial in r_a, carried as coefficients of r_a^e
    std::vector<Scalar> binom_poly{Scalar(0), Scalar(1)};  // binom(r_a, 1) = r_a
    for (long j = 0; !cur.empty(); ++j) {
        for (const auto& [k, m] : cur) {
            if (k[a] != 0) continue;  // p_j = (Delta^j P)|_{r_a = 0}
            for (std::size_t e = 0; e < binom_poly.size(); ++e) {
                if (binom_poly[e].is_zero()) continue;
                MultiIndex ke = k;
                ke[a] = static_cast<long>(e);
                detail::mono_add(q, ke, binom_poly[e] * m);
            }
        }
        cur = detail::forward_difference(cur, a);
        // binom(r, j+2) = binom(r, j+1) * (r - (j+1)) / (j+2)
        std::vector<Scalar> next(binom_poly.size() + 1);
        Scalar shift(j + 1), inv = Scalar::fraction(1, j + 2);
        for (std::size_t e = 0; e < binom_poly.size(); ++e) {
            next[e + 1] += binom_poly[e] * inv;
            next[e] -= binom_poly[e] * shift * inv;
        }
        binom_poly = std::move(next);
    }
    return MatrixPoly::from_monomial(n, p.rows(), p.cols(), q);
}

}  // namespace torusmod

#endif  // TORUSMOD_DIFFERENCE_HPP
