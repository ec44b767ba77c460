#pragma once

// Univariate polynomials over Q and the matrix invariants built on them:
// characteristic polynomial, minimal polynomial, Eisenstein's criterion.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "number.hpp"

namespace matdioph {

class UniPoly {
public:
    UniPoly() = default;

    /// Coefficients lowest degree first; trailing zeros are dropped.
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    /// X^k.
    static UniPoly monomial(std::size_t k, const Rational& c = 1) {
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = c;
        return UniPoly(std::move(v));
    }

    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Rational& leading() const { return c_.back(); }

    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    bool has_integer_coeffs() const {
        for (const auto& x : c_)
            if (!is_integer(x)) return false;
        return true;
    }

    UniPoly monic() const {
        if (is_zero()) throw Error("the zero polynomial has no monic associate");
        std::vector<Rational> v = c_;
        const Rational lead = c_.back();
        for (auto& x : v) x /= lead;
        return UniPoly(std::move(v));
    }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
        return UniPoly(std::move(v));
    }

    friend UniPoly operator-(const UniPoly& a) {
        std::vector<Rational> v = a.c_;
        for (auto& x : v) x = -x;
        return UniPoly(std::move(v));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(v));
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// X^n - 2.
inline UniPoly xn_minus_2(std::size_t n) {
    UniPoly p = UniPoly::monomial(n);
    return p - UniPoly{Rational(2)};
}

/// Long division over Q: a = q·b + r with deg r < deg b.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    for (int k = a.degree(); k >= db; --k) {
        const Rational factor = rem[static_cast<std::size_t>(k)] / b.leading();
        if (factor == 0) continue;
        quot[static_cast<std::size_t>(k - db)] = factor;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

inline bool divides(const UniPoly& d, const UniPoly& p) { return divmod(p, d).second.is_zero(); }

/// ξ(f) = f(A) = a_0·I + a_1·A + … by Horner's rule.
inline ExactMatrix eval_at(const UniPoly& p, const ExactMatrix& a) {
    ExactMatrix acc(a.n());
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + ExactMatrix::scalar(a.n(), *it);
    return acc;
}

inline std::string to_string(const UniPoly& p, const std::string& var = "X") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        if (k == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1) out += to_string(mag) + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

/// χ_A(X) = det(X·I - A) by Faddeev–LeVerrier. Each step divides by the step
/// index only, and those divisions are exact for integer matrices.
template <class T>
UniPoly char_poly(const Matrix<T>& input) {
    const ExactMatrix a = input.template cast<Rational>();
    const std::size_t n = a.n();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    ExactMatrix m(n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + ExactMatrix::scalar(n, c[n - k + 1]);
        const ExactMatrix am = a * m;
        Rational trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += am.at(i, i);
        c[n - k] = -trace / Rational(static_cast<long long>(k));
    }
    return UniPoly(std::move(c));
}

namespace detail {

/// Solves Σ_j x_j·cols[j] = rhs exactly over Q; nullopt when inconsistent.
inline std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                          const std::vector<Rational>& rhs) {
    const std::size_t rows = rhs.size();
    const std::size_t unknowns = cols.size();
    std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(unknowns + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < unknowns; ++j) aug[r][j] = cols[j][r];
        aug[r][unknowns] = rhs[r];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < unknowns && rank < rows; ++j) {
        std::size_t p = rank;
        while (p < rows && aug[p][j] == 0) ++p;
        if (p == rows) continue;
        std::swap(aug[p], aug[rank]);
        const Rational inv = 1 / aug[rank][j];
        for (auto& x : aug[rank]) x *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || aug[r][j] == 0) continue;
            const Rational f = aug[r][j];
            for (std::size_t k = j; k <= unknowns; ++k) aug[r][k] -= f * aug[rank][k];
        }
        pivot_col.push_back(j);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (aug[r][unknowns] != 0) return std::nullopt;
    std::vector<Rational> x(unknowns, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = aug[r][unknowns];
    return x;
}

inline std::vector<Rational> vectorize(const ExactMatrix& a) { return a.entries(); }

}  // namespace detail

/// μ_A: the monic polynomial of least degree d with A^d in span(I, A, …, A^{d-1}).
template <class T>
UniPoly min_poly(const Matrix<T>& input) {
    const ExactMatrix a = input.template cast<Rational>();
    const std::size_t n = a.n();
    std::vector<std::vector<Rational>> powers{detail::vectorize(ExactMatrix::identity(n))};
    ExactMatrix power = ExactMatrix::identity(n);
    for (std::size_t d = 1; d <= n; ++d) {
        power = power * a;
        const auto rhs = detail::vectorize(power);
        if (auto sol = detail::solve_columns(powers, rhs)) {
            std::vector<Rational> c(d + 1, Rational(0));
            for (std::size_t j = 0; j < d; ++j) c[j] = -(*sol)[j];
            c[d] = 1;
            UniPoly mu(std::move(c));
            if (!divides(mu, char_poly(a)))
                throw std::logic_error("minimal polynomial " + to_string(mu) + " does not divide the characteristic polynomial");
            return mu;
        }
        powers.push_back(rhs);
    }
    throw std::logic_error("no linear dependency among I, A, ..., A^n (Cayley-Hamilton violated)");
}

inline bool is_prime(const BigInt& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (BigInt d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

/// Eisenstein's criterion at `prime`: p ∤ a_n, p | a_i for i < n, p² ∤ a_0.
inline bool eisenstein_check(const UniPoly& p, const BigInt& prime) {
    if (!is_prime(prime)) throw Error("eisenstein_check: " + prime.str() + " is not prime");
    if (p.degree() < 1) throw Error("eisenstein_check: polynomial must have degree at least 1");
    if (!p.has_integer_coeffs()) throw Error("eisenstein_check: coefficients must be integers");
    const auto& c = p.coeffs();
    const std::size_t n = c.size() - 1;
    if (numerator(c[n]) % prime == 0) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (numerator(c[i]) % prime != 0) return false;
    return numerator(c[0]) % (prime * prime) != 0;
}

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt x) {
    if (x < 0) x = -x;
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= x; ++d) {
        if (x % d != 0) continue;
        small.push_back(d);
        if (d * d != x) large.push_back(x / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace detail

/// All distinct rational roots, ascending (rational root theorem).
inline std::vector<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw Error("the zero polynomial has every rational number as a root");
    // Scale to integer coefficients.
    BigInt lcm = 1;
    for (const auto& c : p.coeffs()) {
        const BigInt d = denominator(c);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    std::vector<BigInt> a;
    for (const auto& c : p.coeffs()) a.push_back(numerator(c * Rational(lcm)));
    std::set<Rational> roots;
    std::size_t shift = 0;
    while (shift < a.size() && a[shift] == 0) ++shift;
    if (shift > 0) roots.insert(Rational(0));
    const std::vector<BigInt> trimmed(a.begin() + static_cast<std::ptrdiff_t>(shift), a.end());
    if (trimmed.size() > 1) {
        std::vector<Rational> rc(trimmed.begin(), trimmed.end());
        const UniPoly q(std::move(rc));
        for (const auto& num : detail::positive_divisors(trimmed.front()))
            for (const auto& den : detail::positive_divisors(trimmed.back()))
                for (int sign : {1, -1}) {
                    const Rational cand(BigInt(sign * num), den);
                    if (q(cand) == 0) roots.insert(cand);
                }
    }
    return {roots.begin(), roots.end()};
}

}  // namespace matdioph
