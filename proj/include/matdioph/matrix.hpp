#pragma once

// Square matrices with exact entries, the distinguished matrices used by the
// reductions (elementary, transposition, companion of X^n - 2), and the
// zero-pattern substructures of M_n.
//
// Paper-facing functions take 1-based indices (elementary(n, i, j),
// project_ii(A, i), SubstructureSpec::index). Matrix::at is 0-based.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "number.hpp"

namespace matdioph {

/// Entry domain. Membership is a predicate on entries: NAT ⊂ INT ⊂ RAT.
enum class Domain { Nat, Int, Rat };

inline std::string_view to_string(Domain d) {
    switch (d) {
        case Domain::Nat: return "nat";
        case Domain::Int: return "int";
        case Domain::Rat: return "rat";
    }
    return "?";
}

inline Domain parse_domain(std::string_view s) {
    if (s == "nat") return Domain::Nat;
    if (s == "int") return Domain::Int;
    if (s == "rat") return Domain::Rat;
    throw Error("unknown domain '" + std::string(s) + "' (expected nat, int or rat)");
}

inline bool in_domain(const Rational& x, Domain d) {
    switch (d) {
        case Domain::Nat: return is_integer(x) && x >= 0;
        case Domain::Int: return is_integer(x);
        case Domain::Rat: return true;
    }
    return false;
}

inline bool in_domain(const BigInt& x, Domain d) { return d != Domain::Nat || x >= 0; }

template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() : Matrix(1) {}

    /// n×n zero matrix.
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(0)) {
        if (n == 0) throw DimensionError("matrix dimension must be at least 1");
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows) : Matrix(rows.size()) {
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != n_) throw DimensionError("matrix rows must all have length " + std::to_string(n_));
            std::size_t c = 0;
            for (const auto& x : row) at(r, c++) = x;
            ++r;
        }
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) throw DimensionError("matrix must have at least one row");
        Matrix m(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != rows.size())
                throw DimensionError("matrix is not square: row " + std::to_string(r + 1) + " has " +
                                     std::to_string(rows[r].size()) + " entries, expected " +
                                     std::to_string(rows.size()));
            for (std::size_t c = 0; c < rows.size(); ++c) m.at(r, c) = rows[r][c];
        }
        return m;
    }

    static Matrix identity(std::size_t n) { return scalar(n, T(1)); }
    static Matrix zero(std::size_t n) { return Matrix(n); }

    static Matrix scalar(std::size_t n, const T& k) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = k;
        return m;
    }

    std::size_t n() const noexcept { return n_; }

    T& at(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    /// Row-major entries.
    const std::vector<T>& entries() const noexcept { return data_; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    template <class U>
    Matrix<U> cast() const {
        Matrix<U> out(n_);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) out.at(r, c) = U(at(r, c));
        return out;
    }

    Matrix& operator+=(const Matrix& rhs) {
        require_same(rhs, "+");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& rhs) {
        require_same(rhs, "-");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
        return *this;
    }

    Matrix& operator*=(const T& k) {
        for (auto& x : data_) x *= k;
        return *this;
    }

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, const T& k) { return lhs *= k; }
    friend Matrix operator*(const T& k, Matrix rhs) { return rhs *= k; }

    friend Matrix operator-(Matrix m) {
        for (auto& x : m.data_) x = -x;
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.require_same(b, "*");
        const std::size_t n = a.n_;
        Matrix out(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k) {
                const T& ark = a.at(r, k);
                if (ark == 0) continue;
                for (std::size_t c = 0; c < n; ++c) out.at(r, c) += ark * b.at(k, c);
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

    friend bool operator<(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.data_ < b.data_;
    }

private:
    void require_same(const Matrix& rhs, const char* op) const {
        if (n_ != rhs.n_)
            throw DimensionError(std::string("dimension mismatch in '") + op + "': " + std::to_string(n_) + " vs " +
                                 std::to_string(rhs.n_));
    }

    std::size_t n_;
    std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using IntMatrix = Matrix<BigInt>;

template <class T>
Matrix<T> mat_add(const Matrix<T>& a, const Matrix<T>& b) { return a + b; }
template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) { return a * b; }
template <class T>
Matrix<T> mat_scale(const Matrix<T>& a, const T& k) { return a * k; }

template <class T = Rational>
Matrix<T> identity(std::size_t n) { return Matrix<T>::identity(n); }
template <class T = Rational>
Matrix<T> zero(std::size_t n) { return Matrix<T>::zero(n); }

template <class T>
Matrix<T> mat_pow(const Matrix<T>& a, unsigned k) {
    Matrix<T> result = Matrix<T>::identity(a.n());
    Matrix<T> base = a;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

template <class T>
bool in_domain(const Matrix<T>& a, Domain d) {
    for (const auto& x : a.entries())
        if (!in_domain(x, d)) return false;
    return true;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> out(a.n());
    for (std::size_t r = 0; r < a.n(); ++r)
        for (std::size_t c = 0; c < a.n(); ++c) out.at(c, r) = a.at(r, c);
    return out;
}

/// Integral view of a rational matrix; throws if any entry is fractional.
inline IntMatrix to_int_matrix(const ExactMatrix& a) {
    IntMatrix out(a.n());
    for (std::size_t r = 0; r < a.n(); ++r)
        for (std::size_t c = 0; c < a.n(); ++c) {
            const Rational& x = a.at(r, c);
            if (!is_integer(x)) throw Error("matrix entry " + to_string(x) + " is not an integer");
            out.at(r, c) = numerator(x);
        }
    return out;
}

inline ExactMatrix to_exact(const IntMatrix& a) { return a.cast<Rational>(); }

namespace detail {

inline void check_index(std::size_t n, std::size_t i, const char* what) {
    if (i < 1 || i > n)
        throw DimensionError(std::string(what) + " index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

}  // namespace detail

/// E_{i,j}: a single 1 at (i, j), 1-based.
template <class T = Rational>
Matrix<T> elementary(std::size_t n, std::size_t i, std::size_t j) {
    detail::check_index(n, i, "row");
    detail::check_index(n, j, "column");
    Matrix<T> m(n);
    m.at(i - 1, j - 1) = T(1);
    return m;
}

/// Permutation matrix of the transposition (i j).
template <class T = Rational>
Matrix<T> transposition_matrix(std::size_t n, std::size_t i, std::size_t j) {
    detail::check_index(n, i, "transposition");
    detail::check_index(n, j, "transposition");
    if (i == j) throw Error("transposition requires distinct indices, got (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
    Matrix<T> m = Matrix<T>::identity(n);
    m.at(i - 1, i - 1) = T(0);
    m.at(j - 1, j - 1) = T(0);
    m.at(i - 1, j - 1) = T(1);
    m.at(j - 1, i - 1) = T(1);
    return m;
}

/// The matrix with ones on the superdiagonal and 2 at (n, 1); its n-th power is 2·I_n.
template <class T = Rational>
Matrix<T> companion_xn_minus_2(std::size_t n) {
    Matrix<T> m(n);
    for (std::size_t r = 0; r + 1 < n; ++r) m.at(r, r + 1) = T(1);
    m.at(n - 1, 0) += T(2);
    return m;
}

template <class T = Rational>
Matrix<T> all_ones(std::size_t n) {
    Matrix<T> m(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = T(1);
    return m;
}

template <class T>
bool commutes(const Matrix<T>& a, const Matrix<T>& b) { return a * b == b * a; }

/// π_{i,i}: the (i, i) entry, 1-based.
template <class T>
T project_ii(const Matrix<T>& a, std::size_t i) {
    detail::check_index(a.n(), i, "projection");
    return a.at(i - 1, i - 1);
}

/// A == A(1,1)·I_n, checked entrywise.
template <class T>
bool is_scalar_direct(const Matrix<T>& a) {
    return a == Matrix<T>::scalar(a.n(), a.at(0, 0));
}

/// Scalar test through commutation: A commutes with every E_{i,i} (diagonal)
/// and with the all-ones matrix (constant diagonal).
template <class T>
bool is_scalar_via_commutation(const Matrix<T>& a) {
    const std::size_t n = a.n();
    for (std::size_t i = 1; i <= n; ++i)
        if (!commutes(a, elementary<T>(n, i, i))) return false;
    return commutes(a, all_ones<T>(n));
}

// ---------------------------------------------------------------------------
// Zero-pattern substructures

enum class SubstructureKind { Diag, UpperTri, Sigma, Gamma, Lambda, Rect, DoubleRect };

struct SubstructureSpec {
    SubstructureKind kind = SubstructureKind::Diag;
    std::size_t index = 0;  // 1-based; unused for Diag and UpperTri

    bool indexed() const { return kind != SubstructureKind::Diag && kind != SubstructureKind::UpperTri; }

    friend bool operator==(const SubstructureSpec&, const SubstructureSpec&) = default;
};

inline std::string to_string(const SubstructureSpec& s) {
    std::string name;
    switch (s.kind) {
        case SubstructureKind::Diag: return "diag";
        case SubstructureKind::UpperTri: return "upper";
        case SubstructureKind::Sigma: name = "sigma"; break;
        case SubstructureKind::Gamma: name = "gamma"; break;
        case SubstructureKind::Lambda: name = "lambda"; break;
        case SubstructureKind::Rect: name = "rect"; break;
        case SubstructureKind::DoubleRect: name = "rrect"; break;
    }
    return name + ":" + std::to_string(s.index);
}

/// Accepts "diag", "upper", and "<kind>:<i>" for sigma, gamma, lambda, rect, rrect.
inline SubstructureSpec parse_substructure(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    SubstructureSpec spec;
    if (name == "diag") spec.kind = SubstructureKind::Diag;
    else if (name == "upper") spec.kind = SubstructureKind::UpperTri;
    else if (name == "sigma") spec.kind = SubstructureKind::Sigma;
    else if (name == "gamma") spec.kind = SubstructureKind::Gamma;
    else if (name == "lambda") spec.kind = SubstructureKind::Lambda;
    else if (name == "rect") spec.kind = SubstructureKind::Rect;
    else if (name == "rrect") spec.kind = SubstructureKind::DoubleRect;
    else throw Error("unknown substructure '" + std::string(name) + "'");
    if (spec.indexed()) {
        if (colon == std::string_view::npos) throw Error("substructure '" + std::string(name) + "' needs an index, e.g. " +
                                                          std::string(name) + ":1");
        const BigInt i = parse_bigint(text.substr(colon + 1));
        if (i < 1) throw Error("substructure index must be at least 1");
        spec.index = static_cast<std::size_t>(to_int64(i));
    } else if (colon != std::string_view::npos) {
        throw Error("substructure '" + std::string(name) + "' takes no index");
    }
    return spec;
}

/// True when the pattern forces entry (r, c), 1-based, to be zero in dimension n.
inline bool forced_zero(const SubstructureSpec& s, std::size_t n, std::size_t r, std::size_t c) {
    if (s.indexed()) detail::check_index(n, s.index, "substructure");
    const std::size_t i = s.index;
    const bool at_pivot = r == i && c == i;
    switch (s.kind) {
        case SubstructureKind::Diag: return r != c;
        case SubstructureKind::UpperTri: return r > c;
        case SubstructureKind::Sigma: return !at_pivot && (r == i || c == i);
        case SubstructureKind::Gamma: return !at_pivot && c == i;
        case SubstructureKind::Lambda: return !at_pivot && r == i;
        case SubstructureKind::Rect: return !at_pivot && r >= i && c <= i;
        case SubstructureKind::DoubleRect: return !at_pivot && ((r >= i && c <= i) || (r <= i && c >= i));
    }
    return false;
}

template <class T>
bool in_substructure(const Matrix<T>& a, const SubstructureSpec& s) {
    const std::size_t n = a.n();
    for (std::size_t r = 1; r <= n; ++r)
        for (std::size_t c = 1; c <= n; ++c)
            if (forced_zero(s, n, r, c) && a.at(r - 1, c - 1) != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Dimension lattice for X^n - 2

/// X^n - 2 = 0 is solvable in M_m(N) exactly when n divides m.
inline bool xn2_solvable(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) throw Error("xn2_solvable requires n, m >= 1");
    return m % n == 0;
}

/// δ: block-diagonal copy of `a`, k times.
template <class T>
Matrix<T> delta_embed(const Matrix<T>& a, std::size_t k) {
    if (k == 0) throw Error("delta embedding multiplicity must be at least 1");
    const std::size_t n = a.n();
    Matrix<T> out(n * k);
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) out.at(b * n + r, b * n + c) = a.at(r, c);
    return out;
}

/// γ: `a` in the upper-left corner of an m×m zero matrix. Not unital for m > n.
template <class T>
Matrix<T> gamma_embed(const Matrix<T>& a, std::size_t m) {
    if (m < a.n())
        throw DimensionError("gamma embedding target " + std::to_string(m) + " is smaller than " + std::to_string(a.n()));
    Matrix<T> out(m);
    for (std::size_t r = 0; r < a.n(); ++r)
        for (std::size_t c = 0; c < a.n(); ++c) out.at(r, c) = a.at(r, c);
    return out;
}

/// Constructive witness for X^n - 2 in M_m(N): δ(companion(n), m/n), or nothing when n ∤ m.
template <class T = Rational>
std::optional<Matrix<T>> xn2_witness(std::size_t n, std::size_t m) {
    if (!xn2_solvable(n, m)) return std::nullopt;
    return delta_embed(companion_xn_minus_2<T>(n), m / n);
}

}  // namespace matdioph
