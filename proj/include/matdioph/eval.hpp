#pragma once

// Matrix semantics of polynomials: words are evaluated left to right, the
// empty word is I_n and an integer coefficient k acts as k·I_n.

#include <cstddef>
#include <map>
#include <string>

#include "error.hpp"
#include "matrix.hpp"
#include "ncpoly.hpp"
#include "number.hpp"

namespace matdioph {

template <class T>
using Assignment = std::map<VarSymbol, Matrix<T>>;

/// Variable-to-matrix assignment in a fixed dimension and domain.
struct Witness {
    std::size_t n = 1;
    Domain domain = Domain::Nat;
    Assignment<Rational> assignment;

    const ExactMatrix& at(const VarSymbol& v) const {
        auto it = assignment.find(v);
        if (it == assignment.end()) throw MissingAssignmentError(v.name());
        return it->second;
    }

    /// Every matrix is n×n and inside the domain.
    bool well_formed() const {
        for (const auto& [v, m] : assignment)
            if (m.n() != n || !in_domain(m, domain)) return false;
        return true;
    }

    friend bool operator==(const Witness&, const Witness&) = default;
};

template <class T>
Matrix<T> eval_word(const Word& w, const Assignment<T>& values, std::size_t n) {
    if (w.empty()) return Matrix<T>::identity(n);
    auto lookup = [&](const VarSymbol& v) -> const Matrix<T>& {
        auto it = values.find(v);
        if (it == values.end()) throw MissingAssignmentError(v.name());
        if (it->second.n() != n)
            throw DimensionError("variable '" + v.name() + "' is " + std::to_string(it->second.n()) + "x" +
                                 std::to_string(it->second.n()) + ", expected " + std::to_string(n) + "x" +
                                 std::to_string(n));
        return it->second;
    };
    Matrix<T> product = lookup(w.letters().front());
    for (std::size_t k = 1; k < w.length(); ++k) product = product * lookup(w.letters()[k]);
    return product;
}

template <class T>
Matrix<T> eval_poly(const NCPolynomial& p, const Assignment<T>& values, std::size_t n) {
    Matrix<T> sum(n);
    for (const auto& t : p.terms()) {
        Matrix<T> value = eval_word(t.word, values, n);
        value *= T(t.coeff);
        sum += value;
    }
    return sum;
}

inline ExactMatrix eval_poly(const NCPolynomial& p, const Witness& w) { return eval_poly(p, w.assignment, w.n); }

/// Commutative scalar value of p; word order is irrelevant here.
template <class T>
T eval_scalar(const NCPolynomial& p, const std::map<VarSymbol, T>& values) {
    T sum = 0;
    for (const auto& t : p.terms()) {
        T prod = T(t.coeff);
        for (const auto& v : t.word.letters()) {
            auto it = values.find(v);
            if (it == values.end()) throw MissingAssignmentError(v.name());
            prod *= it->second;
        }
        sum += prod;
    }
    return sum;
}

}  // namespace matdioph
