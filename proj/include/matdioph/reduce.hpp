#pragma once

// Reductions between scalar Diophantine problems and matrix systems:
//
//  * the pinning system whose solutions force Y = E_{i,i},
//  * the embedding of f(x_1..x_k) = 0 over N into a system over M_n(N),
//    with witness builders in both directions,
//  * the E-parameter transform f ↦ f̃,
//  * additive-basis variable splitting,
//  * the δ (block-diagonal) and γ (corner) embeddings, see matrix.hpp.

#include <array>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "eval.hpp"
#include "matrix.hpp"
#include "ncpoly.hpp"
#include "number.hpp"
#include "verify.hpp"

namespace matdioph {

// ---------------------------------------------------------------------------
// Scalar equations

/// f ∈ Z[x_1..x_k] read with commuting variables. Words are stored with
/// their letters sorted, so xy and yx are the same monomial.
class ScalarEquation {
public:
    explicit ScalarEquation(const NCPolynomial& f) : ScalarEquation(f, f.variables()) {}

    ScalarEquation(const NCPolynomial& f, std::vector<VarSymbol> vars) : vars_(std::move(vars)) {
        std::vector<Term> terms;
        for (const auto& t : f.terms()) {
            std::vector<VarSymbol> letters = t.word.letters();
            std::sort(letters.begin(), letters.end());
            terms.push_back(Term{t.coeff, Word(std::move(letters))});
        }
        poly_ = NCPolynomial::from_terms(std::move(terms));
        std::set<VarSymbol> listed;
        for (const auto& v : vars_)
            if (!listed.insert(v).second) throw Error("scalar variable '" + v.name() + "' listed twice");
        for (const auto& v : poly_.variables())
            if (!listed.count(v)) throw Error("scalar variable '" + v.name() + "' missing from the variable list");
    }

    /// Variables ordered by first appearance in `text`.
    static ScalarEquation parse(std::string_view text) {
        detail::PolyParser parser(text);
        NCPolynomial p = parser.whole_poly();
        return ScalarEquation(p, parser.appearance_order());
    }

    const NCPolynomial& poly() const noexcept { return poly_; }
    const std::vector<VarSymbol>& vars() const noexcept { return vars_; }

    BigInt value(const std::map<VarSymbol, BigInt>& at) const { return eval_scalar(poly_, at); }

private:
    NCPolynomial poly_;
    std::vector<VarSymbol> vars_;
};

using ScalarSolution = std::map<VarSymbol, BigInt>;

namespace detail {

inline VarSymbol fresh_symbol(const std::string& base, std::set<VarSymbol>& taken) {
    std::string name = base;
    while (taken.count(VarSymbol(name))) name += "_";
    VarSymbol v(name);
    taken.insert(v);
    return v;
}

}  // namespace detail

/// Matrix-side name of each scalar variable: the name with its first letter
/// upper-cased (x ↦ X), unless that would merge two variables, in which case
/// every name is kept as is.
inline std::vector<std::pair<VarSymbol, VarSymbol>> matrix_names(const ScalarEquation& f) {
    std::vector<std::pair<VarSymbol, VarSymbol>> out;
    std::set<VarSymbol> originals(f.vars().begin(), f.vars().end());
    std::set<VarSymbol> images;
    bool injective = true;
    for (const auto& v : f.vars()) {
        std::string name = v.name();
        name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
        VarSymbol image(name);
        if (!images.insert(image).second || (image != v && originals.count(image))) injective = false;
        out.emplace_back(v, image);
    }
    if (!injective)
        for (auto& [v, image] : out) image = v;
    return out;
}

// ---------------------------------------------------------------------------
// Pinning system

struct PinSymbols {
    VarSymbol y;
    std::vector<VarSymbol> swaps;  // A_1 … A_{n-1}
};

inline PinSymbols pin_symbols(std::size_t n, std::set<VarSymbol>& taken) {
    if (n == 0) throw Error("dimension must be at least 1");
    PinSymbols s{detail::fresh_symbol("Y", taken), {}};
    for (std::size_t k = 1; k < n; ++k) s.swaps.push_back(detail::fresh_symbol("A" + std::to_string(k), taken));
    return s;
}

/// Y + A_1·Y·A_1 + … + A_{n-1}·Y·A_{n-1} - 1 and A_1²·…·A_{n-1}² - 1.
/// For n = 1 only Y - 1 remains.
inline std::vector<NCPolynomial> pin_equations(const PinSymbols& s) {
    const NCPolynomial y = NCPolynomial::variable(s.y);
    NCPolynomial decomposition = y;
    std::vector<VarSymbol> squares;
    for (const auto& a : s.swaps) {
        const NCPolynomial av = NCPolynomial::variable(a);
        decomposition = decomposition + av * y * av;
        squares.push_back(a);
        squares.push_back(a);
    }
    std::vector<NCPolynomial> eqs{decomposition - NCPolynomial::constant(1)};
    if (!s.swaps.empty()) eqs.push_back(NCPolynomial::monomial(1, Word(squares)) - NCPolynomial::constant(1));
    return eqs;
}

inline EquationSystem diag_pin_system(std::size_t n) {
    std::set<VarSymbol> taken;
    const PinSymbols s = pin_symbols(n, taken);
    std::vector<VarSymbol> vars{s.y};
    vars.insert(vars.end(), s.swaps.begin(), s.swaps.end());
    return EquationSystem(pin_equations(s), std::move(vars));
}

namespace detail {

inline void fill_pin_witness(Witness& w, const PinSymbols& s, std::size_t i) {
    const std::size_t n = w.n;
    check_index(n, i, "pinning");
    w.assignment.insert_or_assign(s.y, elementary(n, i, i));
    std::size_t k = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        if (j == i) continue;
        w.assignment.insert_or_assign(s.swaps[k++], transposition_matrix(n, i, j));
    }
}

}  // namespace detail

/// Y = E_{i,i}; A_1 … A_{n-1} are the transpositions (i j), j ≠ i ascending.
inline Witness pin_witness(std::size_t n, std::size_t i) {
    std::set<VarSymbol> taken;
    const PinSymbols s = pin_symbols(n, taken);
    Witness w{n, Domain::Nat, {}};
    detail::fill_pin_witness(w, s, i);
    return w;
}

// ---------------------------------------------------------------------------
// Embedding a scalar equation into M_n(N)

struct ScalarEmbedding {
    EquationSystem system;
    std::size_t n = 1;
    PinSymbols pin;
    /// Scalar variable ↦ matrix variable, in the scalar equation's order.
    std::vector<std::pair<VarSymbol, VarSymbol>> varmap;
};

/// Pinning pair, the commutators X_j·Y - Y·X_j (n ≥ 2 only) and f(X_1..X_k).
/// That is 2 + k + 1 equations for n ≥ 2 and 2 for n = 1.
inline ScalarEmbedding embed_scalar_equation(const ScalarEquation& f, std::size_t n) {
    auto varmap = matrix_names(f);
    std::set<VarSymbol> taken;
    for (const auto& [scalar, matrix] : varmap) {
        taken.insert(scalar);
        taken.insert(matrix);
    }
    PinSymbols pin = pin_symbols(n, taken);

    std::vector<NCPolynomial> eqs = pin_equations(pin);
    const NCPolynomial y = NCPolynomial::variable(pin.y);
    if (n >= 2)
        for (const auto& [scalar, matrix] : varmap) {
            const NCPolynomial x = NCPolynomial::variable(matrix);
            eqs.push_back(x * y - y * x);
        }
    std::map<VarSymbol, VarSymbol> renaming(varmap.begin(), varmap.end());
    eqs.push_back(rename(f.poly(), renaming));

    std::vector<VarSymbol> vars{pin.y};
    vars.insert(vars.end(), pin.swaps.begin(), pin.swaps.end());
    for (const auto& [scalar, matrix] : varmap) vars.push_back(matrix);
    EquationSystem sys(std::move(eqs), std::move(vars));
    return ScalarEmbedding{std::move(sys), n, std::move(pin), std::move(varmap)};
}

/// X_j = x_j·I_n together with pin_witness(n, i). Rejects non-solutions.
inline Witness witness_from_scalar(const ScalarSolution& sol, const ScalarEquation& f, std::size_t n,
                                   std::size_t i = 1, Domain domain = Domain::Nat) {
    for (const auto& v : f.vars())
        if (!sol.count(v)) throw MissingAssignmentError(v.name());
    const BigInt value = f.value(sol);
    if (value != 0) throw Error("not a solution: f evaluates to " + value.str());
    const ScalarEmbedding emb = embed_scalar_equation(f, n);
    Witness w{n, domain, {}};
    detail::fill_pin_witness(w, emb.pin, i);
    for (const auto& [scalar, matrix] : emb.varmap) {
        const BigInt& x = sol.at(scalar);
        if (!in_domain(x, domain)) throw Error("value " + x.str() + " of '" + scalar.name() + "' is outside the domain");
        w.assignment.insert_or_assign(matrix, ExactMatrix::scalar(n, Rational(x)));
    }
    return w;
}

/// Recovers (π_{i,i}(X_1), …, π_{i,i}(X_k)) from a witness of the embedded system,
/// where i is read off Y = E_{i,i}.
inline ScalarSolution project_witness(const Witness& w, const ScalarEquation& f) {
    const ScalarEmbedding emb = embed_scalar_equation(f, w.n);
    const VerifyReport report = verify_witness(emb.system, w);
    if (!report.pass) throw InvalidWitnessError("witness does not satisfy the embedded system");
    const ExactMatrix& y = w.at(emb.pin.y);
    std::size_t pin_index = 0;
    for (std::size_t i = 1; i <= w.n; ++i)
        if (y == elementary(w.n, i, i)) pin_index = i;
    if (pin_index == 0) throw InvalidWitnessError("Y is not an elementary diagonal matrix");
    const SubstructureSpec sigma{SubstructureKind::Sigma, pin_index};
    ScalarSolution out;
    for (const auto& [scalar, matrix] : emb.varmap) {
        const ExactMatrix& x = w.at(matrix);
        if (!in_substructure(x, sigma))
            throw InvalidWitnessError("'" + matrix.name() + "' is not in Sigma_" + std::to_string(pin_index));
        const Rational entry = project_ii(x, pin_index);
        if (!is_integer(entry)) throw InvalidWitnessError("projection of '" + matrix.name() + "' is not an integer");
        out.emplace(scalar, numerator(entry));
    }
    return out;
}

/// Index i with Y = E_{i,i} in a witness of an embedded system, or 0.
inline std::size_t pin_index_of(const Witness& w, const ScalarEmbedding& emb) {
    auto it = w.assignment.find(emb.pin.y);
    if (it == w.assignment.end()) return 0;
    for (std::size_t i = 1; i <= w.n; ++i)
        if (it->second == elementary(w.n, i, i)) return i;
    return 0;
}

// ---------------------------------------------------------------------------
// The E-parameter transform

/// x_{i1}…x_{is} ↦ E·X_{i1}·E·X_{i2}·E…E·X_{is}·E and k ↦ k·E.
inline NCPolynomial tilde_transform(const ScalarEquation& f, const VarSymbol& e) {
    const auto varmap = matrix_names(f);
    for (const auto& [scalar, matrix] : varmap)
        if (scalar == e || matrix == e) throw Error("parameter '" + e.name() + "' already occurs in f");
    std::map<VarSymbol, VarSymbol> renaming(varmap.begin(), varmap.end());
    std::vector<Term> terms;
    for (const auto& t : f.poly().terms()) {
        std::vector<VarSymbol> letters{e};
        for (const auto& v : t.word.letters()) {
            letters.push_back(renaming.at(v));
            letters.push_back(e);
        }
        terms.push_back(Term{t.coeff, Word(std::move(letters))});
    }
    return NCPolynomial::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Additive bases and variable splitting

/// B ⊆ N with every natural number a sum of `order` elements of B.
struct AdditiveBasis {
    std::string name;
    std::size_t order = 1;
    bool contains_zero = false;
    bool contains_one = false;
    std::function<bool(const BigInt&)> member;
    std::function<std::vector<BigInt>(const BigInt&)> decompose;
};

namespace detail {

/// Legendre: r is a sum of three squares unless r = 4^k (8m + 7).
inline bool three_square_representable(BigInt r) {
    if (r == 0) return true;
    while (r % 4 == 0) r /= 4;
    return r % 8 != 7;
}

}  // namespace detail

/// a ≥ b ≥ c ≥ d ≥ 0 with a² + b² + c² + d² = x, by descending search with backtracking.
inline std::array<BigInt, 4> four_square_decompose(const BigInt& x) {
    using boost::multiprecision::sqrt;
    if (x < 0) throw Error("four_square_decompose requires x >= 0");
    for (BigInt a = sqrt(x); a >= 0; --a) {
        if (4 * a * a < x) break;
        const BigInt r1 = x - a * a;
        if (!detail::three_square_representable(r1)) continue;
        for (BigInt b = std::min(a, BigInt(sqrt(r1))); b >= 0; --b) {
            if (3 * b * b < r1) break;
            const BigInt r2 = r1 - b * b;
            for (BigInt c = std::min(b, BigInt(sqrt(r2))); c >= 0; --c) {
                if (2 * c * c < r2) break;
                const BigInt r3 = r2 - c * c;
                const BigInt d = sqrt(r3);
                if (d * d == r3 && d <= c) return {a, b, c, d};
            }
        }
    }
    throw std::logic_error("no four-square decomposition of " + x.str());
}

inline bool is_perfect_square(const BigInt& x) {
    if (x < 0) return false;
    const BigInt r = boost::multiprecision::sqrt(x);
    return r * r == x;
}

/// Squares with d_B = 4, decomposed into the squares of four_square_decompose.
inline AdditiveBasis squares_basis() {
    AdditiveBasis b;
    b.name = "squares";
    b.order = 4;
    b.contains_zero = true;
    b.contains_one = true;
    b.member = is_perfect_square;
    b.decompose = [](const BigInt& x) {
        std::vector<BigInt> parts;
        for (const auto& r : four_square_decompose(x)) parts.push_back(r * r);
        return parts;
    };
    return b;
}

struct SplitSystem {
    EquationSystem system;
    std::size_t d = 1;
    /// Original variable ↦ its d summands, in varlist order.
    std::vector<std::pair<VarSymbol, std::vector<VarSymbol>>> parts;
};

/// Replaces each variable X by X__1 + … + X__d, with fresh names per variable.
inline SplitSystem basis_split(const EquationSystem& sys, std::size_t d) {
    if (d == 0) throw Error("split multiplicity must be at least 1");
    std::set<VarSymbol> taken(sys.varlist().begin(), sys.varlist().end());
    Substitution map;
    std::vector<std::pair<VarSymbol, std::vector<VarSymbol>>> parts;
    std::vector<VarSymbol> vars;
    for (const auto& v : sys.varlist()) {
        std::vector<VarSymbol> pieces;
        NCPolynomial sum;
        for (std::size_t k = 1; k <= d; ++k) {
            std::string base = v.name() + "__" + std::to_string(k);
            VarSymbol piece = detail::fresh_symbol(base, taken);
            sum = sum + NCPolynomial::variable(piece);
            pieces.push_back(piece);
            vars.push_back(piece);
        }
        map.emplace(v, sum);
        parts.emplace_back(v, std::move(pieces));
    }
    std::vector<NCPolynomial> eqs;
    for (const auto& eq : sys.equations()) eqs.push_back(substitute(eq, map));
    return SplitSystem{EquationSystem(std::move(eqs), std::move(vars)), d, std::move(parts)};
}

/// Transports a witness of S over M_n(N) to one of the split system over M_n(B)
/// by decomposing every entry in the basis.
inline Witness split_witness(const Witness& w, const SplitSystem& split, const AdditiveBasis& basis) {
    if (!basis.contains_zero || !basis.contains_one)
        throw Error("additive basis '" + basis.name + "' must contain 0 and 1");
    if (split.d < basis.order)
        throw Error("split multiplicity " + std::to_string(split.d) + " is below the basis order " +
                    std::to_string(basis.order));
    if (w.domain != Domain::Nat || !w.well_formed()) throw InvalidWitnessError("witness must be over M_n(N)");
    Witness out{w.n, Domain::Nat, {}};
    for (const auto& [v, pieces] : split.parts) {
        const IntMatrix c = to_int_matrix(w.at(v));
        std::vector<ExactMatrix> summands(pieces.size(), ExactMatrix(w.n));
        for (std::size_t r = 0; r < w.n; ++r)
            for (std::size_t col = 0; col < w.n; ++col) {
                const auto decomposition = basis.decompose(c.at(r, col));
                // Remaining summands take 0, which lies in B.
                for (std::size_t k = 0; k < decomposition.size(); ++k)
                    summands[k].at(r, col) = Rational(decomposition[k]);
            }
        for (std::size_t k = 0; k < pieces.size(); ++k) out.assignment.insert_or_assign(pieces[k], summands[k]);
    }
    return out;
}

/// Sums the parts of a split-system witness back into a witness of S.
inline Witness collapse_witness(const Witness& w, const SplitSystem& split) {
    Witness out{w.n, w.domain, {}};
    for (const auto& [v, pieces] : split.parts) {
        ExactMatrix sum(w.n);
        for (const auto& p : pieces) sum += w.at(p);
        out.assignment.insert_or_assign(v, sum);
    }
    return out;
}

/// Applies a matrix map to every matrix of a witness.
template <class F>
Witness map_witness(const Witness& w, std::size_t new_n, F&& f) {
    Witness out{new_n, w.domain, {}};
    for (const auto& [v, m] : w.assignment) out.assignment.insert_or_assign(v, f(m));
    return out;
}

inline Witness delta_embed(const Witness& w, std::size_t k) {
    return map_witness(w, w.n * k, [k](const ExactMatrix& m) { return delta_embed(m, k); });
}

inline Witness gamma_embed(const Witness& w, std::size_t m) {
    return map_witness(w, m, [m](const ExactMatrix& a) { return gamma_embed(a, m); });
}

}  // namespace matdioph
