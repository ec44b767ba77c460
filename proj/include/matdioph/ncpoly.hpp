#pragma once

// Non-commutative polynomials over Z: Z-linear combinations of words in the
// free monoid on variable symbols. AYA, A^2*Y and Y*A^2 are distinct words.
//
// Normal form: no zero coefficients, no repeated words, terms sorted by word
// length and then lexicographically by symbol name.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "number.hpp"

namespace matdioph {

inline bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    const auto head = static_cast<unsigned char>(s.front());
    if (!(std::isalpha(head) || head == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char ch) {
        const auto u = static_cast<unsigned char>(ch);
        return std::isalnum(u) || u == '_';
    });
}

class VarSymbol {
public:
    explicit VarSymbol(std::string name) : name_(std::move(name)) {
        if (!is_identifier(name_)) throw Error("invalid variable name '" + name_ + "'");
    }

    const std::string& name() const noexcept { return name_; }

    friend bool operator==(const VarSymbol&, const VarSymbol&) = default;
    friend auto operator<=>(const VarSymbol& a, const VarSymbol& b) { return a.name_ <=> b.name_; }

private:
    std::string name_;
};

/// A monomial: an ordered sequence of symbols; the empty word is the identity.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<VarSymbol> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<VarSymbol> letters) : letters_(letters) {}

    static Word of(std::initializer_list<std::string_view> names) {
        std::vector<VarSymbol> letters;
        for (auto n : names) letters.emplace_back(std::string(n));
        return Word(std::move(letters));
    }

    const std::vector<VarSymbol>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    friend Word operator*(const Word& a, const Word& b) {
        std::vector<VarSymbol> out = a.letters_;
        out.insert(out.end(), b.letters_.begin(), b.letters_.end());
        return Word(std::move(out));
    }

    friend bool operator==(const Word&, const Word&) = default;

    /// Graded order: shorter words first, then lexicographic on symbol names.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.length() != b.length()) return a.length() <=> b.length();
        for (std::size_t k = 0; k < a.length(); ++k)
            if (auto cmp = a.letters_[k] <=> b.letters_[k]; cmp != 0) return cmp;
        return std::strong_ordering::equal;
    }

private:
    std::vector<VarSymbol> letters_;
};

struct Term {
    BigInt coeff;
    Word word;

    friend bool operator==(const Term&, const Term&) = default;
};

class NCPolynomial {
public:
    /// The zero polynomial.
    NCPolynomial() = default;

    /// Normalizes an arbitrary list of terms.
    static NCPolynomial from_terms(std::vector<Term> terms) {
        std::map<Word, BigInt> acc;
        for (auto& t : terms) acc[std::move(t.word)] += t.coeff;
        NCPolynomial p;
        for (auto& [w, c] : acc)
            if (c != 0) p.terms_.push_back(Term{c, w});
        return p;
    }

    static NCPolynomial constant(const BigInt& k) { return monomial(k, Word{}); }

    static NCPolynomial variable(const VarSymbol& v) { return monomial(1, Word{v}); }
    static NCPolynomial variable(std::string name) { return variable(VarSymbol(std::move(name))); }

    static NCPolynomial monomial(const BigInt& c, Word w) {
        NCPolynomial p;
        if (c != 0) p.terms_.push_back(Term{c, std::move(w)});
        return p;
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Maximum word length; -1 for the zero polynomial.
    int degree() const noexcept {
        // Terms are sorted by length, so the last one is longest.
        return terms_.empty() ? -1 : static_cast<int>(terms_.back().word.length());
    }

    /// Every word has the same length. Vacuously true for zero.
    bool is_homogeneous() const noexcept {
        return terms_.empty() || terms_.front().word.length() == terms_.back().word.length();
    }

    /// The coefficient of the empty word.
    BigInt free_term() const {
        if (!terms_.empty() && terms_.front().word.empty()) return terms_.front().coeff;
        return 0;
    }

    bool has_zero_free_term() const { return free_term() == 0; }

    BigInt coefficient(const Word& w) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                                   [](const Term& t, const Word& key) { return t.word < key; });
        return (it != terms_.end() && it->word == w) ? it->coeff : BigInt(0);
    }

    /// Distinct symbols in name order.
    std::vector<VarSymbol> variables() const {
        std::set<VarSymbol> seen;
        for (const auto& t : terms_)
            for (const auto& v : t.word.letters()) seen.insert(v);
        return {seen.begin(), seen.end()};
    }

    bool uses(const VarSymbol& v) const {
        for (const auto& t : terms_)
            for (const auto& letter : t.word.letters())
                if (letter == v) return true;
        return false;
    }

    friend NCPolynomial operator+(const NCPolynomial& p, const NCPolynomial& q) {
        std::vector<Term> all = p.terms_;
        all.insert(all.end(), q.terms_.begin(), q.terms_.end());
        return from_terms(std::move(all));
    }

    friend NCPolynomial operator-(const NCPolynomial& p) {
        NCPolynomial out = p;
        for (auto& t : out.terms_) t.coeff = -t.coeff;
        return out;
    }

    friend NCPolynomial operator-(const NCPolynomial& p, const NCPolynomial& q) { return p + (-q); }

    friend NCPolynomial operator*(const NCPolynomial& p, const NCPolynomial& q) {
        std::vector<Term> all;
        all.reserve(p.terms_.size() * q.terms_.size());
        for (const auto& a : p.terms_)
            for (const auto& b : q.terms_) all.push_back(Term{a.coeff * b.coeff, a.word * b.word});
        return from_terms(std::move(all));
    }

    friend NCPolynomial operator*(const BigInt& k, const NCPolynomial& p) { return constant(k) * p; }

    friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

private:
    std::vector<Term> terms_;
};

inline NCPolynomial poly_add(const NCPolynomial& p, const NCPolynomial& q) { return p + q; }
inline NCPolynomial poly_mul(const NCPolynomial& p, const NCPolynomial& q) { return p * q; }
inline NCPolynomial poly_neg(const NCPolynomial& p) { return -p; }
inline NCPolynomial normalize(const NCPolynomial& p) { return NCPolynomial::from_terms(p.terms()); }

inline int degree(const NCPolynomial& p) { return p.degree(); }
inline bool is_homogeneous(const NCPolynomial& p) { return p.is_homogeneous(); }
inline bool has_zero_free_term(const NCPolynomial& p) { return p.has_zero_free_term(); }

/// p^k for k >= 0.
inline NCPolynomial poly_pow(const NCPolynomial& p, unsigned k) {
    NCPolynomial out = NCPolynomial::constant(1);
    for (unsigned j = 0; j < k; ++j) out = out * p;
    return out;
}

using Substitution = std::map<VarSymbol, NCPolynomial>;

/// Homomorphic image of p under letter ↦ polynomial. Throws if a variable of p is unmapped.
inline NCPolynomial substitute(const NCPolynomial& p, const Substitution& map) {
    NCPolynomial out;
    for (const auto& t : p.terms()) {
        NCPolynomial image = NCPolynomial::constant(t.coeff);
        for (const auto& v : t.word.letters()) {
            auto it = map.find(v);
            if (it == map.end()) throw MissingAssignmentError(v.name());
            image = image * it->second;
        }
        out = out + image;
    }
    return out;
}

/// Renaming of symbols; unmapped symbols stay as they are.
inline NCPolynomial rename(const NCPolynomial& p, const std::map<VarSymbol, VarSymbol>& names) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        std::vector<VarSymbol> letters;
        for (const auto& v : t.word.letters()) {
            auto it = names.find(v);
            letters.push_back(it == names.end() ? v : it->second);
        }
        terms.push_back(Term{t.coeff, Word(std::move(letters))});
    }
    return NCPolynomial::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Equation systems

/// Equations P_1 = 0, …, P_s = 0 with an explicit variable order.
class EquationSystem {
public:
    EquationSystem() = default;

    EquationSystem(std::vector<NCPolynomial> equations, std::vector<VarSymbol> varlist)
        : equations_(std::move(equations)), varlist_(std::move(varlist)) {
        std::set<VarSymbol> listed;
        for (const auto& v : varlist_)
            if (!listed.insert(v).second) throw Error("variable '" + v.name() + "' listed twice");
        for (const auto& eq : equations_)
            for (const auto& v : eq.variables())
                if (!listed.count(v)) throw Error("variable '" + v.name() + "' is not in the variable list");
    }

    /// Variable order follows first occurrence in the normalized equations.
    static EquationSystem from_equations(std::vector<NCPolynomial> equations) {
        std::vector<VarSymbol> order;
        std::set<VarSymbol> seen;
        for (const auto& eq : equations)
            for (const auto& t : eq.terms())
                for (const auto& v : t.word.letters())
                    if (seen.insert(v).second) order.push_back(v);
        return EquationSystem(std::move(equations), std::move(order));
    }

    const std::vector<NCPolynomial>& equations() const noexcept { return equations_; }
    const std::vector<VarSymbol>& varlist() const noexcept { return varlist_; }
    std::size_t size() const noexcept { return equations_.size(); }

    friend bool operator==(const EquationSystem&, const EquationSystem&) = default;

private:
    std::vector<NCPolynomial> equations_;
    std::vector<VarSymbol> varlist_;
};

// ---------------------------------------------------------------------------
// Parsing
//
//   poly     := ['+'|'-'] term (('+'|'-') term)*
//   term     := integer | [integer '*'] factor ('*' factor)*
//   factor   := identifier ['^' positive-integer]
//   equation := poly '=' poly
//
// A system file holds one equation per line; lines starting with '#' are
// comments, except that "#! vars: A B C" fixes the variable order.

inline constexpr std::string_view kGrammarHelp =
    "poly     := ['+'|'-'] term (('+'|'-') term)*\n"
    "term     := integer | [integer '*'] factor ('*' factor)*\n"
    "factor   := identifier ['^' positive-integer]\n"
    "equation := poly '=' poly\n"
    "system   := one equation per line; '#' starts a comment line; blank lines ignored;\n"
    "            an optional '#! vars: X Y ...' line fixes the variable order\n";

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

    NCPolynomial poly() {
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
            skip_ws();
        }
        std::vector<Term> terms;
        terms.push_back(term(negative));
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            terms.push_back(term(c == '-'));
        }
        return NCPolynomial::from_terms(std::move(terms));
    }

    /// Parses a polynomial and requires it to consume the whole input.
    NCPolynomial whole_poly() {
        NCPolynomial p = poly();
        expect_end();
        return p;
    }

    NCPolynomial equation() {
        NCPolynomial lhs = poly();
        skip_ws();
        if (peek() != '=') fail(at_end() ? "expected '='" : std::string("expected '=' but found '") + peek() + "'");
        ++pos_;
        NCPolynomial rhs = poly();
        expect_end();
        return lhs - rhs;
    }

    const std::vector<VarSymbol>& appearance_order() const { return order_; }

private:
    Term term(bool negative) {
        skip_ws();
        BigInt coeff = 1;
        std::vector<VarSymbol> letters;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = integer();
            skip_ws();
            if (peek() != '*') return Term{negative ? BigInt(-coeff) : coeff, Word{}};
            ++pos_;
            factor(letters);
        } else {
            factor(letters);
        }
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            factor(letters);
        }
        return Term{negative ? BigInt(-coeff) : coeff, Word(std::move(letters))};
    }

    void factor(std::vector<VarSymbol>& letters) {
        skip_ws();
        const std::size_t start = pos_;
        if (at_end()) fail("expected a variable but reached end of input");
        const auto head = static_cast<unsigned char>(peek());
        if (!(std::isalpha(head) || head == '_')) {
            if (std::isdigit(head)) fail("integer coefficients must come first in a term");
            fail(std::string("expected a variable but found '") + peek() + "'");
        }
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        VarSymbol v{std::string(text_.substr(start, pos_ - start))};
        note(v);
        unsigned long exponent = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t exp_pos = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent after '^'");
            const BigInt e = integer();
            if (e < 1) fail_at("exponent must be at least 1", exp_pos);
            if (e > 1'000'000) fail_at("exponent too large", exp_pos);
            exponent = static_cast<unsigned long>(e);
        }
        for (unsigned long k = 0; k < exponent; ++k) letters.push_back(v);
    }

    BigInt integer() {
        BigInt value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            ++pos_;
        }
        return value;
    }

    void note(const VarSymbol& v) {
        if (std::find(order_.begin(), order_.end(), v) == order_.end()) order_.push_back(v);
    }

    void expect_end() {
        skip_ws();
        if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) const { throw ParseError(msg, offset_ + pos); }

    std::string_view text_;
    std::size_t offset_;
    std::size_t pos_ = 0;
    std::vector<VarSymbol> order_;
};

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace detail

inline NCPolynomial parse_poly(std::string_view text) { return detail::PolyParser(text).whole_poly(); }

/// "L = R", stored as L - R.
inline NCPolynomial parse_equation(std::string_view text) { return detail::PolyParser(text).equation(); }

/// Parses a one-per-line system. The variable list follows first textual
/// appearance unless a "#! vars:" line is present.
inline EquationSystem parse_system(std::string_view text) {
    std::vector<NCPolynomial> equations;
    std::vector<VarSymbol> order;
    std::vector<VarSymbol> declared;
    bool have_declared = false;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        const std::string_view raw = text.substr(line_start, line_end - line_start);
        const std::string_view line = detail::trim(raw);
        if (line.rfind("#!", 0) == 0) {
            std::string_view directive = detail::trim(line.substr(2));
            if (directive.rfind("vars:", 0) == 0) {
                have_declared = true;
                std::string_view rest = directive.substr(5);
                std::size_t p = 0;
                while (p < rest.size()) {
                    while (p < rest.size() && (std::isspace(static_cast<unsigned char>(rest[p])) || rest[p] == ','))
                        ++p;
                    std::size_t q = p;
                    while (q < rest.size() && !std::isspace(static_cast<unsigned char>(rest[q])) && rest[q] != ',') ++q;
                    if (q > p) {
                        const std::string name(rest.substr(p, q - p));
                        if (!is_identifier(name)) throw ParseError("invalid variable name '" + name + "'", line_start);
                        declared.emplace_back(name);
                    }
                    p = q;
                }
            }
        } else if (!line.empty() && line.front() != '#') {
            detail::PolyParser parser(raw, line_start);
            equations.push_back(parser.equation());
            for (const auto& v : parser.appearance_order())
                if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
        }
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }
    if (have_declared) return EquationSystem(std::move(equations), std::move(declared));
    // Symbols that cancel out of every equation are dropped from the list.
    std::set<VarSymbol> used;
    for (const auto& eq : equations)
        for (const auto& v : eq.variables()) used.insert(v);
    std::erase_if(order, [&](const VarSymbol& v) { return !used.count(v); });
    return EquationSystem(std::move(equations), std::move(order));
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline std::string word_to_string(const Word& w) {
    std::string out;
    const auto& letters = w.letters();
    for (std::size_t k = 0; k < letters.size();) {
        std::size_t run = 1;
        while (k + run < letters.size() && letters[k + run] == letters[k]) ++run;
        if (!out.empty()) out += '*';
        out += letters[k].name();
        if (run > 1) out += "^" + std::to_string(run);
        k += run;
    }
    return out;
}

}  // namespace detail

/// Canonical text of the normal form; parse_poly(to_string(p)) == p.
inline std::string to_string(const NCPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool negative = t.coeff < 0;
        const BigInt magnitude = negative ? BigInt(-t.coeff) : t.coeff;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (t.word.empty()) {
            out += magnitude.str();
        } else {
            if (magnitude != 1) out += magnitude.str() + "*";
            out += detail::word_to_string(t.word);
        }
    }
    return out;
}

/// System file text, including a "#! vars:" line so the variable order survives.
inline std::string to_string(const EquationSystem& sys) {
    std::string out = "#! vars:";
    for (const auto& v : sys.varlist()) out += " " + v.name();
    out += "\n";
    for (const auto& eq : sys.equations()) out += to_string(eq) + " = 0\n";
    return out;
}

}  // namespace matdioph
