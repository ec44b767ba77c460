#pragma once

// Bounded exhaustive search for witnesses of an equation system.
//
// Solvability in M_n(N) is undecidable in general, so this is a bounded
// semi-procedure: an empty result means "no witness with entries inside the
// bound", nothing more.
//
// Enumeration order is lexicographic: variables in list order, entries of a
// variable row-major, values ascending from the lower bound. Equations are
// checked as soon as every variable they mention is assigned. Parallel runs
// split the first variable's range into contiguous chunks and concatenate the
// chunk results in order, so the output never depends on the thread count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"
#include "eval.hpp"
#include "matrix.hpp"
#include "ncpoly.hpp"
#include "number.hpp"

namespace matdioph {

struct SearchSpec {
    std::size_t n = 1;
    Domain domain = Domain::Nat;
    /// Largest absolute entry value.
    std::int64_t bound = 1;
    /// Enumeration order; empty means the system's variable list.
    std::vector<VarSymbol> vars;
    /// Optional zero pattern per variable; only free entries are enumerated.
    std::map<VarSymbol, SubstructureSpec> constraints;
    /// Stop after this many witnesses; 0 means collect all.
    std::size_t limit = 0;
    /// Largest admissible search space.
    BigInt ceiling = BigInt(1'000'000'000);
    unsigned threads = 1;
};

struct SearchResult {
    std::vector<Witness> witnesses;
    BigInt space_size = 0;
    /// Assignments visited (one per variable value tried).
    std::uint64_t steps = 0;
    /// True when the limit cut the enumeration short.
    bool truncated = false;
};

namespace detail {

struct CompiledTerm {
    BigInt coeff;
    std::vector<std::size_t> letters;  // indices into the search variables
};

struct CompiledEquation {
    std::vector<CompiledTerm> terms;
    std::size_t ready = 0;  // level after which every letter is assigned
    bool constant = false;
};

/// Mixed-radix counter over the free entries of one variable's matrix.
class MatrixOdometer {
public:
    MatrixOdometer(std::size_t n, std::int64_t lo, std::int64_t hi, const std::optional<SubstructureSpec>& pattern)
        : lo_(lo), hi_(hi), current_(n) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!pattern || !forced_zero(*pattern, n, r + 1, c + 1)) free_.push_back(r * n + c);
        digits_.assign(free_.size(), lo_);
    }

    std::size_t free_entries() const { return free_.size(); }
    std::uint64_t radix() const { return static_cast<std::uint64_t>(hi_ - lo_ + 1); }

    /// Number of matrices this odometer visits, saturating at UINT64_MAX.
    std::uint64_t count() const {
        std::uint64_t total = 1;
        for (std::size_t k = 0; k < free_.size(); ++k) {
            if (total > UINT64_MAX / radix()) return UINT64_MAX;
            total *= radix();
        }
        return total;
    }

    /// Positions the counter on the index-th matrix in enumeration order.
    void seek(std::uint64_t index) {
        for (std::size_t k = free_.size(); k-- > 0;) {
            digits_[k] = lo_ + static_cast<std::int64_t>(index % radix());
            index /= radix();
        }
        sync_all();
    }

    /// Advances to the next matrix; false after the last one.
    bool next() {
        for (std::size_t k = free_.size(); k-- > 0;) {
            if (digits_[k] < hi_) {
                ++digits_[k];
                set(k);
                return true;
            }
            digits_[k] = lo_;
            set(k);
        }
        return false;
    }

    const IntMatrix& matrix() const { return current_; }

private:
    void set(std::size_t k) {
        const std::size_t n = current_.n();
        current_.at(free_[k] / n, free_[k] % n) = digits_[k];
    }

    void sync_all() {
        for (std::size_t k = 0; k < free_.size(); ++k) set(k);
    }

    std::int64_t lo_, hi_;
    std::vector<std::size_t> free_;
    std::vector<std::int64_t> digits_;
    IntMatrix current_;
};

inline bool equation_vanishes(const CompiledEquation& eq, const std::vector<IntMatrix>& values, std::size_t n) {
    IntMatrix sum(n);
    for (const auto& t : eq.terms) {
        if (t.letters.empty()) {
            sum += IntMatrix::scalar(n, t.coeff);
            continue;
        }
        IntMatrix product = values[t.letters.front()];
        for (std::size_t k = 1; k < t.letters.size(); ++k) product = product * values[t.letters[k]];
        product *= t.coeff;
        sum += product;
    }
    return sum.is_zero();
}

class BoundedSearch {
public:
    BoundedSearch(const EquationSystem& sys, const SearchSpec& spec, bool exclude_all_zero)
        : spec_(spec), exclude_all_zero_(exclude_all_zero) {
        if (spec.n == 0) throw DimensionError("search dimension must be at least 1");
        if (spec.domain == Domain::Rat) throw Error("bounded search is only defined over nat or int entries");
        if (spec.bound < 0) throw Error("search bound must be non-negative");
        vars_ = spec.vars.empty() ? sys.varlist() : spec.vars;
        std::map<VarSymbol, std::size_t> index;
        for (std::size_t k = 0; k < vars_.size(); ++k)
            if (!index.emplace(vars_[k], k).second) throw Error("variable '" + vars_[k].name() + "' listed twice");
        for (const auto& eq : sys.equations()) {
            CompiledEquation ce;
            bool any = false;
            for (const auto& t : eq.terms()) {
                CompiledTerm ct{t.coeff, {}};
                for (const auto& v : t.word.letters()) {
                    auto it = index.find(v);
                    if (it == index.end()) throw MissingAssignmentError(v.name());
                    ct.letters.push_back(it->second);
                    ce.ready = any ? std::max(ce.ready, it->second) : it->second;
                    any = true;
                }
                ce.terms.push_back(std::move(ct));
            }
            ce.constant = !any;
            equations_.push_back(std::move(ce));
        }
        for (const auto& [v, pattern] : spec.constraints) {
            if (!index.count(v)) throw Error("constraint on unknown variable '" + v.name() + "'");
            if (pattern.indexed()) detail::check_index(spec.n, pattern.index, "substructure");
        }
        lo_ = spec.domain == Domain::Nat ? 0 : -spec.bound;
        hi_ = spec.bound;
        space_ = 1;
        for (const auto& v : vars_) {
            const MatrixOdometer od = odometer_for(v);
            BigInt values = BigInt(od.radix());
            for (std::size_t k = 0; k < od.free_entries(); ++k) space_ *= values;
        }
    }

    const BigInt& space_size() const { return space_; }

    SearchResult run() {
        SearchResult result;
        result.space_size = space_;
        if (space_ > spec_.ceiling) throw SpaceTooLargeError(space_.str(), spec_.ceiling.str());
        for (const auto& eq : equations_)
            if (eq.constant && !equation_vanishes(eq, {}, spec_.n)) return result;
        if (vars_.empty()) {
            if (!exclude_all_zero_) result.witnesses.push_back(Witness{spec_.n, spec_.domain, {}});
            return result;
        }

        const std::uint64_t first_count = odometer_for(vars_.front()).count();
        const unsigned threads = std::max(1u, spec_.threads);
        const std::uint64_t chunks = std::min<std::uint64_t>(first_count, std::uint64_t{threads} * 8);
        std::vector<ChunkResult> parts(chunks);
        std::atomic<std::uint64_t> next_chunk{0};
        // Smallest chunk index that alone reached the limit; later chunks are irrelevant.
        std::atomic<std::uint64_t> cutoff{UINT64_MAX};

        auto worker = [&] {
            for (;;) {
                const std::uint64_t c = next_chunk.fetch_add(1);
                if (c >= chunks) return;
                if (c > cutoff.load()) continue;
                const std::uint64_t begin = first_count / chunks * c + std::min(c, first_count % chunks);
                const std::uint64_t size = first_count / chunks + (c < first_count % chunks ? 1 : 0);
                run_chunk(begin, begin + size, parts[c], c, cutoff);
                if (spec_.limit != 0 && parts[c].witnesses.size() >= spec_.limit) {
                    std::uint64_t cur = cutoff.load();
                    while (c < cur && !cutoff.compare_exchange_weak(cur, c)) {
                    }
                }
            }
        };
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }

        for (std::uint64_t c = 0; c < chunks; ++c) {
            result.steps += parts[c].steps;
            if (c > cutoff.load()) continue;
            for (auto& w : parts[c].witnesses) {
                if (spec_.limit != 0 && result.witnesses.size() >= spec_.limit) {
                    result.truncated = true;
                    break;
                }
                result.witnesses.push_back(to_witness(w));
            }
        }
        if (cutoff.load() != UINT64_MAX) result.truncated = true;
        return result;
    }

private:
    struct ChunkResult {
        std::vector<std::vector<IntMatrix>> witnesses;
        std::uint64_t steps = 0;
    };

    MatrixOdometer odometer_for(const VarSymbol& v) const {
        std::optional<SubstructureSpec> pattern;
        if (auto it = spec_.constraints.find(v); it != spec_.constraints.end()) pattern = it->second;
        return MatrixOdometer(spec_.n, lo_, hi_, pattern);
    }

    void run_chunk(std::uint64_t begin, std::uint64_t end, ChunkResult& out, std::uint64_t chunk,
                   const std::atomic<std::uint64_t>& cutoff) const {
        std::vector<MatrixOdometer> odometers;
        for (const auto& v : vars_) odometers.push_back(odometer_for(v));
        std::vector<IntMatrix> values(vars_.size(), IntMatrix(spec_.n));
        odometers[0].seek(begin);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            if (idx != begin) odometers[0].next();
            if (chunk > cutoff.load(std::memory_order_relaxed)) return;
            values[0] = odometers[0].matrix();
            ++out.steps;
            if (!checks_pass(0, values)) continue;
            if (!descend(1, odometers, values, out)) return;
        }
    }

    /// Returns false once the chunk has reached the limit.
    bool descend(std::size_t level, std::vector<MatrixOdometer>& odometers, std::vector<IntMatrix>& values,
                 ChunkResult& out) const {
        if (level == vars_.size()) {
            if (exclude_all_zero_ &&
                std::all_of(values.begin(), values.end(), [](const IntMatrix& m) { return m.is_zero(); }))
                return true;
            out.witnesses.push_back(values);
            return spec_.limit == 0 || out.witnesses.size() < spec_.limit;
        }
        MatrixOdometer& od = odometers[level];
        od.seek(0);
        do {
            values[level] = od.matrix();
            ++out.steps;
            if (!checks_pass(level, values)) continue;
            if (!descend(level + 1, odometers, values, out)) return false;
        } while (od.next());
        return true;
    }

    bool checks_pass(std::size_t level, const std::vector<IntMatrix>& values) const {
        for (const auto& eq : equations_)
            if (!eq.constant && eq.ready == level && !equation_vanishes(eq, values, spec_.n)) return false;
        return true;
    }

    Witness to_witness(const std::vector<IntMatrix>& values) const {
        Witness w{spec_.n, spec_.domain, {}};
        for (std::size_t k = 0; k < vars_.size(); ++k) w.assignment.emplace(vars_[k], to_exact(values[k]));
        return w;
    }

    SearchSpec spec_;
    bool exclude_all_zero_;
    std::vector<VarSymbol> vars_;
    std::vector<CompiledEquation> equations_;
    std::int64_t lo_ = 0, hi_ = 0;
    BigInt space_;
};

}  // namespace detail

/// Size of the space solve_bounded would enumerate for this system and spec.
inline BigInt search_space_size(const EquationSystem& sys, const SearchSpec& spec) {
    return detail::BoundedSearch(sys, spec, false).space_size();
}

/// All witnesses with entries inside the bound, in lexicographic order.
/// Throws SpaceTooLargeError when the space exceeds spec.ceiling.
inline SearchResult solve_bounded(const EquationSystem& sys, const SearchSpec& spec) {
    return detail::BoundedSearch(sys, spec, false).run();
}

/// H: every word of p has the same length. F: p has no free term.
enum class NontrivialMode { Homogeneous, FreeTermZero };

/// Witnesses of p = 0 other than the all-zero assignment.
inline SearchResult solve_nontrivial_bounded(const NCPolynomial& p, const SearchSpec& spec, NontrivialMode mode) {
    if (mode == NontrivialMode::Homogeneous) {
        for (const auto& t : p.terms())
            if (static_cast<int>(t.word.length()) != p.degree())
                throw Error("polynomial is not homogeneous: term '" + to_string(NCPolynomial::monomial(t.coeff, t.word)) +
                            "' has degree " + std::to_string(t.word.length()) + ", expected " +
                            std::to_string(p.degree()));
    } else if (!p.has_zero_free_term()) {
        throw Error("polynomial has a free term: '" + p.free_term().str() + "'");
    }
    const EquationSystem sys = spec.vars.empty() ? EquationSystem::from_equations({p})
                                                 : EquationSystem({p}, spec.vars);
    return detail::BoundedSearch(sys, spec, true).run();
}

}  // namespace matdioph
