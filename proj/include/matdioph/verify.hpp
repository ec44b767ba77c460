#pragma once

#include <string>
#include <vector>

#include "error.hpp"
#include "eval.hpp"
#include "ncpoly.hpp"

namespace matdioph {

struct VerifyReport {
    bool pass = false;
    /// P_k evaluated at the witness, one per equation.
    std::vector<ExactMatrix> residuals;
    /// Variables whose matrix falls outside the witness domain.
    std::vector<std::string> domain_violations;

    bool all_residuals_zero() const {
        for (const auto& r : residuals)
            if (!r.is_zero()) return false;
        return true;
    }
};

/// Evaluates every equation at `w`. Throws if a system variable is unassigned
/// or a matrix has the wrong dimension.
inline VerifyReport verify_witness(const EquationSystem& sys, const Witness& w) {
    for (const auto& v : sys.varlist()) {
        const ExactMatrix& m = w.at(v);
        if (m.n() != w.n)
            throw DimensionError("variable '" + v.name() + "' is " + std::to_string(m.n()) + "x" +
                                 std::to_string(m.n()) + " in a witness of dimension " + std::to_string(w.n));
    }
    VerifyReport report;
    for (const auto& [v, m] : w.assignment)
        if (!in_domain(m, w.domain)) report.domain_violations.push_back(v.name());
    for (const auto& eq : sys.equations()) report.residuals.push_back(eval_poly(eq, w));
    report.pass = report.domain_violations.empty() && report.all_residuals_zero();
    return report;
}

}  // namespace matdioph
