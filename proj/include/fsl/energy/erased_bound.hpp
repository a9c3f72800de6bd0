// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>

#include "fsl/common.hpp"
#include "fsl/energy/gagliardo.hpp"
#include "fsl/energy/report.hpp"
#include "fsl/ladder/erased.hpp"

namespace fsl {

struct ErasedBound {
    double e1_f = 0.0;  // E_1 norms, i.e. square roots of energy + L2
    double e1_g = 0.0;
    double ratio = 0.0;
};

// A non-erased pair throws precondition_error; a divergent energy throws solver_error.
inline ErasedBound check_erased_bound(const GridFunction& f, const GridFunction& g, const EnergyParams& p)
{
    p.validate();
    require(is_erased_function(f, g).erased, "check_erased_bound: f is not an erased function of g");
    const auto rf = gagliardo_energy(f, p), rg = gagliardo_energy(g, p);
    if (rf.divergent || rg.divergent) throw solver_error("check_erased_bound: energy flagged divergent");
    ErasedBound out;
    out.e1_f = std::sqrt(*rf.e1());
    out.e1_g = std::sqrt(*rg.e1());
    out.ratio = out.e1_g > 0 ? out.e1_f / out.e1_g : 0.0;
    return out;
}

} // namespace fsl
