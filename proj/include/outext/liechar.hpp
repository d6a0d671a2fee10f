#pragma once

#include <string>

#include "outext/multdata.hpp"
#include "outext/repring.hpp"

namespace outext {

/// A genuine S_n-module arising from the Lie operad: all coefficients are
/// nonnegative and the dimension is (n-1)! for Lie(n), (n-2)! for the cyclic
/// variant.
struct LieRep {
    int level;
    VirtualRep rep;
};

int moebius(int d);

/// Character of Lie(n): decomposition of (1/n) sum_{d|n} mu(d) p_d^{n/d}
/// into the Specht basis, where p_d^{n/d} is supported on the cycle type
/// (d,...,d) with value z there.
LieRep lie_rep(int n);

/// Reconstructs the cyclic Lie character at arity n from multiplicity data:
/// sum_{lambda |- n} t(lambda, (2)) * [lambda]. Errors on missing entries.
LieRep cyclic_lie_from_table(const MultTable& t, int n);

struct RestrictionReport {
    int level = 0;
    bool pass = false;
    bool dimension_ok = false;
    VirtualRep difference;  // restrict(cyclic) - lie_rep(n-1), zero on pass
    std::string message;

    RestrictionReport() : difference(0) {}
};

/// Checks restrict(cyclic_lie_from_table(t, n)) == lie_rep(n-1) and the
/// dimension identity (n-2)!. Failures are reported, never thrown.
RestrictionReport verify_cyclic_restriction(const MultTable& t, int n);

}  // namespace outext
