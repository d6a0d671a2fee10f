#include "outext/liechar.hpp"

#include "outext/errors.hpp"

namespace outext {

int moebius(int d) {
    if (d < 1) throw invariant_error("moebius: d must be positive");
    int result = 1;
    for (int p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        d /= p;
        if (d % p == 0) return 0;
        result = -result;
    }
    if (d > 1) result = -result;
    return result;
}

LieRep lie_rep(int n) {
    if (n < 1) throw invariant_error("lie_rep: n must be >= 1");
    ClassFunction f(n);
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        // Cycle type (d^{n/d}); the induced power-sum convention puts value
        // z_mu there so that <p_d^{n/d}, chi> = chi(d^{n/d}).
        Partition mu(std::vector<int>(n / d, d));
        f.set(mu, f.value(mu) + Rat(Int(moebius(d)) * centralizer_order(mu), Int(n)));
    }
    LieRep lie{n, decompose(f)};
    if (dim(lie.rep) != factorial(n - 1) || !lie.rep.nonnegative())
        throw invariant_error("lie_rep(" + std::to_string(n) +
                              "): decomposition is not a genuine module of dimension (n-1)!");
    return lie;
}

LieRep cyclic_lie_from_table(const MultTable& t, int n) {
    if (n < 3) throw invariant_error("cyclic_lie_from_table: n must be >= 3");
    const Partition two = Partition::parse("2");
    VirtualRep rep(n);
    for (auto& lambda : generate_partitions(n)) {
        auto q = t.query(lambda, two);
        if (!q.is_known())
            throw coverage_error("cyclic Lie reconstruction at n=" + std::to_string(n) +
                                 ": cell (" + lambda.to_text() + " ; 2) is unknown");
        rep.add(lambda, q.value);
    }
    return LieRep{n, std::move(rep)};
}

RestrictionReport verify_cyclic_restriction(const MultTable& t, int n) {
    RestrictionReport report;
    report.level = n;
    LieRep cyclic = cyclic_lie_from_table(t, n);
    report.dimension_ok = dim(cyclic.rep) == factorial(n - 2);
    report.difference = restrict_rep(cyclic.rep) - lie_rep(n - 1).rep;
    report.pass = report.dimension_ok && report.difference.is_zero();
    if (report.pass) {
        report.message = "cyclic restriction n=" + std::to_string(n) + ": pass";
    } else {
        report.message = "cyclic restriction n=" + std::to_string(n) + ": fail";
        if (!report.dimension_ok)
            report.message += " (dimension " + dim(cyclic.rep).str() + " != (n-2)!)";
        if (!report.difference.is_zero())
            report.message += " (difference " + report.difference.to_text() + ")";
    }
    return report;
}

}  // namespace outext
