// Acceptance battery: one line per criterion. Criteria that need the full
// external multiplicity dataset run their transcribed-fixture subset and
// report "skipped: dataset absent" when that subset holds; they never
// report "pass" without the dataset.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "outext/extengine.hpp"
#include "outext/liechar.hpp"
#include "outext/render.hpp"

using namespace outext;
using namespace outext::testing;

namespace {

int failures = 0;

void criterion(int number, const std::string& name,
               const std::function<std::string()>& body) {
    std::string verdict;
    try {
        verdict = body();  // "", "skipped: ...", or a failure message
    } catch (const std::exception& e) {
        verdict = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << number << " (" << name << "): ";
    if (verdict.empty()) {
        std::cout << "pass\n";
    } else if (verdict.rfind("skipped", 0) == 0) {
        std::cout << verdict << "\n";
    } else {
        std::cout << "fail: " << verdict << "\n";
        ++failures;
    }
}

std::string check(bool ok, const std::string& what) {
    return ok ? "" : what;
}

Partition random_partition(std::mt19937& rng, int n) {
    auto all = generate_partitions(n);
    return all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
}

std::string strip_newline(std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

const char* kDatasetAbsent = "skipped: dataset absent";

}  // namespace

int main() {
    criterion(1, "representation-ring battery", [] {
        for (int n = 1; n <= 8; ++n)
            for (auto& a : generate_partitions(n))
                for (auto& b : generate_partitions(n))
                    if (inner_product(character(a), character(b)) !=
                        Rat(a == b ? 1 : 0))
                        return "orthonormality fails at n=" + std::to_string(n);
        for (int n = 0; n <= 10; ++n) {
            Int total = 0;
            for (auto& lambda : generate_partitions(n)) {
                Int f = hook_dimension(lambda);
                total += f * f;
            }
            if (total != factorial(n))
                return "dimension sum fails at n=" + std::to_string(n);
        }
        std::mt19937 rng(2024);
        for (int trial = 0; trial < 100; ++trial) {
            auto a = random_partition(rng, 1 + trial % 3);
            auto b = random_partition(rng, 1 + (trial / 3) % 3);
            auto c = random_partition(rng, 1 + (trial / 9) % 3);
            VirtualRep va(a.size()), vb(b.size()), vc(c.size());
            va.add(a, 1);
            vb.add(b, 1);
            vc.add(c, 1);
            if (lr_product(va, vb) != lr_product(vb, va))
                return std::string("induction product is not commutative");
            if (lr_product(lr_product(va, vb), vc) !=
                lr_product(va, lr_product(vb, vc)))
                return std::string("induction product is not associative");
        }
        VirtualRep box(1);
        box.add(Partition::parse("1"), 1);
        for (int trial = 0; trial < 100; ++trial) {
            int n = 2 + trial % 7;
            auto lambda = random_partition(rng, n);
            auto mu = random_partition(rng, n - 1);
            VirtualRep vl(n), vm(n - 1);
            vl.add(lambda, 1);
            vm.add(mu, 1);
            if (restrict_rep(vl).coeff(mu) != lr_product(vm, box).coeff(lambda))
                return std::string("induction-restriction adjunction fails");
        }
        return std::string();
    });

    criterion(2, "lie module oracle", [] {
        for (int n = 1; n <= 9; ++n) {
            auto lie = lie_rep(n);
            if (dim(lie.rep) != factorial(n - 1) || !lie.rep.nonnegative())
                return "lie_rep(" + std::to_string(n) + ") malformed";
        }
        VirtualRep l2(2), l3(3);
        l2.add(Partition::parse("1,1"), 1);
        l3.add(Partition::parse("2,1"), 1);
        return check(lie_rep(2).rep == l2 && lie_rep(3).rep == l3,
                     "small lie modules disagree with the bracket oracle");
    });

    criterion(3, "hook closed form", [] {
        std::vector<Partition> expected{
            Partition::parse("1,1,1,1,1,1,1,1,1"), Partition::parse("2,1,1,1,1,1,1"),
            Partition::parse("3,1,1,1,1"), Partition::parse("4,1,1"),
            Partition::parse("5")};
        return check(hook_family(9) == expected, "hook_family(9) mismatch");
    });

    criterion(4, "contradiction fixture", [] {
        RowComplex c;
        c.nu = Partition::parse("4");
        c.lambda = Partition::parse("1,1,1,1,1,1,1,1,1");
        for (int v : {0, 0, 0, 2, 1}) c.term_dims.push_back(Int(v));
        c.term_dims.push_back(std::nullopt);
        auto solved = solve_acyclic(c, ExtTable());
        auto* report = std::get_if<ContradictionReport>(&solved);
        return check(report && report->forced_value == -1,
                     "fixture complex did not force -1");
    });

    criterion(5, "ext2 total dimensions", [] {
        const Int expected[] = {28, 478, 6718};
        for (int n = 5; n <= 7; ++n) {
            auto fixture = load_birep_csv(
                source_path("data/fixtures/table1_n" + std::to_string(n) + ".csv"),
                n - 2, n);
            if (fixture.dimension() != expected[n - 5])
                return "fixture dimension mismatch at n=" + std::to_string(n);
        }
        return std::string(kDatasetAbsent);
    });

    criterion(6, "ext2 golden decompositions", [] {
        for (int n = 5; n <= 7; ++n) {
            auto fixture = load_birep_csv(
                source_path("data/fixtures/table1_n" + std::to_string(n) + ".csv"),
                n - 2, n);
            auto golden = strip_newline(load_text(
                source_path("tests/golden/table1_n" + std::to_string(n) + ".txt")));
            if (render_birep(fixture) != golden)
                return "rendering differs from the golden text at n=" +
                       std::to_string(n);
        }
        return std::string(kDatasetAbsent);
    });

    criterion(7, "square tensor vanishing", [] {
        auto report = verify_a2_vanishing(builtin_table(4), 4);
        BiRep expected(2, 2);
        expected.add(Partition::parse("1,1"), Partition::parse("1,1"), 1);
        expected.add(Partition::parse("2"), Partition::parse("2"), 1);
        if (!(report.ext0_square == expected))
            return std::string("degree-0 value differs from the fixed output");
        return std::string(kDatasetAbsent);
    });

    criterion(8, "koszul falsification", [] {
        auto mult = builtin_table(9);
        auto ext = load_ext_file(source_path("data/fixtures/hook9.ext"));
        auto row = build_row_complex(Partition::parse("4"),
                                     Partition::parse("1,1,1,1,1,1,1,1,1"), ext,
                                     mult);
        auto solved = solve_acyclic(row, ext);
        auto* report = std::get_if<ContradictionReport>(&solved);
        if (!report || report->forced_value != -1)
            return std::string("hook-column row complex did not contradict");
        std::set<ExtKey> blame(report->blame_set.begin(), report->blame_set.end());
        ExtKey c3{Partition::parse("4"), Partition::parse("2,1,1,1,1,1,1"), 3};
        ExtKey c4{Partition::parse("4"), Partition::parse("1,1,1,1,1,1,1,1,1"), 4};
        if (!blame.count(c3) || !blame.count(c4))
            return std::string("blame set misses the candidate groups");
        return std::string(kDatasetAbsent);
    });

    criterion(9, "inversion round trip", [] {
        auto mult = synthetic_consistent_table();
        auto run = run_koszul_recursion(4, mult);
        if (!run.reports.empty())
            return std::string("synthetic table produced contradictions");
        auto recovered = invert_for_multiplicities(run.table, 4);
        for (auto& [cell, entry] : mult.entries())
            if (recovered.at(cell.first, cell.second) != entry.value)
                return std::string("inversion altered a cell");
        return std::string(kDatasetAbsent);
    });

    criterion(10, "cyclic lie consistency", [] {
        // Needs the dataset columns at (2) and (1,1,1); builtins stop at
        // the hook rows.
        return std::string(kDatasetAbsent);
    });

    return failures == 0 ? 0 : 1;
}
