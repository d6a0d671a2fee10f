#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "outext/multdata.hpp"
#include "outext/repring.hpp"

namespace outext {

/// Address of one extension group dimension: Ext^k between the simple
/// functors indexed by nu and lambda.
struct ExtKey {
    Partition nu;
    Partition lambda;
    int k = 0;

    bool operator==(const ExtKey&) const = default;
    auto operator<=>(const ExtKey&) const = default;
    std::string to_text() const;  // "ext <nu> ; <lambda> ; <k>"
};

enum class ExtStatus { forced_zero, computed, fixture, contradiction };

std::string to_string(ExtStatus s);

/// The recursion's evolving state: (nu, lambda, k) -> dimension, with per
/// entry status, a conditional flag (value depends on the concentration
/// hypothesis), and the cells consumed to compute it.
class ExtTable {
public:
    struct Entry {
        Int value;
        ExtStatus status = ExtStatus::computed;
        bool conditional = false;
        std::vector<ExtKey> consumed;    // ext cells this value was built from
        std::vector<ExtKey> hypothesis;  // concentration cells assumed zero
    };

    struct Query {
        enum Kind { known, structural_zero, unknown } kind;
        Int value;
        const Entry* entry = nullptr;  // non-null only for Kind::known
        bool is_known() const { return kind != unknown; }
    };

    bool hypothesis_flag = false;

    const std::map<ExtKey, Entry>& entries() const { return entries_; }

    /// Structural values (no entry needed):
    ///   k > |lambda| - |nu|          -> 0   (high-degree vanishing)
    ///   |lambda| < |nu|              -> 0
    ///   k = 0                        -> 1 if nu = lambda else 0
    ///   k = 1, |lambda| != |nu| + 1  -> 0
    static std::optional<Int> structural_value(const ExtKey& key);

    Query query(const ExtKey& key) const;
    Int at(const ExtKey& key) const;  // throws coverage error on unknown

    void insert(ExtKey key, Entry entry);

    /// Transitive closure of hypothesis cells through consumed entries:
    /// the candidate nonzero groups a value depends on.
    std::set<ExtKey> hypothesis_closure(const ExtKey& key) const;

private:
    std::map<ExtKey, Entry> entries_;
};

/// One line per cell: "ext <nu> ; <lambda> ; <k> ; <value> ; <status>",
/// sorted, byte-stable. Conditional entries carry the suffix ",conditional".
void serialize(const ExtTable& table, std::ostream& out);
ExtTable parse_ext_file(std::istream& in, const std::string& name);
ExtTable load_ext_file(const std::string& path);

/// Admissible region of the first page for given source/target degrees.
struct E1Support {
    int nu_size = 0;
    int lambda_size = 0;
    std::set<std::pair<int, int>> region;  // (p, q) pairs

    bool contains(int p, int q) const { return region.count({p, q}) > 0; }
    /// Cells of the region that are known to vanish because the total degree
    /// is 0 or 1 at the wrong column.
    bool known_zero(int p, int q) const;
};

E1Support e1_support(int nu_size, int lambda_size);
inline E1Support e1_support(const Partition& nu, const Partition& lambda) {
    return e1_support(nu.size(), lambda.size());
}

/// The acyclic complex the spectral sequence degenerates to under the
/// concentration hypothesis: term dimensions indexed by p = |nu| .. |lambda|,
/// with exactly one unknown slot at p = |lambda|.
struct RowComplex {
    Partition nu;
    Partition lambda;
    std::vector<std::optional<Int>> term_dims;  // index p - |nu|; last empty

    struct BlameRef {
        enum Source { mult_cell, ext_cell } source;
        Partition a, b;  // (lambda, rho) or (nu, rho)
        int k = 0;       // ext only
    };
    std::vector<std::vector<BlameRef>> blame;  // per term, cells consumed
    std::vector<ExtKey> hypothesis;  // concentration cells assumed zero
    std::vector<ExtKey> consumed;    // ext cells with stored entries consumed
};

/// A failed acyclic complex: the Euler characteristic forces a negative
/// top dimension.
struct ContradictionReport {
    Partition nu;
    Partition lambda;
    std::vector<Int> term_dims;  // resolved, including the forced value
    Int forced_value;            // < 0
    std::vector<ExtKey> blame_set;

    /// Frozen structured text block (golden-tested).
    std::string render() const;
};

/// Thrown when a requested value depends on a cell already marked
/// contradiction; the recursion skips such rows.
struct DependsOnContradiction {
    ExtKey cell;
};

RowComplex build_row_complex(const Partition& nu, const Partition& lambda,
                             const ExtTable& ext, const MultTable& mult);

/// Returns the unique value making the alternating sum vanish, or a
/// ContradictionReport when that value is negative. The blame set is the
/// transitive closure of hypothesis cells through the ext table.
std::variant<Int, ContradictionReport> solve_acyclic(const RowComplex& c,
                                                     const ExtTable& ext);

/// Direct three-term computation of every Ext^2 between degrees n-2 and n,
/// with the equivariant assembly and its total dimension.
struct Ext2Result {
    int n = 0;
    std::map<std::pair<Partition, Partition>, Int> values;  // (nu, lambda)
    BiRep birep;
    Int total_dim;

    Ext2Result(int n_) : n(n_), birep(n_ - 2, n_), total_dim(0) {}
};

Ext2Result compute_ext2_table(int n, const MultTable& mult);

enum class ContradictionPolicy { record_and_continue, halt_on_first };

struct RecursionResult {
    ExtTable table;
    std::vector<ContradictionReport> reports;
    std::vector<std::pair<Partition, Partition>> skipped;  // downstream of a
                                                           // contradiction
};

/// Fills the ext table for all |lambda| <= max_degree under the
/// concentration hypothesis: outer recursion on m = |lambda|, inner on
/// m - n, partitions in canonical order. Deterministic.
RecursionResult run_koszul_recursion(int max_degree, const MultTable& mult,
                                     ContradictionPolicy policy =
                                         ContradictionPolicy::record_and_continue);

/// Inverse direction: recovers the multiplicity table from a complete,
/// contradiction-free ext table. Entries are tagged derived.
MultTable invert_for_multiplicities(const ExtTable& ext, int max_degree);

/// Proof obligations for the vanishing of all higher Ext out of the square
/// tensor functor, plus its fixed low-degree values.
struct A2Report {
    bool pass = false;
    int max_checked = 0;
    std::vector<std::string> failures;
    std::vector<int> skipped_degrees;  // degrees without full coverage
    BiRep ext0_square;    // Ext^0(a^2, a^2)
    std::optional<BiRep> ext1_square_cube;  // Ext^1(a^2, a^3); needs degree 3

    A2Report() : ext0_square(2, 2) {}
};

A2Report verify_a2_vanishing(const MultTable& mult, int max_degree);

/// Schur-Weyl assembly: sum ext(nu, lambda, k) * (S_nu x S_lambda).
BiRep assemble_equivariant(int n, int m, const ExtTable& ext, int k);

}  // namespace outext
