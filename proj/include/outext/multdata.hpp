#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "outext/partition.hpp"

namespace outext {

enum class Provenance { builtin, dataset, fixture, derived };

std::string to_string(Provenance p);

/// A record in the conjugated external convention: the table value at
/// (conjugate(lambda_conj), conjugate(rho_conj)), with the degree drop
/// k = |lambda_conj| - |rho_conj| carried redundantly for validation.
struct DatasetRecord {
    int degree_drop = 0;
    Partition lambda_conj;
    Partition rho_conj;
    Int value;
};

/// Finite table of composition-factor multiplicities (lambda, rho) -> N.
/// Unknown cells are first-class: query never fabricates a value, and the
/// recursion engine refuses to touch unknown cells.
class MultTable {
public:
    struct Cell {
        Int value;
        Provenance provenance;
    };

    struct Query {
        enum Kind { known, structural_zero, unknown } kind;
        Int value;  // meaningful for known / structural_zero
        bool is_known() const { return kind != unknown; }
    };

    MultTable() = default;

    int max_degree() const { return max_degree_; }
    const std::map<std::pair<Partition, Partition>, Cell>& entries() const {
        return entries_;
    }

    /// Structural values hold with no table entry at all:
    ///   |rho| > |lambda|            -> 0
    ///   |rho| = |lambda|            -> 1 on the diagonal, else 0
    ///   |rho| <= 1, |lambda| >= 2   -> 0
    ///   rho = (1,1), |lambda| >= 4  -> 0
    static std::optional<Int> structural_value(const Partition& lambda,
                                               const Partition& rho);

    Query query(const Partition& lambda, const Partition& rho) const;

    /// Stored value or structural value; throws a coverage error on unknown.
    Int at(const Partition& lambda, const Partition& rho) const;

    /// Inserts an entry, checking structural rules and value agreement on
    /// duplicates (disagreement is a hard error naming both provenances).
    void insert(const Partition& lambda, const Partition& rho, Int value,
                Provenance provenance);

    /// True when every cell (lambda, rho) with 2 <= |rho| <= |lambda| is
    /// known for every lambda of every degree <= d.
    bool covers_degree(int d) const;
    /// Largest d with covers_degree(d).
    int coverage_degree() const;

    bool row_complete(const Partition& lambda) const;

private:
    int max_degree_ = 0;
    std::map<std::pair<Partition, Partition>, Cell> entries_;
};

/// Table of forced entries: diagonal, structural zeros, complete rows for
/// |lambda| <= 1 and for the hooks lambda = (1^m) via hook_family, all tagged
/// builtin.
MultTable builtin_table(int max_degree);

/// Conjugates each record into direct-convention entries.
MultTable translate_gh22(const std::vector<DatasetRecord>& records,
                         Provenance provenance = Provenance::dataset);

/// Union of fragments. Overlapping cells must agree; the result must satisfy
/// every structural invariant, including agreement of hook rows from
/// hook_family against any dataset rows covering the same cells.
MultTable merge_and_validate(const std::vector<MultTable>& parts);

/// Parses the canonical multiplicity file format:
///   mult <lambda> ; <rho> ; <value>
///   phi <k> ; <lambda'> ; <rho'> ; <value>
/// with '#' comments and blank lines ignored.
MultTable parse_mult_file(std::istream& in, const std::string& name,
                          Provenance provenance);
MultTable load_mult_file(const std::string& path, Provenance provenance);

/// One "mult" line per entry, sorted, byte-stable.
void serialize(const MultTable& table, std::ostream& out);

}  // namespace outext
