#include "outext/extengine.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "outext/errors.hpp"

namespace outext {

std::string ExtKey::to_text() const {
    return "ext " + nu.to_text() + " ; " + lambda.to_text() + " ; " +
           std::to_string(k);
}

std::string to_string(ExtStatus s) {
    switch (s) {
        case ExtStatus::forced_zero: return "forced-zero";
        case ExtStatus::computed: return "computed";
        case ExtStatus::fixture: return "fixture";
        case ExtStatus::contradiction: return "contradiction";
    }
    return "?";
}

std::optional<Int> ExtTable::structural_value(const ExtKey& key) {
    int n = key.nu.size(), m = key.lambda.size();
    if (key.k < 0) return Int(0);
    if (m < n) return Int(0);
    if (key.k > m - n) return Int(0);
    if (key.k == 0) return Int(key.nu == key.lambda ? 1 : 0);
    if (key.k == 1 && m != n + 1) return Int(0);
    return std::nullopt;
}

ExtTable::Query ExtTable::query(const ExtKey& key) const {
    auto it = entries_.find(key);
    if (it != entries_.end())
        return {Query::known, it->second.value, &it->second};
    if (auto forced = structural_value(key))
        return {Query::structural_zero, *forced, nullptr};
    return {Query::unknown, Int(0), nullptr};
}

Int ExtTable::at(const ExtKey& key) const {
    Query q = query(key);
    if (!q.is_known())
        throw coverage_error("ext cell (" + key.nu.to_text() + " ; " +
                             key.lambda.to_text() + " ; " + std::to_string(key.k) +
                             ") is unknown");
    return q.value;
}

void ExtTable::insert(ExtKey key, Entry entry) {
    if (auto forced = structural_value(key)) {
        if (entry.value != *forced)
            throw invariant_error("ext entry " + key.to_text() + " = " +
                                  entry.value.str() + " violates the forced value " +
                                  forced->str());
    }
    auto it = entries_.find(key);
    if (it != entries_.end()) {
        if (it->second.value != entry.value)
            throw conflict_error("ext cell " + key.to_text() + ": " +
                                 it->second.value.str() + " vs " + entry.value.str());
        return;
    }
    entries_.emplace(std::move(key), std::move(entry));
}

std::set<ExtKey> ExtTable::hypothesis_closure(const ExtKey& key) const {
    std::set<ExtKey> closure;
    std::set<ExtKey> visited;
    std::vector<ExtKey> stack{key};
    while (!stack.empty()) {
        ExtKey cur = stack.back();
        stack.pop_back();
        if (!visited.insert(cur).second) continue;
        auto it = entries_.find(cur);
        if (it == entries_.end()) continue;
        for (auto& h : it->second.hypothesis) closure.insert(h);
        for (auto& c : it->second.consumed) stack.push_back(c);
    }
    return closure;
}

void serialize(const ExtTable& table, std::ostream& out) {
    for (auto& [key, entry] : table.entries()) {
        out << key.to_text() << " ; " << entry.value << " ; "
            << to_string(entry.status);
        if (entry.conditional) out << ",conditional";
        out << "\n";
    }
}

namespace {

std::string trim_copy(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_semi(const std::string& s) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t semi = s.find(';', pos);
        out.push_back(
            trim_copy(s.substr(pos, semi == std::string::npos ? semi : semi - pos)));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return out;
}

Int parse_int_field(const std::string& field, const std::string& where) {
    if (field.empty()) throw load_error(where + ": missing integer");
    size_t start = field[0] == '-' ? 1 : 0;
    if (start == field.size()) throw load_error(where + ": bad integer");
    for (size_t i = start; i < field.size(); ++i)
        if (field[i] < '0' || field[i] > '9')
            throw load_error(where + ": bad integer '" + field + "'");
    return Int(field);
}

ExtStatus parse_status(const std::string& s, const std::string& where) {
    if (s == "forced-zero") return ExtStatus::forced_zero;
    if (s == "computed") return ExtStatus::computed;
    if (s == "fixture") return ExtStatus::fixture;
    if (s == "contradiction") return ExtStatus::contradiction;
    throw load_error(where + ": unknown status '" + s + "'");
}

}  // namespace

ExtTable parse_ext_file(std::istream& in, const std::string& name) {
    ExtTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = name + ":" + std::to_string(lineno);
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim_copy(line);
        if (line.empty()) continue;
        if (line.rfind("ext ", 0) != 0 && line != "ext")
            throw load_error(where + ": expected an 'ext' record");
        auto fields = split_semi(line.substr(3));
        if (fields.size() != 5)
            throw load_error(where +
                             ": expected 'ext <nu> ; <lambda> ; <k> ; <value> ; <status>'");
        ExtKey key{Partition::parse(fields[0]), Partition::parse(fields[1]),
                   parse_int_field(fields[2], where).convert_to<int>()};
        ExtTable::Entry entry;
        entry.value = parse_int_field(fields[3], where);
        std::string status = fields[4];
        if (auto comma = status.find(','); comma != std::string::npos) {
            if (trim_copy(status.substr(comma + 1)) != "conditional")
                throw load_error(where + ": unknown status flag");
            entry.conditional = true;
            status = trim_copy(status.substr(0, comma));
        }
        entry.status = parse_status(status, where);
        table.insert(std::move(key), std::move(entry));
    }
    return table;
}

ExtTable load_ext_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw load_error("cannot open '" + path + "'");
    return parse_ext_file(in, path);
}

bool E1Support::known_zero(int p, int q) const {
    if (!contains(p, q)) return false;
    if (p + q == 0 && p != nu_size) return true;
    if (p + q == 1 && p != nu_size + 1) return true;
    return false;
}

E1Support e1_support(int nu_size, int lambda_size) {
    E1Support s;
    s.nu_size = nu_size;
    s.lambda_size = lambda_size;
    int p_min = nu_size;
    if (lambda_size >= 2) p_min = std::max(p_min, 2);
    for (int p = p_min; p <= lambda_size; ++p)
        for (int q = -p; q <= -nu_size; ++q) s.region.insert({p, q});
    return s;
}

namespace {

RowComplex build_row_complex_impl(const Partition& nu, const Partition& lambda,
                                  const ExtTable& ext, const MultTable& mult,
                                  const std::set<ExtKey>* unavailable) {
    int n = nu.size(), m = lambda.size();
    if (m <= n)
        throw invariant_error("row complex needs |lambda| > |nu|, got (" +
                              nu.to_text() + " ; " + lambda.to_text() + ")");

    RowComplex c;
    c.nu = nu;
    c.lambda = lambda;
    c.term_dims.assign(m - n + 1, std::nullopt);
    c.blame.assign(m - n + 1, {});

    for (int p = n; p <= m; ++p) {
        Int term = 0;
        for (auto& rho : generate_partitions(p)) {
            Int mv = mult.at(lambda, rho);  // coverage error names the cell
            if (mv == 0) continue;
            c.blame[p - n].push_back(
                {RowComplex::BlameRef::mult_cell, lambda, rho, 0});

            // Cells below the concentration line that this row assumes away.
            for (int k = 2; k < rho.size() - n; ++k)
                c.hypothesis.push_back({nu, rho, k});

            if (p == m) continue;  // the unknown slot
            ExtKey key{nu, rho, p - n};
            if (unavailable && unavailable->count(key))
                throw DependsOnContradiction{key};
            auto q = ext.query(key);
            if (!q.is_known())
                throw coverage_error("ext cell (" + key.nu.to_text() + " ; " +
                                     key.lambda.to_text() + " ; " +
                                     std::to_string(key.k) + ") is unknown");
            if (q.entry) {
                if (q.entry->status == ExtStatus::contradiction)
                    throw DependsOnContradiction{key};
                c.consumed.push_back(key);
            }
            c.blame[p - n].push_back(
                {RowComplex::BlameRef::ext_cell, nu, rho, p - n});
            term += mv * q.value;
        }
        if (p < m) c.term_dims[p - n] = std::move(term);
    }
    return c;
}

}  // namespace

RowComplex build_row_complex(const Partition& nu, const Partition& lambda,
                             const ExtTable& ext, const MultTable& mult) {
    return build_row_complex_impl(nu, lambda, ext, mult, nullptr);
}

std::variant<Int, ContradictionReport> solve_acyclic(const RowComplex& c,
                                                     const ExtTable& ext) {
    if (c.term_dims.empty() || c.term_dims.back().has_value())
        throw invariant_error("malformed complex: unknown slot must be last");
    for (size_t i = 0; i + 1 < c.term_dims.size(); ++i)
        if (!c.term_dims[i].has_value())
            throw invariant_error("malformed complex: interior unknown slot");

    // Alternating sum over p = |nu| .. |lambda| must vanish.
    int len = int(c.term_dims.size());
    Int forced = 0;
    for (int i = 0; i + 1 < len; ++i) {
        int exponent = len - 2 - i;  // (m-1-p) with i = p - n
        Int t = *c.term_dims[i];
        forced += (exponent % 2 ? -t : t);
    }

    if (forced >= 0) return forced;

    ContradictionReport report;
    report.nu = c.nu;
    report.lambda = c.lambda;
    for (int i = 0; i + 1 < len; ++i) report.term_dims.push_back(*c.term_dims[i]);
    report.term_dims.push_back(forced);
    report.forced_value = forced;

    std::set<ExtKey> blame(c.hypothesis.begin(), c.hypothesis.end());
    for (auto& key : c.consumed) {
        auto sub = ext.hypothesis_closure(key);
        blame.insert(sub.begin(), sub.end());
    }
    report.blame_set.assign(blame.begin(), blame.end());
    return report;
}

std::string ContradictionReport::render() const {
    int n = nu.size(), m = lambda.size();
    std::ostringstream out;
    out << "contradiction nu=" << nu.to_text() << " lambda=" << lambda.to_text()
        << "\n";
    out << "  terms p=" << n << ".." << m << " :";
    for (auto& t : term_dims) out << " " << t;
    out << "\n";
    out << "  forced value : " << forced_value << "\n";
    out << "  blame :\n";
    if (blame_set.empty()) out << "    (none)\n";
    for (auto& key : blame_set) out << "    " << key.to_text() << "\n";
    return out.str();
}

Ext2Result compute_ext2_table(int n, const MultTable& mult) {
    if (n < 2) throw invariant_error("compute_ext2_table: n must be >= 2");
    Ext2Result result(n);
    for (auto& nu : generate_partitions(n - 2)) {
        for (auto& lambda : generate_partitions(n)) {
            Int middle = 0;
            for (auto& rho : generate_partitions(n - 1))
                middle += mult.at(lambda, rho) * mult.at(rho, nu);
            Int direct = mult.at(lambda, nu);
            if (middle < direct)
                throw invariant_error(
                    "Ext^2 injectivity fails at (" + nu.to_text() + " ; " +
                    lambda.to_text() + "): " + middle.str() + " < " + direct.str());
            Int value = middle - direct;
            result.values[{nu, lambda}] = value;
            result.birep.add(nu, lambda, value);
        }
    }
    result.total_dim = result.birep.dimension();
    return result;
}

RecursionResult run_koszul_recursion(int max_degree, const MultTable& mult,
                                     ContradictionPolicy policy) {
    RecursionResult result;
    result.table.hypothesis_flag = true;
    std::set<ExtKey> unavailable;

    for (int m = 2; m <= max_degree; ++m) {
        for (int k = 1; k <= m; ++k) {
            int n = m - k;
            for (auto& nu : generate_partitions(n)) {
                for (auto& lambda : generate_partitions(m)) {
                    RowComplex row;
                    try {
                        row = build_row_complex_impl(nu, lambda, result.table, mult,
                                                     &unavailable);
                    } catch (const DependsOnContradiction&) {
                        result.skipped.push_back({nu, lambda});
                        unavailable.insert({nu, lambda, k});
                        continue;
                    }
                    auto solved = solve_acyclic(row, result.table);
                    ExtKey key{nu, lambda, k};
                    if (auto* value = std::get_if<Int>(&solved)) {
                        ExtTable::Entry entry;
                        entry.value = *value;
                        entry.status = ExtStatus::computed;
                        entry.consumed = row.consumed;
                        entry.hypothesis = row.hypothesis;
                        entry.conditional = !row.hypothesis.empty();
                        if (!entry.conditional)
                            for (auto& c : row.consumed) {
                                auto q = result.table.query(c);
                                if (q.entry && q.entry->conditional) {
                                    entry.conditional = true;
                                    break;
                                }
                            }
                        result.table.insert(std::move(key), std::move(entry));
                    } else {
                        auto report = std::get<ContradictionReport>(solved);
                        ExtTable::Entry entry;
                        entry.value = report.forced_value;
                        entry.status = ExtStatus::contradiction;
                        entry.conditional = true;
                        entry.consumed = row.consumed;
                        entry.hypothesis = row.hypothesis;
                        result.table.insert(key, std::move(entry));
                        result.reports.push_back(std::move(report));
                        if (policy == ContradictionPolicy::halt_on_first)
                            return result;
                    }
                }
            }
        }
    }
    return result;
}

MultTable invert_for_multiplicities(const ExtTable& ext, int max_degree) {
    MultTable t;
    for (int m = 0; m <= max_degree; ++m)
        for (auto& lambda : generate_partitions(m))
            t.insert(lambda, lambda, 1, Provenance::derived);

    for (int m = 2; m <= max_degree; ++m) {
        for (auto& lambda : generate_partitions(m)) {
            for (int n = m - 1; n >= 0; --n) {
                for (auto& nu : generate_partitions(n)) {
                    // mult(lambda, nu) closes the Euler characteristic of the
                    // row complex whose higher terms are already known.
                    Int value = 0;
                    for (int p = n + 1; p <= m; ++p) {
                        Int term = 0;
                        for (auto& rho : generate_partitions(p)) {
                            Int mv = t.at(lambda, rho);
                            if (mv == 0) continue;
                            ExtKey key{nu, rho, p - n};
                            auto q = ext.query(key);
                            if (!q.is_known())
                                throw coverage_error(
                                    "inversion needs unknown cell " + key.to_text());
                            if (q.entry && q.entry->status == ExtStatus::contradiction)
                                throw invariant_error(
                                    "inversion reached contradicted cell " +
                                    key.to_text());
                            term += mv * q.value;
                        }
                        value += ((p - n - 1) % 2 ? -term : term);
                    }
                    if (value < 0)
                        throw invariant_error("inversion forces negative multiplicity " +
                                              value.str() + " at (" + lambda.to_text() +
                                              " ; " + nu.to_text() + ")");
                    t.insert(lambda, nu, value, Provenance::derived);
                }
            }
        }
    }
    return t;
}

A2Report verify_a2_vanishing(const MultTable& mult, int max_degree) {
    A2Report report;
    const Partition two = Partition::parse("2");
    const Partition one_one = Partition::parse("1,1");
    const Partition one_cubed = Partition::parse("1,1,1");

    report.ext0_square.add(one_one, one_one, 1);
    report.ext0_square.add(two, two, 1);

    bool degree3_known = true;
    for (auto& lambda : generate_partitions(3))
        for (auto& rho : generate_partitions(2))
            if (!mult.query(lambda, rho).is_known()) degree3_known = false;
    if (degree3_known) {
        BiRep ext1(2, 3);
        for (auto& nu : generate_partitions(2))
            for (auto& lambda : generate_partitions(3))
                ext1.add(nu, lambda, mult.at(lambda, nu));
        report.ext1_square_cube = std::move(ext1);
    }

    for (int n = 4; n <= max_degree; ++n) {
        bool known = true;
        for (auto& lambda : generate_partitions(n)) {
            auto q2 = mult.query(lambda, two);
            auto q3 = mult.query(lambda, one_cubed);
            if (!q2.is_known() || !q3.is_known()) {
                known = false;
                continue;
            }
            if (mult.at(lambda, one_one) != 0)
                report.failures.push_back("mult(" + lambda.to_text() + " ; 1,1) != 0");
            if (q2.value != q3.value)
                report.failures.push_back("mult(" + lambda.to_text() +
                                          " ; 2) = " + q2.value.str() +
                                          " != mult(" + lambda.to_text() +
                                          " ; 1,1,1) = " + q3.value.str());
        }
        if (!known)
            report.skipped_degrees.push_back(n);
        else
            report.max_checked = n;
    }
    report.pass = report.failures.empty();
    return report;
}

BiRep assemble_equivariant(int n, int m, const ExtTable& ext, int k) {
    BiRep out(n, m);
    for (auto& nu : generate_partitions(n))
        for (auto& lambda : generate_partitions(m))
            out.add(nu, lambda, ext.at({nu, lambda, k}));
    return out;
}

}  // namespace outext
