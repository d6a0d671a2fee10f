#include "outext/multdata.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "outext/errors.hpp"

namespace outext {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::builtin: return "builtin";
        case Provenance::dataset: return "dataset";
        case Provenance::fixture: return "fixture";
        case Provenance::derived: return "derived";
    }
    return "?";
}

namespace {

std::string cell_name(const Partition& lambda, const Partition& rho) {
    return "(" + lambda.to_text() + " ; " + rho.to_text() + ")";
}

const Partition kOneOne = Partition::parse("1,1");

}  // namespace

std::optional<Int> MultTable::structural_value(const Partition& lambda,
                                               const Partition& rho) {
    if (rho.size() > lambda.size()) return Int(0);
    if (rho.size() == lambda.size()) return Int(rho == lambda ? 1 : 0);
    if (rho.size() <= 1 && lambda.size() >= 2) return Int(0);
    if (rho == kOneOne && lambda.size() >= 4) return Int(0);
    return std::nullopt;
}

MultTable::Query MultTable::query(const Partition& lambda,
                                  const Partition& rho) const {
    auto it = entries_.find({lambda, rho});
    if (it != entries_.end()) return {Query::known, it->second.value};
    if (auto forced = structural_value(lambda, rho))
        return {Query::structural_zero, *forced};
    return {Query::unknown, Int(0)};
}

Int MultTable::at(const Partition& lambda, const Partition& rho) const {
    Query q = query(lambda, rho);
    if (!q.is_known())
        throw coverage_error("multiplicity cell " + cell_name(lambda, rho) +
                             " is unknown");
    return q.value;
}

void MultTable::insert(const Partition& lambda, const Partition& rho, Int value,
                       Provenance provenance) {
    if (value < 0)
        throw invariant_error("negative multiplicity at " + cell_name(lambda, rho));
    if (auto forced = structural_value(lambda, rho)) {
        if (value != *forced)
            throw invariant_error("entry " + cell_name(lambda, rho) + " = " +
                                  value.str() + " [" + to_string(provenance) +
                                  "] violates the forced value " + forced->str());
    }
    auto it = entries_.find({lambda, rho});
    if (it != entries_.end()) {
        if (it->second.value != value)
            throw conflict_error("cell " + cell_name(lambda, rho) + ": " +
                                 it->second.value.str() + " [" +
                                 to_string(it->second.provenance) + "] vs " +
                                 value.str() + " [" + to_string(provenance) + "]");
        return;
    }
    entries_.emplace(std::make_pair(lambda, rho), Cell{std::move(value), provenance});
    max_degree_ = std::max(max_degree_, lambda.size());
}

bool MultTable::row_complete(const Partition& lambda) const {
    for (int p = 2; p <= lambda.size(); ++p)
        for (auto& rho : generate_partitions(p))
            if (!query(lambda, rho).is_known()) return false;
    return true;
}

bool MultTable::covers_degree(int d) const {
    for (int m = 0; m <= d; ++m)
        for (auto& lambda : generate_partitions(m))
            if (!row_complete(lambda)) return false;
    return true;
}

int MultTable::coverage_degree() const {
    int d = 0;
    while (d < max_degree_ && covers_degree(d + 1)) ++d;
    return d;
}

MultTable builtin_table(int max_degree) {
    if (max_degree < 0) throw invariant_error("builtin_table: negative degree");
    MultTable t;
    for (int m = 0; m <= max_degree; ++m) {
        for (auto& lambda : generate_partitions(m)) {
            t.insert(lambda, lambda, 1, Provenance::builtin);
            if (m >= 2) {
                t.insert(lambda, Partition(), 0, Provenance::builtin);
                t.insert(lambda, Partition::parse("1"), 0, Provenance::builtin);
            }
            if (m >= 4) t.insert(lambda, kOneOne, 0, Provenance::builtin);
        }
        // Complete hook rows: the associated graded of the degree-m hook
        // column is supported exactly on hook_family(m).
        if (m >= 2) {
            Partition column(std::vector<int>(m, 1));
            auto family = hook_family(m);
            for (int p = 2; p <= m; ++p)
                for (auto& rho : generate_partitions(p)) {
                    bool member =
                        std::find(family.begin(), family.end(), rho) != family.end();
                    t.insert(column, rho, member ? 1 : 0, Provenance::builtin);
                }
        }
    }
    return t;
}

MultTable translate_gh22(const std::vector<DatasetRecord>& records,
                         Provenance provenance) {
    MultTable t;
    for (auto& rec : records) {
        if (rec.degree_drop != rec.lambda_conj.size() - rec.rho_conj.size())
            throw load_error("record (" + rec.lambda_conj.to_text() + " ; " +
                             rec.rho_conj.to_text() + ") declares degree drop " +
                             std::to_string(rec.degree_drop) + " but sizes differ by " +
                             std::to_string(rec.lambda_conj.size() - rec.rho_conj.size()));
        t.insert(rec.lambda_conj.conjugate(), rec.rho_conj.conjugate(), rec.value,
                 provenance);
    }
    return t;
}

MultTable merge_and_validate(const std::vector<MultTable>& parts) {
    MultTable merged;
    for (auto& part : parts)
        for (auto& [key, cell] : part.entries())
            merged.insert(key.first, key.second, cell.value, cell.provenance);

    // Rows for the columns (1^m) must agree with the hook closed form even if
    // no builtin fragment was supplied.
    for (auto& [key, cell] : merged.entries()) {
        const Partition& lambda = key.first;
        if (lambda.empty() || lambda.parts()[0] != 1) continue;
        auto family = hook_family(lambda.size());
        bool member = std::find(family.begin(), family.end(), key.second) != family.end();
        if (cell.value != (member ? 1 : 0))
            throw invariant_error("hook row cell " + cell_name(lambda, key.second) +
                                  " = " + cell.value.str() +
                                  " [" + to_string(cell.provenance) +
                                  "] disagrees with the hook closed form");
    }
    return merged;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_fields(const std::string& s) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t semi = s.find(';', pos);
        out.push_back(trim(s.substr(pos, semi == std::string::npos ? semi : semi - pos)));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return out;
}

Int parse_value(const std::string& field, const std::string& where) {
    if (field.empty()) throw load_error(where + ": missing value");
    for (char c : field)
        if (c < '0' || c > '9')
            throw load_error(where + ": bad value '" + field + "'");
    return Int(field);
}

int parse_small_int(const std::string& field, const std::string& where) {
    Int v = parse_value(field, where);
    if (v > 1000) throw load_error(where + ": implausible degree '" + field + "'");
    return v.convert_to<int>();
}

}  // namespace

MultTable parse_mult_file(std::istream& in, const std::string& name,
                          Provenance provenance) {
    MultTable direct;
    std::vector<DatasetRecord> records;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = name + ":" + std::to_string(lineno);
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        size_t space = line.find_first_of(" \t");
        std::string keyword = line.substr(0, space);
        std::string rest = space == std::string::npos ? "" : line.substr(space + 1);
        auto fields = split_fields(rest);

        if (keyword == "mult") {
            if (fields.size() != 3)
                throw load_error(where + ": expected 'mult <lambda> ; <rho> ; <value>'");
            direct.insert(Partition::parse(fields[0]), Partition::parse(fields[1]),
                          parse_value(fields[2], where), provenance);
        } else if (keyword == "phi") {
            if (fields.size() != 4)
                throw load_error(where +
                                 ": expected 'phi <k> ; <lambda'> ; <rho'> ; <value>'");
            DatasetRecord rec;
            rec.degree_drop = parse_small_int(fields[0], where);
            rec.lambda_conj = Partition::parse(fields[1]);
            rec.rho_conj = Partition::parse(fields[2]);
            rec.value = parse_value(fields[3], where);
            if (rec.degree_drop != rec.lambda_conj.size() - rec.rho_conj.size())
                throw load_error(where + ": degree drop " + fields[0] +
                                 " inconsistent with partition sizes");
            records.push_back(std::move(rec));
        } else {
            throw load_error(where + ": unknown keyword '" + keyword + "'");
        }
    }
    if (records.empty()) return direct;
    return merge_and_validate({direct, translate_gh22(records, provenance)});
}

MultTable load_mult_file(const std::string& path, Provenance provenance) {
    std::ifstream in(path);
    if (!in) throw load_error("cannot open '" + path + "'");
    return parse_mult_file(in, path, provenance);
}

void serialize(const MultTable& table, std::ostream& out) {
    for (auto& [key, cell] : table.entries())
        out << "mult " << key.first.to_text() << " ; " << key.second.to_text()
            << " ; " << cell.value << "\n";
}

}  // namespace outext
