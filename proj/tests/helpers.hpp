#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "outext/errors.hpp"
#include "outext/multdata.hpp"
#include "outext/repring.hpp"

namespace outext::testing {

inline std::string source_path(const std::string& rel) {
    return std::string(OUTEXT_SOURCE_DIR) + "/" + rel;
}

inline std::string load_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw load_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Parses the quoted-CSV term format: "<nu>","<lambda>",<coeff> per line.
inline BiRep load_birep_csv(const std::string& path, int n, int m) {
    BiRep out(n, m);
    std::ifstream in(path);
    if (!in) throw load_error("cannot open '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        size_t q1 = line.find('"'), q2 = line.find('"', q1 + 1);
        size_t q3 = line.find('"', q2 + 1), q4 = line.find('"', q3 + 1);
        size_t comma = line.find(',', q4 + 1);
        if (q4 == std::string::npos || comma == std::string::npos)
            throw load_error("bad csv line '" + line + "' in " + path);
        out.add(Partition::parse(line.substr(q1 + 1, q2 - q1 - 1)),
                Partition::parse(line.substr(q3 + 1, q4 - q3 - 1)),
                Int(line.substr(comma + 1)));
    }
    return out;
}

/// A hand-checked consistent table through degree 4: every value the
/// recursion forces from it is nonnegative, with some nonzero Ext^2 groups.
inline MultTable synthetic_consistent_table() {
    MultTable t = builtin_table(4);
    auto put = [&](const char* l, const char* r, int v) {
        t.insert(Partition::parse(l), Partition::parse(r), v, Provenance::fixture);
    };
    put("3", "2", 1);
    put("3", "1,1", 0);
    put("2,1", "2", 1);
    put("2,1", "1,1", 1);
    put("4", "2", 1);
    put("4", "3", 1);
    put("4", "2,1", 0);
    put("4", "1,1,1", 0);
    put("3,1", "2", 1);
    put("3,1", "3", 1);
    put("3,1", "2,1", 1);
    put("3,1", "1,1,1", 0);
    put("2,2", "2", 1);
    put("2,2", "3", 0);
    put("2,2", "2,1", 2);
    put("2,2", "1,1,1", 1);
    put("2,1,1", "2", 0);
    put("2,1,1", "3", 0);
    put("2,1,1", "2,1", 1);
    put("2,1,1", "1,1,1", 1);
    return t;
}

/// Same table except the (3,1) row forces Ext^2((2),(3,1)) = 1 - 2 = -1.
inline MultTable synthetic_contradiction_table() {
    MultTable t = builtin_table(4);
    auto put = [&](const char* l, const char* r, int v) {
        t.insert(Partition::parse(l), Partition::parse(r), v, Provenance::fixture);
    };
    put("3", "2", 1);
    put("3", "1,1", 0);
    put("2,1", "2", 1);
    put("2,1", "1,1", 1);
    put("4", "2", 1);
    put("4", "3", 1);
    put("4", "2,1", 0);
    put("4", "1,1,1", 0);
    put("3,1", "2", 2);
    put("3,1", "3", 0);
    put("3,1", "2,1", 1);
    put("3,1", "1,1,1", 0);
    put("2,2", "2", 1);
    put("2,2", "3", 0);
    put("2,2", "2,1", 2);
    put("2,2", "1,1,1", 1);
    put("2,1,1", "2", 0);
    put("2,1,1", "3", 0);
    put("2,1,1", "2,1", 1);
    put("2,1,1", "1,1,1", 1);
    return t;
}

}  // namespace outext::testing
