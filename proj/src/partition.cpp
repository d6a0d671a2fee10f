#include "outext/partition.hpp"

#include <algorithm>
#include <numeric>

#include "outext/errors.hpp"

namespace outext {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw invariant_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw invariant_error("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    if (text.empty()) return Partition();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view field =
            text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        if (field.empty())
            throw load_error("empty field in partition '" + std::string(text) + "'");
        int value = 0;
        for (char c : field) {
            if (c < '0' || c > '9')
                throw load_error("bad character in partition '" + std::string(text) + "'");
            value = value * 10 + (c - '0');
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const Error& e) {
        throw load_error("invalid partition '" + std::string(text) + "': " + e.what());
    }
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.assign(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

std::string Partition::to_text() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::string Partition::to_display() const {
    std::string s;
    size_t i = 0;
    while (i < parts_.size()) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!s.empty()) s += ',';
        s += std::to_string(parts_[i]);
        if (j - i > 1) s += '^' + std::to_string(j - i);
        i = j;
    }
    return s;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (size_ != o.size_) return size_ <=> o.size_;
    // Reverse lexicographic: larger leading parts come first.
    size_t n = std::min(parts_.size(), o.parts_.size());
    for (size_t i = 0; i < n; ++i)
        if (parts_[i] != o.parts_[i]) return o.parts_[i] <=> parts_[i];
    return o.parts_.size() <=> parts_.size();
}

namespace {

void generate_rec(int remaining, int max_part, std::vector<int>& stack,
                  std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        generate_rec(remaining - p, p, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> generate_partitions(int n) {
    if (n < 0) throw invariant_error("generate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> stack;
    generate_rec(n, n == 0 ? 1 : n, stack, out);
    return out;
}

Int hook_dimension(const Partition& lambda) {
    const auto& parts = lambda.parts();
    Partition conj = lambda.conjugate();
    Int hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < parts[i]; ++j)
            hooks *= (parts[i] - j) + (conj.parts()[j] - i) - 1;
    return factorial(lambda.size()) / hooks;
}

std::vector<Partition> remove_box_partitions(const Partition& lambda) {
    if (lambda.empty())
        throw invariant_error("remove_box_partitions: empty partition has no corner");
    std::vector<Partition> out;
    const auto& parts = lambda.parts();
    for (int i = 0; i < lambda.length(); ++i) {
        bool corner = (i + 1 == lambda.length()) || parts[i] > parts[i + 1];
        if (!corner) continue;
        std::vector<int> reduced = parts;
        if (--reduced[i] == 0) reduced.erase(reduced.begin() + i);
        out.push_back(Partition(std::move(reduced)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> hook_family(int m) {
    if (m < 1) throw invariant_error("hook_family: m must be >= 1");
    std::vector<Partition> out;
    for (int a = 1; 2 * a <= m + 1; ++a) {
        int b = m + 1 - 2 * a;
        std::vector<int> parts(1 + b, 1);
        parts[0] = a;
        out.push_back(Partition(std::move(parts)));
    }
    return out;
}

Int centralizer_order(const Partition& mu) {
    Int z = 1;
    const auto& parts = mu.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        int mult = int(j - i);
        for (int k = 0; k < mult; ++k) z *= parts[i];
        z *= factorial(mult);
        i = j;
    }
    return z;
}

std::vector<CycleType> cycle_types(int n) {
    std::vector<CycleType> out;
    for (auto& mu : generate_partitions(n))
        out.push_back({mu, centralizer_order(mu)});
    return out;
}

}  // namespace outext
