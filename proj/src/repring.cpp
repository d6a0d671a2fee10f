#include "outext/repring.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "outext/errors.hpp"

namespace outext {

Int VirtualRep::coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void VirtualRep::add(const Partition& lambda, const Int& c) {
    if (lambda.size() != level_)
        throw invariant_error("VirtualRep: partition " + lambda.to_text() +
                              " does not partition level " + std::to_string(level_));
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(lambda, c);
    if (!inserted && (it->second += c) == 0) coeffs_.erase(it);
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
    if (o.level_ != level_) throw invariant_error("VirtualRep level mismatch");
    for (auto& [p, c] : o.coeffs_) add(p, c);
    return *this;
}

VirtualRep VirtualRep::operator-(const VirtualRep& o) const {
    if (o.level_ != level_) throw invariant_error("VirtualRep level mismatch");
    VirtualRep r = *this;
    for (auto& [p, c] : o.coeffs_) r.add(p, -c);
    return r;
}

bool VirtualRep::nonnegative() const {
    for (auto& [p, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

std::string VirtualRep::to_text() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (auto& [p, c] : coeffs_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*" + p.to_text();
    }
    return s;
}

ClassFunction::ClassFunction(int level) : level_(level) {
    for (auto& mu : generate_partitions(level)) values_[mu] = Rat(0);
}

const Rat& ClassFunction::value(const Partition& cycle_type) const {
    auto it = values_.find(cycle_type);
    if (it == values_.end())
        throw invariant_error("ClassFunction: " + cycle_type.to_text() +
                              " is not a cycle type of level " + std::to_string(level_));
    return it->second;
}

void ClassFunction::set(const Partition& cycle_type, Rat v) {
    auto it = values_.find(cycle_type);
    if (it == values_.end())
        throw invariant_error("ClassFunction: " + cycle_type.to_text() +
                              " is not a cycle type of level " + std::to_string(level_));
    it->second = std::move(v);
}

Int BiRep::coeff(const Partition& nu, const Partition& lambda) const {
    auto it = coeffs_.find({nu, lambda});
    return it == coeffs_.end() ? Int(0) : it->second;
}

void BiRep::add(const Partition& nu, const Partition& lambda, const Int& c) {
    if (nu.size() != levels_.first || lambda.size() != levels_.second)
        throw invariant_error("BiRep: level mismatch for (" + nu.to_text() + ", " +
                              lambda.to_text() + ")");
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(std::make_pair(nu, lambda), c);
    if (!inserted && (it->second += c) == 0) coeffs_.erase(it);
}

Int BiRep::dimension() const {
    Int d = 0;
    for (auto& [key, c] : coeffs_)
        d += c * hook_dimension(key.first) * hook_dimension(key.second);
    return d;
}

namespace {

// Beta-set of lambda padded to length len: strictly decreasing nonnegative.
std::vector<int> beta_set(const Partition& lambda, int len) {
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda.part(i) + (len - 1 - i);
    return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    int len = int(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int p = beta[i] - (len - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

// Murnaghan-Nakayama with the remaining cycle parts processed largest first.
Int mn_value(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw invariant_error("character: size mismatch");
    if (lambda.empty()) return 1;

    static std::map<std::pair<Partition, Partition>, Int> memo;
    static std::mutex memo_mutex;
    std::pair<Partition, Partition> key{lambda, mu};
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    int strip = mu.parts()[0];
    std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
    Partition mu_rest(std::move(rest));

    std::vector<int> beta = beta_set(lambda, lambda.length());
    Int total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - strip;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++height;
        std::vector<int> reduced = beta;
        reduced[i] = target;
        Int sub = mn_value(partition_from_beta(std::move(reduced)), mu_rest);
        total += (height % 2 ? -sub : sub);
    }

    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int character_value(const Partition& lambda, const Partition& mu) {
    return mn_value(lambda, mu);
}

ClassFunction character(const Partition& lambda) {
    ClassFunction chi(lambda.size());
    for (auto& mu : generate_partitions(lambda.size()))
        chi.set(mu, Rat(character_value(lambda, mu)));
    return chi;
}

Rat inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.level() != g.level())
        throw invariant_error("inner_product: level mismatch");
    Rat total(0);
    for (auto& [mu, fv] : f.values())
        total += fv * g.value(mu) / Rat(centralizer_order(mu));
    return total;
}

VirtualRep decompose(const ClassFunction& f) {
    VirtualRep v(f.level());
    for (auto& lambda : generate_partitions(f.level())) {
        Rat m = inner_product(f, character(lambda));
        if (m.denominator() != 1)
            throw invariant_error("decompose: non-integer multiplicity " +
                                  m.numerator().str() + "/" + m.denominator().str() +
                                  " at " + lambda.to_text());
        v.add(lambda, m.numerator());
    }
    return v;
}

ClassFunction class_function(const VirtualRep& v) {
    ClassFunction f(v.level());
    for (auto& mu : generate_partitions(v.level())) {
        Rat total(0);
        for (auto& [lambda, c] : v.coeffs())
            total += Rat(c * character_value(lambda, mu));
        f.set(mu, total);
    }
    return f;
}

VirtualRep restrict_rep(const VirtualRep& v) {
    if (v.level() < 1)
        throw invariant_error("restrict: cannot restrict below level 0");
    VirtualRep r(v.level() - 1);
    for (auto& [lambda, c] : v.coeffs())
        for (auto& mu : remove_box_partitions(lambda)) r.add(mu, c);
    return r;
}

namespace {

struct SkewFilling {
    const std::vector<int>* inner;   // mu parts, padded view via part()
    std::vector<std::vector<int>> grid;  // grid[r][c] for c in [mu_r, lambda_r)
};

// Counts LR tableaux of shape lambda/mu and content nu: semistandard rows /
// strict columns, reverse reading word a lattice word.
Int count_lr_tableaux(const Partition& mu, const Partition& nu,
                      const Partition& lambda) {
    int rows = lambda.length();
    std::vector<int> counts(nu.length(), 0);
    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r) grid[r].assign(lambda.parts()[r], 0);

    // Cells in reading-word order: rows top to bottom, right to left.
    struct Cell { int r, c; };
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = lambda.parts()[r] - 1; c >= mu.part(r); --c)
            cells.push_back({r, c});

    Int total = 0;
    auto in_skew = [&](int r, int c) {
        return r >= 0 && r < rows && c >= mu.part(r) && c < lambda.parts()[r];
    };
    std::function<void(size_t)> fill = [&](size_t idx) {
        if (idx == cells.size()) { ++total; return; }
        auto [r, c] = cells[idx];
        for (int v = 1; v <= nu.length(); ++v) {
            if (counts[v - 1] >= nu.parts()[v - 1]) continue;
            if (v > 1 && counts[v - 1] >= counts[v - 2]) continue;  // lattice
            if (in_skew(r, c + 1) && v > grid[r][c + 1]) continue;  // row weak
            if (in_skew(r - 1, c) && v <= grid[r - 1][c]) continue; // col strict
            grid[r][c] = v;
            ++counts[v - 1];
            fill(idx + 1);
            --counts[v - 1];
            grid[r][c] = 0;
        }
    };
    fill(0);
    return total;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts()[i] > outer.parts()[i]) return false;
    return true;
}

}  // namespace

Int lr_coefficient(const Partition& mu, const Partition& nu,
                   const Partition& lambda) {
    if (mu.size() + nu.size() != lambda.size()) return 0;
    if (!contains(lambda, mu) || !contains(lambda, nu)) return 0;

    // c^lambda_{mu nu} is symmetric in mu, nu; normalize the memo key.
    const Partition& a = (mu < nu) ? mu : nu;
    const Partition& b = (mu < nu) ? nu : mu;
    static std::map<std::tuple<Partition, Partition, Partition>, Int> memo;
    static std::mutex memo_mutex;
    std::tuple<Partition, Partition, Partition> key{a, b, lambda};
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    Int c = count_lr_tableaux(a, b, lambda);
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::move(key), c);
    return c;
}

VirtualRep lr_product(const VirtualRep& u, const VirtualRep& v) {
    VirtualRep out(u.level() + v.level());
    auto lambdas = generate_partitions(out.level());
    for (auto& [mu, cu] : u.coeffs())
        for (auto& [nu, cv] : v.coeffs())
            for (auto& lambda : lambdas) {
                Int c = lr_coefficient(mu, nu, lambda);
                if (c != 0) out.add(lambda, cu * cv * c);
            }
    return out;
}

Int dim(const VirtualRep& v) {
    Int d = 0;
    for (auto& [lambda, c] : v.coeffs()) d += c * hook_dimension(lambda);
    return d;
}

}  // namespace outext
