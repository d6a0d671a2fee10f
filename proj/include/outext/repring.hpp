#pragma once

#include <map>
#include <string>
#include <utility>

#include "outext/partition.hpp"

namespace outext {

/// An element of the representation ring of S_n: an integer combination of
/// Specht classes [lambda], lambda |- n. Zero coefficients are never stored.
class VirtualRep {
public:
    explicit VirtualRep(int level) : level_(level) {}

    int level() const { return level_; }
    const std::map<Partition, Int>& coeffs() const { return coeffs_; }

    Int coeff(const Partition& lambda) const;
    void add(const Partition& lambda, const Int& c);

    VirtualRep& operator+=(const VirtualRep& o);
    VirtualRep operator-(const VirtualRep& o) const;
    bool operator==(const VirtualRep& o) const = default;
    bool is_zero() const { return coeffs_.empty(); }
    bool nonnegative() const;

    /// "1*3 + 2*2,1 + 1*1,1,1", terms in canonical order; "0" when empty.
    std::string to_text() const;

private:
    int level_;
    std::map<Partition, Int> coeffs_;
};

/// A class function on S_n with exact rational values, stored on every cycle
/// type of n.
class ClassFunction {
public:
    explicit ClassFunction(int level);

    int level() const { return level_; }
    const Rat& value(const Partition& cycle_type) const;
    void set(const Partition& cycle_type, Rat v);
    const std::map<Partition, Rat>& values() const { return values_; }

    bool operator==(const ClassFunction& o) const = default;

private:
    int level_;
    std::map<Partition, Rat> values_;
};

/// An integer combination of irreducible S_n x S_m representations
/// S_nu (x) S_lambda.
class BiRep {
public:
    BiRep(int n, int m) : levels_(n, m) {}

    std::pair<int, int> levels() const { return levels_; }
    const std::map<std::pair<Partition, Partition>, Int>& coeffs() const {
        return coeffs_;
    }
    Int coeff(const Partition& nu, const Partition& lambda) const;
    void add(const Partition& nu, const Partition& lambda, const Int& c);
    bool is_zero() const { return coeffs_.empty(); }
    bool operator==(const BiRep& o) const = default;

    /// Total dimension sum coeff * f^nu * f^lambda.
    Int dimension() const;

private:
    std::pair<int, int> levels_;
    std::map<std::pair<Partition, Partition>, Int> coeffs_;
};

/// Irreducible character chi_lambda on all cycle types of |lambda|, by the
/// Murnaghan-Nakayama rule (recursive border-strip removal, memoized).
ClassFunction character(const Partition& lambda);

/// Single character value chi_lambda(mu).
Int character_value(const Partition& lambda, const Partition& mu);

/// <f,g> = sum_mu f(mu) g(mu) / z_mu. Errors on level mismatch.
Rat inner_product(const ClassFunction& f, const ClassFunction& g);

/// Expands f in the Specht basis. Errors if any multiplicity is non-integral.
VirtualRep decompose(const ClassFunction& f);

/// The class function of a virtual representation.
ClassFunction class_function(const VirtualRep& v);

/// Branching S_n -> S_{n-1}: linear extension of corner-box removal.
VirtualRep restrict_rep(const VirtualRep& v);

/// Littlewood-Richardson coefficient c^lambda_{mu nu}, by LR skew tableau
/// enumeration (memoized).
Int lr_coefficient(const Partition& mu, const Partition& nu,
                   const Partition& lambda);

/// Induction product: bilinear extension of [mu]*[nu] = sum c^lambda [lambda].
VirtualRep lr_product(const VirtualRep& u, const VirtualRep& v);

/// sum coeff(lambda) * f^lambda.
Int dim(const VirtualRep& v);

}  // namespace outext
