#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ybh/braided.hpp"

namespace ybh {

// Group given by a Cayley table; validated at construction.
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels = {});

    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::size_t n);
    // Permutations of {0..n-1} in lexicographic order; composition (pq)(i) = p(q(i)).
    static FiniteGroup symmetric(std::size_t n);
    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

    std::size_t order() const { return table_.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inv(std::size_t a) const { return inverse_[a]; }
    std::size_t identity() const { return identity_; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool is_abelian() const;

private:
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::string> labels_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

// Disjoint union of groups with a star operation table on the union.
// Elements are numbered component by component, in each group's order.
class MCQ {
public:
    MCQ(std::vector<FiniteGroup> components, std::vector<std::vector<std::size_t>> star);

    // Single group with x * y = y^{-1} x y.
    static MCQ conjugation(const FiniteGroup& g);
    // Abelian groups with x * y = x.
    static MCQ trivial_union(const std::vector<FiniteGroup>& groups);

    std::size_t size() const { return star_.size(); }
    const std::vector<FiniteGroup>& components() const { return components_; }
    const std::vector<std::vector<std::size_t>>& star_table() const { return star_; }
    std::size_t star(std::size_t x, std::size_t y) const { return star_[x][y]; }
    std::size_t component_of(std::size_t x) const { return component_[x]; }
    // Product of x, y in the same component.
    std::size_t mul(std::size_t x, std::size_t y) const;

private:
    friend CheckResult check_mcq(const MCQ& q);
    MCQ(std::vector<FiniteGroup> components, std::vector<std::vector<std::size_t>> star, bool validate);

    std::vector<FiniteGroup> components_;
    std::vector<std::vector<std::size_t>> star_;
    std::vector<std::size_t> component_;
    std::vector<std::size_t> offset_;
};

// The four MCQ axioms, exhaustively; used by the MCQ constructor.
CheckResult check_mcq(const MCQ& q);
CheckResult check_mcq_table(const std::vector<FiniteGroup>& components,
                            const std::vector<std::vector<std::size_t>>& star);

AssociativeAlgebra group_algebra(const FiniteGroup& g, const FieldSpec& k);
BraidedAlgebra from_mcq(const MCQ& q, const FieldSpec& k);
// Pairs (x, y) indexed x * |G| + y.
BraidedAlgebra from_heap(const FiniteGroup& g, const FieldSpec& k);
BraidedAlgebra trivial_braiding(const AssociativeAlgebra& a);

// n x n matrix units, E_ij indexed i * n + j.
AssociativeAlgebra matrix_algebra(std::size_t n, const FieldSpec& k);
// k[t]/(t^2) with basis (1, t).
AssociativeAlgebra dual_numbers(const FieldSpec& k);

}  // namespace ybh
