#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grk1/errors.hpp"

namespace grk1 {

/// A finitely generated abelian group Z^r x Z/n_1 x ... x Z/n_k, used as the
/// grading of a ring. Elements are coordinate vectors; torsion coordinates
/// are kept reduced into [0, n_i).
class GradeGroup {
public:
    GradeGroup() = default; // trivial group
    GradeGroup(int free_rank, std::vector<int64_t> torsion_orders);

    static GradeGroup trivial() { return GradeGroup(); }
    static GradeGroup z() { return GradeGroup(1, {}); }
    static GradeGroup z_mod(int64_t n) { return GradeGroup(0, {n}); }

    int free_rank() const { return free_rank_; }
    const std::vector<int64_t>& torsion_orders() const { return torsion_; }
    int coord_count() const { return free_rank_ + static_cast<int>(torsion_.size()); }
    bool is_trivial() const { return coord_count() == 0; }
    bool is_finite() const { return free_rank_ == 0; }
    /// Number of elements; only valid for finite groups.
    int64_t order() const;

    bool operator==(const GradeGroup& o) const {
        return free_rank_ == o.free_rank_ && torsion_ == o.torsion_;
    }
    bool operator!=(const GradeGroup& o) const { return !(*this == o); }

    std::string text() const;

private:
    int free_rank_ = 0;
    std::vector<int64_t> torsion_;
};

/// An element of a GradeGroup: free coordinates first, then torsion
/// coordinates stored reduced mod their orders. Equality is structural.
class GradeElement {
public:
    GradeElement() = default; // element of the trivial group
    GradeElement(GradeGroup group, std::vector<int64_t> coords);

    const GradeGroup& group() const { return group_; }
    const std::vector<int64_t>& coords() const { return coords_; }
    bool is_zero() const;

    bool operator==(const GradeElement& o) const {
        return group_ == o.group_ && coords_ == o.coords_;
    }
    bool operator!=(const GradeElement& o) const { return !(*this == o); }
    /// Lexicographic on coordinates; only meaningful within one group.
    bool operator<(const GradeElement& o) const { return coords_ < o.coords_; }

    std::string text() const;

private:
    GradeGroup group_;
    std::vector<int64_t> coords_;
};

GradeElement grade_zero(const GradeGroup& g);
GradeElement grade_add(const GradeElement& a, const GradeElement& b);
GradeElement grade_neg(const GradeElement& a);
GradeElement grade_sub(const GradeElement& a, const GradeElement& b);

/// All elements of a finite grade group, in lexicographic coordinate order.
std::vector<GradeElement> grade_enumerate(const GradeGroup& g);

} // namespace grk1
