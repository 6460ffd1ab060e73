#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grk1/grading.hpp"

namespace grk1 {

/// Kind-specific exact coordinates of one homogeneous element. The layout is
/// fixed per (ring kind, degree) and payloads are always stored canonical, so
/// structural equality decides element equality.
using Payload = std::vector<int64_t>;

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

/// A ring element together with its degree: the atom of all arithmetic here.
class HomElem {
public:
    HomElem() = default;
    HomElem(RingPtr ring, GradeElement degree, Payload payload);

    const RingPtr& ring() const { return ring_; }
    const GradeElement& degree() const { return degree_; }
    const Payload& payload() const { return payload_; }

    bool is_zero() const;
    HomElem operator+(const HomElem& o) const;
    HomElem operator*(const HomElem& o) const;
    HomElem operator-() const;
    HomElem operator-(const HomElem& o) const { return *this + (-o); }
    /// Two-sided inverse (degree negates) when the element is a unit.
    std::optional<HomElem> inverse() const;

    bool operator==(const HomElem& o) const;
    bool operator!=(const HomElem& o) const { return !(*this == o); }

    std::string text() const;

private:
    RingPtr ring_;
    GradeElement degree_;
    Payload payload_;
};

class GradedIdeal;

/// Interface of a graded ring whose homogeneous components carry exact,
/// canonical coordinates. All concrete kinds here are commutative and unital.
class GradedRing : public std::enable_shared_from_this<GradedRing> {
public:
    virtual ~GradedRing() = default;

    const GradeGroup& grading() const { return grading_; }
    const std::string& descriptor() const { return descriptor_; }
    /// False only for rings whose homogeneous components may not be listed
    /// exhaustively (laurent); everything brute-force requires true.
    virtual bool component_finite() const = 0;
    virtual bool strongly_graded() const { return false; }

    // payload arithmetic; degrees of both operands are required to agree for
    // add and are added by mul
    virtual Payload zero_payload(const GradeElement& deg) const = 0;
    virtual Payload one_payload() const = 0;
    virtual Payload add_payload(const GradeElement& deg, const Payload& a, const Payload& b) const = 0;
    virtual Payload neg_payload(const GradeElement& deg, const Payload& a) const = 0;
    virtual Payload mul_payload(const GradeElement& da, const Payload& a,
                                const GradeElement& db, const Payload& b) const = 0;
    virtual bool payload_is_zero(const GradeElement& deg, const Payload& a) const {
        return a == zero_payload(deg);
    }

    /// Exhaustive duplicate-free list of the component A_deg including zero,
    /// sorted by payload. Throws unsupported-operation when !component_finite.
    virtual std::vector<Payload> enumerate_component(const GradeElement& deg) const = 0;
    /// Uniform random payload of the component; works for laurent too.
    virtual Payload sample_component(const GradeElement& deg, std::mt19937_64& rng) const;

    /// Inverse payload at degree -deg when (deg, a) is a unit.
    virtual std::optional<Payload> inverse_payload(const GradeElement& deg, const Payload& a) const;
    /// Some invertible homogeneous element of the given degree, if one exists.
    /// Nonempty for every degree exactly when the ring is a crossed product.
    virtual std::optional<HomElem> invertible_of_degree(const GradeElement& deg) const;

    /// Degrees that can carry a nonzero component. Throws for laurent.
    virtual std::vector<GradeElement> support_degrees() const;

    virtual std::string payload_text(const GradeElement& deg, const Payload& a) const;

    // element-level conveniences
    HomElem zero(const GradeElement& deg) const;
    HomElem one() const;
    HomElem make(const GradeElement& deg, Payload payload) const;
    std::vector<HomElem> component(const GradeElement& deg) const;

    bool same_ring(const GradedRing& o) const { return descriptor_ == o.descriptor_; }

protected:
    GradeGroup grading_;
    std::string descriptor_;

    /// Validates that the payload is a canonical member of A_deg.
    virtual void check_payload(const GradeElement& deg, const Payload& a) const = 0;
    void check_degree(const GradeElement& deg) const;

    friend class HomElem;
};

// --- concrete kinds -------------------------------------------------------

/// Z/m concentrated in degree 0. The grading may be any finite group (all
/// other components are the zero group); by default it is trivial.
RingPtr make_zmod_ring(int64_t modulus, const GradeGroup& grading = GradeGroup::trivial());

/// F_q[x, x^-1], q prime, graded by Z with the span of x^n in degree n.
RingPtr make_laurent_ring(int64_t q);

/// F_q[Z/n] with coefficients in a prime field. When `graded` the grading is
/// Z/n with the span of g^k in degree k (a crossed product); otherwise the
/// whole group algebra sits in degree 0 of the trivial grading.
RingPtr make_group_ring(int64_t q, int64_t n, bool graded = true);

/// The ring (R, I) for R = Z/m and I = dZ/m, 1 < d < m, d | m, with
/// multiplication (r1,a1)(r2,a2) = (r1 r2, r1 a2 + r2 a1) and Z/3 grading:
/// (R,0) in degree 0, (0,I) in degree 1, zero in degree 2.
RingPtr make_pair_ring(int64_t modulus, int64_t d);

/// A/I with componentwise quotients A_deg / I_deg; payloads are the least
/// (lexicographically) coset representatives.
RingPtr make_quotient_ring(const RingPtr& base, const GradedIdeal& ideal);

/// D(A, I) = {(x, y) : x - y in I}, graded componentwise; payloads are the
/// concatenated payloads of the two coordinates.
RingPtr make_double_ring(const RingPtr& base, const GradedIdeal& ideal);

// quotient-specific views
const GradedIdeal& quotient_ideal(const GradedRing& quotient);
const RingPtr& quotient_base(const GradedRing& quotient);
/// Canonical surjection A -> A/I on elements.
HomElem reduce_mod_ideal(const HomElem& x, const RingPtr& quotient);

// double-specific views
HomElem double_pack(const RingPtr& dbl, const HomElem& x, const HomElem& y);
HomElem double_project(const HomElem& pair_elem, int coordinate); // 1 or 2
const RingPtr& double_base(const GradedRing& dbl);
const GradedIdeal& double_ideal(const GradedRing& dbl);

// --- graded ideals --------------------------------------------------------

/// A graded two-sided ideal presented by homogeneous generators. Components
/// I_deg are computed eagerly by exhaustive two-sided closure (finite rings)
/// or the unit/zero dichotomy (laurent), so membership is exact.
class GradedIdeal {
public:
    GradedIdeal(RingPtr ring, std::vector<HomElem> generators);

    const RingPtr& ring() const { return data_->ring; }
    const std::vector<HomElem>& generators() const { return data_->generators; }
    bool contains(const HomElem& x) const;
    /// Sorted payload list of I_deg.
    const std::vector<Payload>& component(const GradeElement& deg) const;
    /// I = A (some generator is a unit or closure reached everything).
    bool is_full() const { return data_->full; }
    bool is_zero_ideal() const;

    std::string text() const;

private:
    struct Data {
        RingPtr ring;
        std::vector<HomElem> generators;
        std::map<std::vector<int64_t>, std::vector<Payload>> components; // key: degree coords
        bool full = false;
        bool laurent_full = false; // laurent: full by unit generator
    };
    std::shared_ptr<const Data> data_;
};

/// Membership is decided against the eager component sets.
bool ideal_contains(const GradedIdeal& ideal, const HomElem& x);

GradedIdeal principal_ideal(const RingPtr& ring, const HomElem& gen);
/// dZ/m inside Z/m-in-degree-0, the workhorse test ideal.
GradedIdeal zmod_ideal(const RingPtr& zmod_ring, int64_t d);
/// Kernel of the coefficient-sum map on a trivially graded group algebra.
GradedIdeal augmentation_ideal(const RingPtr& group_ring);

} // namespace grk1
