#include "grk1/grading.hpp"

#include <sstream>

namespace grk1 {

namespace {

int64_t mod_reduce(int64_t v, int64_t n) {
    int64_t r = v % n;
    return r < 0 ? r + n : r;
}

} // namespace

GradeGroup::GradeGroup(int free_rank, std::vector<int64_t> torsion_orders)
    : free_rank_(free_rank), torsion_(std::move(torsion_orders)) {
    if (free_rank < 0)
        throw invalid_argument("grade group free rank must be non-negative");
    for (int64_t n : torsion_)
        if (n < 2)
            throw invalid_argument("grade group torsion orders must be >= 2");
}

int64_t GradeGroup::order() const {
    if (!is_finite())
        throw unsupported("order() of an infinite grade group");
    int64_t o = 1;
    for (int64_t n : torsion_) o *= n;
    return o;
}

std::string GradeGroup::text() const {
    std::ostringstream os;
    os << "Z^" << free_rank_;
    for (int64_t n : torsion_) os << " x Z/" << n;
    return os.str();
}

GradeElement::GradeElement(GradeGroup group, std::vector<int64_t> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != group_.coord_count())
        throw invalid_argument("grade element has " + std::to_string(coords_.size()) +
                               " coordinates, group needs " +
                               std::to_string(group_.coord_count()));
    const auto& tors = group_.torsion_orders();
    for (size_t i = 0; i < tors.size(); ++i) {
        auto& c = coords_[group_.free_rank() + i];
        c = mod_reduce(c, tors[i]);
    }
}

bool GradeElement::is_zero() const {
    for (int64_t c : coords_)
        if (c != 0) return false;
    return true;
}

std::string GradeElement::text() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ",";
        os << coords_[i];
    }
    os << ")";
    return os.str();
}

GradeElement grade_zero(const GradeGroup& g) {
    return GradeElement(g, std::vector<int64_t>(g.coord_count(), 0));
}

GradeElement grade_add(const GradeElement& a, const GradeElement& b) {
    if (a.group() != b.group())
        throw group_mismatch("grade_add across different grade groups");
    std::vector<int64_t> c(a.coords());
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
    return GradeElement(a.group(), std::move(c));
}

GradeElement grade_neg(const GradeElement& a) {
    std::vector<int64_t> c(a.coords());
    for (auto& v : c) v = -v;
    return GradeElement(a.group(), std::move(c));
}

GradeElement grade_sub(const GradeElement& a, const GradeElement& b) {
    return grade_add(a, grade_neg(b));
}

std::vector<GradeElement> grade_enumerate(const GradeGroup& g) {
    if (!g.is_finite())
        throw unsupported("cannot enumerate an infinite grade group");
    std::vector<GradeElement> out;
    std::vector<int64_t> coords(g.coord_count(), 0);
    const auto& tors = g.torsion_orders();
    while (true) {
        out.emplace_back(g, coords);
        int i = static_cast<int>(coords.size()) - 1;
        for (; i >= 0; --i) {
            if (++coords[i] < tors[i]) break;
            coords[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

} // namespace grk1
