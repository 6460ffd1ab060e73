#include "grk1/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace grk1 {

namespace {

int64_t mod_reduce(int64_t v, int64_t n) {
    int64_t r = v % n;
    return r < 0 ? r + n : r;
}

bool is_prime(int64_t q) {
    if (q < 2) return false;
    for (int64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// inverse of a mod m, if gcd(a, m) = 1
std::optional<int64_t> mod_inverse(int64_t a, int64_t m) {
    int64_t t = 0, new_t = 1, r = m, new_r = mod_reduce(a, m);
    while (new_r != 0) {
        int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) return std::nullopt;
    return mod_reduce(t, m);
}

std::string join_coords(const std::vector<int64_t>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "]";
    return os.str();
}

} // namespace

// --- HomElem ---------------------------------------------------------------

HomElem::HomElem(RingPtr ring, GradeElement degree, Payload payload)
    : ring_(std::move(ring)), degree_(std::move(degree)), payload_(std::move(payload)) {
    if (!ring_) throw invalid_argument("homogeneous element needs a ring");
    ring_->check_degree(degree_);
    ring_->check_payload(degree_, payload_);
}

bool HomElem::is_zero() const { return ring_->payload_is_zero(degree_, payload_); }

HomElem HomElem::operator+(const HomElem& o) const {
    if (!ring_->same_ring(*o.ring_))
        throw ring_mismatch("adding elements of different rings: " + ring_->descriptor() +
                            " vs " + o.ring_->descriptor());
    if (degree_ != o.degree_)
        throw degree_mismatch("adding homogeneous elements of degrees " + degree_.text() +
                              " and " + o.degree_.text());
    return HomElem(ring_, degree_, ring_->add_payload(degree_, payload_, o.payload_));
}

HomElem HomElem::operator*(const HomElem& o) const {
    if (!ring_->same_ring(*o.ring_))
        throw ring_mismatch("multiplying elements of different rings: " + ring_->descriptor() +
                            " vs " + o.ring_->descriptor());
    GradeElement d = grade_add(degree_, o.degree_);
    return HomElem(ring_, d, ring_->mul_payload(degree_, payload_, o.degree_, o.payload_));
}

HomElem HomElem::operator-() const {
    return HomElem(ring_, degree_, ring_->neg_payload(degree_, payload_));
}

std::optional<HomElem> HomElem::inverse() const {
    auto p = ring_->inverse_payload(degree_, payload_);
    if (!p) return std::nullopt;
    return HomElem(ring_, grade_neg(degree_), std::move(*p));
}

bool HomElem::operator==(const HomElem& o) const {
    return ring_->same_ring(*o.ring_) && degree_ == o.degree_ && payload_ == o.payload_;
}

std::string HomElem::text() const { return ring_->payload_text(degree_, payload_); }

// --- GradedRing base -------------------------------------------------------

void GradedRing::check_degree(const GradeElement& deg) const {
    if (deg.group() != grading_)
        throw group_mismatch("degree " + deg.text() + " does not live in grading " +
                             grading_.text() + " of " + descriptor_);
}

Payload GradedRing::sample_component(const GradeElement& deg, std::mt19937_64& rng) const {
    auto all = enumerate_component(deg);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

std::optional<Payload> GradedRing::inverse_payload(const GradeElement& deg, const Payload& a) const {
    // generic search for a two-sided inverse in the finite component A_{-deg}
    GradeElement nd = grade_neg(deg);
    Payload one = one_payload();
    GradeElement zero = grade_zero(grading_);
    for (const Payload& b : enumerate_component(nd)) {
        if (mul_payload(deg, a, nd, b) == one && mul_payload(nd, b, deg, a) == one)
            return b;
    }
    (void)zero;
    return std::nullopt;
}

std::optional<HomElem> GradedRing::invertible_of_degree(const GradeElement& deg) const {
    check_degree(deg);
    for (const Payload& a : enumerate_component(deg)) {
        if (inverse_payload(deg, a))
            return HomElem(shared_from_this(), deg, a);
    }
    return std::nullopt;
}

std::vector<GradeElement> GradedRing::support_degrees() const {
    if (!grading_.is_finite())
        throw unsupported("support of " + descriptor_ + " over infinite grading");
    return grade_enumerate(grading_);
}

std::string GradedRing::payload_text(const GradeElement& deg, const Payload& a) const {
    (void)deg;
    return join_coords(a);
}

HomElem GradedRing::zero(const GradeElement& deg) const {
    return HomElem(shared_from_this(), deg, zero_payload(deg));
}

HomElem GradedRing::one() const {
    return HomElem(shared_from_this(), grade_zero(grading_), one_payload());
}

HomElem GradedRing::make(const GradeElement& deg, Payload payload) const {
    return HomElem(shared_from_this(), deg, std::move(payload));
}

std::vector<HomElem> GradedRing::component(const GradeElement& deg) const {
    std::vector<HomElem> out;
    for (auto& p : enumerate_component(deg))
        out.push_back(HomElem(shared_from_this(), deg, p));
    return out;
}

// --- Z/m in degree 0 --------------------------------------------------------

namespace {

class ZmodRing final : public GradedRing {
public:
    ZmodRing(int64_t m, const GradeGroup& grading) : m_(m) {
        if (m < 2) throw invalid_argument("modulus must be >= 2");
        grading_ = grading;
        std::ostringstream os;
        os << "zmod(" << m;
        if (!grading.is_trivial()) os << ";" << grading.text();
        os << ")";
        descriptor_ = os.str();
    }

    bool component_finite() const override { return true; }
    bool strongly_graded() const override { return grading_.is_trivial(); }

    Payload zero_payload(const GradeElement& deg) const override {
        return deg.is_zero() ? Payload{0} : Payload{};
    }
    Payload one_payload() const override { return {1}; }

    Payload add_payload(const GradeElement& deg, const Payload& a, const Payload& b) const override {
        if (!deg.is_zero()) return {};
        return {mod_reduce(a[0] + b[0], m_)};
    }
    Payload neg_payload(const GradeElement& deg, const Payload& a) const override {
        if (!deg.is_zero()) return {};
        return {mod_reduce(-a[0], m_)};
    }
    Payload mul_payload(const GradeElement& da, const Payload& a,
                        const GradeElement& db, const Payload& b) const override {
        if (a.empty() || b.empty()) return zero_payload(grade_add(da, db));
        return {mod_reduce(a[0] * b[0], m_)};
    }

    std::vector<Payload> enumerate_component(const GradeElement& deg) const override {
        check_degree(deg);
        if (!deg.is_zero()) return {Payload{}};
        std::vector<Payload> out;
        for (int64_t v = 0; v < m_; ++v) out.push_back({v});
        return out;
    }

    std::optional<Payload> inverse_payload(const GradeElement& deg, const Payload& a) const override {
        if (!deg.is_zero() || a.empty()) return std::nullopt;
        auto inv = mod_inverse(a[0], m_);
        if (!inv) return std::nullopt;
        return Payload{*inv};
    }

    std::vector<GradeElement> support_degrees() const override {
        return {grade_zero(grading_)};
    }

    std::string payload_text(const GradeElement&, const Payload& a) const override {
        return a.empty() ? "0" : std::to_string(a[0]);
    }

protected:
    void check_payload(const GradeElement& deg, const Payload& a) const override {
        if (deg.is_zero()) {
            if (a.size() != 1 || a[0] < 0 || a[0] >= m_)
                throw invalid_argument("payload " + join_coords(a) + " is not a residue mod " +
                                       std::to_string(m_));
        } else if (!a.empty()) {
            throw invalid_argument("component of " + descriptor() + " at degree " + deg.text() +
                                   " is zero; payload must be empty");
        }
    }

private:
    int64_t m_;
};

// --- F_q[x, x^-1] ------------------------------------------------------------

class LaurentRing final : public GradedRing {
public:
    explicit LaurentRing(int64_t q) : q_(q) {
        if (!is_prime(q)) throw invalid_argument("laurent coefficient field order must be prime");
        grading_ = GradeGroup::z();
        descriptor_ = "laurent(" + std::to_string(q) + ")";
    }

    bool component_finite() const override { return false; }
    bool strongly_graded() const override { return true; }

    Payload zero_payload(const GradeElement&) const override { return {0}; }
    Payload one_payload() const override { return {1}; }

    Payload add_payload(const GradeElement&, const Payload& a, const Payload& b) const override {
        return {mod_reduce(a[0] + b[0], q_)};
    }
    Payload neg_payload(const GradeElement&, const Payload& a) const override {
        return {mod_reduce(-a[0], q_)};
    }
    Payload mul_payload(const GradeElement&, const Payload& a,
                        const GradeElement&, const Payload& b) const override {
        return {mod_reduce(a[0] * b[0], q_)};
    }

    std::vector<Payload> enumerate_component(const GradeElement&) const override {
        throw unsupported("components of " + descriptor() + " cannot be enumerated");
    }

    Payload sample_component(const GradeElement&, std::mt19937_64& rng) const override {
        std::uniform_int_distribution<int64_t> pick(0, q_ - 1);
        return {pick(rng)};
    }

    std::optional<Payload> inverse_payload(const GradeElement&, const Payload& a) const override {
        if (a[0] == 0) return std::nullopt;
        return Payload{*mod_inverse(a[0], q_)};
    }

    std::optional<HomElem> invertible_of_degree(const GradeElement& deg) const override {
        check_degree(deg);
        return HomElem(shared_from_this(), deg, {1}); // x^deg
    }

    std::string payload_text(const GradeElement& deg, const Payload& a) const override {
        int64_t n = deg.coords()[0];
        if (a[0] == 0) return "0";
        if (n == 0) return std::to_string(a[0]);
        std::string mono = "x^" + std::to_string(n);
        return a[0] == 1 ? mono : std::to_string(a[0]) + mono;
    }

protected:
    void check_payload(const GradeElement&, const Payload& a) const override {
        if (a.size() != 1 || a[0] < 0 || a[0] >= q_)
            throw invalid_argument("payload " + join_coords(a) + " is not a coefficient in F_" +
                                   std::to_string(q_));
    }

private:
    int64_t q_;
};

// --- F_q[Z/n] ----------------------------------------------------------------

// graded = true: Z/n grading with F_q g^k in degree k (a crossed product).
// graded = false: the whole group algebra in degree 0 of the trivial grading,
// payload = coefficient vector (c_0, ..., c_{n-1}).
class GroupRing final : public GradedRing {
public:
    GroupRing(int64_t q, int64_t n, bool graded) : q_(q), n_(n), graded_(graded) {
        if (!is_prime(q)) throw invalid_argument("group ring coefficient field order must be prime");
        if (n < 2) throw invalid_argument("group ring cyclic order must be >= 2");
        grading_ = graded ? GradeGroup::z_mod(n) : GradeGroup::trivial();
        std::ostringstream os;
        os << "groupring(q=" << q << ",n=" << n << "," << (graded ? "graded" : "trivial") << ")";
        descriptor_ = os.str();
    }

    bool component_finite() const override { return true; }
    bool strongly_graded() const override { return true; }

    Payload zero_payload(const GradeElement&) const override {
        return Payload(graded_ ? 1 : n_, 0);
    }
    Payload one_payload() const override {
        Payload p(graded_ ? 1 : n_, 0);
        p[0] = 1;
        return p;
    }

    Payload add_payload(const GradeElement&, const Payload& a, const Payload& b) const override {
        Payload out(a.size());
        for (size_t i = 0; i < a.size(); ++i) out[i] = mod_reduce(a[i] + b[i], q_);
        return out;
    }
    Payload neg_payload(const GradeElement&, const Payload& a) const override {
        Payload out(a.size());
        for (size_t i = 0; i < a.size(); ++i) out[i] = mod_reduce(-a[i], q_);
        return out;
    }
    Payload mul_payload(const GradeElement&, const Payload& a,
                        const GradeElement&, const Payload& b) const override {
        if (graded_) return {mod_reduce(a[0] * b[0], q_)};
        Payload out(n_, 0); // cyclic convolution
        for (int64_t i = 0; i < n_; ++i)
            for (int64_t j = 0; j < n_; ++j)
                out[(i + j) % n_] = mod_reduce(out[(i + j) % n_] + a[i] * b[j], q_);
        return out;
    }

    std::vector<Payload> enumerate_component(const GradeElement& deg) const override {
        check_degree(deg);
        std::vector<Payload> out;
        if (graded_) {
            for (int64_t c = 0; c < q_; ++c) out.push_back({c});
            return out;
        }
        Payload p(n_, 0);
        while (true) {
            out.push_back(p);
            int64_t i = n_ - 1;
            for (; i >= 0; --i) {
                if (++p[i] < q_) break;
                p[i] = 0;
            }
            if (i < 0) break;
        }
        return out;
    }

    std::optional<Payload> inverse_payload(const GradeElement& deg, const Payload& a) const override {
        if (graded_) {
            if (a[0] == 0) return std::nullopt;
            return Payload{*mod_inverse(a[0], q_)};
        }
        return GradedRing::inverse_payload(deg, a);
    }

    std::optional<HomElem> invertible_of_degree(const GradeElement& deg) const override {
        check_degree(deg);
        if (graded_) return HomElem(shared_from_this(), deg, {1}); // g^deg
        return GradedRing::invertible_of_degree(deg);
    }

    std::string payload_text(const GradeElement& deg, const Payload& a) const override {
        if (graded_) {
            int64_t k = deg.coords()[0];
            if (a[0] == 0) return "0";
            if (k == 0) return std::to_string(a[0]);
            std::string mono = "g^" + std::to_string(k);
            return a[0] == 1 ? mono : std::to_string(a[0]) + mono;
        }
        std::ostringstream os;
        bool any = false;
        for (int64_t k = 0; k < n_; ++k) {
            if (a[k] == 0) continue;
            if (any) os << "+";
            if (k == 0) os << a[k];
            else if (a[k] == 1) os << "g^" << k;
            else os << a[k] << "g^" << k;
            any = true;
        }
        return any ? os.str() : "0";
    }

protected:
    void check_payload(const GradeElement&, const Payload& a) const override {
        size_t want = graded_ ? 1 : static_cast<size_t>(n_);
        if (a.size() != want)
            throw invalid_argument("payload " + join_coords(a) + " has wrong length for " +
                                   descriptor());
        for (int64_t c : a)
            if (c < 0 || c >= q_)
                throw invalid_argument("coefficient out of range in " + join_coords(a));
    }

private:
    int64_t q_, n_;
    bool graded_;
};

// --- the pair ring (R, I) ----------------------------------------------------

// R = Z/m, I = dZ/m. Degree 0 holds (r, 0) with payload [r]; degree 1 holds
// (0, d t) with payload [t], 0 <= t < m/d; degree 2 is the zero group.
class PairRing final : public GradedRing {
public:
    PairRing(int64_t m, int64_t d) : m_(m), d_(d), k_(m / d) {
        if (m < 2 || d <= 1 || d >= m || m % d != 0)
            throw invalid_argument("pair ring needs d | m with 1 < d < m");
        grading_ = GradeGroup::z_mod(3);
        descriptor_ = "pair(" + std::to_string(m) + "," + std::to_string(d) + ")";
    }

    bool component_finite() const override { return true; }

    Payload zero_payload(const GradeElement& deg) const override {
        switch (deg.coords()[0]) {
            case 0: case 1: return {0};
            default: return {};
        }
    }
    Payload one_payload() const override { return {1}; }

    Payload add_payload(const GradeElement& deg, const Payload& a, const Payload& b) const override {
        switch (deg.coords()[0]) {
            case 0: return {mod_reduce(a[0] + b[0], m_)};
            case 1: return {mod_reduce(a[0] + b[0], k_)};
            default: return {};
        }
    }
    Payload neg_payload(const GradeElement& deg, const Payload& a) const override {
        switch (deg.coords()[0]) {
            case 0: return {mod_reduce(-a[0], m_)};
            case 1: return {mod_reduce(-a[0], k_)};
            default: return {};
        }
    }
    Payload mul_payload(const GradeElement& da, const Payload& a,
                        const GradeElement& db, const Payload& b) const override {
        int64_t ca = da.coords()[0], cb = db.coords()[0];
        GradeElement dc = grade_add(da, db);
        if (a.empty() || b.empty()) return zero_payload(dc);
        if (ca == 0 && cb == 0) return {mod_reduce(a[0] * b[0], m_)};
        if (ca == 0 && cb == 1) return {mod_reduce(a[0] * b[0], k_)}; // (r,0)(0,dt) = (0, d rt)
        if (ca == 1 && cb == 0) return {mod_reduce(a[0] * b[0], k_)};
        return zero_payload(dc); // (0,a)(0,b) = (0,0), and anything through degree 2
    }

    std::vector<Payload> enumerate_component(const GradeElement& deg) const override {
        check_degree(deg);
        std::vector<Payload> out;
        switch (deg.coords()[0]) {
            case 0:
                for (int64_t v = 0; v < m_; ++v) out.push_back({v});
                break;
            case 1:
                for (int64_t v = 0; v < k_; ++v) out.push_back({v});
                break;
            default:
                out.push_back({});
        }
        return out;
    }

    std::optional<Payload> inverse_payload(const GradeElement& deg, const Payload& a) const override {
        // only (u, 0) with u a unit of Z/m is invertible
        if (deg.coords()[0] != 0 || a.empty()) return std::nullopt;
        auto inv = mod_inverse(a[0], m_);
        if (!inv) return std::nullopt;
        return Payload{*inv};
    }

    std::string payload_text(const GradeElement& deg, const Payload& a) const override {
        switch (deg.coords()[0]) {
            case 0: return "(" + std::to_string(a[0]) + ",0)";
            case 1: return "(0," + std::to_string(a[0] * d_) + ")";
            default: return "(0,0)";
        }
    }

protected:
    void check_payload(const GradeElement& deg, const Payload& a) const override {
        int64_t bound;
        switch (deg.coords()[0]) {
            case 0: bound = m_; break;
            case 1: bound = k_; break;
            default:
                if (!a.empty())
                    throw invalid_argument("degree-2 component of " + descriptor() + " is zero");
                return;
        }
        if (a.size() != 1 || a[0] < 0 || a[0] >= bound)
            throw invalid_argument("payload " + join_coords(a) + " out of range for " +
                                   descriptor() + " at degree " + deg.text());
    }

private:
    int64_t m_, d_, k_;
};

} // namespace

// --- GradedIdeal -------------------------------------------------------------

GradedIdeal::GradedIdeal(RingPtr ring, std::vector<HomElem> generators) {
    if (!ring) throw invalid_argument("ideal needs a ring");
    auto data = std::make_shared<Data>();
    data->ring = ring;
    for (const auto& g : generators) {
        if (!g.ring()->same_ring(*ring))
            throw ring_mismatch("ideal generator from " + g.ring()->descriptor() +
                                " does not belong to " + ring->descriptor());
    }
    // canonical generator order so presentations compare structurally
    std::sort(generators.begin(), generators.end(), [](const HomElem& a, const HomElem& b) {
        if (a.degree().coords() != b.degree().coords()) return a.degree().coords() < b.degree().coords();
        return a.payload() < b.payload();
    });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    data->generators = generators;

    if (!ring->component_finite()) {
        // laurent: every nonzero homogeneous element is a unit, so the only
        // graded ideals are 0 and A
        bool any_nonzero = false;
        for (const auto& g : generators)
            if (!g.is_zero()) any_nonzero = true;
        data->laurent_full = any_nonzero;
        data->full = any_nonzero;
        data_ = std::move(data);
        return;
    }

    // exhaustive two-sided closure, degree by degree
    auto support = ring->support_degrees();
    std::map<std::vector<int64_t>, std::set<Payload>> sets;
    std::map<std::vector<int64_t>, GradeElement> degree_of;
    for (const auto& d : support) {
        sets[d.coords()].insert(ring->zero_payload(d));
        degree_of.emplace(d.coords(), d);
    }
    std::vector<std::pair<GradeElement, Payload>> work;
    auto insert = [&](const GradeElement& d, const Payload& p) {
        auto it = sets.find(d.coords());
        if (it == sets.end()) return; // degree outside support carries only zero
        if (it->second.insert(p).second) work.emplace_back(degree_of.at(d.coords()), p);
    };
    for (const auto& g : generators) insert(g.degree(), g.payload());

    while (!work.empty()) {
        auto [deg, pay] = work.back();
        work.pop_back();
        // multiples by every homogeneous element (two-sided)
        for (const auto& d : support) {
            GradeElement left = grade_add(d, deg), right = grade_add(deg, d);
            for (const auto& a : ring->enumerate_component(d)) {
                insert(left, ring->mul_payload(d, a, deg, pay));
                insert(right, ring->mul_payload(deg, pay, d, a));
            }
        }
        // additive closure within the degree
        auto snapshot = sets.at(deg.coords());
        for (const auto& s : snapshot)
            insert(deg, ring->add_payload(deg, pay, s));
    }

    for (auto& [coords, st] : sets)
        data->components[coords] = std::vector<Payload>(st.begin(), st.end());
    const auto zero_coords = grade_zero(ring->grading()).coords();
    const auto& i0 = data->components.at(zero_coords);
    data->full = std::binary_search(i0.begin(), i0.end(), ring->one_payload());
    data_ = std::move(data);
}

bool GradedIdeal::contains(const HomElem& x) const {
    if (!x.ring()->same_ring(*data_->ring))
        throw ring_mismatch("membership test against ideal of a different ring");
    if (!data_->ring->component_finite())
        return data_->laurent_full || x.is_zero();
    auto it = data_->components.find(x.degree().coords());
    if (it == data_->components.end()) return x.is_zero();
    return std::binary_search(it->second.begin(), it->second.end(), x.payload());
}

const std::vector<Payload>& GradedIdeal::component(const GradeElement& deg) const {
    if (!data_->ring->component_finite()) {
        // constant layouts: one payload slot per degree
        static const std::vector<Payload> zero_only = {Payload{0}};
        if (!data_->laurent_full) return zero_only;
        throw unsupported("cannot list a component of the full ideal of " +
                          data_->ring->descriptor());
    }
    auto it = data_->components.find(deg.coords());
    if (it == data_->components.end())
        throw invalid_argument("degree " + deg.text() + " outside the support of " +
                               data_->ring->descriptor());
    return it->second;
}

bool GradedIdeal::is_zero_ideal() const {
    if (!data_->ring->component_finite()) return !data_->laurent_full;
    for (const auto& [coords, comp] : data_->components)
        if (comp.size() > 1) return false;
    return true;
}

std::string GradedIdeal::text() const {
    std::ostringstream os;
    os << "ideal[";
    for (size_t i = 0; i < data_->generators.size(); ++i) {
        if (i) os << ",";
        const auto& g = data_->generators[i];
        os << g.degree().text() << ":" << join_coords(g.payload());
    }
    os << "]";
    return os.str();
}

bool ideal_contains(const GradedIdeal& ideal, const HomElem& x) { return ideal.contains(x); }

GradedIdeal principal_ideal(const RingPtr& ring, const HomElem& gen) {
    return GradedIdeal(ring, {gen});
}

GradedIdeal zmod_ideal(const RingPtr& zmod_ring, int64_t d) {
    auto deg = grade_zero(zmod_ring->grading());
    return GradedIdeal(zmod_ring, {zmod_ring->make(deg, {d})});
}

GradedIdeal augmentation_ideal(const RingPtr& group_ring) {
    if (!group_ring->grading().is_trivial())
        throw invalid_argument("augmentation ideal needs the trivially graded group algebra");
    auto deg = grade_zero(group_ring->grading());
    size_t n = group_ring->zero_payload(deg).size();
    if (n < 2) throw invalid_argument("not a group algebra payload");
    // generated by g^k - 1 for all k
    std::vector<HomElem> gens;
    Payload one = group_ring->one_payload();
    for (size_t k = 1; k < n; ++k) {
        Payload p(n, 0);
        p[k] = 1;
        gens.push_back(group_ring->make(deg, group_ring->add_payload(
                                                 deg, p, group_ring->neg_payload(deg, one))));
    }
    return GradedIdeal(group_ring, gens);
}

// --- quotient ring -----------------------------------------------------------

namespace {

class QuotientRing final : public GradedRing {
public:
    QuotientRing(RingPtr base, GradedIdeal ideal) : base_(std::move(base)), ideal_(std::move(ideal)) {
        if (!ideal_.ring()->same_ring(*base_))
            throw ring_mismatch("quotient by an ideal of a different ring");
        if (!base_->component_finite() && ideal_.is_full())
            throw unsupported("quotient of " + base_->descriptor() + " by the full ideal");
        grading_ = base_->grading();
        descriptor_ = "quot(" + base_->descriptor() + ";" + ideal_.text() + ")";
    }

    const RingPtr& base() const { return base_; }
    const GradedIdeal& ideal() const { return ideal_; }

    bool component_finite() const override { return base_->component_finite(); }
    bool strongly_graded() const override {
        return base_->strongly_graded() || grading_.is_trivial();
    }

    Payload canon(const GradeElement& deg, const Payload& p) const {
        if (!base_->component_finite()) {
            // only the zero ideal reaches here; classes are singletons
            return p;
        }
        const auto& comp = ideal_.component(deg);
        Payload best = p;
        for (const auto& i : comp) {
            Payload cand = base_->add_payload(deg, p, i);
            if (cand < best) best = cand;
        }
        return best;
    }

    Payload zero_payload(const GradeElement& deg) const override {
        return base_->zero_payload(deg); // zero payload is lex-least already
    }
    Payload one_payload() const override {
        return canon(grade_zero(grading_), base_->one_payload());
    }
    Payload add_payload(const GradeElement& deg, const Payload& a, const Payload& b) const override {
        return canon(deg, base_->add_payload(deg, a, b));
    }
    Payload neg_payload(const GradeElement& deg, const Payload& a) const override {
        return canon(deg, base_->neg_payload(deg, a));
    }
    Payload mul_payload(const GradeElement& da, const Payload& a,
                        const GradeElement& db, const Payload& b) const override {
        return canon(grade_add(da, db), base_->mul_payload(da, a, db, b));
    }
    bool payload_is_zero(const GradeElement& deg, const Payload& a) const override {
        return ideal_.contains(base_->make(deg, a));
    }

    std::vector<Payload> enumerate_component(const GradeElement& deg) const override {
        check_degree(deg);
        std::set<Payload> reps;
        for (const auto& p : base_->enumerate_component(deg)) reps.insert(canon(deg, p));
        return std::vector<Payload>(reps.begin(), reps.end());
    }

    std::optional<HomElem> invertible_of_degree(const GradeElement& deg) const override {
        check_degree(deg);
        if (auto u = base_->invertible_of_degree(deg)) // units map to units
            return HomElem(shared_from_this(), deg, canon(deg, u->payload()));
        if (base_->component_finite()) return GradedRing::invertible_of_degree(deg);
        return std::nullopt;
    }

    std::vector<GradeElement> support_degrees() const override { return base_->support_degrees(); }

    std::string payload_text(const GradeElement& deg, const Payload& a) const override {
        return base_->payload_text(deg, a) + "~";
    }

protected:
    void check_payload(const GradeElement& deg, const Payload& a) const override {
        base_->make(deg, a); // validates against the base layout
        if (canon(deg, a) != a)
            throw invalid_argument("payload " + join_coords(a) +
                                   " is not a canonical coset representative in " + descriptor());
    }

private:
    RingPtr base_;
    GradedIdeal ideal_;
};

// --- double ring ---------------------------------------------------------------

class DoubleRing final : public GradedRing {
public:
    DoubleRing(RingPtr base, GradedIdeal ideal) : base_(std::move(base)), ideal_(std::move(ideal)) {
        if (!ideal_.ring()->same_ring(*base_))
            throw ring_mismatch("double along an ideal of a different ring");
        grading_ = base_->grading();
        descriptor_ = "double(" + base_->descriptor() + ";" + ideal_.text() + ")";
    }

    const RingPtr& base() const { return base_; }
    const GradedIdeal& ideal() const { return ideal_; }

    size_t half_len(const GradeElement& deg) const { return base_->zero_payload(deg).size(); }
    Payload first(const GradeElement& deg, const Payload& p) const {
        return Payload(p.begin(), p.begin() + half_len(deg));
    }
    Payload second(const GradeElement& deg, const Payload& p) const {
        return Payload(p.begin() + half_len(deg), p.end());
    }
    static Payload pack(const Payload& x, const Payload& y) {
        Payload out(x);
        out.insert(out.end(), y.begin(), y.end());
        return out;
    }

    bool component_finite() const override { return base_->component_finite(); }
    bool strongly_graded() const override { return base_->strongly_graded(); }

    Payload zero_payload(const GradeElement& deg) const override {
        auto z = base_->zero_payload(deg);
        return pack(z, z);
    }
    Payload one_payload() const override {
        auto o = base_->one_payload();
        return pack(o, o);
    }
    Payload add_payload(const GradeElement& deg, const Payload& a, const Payload& b) const override {
        return pack(base_->add_payload(deg, first(deg, a), first(deg, b)),
                    base_->add_payload(deg, second(deg, a), second(deg, b)));
    }
    Payload neg_payload(const GradeElement& deg, const Payload& a) const override {
        return pack(base_->neg_payload(deg, first(deg, a)),
                    base_->neg_payload(deg, second(deg, a)));
    }
    Payload mul_payload(const GradeElement& da, const Payload& a,
                        const GradeElement& db, const Payload& b) const override {
        return pack(base_->mul_payload(da, first(da, a), db, first(db, b)),
                    base_->mul_payload(da, second(da, a), db, second(db, b)));
    }

    std::vector<Payload> enumerate_component(const GradeElement& deg) const override {
        check_degree(deg);
        std::set<Payload> out;
        for (const auto& x : base_->enumerate_component(deg))
            for (const auto& i : ideal_.component(deg))
                out.insert(pack(x, base_->add_payload(deg, x, base_->neg_payload(deg, i))));
        return std::vector<Payload>(out.begin(), out.end());
    }

    std::optional<Payload> inverse_payload(const GradeElement& deg, const Payload& a) const override {
        auto xi = base_->inverse_payload(deg, first(deg, a));
        auto yi = base_->inverse_payload(deg, second(deg, a));
        if (!xi || !yi) return std::nullopt;
        Payload out = pack(*xi, *yi);
        check_payload(grade_neg(deg), out); // x^-1 - y^-1 lands in I for two-sided I
        return out;
    }

    std::optional<HomElem> invertible_of_degree(const GradeElement& deg) const override {
        check_degree(deg);
        if (auto u = base_->invertible_of_degree(deg))
            return HomElem(shared_from_this(), deg, pack(u->payload(), u->payload()));
        return std::nullopt;
    }

    std::vector<GradeElement> support_degrees() const override { return base_->support_degrees(); }

    std::string payload_text(const GradeElement& deg, const Payload& a) const override {
        return "(" + base_->payload_text(deg, first(deg, a)) + "|" +
               base_->payload_text(deg, second(deg, a)) + ")";
    }

protected:
    void check_payload(const GradeElement& deg, const Payload& a) const override {
        if (a.size() != 2 * half_len(deg))
            throw invalid_argument("double payload " + join_coords(a) + " has wrong length");
        auto x = base_->make(deg, first(deg, a));
        auto y = base_->make(deg, second(deg, a));
        if (!ideal_.contains(x - y))
            throw invalid_argument("pair " + x.text() + "," + y.text() +
                                   " does not agree modulo the ideal");
    }

private:
    RingPtr base_;
    GradedIdeal ideal_;
};

} // namespace

// --- factories and views --------------------------------------------------------

RingPtr make_zmod_ring(int64_t modulus, const GradeGroup& grading) {
    return std::make_shared<ZmodRing>(modulus, grading);
}

RingPtr make_laurent_ring(int64_t q) { return std::make_shared<LaurentRing>(q); }

RingPtr make_group_ring(int64_t q, int64_t n, bool graded) {
    return std::make_shared<GroupRing>(q, n, graded);
}

RingPtr make_pair_ring(int64_t modulus, int64_t d) {
    return std::make_shared<PairRing>(modulus, d);
}

RingPtr make_quotient_ring(const RingPtr& base, const GradedIdeal& ideal) {
    return std::make_shared<QuotientRing>(base, ideal);
}

RingPtr make_double_ring(const RingPtr& base, const GradedIdeal& ideal) {
    return std::make_shared<DoubleRing>(base, ideal);
}

const GradedIdeal& quotient_ideal(const GradedRing& quotient) {
    auto* q = dynamic_cast<const QuotientRing*>(&quotient);
    if (!q) throw invalid_argument(quotient.descriptor() + " is not a quotient ring");
    return q->ideal();
}

const RingPtr& quotient_base(const GradedRing& quotient) {
    auto* q = dynamic_cast<const QuotientRing*>(&quotient);
    if (!q) throw invalid_argument(quotient.descriptor() + " is not a quotient ring");
    return q->base();
}

HomElem reduce_mod_ideal(const HomElem& x, const RingPtr& quotient) {
    auto* q = dynamic_cast<const QuotientRing*>(quotient.get());
    if (!q) throw invalid_argument(quotient->descriptor() + " is not a quotient ring");
    if (!x.ring()->same_ring(*q->base()))
        throw ring_mismatch("element of " + x.ring()->descriptor() + " cannot reduce into " +
                            quotient->descriptor());
    return HomElem(quotient, x.degree(), q->canon(x.degree(), x.payload()));
}

HomElem double_pack(const RingPtr& dbl, const HomElem& x, const HomElem& y) {
    auto* d = dynamic_cast<const DoubleRing*>(dbl.get());
    if (!d) throw invalid_argument(dbl->descriptor() + " is not a double ring");
    if (!x.ring()->same_ring(*d->base()) || !y.ring()->same_ring(*d->base()))
        throw ring_mismatch("pair coordinates must come from the base ring");
    if (x.degree() != y.degree())
        throw degree_mismatch("pair coordinates must share a degree");
    return HomElem(dbl, x.degree(), DoubleRing::pack(x.payload(), y.payload()));
}

HomElem double_project(const HomElem& pair_elem, int coordinate) {
    auto* d = dynamic_cast<const DoubleRing*>(pair_elem.ring().get());
    if (!d) throw invalid_argument("not an element of a double ring");
    const auto& deg = pair_elem.degree();
    Payload p = coordinate == 1 ? d->first(deg, pair_elem.payload())
                                : d->second(deg, pair_elem.payload());
    return HomElem(d->base(), deg, std::move(p));
}

const RingPtr& double_base(const GradedRing& dbl) {
    auto* d = dynamic_cast<const DoubleRing*>(&dbl);
    if (!d) throw invalid_argument(dbl.descriptor() + " is not a double ring");
    return d->base();
}

const GradedIdeal& double_ideal(const GradedRing& dbl) {
    auto* d = dynamic_cast<const DoubleRing*>(&dbl);
    if (!d) throw invalid_argument(dbl.descriptor() + " is not a double ring");
    return d->ideal();
}

} // namespace grk1
