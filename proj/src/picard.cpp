#include "ratnp/picard.hpp"

#include <boost/rational.hpp>

#include <numeric>
#include <sstream>
#include <utility>

namespace ratnp {

std::vector<std::string> PointConfig::names() const {
    std::vector<std::string> out;
    if (on_smooth_anticanonical) out.emplace_back("on_smooth_anticanonical");
    if (distinct_fibers) out.emplace_back("distinct_fibers");
    if (away_from_min_section) out.emplace_back("away_from_min_section");
    if (anticanonical_effective) out.emplace_back("anticanonical_effective");
    if (general_position) out.emplace_back("general_position");
    if (complete_intersection_of_cubics) out.emplace_back("complete_intersection_of_cubics");
    return out;
}

SurfaceModel::SurfaceModel(BaseSurface base, int e, bool blown_up, int points, PointConfig config)
    : base_(base), e_(e), blown_up_(blown_up), points_(points), config_(config) {
    const int n = rank();
    gram_.assign(static_cast<std::size_t>(n * n), 0);
    canonical_.assign(static_cast<std::size_t>(n), 0);
    auto g = [&](int i, int j) -> Int& { return gram_[static_cast<std::size_t>(i * n + j)]; };

    if (base_ == BaseSurface::ProjectivePlane) {
        g(0, 0) = 1;
        canonical_[0] = -3;
    } else {
        g(0, 0) = -e_;
        g(0, 1) = g(1, 0) = 1;
        g(1, 1) = 0;
        canonical_[0] = -2;
        canonical_[1] = -(e_ + 2);
    }
    for (int i = base_rank(); i < n; ++i) {
        g(i, i) = -1;
        // K_X = pi^*K + sum E_i; stored with the sign of -m_i, so +1 here.
        canonical_[static_cast<std::size_t>(i)] = 1;
    }
}

Surface SurfaceModel::projective_plane() {
    return Surface(new SurfaceModel(BaseSurface::ProjectivePlane, 0, false, 0, {}));
}

Surface SurfaceModel::hirzebruch(int e) {
    if (e < 0) throw std::invalid_argument("Hirzebruch twist must be nonnegative");
    return Surface(new SurfaceModel(BaseSurface::Hirzebruch, e, false, 0, {}));
}

Surface blow_up(const Surface& base, int count, const PointConfig& config) {
    if (!base) throw std::invalid_argument("blow_up: null surface");
    if (base->is_blow_up())
        throw std::invalid_argument("blow_up: iterated blow-ups are not supported");
    if (count < 0) throw std::invalid_argument("blow_up: negative point count");
    return Surface(new SurfaceModel(base->base(), base->e(), true, count, config));
}

std::string SurfaceModel::describe() const {
    std::ostringstream os;
    if (base_ == BaseSurface::ProjectivePlane)
        os << "P^2";
    else
        os << "F_" << e_;
    if (blown_up_) os << " blown up at " << points_ << " points";
    return os.str();
}

bool SurfaceModel::operator==(const SurfaceModel& other) const {
    return base_ == other.base_ && e_ == other.e_ && blown_up_ == other.blown_up_ &&
           points_ == other.points_ && config_ == other.config_;
}

DivisorClass::DivisorClass(Surface surface, std::vector<Int> coeffs)
    : surface_(std::move(surface)), coeffs_(std::move(coeffs)) {
    if (!surface_) throw std::invalid_argument("DivisorClass: null surface");
    if (static_cast<int>(coeffs_.size()) != surface_->rank())
        throw std::invalid_argument("DivisorClass: coefficient count " +
                                    std::to_string(coeffs_.size()) + " does not match rank " +
                                    std::to_string(surface_->rank()));
}

DivisorClass DivisorClass::zero(const Surface& surface) {
    return {surface, std::vector<Int>(static_cast<std::size_t>(surface->rank()), 0)};
}

DivisorClass DivisorClass::basis(const Surface& surface, int index) {
    if (index < 0 || index >= surface->rank())
        throw std::out_of_range("DivisorClass::basis: index out of range");
    auto d = zero(surface);
    d.coeffs_[static_cast<std::size_t>(index)] = 1;
    return d;
}

void require_same_surface(const DivisorClass& a, const DivisorClass& b) {
    if (a.surface() != b.surface() && !(*a.surface() == *b.surface()))
        throw SurfaceMismatch("classes live on different surfaces: " + a.surface()->describe() +
                              " vs " + b.surface()->describe());
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
    DivisorClass out = *this;
    out += other;
    return out;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
    require_same_surface(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const { return *this + (-other); }

DivisorClass DivisorClass::operator-() const { return -1 * *this; }

bool DivisorClass::operator==(const DivisorClass& other) const {
    return *surface_ == *other.surface_ && coeffs_ == other.coeffs_;
}

std::string DivisorClass::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i];
    os << ')';
    return os.str();
}

DivisorClass operator*(Int scalar, const DivisorClass& d) {
    std::vector<Int> c = d.coeffs();
    for (auto& x : c) x *= scalar;
    return {d.surface(), std::move(c)};
}

DivisorClass hyperplane(const Surface& s) {
    if (s->base() != BaseSurface::ProjectivePlane)
        throw std::invalid_argument("hyperplane class requires a P^2 base");
    return DivisorClass::basis(s, 0);
}

DivisorClass min_section(const Surface& s) {
    if (s->base() != BaseSurface::Hirzebruch)
        throw std::invalid_argument("minimal section requires a Hirzebruch base");
    return DivisorClass::basis(s, 0);
}

DivisorClass fiber(const Surface& s) {
    if (s->base() != BaseSurface::Hirzebruch)
        throw std::invalid_argument("fiber class requires a Hirzebruch base");
    return DivisorClass::basis(s, 1);
}

DivisorClass exceptional(const Surface& s, int i) {
    if (i < 1 || i > s->points()) throw std::out_of_range("exceptional: index out of range");
    return DivisorClass::basis(s, s->base_rank() + i - 1);
}

DivisorClass pullback(const Surface& s, const std::vector<Int>& base_coeffs) {
    return pullback_minus(s, base_coeffs, {});
}

DivisorClass pullback_minus(const Surface& s, const std::vector<Int>& base_coeffs,
                            const std::vector<Int>& weights) {
    if (static_cast<int>(base_coeffs.size()) != s->base_rank())
        throw std::invalid_argument("pullback: wrong number of base coefficients");
    if (static_cast<int>(weights.size()) > s->points())
        throw std::invalid_argument("pullback: more weights than blown-up points");
    auto d = DivisorClass::zero(s);
    std::vector<Int> c = d.coeffs();
    for (std::size_t i = 0; i < base_coeffs.size(); ++i) c[i] = base_coeffs[i];
    for (std::size_t i = 0; i < weights.size(); ++i)
        c[static_cast<std::size_t>(s->base_rank()) + i] = -weights[i];
    return {s, std::move(c)};
}

Int intersect(const DivisorClass& a, const DivisorClass& b) {
    require_same_surface(a, b);
    const auto& s = *a.surface();
    const int n = s.rank();
    Int total = 0;
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) total += a[i] * s.gram(i, j) * b[j];
    }
    return total;
}

Int self_intersection(const DivisorClass& d) { return intersect(d, d); }

DivisorClass canonical_class(const Surface& s) { return {s, s->canonical_coeffs()}; }

Int k_squared(const Surface& s) { return self_intersection(canonical_class(s)); }

Int euler_characteristic(const DivisorClass& d) {
    const auto k = canonical_class(d.surface());
    const Int twice = self_intersection(d) - intersect(d, k);
    // D^2 - D.K = D.(D - K) is even on any surface (Wu's formula).
    return 1 + twice / 2;
}

Int sectional_genus(const DivisorClass& d) {
    const auto k = canonical_class(d.surface());
    const Int twice = self_intersection(d) + intersect(d, k);
    return 1 + twice / 2;
}

bool hodge_index_bound(const DivisorClass& a, const DivisorClass& b) {
    const Int a2 = self_intersection(a);
    if (a2 <= 0) throw std::invalid_argument("hodge_index_bound: requires A^2 > 0");
    const Int ab = intersect(a, b);
    return ab * ab >= a2 * self_intersection(b);
}

Signature signature(const std::vector<Int>& symmetric, int n) {
    using Q = boost::rational<Int>;
    const Q zero(0);
    if (static_cast<int>(symmetric.size()) != n * n)
        throw std::invalid_argument("signature: matrix size mismatch");
    std::vector<Q> m(symmetric.begin(), symmetric.end());
    auto at = [&](int i, int j) -> Q& { return m[static_cast<std::size_t>(i * n + j)]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) != at(j, i)) throw std::invalid_argument("signature: matrix not symmetric");

    Signature sig;
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int step = 0; step < n; ++step) {
        int pivot = -1;
        for (int i = 0; i < n && pivot < 0; ++i)
            if (!done[static_cast<std::size_t>(i)] && at(i, i) != zero) pivot = i;
        if (pivot < 0) {
            // Every remaining diagonal entry vanishes. A nonzero off-diagonal
            // entry (i, j) gives a nonzero diagonal after row/col i += row/col j.
            int pi = -1, pj = -1;
            for (int i = 0; i < n && pi < 0; ++i) {
                if (done[static_cast<std::size_t>(i)]) continue;
                for (int j = 0; j < n; ++j)
                    if (j != i && !done[static_cast<std::size_t>(j)] && at(i, j) != zero) {
                        pi = i;
                        pj = j;
                        break;
                    }
            }
            if (pi < 0) break;
            for (int k = 0; k < n; ++k) at(pi, k) += at(pj, k);
            for (int k = 0; k < n; ++k) at(k, pi) += at(k, pj);
            pivot = pi;
        }
        const Q d = at(pivot, pivot);
        for (int i = 0; i < n; ++i) {
            if (i == pivot || done[static_cast<std::size_t>(i)] || at(i, pivot) == zero) continue;
            const Q factor = at(i, pivot) / d;
            for (int k = 0; k < n; ++k) at(i, k) -= factor * at(pivot, k);
            for (int k = 0; k < n; ++k) at(k, i) -= factor * at(k, pivot);
        }
        done[static_cast<std::size_t>(pivot)] = true;
        (d > zero ? sig.positive : sig.negative)++;
    }
    sig.zero = n - sig.positive - sig.negative;
    return sig;
}

Signature signature(const SurfaceModel& s) { return signature(s.gram_entries(), s.rank()); }

}  // namespace ratnp
