#pragma once

// Picard lattices of rational surfaces: the projective plane, the Hirzebruch
// surfaces F_e, and single-stage blow-ups of either at l points.
//
// Basis conventions:
//   P^2            (H)
//   F_e            (C0, f)           C0^2 = -e, C0.f = 1, f^2 = 0
//   blow-up of B   (basis of B, E_1, ..., E_l)
//
// A class pi^*D - m_1 E_1 - ... - m_l E_l is stored as (D..., -m_1, ..., -m_l).
// On F_0 the rulings f_1, f_2 are identified with C0 and f respectively.

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ratnp {

using Int = std::int64_t;

enum class BaseSurface { ProjectivePlane, Hirzebruch };

/// Incidence assumptions on the blown-up points. These are never computed;
/// anything that relies on one of them reports it by name.
struct PointConfig {
    bool on_smooth_anticanonical = false;
    bool distinct_fibers = false;
    bool away_from_min_section = false;
    bool anticanonical_effective = false;
    bool general_position = false;
    bool complete_intersection_of_cubics = false;

    auto operator<=>(const PointConfig&) const = default;

    /// Names of the flags that are set, in declaration order.
    std::vector<std::string> names() const;
};

class SurfaceMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SurfaceModel;
using Surface = std::shared_ptr<const SurfaceModel>;

class SurfaceModel {
public:
    static Surface projective_plane();
    static Surface hirzebruch(int e);

    BaseSurface base() const { return base_; }
    /// Twist of the Hirzebruch base; 0 for the plane.
    int e() const { return e_; }
    /// Number of blown-up points.
    int points() const { return points_; }
    bool is_blow_up() const { return blown_up_; }
    const PointConfig& config() const { return config_; }

    int base_rank() const { return base_ == BaseSurface::ProjectivePlane ? 1 : 2; }
    int rank() const { return base_rank() + points_; }

    Int gram(int i, int j) const { return gram_[static_cast<std::size_t>(i * rank() + j)]; }
    const std::vector<Int>& gram_entries() const { return gram_; }
    const std::vector<Int>& canonical_coeffs() const { return canonical_; }

    /// Short human-readable name, e.g. "F_1 blown up at 10 points".
    std::string describe() const;

    /// Two models are the same surface iff base, twist, point count and
    /// configuration agree.
    bool operator==(const SurfaceModel& other) const;

private:
    friend Surface blow_up(const Surface&, int, const PointConfig&);
    SurfaceModel(BaseSurface base, int e, bool blown_up, int points, PointConfig config);

    BaseSurface base_;
    int e_;
    bool blown_up_;
    int points_;
    PointConfig config_;
    std::vector<Int> gram_;
    std::vector<Int> canonical_;
};

/// Blow up `count` points of an unblown P^2 or F_e.
Surface blow_up(const Surface& base, int count, const PointConfig& config);

class DivisorClass {
public:
    DivisorClass(Surface surface, std::vector<Int> coeffs);

    static DivisorClass zero(const Surface& surface);
    static DivisorClass basis(const Surface& surface, int index);

    const Surface& surface() const { return surface_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    int rank() const { return static_cast<int>(coeffs_.size()); }

    DivisorClass operator+(const DivisorClass& other) const;
    DivisorClass operator-(const DivisorClass& other) const;
    DivisorClass operator-() const;
    DivisorClass& operator+=(const DivisorClass& other);

    bool operator==(const DivisorClass& other) const;

    std::string to_string() const;

private:
    Surface surface_;
    std::vector<Int> coeffs_;
};

DivisorClass operator*(Int scalar, const DivisorClass& d);

// Named basis elements. Exceptional indices are 1-based.
DivisorClass hyperplane(const Surface& s);
DivisorClass min_section(const Surface& s);
DivisorClass fiber(const Surface& s);
DivisorClass exceptional(const Surface& s, int i);

/// pi^*(x C0 + y f) or pi^*(x H) on `s`; `base_coeffs` has base_rank() entries.
DivisorClass pullback(const Surface& s, const std::vector<Int>& base_coeffs);

/// pi^*(base) - sum_i weights[i] E_{i+1}.
DivisorClass pullback_minus(const Surface& s, const std::vector<Int>& base_coeffs,
                            const std::vector<Int>& weights);

void require_same_surface(const DivisorClass& a, const DivisorClass& b);

Int intersect(const DivisorClass& a, const DivisorClass& b);
Int self_intersection(const DivisorClass& d);

DivisorClass canonical_class(const Surface& s);
Int k_squared(const Surface& s);

/// chi(O(D)) = 1 + (D^2 - D.K)/2.
Int euler_characteristic(const DivisorClass& d);

/// Arithmetic genus of a curve in |D|: 1 + (D^2 + D.K)/2.
Int sectional_genus(const DivisorClass& d);

/// (A.B)^2 >= A^2 B^2. Requires A^2 > 0.
bool hodge_index_bound(const DivisorClass& a, const DivisorClass& b);

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    bool operator==(const Signature&) const = default;
};

/// Inertia of a symmetric integer matrix, by congruence diagonalization over Q.
Signature signature(const std::vector<Int>& symmetric, int n);
Signature signature(const SurfaceModel& s);

}  // namespace ratnp
