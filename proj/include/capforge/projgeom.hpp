#ifndef CAPFORGE_PROJGEOM_HPP
#define CAPFORGE_PROJGEOM_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "capforge/errors.hpp"
#include "capforge/gf2e.hpp"

namespace capforge::pg {

/// Maximum number of homogeneous coordinates (ambient dimension N <= 11).
constexpr unsigned kMaxCoords = 12;

/// Projective point of PG(N, q): len = N + 1 homogeneous coordinates.
/// Stored points are kept normalized (first nonzero coordinate equal to 1)
/// by every constructor in this library.
struct point {
    std::array<gf::elem, kMaxCoords> c{};
    std::uint8_t len = 0;

    friend bool operator==(const point& a, const point& b) {
        if (a.len != b.len) return false;
        for (unsigned i = 0; i < a.len; ++i)
            if (a.c[i] != b.c[i]) return false;
        return true;
    }
    friend bool operator!=(const point& a, const point& b) { return !(a == b); }
};

/// Convenience constructor from a coordinate list.
point make_point(std::initializer_list<unsigned> coords);
point make_point(const std::vector<unsigned>& coords);

/// Geometry context: a field plus the ambient dimension N, with the power
/// and rank-offset tables used by the dense point numbering.
class geometry {
public:
    geometry(const gf::field_ctx& f, unsigned N);

    const gf::field_ctx& field() const { return *f_; }
    unsigned N() const { return N_; }
    unsigned q() const { return f_->q(); }

    /// Number of points of PG(N, q) = (q^(N+1) - 1) / (q - 1).
    std::uint64_t point_count() const { return n_points_; }

    /// Scales so the first nonzero coordinate becomes 1.
    /// Throws zero_vector on the all-zero input.
    point normalize(const point& p) const;

    /// Coordinatewise sum (characteristic two: XOR).  Not normalized.
    static point add(const point& a, const point& b);

    /// Coordinatewise scalar multiple.  Not normalized.
    point scalar_mul(gf::elem lambda, const point& p) const;

    /// Dense rank of a normalized point.  Points are numbered by the position
    /// of the leading one (earlier leading position first) and then by the
    /// remaining coordinates read as a base-q integer.  Bijective onto
    /// [0, point_count()).
    std::uint64_t rank(const point& p) const;

    /// Inverse of rank.
    point unrank(std::uint64_t r) const;

    /// True when the three pairwise-distinct points lie on a common line
    /// (rank of the 3 x (N+1) coordinate matrix <= 2).
    /// Throws duplicate_point if two of them coincide.
    bool collinear(const point& a, const point& b, const point& c) const;

    /// The q + 1 points of the line through two distinct points:
    /// normalize(p1), normalize(p2), then normalize(p1 + lambda p2) for
    /// lambda in F_q^* in encoding order.  As a set this is independent of
    /// the order and scaling of the inputs.  Throws duplicate_point.
    std::vector<point> line_through(const point& p1, const point& p2) const;

private:
    const gf::field_ctx* f_;
    unsigned N_;
    std::uint64_t n_points_;
    std::array<std::uint64_t, kMaxCoords + 1> powq_{};    // q^j
    std::array<std::uint64_t, kMaxCoords + 1> offset_{};  // rank offset per leading position
};

/// Coordinate subspaces used by the higher-dimensional constructions.
struct subspace {
    enum class kind_t {
        leading_zeros,  // X_0 = ... = X_{count-1} = 0
        doubled,        // X_0 = ... = X_{2s-2j-2} = 0 and X_{2s-2j-1} = X_{2s-2j}
    };
    kind_t kind;
    unsigned a = 0;  // leading_zeros: count; doubled: s
    unsigned b = 0;  // doubled: j

    static subspace leading_zeros(unsigned count) { return {kind_t::leading_zeros, count, 0}; }
    static subspace doubled(unsigned s, unsigned j) { return {kind_t::doubled, s, j}; }

    bool contains(const point& p) const;
};

/// Prepends `zeros` zero coordinates (embedding into the corresponding
/// leading-zeros subspace of a larger space).  Normalization is preserved.
point embed_leading_zeros(const point& p, unsigned zeros);

/// Re-embedding map used by the third even-dimensional construction: sends
/// (Y_0, ..., Y_{2j+2}) to (0, ..., 0, Y_0, Y_0, Y_1, ..., Y_{2j+2}) with
/// 2s - 2j - 1 leading zeros, landing in PG(2s+2, q).  Requires j < s and
/// p.len == 2j + 3.  Normalization is preserved.
point doubling_embed(const point& p, unsigned s, unsigned j);

/// Projectivity of the plane: an invertible 3 x 3 matrix over F_q,
/// row-major.  Only plane projectivities are supported.
struct projectivity {
    std::array<gf::elem, 9> m{};
};

/// Builds a projectivity, verifying the determinant is nonzero.
/// Throws bad_parameters on a singular matrix.
projectivity make_projectivity(const gf::field_ctx& f, const std::array<gf::elem, 9>& m);

gf::elem det(const gf::field_ctx& f, const projectivity& A);
projectivity compose(const gf::field_ctx& f, const projectivity& A, const projectivity& B);
projectivity inverse(const gf::field_ctx& f, const projectivity& A);

/// Applies a plane projectivity to a point of PG(2, q).  In integral mode the
/// matrix-vector product of a normalized input must itself come out
/// normalized (no rescaling hidden by the projective quotient); otherwise
/// integrality_violated is thrown.  In non-integral mode the image is
/// normalized before being returned.
point apply_projectivity(const geometry& g, const projectivity& A, const point& p, bool integral_mode = false);

/// True when A maps every (normalized) point of pts to an already-normalized
/// image vector.
bool is_integral_for(const geometry& g, const projectivity& A, const std::vector<point>& pts);

}  // namespace capforge::pg

#endif  // CAPFORGE_PROJGEOM_HPP
