#pragma once

#include <rdlab/rational.hpp>
#include <rdlab/squares.hpp>

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace rdlab {

/// A candidate point (x, y) with exact rational coordinates. The doubled
/// ordinate z = 2y is derived on demand; y is the stored field.
struct Point {
    Rational x;
    Rational y;

    Rational z() const { return Rational(2) * y; }

    friend bool operator==(const Point& a, const Point& b) = default;
    friend auto operator<=>(const Point& a, const Point& b) = default;
};

/// The rectangle with vertex set {(0, 1/2), (0, -1/2), (a, 1/2), (a, -1/2)}.
class Rectangle {
public:
    explicit Rectangle(Rational a) : a_(std::move(a)) {
        if (a_.is_zero())
            throw std::invalid_argument("Rectangle: a must be nonzero");
    }

    const Rational& a() const { return a_; }

    /// Vertices in the fixed order (0,1/2), (0,-1/2), (a,1/2), (a,-1/2).
    std::array<Point, 4> vertices() const {
        Rational half(1, 2);
        return {Point{Rational(0), half}, Point{Rational(0), -half},
                Point{a_, half}, Point{a_, -half}};
    }

private:
    Rational a_;
};

/// Exact squared distances from a point to the four rectangle vertices,
/// with the distance itself filled in wherever the square is a rational
/// square. Vertex order matches Rectangle::vertices().
struct DistanceReport {
    Rational a;
    Rational x;
    Rational y;
    std::array<Rational, 4> squared;
    std::array<std::optional<Rational>, 4> dist;

    bool all_rational() const {
        for (const auto& d : dist)
            if (!d) return false;
        return true;
    }
};

/// Squared distances (always exact) plus rational distances where they
/// exist. Never fails: squared distances of a rational point are rational.
inline DistanceReport measure_distances(const Rectangle& rect, const Point& p) {
    DistanceReport rep{rect.a(), p.x, p.y, {}, {}};
    auto verts = rect.vertices();
    for (int i = 0; i < 4; ++i) {
        Rational dx = p.x - verts[i].x;
        Rational dy = p.y - verts[i].y;
        rep.squared[i] = dx * dx + dy * dy;
        rep.dist[i] = is_rational_square(rep.squared[i]);
    }
    return rep;
}

/// Distances R1 to (0, 1/2) and R2 to (0, -1/2) of the point (x, z/2),
/// when both are rational.
inline std::optional<std::pair<Rational, Rational>> two_distance_check(const Rational& x,
                                                                       const Rational& z) {
    Rational y = z / Rational(2);
    Rational half(1, 2);
    Rational u = y - half;
    Rational v = y + half;
    auto r1 = is_rational_square(x * x + u * u);
    if (!r1) return std::nullopt;
    auto r2 = is_rational_square(x * x + v * v);
    if (!r2) return std::nullopt;
    return std::make_pair(std::move(*r1), std::move(*r2));
}

/// The quartic p_{x,z}(u) = u^4 - (z^2 + 4x^2 + 1) u^2 + z^2.
inline Rational pxz_eval(const Rational& x, const Rational& z, const Rational& u) {
    Rational u2 = u * u;
    Rational c = z * z + Rational(4) * x * x + Rational(1);
    return u2 * u2 - c * u2 + z * z;
}

/// The quartic's middle coefficient, discriminant of the quadratic in u^2,
/// and complete set of rational roots (closed under negation).
struct QuarticProfile {
    Rational c;    // z^2 + 4x^2 + 1
    Rational disc; // c^2 - 4z^2
    std::set<Rational> rational_roots;
};

/// All rational roots of p_{x,z}, via the exact quadratic in u^2:
/// u^2 = (c +- sqrt(disc)) / 2, with both square tests exact.
inline QuarticProfile pxz_rational_roots(const Rational& x, const Rational& z) {
    QuarticProfile prof{z * z + Rational(4) * x * x + Rational(1), Rational(0), {}};
    prof.disc = prof.c * prof.c - Rational(4) * z * z;
    auto s = is_rational_square(prof.disc);
    if (!s) return prof;
    for (const Rational& w : {(prof.c + *s) / Rational(2), (prof.c - *s) / Rational(2)}) {
        auto root = is_rational_square(w);
        if (!root) continue;
        prof.rational_roots.insert(*root);
        prof.rational_roots.insert(-*root);
    }
    return prof;
}

/// All four distances from p to the vertices of rect, when every one of
/// them is rational; empty otherwise.
inline std::optional<DistanceReport> four_distance_check(const Rectangle& rect, const Point& p) {
    DistanceReport rep = measure_distances(rect, p);
    if (!rep.all_rational()) return std::nullopt;
    return rep;
}

/// The similarity carrying the vertex set of R_a onto the vertex set of
/// R_{1/a}: (x, y) -> (y/a + 1/(2a), x/a - 1/2). Scales every distance by
/// exactly 1/|a|.
inline std::pair<Rectangle, Point> reciprocal_transform(const Rectangle& rect, const Point& p) {
    const Rational& a = rect.a();
    Rational half(1, 2);
    Point q{p.y / a + half / a, p.x / a - half};
    return {Rectangle(a.reciprocal()), q};
}

/// The six lines whose points are discarded as trivial in rectangle
/// searches.
enum class LineTag { X0, XHalfA, XA, YNegHalf, Y0, YPosHalf };

inline std::string line_tag_str(LineTag t) {
    switch (t) {
        case LineTag::X0: return "x=0";
        case LineTag::XHalfA: return "x=a/2";
        case LineTag::XA: return "x=a";
        case LineTag::YNegHalf: return "y=-1/2";
        case LineTag::Y0: return "y=0";
        case LineTag::YPosHalf: return "y=1/2";
    }
    return "?";
}

/// Which trivial line (if any) the point lies on, checked in the fixed
/// order x=0, x=a/2, x=a, y=-1/2, y=0, y=1/2. Empty means generic.
inline std::optional<LineTag> classify_trivial(const Rectangle& rect, const Point& p) {
    const Rational& a = rect.a();
    Rational half(1, 2);
    if (p.x.is_zero()) return LineTag::X0;
    if (p.x == a / Rational(2)) return LineTag::XHalfA;
    if (p.x == a) return LineTag::XA;
    if (p.y == -half) return LineTag::YNegHalf;
    if (p.y.is_zero()) return LineTag::Y0;
    if (p.y == half) return LineTag::YPosHalf;
    return std::nullopt;
}

} // namespace rdlab
