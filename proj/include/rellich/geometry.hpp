#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rellich {

// Angular domain Sigma on the unit sphere S^{n-1}. A cone is the set of
// rays through Sigma. For n = 2 a Cap of radius theta is an arc of length
// 2*theta.
enum class Shape { FullSphere, HalfSphere, Cap };

struct ConeGeometry {
    int n = 0;              // ambient dimension, >= 2
    Shape shape = Shape::FullSphere;
    double theta = 0.0;     // geodesic radius, only meaningful for Cap

    static ConeGeometry full_sphere(int n) { return validated({n, Shape::FullSphere, 0.0}); }
    static ConeGeometry half_sphere(int n) { return validated({n, Shape::HalfSphere, 0.0}); }
    static ConeGeometry cap(int n, double theta) { return validated({n, Shape::Cap, theta}); }

    // Sigma is a proper subdomain of the sphere (so lambda_Sigma > 0).
    bool proper() const { return shape != Shape::FullSphere; }

    static ConeGeometry validated(ConeGeometry g) {
        if (g.n < 2) throw std::invalid_argument("dimension must satisfy n >= 2");
        if (g.shape == Shape::Cap && !(g.theta > 0.0 && g.theta < std::numbers::pi))
            throw std::invalid_argument("cap radius must lie in (0, pi)");
        return g;
    }
};

enum class BoundaryCondition { Navier, Mixed, Dirichlet };

// Cone-like domains: intersection of a cone with the unit ball, or the
// exterior complement. The two map to the cylinder half-lines s > 0 and
// s < 0 and are exchanged by s -> -s.
enum class DomainKind { Cone, IntersectBall, ExteriorBall };

struct ProblemSpec {
    ConeGeometry geometry;
    double alpha = 0.0;
    BoundaryCondition bc = BoundaryCondition::Navier;
    DomainKind kind = DomainKind::Cone;
};

inline std::string to_string(Shape s) {
    switch (s) {
        case Shape::FullSphere: return "full-sphere";
        case Shape::HalfSphere: return "half-sphere";
        case Shape::Cap: return "cap";
    }
    return "?";
}

inline std::string to_string(BoundaryCondition bc) {
    switch (bc) {
        case BoundaryCondition::Navier: return "navier";
        case BoundaryCondition::Mixed: return "mixed";
        case BoundaryCondition::Dirichlet: return "dirichlet";
    }
    return "?";
}

inline std::string to_string(DomainKind k) {
    switch (k) {
        case DomainKind::Cone: return "cone";
        case DomainKind::IntersectBall: return "ball";
        case DomainKind::ExteriorBall: return "exterior";
    }
    return "?";
}

} // namespace rellich
