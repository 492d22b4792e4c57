// Shared lazily-built geometry fixtures so the q=4 and q=9 structures are
// constructed once per test binary.

#pragma once

#include "hermicode/analysis.hpp"

namespace fixtures {

inline const hermicode::Field& f4() {
    static const hermicode::Field f(2, 2);
    return f;
}
inline const hermicode::Field& f9() {
    static const hermicode::Field f(3, 2);
    return f;
}
inline const hermicode::Geometry& g4() {
    static const hermicode::Geometry g(f4());
    return g;
}
inline const hermicode::Geometry& g9() {
    static const hermicode::Geometry g(f9());
    return g;
}
inline const hermicode::HermitianSurface& x4() {
    static const hermicode::HermitianSurface x(g4());
    return x;
}
inline const hermicode::HermitianSurface& x9() {
    static const hermicode::HermitianSurface x(g9());
    return x;
}
inline const hermicode::SurfaceStudy& study4() {
    static const hermicode::SurfaceStudy s(x4());
    return s;
}
inline const hermicode::SurfaceStudy& study9() {
    static const hermicode::SurfaceStudy s(x9());
    return s;
}

}  // namespace fixtures
