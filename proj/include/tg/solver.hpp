// solver.hpp -- numeric zero sets of exponential sums over the parameter
// triangle T = {alpha2, alpha3 > 0, alpha2 + alpha3 < pi}
#pragma once

#include <string>
#include <vector>

#include "tg/expsum.hpp"

namespace tg {

struct ZeroPoint {
    double alpha2 = 0, alpha3 = 0;
    double residual = 0;
};

struct ZeroCurve {
    // polyline vertices (alpha2, alpha3) with per-vertex |f| residual
    std::vector<ZeroPoint> vertices;
    double zero_fraction = 0;     // fraction of refined samples with |f| <= tol
    bool split_from_ambiguous = false;
};

struct ZeroSet {
    std::vector<ZeroCurve> curves;
    std::vector<ZeroPoint> points;
    std::vector<ZeroPoint> no_convergence;  // Newton failures, reported not fatal
    std::vector<LineFactor> lines;          // stripped rational-line factors
    std::vector<std::string> flags;
};

struct SolverOptions {
    int grid = 1024;
    double tol = 1e-10;
    int newton_cap = 50;
    double inset = 1e-6;     // domain inset from the boundary of T
    int threads = 0;         // 0 = available parallelism
    double curve_fraction = 0.95;
    int min_split_run = 8;   // consecutive zero samples promoting an ambiguous piece
};

// Marching-squares contours of Re f (of the factored real form when one
// exists) with Newton-refined samples; a contour component is a zero
// curve when >= curve_fraction of its samples satisfy |f| <= tol.
// Re/Im contour intersections refine to isolated points. Rational-line
// factors are divided out first and reported separately.
ZeroSet zero_set(const ExpSum& f, const SolverOptions& opt = {});

struct LocusReport {
    int samples = 0;
    int passed = 0;
    double worst = 0;
    bool pass() const { return samples > 0 && passed == samples; }
};

// Fraction of the sampled locus where |f| <= tol.
LocusReport verify_on_locus(const ExpSum& f, const std::vector<std::pair<double, double>>& locus,
                            double tol);

// Integer relation n2 a2 + n3 a3 + n0 pi = 0 with |n2|,|n3| <= bound;
// empty when none is found within tolerance (the shape then counts as
// typical for classification purposes).
struct RationalRelation {
    int n2 = 0, n3 = 0, n0 = 0;
};
std::vector<RationalRelation> rational_relations(double a2, double a3, int bound = 32,
                                                 double tol = 1e-7);

// census-grade classification of a coordinate class
enum class ClassKind {
    ZeroFree,          // no zeros in T at all
    NonTypicalOnly,    // zeros only on rational lines
    RationalPoints,    // isolated zeros, all at non-typical shapes
    Curve,             // a genuine zero curve (uncountably many typical shapes)
    Isolated,          // isolated zeros at typical-looking shapes
};

struct Classification {
    ClassKind kind = ClassKind::ZeroFree;
    ZeroSet zeros;
    std::vector<ZeroPoint> typical_points;  // isolated zeros passing the relation test
};

Classification classify_expsum(const ExpSum& f, const SolverOptions& opt = {});

}  // namespace tg
