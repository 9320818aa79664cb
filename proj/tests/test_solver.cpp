#include <doctest.h>

#include <cmath>

#include "tg/isometry.hpp"
#include "tg/solver.hpp"

using namespace tg;

namespace {

constexpr double kPi = 3.14159265358979323846;

LatticeMap tc_of(const char* word) { return t_coordinates(from_word(parse_word(word))); }

// the worked example words, transcribed letter by letter
const char* kEx62 = "123231213123231213";
const char* kEx63 = "123231312123231312";
const char* kEx64 = "13123231232312312312323131212313";
const char* kEx65a = "1212313132312323232312";
const char* kEx65b = "121213132131213232312323";
const char* kFig3Right = "1231231321231231321313213231213213";

std::vector<std::pair<double, double>> ex62_locus(size_t n) {
    // 1 + 2cos 2a2 + 2cos 2a3 = 0
    std::vector<std::pair<double, double>> pts;
    for (int i = 1; pts.size() < n && i < 4000; ++i) {
        const double a2 = i * kPi / 4000;
        const double c = (-1 - 2 * std::cos(2 * a2)) / 2;
        if (std::abs(c) > 1) continue;
        const double a3 = std::acos(c) / 2;
        if (a3 > 0 && a2 + a3 < kPi) pts.emplace_back(a2, a3);
    }
    return pts;
}

}  // namespace

TEST_CASE("expsum construction and canonicalization") {
    const ExpSum one = expsum_of(LatticeMap{{{{0, 0}, 1}}});
    CHECK(one.freq == LatticeMap{{{{0, 0}, 1}}});
    CHECK(one.constant());

    const ExpSum f62 = expsum_of(tc_of(kEx62));
    const LatticeMap want{{{{0, 0}, 1}, {{2, -2}, 1}, {{2, 0}, 1}, {{2, 2}, 1}, {{4, 0}, 1}}};
    CHECK(f62.freq == want);
}

TEST_CASE("real form matches the worked equations") {
    const auto rf62 = real_form(expsum_of(tc_of(kEx62)));
    REQUIRE(rf62.has_value());
    // 1 + 2cos 2a2 + 2cos 2a3
    const std::vector<std::pair<Index2, int64_t>> want62{{{0, 0}, 1}, {{0, 2}, 2}, {{2, 0}, 2}};
    CHECK(rf62->cosine_terms == want62);

    const auto rf63 = real_form(expsum_of(tc_of(kEx63)));
    REQUIRE(rf63.has_value());
    // 1 + 2cos 2a2 + 2cos 2a3 + 2cos 2(a2+a3)
    const std::vector<std::pair<Index2, int64_t>> want63{
        {{0, 0}, 1}, {{0, 2}, 2}, {{2, 0}, 2}, {{2, 2}, 2}};
    CHECK(rf63->cosine_terms == want63);

    // Fig. 3 right word: 2cos 2(a2+a3) - 2cos 2a2 - 1, up to global sign
    const auto rfr = real_form(expsum_of(tc_of(kFig3Right)));
    REQUIRE(rfr.has_value());
    LatticeMap terms;
    for (auto& [w, c] : rfr->cosine_terms) terms.add(w, c);
    const int64_t sgn = terms.coeff({2, 2}) < 0 ? -1 : 1;
    CHECK(sgn * terms.coeff({0, 0}) == -1);
    CHECK(sgn * terms.coeff({2, 0}) == -2);
    CHECK(sgn * terms.coeff({2, 2}) == 2);

    // a genuinely complex sum has no real form
    CHECK_FALSE(real_form(expsum_of(tc_of(kEx64))).has_value());
}

TEST_CASE("example zeros evaluate to ~0") {
    const ExpSum f64 = expsum_of(tc_of(kEx64));
    CHECK(std::abs(expsum_eval(f64, kPi / 4, kPi / 4)) < 1e-12);
    CHECK(std::abs(expsum_eval(f64, std::atan(std::sqrt(2.0)), std::atan(std::sqrt(2.0) / 3))) <
          1e-12);
}

TEST_CASE("zero set of Example-6.2 type: one curve, locus verification") {
    const ExpSum f = expsum_of(tc_of(kEx62));
    SolverOptions opt;
    opt.grid = 256;
    const ZeroSet z = zero_set(f, opt);
    REQUIRE(z.curves.size() == 1);
    CHECK(z.curves[0].zero_fraction >= 0.95);
    CHECK(z.points.empty());

    const LocusReport rep = verify_on_locus(f, ex62_locus(100), 1e-10);
    CHECK(rep.samples == 100);
    CHECK(rep.pass());

    // negative control: the diagonal is not in the zero set
    std::vector<std::pair<double, double>> diag;
    for (int i = 1; i <= 50; ++i) diag.emplace_back(i * 0.03, i * 0.03);
    CHECK_FALSE(verify_on_locus(f, diag, 1e-10).pass());
}

TEST_CASE("Fig-3-right relation holds on its locus") {
    const ExpSum f = expsum_of(tc_of(kFig3Right));
    // 2cos(2a2+2a3) - 2cos 2a2 = 1; both arccos branches of a2+a3
    std::vector<std::pair<double, double>> locus;
    for (int i = 1; locus.size() < 100 && i < 8000; ++i) {
        const double a2 = i * kPi / 8000;
        const double c = (1 + 2 * std::cos(2 * a2)) / 2;
        if (std::abs(c) > 1) continue;
        for (const double s : {std::acos(c) / 2, kPi - std::acos(c) / 2}) {
            const double a3 = s - a2;
            if (a3 > 0 && a2 + a3 < kPi && locus.size() < 100) locus.emplace_back(a2, a3);
        }
    }
    REQUIRE(locus.size() == 100);
    CHECK(verify_on_locus(f, locus, 1e-10).pass());
}

TEST_CASE("zero set of the length-32 word: two isolated points") {
    const ExpSum f = expsum_of(tc_of(kEx64));
    SolverOptions opt;
    opt.grid = 256;
    opt.tol = 1e-10;
    const ZeroSet z = zero_set(f, opt);
    CHECK(z.curves.empty());
    REQUIRE(z.points.size() == 2);
    CHECK(std::abs(z.points[0].alpha2 - kPi / 4) < 1e-9);
    CHECK(std::abs(z.points[0].alpha3 - kPi / 4) < 1e-9);
    CHECK(std::abs(z.points[1].alpha2 - std::atan(std::sqrt(2.0))) < 1e-9);
    CHECK(std::abs(z.points[1].alpha3 - std::atan(std::sqrt(2.0) / 3)) < 1e-9);
}

TEST_CASE("zero sets of the length-22 and length-24 isolated words") {
    SolverOptions opt;
    opt.grid = 512;
    opt.tol = 1e-9;
    const ZeroSet za = zero_set(expsum_of(tc_of(kEx65a)), opt);
    CHECK(za.curves.empty());
    REQUIRE(za.points.size() == 2);
    CHECK(std::abs(za.points[0].alpha2 - 0.3675592642 * kPi) < 1e-8);
    CHECK(std::abs(za.points[0].alpha3 - 0.1932064551 * kPi) < 1e-8);
    CHECK(std::abs(za.points[1].alpha2 - 0.5971477967 * kPi) < 1e-8);
    CHECK(std::abs(za.points[1].alpha3 - 0.2299624978 * kPi) < 1e-8);

    const ZeroSet zb = zero_set(expsum_of(tc_of(kEx65b)), opt);
    CHECK(zb.curves.empty());
    REQUIRE(zb.points.size() == 1);
    CHECK(std::abs(zb.points[0].alpha2 - 0.2961623095 * kPi) < 1e-8);
    CHECK(std::abs(zb.points[0].alpha3 - 0.4392394514 * kPi) < 1e-8);
}

TEST_CASE("constant sums have empty zero sets") {
    const ZeroSet z = zero_set(expsum_of(LatticeMap{{{{0, 0}, 1}}}));
    CHECK(z.curves.empty());
    CHECK(z.points.empty());
}

TEST_CASE("line factors strip and classify as non-typical") {
    // t1 plus one conjugate: f = 1 + e^{i theta}, zeros on rational lines only
    const LatticeMap tc{{{{0, 0}, 1}, {{1, 1}, 1}}};
    std::vector<LineFactor> lines;
    const ExpSum h = strip_line_factors(expsum_of(tc), lines);
    CHECK(h.monomial());
    REQUIRE(lines.size() == 1);
    SolverOptions opt;
    opt.grid = 128;
    CHECK(classify_expsum(expsum_of(tc), opt).kind == ClassKind::NonTypicalOnly);
}

TEST_CASE("rational-relation detector") {
    CHECK(rational_relations(0.3675592642 * kPi, 0.1932064551 * kPi).empty());
    CHECK_FALSE(rational_relations(kPi / 4, kPi / 4).empty());
    CHECK(rational_relations(kPi / 3, kPi / 4).size() >= 2);
    CHECK(rational_relations(0.137093560 * kPi, 0.411280680 * kPi).size() >= 1);  // a3 = 3 a2
}

TEST_CASE("classification of the example sums") {
    SolverOptions small;
    small.grid = 256;
    CHECK(classify_expsum(expsum_of(tc_of(kEx62)), small).kind == ClassKind::Curve);
    CHECK(classify_expsum(expsum_of(tc_of(kEx63)), small).kind == ClassKind::Curve);
    SolverOptions opt;
    opt.grid = 512;
    opt.tol = 1e-9;
    const Classification c65a = classify_expsum(expsum_of(tc_of(kEx65a)), opt);
    CHECK(c65a.kind == ClassKind::Isolated);
    CHECK(c65a.typical_points.size() == 2);
    CHECK(classify_expsum(expsum_of(LatticeMap{{{{0, 0}, 2}}}), small).kind ==
          ClassKind::ZeroFree);
}

TEST_CASE("zeros are invariant under the coordinate canonicalization action") {
    const LatticeMap tc = tc_of(kEx65b);
    SolverOptions opt;
    opt.grid = 512;
    opt.tol = 1e-9;
    const ZeroSet base = zero_set(expsum_of(tc), opt);
    // translate and involute the indices, negate coefficients
    LatticeMap moved;
    for (auto& [k, v] : tc.entries()) moved.add(Index2{-k.p + 2, -k.q - 1}, -v);
    const ZeroSet z2 = zero_set(expsum_of(moved), opt);
    REQUIRE(base.points.size() == z2.points.size());
    for (size_t i = 0; i < base.points.size(); ++i) {
        CHECK(std::abs(base.points[i].alpha2 - z2.points[i].alpha2) < 1e-8);
        CHECK(std::abs(base.points[i].alpha3 - z2.points[i].alpha3) < 1e-8);
    }
}
