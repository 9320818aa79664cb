#include <doctest.h>

#include <cmath>

#include "tg/render.hpp"

using namespace tg;

namespace {

constexpr double kPi = 3.14159265358979323846;
const char* kCommutator22 = "1231312312132131321323";

double dist(const Point& a, const Point& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

// the two triangle vertices on the supporting line of edge i (vertex j
// and k with {i,j,k} = {1,2,3}; vertices are indexed 0..2 here)
std::array<int, 2> edge_vertices(int i) { return {i % 3, (i + 1) % 3}; }

}  // namespace

TEST_CASE("empty word gives a single triangle") {
    const TriangleShape s{0.6, 0.7};
    const Chain ch = unfold({}, s);
    CHECK(ch.triangles.size() == 1);
    CHECK(ch.incenters.size() == 1);
    CHECK(ch.displacements.empty());
    CHECK(ch.t_vectors.empty());
    // incircle of the base triangle is the unit circle at the origin
    CHECK(dist(ch.incenters[0], {0, 0}) < 1e-12);
}

TEST_CASE("consecutive triangles share the reflected edge") {
    const TriangleShape s{0.6, 0.7};
    const Word w = parse_word("12313212");
    const Chain ch = unfold(w, s);
    REQUIRE(ch.triangles.size() == w.size() + 1);
    const size_t n = w.size();
    for (size_t k = 1; k <= n; ++k) {
        // step k reflects across edge w[n-k] (letters are consumed from
        // the end so the composite realizes the word left-to-right)
        const auto [v0, v1] = edge_vertices(w[n - k]);
        CHECK(dist(ch.triangles[k - 1][v0], ch.triangles[k][v0]) < 1e-9);
        CHECK(dist(ch.triangles[k - 1][v1], ch.triangles[k][v1]) < 1e-9);
    }
}

TEST_CASE("stable word: closed displacement bookkeeping and translation") {
    const TriangleShape s{0.6, 0.7};
    const Word w = parse_word("123123");
    const Chain ch = unfold(w, s);
    const auto g = evaluate(from_word(w), s);
    // final triangle is the initial one translated by t1
    for (int v = 0; v < 3; ++v) {
        CHECK(dist(ch.triangles.back()[v],
                   {ch.triangles.front()[v][0] + g.vec[0],
                    ch.triangles.front()[v][1] + g.vec[1]}) < 1e-9);
    }
    CHECK(std::abs(std::hypot(g.vec[0], g.vec[1]) - rho(s)) < 1e-9);
    // sum of incenter displacements equals the word's translation part
    double sx = 0, sy = 0;
    for (auto& d : ch.displacements) {
        sx += d[1][0] - d[0][0];
        sy += d[1][1] - d[0][1];
    }
    CHECK(std::abs(sx - g.vec[0]) < 1e-9);
    CHECK(std::abs(sy - g.vec[1]) < 1e-9);
    // t-vectors close up at the same endpoint
    REQUIRE(!ch.t_vectors.empty());
    CHECK(dist(ch.t_vectors.back()[1], {g.vec[0], g.vec[1]}) < 1e-9);
}

TEST_CASE("displacements match the suffix-rotated edge normals") {
    const TriangleShape s{0.52, 0.71};
    const Word w = parse_word("1223213123");
    const Chain ch = unfold(w, s);
    const size_t n = w.size();
    REQUIRE(ch.displacements.size() == n);
    for (size_t k = 1; k <= n; ++k) {
        const size_t j = n - k;  // 0-based position in the word
        SymIsometry suffix;
        for (size_t t = j + 1; t < n; ++t) suffix = compose(suffix, generator(w[t]));
        SymIsometry vj;
        vj.trans = generator(w[j]).trans;
        const auto want = evaluate_uvec(compose(vj, SymIsometry{suffix.lin, {}}).trans, s);
        const auto& d = ch.displacements[k - 1];
        CHECK(std::abs((d[1][0] - d[0][0]) - want[0]) < 1e-9);
        CHECK(std::abs((d[1][1] - d[0][1]) - want[1]) < 1e-9);
    }
}

TEST_CASE("closed chain for the generic commutator relation") {
    const TriangleShape s{0.6, 0.7};
    const Chain ch = unfold(parse_word(kCommutator22), s);
    for (int v = 0; v < 3; ++v)
        CHECK(dist(ch.triangles.back()[v], ch.triangles.front()[v]) < 1e-9);
}

TEST_CASE("closed chain at the isolated triangle of the length-32 relation") {
    const char* w32 = "13123231232312312312323131212313";
    const TriangleShape s{std::atan(std::sqrt(2.0)), std::atan(std::sqrt(2.0) / 3)};
    const Chain ch = unfold(parse_word(w32), s);
    for (int v = 0; v < 3; ++v)
        CHECK(dist(ch.triangles.back()[v], ch.triangles.front()[v]) < 1e-9);
}

TEST_CASE("svg output is deterministic and well-formed") {
    const TriangleShape s{0.6, 0.7};
    const Chain ch = unfold(parse_word("123123"), s);
    const std::string a = to_svg(ch), b = to_svg(ch);
    CHECK(a == b);
    CHECK(a.find("<svg") == 0);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(a.find("<polygon") != std::string::npos);
    const std::string empty_svg = to_svg(unfold({}, s));
    CHECK(empty_svg.find("<polygon") != std::string::npos);
}
