// render.hpp -- reflection chains (triangle unfoldings) and their
// deterministic SVG rendering
#pragma once

#include <array>
#include <string>
#include <vector>

#include "tg/isometry.hpp"
#include "tg/word.hpp"

namespace tg {

using Point = std::array<double, 2>;

// The chain of reflected triangle copies generated by a word: triangle
// k+1 is the mirror image of triangle k across the supporting line of
// the edge named by letter k+1.
struct Chain {
    std::vector<std::array<Point, 3>> triangles;   // |w|+1 vertex triples
    std::vector<Point> incenters;                  // |w|+1 incenter path
    std::vector<std::array<Point, 2>> displacements;  // per-step incenter moves
    std::vector<std::array<Point, 2>> t_vectors;      // C(t1)-decomposition arrows
};

Chain unfold(const Word& w, const TriangleShape& s);

struct SvgStyle {
    double stroke_width = 0.02;
    std::string triangle_color = "#4477aa";
    std::string incenter_color = "#cc6677";
    std::string displacement_color = "#117733";
    std::string tvector_color = "#882255";
    double margin_fraction = 0.05;
    int width_px = 800;
};

// Deterministic SVG 1.1 document: stable element order and numeric
// formatting, layers for triangles, incenter path, displacement vectors
// and t-vectors.
std::string to_svg(const Chain& chain, const SvgStyle& style = {});

}  // namespace tg
