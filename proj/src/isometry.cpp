#include "tg/isometry.hpp"

#include <cmath>

namespace tg {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double TriangleShape::alpha1() const { return kPi - alpha2 - alpha3; }

double TriangleShape::side(int i) const {
    const double a[4] = {0, alpha1(), alpha2, alpha3};
    const int j = i % 3 + 1, k = (i + 1) % 3 + 1;
    return 1.0 / std::tan(a[j] / 2) + 1.0 / std::tan(a[k] / 2);
}

double rho(const TriangleShape& s) {
    return 4 * (std::sin(s.alpha1()) + std::sin(s.alpha2) + std::sin(s.alpha3));
}

SymIsometry generator(int i) {
    // reflection axes through the origin parallel to the edges, and twice
    // the unit normals v_i in the u-basis; edge e1 lies on y = -1
    switch (i) {
        case 1: return {{LinearPart::Ref, {0, 0}}, LatticeMap{{{{0, 0}, -2}}}};
        case 2: return {{LinearPart::Ref, {0, -1}}, LatticeMap{{{{0, -1}, 2}}}};
        case 3: return {{LinearPart::Ref, {1, 0}}, LatticeMap{{{{1, 0}, 2}}}};
        default: throw BadSymbol("generator index out of {1,2,3}");
    }
}

namespace {

LinearPart lin_mul(const LinearPart& a, const LinearPart& b) {
    using K = LinearPart::Kind;
    if (a.kind == K::Rot && b.kind == K::Rot)
        return {K::Rot, {a.idx.p + b.idx.p, a.idx.q + b.idx.q}};
    if (a.kind == K::Ref && b.kind == K::Ref)
        return {K::Rot, {b.idx.p - a.idx.p, b.idx.q - a.idx.q}};
    if (a.kind == K::Ref && b.kind == K::Rot)
        return {K::Ref, {a.idx.p + b.idx.p, a.idx.q + b.idx.q}};
    return {K::Ref, {b.idx.p - a.idx.p, b.idx.q - a.idx.q}};  // rot then ref
}

// apply a linear part to a u-basis map (right action on vectors)
LatticeMap lin_apply(const LinearPart& l, const LatticeMap& m) {
    LatticeMap r;
    for (auto& [k, v] : m.entries()) {
        if (l.kind == LinearPart::Rot)
            r.add(Index2{k.p + 2 * l.idx.p, k.q + 2 * l.idx.q}, v);
        else
            r.add(Index2{2 * l.idx.p - k.p, 2 * l.idx.q - k.q}, -v);
    }
    return r;
}

}  // namespace

SymIsometry compose(const SymIsometry& g, const SymIsometry& h) {
    SymIsometry r;
    r.lin = lin_mul(g.lin, h.lin);
    r.trans = lin_apply(h.lin, g.trans);
    r.trans += h.trans;
    return r;
}

SymIsometry inverse(const SymIsometry& g) {
    // (x)g^-1 = (x - trans) lin^-1
    SymIsometry r;
    if (g.lin.kind == LinearPart::Ref)
        r.lin = g.lin;  // reflections are involutions
    else
        r.lin = {LinearPart::Rot, {-g.lin.idx.p, -g.lin.idx.q}};
    r.trans = lin_apply(r.lin, g.trans.negated());
    return r;
}

SymIsometry from_word(const Word& w) {
    SymIsometry g;
    for (uint8_t s : w) g = compose(g, generator(s));
    return g;
}

std::array<double, 2> evaluate_uvec(const LatticeMap& trans, const TriangleShape& s) {
    double x = 0, y = 0;
    for (auto& [k, v] : trans.entries()) {
        const double th = kPi / 2 + k.p * s.alpha2 + k.q * s.alpha3;
        x += static_cast<double>(v) * std::cos(th);
        y += static_cast<double>(v) * std::sin(th);
    }
    return {x, y};
}

NumericIsometry evaluate(const SymIsometry& g, const TriangleShape& s) {
    NumericIsometry out;
    if (g.lin.kind == LinearPart::Rot) {
        const double th = 2 * (g.lin.idx.p * s.alpha2 + g.lin.idx.q * s.alpha3);
        out.mat = {{{std::cos(th), std::sin(th)}, {-std::sin(th), std::cos(th)}}};
    } else {
        const double phi = g.lin.idx.p * s.alpha2 + g.lin.idx.q * s.alpha3;
        out.mat = {{{std::cos(2 * phi), std::sin(2 * phi)}, {std::sin(2 * phi), -std::cos(2 * phi)}}};
    }
    out.vec = evaluate_uvec(g.trans, s);
    return out;
}

Index2 conj_index(int i, Index2 nm) {
    switch (i) {
        case 1: return {-nm.p + 1, -nm.q - 1};
        case 2: return {-nm.p + 2, -nm.q - 1};
        case 3: return {-nm.p + 1, -nm.q};
        default: throw BadSymbol("conj_index generator out of {1,2,3}");
    }
}

const LatticeMap& t1_uform() {
    static const LatticeMap t1 = from_word(parse_word("123123")).trans;
    return t1;
}

LatticeMap t_basis_uform(Index2 nm) {
    // t_{n,m} is t1 rotated by 2m*alpha2 - 2n*alpha3: index shift (2m, -2n)
    return t1_uform().shifted(2 * nm.q, -2 * nm.p);
}

LatticeMap t_coordinates(const SymIsometry& g) {
    if (!(g.lin == LinearPart{}))
        throw NotATranslation("t_coordinates: linear part is not the trivial rotation");
    LatticeMap quot;
    if (!laurent_div(g.trans, t1_uform(), quot))
        throw NotInTranslationSubgroup("t_coordinates: not an integer combination of C(t1)");
    LatticeMap coords;
    for (auto& [k, v] : quot.entries()) {
        if (k.p % 2 != 0 || k.q % 2 != 0)
            throw NotInTranslationSubgroup("t_coordinates: odd monomial in quotient");
        coords.add(Index2{-k.q / 2, k.p / 2}, v);
    }
    return coords;
}

}  // namespace tg
