// isometry.hpp -- exact symbolic arithmetic in the triangle group G_tau,
// parametric in the angles (alpha2, alpha3)
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "tg/lattice.hpp"
#include "tg/word.hpp"

namespace tg {

struct NotATranslation : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotInTranslationSubgroup : std::domain_error {
    using std::domain_error::domain_error;
};

// Angles of the triangle; alpha1 = pi - alpha2 - alpha3. The incircle is
// normalized to the unit circle at the origin, edge e1 lies on y = -1
// with the triangle above it.
struct TriangleShape {
    double alpha2, alpha3;

    TriangleShape(double a2, double a3) : alpha2(a2), alpha3(a3) {
        if (!(a2 > 0) || !(a3 > 0) || !(a2 + a3 < 3.14159265358979323846))
            throw std::invalid_argument("triangle shape outside parameter space");
    }
    double alpha1() const;
    // side length opposite to vertex i, inradius-1 normalization:
    // l_i = cot(alpha_j/2) + cot(alpha_k/2)
    double side(int i) const;
};

// Linear part of an isometry, indexed over the angle lattice:
//   Rot(p,q): rotation by 2p*alpha2 + 2q*alpha3
//   Ref(p,q): reflection across the line through the origin at angle
//             p*alpha2 + q*alpha3 (mod pi)
struct LinearPart {
    enum Kind : uint8_t { Rot, Ref } kind = Rot;
    Index2 idx{};
    bool operator==(const LinearPart&) const = default;
};

// Exact element of G_tau. The translation part is stored in the u-basis:
// u_{p,q} is the unit vector at angle pi/2 + p*alpha2 + q*alpha3, and a
// unit vector at angle -pi/2 + p*alpha2 + q*alpha3 is stored as -u_{p,q}.
// Acts on the right: (x)g = (x)lin + trans.
struct SymIsometry {
    LinearPart lin;
    LatticeMap trans;  // u-basis coefficients

    bool is_identity() const { return lin == LinearPart{} && trans.empty(); }
    bool operator==(const SymIsometry&) const = default;
};

// r_i, the reflection across edge e_i.
SymIsometry generator(int i);

// Right-action composite: (x)(g h) = ((x)g)h.
SymIsometry compose(const SymIsometry& g, const SymIsometry& h);

SymIsometry inverse(const SymIsometry& g);

// Left-to-right product of generators; the empty word is the identity.
SymIsometry from_word(const Word& w);

inline bool is_identity(const SymIsometry& g) { return g.is_identity(); }

// Numeric 2x2 matrix (row-vector right action: x' = x M + v) and
// translation vector at a concrete shape.
struct NumericIsometry {
    std::array<std::array<double, 2>, 2> mat;
    std::array<double, 2> vec;
};
NumericIsometry evaluate(const SymIsometry& g, const TriangleShape& s);

// numeric value of a u-basis lattice map
std::array<double, 2> evaluate_uvec(const LatticeMap& trans, const TriangleShape& s);

// Index of (t_{n,m}) r_i in the conjugation class C(t1):
//   (t_{n,m})r1 = t_{-n+1,-m-1}, (t_{n,m})r2 = t_{-n+2,-m-1},
//   (t_{n,m})r3 = t_{-n+1,-m}
Index2 conj_index(int i, Index2 nm);

// u-basis form of t1 = (r1 r2 r3)^2.
const LatticeMap& t1_uform();

// u-basis form of t_{n,m} = (t1)(r1r2)^n (r1r3)^m.
LatticeMap t_basis_uform(Index2 nm);

// Coordinates of a translation on the basis C(t1): the unique finitely
// supported integer map c with trans = sum c(n,m) * uform(t_{n,m}).
// Implemented as exact division by t1 in the Laurent algebra.
// Throws NotATranslation when lin != Rot(0,0), NotInTranslationSubgroup
// when the division leaves a remainder. Key encoding: {p=n, q=m}.
LatticeMap t_coordinates(const SymIsometry& g);

// norm of t1: 4(sin a1 + sin a2 + sin a3)
double rho(const TriangleShape& s);

}  // namespace tg
