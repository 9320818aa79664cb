// metabelian.hpp -- normal forms in the rotation subgroup H_tau, modeled
// as the free metabelian group of rank 2 on y2 = r2r1 and y3 = r1r3
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tg/lattice.hpp"
#include "tg/word.hpp"

namespace tg {

struct OddLength : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotInCommutatorSubgroup : std::domain_error {
    using std::domain_error::domain_error;
};

// signed generator: gen in {2,3} for y2/y3, exp in {+1,-1}
struct YLetter {
    uint8_t gen;
    int8_t exp;
    bool operator==(const YLetter&) const = default;
};
using YWord = std::vector<YLetter>;

// Rewrites an even-length word over {1,2,3} into y-generators using
// r2r1 = y2, r1r2 = y2^-1, r1r3 = y3, r3r1 = y3^-1, r2r3 = y2 y3,
// r3r2 = y3^-1 y2^-1. Throws OddLength on odd input.
YWord to_ywords(const Word& w);

// Normal form: abelianized exponents plus the winding map of the closed
// exponent path (counterclockwise positive; paths are closed along the
// y2-axis first, then y3). winding(n,m) is the winding number around the
// plaquette center (n + 1/2, m + 1/2).
struct MetaNF {
    int64_t a = 0, b = 0;
    LatticeMap winding;

    bool is_identity() const { return a == 0 && b == 0 && winding.empty(); }
    bool operator==(const MetaNF&) const = default;
};

MetaNF normal_form(const YWord& yw);

MetaNF nf_mul(const MetaNF& x, const MetaNF& y);
MetaNF nf_inverse(const MetaNF& x);

// Winding map of an arbitrary closed axis-parallel lattice loop given by
// its vertex list (consecutive vertices differ by a unit step; the last
// vertex must equal the first).
LatticeMap winding_of_loop(const std::vector<Index2>& vertices);

// C(t1)-coordinates of an element of the commutator subgroup: plaquette
// (u,v) with weight c maps to t-index (u+1, -v-1) with weight c. The
// affine re-indexing is calibrated against isometry::t_coordinates on
// the word "123123". Throws NotInCommutatorSubgroup when a or b != 0.
LatticeMap meta_to_tcoords(const MetaNF& nf);

}  // namespace tg
