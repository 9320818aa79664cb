#include "tg/lattice.hpp"

#include <algorithm>

namespace tg {

LatticeMap laurent_mul(const LatticeMap& a, const LatticeMap& b) {
    LatticeMap r;
    for (auto& [ka, va] : a.entries())
        for (auto& [kb, vb] : b.entries())
            r.add(Index2{ka.p + kb.p, ka.q + kb.q}, checked_mul(va, vb));
    return r;
}

namespace {
struct Box {
    int plo, phi, qlo, qhi;
};
Box box_of(const LatticeMap& m) {
    Box b{INT32_MAX, INT32_MIN, INT32_MAX, INT32_MIN};
    for (auto& [k, v] : m.entries()) {
        b.plo = std::min(b.plo, k.p);
        b.phi = std::max(b.phi, k.p);
        b.qlo = std::min(b.qlo, k.q);
        b.qhi = std::max(b.qhi, k.q);
    }
    return b;
}
}  // namespace

bool laurent_div(const LatticeMap& dividend, const LatticeMap& divisor, LatticeMap& quotient) {
    quotient = LatticeMap{};
    if (divisor.empty()) return false;
    if (dividend.empty()) return true;
    // degree ranges add under multiplication, so an exact quotient lives in
    // box(dividend) - box(divisor) componentwise
    const Box bp = box_of(dividend), bd = box_of(divisor);
    const Box qb{bp.plo - bd.plo, bp.phi - bd.phi, bp.qlo - bd.qlo, bp.qhi - bd.qhi};
    if (qb.plo > qb.phi || qb.qlo > qb.qhi) return false;

    const Index2 dlead = divisor.lex_max();
    const int64_t dc = divisor.coeff(dlead);
    LatticeMap rem = dividend;
    while (!rem.empty()) {
        const Index2 rlead = rem.lex_max();
        const int64_t rc = rem.coeff(rlead);
        if (rc % dc != 0) return false;
        const Index2 qk{rlead.p - dlead.p, rlead.q - dlead.q};
        if (qk.p < qb.plo || qk.p > qb.phi || qk.q < qb.qlo || qk.q > qb.qhi) return false;
        const int64_t qc = rc / dc;
        quotient.add(qk, qc);
        for (auto& [k, v] : divisor.entries())
            rem.add(Index2{k.p + qk.p, k.q + qk.q}, checked_mul(-qc, v));
    }
    return true;
}

}  // namespace tg
