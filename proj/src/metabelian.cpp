#include "tg/metabelian.hpp"

#include <algorithm>
#include <map>

namespace tg {

YWord to_ywords(const Word& w) {
    if (w.size() % 2 != 0) throw OddLength("to_ywords: odd-length word");
    YWord out;
    out.reserve(w.size());
    for (size_t i = 0; i < w.size(); i += 2) {
        const int a = w[i], b = w[i + 1];
        if (a == b) continue;
        if (a == 2 && b == 1) out.push_back({2, 1});
        else if (a == 1 && b == 2) out.push_back({2, -1});
        else if (a == 1 && b == 3) out.push_back({3, 1});
        else if (a == 3 && b == 1) out.push_back({3, -1});
        else if (a == 2 && b == 3) { out.push_back({2, 1}); out.push_back({3, 1}); }
        else { out.push_back({3, -1}); out.push_back({2, -1}); }  // r3 r2
    }
    return out;
}

LatticeMap winding_of_loop(const std::vector<Index2>& vertices) {
    // crossing count with the rightward ray from each plaquette center:
    // an up-step at column x crossing height m+1/2 contributes +1 to all
    // plaquettes (n,m) with n < x; suffix sums make that finite
    std::map<int, std::map<int, int64_t>> rows;  // m -> (x -> net up-crossings)
    for (size_t i = 0; i + 1 < vertices.size(); ++i) {
        const Index2 a = vertices[i], b = vertices[i + 1];
        if (b.p == a.p && b.q == a.q + 1) rows[a.q][a.p] += 1;
        else if (b.p == a.p && b.q == a.q - 1) rows[b.q][a.p] -= 1;
    }
    LatticeMap w;
    for (auto& [m, ev] : rows) {
        int64_t suffix = 0;
        // walk columns right to left; winding is constant between events
        auto it = ev.rbegin();
        while (it != ev.rend()) {
            const int x = it->first;
            suffix += it->second;
            ++it;
            const int xlo = (it == ev.rend()) ? x - 1 : it->first;
            if (suffix != 0)
                for (int n = xlo; n <= x - 1; ++n) w.add(Index2{n, m}, suffix);
        }
    }
    return w;
}

namespace {

// canonical path from (x,y) to the origin: y2-direction first, then y3
void append_closure(std::vector<Index2>& pts, Index2 from) {
    int x = from.p, y = from.q;
    while (x != 0) {
        x += (x > 0) ? -1 : 1;
        pts.push_back({x, y});
    }
    while (y != 0) {
        y += (y > 0) ? -1 : 1;
        pts.push_back({x, y});
    }
}

}  // namespace

MetaNF normal_form(const YWord& yw) {
    std::vector<Index2> pts{{0, 0}};
    pts.reserve(yw.size() * 2 + 2);
    for (const YLetter& l : yw) {
        Index2 c = pts.back();
        if (l.gen == 2) c.p += l.exp;
        else c.q += l.exp;
        pts.push_back(c);
    }
    const Index2 end = pts.back();
    append_closure(pts, end);
    return MetaNF{end.p, end.q, winding_of_loop(pts)};
}

MetaNF nf_mul(const MetaNF& x, const MetaNF& y) {
    MetaNF r;
    r.a = checked_add(x.a, y.a);
    r.b = checked_add(x.b, y.b);
    r.winding = x.winding;
    r.winding += y.winding.shifted(static_cast<int>(x.a), static_cast<int>(x.b));
    // correction loop: canonical 0 -> p1, translated canonical p1 -> p1+p2,
    // canonical closure back to 0
    const Index2 p1{static_cast<int>(x.a), static_cast<int>(x.b)};
    const Index2 p12{static_cast<int>(r.a), static_cast<int>(r.b)};
    std::vector<Index2> a{p1};
    append_closure(a, p1);
    std::reverse(a.begin(), a.end());  // 0 ... p1
    std::vector<Index2> b{{static_cast<int>(y.a), static_cast<int>(y.b)}};
    append_closure(b, b.front());
    std::reverse(b.begin(), b.end());
    for (Index2& v : b) v = {v.p + p1.p, v.q + p1.q};  // p1 ... p1+p2
    std::vector<Index2> loop = std::move(a);
    loop.insert(loop.end(), b.begin() + 1, b.end());
    append_closure(loop, p12);
    r.winding += winding_of_loop(loop);
    return r;
}

MetaNF nf_inverse(const MetaNF& x) {
    // solve x * inv = identity
    MetaNF inv;
    inv.a = -x.a;
    inv.b = -x.b;
    // winding of x*inv without inv.winding equals x.winding + correction;
    // shift the negation back to inv's frame
    MetaNF partial = nf_mul(x, MetaNF{inv.a, inv.b, {}});
    inv.winding = partial.winding.negated().shifted(static_cast<int>(-x.a), static_cast<int>(-x.b));
    return inv;
}

LatticeMap meta_to_tcoords(const MetaNF& nf) {
    if (nf.a != 0 || nf.b != 0)
        throw NotInCommutatorSubgroup("meta_to_tcoords: nonzero abelianized exponents");
    LatticeMap out;
    for (auto& [k, v] : nf.winding.entries()) out.add(Index2{k.p + 1, -k.q - 1}, v);
    return out;
}

}  // namespace tg
