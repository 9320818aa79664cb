#include "tg/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tg {

ExpSum canonicalize(LatticeMap freq) {
    if (freq.empty()) return {};
    const Index2 mn = freq.lex_min();
    return {freq.shifted(-mn.p, -mn.q)};
}

ExpSum expsum_of(const LatticeMap& tcoords) {
    LatticeMap f;
    for (auto& [k, v] : tcoords.entries()) f.add(Index2{2 * k.q, -2 * k.p}, v);
    return canonicalize(std::move(f));
}

std::complex<double> expsum_eval(const ExpSum& f, double a2, double a3) {
    std::complex<double> s = 0;
    for (auto& [k, v] : f.freq.entries()) {
        const double th = k.p * a2 + k.q * a3;
        s += static_cast<double>(v) * std::complex<double>(std::cos(th), std::sin(th));
    }
    return s;
}

std::optional<RealForm> real_form(const ExpSum& f) {
    if (f.freq.empty()) return std::nullopt;
    int plo = INT32_MAX, phi = INT32_MIN, qlo = INT32_MAX, qhi = INT32_MIN;
    for (auto& [k, v] : f.freq.entries()) {
        plo = std::min(plo, k.p); phi = std::max(phi, k.p);
        qlo = std::min(qlo, k.q); qhi = std::max(qhi, k.q);
    }
    // the only possible symmetry point is lexmin + lexmax
    const Index2 s{f.freq.lex_min().p + f.freq.lex_max().p,
                   f.freq.lex_min().q + f.freq.lex_max().q};
    for (auto& [k, v] : f.freq.entries())
        if (f.freq.coeff(Index2{s.p - k.p, s.q - k.q}) != v) return std::nullopt;
    if (s.p % 2 != 0 || s.q % 2 != 0) return std::nullopt;
    RealForm g;
    g.center = {s.p / 2, s.q / 2};
    for (auto& [k, v] : f.freq.entries()) {
        Index2 w{k.p - g.center.p, k.q - g.center.q};
        if (w < Index2{0, 0}) continue;  // keep one of each mirror pair
        g.cosine_terms.emplace_back(w, w == Index2{0, 0} ? v : checked_mul(2, v));
    }
    std::sort(g.cosine_terms.begin(), g.cosine_terms.end(),
              [](auto& x, auto& y) { return x.first < y.first; });
    return g;
}

double real_form_eval(const RealForm& g, double a2, double a3) {
    double s = 0;
    for (auto& [w, c] : g.cosine_terms) s += static_cast<double>(c) * std::cos(w.p * a2 + w.q * a3);
    return s;
}

namespace {

// cyclotomic polynomial coefficients, low degree first
std::vector<int64_t> cyclotomic(int r) {
    static std::vector<std::vector<int64_t>> cache;
    if (static_cast<int>(cache.size()) > r && !cache[r].empty()) return cache[r];
    if (static_cast<int>(cache.size()) <= r) cache.resize(r + 1);
    std::vector<int64_t> p(r + 1, 0);
    p[0] = -1;
    p[r] = 1;  // x^r - 1
    for (int d = 1; d < r; ++d) {
        if (r % d != 0) continue;
        const std::vector<int64_t> q = cyclotomic(d);
        // exact univariate division p /= q
        std::vector<int64_t> quo(p.size() - q.size() + 1, 0);
        std::vector<int64_t> rem = p;
        for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
            quo[i] = rem[i + q.size() - 1] / q.back();
            for (size_t j = 0; j < q.size(); ++j) rem[i + j] -= quo[i] * q[j];
        }
        p = quo;
    }
    cache[r] = p;
    return p;
}

int euler_phi(int r) {
    int out = r;
    for (int d = 2; d * d <= r; ++d)
        if (r % d == 0) {
            out -= out / d;
            while (r % d == 0) r /= d;
        }
    if (r > 1) out -= out / r;
    return out;
}

}  // namespace

ExpSum strip_line_factors(const ExpSum& f0, std::vector<LineFactor>& lines) {
    ExpSum f = f0;
    if (f.freq.size() <= 1) return f;
    bool changed = true;
    while (changed && f.freq.size() > 1) {
        changed = false;
        int wp = f.freq.lex_max().p - f.freq.lex_min().p;
        int wq = INT32_MIN, ql = INT32_MAX;
        for (auto& [k, v] : f.freq.entries()) {
            wq = std::max(wq, k.q);
            ql = std::min(ql, k.q);
        }
        wq -= ql;
        for (int a = 0; a <= wp && !changed; ++a)
            for (int b = -wq; b <= wq && !changed; ++b) {
                if (a == 0 && b <= 0) continue;
                if (std::gcd(a, std::abs(b)) != 1) continue;
                int kmax = INT32_MAX;
                if (a) kmax = std::min(kmax, wp / a);
                if (b) kmax = std::min(kmax, wq / std::abs(b));
                if (kmax < 1) continue;
                for (int r = 1; r <= 105 && !changed; ++r) {
                    if (euler_phi(r) > kmax) continue;
                    const std::vector<int64_t> phi = cyclotomic(r);
                    LatticeMap div;
                    for (size_t d = 0; d < phi.size(); ++d)
                        if (phi[d]) div.add(Index2{static_cast<int>(d) * a,
                                                   static_cast<int>(d) * b}, phi[d]);
                    LatticeMap quot;
                    if (laurent_div(f.freq, div, quot) && !quot.empty()) {
                        lines.push_back({a, b, r});
                        f = canonicalize(std::move(quot));
                        changed = true;
                    }
                }
            }
    }
    return f;
}

bool collinear_support(const ExpSum& f) {
    if (f.freq.size() <= 2) return true;
    const Index2 o = f.freq.lex_min();
    Index2 dir{0, 0};
    for (auto& [k, v] : f.freq.entries()) {
        const Index2 d{k.p - o.p, k.q - o.q};
        if (d == Index2{0, 0}) continue;
        if (dir == Index2{0, 0}) dir = d;
        else if (static_cast<int64_t>(dir.p) * d.q != static_cast<int64_t>(dir.q) * d.p)
            return false;
    }
    return true;
}

}  // namespace tg
