#include "tg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <thread>

namespace tg {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Eval {
    const ExpSum& f;
    std::complex<double> operator()(double a2, double a3) const { return expsum_eval(f, a2, a3); }
    // gradient of (Re f, Im f)
    void jac(double a2, double a3, double J[2][2]) const {
        J[0][0] = J[0][1] = J[1][0] = J[1][1] = 0;
        for (auto& [k, v] : f.freq.entries()) {
            const double th = k.p * a2 + k.q * a3;
            const double c = std::cos(th), s = std::sin(th);
            J[0][0] += -v * k.p * s;
            J[0][1] += -v * k.q * s;
            J[1][0] += v * k.p * c;
            J[1][1] += v * k.q * c;
        }
    }
};

// scalar field marched by the contour pass: the factored real form when
// available, Re f otherwise
struct Scalar {
    const ExpSum* f;
    const RealForm* g;
    double operator()(double a2, double a3) const {
        return g ? real_form_eval(*g, a2, a3) : expsum_eval(*f, a2, a3).real();
    }
    void grad(double a2, double a3, double out[2]) const {
        out[0] = out[1] = 0;
        if (g) {
            for (auto& [w, c] : g->cosine_terms) {
                const double s = std::sin(w.p * a2 + w.q * a3);
                out[0] += -c * w.p * s;
                out[1] += -c * w.q * s;
            }
        } else {
            for (auto& [k, v] : f->freq.entries()) {
                const double s = std::sin(k.p * a2 + k.q * a3);
                out[0] += -v * k.p * s;
                out[1] += -v * k.q * s;
            }
        }
    }
};

// move a sample onto the scalar zero level along the gradient
bool refine_on_scalar(const Scalar& S, double& x, double& y) {
    for (int it = 0; it < 40; ++it) {
        const double v = S(x, y);
        double gr[2];
        S.grad(x, y, gr);
        const double n2 = gr[0] * gr[0] + gr[1] * gr[1];
        if (n2 == 0) return false;
        const double step = -v / n2;
        x += step * gr[0];
        y += step * gr[1];
        if (std::abs(step) * (std::abs(gr[0]) + std::abs(gr[1])) < 1e-15) return true;
    }
    return true;
}

// full 2-D Newton on (Re f, Im f)
bool newton_point(const Eval& E, double& x, double& y, int cap, double tol) {
    for (int it = 0; it < cap; ++it) {
        const std::complex<double> fv = E(x, y);
        double J[2][2];
        E.jac(x, y, J);
        const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
        if (std::abs(det) < 1e-14) return false;
        const double dx = (-fv.real() * J[1][1] + fv.imag() * J[0][1]) / det;
        const double dy = (-J[0][0] * fv.imag() + J[1][0] * fv.real()) / det;
        x += dx;
        y += dy;
        if (std::abs(dx) + std::abs(dy) < 1e-14) return std::abs(E(x, y)) <= tol;
    }
    return false;
}

struct Segment {
    double x0, y0, x1, y1;
};

// marching-squares segments of one scalar field over the masked grid
struct March {
    int grid;
    double eps;
    std::vector<double> xs;
    std::vector<double> val;  // (grid+1)^2, row-major [i*(grid+1)+j]
    std::vector<uint8_t> dommask;

    template <class F>
    March(int g, double e, F&& fn, int threads) : grid(g), eps(e) {
        xs.resize(g + 1);
        for (int i = 0; i <= g; ++i)
            xs[i] = e + (kPi - 2 * e) * static_cast<double>(i) / g;
        val.resize(static_cast<size_t>(g + 1) * (g + 1));
        dommask.resize(val.size());
        const int nt = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
        auto rows = [&](int lo, int hi) {
            for (int i = lo; i < hi; ++i)
                for (int j = 0; j <= grid; ++j) {
                    const size_t id = static_cast<size_t>(i) * (grid + 1) + j;
                    dommask[id] = xs[i] + xs[j] < kPi - e;
                    val[id] = dommask[id] ? fn(xs[i], xs[j]) : 0.0;
                }
        };
        if (nt <= 1) {
            rows(0, g + 1);
        } else {
            std::vector<std::thread> ts;
            const int chunk = (g + 1 + nt - 1) / nt;
            for (int t = 0; t < nt; ++t)
                ts.emplace_back(rows, std::min(t * chunk, g + 1), std::min((t + 1) * chunk, g + 1));
            for (auto& t : ts) t.join();
        }
    }

    double at(int i, int j) const { return val[static_cast<size_t>(i) * (grid + 1) + j]; }
    bool dom(int i, int j) const { return dommask[static_cast<size_t>(i) * (grid + 1) + j]; }
    bool cell_in_domain(int i, int j) const {
        return dom(i, j) && dom(i + 1, j) && dom(i, j + 1) && dom(i + 1, j + 1);
    }
    bool cell_crossing(int i, int j) const {
        const double a = at(i, j), b = at(i + 1, j), c = at(i + 1, j + 1), d = at(i, j + 1);
        const double mn = std::min(std::min(a, b), std::min(c, d));
        const double mx = std::max(std::max(a, b), std::max(c, d));
        return mn < 0 && 0 < mx;
    }
};

// chained contour polylines from marching squares (linear interpolation,
// saddle cells resolved by the center average)
std::vector<std::vector<std::pair<double, double>>> contour_polylines(const March& M) {
    struct Key {
        int64_t a, b;
        bool operator<(const Key& o) const { return a < o.a || (a == o.a && b < o.b); }
        bool operator==(const Key& o) const { return a == o.a && b == o.b; }
    };
    auto kof = [&](double x, double y) {
        return Key{static_cast<int64_t>(std::llround(x * 1e7)), static_cast<int64_t>(std::llround(y * 1e7))};
    };
    std::vector<Segment> segs;
    auto interp = [&](double xa, double ya, double va, double xb, double yb, double vb,
                      double& x, double& y) {
        const double t = va / (va - vb);
        x = xa + t * (xb - xa);
        y = ya + t * (yb - ya);
    };
    for (int i = 0; i < M.grid; ++i)
        for (int j = 0; j < M.grid; ++j) {
            if (!M.cell_in_domain(i, j)) continue;
            const double v00 = M.at(i, j), v10 = M.at(i + 1, j);
            const double v11 = M.at(i + 1, j + 1), v01 = M.at(i, j + 1);
            int code = (v00 > 0) | ((v10 > 0) << 1) | ((v11 > 0) << 2) | ((v01 > 0) << 3);
            if (code == 0 || code == 15) continue;
            const double x0 = M.xs[i], x1 = M.xs[i + 1], y0 = M.xs[j], y1 = M.xs[j + 1];
            double ex[4], ey[4];
            bool has[4] = {false, false, false, false};
            if ((v00 > 0) != (v10 > 0)) { interp(x0, y0, v00, x1, y0, v10, ex[0], ey[0]); has[0] = true; }
            if ((v10 > 0) != (v11 > 0)) { interp(x1, y0, v10, x1, y1, v11, ex[1], ey[1]); has[1] = true; }
            if ((v01 > 0) != (v11 > 0)) { interp(x0, y1, v01, x1, y1, v11, ex[2], ey[2]); has[2] = true; }
            if ((v00 > 0) != (v01 > 0)) { interp(x0, y0, v00, x0, y1, v01, ex[3], ey[3]); has[3] = true; }
            int idx[4], cnt = 0;
            for (int e = 0; e < 4; ++e)
                if (has[e]) idx[cnt++] = e;
            if (cnt == 2) {
                segs.push_back({ex[idx[0]], ey[idx[0]], ex[idx[1]], ey[idx[1]]});
            } else if (cnt == 4) {
                const double center = (v00 + v10 + v11 + v01) / 4;
                if ((center > 0) == (v00 > 0)) {
                    segs.push_back({ex[0], ey[0], ex[1], ey[1]});
                    segs.push_back({ex[2], ey[2], ex[3], ey[3]});
                } else {
                    segs.push_back({ex[0], ey[0], ex[3], ey[3]});
                    segs.push_back({ex[1], ey[1], ex[2], ey[2]});
                }
            }
        }
    // chain by shared endpoints
    std::map<Key, std::vector<int>> ends;
    for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
        ends[kof(segs[s].x0, segs[s].y0)].push_back(s);
        ends[kof(segs[s].x1, segs[s].y1)].push_back(s);
    }
    std::vector<bool> used(segs.size(), false);
    std::vector<std::vector<std::pair<double, double>>> polys;
    for (int s0 = 0; s0 < static_cast<int>(segs.size()); ++s0) {
        if (used[s0]) continue;
        std::vector<std::pair<double, double>> line{{segs[s0].x0, segs[s0].y0},
                                                    {segs[s0].x1, segs[s0].y1}};
        used[s0] = true;
        for (int dir = 0; dir < 2; ++dir) {
            bool grown = true;
            while (grown) {
                grown = false;
                const auto& tip = dir == 0 ? line.back() : line.front();
                auto it = ends.find(kof(tip.first, tip.second));
                if (it == ends.end()) break;
                for (int s : it->second) {
                    if (used[s]) continue;
                    const Key kt = kof(tip.first, tip.second);
                    std::pair<double, double> nxt;
                    if (kof(segs[s].x0, segs[s].y0) == kt) nxt = {segs[s].x1, segs[s].y1};
                    else if (kof(segs[s].x1, segs[s].y1) == kt) nxt = {segs[s].x0, segs[s].y0};
                    else continue;
                    used[s] = true;
                    if (dir == 0) line.push_back(nxt);
                    else line.insert(line.begin(), nxt);
                    grown = true;
                    break;
                }
            }
        }
        polys.push_back(std::move(line));
    }
    // deterministic order: by first vertex
    std::sort(polys.begin(), polys.end());
    return polys;
}

bool in_domain(double x, double y, double eps) {
    return x > eps && y > eps && x + y < kPi - eps;
}

}  // namespace

ZeroSet zero_set(const ExpSum& f0, const SolverOptions& opt) {
    ZeroSet out;
    ExpSum f = strip_line_factors(f0, out.lines);
    if (f.monomial()) {
        if (!out.lines.empty()) out.flags.push_back("rational-lines-only");
        return out;
    }
    if (collinear_support(f)) out.flags.push_back("univariate-after-strip");

    const auto rf = real_form(f);
    const Scalar S{&f, rf ? &*rf : nullptr};
    const Eval Eh{f};

    March M(opt.grid, opt.inset, [&](double x, double y) { return S(x, y); }, opt.threads);
    auto polys = contour_polylines(M);

    const double h = (kPi - 2 * opt.inset) / opt.grid;
    for (auto& poly : polys) {
        if (poly.size() < 2) continue;
        // refine a bounded set of samples along the polyline
        const int maxs = 200;
        const int stride = std::max<size_t>(1, poly.size() / maxs);
        std::vector<ZeroPoint> samples;
        std::vector<bool> iszero;
        int zeros = 0;
        for (size_t v = 0; v < poly.size(); v += stride) {
            double x = poly[v].first, y = poly[v].second;
            refine_on_scalar(S, x, y);
            const double r = std::abs(expsum_eval(f0, x, y));
            samples.push_back({x, y, r});
            const bool z = r <= opt.tol && in_domain(x, y, opt.inset / 2);
            iszero.push_back(z);
            zeros += z;
        }
        const double frac = samples.empty() ? 0.0 : static_cast<double>(zeros) / samples.size();
        if (frac >= opt.curve_fraction) {
            out.curves.push_back({std::move(samples), frac, false});
        } else if (frac > 0.05 && static_cast<int>(samples.size()) >= opt.min_split_run) {
            // a genuine zero curve may share a component with a spurious
            // branch through a crossing; keep the long all-zero runs
            std::vector<ZeroPoint> cur;
            bool any = false;
            for (size_t v = 0; v < samples.size(); ++v) {
                if (iszero[v]) {
                    cur.push_back(samples[v]);
                } else {
                    if (static_cast<int>(cur.size()) >= opt.min_split_run) {
                        out.curves.push_back({cur, 1.0, true});
                        any = true;
                    }
                    cur.clear();
                }
            }
            if (static_cast<int>(cur.size()) >= opt.min_split_run) {
                out.curves.push_back({cur, 1.0, true});
                any = true;
            }
            out.flags.push_back(any ? "ambiguous-component-split" : "ambiguous-component");
        }
    }

    // isolated points: cells where both Re f and Im f change sign
    March MR(opt.grid, opt.inset, [&](double x, double y) { return expsum_eval(f, x, y).real(); },
             opt.threads);
    March MI(opt.grid, opt.inset, [&](double x, double y) { return expsum_eval(f, x, y).imag(); },
             opt.threads);
    auto near_curve = [&](double x, double y) {
        for (const ZeroCurve& c : out.curves)
            for (const ZeroPoint& v : c.vertices)
                if (std::abs(v.alpha2 - x) < 3 * h && std::abs(v.alpha3 - y) < 3 * h) return true;
        return false;
    };
    for (int i = 0; i < opt.grid; ++i)
        for (int j = 0; j < opt.grid; ++j) {
            if (!MR.cell_in_domain(i, j)) continue;
            if (!MR.cell_crossing(i, j) || !MI.cell_crossing(i, j)) continue;
            double x = (MR.xs[i] + MR.xs[i + 1]) / 2, y = (MR.xs[j] + MR.xs[j + 1]) / 2;
            if (near_curve(x, y)) continue;  // cells on a zero curve have no isolated point
            if (!newton_point(Eh, x, y, opt.newton_cap, opt.tol)) {
                bool dup = false;
                for (const ZeroPoint& p : out.no_convergence)
                    if (std::abs(p.alpha2 - x) < 4 * h && std::abs(p.alpha3 - y) < 4 * h) dup = true;
                if (!dup) out.no_convergence.push_back({x, y, std::abs(expsum_eval(f, x, y))});
                continue;
            }
            if (!in_domain(x, y, opt.inset)) continue;
            if (near_curve(x, y)) continue;
            bool dup = false;
            for (const ZeroPoint& p : out.points)
                if (std::abs(p.alpha2 - x) < 4 * h && std::abs(p.alpha3 - y) < 4 * h) dup = true;
            if (!dup) out.points.push_back({x, y, std::abs(expsum_eval(f0, x, y))});
        }
    std::sort(out.points.begin(), out.points.end(), [](const ZeroPoint& a, const ZeroPoint& b) {
        return a.alpha2 < b.alpha2 || (a.alpha2 == b.alpha2 && a.alpha3 < b.alpha3);
    });
    return out;
}

LocusReport verify_on_locus(const ExpSum& f, const std::vector<std::pair<double, double>>& locus,
                            double tol) {
    LocusReport rep;
    for (auto& [x, y] : locus) {
        ++rep.samples;
        const double r = std::abs(expsum_eval(f, x, y));
        rep.worst = std::max(rep.worst, r);
        if (r <= tol) ++rep.passed;
    }
    return rep;
}

std::vector<RationalRelation> rational_relations(double a2, double a3, int bound, double tol) {
    std::vector<RationalRelation> out;
    for (int n2 = -bound; n2 <= bound; ++n2)
        for (int n3 = -bound; n3 <= bound; ++n3) {
            if (n2 == 0 && n3 == 0) continue;
            const double v = n2 * a2 + n3 * a3;
            const int n0 = static_cast<int>(std::llround(v / kPi));
            if (std::abs(v - n0 * kPi) < tol) out.push_back({n2, n3, -n0});
        }
    return out;
}

Classification classify_expsum(const ExpSum& f, const SolverOptions& opt) {
    Classification c;
    c.zeros = zero_set(f, opt);
    if (!c.zeros.curves.empty()) {
        c.kind = ClassKind::Curve;
        return c;
    }
    for (const ZeroPoint& p : c.zeros.points)
        if (rational_relations(p.alpha2, p.alpha3).empty()) c.typical_points.push_back(p);
    if (!c.typical_points.empty()) c.kind = ClassKind::Isolated;
    else if (!c.zeros.points.empty()) c.kind = ClassKind::RationalPoints;
    else if (!c.zeros.lines.empty()) c.kind = ClassKind::NonTypicalOnly;
    else c.kind = ClassKind::ZeroFree;
    return c;
}

}  // namespace tg
