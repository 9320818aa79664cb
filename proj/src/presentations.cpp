#include "tg/presentations.hpp"

#include <algorithm>
#include <array>

#include "tg/isometry.hpp"

namespace tg {

GenWord gw_reduce(const GenWord& w) {
    GenWord out;
    out.reserve(w.size());
    for (const GenLetter& l : w) {
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().i == l.i && out.back().j == l.j &&
            out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

GenWord gw_inverse(const GenWord& w) {
    GenWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->i, it->j, -it->exp});
    return out;
}

GenWord gw_power(GenLetter g, int n) {
    GenWord out;
    g.exp = n >= 0 ? 1 : -1;
    for (int k = 0; k < std::abs(n); ++k) out.push_back(g);
    return out;
}

GenWord gw_conj(const GenWord& u, const GenWord& g) {
    GenWord out = gw_inverse(g);
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), g.begin(), g.end());
    return gw_reduce(out);
}

GenWord gw_comm(const GenWord& u, const GenWord& v) {
    GenWord out = gw_inverse(u);
    GenWord vi = gw_inverse(v);
    out.insert(out.end(), vi.begin(), vi.end());
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return gw_reduce(out);
}

namespace {

GenWord x_word(std::initializer_list<int> syms) {
    GenWord w;
    for (int s : syms) w.push_back({s, 0, 1});
    return w;
}

std::string nm_name(const char* base, int n, int m) {
    return std::string(base) + "[" + std::to_string(n) + "," + std::to_string(m) + "]";
}

bool lex_positive(int n, int m) { return n > 0 || (n == 0 && m > 0); }

}  // namespace

std::vector<Relator> relators_S() {
    std::vector<Relator> rs;
    rs.push_back({Relator::Alphabet::X, x_word({1, 1}), "x1^2"});
    rs.push_back({Relator::Alphabet::X, x_word({2, 2}), "x2^2"});
    rs.push_back({Relator::Alphabet::X, x_word({3, 3}), "x3^2"});
    rs.push_back({Relator::Alphabet::X, x_word({1, 2, 3, 1, 2, 3}), "(x1x2x3)^2"});
    return rs;
}

std::vector<Relator> relators_G(int window) {
    std::vector<Relator> rs;
    rs.push_back({Relator::Alphabet::X, x_word({1, 1}), "x1^2"});
    rs.push_back({Relator::Alphabet::X, x_word({2, 2}), "x2^2"});
    rs.push_back({Relator::Alphabet::X, x_word({3, 3}), "x3^2"});
    const GenWord w = x_word({1, 2, 3, 1, 2, 3});
    const GenWord x1x2 = x_word({1, 2}), x1x3 = x_word({1, 3});
    for (int n = -window; n <= window; ++n)
        for (int m = -window; m <= window; ++m) {
            if (n == 0 && m == 0) continue;
            GenWord conj;
            for (int k = 0; k < std::abs(n); ++k) {
                GenWord p = n > 0 ? x1x2 : gw_inverse(x1x2);
                conj.insert(conj.end(), p.begin(), p.end());
            }
            for (int k = 0; k < std::abs(m); ++k) {
                GenWord p = m > 0 ? x1x3 : gw_inverse(x1x3);
                conj.insert(conj.end(), p.begin(), p.end());
            }
            rs.push_back({Relator::Alphabet::X, gw_comm(w, gw_conj(w, conj)),
                          nm_name("[w,(w)(x1x2)^n(x1x3)^m]", n, m)});
        }
    return rs;
}

std::vector<Relator> relators_H_min(int window) {
    std::vector<Relator> rs;
    const GenWord y2{{2, 0, 1}}, y3{{3, 0, 1}};
    const GenWord c = gw_comm(y2, y3);
    for (int n = 0; n <= window; ++n)
        for (int m = -window; m <= window; ++m) {
            if (!lex_positive(n, m)) continue;
            GenWord conj = gw_power({2, 0, 1}, n);
            GenWord p3 = gw_power({3, 0, 1}, m);
            conj.insert(conj.end(), p3.begin(), p3.end());
            rs.push_back({Relator::Alphabet::Y, gw_comm(c, gw_conj(c, conj)),
                          nm_name("[[y2,y3],([y2,y3])y2^n y3^m]", n, m)});
        }
    return rs;
}

std::vector<Relator> relators_G_min(int window) {
    std::vector<Relator> rs;
    rs.push_back({Relator::Alphabet::X, x_word({1, 1}), "x1^2"});
    rs.push_back({Relator::Alphabet::X, x_word({2, 2}), "x2^2"});
    rs.push_back({Relator::Alphabet::X, x_word({3, 3}), "x3^2"});
    const GenWord v = gw_comm(x_word({2, 1}), x_word({1, 3}));
    const GenWord x2x1 = x_word({2, 1}), x1x3 = x_word({1, 3});
    for (int n = 0; n <= window; ++n)
        for (int m = -window; m <= window; ++m) {
            if (!lex_positive(n, m)) continue;
            GenWord conj;
            for (int k = 0; k < n; ++k) conj.insert(conj.end(), x2x1.begin(), x2x1.end());
            for (int k = 0; k < std::abs(m); ++k) {
                GenWord p = m > 0 ? x1x3 : gw_inverse(x1x3);
                conj.insert(conj.end(), p.begin(), p.end());
            }
            rs.push_back({Relator::Alphabet::X, gw_comm(v, gw_conj(v, conj)),
                          nm_name("[v,(v)(x2x1)^n(x1x3)^m]", n, m)});
        }
    return rs;
}

namespace {

// x-letters evaluate to the involutive reflections, so exponents drop
SymIsometry eval_x(const GenWord& w) {
    SymIsometry g;
    for (const GenLetter& l : w) g = compose(g, generator(l.i));
    return g;
}

YWord y_of_genword(const GenWord& w) {
    YWord y;
    for (const GenLetter& l : w)
        y.push_back({static_cast<uint8_t>(l.i), static_cast<int8_t>(l.exp)});
    return y;
}

}  // namespace

VerifyReport verify_relators(const std::vector<Relator>& rs, bool linear_only,
                             const std::string& presentation, int window) {
    VerifyReport rep;
    rep.presentation = presentation;
    rep.window = window;
    for (const Relator& r : rs) {
        ++rep.checked;
        bool ok;
        if (r.alphabet == Relator::Alphabet::X) {
            const SymIsometry g = eval_x(r.word);
            ok = linear_only ? g.lin == LinearPart{} : g.is_identity();
        } else {
            ok = normal_form(y_of_genword(r.word)).is_identity();
        }
        if (!ok) rep.failures.push_back(r.name);
    }
    return rep;
}

VerifyReport verify_suite(const std::string& suite, int window) {
    if (suite == "s") return verify_relators(relators_S(), true, "S_tau", 0);
    if (suite == "g") return verify_relators(relators_G(window), false, "G_tau", window);
    if (suite == "h") return verify_relators(relators_H_min(window), false, "H_tau_min", window);
    if (suite == "gmin")
        return verify_relators(relators_G_min(window), false, "G_tau_min", window);
    throw std::invalid_argument("unknown suite: " + suite);
}

// --- Reidemeister-Schreier ---------------------------------------------

namespace {

GenWord b_letter(int i, int j, int exp) {
    if (j == 0) return {};  // b_{i,0} = 1
    return {{i, j, exp}};
}

// transcription-side commutator orientation: [u,v] = u v u^-1 v^-1
GenWord comm_b_orient(const GenWord& u, const GenWord& v) {
    GenWord out = u;
    out.insert(out.end(), v.begin(), v.end());
    GenWord ui = gw_inverse(u), vi = gw_inverse(v);
    out.insert(out.end(), ui.begin(), ui.end());
    out.insert(out.end(), vi.begin(), vi.end());
    return gw_reduce(out);
}

const GenWord& ycomm() {  // y2 y3 y2^-1 y3^-1
    static const GenWord c = comm_b_orient(GenWord{{2, 0, 1}}, GenWord{{3, 0, 1}});
    return c;
}

GenWord y_conj_power(const GenWord& base, int n2_first, int n3, int n2_last) {
    // (base) y2^{n2_first} y3^{n3} y2^{n2_last}
    GenWord conj = gw_power({2, 0, 1}, n2_first);
    GenWord a = gw_power({3, 0, 1}, n3);
    GenWord b = gw_power({2, 0, 1}, n2_last);
    conj.insert(conj.end(), a.begin(), a.end());
    conj.insert(conj.end(), b.begin(), b.end());
    return gw_conj(base, conj);
}

// ([y2,y3]) y3^l y2^k transcribed: b_{-k,-l} b_{-k,-l+1}^-1
GenWord bword_conj_t1(int k, int l) {
    GenWord w = b_letter(-k, -l, 1);
    GenWord t = b_letter(-k, -l + 1, -1);
    w.insert(w.end(), t.begin(), t.end());
    return gw_reduce(w);
}

// general conjugate ([y2,y3]) y2^n y3^{m+l} y2^k: the same core
// conjugated by a product of b's
GenWord bword_conj_t1_full(int n, int m, int k, int l) {
    GenWord core = bword_conj_t1(n + k, m + l);
    GenWord conj;
    for (int i = 0; i < n; ++i) {
        GenWord t = b_letter(-n - k + i, -m - l, 1);
        conj.insert(conj.end(), t.begin(), t.end());
    }
    return gw_conj(core, conj);
}

}  // namespace

GenWord rs_conj_t1(int k, int l) { return bword_conj_t1(k, l); }

GenWord rs_rewrite_b(const GenWord& yword) {
    int i = 0, j = 0;
    GenWord out;
    for (const GenLetter& l : yword) {
        if (l.i == 2) {
            if (l.exp > 0) {
                GenWord t = b_letter(i, j, 1);
                out.insert(out.end(), t.begin(), t.end());
                ++i;
            } else {
                --i;
                GenWord t = b_letter(i, j, -1);
                out.insert(out.end(), t.begin(), t.end());
            }
        } else {
            j += l.exp;
        }
    }
    if (i != 0 || j != 0)
        throw std::invalid_argument("rs_rewrite_b: word has nonzero net exponents");
    return gw_reduce(out);
}

GenWord rs_b_to_d(const GenWord& bword) {
    GenWord out;
    for (const GenLetter& l : bword) {
        GenWord sub;
        if (l.j <= 0) {
            // b_{i,j} = d_{-i,-j} d_{-i,-j-1} ... d_{-i,1}
            for (int jj = -l.j; jj >= 1; --jj) sub.push_back({-l.i, jj, 1});
        } else {
            // b_{i,j} = (d_{-i,0} d_{-i,-1} ... d_{-i,-j+1})^-1
            for (int jj = -l.j + 1; jj <= 0; ++jj) sub.push_back({-l.i, jj, -1});
        }
        if (l.exp < 0) sub = gw_inverse(sub);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return gw_reduce(out);
}

GenWord rs_relation_e(int n, int m, int k, int l) {
    const GenWord a = rs_b_to_d(bword_conj_t1(k, l));
    const GenWord b = rs_b_to_d(bword_conj_t1_full(n, m, k, l));
    return gw_comm(a, b);
}

GenWord rs_relation_e_expanded(int n, int m, int k, int l) {
    const GenWord ay = y_conj_power(ycomm(), 0, l, k);
    const GenWord by = y_conj_power(ycomm(), n, m + l, k);
    return rs_b_to_d(rs_rewrite_b(gw_comm(ay, by)));
}

GenWord rs_relation_e_primed(int n, int m, int k, int l) {
    // base [y2^-1,y3^-1] = ([y2,y3]) y2 y3
    const GenWord base = gw_conj(ycomm(), gw_reduce(GenWord{{2, 0, 1}, {3, 0, 1}}));
    const GenWord ay = y_conj_power(base, 0, l, k);
    const GenWord by = y_conj_power(base, n, m + l, k);
    return rs_b_to_d(rs_rewrite_b(gw_comm(ay, by)));
}

YWord d_word_to_yword(const GenWord& dword) {
    auto bw_y = [](int i, int j) {
        // b_{i,j} = y2^i y3^j y2 y3^-j y2^-(i+1)
        GenWord w = gw_power({2, 0, 1}, i);
        GenWord t = gw_power({3, 0, 1}, j);
        w.insert(w.end(), t.begin(), t.end());
        w.push_back({2, 0, 1});
        t = gw_power({3, 0, 1}, -j);
        w.insert(w.end(), t.begin(), t.end());
        t = gw_power({2, 0, 1}, -(i + 1));
        w.insert(w.end(), t.begin(), t.end());
        return w;
    };
    GenWord out;
    for (const GenLetter& l : dword) {
        // d_{i,j} = b_{-i,-j} b_{-i,-j+1}^-1
        GenWord sub = bw_y(-l.i, -l.j);
        GenWord t = gw_inverse(bw_y(-l.i, -l.j + 1));
        sub.insert(sub.end(), t.begin(), t.end());
        if (l.exp < 0) sub = gw_inverse(sub);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    out = gw_reduce(out);
    YWord y;
    for (const GenLetter& l : out)
        y.push_back({static_cast<uint8_t>(l.i), static_cast<int8_t>(l.exp)});
    return y;
}

// --- Sigma3 witness ------------------------------------------------------

namespace {

struct Perm3 {
    std::array<uint8_t, 3> im{0, 1, 2};
    bool operator==(const Perm3&) const = default;
};
Perm3 pmul(const Perm3& a, const Perm3& b) {  // apply a, then b
    Perm3 r;
    for (int i = 0; i < 3; ++i) r.im[i] = b.im[a.im[i]];
    return r;
}
Perm3 pinv(const Perm3& a) {
    Perm3 r;
    for (int i = 0; i < 3; ++i) r.im[a.im[i]] = static_cast<uint8_t>(i);
    return r;
}
constexpr Perm3 kId{};
constexpr Perm3 kT12{{1, 0, 2}};
constexpr Perm3 kT23{{0, 2, 1}};

}  // namespace

MinimalityReport minimality_witness(int n0, int m0, int window, bool include_g_family) {
    if (!lex_positive(n0, m0)) throw std::invalid_argument("minimality_witness: (n0,m0) must be lex-positive");
    if (window < std::max(std::abs(n0), std::abs(m0)))
        throw std::invalid_argument("minimality_witness: window too small");
    MinimalityReport rep;
    rep.n0 = n0;
    rep.m0 = m0;
    rep.window = window;
    rep.include_g_family = include_g_family;

    auto image = [&](const GenWord& w) {
        Perm3 p = kId;
        for (const GenLetter& l : w) {
            Perm3 g = kId;
            if (l.i == 0 && l.j == 0) g = kT12;
            else if (l.i == n0 && l.j == m0) g = kT23;
            p = pmul(p, l.exp > 0 ? g : pinv(g));
        }
        return p;
    };

    for (int n = 0; n <= window; ++n)
        for (int m = -window; m <= window; ++m) {
            if (!lex_positive(n, m)) continue;
            for (int k = -window; k <= window; ++k)
                for (int l = -window; l <= window; ++l) {
                    ++rep.checked;
                    const Perm3 pe = image(rs_relation_e(n, m, k, l));
                    if (n == n0 && m == m0 && k == 0 && l == 0) {
                        rep.omitted_nonidentity = (!(pe == kId));
                    } else if (!(pe == kId)) {
                        rep.retained_failures.push_back(
                            "e[" + std::to_string(n) + "," + std::to_string(m) + "," +
                            std::to_string(k) + "," + std::to_string(l) + "]");
                    }
                    if (include_g_family) {
                        ++rep.checked;
                        const Perm3 pp = image(rs_relation_e_primed(n, m, k, l));
                        if (!(n == n0 && m == m0) && !(pp == kId))
                            rep.retained_failures.push_back(
                                "e'[" + std::to_string(n) + "," + std::to_string(m) + "," +
                                std::to_string(k) + "," + std::to_string(l) + "]");
                    }
                }
        }
    return rep;
}

}  // namespace tg
