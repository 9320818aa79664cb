#include "tg/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <thread>

#include "tg/isometry.hpp"

namespace tg {

namespace {

int thread_count(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// run fn(i) for i in [0,n) on a pool; results land by index
template <class Fn>
void parallel_for(int64_t n, int threads, Fn&& fn) {
    const int nt = std::min<int64_t>(thread_count(threads), n);
    if (nt <= 1) {
        for (int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const int64_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

struct Enumerator {
    int n;
    Word w;
    std::array<std::array<int, 2>, 4> cnt{};  // [symbol][position parity]
    int need = 0;                             // sum over symbols of |odd - even|
    std::vector<Word>* out;

    void push(int s, int pos) {
        int& c = cnt[s][pos % 2];
        const int other = cnt[s][(pos + 1) % 2];
        need -= std::abs(c - other);
        ++c;
        need += std::abs(c - other);
        w.push_back(static_cast<uint8_t>(s));
    }
    void pop(int pos) {
        const int s = w.back();
        w.pop_back();
        int& c = cnt[s][pos % 2];
        const int other = cnt[s][(pos + 1) % 2];
        need -= std::abs(c - other);
        --c;
        need += std::abs(c - other);
    }
    void rec(int pos) {
        if (pos == n) {
            if (w.front() != w.back() && need == 0 && word_canonical(w) == w)
                out->push_back(w);
            return;
        }
        for (int s = 1; s <= 3; ++s) {
            if (s == w.back()) continue;
            push(s, pos);
            if (need <= n - pos - 1) rec(pos + 1);
            pop(pos);
        }
    }
};

}  // namespace

std::vector<Word> enumerate_stable(int n, int threads) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("enumerate_stable: length must be even, >= 2");
    // orbit-least words start with "12"
    std::vector<Word> out;
    const int split_depth = std::min(n, 12);
    // enumerate feasible prefixes of split_depth serially, finish subtrees in parallel
    std::vector<Word> prefixes;
    {
        Enumerator e{n, {}, {}, 0, nullptr};
        e.push(1, 0);
        e.push(2, 1);
        struct Rec {
            Enumerator& e;
            int depth;
            std::vector<Word>& sink;
            void go(int pos) {
                if (pos == depth) {
                    sink.push_back(e.w);
                    return;
                }
                for (int s = 1; s <= 3; ++s) {
                    if (s == e.w.back()) continue;
                    e.push(s, pos);
                    if (e.need <= e.n - pos - 1) go(pos + 1);
                    e.pop(pos);
                }
            }
        };
        if (n == 2) {
            prefixes.push_back(e.w);
        } else {
            Rec r{e, split_depth, prefixes};
            r.go(2);
        }
    }
    if (split_depth == n) {
        // prefixes are complete words; filter
        for (const Word& w : prefixes) {
            if (w.front() == w.back() || !is_stable(w)) continue;
            if (word_canonical(w) == w) out.push_back(w);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<std::vector<Word>> buckets(prefixes.size());
    parallel_for(static_cast<int64_t>(prefixes.size()), threads, [&](int64_t i) {
        Enumerator e{n, {}, {}, 0, &buckets[i]};
        for (size_t pos = 0; pos < prefixes[i].size(); ++pos)
            e.push(prefixes[i][pos], static_cast<int>(pos));
        e.rec(split_depth);
    });
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    return out;  // DFS over sorted prefixes emits sorted words
}

namespace {

struct SerKeyEntry {
    Index2 k;
    bool neg;
    int64_t mag;
    auto operator<=>(const SerKeyEntry&) const = default;
};

std::vector<SerKeyEntry> ser_key(const LatticeMap& m) {
    std::vector<SerKeyEntry> v;
    v.reserve(m.size());
    for (auto& [k, c] : m.entries()) v.push_back({k, c < 0, c < 0 ? -c : c});
    return v;
}

LatticeMap translate_to_origin(const LatticeMap& m) {
    const Index2 mn = m.lex_min();
    return m.shifted(-mn.p, -mn.q);
}

// canonical over {id, involution} x {+,-} x translations applied to a map
void fold_variants(const LatticeMap& tc, LatticeMap& best, bool& have) {
    for (int invol = 0; invol < 2; ++invol) {
        LatticeMap base;
        if (invol) {
            for (auto& [k, c] : tc.entries()) base.add(Index2{-k.p, -k.q}, c);
        } else {
            base = tc;
        }
        for (int neg = 0; neg < 2; ++neg) {
            LatticeMap cand = translate_to_origin(neg ? base.negated() : base);
            if (!have || ser_key(cand) < ser_key(best)) {
                best = std::move(cand);
                have = true;
            }
        }
    }
}

struct PermAction {
    std::array<std::array<int, 2>, 2> lin;  // image of basis shifts
    Index2 off;
    int64_t sign;
};

// derive the coordinate action of each index relabeling by evaluating it
// on explicit conjugates of t1
const std::array<PermAction, 6>& perm_actions() {
    static const std::array<PermAction, 6> acts = [] {
        constexpr std::array<std::array<uint8_t, 4>, 6> perms = {{{0, 1, 2, 3},
                                                                  {0, 1, 3, 2},
                                                                  {0, 2, 1, 3},
                                                                  {0, 2, 3, 1},
                                                                  {0, 3, 1, 2},
                                                                  {0, 3, 2, 1}}};
        auto word_of_index = [](int n, int m) {
            Word c;
            for (int k = 0; k < std::abs(n); ++k) {
                c.push_back(n > 0 ? 1 : 2);
                c.push_back(n > 0 ? 2 : 1);
            }
            for (int k = 0; k < std::abs(m); ++k) {
                c.push_back(m > 0 ? 1 : 3);
                c.push_back(m > 0 ? 3 : 1);
            }
            Word w(c.rbegin(), c.rend());
            const Word t1 = parse_word("123123");
            w.insert(w.end(), t1.begin(), t1.end());
            w.insert(w.end(), c.begin(), c.end());
            return w;
        };
        auto single = [&](const std::array<uint8_t, 4>& p, int n, int m, Index2& k, int64_t& c) {
            Word w = word_of_index(n, m);
            for (uint8_t& s : w) s = p[s];
            const LatticeMap tc = t_coordinates(from_word(w));
            k = tc.entries().begin()->first;
            c = tc.entries().begin()->second;
        };
        std::array<PermAction, 6> out{};
        for (size_t pi = 0; pi < perms.size(); ++pi) {
            Index2 k00, k10, k01;
            int64_t c00, c10, c01;
            single(perms[pi], 0, 0, k00, c00);
            single(perms[pi], 1, 0, k10, c10);
            single(perms[pi], 0, 1, k01, c01);
            out[pi].off = k00;
            out[pi].lin = {{{k10.p - k00.p, k10.q - k00.q}, {k01.p - k00.p, k01.q - k00.q}}};
            out[pi].sign = c00;
        }
        return out;
    }();
    return acts;
}

}  // namespace

LatticeMap t_class_canonical(const LatticeMap& tcoords) {
    if (tcoords.empty()) return {};
    LatticeMap best;
    bool have = false;
    fold_variants(tcoords, best, have);
    return best;
}

LatticeMap t_class_canonical_sym(const LatticeMap& tcoords) {
    if (tcoords.empty()) return {};
    LatticeMap best;
    bool have = false;
    for (const PermAction& a : perm_actions()) {
        LatticeMap img;
        for (auto& [k, c] : tcoords.entries())
            img.add(Index2{a.lin[0][0] * k.p + a.lin[1][0] * k.q + a.off.p,
                           a.lin[0][1] * k.p + a.lin[1][1] * k.q + a.off.q},
                    checked_mul(a.sign, c));
        fold_variants(img, best, have);
    }
    return best;
}

CensusResult census(const CensusOptions& opt) {
    CensusResult res;
    res.max_len = opt.max_len;

    // stage 2: cross-length dedup by conjugation/inversion of coordinates
    std::map<LatticeMap, ClassEntry> level1;  // spec-canonical tc -> entry
    for (int n = 6; n <= opt.max_len; n += 2) {
        const std::vector<Word> reps = enumerate_stable(n, opt.threads);
        res.stage1[n] = static_cast<int64_t>(reps.size());
        if (opt.progress)
            std::fprintf(stderr, "length %d: %zu stage-1 classes\n", n, reps.size());
        std::vector<LatticeMap> tcs(reps.size());
        parallel_for(static_cast<int64_t>(reps.size()), opt.threads,
                     [&](int64_t i) { tcs[i] = t_coordinates(from_word(reps[i])); });
        for (size_t i = 0; i < reps.size(); ++i) {
            if (tcs[i].empty()) {
                // generic relations (identity translations) are counted per
                // word class; element-level merging would collapse them all
                res.generic[n] += 1;
                res.table[{n, 0}] += 1;
                continue;
            }
            LatticeMap key = t_class_canonical(tcs[i]);
            auto [it, fresh] = level1.try_emplace(std::move(key));
            if (fresh) {
                it->second.rep = reps[i];
                it->second.r_length = n;
                it->second.tcoords = it->first;
                it->second.t_length = tcs[i].mass();
                it->second.members = 1;
            }
        }
    }

    // stage 3: within each length, group up to index relabeling
    std::map<std::pair<int, LatticeMap>, ClassEntry> bylen;
    for (auto& [key, e] : level1) {
        LatticeMap sym = t_class_canonical_sym(e.tcoords);
        auto [it, fresh] = bylen.try_emplace({e.r_length, std::move(sym)});
        if (fresh) {
            it->second = e;
        } else {
            ++it->second.members;
            if (e.rep < it->second.rep) {
                it->second.rep = e.rep;
                it->second.tcoords = e.tcoords;
            }
        }
    }
    for (auto& [k, e] : bylen) {
        res.table[{e.r_length, e.t_length}] += 1;
        res.classes.push_back(e);
    }
    std::sort(res.classes.begin(), res.classes.end(), [](const ClassEntry& a, const ClassEntry& b) {
        return a.r_length < b.r_length || (a.r_length == b.r_length && a.rep < b.rep);
    });

    if (opt.classify) {
        if (opt.progress)
            std::fprintf(stderr, "classifying %zu classes\n", res.classes.size());
        SolverOptions sopt = opt.solver;
        sopt.threads = 1;  // parallelism lives at the class level here
        parallel_for(static_cast<int64_t>(res.classes.size()), opt.threads, [&](int64_t i) {
            ClassEntry& e = res.classes[i];
            e.cls = classify_expsum(expsum_of(e.tcoords), sopt);
            e.kind = e.cls.kind;
        });
        for (const ClassEntry& e : res.classes)
            for (const std::string& fl : e.cls.zeros.flags)
                if (fl == "ambiguous-component" || fl == "univariate-after-strip")
                    res.flags.push_back(format_word(e.rep) + ": " + fl);
    }
    return res;
}

std::vector<ClassEntry> find_nongeneric_candidates(const CensusOptions& opt) {
    CensusOptions o = opt;
    o.classify = true;
    CensusResult res = census(o);
    std::vector<ClassEntry> out;
    for (ClassEntry& e : res.classes)
        if (e.kind == ClassKind::Curve || e.kind == ClassKind::Isolated)
            out.push_back(std::move(e));
    return out;  // census order is already (r_length, rep)
}

}  // namespace tg
