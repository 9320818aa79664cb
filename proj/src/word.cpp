#include "tg/word.hpp"

#include <algorithm>
#include <array>

namespace tg {

Word parse_word(std::string_view digits) {
    Word w;
    w.reserve(digits.size());
    for (char c : digits) {
        if (c < '1' || c > '3')
            throw BadSymbol("word symbol out of {1,2,3}: '" + std::string(1, c) + "'");
        w.push_back(static_cast<uint8_t>(c - '0'));
    }
    return w;
}

std::string format_word(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (uint8_t x : w) s.push_back(static_cast<char>('0' + x));
    return s;
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (uint8_t x : w) {
        if (!out.empty() && out.back() == x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    while (r.size() >= 2 && r.front() == r.back()) {
        r.pop_back();
        r.erase(r.begin());
        r = free_reduce(r);
    }
    return r;
}

bool is_stable(const Word& w) {
    if (w.size() % 2 != 0) return false;
    int odd[4] = {0, 0, 0, 0}, even[4] = {0, 0, 0, 0};
    for (size_t i = 0; i < w.size(); ++i)
        (i % 2 == 0 ? odd : even)[w[i]]++;  // position i+1 is odd when i is even
    for (int s = 1; s <= 3; ++s)
        if (odd[s] != even[s]) return false;
    return true;
}

Word apply_move(const Word& w, const Move& m) {
    Word out = w;
    const size_t p = static_cast<size_t>(m.pos);
    if (m.kind == Move::Transpose) {
        if (m.pos < 1 || p + 3 > w.size()) throw std::out_of_range("transpose position");
        std::swap(out[p - 1], out[p + 1]);
        std::swap(out[p], out[p + 2]);
    } else {
        if (m.pos < 1 || p + 1 > w.size()) throw std::out_of_range("delete position");
        if (out[p - 1] != out[p]) throw std::invalid_argument("delete pair symbols differ");
        out.erase(out.begin() + static_cast<long>(p - 1), out.begin() + static_cast<long>(p + 1));
    }
    return out;
}

std::vector<Move> stable_reduction(const Word& w) {
    if (!is_stable(w)) throw NotStable("stable_reduction: word is not stable");
    std::vector<Move> moves;
    Word cur = w;
    while (!cur.empty()) {
        // the symbol at position 2 pairs with some odd position 2k-1
        if (cur[0] == cur[1]) {
            moves.push_back({Move::DeletePair, 1});
            cur = apply_move(cur, moves.back());
            continue;
        }
        size_t k2 = 0;  // index (0-based) of the matching odd position
        for (size_t i = 2; i < cur.size(); i += 2)
            if (cur[i] == cur[1]) {
                k2 = i;
                break;
            }
        // slide the block at (k2, k2+1) left until it sits at positions 3..4
        for (size_t b = k2; b > 2; b -= 2) {
            moves.push_back({Move::Transpose, static_cast<int>(b - 1)});
            cur = apply_move(cur, moves.back());
        }
        moves.push_back({Move::DeletePair, 2});
        cur = apply_move(cur, moves.back());
    }
    return moves;
}

bool replay_to_empty(const Word& w, const std::vector<Move>& moves) {
    Word cur = w;
    try {
        for (const Move& m : moves) cur = apply_move(cur, m);
    } catch (const std::exception&) {
        return false;
    }
    return cur.empty();
}

namespace {
constexpr std::array<std::array<uint8_t, 4>, 6> kPerms = {{
    {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1}}};
}

Word word_canonical(const Word& w) {
    if (w.empty()) return w;
    Word best;
    Word cand(w.size());
    Word img(w.size());
    for (const auto& p : kPerms) {
        for (size_t i = 0; i < w.size(); ++i) img[i] = p[w[i]];
        for (int rev = 0; rev < 2; ++rev) {
            if (rev) std::reverse(img.begin(), img.end());
            for (size_t r = 0; r < w.size(); ++r) {
                for (size_t i = 0; i < w.size(); ++i) cand[i] = img[(i + r) % w.size()];
                if (best.empty() || cand < best) best = cand;
            }
        }
    }
    return best;
}

}  // namespace tg
