// presentations.hpp -- relator families for S_tau, G_tau and H_tau, the
// Reidemeister-Schreier transcription onto the translation subgroup, and
// the Sigma3 minimality-witness check
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tg/lattice.hpp"
#include "tg/metabelian.hpp"

namespace tg {

// Letter of a free word over a doubly-indexed alphabet. x/y generators
// use label (i,0); b/d generators carry the full (i,j).
struct GenLetter {
    int i = 0, j = 0;
    int exp = 1;
    bool operator==(const GenLetter&) const = default;
};
using GenWord = std::vector<GenLetter>;

GenWord gw_reduce(const GenWord& w);
GenWord gw_inverse(const GenWord& w);
GenWord gw_power(GenLetter g, int n);
// (u)g = g^-1 u g, reduced
GenWord gw_conj(const GenWord& u, const GenWord& g);
// [u,v] = u^-1 v^-1 u v, reduced
GenWord gw_comm(const GenWord& u, const GenWord& v);

// A named relator over a declared generator alphabet; commutators and
// conjugations are already flattened to plain words.
struct Relator {
    enum class Alphabet : uint8_t { X, Y } alphabet;
    GenWord word;
    std::string name;
};

// S_tau = <x1,x2,x3 | x1^2, x2^2, x3^2, (x1x2x3)^2>.
std::vector<Relator> relators_S();

// G_tau, infinite family: involutions plus [w,(w)(x1x2)^n(x1x3)^m] with
// w = (x1x2x3)^2 and (n,m) != (0,0), |n|,|m| <= window.
std::vector<Relator> relators_G(int window);

// H_tau minimal: [[y2,y3],([y2,y3])y2^n y3^m] for lex-positive (n,m)
// within the window (lex-positive: n > 0, or n = 0 and m > 0).
std::vector<Relator> relators_H_min(int window);

// G_tau minimal: involutions plus [v,(v)(x2x1)^n(x1x3)^m] with
// v = [x2x1,x1x3] and lex-positive (n,m) within the window.
std::vector<Relator> relators_G_min(int window);

struct VerifyReport {
    std::string presentation;
    int window = 0;
    int checked = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

// Evaluates every relator in the faithful symbolic model: x-relators as
// isometries (x_i -> r_i), y-relators through the metabelian normal
// form. With linear_only, only the linearization is checked (the S_tau
// model). Every relator must come out the identity.
VerifyReport verify_relators(const std::vector<Relator>& rs, bool linear_only = false,
                             const std::string& presentation = "", int window = 0);

// convenience dispatcher for the CLI suites: "s", "g", "h", "gmin"
VerifyReport verify_suite(const std::string& suite, int window);

// --- Reidemeister-Schreier transcription ------------------------------
// Subgroup T_tau of H_tau, transversal {y2^i y3^j}; generators
// b_{i,j} = y2^i y3^j y2 y3^-j y2^-(i+1) with b_{i,0} = 1, then
// d_{i,j} = b_{-i,-j} b_{-i,-j+1}^-1.

// ([y2,y3]) y3^l y2^k as a b-word: b_{-k,-l} b_{-k,-l+1}^-1 (trivial
// b_{.,0} factors dropped).
GenWord rs_conj_t1(int k, int l);

// Rewrites a y-word with zero net exponents into b-generators.
GenWord rs_rewrite_b(const GenWord& yword);

// b -> d substitution, freely reduced.
GenWord rs_b_to_d(const GenWord& bword);

// Relation e_{n,m,k,l} = [d_{k,l}, (d_{n+k,m+l}) u_{n,m,k,l}] over the
// d-generators, built from the closed transcription formulas.
GenWord rs_relation_e(int n, int m, int k, int l);

// Same relation through the generic route: straight-line free-group
// expansion of the defining commutator, RS rewriting, b -> d.
GenWord rs_relation_e_expanded(int n, int m, int k, int l);

// Companion family induced by the G_tau-minimal presentation (the primed
// relations); generic transcription only.
GenWord rs_relation_e_primed(int n, int m, int k, int l);

// d-word mapped back to a y-word (substituting the b-definitions).
YWord d_word_to_yword(const GenWord& dword);

struct MinimalityReport {
    int n0 = 0, m0 = 0, window = 0;
    bool include_g_family = false;
    int checked = 0;
    bool omitted_nonidentity = false;
    std::vector<std::string> retained_failures;
    bool pass() const { return omitted_nonidentity && retained_failures.empty(); }
};

// Minimality witness: send d_{0,0} -> (1 2), d_{n0,m0} -> (2 3),
// every other d to the identity of Sigma3; every retained relation
// e_{n,m,k,l} with (n,m) != (n0,m0) or (k,l) != (0,0) must map to the
// identity while e_{n0,m0,0,0} must not. All indices bounded by window.
MinimalityReport minimality_witness(int n0, int m0, int window, bool include_g_family = false);

}  // namespace tg
