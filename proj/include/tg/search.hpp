// search.hpp -- enumeration of cyclically reduced stable words, the
// multi-stage class deduplication, census tables and non-generic
// relation candidates
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tg/lattice.hpp"
#include "tg/solver.hpp"
#include "tg/word.hpp"

namespace tg {

// Stage-1 representatives: the cyclically reduced stable words of length
// n that are lexicographically least in their orbit under cyclic
// rotation x index permutation x reversal; sorted. n must be even.
std::vector<Word> enumerate_stable(int n, int threads = 0);

// Canonical representative of a C(t1)-coordinate vector under all index
// translations, the index involution (conjugation by reflections) and
// global negation (inversion).
LatticeMap t_class_canonical(const LatticeMap& tcoords);

// Same, additionally quotiented by the six index-relabeling actions
// (used for the within-length class grouping).
LatticeMap t_class_canonical_sym(const LatticeMap& tcoords);

struct CensusOptions {
    int max_len = 18;
    int threads = 0;
    SolverOptions solver{.grid = 256, .tol = 1e-9};
    bool classify = true;   // run the zero-set classification of each class
    bool progress = false;  // per-length progress lines on stderr
};

struct ClassEntry {
    Word rep;              // lexicographically first stage-1 rep of the group
    int r_length = 0;      // minimal word length
    LatticeMap tcoords;    // spec-canonical coordinate vector
    int64_t t_length = 0;  // sum of |coefficients|
    int members = 0;       // stage-1 classes merged into this entry
    ClassKind kind = ClassKind::ZeroFree;
    Classification cls;    // zero-set details when classified
};

struct CensusResult {
    int max_len = 0;
    std::map<int, int64_t> stage1;                          // length -> stage-1 classes
    std::map<std::pair<int, int64_t>, int64_t> table;       // (r_len, t_len) -> classes
    std::vector<ClassEntry> classes;                        // nonzero classes, deterministic order
    std::map<int, int64_t> generic;                         // length -> zero-coordinate classes
    std::vector<std::string> flags;
};

// Full pipeline: enumerate, dedup across lengths by conjugation and
// inversion of the coordinate vectors, group within each length up to
// index relabeling, and classify each class's zero set.
CensusResult census(const CensusOptions& opt);

// Classes whose zero set reaches typical triangles: curve classes plus
// isolated-zero classes with at least one typical-looking zero. Ordered
// by (r_length, canonical coordinates).
std::vector<ClassEntry> find_nongeneric_candidates(const CensusOptions& opt);

}  // namespace tg
