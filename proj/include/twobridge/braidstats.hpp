#pragma once

// Closed forms for the braid index b, the exponent sum e of a minimal
// braid, and the Seifert statistics of the Murasugi diagram, all as
// functions of the block data n_{i,j} of the signed even expansion of
// p/(p-q). r+ and r- solve
//     r+ + r- = s - b,    r+ - r- = w - e.

#include <string>

#include "twobridge/classify.hpp"
#include "twobridge/contfrac.hpp"
#include "twobridge/diagram.hpp"

namespace twobridge {

struct BraidIndexExponent {
    Integer b;
    Integer e;
};

struct RPlusMinus {
    Integer r_plus;
    Integer r_minus;

    friend bool operator==(const RPlusMinus&, const RPlusMinus&) = default;
};

struct BraidStats {
    Integer t;
    Integer b;
    Integer e;
    Integer s;
    Integer w;
    Integer d_plus;
    Integer d_minus;
    Integer r_plus;
    Integer r_minus;

    friend bool operator==(const BraidStats&, const BraidStats&) = default;
};

/// b = t + 1 + sum (n_ij - 1),  e = (1 - (-1)^t)/2 + sum_i (-1)^(i-1) sum_j n_ij.
BraidIndexExponent braid_index_exponent(const MurasugiBlocks& mb);

/// s, w of the Murasugi diagram and the sign counts d+, d- of a spanning
/// tree of its Seifert graph. The diagram is always reduced.
DiagramStats closed_form_stats(const MurasugiBlocks& mb);

/// Throws std::logic_error when s - b and w - e differ in parity.
RPlusMinus r_pm(const DiagramStats& stats, const Integer& b, const Integer& e);

BraidStats braid_stats(const MurasugiBlocks& mb);

struct InequalityReport {
    bool holds = false;
    BraidStats stats;
    std::string failure;  // empty when holds
};

/// Checks 2r+ <= d+ and 2r- <= d-, and the exact residues
/// 2r+ = d+ - ceil(t/2), 2r- = d- - floor(t/2).
InequalityReport check_inequalities(const MurasugiBlocks& mb);

/// Mirror image: d+ <-> d-, r+ <-> r-, w -> -w, e -> -e; s, b, t unchanged.
BraidStats mirror_stats(const BraidStats& st);

/// Stats for the rational link of type (p, q). For even q the data of
/// (p, p-q) is computed and mirrored.
struct TypedStats {
    BraidStats stats;
    bool mirrored = false;
    bool inequalities_hold = false;
};
TypedStats stats_for(const Rational& r);

}  // namespace twobridge
