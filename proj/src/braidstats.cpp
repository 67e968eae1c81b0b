#include "twobridge/braidstats.hpp"

#include <stdexcept>

namespace twobridge {

namespace {

struct Sums {
    Integer t;
    Integer excess_total;     // sum over all (n_ij - 1)
    Integer excess_odd;       // same, odd-indexed blocks only
    Integer excess_even;
    Integer excess_alt;       // sum (-1)^(i-1) sum_j (n_ij - 1)
    Integer n_alt;            // sum (-1)^(i-1) sum_j n_ij
    Integer twist_alt;        // sum (-1)^(i-1) sum_j (2 n_ij - 1)
};

Sums sums(const MurasugiBlocks& mb)
{
    Sums s;
    s.t = mb.t();
    const auto& blocks = mb.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const bool odd_block = i % 2 == 0;
        for (const auto& n : blocks[i]) {
            const Integer excess = n - 1;
            s.excess_total += excess;
            (odd_block ? s.excess_odd : s.excess_even) += excess;
            if (odd_block) {
                s.excess_alt += excess;
                s.n_alt += n;
                s.twist_alt += 2 * n - 1;
            } else {
                s.excess_alt -= excess;
                s.n_alt -= n;
                s.twist_alt -= 2 * n - 1;
            }
        }
    }
    return s;
}

Integer odd_t_term(const Integer& t) { return is_odd(t) ? 1 : 0; }  // (1 - (-1)^t) / 2
Integer ceil_half(const Integer& t) { return (t + 1) / 2; }
Integer floor_half(const Integer& t) { return t / 2; }

}  // namespace

BraidIndexExponent braid_index_exponent(const MurasugiBlocks& mb)
{
    const Sums s = sums(mb);
    return {s.t + 1 + s.excess_total, odd_t_term(s.t) + s.n_alt};
}

DiagramStats closed_form_stats(const MurasugiBlocks& mb)
{
    const Sums s = sums(mb);
    DiagramStats st;
    st.s = s.t + 1 + 2 * s.excess_total;
    st.w = odd_t_term(s.t) + s.twist_alt;
    st.d_plus = ceil_half(s.t) + 2 * s.excess_odd;
    st.d_minus = floor_half(s.t) + 2 * s.excess_even;
    st.reduced = true;
    st.tree_choice_independent = true;
    return st;
}

RPlusMinus r_pm(const DiagramStats& stats, const Integer& b, const Integer& e)
{
    const Integer sum = stats.s - b;
    const Integer diff = stats.w - e;
    if (is_odd(sum + diff))
        throw std::logic_error("r_pm: s - b = " + sum.str() + " and w - e = " + diff.str() + " differ in parity");
    return {(sum + diff) / 2, (sum - diff) / 2};
}

BraidStats braid_stats(const MurasugiBlocks& mb)
{
    const auto be = braid_index_exponent(mb);
    const auto ds = closed_form_stats(mb);
    const auto r = r_pm(ds, be.b, be.e);
    return BraidStats{Integer(mb.t()), be.b, be.e, ds.s, ds.w, ds.d_plus, ds.d_minus, r.r_plus, r.r_minus};
}

InequalityReport check_inequalities(const MurasugiBlocks& mb)
{
    InequalityReport rep;
    rep.stats = braid_stats(mb);
    const BraidStats& st = rep.stats;
    std::string why;
    if (st.r_plus < 0 || st.r_minus < 0) why += "negative r; ";
    if (2 * st.r_plus > st.d_plus) why += "2r+ > d+; ";
    if (2 * st.r_minus > st.d_minus) why += "2r- > d-; ";
    if (2 * st.r_plus != st.d_plus - ceil_half(st.t)) why += "2r+ != d+ - ceil(t/2); ";
    if (2 * st.r_minus != st.d_minus - floor_half(st.t)) why += "2r- != d- - floor(t/2); ";
    rep.holds = why.empty();
    if (!rep.holds)
        rep.failure = why + "t=" + st.t.str() + " d+=" + st.d_plus.str() + " d-=" + st.d_minus.str() +
                      " r+=" + st.r_plus.str() + " r-=" + st.r_minus.str();
    return rep;
}

BraidStats mirror_stats(const BraidStats& st)
{
    return BraidStats{st.t, st.b, -st.e, st.s, -st.w, st.d_minus, st.d_plus, st.r_minus, st.r_plus};
}

TypedStats stats_for(const Rational& r)
{
    TypedStats out;
    if (is_odd(r.q())) {
        const auto rep = check_inequalities(murasugi_even_cf(r));
        out.stats = rep.stats;
        out.inequalities_hold = rep.holds;
    } else {
        const auto rep = check_inequalities(murasugi_even_cf(r.complement()));
        out.stats = mirror_stats(rep.stats);
        out.mirrored = true;
        // The mirror swaps both inequalities, so they hold together.
        out.inequalities_hold = rep.holds;
    }
    return out;
}

}  // namespace twobridge
