#include "twobridge/classify.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace twobridge {

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Quasipositive: return "QUASIPOSITIVE";
    case Status::NonQuasipositive: return "NON_QUASIPOSITIVE";
    case Status::LinkConditionHoldsUndetermined: return "LINK_CONDITION_HOLDS_UNDETERMINED";
    }
    return "?";
}

std::string_view to_string(Reason r)
{
    switch (r) {
    case Reason::EvenCf: return "EVEN_CF";
    case Reason::OddCoeff: return "ODD_COEFF";
    case Reason::PqOdd: return "PQ_ODD";
    case Reason::LinkCaveat: return "LINK_CAVEAT";
    }
    return "?";
}

bool Classification::has_reason(Reason r) const
{
    return std::find(reasons.begin(), reasons.end(), r) != reasons.end();
}

bool is_even_cf(const NegCF& cf)
{
    return std::all_of(cf.coeffs().begin(), cf.coeffs().end(), [](const Integer& a) { return is_even(a); });
}

bool pq_odd_shortcut(const TwoBridge& tb) { return is_odd(tb.p()) && is_odd(tb.q()); }

Classification classify(const TwoBridge& tb)
{
    NegCF cf = neg_cf(tb.r());
    const bool even = is_even_cf(cf);
    const bool pq_odd = pq_odd_shortcut(tb);
    if (pq_odd && even) throw std::logic_error("classify: even expansion with pq odd for " + tb.r().str());

    Classification out{Status::NonQuasipositive, {}, false, false, std::move(cf)};
    out.reasons.push_back(even ? Reason::EvenCf : Reason::OddCoeff);
    if (pq_odd) out.reasons.push_back(Reason::PqOdd);

    if (!even) return out;
    if (tb.is_knot()) {
        out.status = Status::Quasipositive;
        out.is_positive = true;
        out.is_strongly_quasipositive = true;
    } else {
        out.status = Status::LinkConditionHoldsUndetermined;
        out.reasons.push_back(Reason::LinkCaveat);
        out.is_positive.reset();
        out.is_strongly_quasipositive.reset();
    }
    return out;
}

TwoBridge mirror(const TwoBridge& tb) { return TwoBridge(tb.r().complement()); }

Integer mod_inverse(const Integer& a, const Integer& n)
{
    if (n > 1 && n < (Integer(1) << 62) && a > -n && a < n) {
        std::int64_t old_r = static_cast<std::int64_t>(a), r = static_cast<std::int64_t>(n);
        old_r = (old_r + r) % r;
        std::int64_t old_s = 1, s = 0;
        while (r != 0) {
            const std::int64_t quot = old_r / r;
            old_r = std::exchange(r, old_r - quot * r);
            old_s = std::exchange(s, old_s - quot * s);
        }
        if (old_r != 1) throw std::invalid_argument("mod_inverse: not invertible");
        const auto nn = static_cast<std::int64_t>(n);
        return Integer((old_s % nn + nn) % nn);
    }
    Integer old_r = (a % n + n) % n, r = n;
    Integer old_s = 1, s = 0;
    while (r != 0) {
        Integer quot = old_r / r;
        Integer tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw std::invalid_argument("mod_inverse: not invertible");
    Integer inv = old_s % n;
    if (inv < 0) inv += n;
    return inv;
}

TwoBridge inverse_rep(const TwoBridge& tb)
{
    return TwoBridge(Rational(tb.p(), mod_inverse(tb.q(), tb.p())));
}

TwoBridge canonical_isotopy_rep(const TwoBridge& tb)
{
    TwoBridge inv = inverse_rep(tb);
    return inv.q() < tb.q() ? inv : tb;
}

std::optional<LiscaOMembership> in_lisca_O(const TwoBridge& tb)
{
    const Integer& p = tb.p();
    if (is_even(p)) return std::nullopt;
    Integer m = boost::multiprecision::sqrt(p);
    if (m * m != p || m <= 1) return std::nullopt;
    const Integer qp1 = tb.q() + 1;
    if (qp1 % m != 0) return std::nullopt;
    Integer h = qp1 / m;
    if (h <= 0 || h >= m || boost::multiprecision::gcd(m, h) != 1) return std::nullopt;
    return LiscaOMembership{std::move(m), std::move(h)};
}

bool complement_regular_criterion(const TwoBridge& tb)
{
    const RegCF reg = reg_cf_odd(tb.r().complement());
    const auto& c = reg.coeffs();
    for (std::size_t j = 1; j < c.size(); j += 2)
        if (is_odd(c[j])) return false;
    return true;
}

SliceVerdict verify_slice_nonqp(const LiscaOMembership& mem)
{
    SliceVerdict v;
    const Integer& m = mem.m;
    const Integer& h = mem.h;
    auto fail = [&](std::string why) {
        v.holds = false;
        v.failure = "m=" + m.str() + " h=" + h.str() + ": " + std::move(why);
        return v;
    };

    if (m <= 1 || is_even(m) || h <= 0 || h >= m || boost::multiprecision::gcd(m, h) != 1)
        return fail("not a valid member of O");

    const Integer p = mem.p();
    v.q = mem.q();
    if (is_even(h)) {
        v.branch = SliceVerdict::Branch::HEven;
        v.q_used = v.q;
    } else {
        v.branch = SliceVerdict::Branch::HOdd;
        if (is_odd(v.q)) return fail("h odd but q = mh - 1 is odd");
        v.q_used = m * (m - h) - 1;
        if ((v.q * v.q_used) % p != 1) return fail("q q' is not 1 mod m^2 (q'=" + v.q_used.str() + ")");
    }
    if (!(is_odd(p) && is_odd(v.q_used))) return fail("p*q_used is not odd (q_used=" + v.q_used.str() + ")");

    const TwoBridge used(Rational(p, v.q_used));
    if (!pq_odd_shortcut(used)) return fail("pq shortcut disagrees");
    if (classify(used).status != Status::NonQuasipositive) return fail("classify(p, q_used) is quasipositive");
    if (classify(TwoBridge(Rational(p, v.q))).status != Status::NonQuasipositive)
        return fail("classify(p, q) is quasipositive");
    v.holds = true;
    return v;
}

}  // namespace twobridge
