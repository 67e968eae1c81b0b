#pragma once

// Positivity / quasipositivity / strong quasipositivity of K(p,q).
//
// For knots the three notions coincide and hold exactly when the negative
// continued fraction of p/q is even. For two-component links evenness is
// only necessary, so the even case is reported as undetermined.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/contfrac.hpp"

namespace twobridge {

/// The two-bridge link K(p,q); a knot iff p is odd.
class TwoBridge {
public:
    explicit TwoBridge(Rational r) : r_(std::move(r)) {}
    /// Accepts any q coprime to p and reduces it into (0, p).
    static TwoBridge from(const Integer& p, const Integer& q) { return TwoBridge(Rational::normalized(p, q)); }

    const Rational& r() const noexcept { return r_; }
    const Integer& p() const noexcept { return r_.p(); }
    const Integer& q() const noexcept { return r_.q(); }
    int components() const { return is_odd(r_.p()) ? 1 : 2; }
    bool is_knot() const { return components() == 1; }

    friend bool operator==(const TwoBridge&, const TwoBridge&) = default;

private:
    Rational r_;
};

enum class Status { Quasipositive, NonQuasipositive, LinkConditionHoldsUndetermined };
enum class Reason { EvenCf, OddCoeff, PqOdd, LinkCaveat };

std::string_view to_string(Status s);
std::string_view to_string(Reason r);

struct Classification {
    Status status;
    std::vector<Reason> reasons;
    // Unset when the status is undetermined.
    std::optional<bool> is_positive;
    std::optional<bool> is_strongly_quasipositive;
    NegCF cf;

    bool has_reason(Reason r) const;
};

/// p = m^2 with m odd, q = m*h - 1, 0 < h < m, gcd(m, h) = 1.
struct LiscaOMembership {
    Integer m;
    Integer h;

    Integer p() const { return m * m; }
    Integer q() const { return m * h - 1; }
};

bool is_even_cf(const NegCF& cf);

Classification classify(const TwoBridge& tb);

/// True iff p*q is odd, in which case K(p,q) is never quasipositive.
bool pq_odd_shortcut(const TwoBridge& tb);

/// K(p, p-q).
TwoBridge mirror(const TwoBridge& tb);

/// K(p, q') with q*q' = 1 (mod p); isotopic to K(p, q).
TwoBridge inverse_rep(const TwoBridge& tb);

/// Whichever of K(p,q), K(p,q') has the smaller second parameter.
TwoBridge canonical_isotopy_rep(const TwoBridge& tb);

std::optional<LiscaOMembership> in_lisca_O(const TwoBridge& tb);

/// The odd-length regular expansion of p/(p-q) has every even-indexed
/// (1-based) coefficient even. Equivalent to is_even_cf(neg_cf(p/q)).
bool complement_regular_criterion(const TwoBridge& tb);

struct SliceVerdict {
    enum class Branch { HEven, HOdd };

    bool holds = false;
    Branch branch = Branch::HEven;
    Integer q;        // m*h - 1
    Integer q_used;   // the parameter whose p*q_used is odd (q or q')
    std::string failure;  // empty when holds
};

/// Runs the h-parity argument that members of O are not quasipositive:
///   h even: q = mh - 1 is odd, so pq is odd;
///   h odd:  q' = m(m-h) - 1 is odd, qq' = 1 (mod m^2), and pq' is odd.
/// Every step is checked and cross-checked against classify().
SliceVerdict verify_slice_nonqp(const LiscaOMembership& mem);

/// Modular inverse of a modulo n (n >= 2, gcd(a, n) = 1), in [1, n).
Integer mod_inverse(const Integer& a, const Integer& n);

}  // namespace twobridge
