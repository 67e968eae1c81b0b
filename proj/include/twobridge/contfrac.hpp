#pragma once

// Continued fraction forms of the two-bridge parameter p/q.
//
// Four expansions are handled:
//   negative:  p/q = a1 - 1/(a2 - 1/(... - 1/ak)),   every ai >= 2
//   regular:   p/q = c1 + 1/(c2 + 1/(... + 1/cn)),   every ci >= 1
//   signed even (Murasugi blocks) of p/(p-q), grouped into runs of equal sign
// plus the conversions between them. All arithmetic is exact.

#include <cstddef>
#include <string>
#include <vector>

#include "twobridge/integer.hpp"

namespace twobridge {

/// A reduced fraction p/q with p > q >= 1.
class Rational {
public:
    /// Reduces by gcd(p, q); throws std::invalid_argument unless the
    /// reduced pair satisfies p > q >= 1.
    Rational(Integer p, Integer q);

    /// Two-bridge style normalization: q is taken modulo p (negative or
    /// oversized q accepted). Throws std::invalid_argument when p < 2,
    /// q == 0 (mod p) or gcd(p, q) != 1.
    static Rational normalized(const Integer& p, const Integer& q);

    const Integer& p() const noexcept { return p_; }
    const Integer& q() const noexcept { return q_; }

    /// p/(p-q).
    Rational complement() const;

    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;

private:
    Integer p_;
    Integer q_;
};

/// Negative continued fraction; every coefficient >= 2.
class NegCF {
public:
    explicit NegCF(std::vector<Integer> coeffs);

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    friend bool operator==(const NegCF&, const NegCF&) = default;

private:
    std::vector<Integer> coeffs_;
};

/// Regular continued fraction with positive coefficients. Any length is
/// representable; reg_cf_odd produces the odd-length normal form. The
/// single coefficient [1] (value 1) is rejected.
class RegCF {
public:
    explicit RegCF(std::vector<Integer> coeffs);

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool odd_length() const noexcept { return coeffs_.size() % 2 == 1; }

    friend bool operator==(const RegCF&, const RegCF&) = default;

private:
    std::vector<Integer> coeffs_;
};

/// Signed all-even negative continued fraction
///   [2n_{1,1},...,2n_{1,k1}, -2n_{2,1},..., (-1)^{t-1} 2n_{t,kt}]
/// stored as t nonempty blocks of the positive integers n_{i,j}.
/// Block i carries sign (-1)^{i-1}.
class MurasugiBlocks {
public:
    explicit MurasugiBlocks(std::vector<std::vector<Integer>> blocks);

    const std::vector<std::vector<Integer>>& blocks() const noexcept { return blocks_; }
    std::size_t t() const noexcept { return blocks_.size(); }

    /// The flattened signed even sequence.
    std::vector<Integer> signed_entries() const;

    friend bool operator==(const MurasugiBlocks&, const MurasugiBlocks&) = default;

private:
    std::vector<std::vector<Integer>> blocks_;
};

NegCF neg_cf(const Rational& r);
Rational eval_neg_cf(const NegCF& cf);

/// Euclidean expansion forced to odd length with the two rewrite rules
///   [.., c_{2m-1}, 1]   -> [.., c_{2m-1} + 1]
///   [.., c_{2m}]        -> [.., c_{2m} - 1, 1]
RegCF reg_cf_odd(const Rational& r);
Rational eval_reg_cf(const RegCF& cf);

/// [c1..c_{2m+1}] -> [1+c1, 2^(c2-1), 2+c3, ..., 2^(c_{2m}-1), 1+c_{2m+1}].
/// A single coefficient [c1] maps to [c1]. Throws on even length.
NegCF reg_to_neg(const RegCF& cf);

/// [c1..c_{2m+1}] -> [2^(c1-1), 2+c2, 2^(c3-1), ..., 2+c_{2m}, 2^(c_{2m+1}-1)],
/// the negative expansion of p/(p-q). Throws on even length.
NegCF reg_to_neg_complement(const RegCF& cf);

/// Point-diagram duality: neg_cf(p/q) -> neg_cf(p/(p-q)). Row i holds
/// a_i - 1 points and starts under the last point of row i-1; column j
/// of the diagram holds b_j - 1 points.
NegCF riemenschneider_dual(const NegCF& cf);

/// Signed even expansion of p/(p-q). Requires q odd (std::invalid_argument
/// otherwise); for even q use the mirror p/(p-q), whose q is odd.
MurasugiBlocks murasugi_even_cf(const Rational& r);
Rational eval_even_cf(const MurasugiBlocks& mb);

}  // namespace twobridge
