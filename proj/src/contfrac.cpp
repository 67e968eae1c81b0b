#include "twobridge/contfrac.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

namespace twobridge {

namespace {

Integer gcd_of(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

void append_twos(std::vector<Integer>& out, const Integer& count)
{
    out.insert(out.end(), to_count(count), Integer{2});
}

// Machine-word fast paths. Sweeps spend nearly all their time on small
// values, where cpp_int division dominates; results are identical.
constexpr std::int64_t kWordMax = std::numeric_limits<std::int64_t>::max();

bool fits_word(const Integer& x) { return x <= kWordMax && x >= -kWordMax; }

// x_1 -/+ 1/(x_2 -/+ 1/(...)) evaluated back to front; sign -1 for the
// negative form, +1 for the regular one. Returns nullopt when a word
// would overflow.
std::optional<std::pair<std::int64_t, std::int64_t>> eval_words(const std::vector<Integer>& a, int sign)
{
    for (const auto& x : a)
        if (!fits_word(x)) return std::nullopt;
    std::int64_t num = static_cast<std::int64_t>(a.back()), den = 1;
    for (auto it = a.rbegin() + 1; it != a.rend(); ++it) {
        std::int64_t prod, next;
        if (__builtin_mul_overflow(static_cast<std::int64_t>(*it), num, &prod)) return std::nullopt;
        if (sign < 0 ? __builtin_sub_overflow(prod, den, &next) : __builtin_add_overflow(prod, den, &next))
            return std::nullopt;
        if (next == std::numeric_limits<std::int64_t>::min()) return std::nullopt;
        den = num;
        num = next;
    }
    return std::pair{num, den};
}

Rational eval_cf(const std::vector<Integer>& a, int sign)
{
    if (auto w = eval_words(a, sign)) return Rational(w->first, w->second);
    Integer num = a.back();
    Integer den = 1;
    for (auto it = a.rbegin() + 1; it != a.rend(); ++it) {
        Integer next = *it * num + sign * den;
        den = std::move(num);
        num = std::move(next);
    }
    return Rational(std::move(num), std::move(den));
}

}  // namespace

Rational::Rational(Integer p, Integer q)
{
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (q == 0) throw std::invalid_argument("rational: zero denominator");
    const Integer g = fits_word(p) && fits_word(q)
                          ? Integer(std::gcd(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)))
                          : gcd_of(p, q);
    if (g != 0) {
        p /= g;
        q /= g;
    }
    if (!(p > q && q >= 1))
        throw std::invalid_argument("rational: need p > q >= 1, got " + p.str() + "/" + q.str());
    p_ = std::move(p);
    q_ = std::move(q);
}

Rational Rational::normalized(const Integer& p, const Integer& q)
{
    if (p < 2) throw std::invalid_argument("two-bridge parameter needs p >= 2, got " + p.str());
    Integer r = q % p;
    if (r < 0) r += p;
    if (r == 0) throw std::invalid_argument("q is 0 mod p");
    if (gcd_of(p, r) != 1)
        throw std::invalid_argument("p and q are not coprime: " + p.str() + "/" + q.str());
    return Rational(p, r);
}

Rational Rational::complement() const { return Rational(p_, p_ - q_); }

std::string Rational::str() const { return p_.str() + "/" + q_.str(); }

NegCF::NegCF(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) throw std::invalid_argument("negative continued fraction is empty");
    for (const auto& a : coeffs_)
        if (a < 2) throw std::invalid_argument("negative continued fraction coefficient < 2");
}

RegCF::RegCF(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) throw std::invalid_argument("regular continued fraction is empty");
    for (const auto& c : coeffs_)
        if (c < 1) throw std::invalid_argument("regular continued fraction coefficient < 1");
    if (coeffs_.size() == 1 && coeffs_.front() == 1)
        throw std::invalid_argument("regular continued fraction [1] has value 1");
}

MurasugiBlocks::MurasugiBlocks(std::vector<std::vector<Integer>> blocks) : blocks_(std::move(blocks))
{
    if (blocks_.empty()) throw std::invalid_argument("Murasugi blocks: no blocks");
    for (const auto& block : blocks_) {
        if (block.empty()) throw std::invalid_argument("Murasugi blocks: empty block");
        for (const auto& n : block)
            if (n < 1) throw std::invalid_argument("Murasugi blocks: entry < 1");
    }
}

std::vector<Integer> MurasugiBlocks::signed_entries() const
{
    std::vector<Integer> out;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (const auto& n : blocks_[i]) out.push_back(i % 2 == 0 ? Integer(2 * n) : Integer(-2 * n));
    return out;
}

NegCF neg_cf(const Rational& r)
{
    std::vector<Integer> out;
    if (fits_word(r.p())) {
        auto p = static_cast<std::int64_t>(r.p()), q = static_cast<std::int64_t>(r.q());
        for (;;) {
            const std::int64_t m = p % q;
            out.emplace_back(p / q + (m != 0));
            if (m == 0) break;
            p = q;
            q -= m;
        }
        return NegCF(std::move(out));
    }
    Integer p = r.p();
    Integer q = r.q();
    for (;;) {
        Integer a = (p + q - 1) / q;
        Integer rem = a * q - p;
        out.push_back(std::move(a));
        if (rem == 0) break;
        p = std::move(q);
        q = std::move(rem);
    }
    return NegCF(std::move(out));
}

Rational eval_neg_cf(const NegCF& cf) { return eval_cf(cf.coeffs(), -1); }

RegCF reg_cf_odd(const Rational& r)
{
    std::vector<Integer> c;
    if (fits_word(r.p())) {
        auto p = static_cast<std::int64_t>(r.p()), q = static_cast<std::int64_t>(r.q());
        while (q != 0) {
            c.emplace_back(p / q);
            p = std::exchange(q, p % q);
        }
    } else {
        Integer p = r.p();
        Integer q = r.q();
        while (q != 0) {
            Integer rem = p % q;
            c.push_back(p / q);
            p = std::move(q);
            q = std::move(rem);
        }
    }
    if (c.size() % 2 == 0) {
        if (c.back() == 1) {
            c.pop_back();
            c.back() += 1;
        } else {
            c.back() -= 1;
            c.push_back(1);
        }
    }
    return RegCF(std::move(c));
}

Rational eval_reg_cf(const RegCF& cf) { return eval_cf(cf.coeffs(), +1); }

NegCF reg_to_neg(const RegCF& cf)
{
    if (!cf.odd_length()) throw std::invalid_argument("reg_to_neg: even-length regular continued fraction");
    const auto& c = cf.coeffs();
    if (c.size() == 1) return NegCF({c.front()});

    std::vector<Integer> out;
    out.push_back(c.front() + 1);
    for (std::size_t j = 1; j + 1 < c.size(); ++j) {
        // j is 0-based: odd j holds c_2, c_4, ...
        if (j % 2 == 1)
            append_twos(out, c[j] - 1);
        else
            out.push_back(c[j] + 2);
    }
    out.push_back(c.back() + 1);
    return NegCF(std::move(out));
}

NegCF reg_to_neg_complement(const RegCF& cf)
{
    if (!cf.odd_length())
        throw std::invalid_argument("reg_to_neg_complement: even-length regular continued fraction");
    const auto& c = cf.coeffs();
    std::vector<Integer> out;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (j % 2 == 0)
            append_twos(out, c[j] - 1);
        else
            out.push_back(c[j] + 2);
    }
    if (out.empty()) throw std::invalid_argument("reg_to_neg_complement: p - q = 0");
    return NegCF(std::move(out));
}

NegCF riemenschneider_dual(const NegCF& cf)
{
    const auto& a = cf.coeffs();
    // Point counts per column.
    std::vector<Integer> cols(to_count(a.front() - 1), Integer{1});
    for (auto it = a.begin() + 1; it != a.end(); ++it) {
        cols.back() += 1;
        cols.insert(cols.end(), to_count(*it - 2), Integer{1});
    }
    for (auto& c : cols) c += 1;
    return NegCF(std::move(cols));
}

MurasugiBlocks murasugi_even_cf(const Rational& r)
{
    if (is_even(r.q()))
        throw std::invalid_argument("murasugi_even_cf: q must be odd, got " + r.str());

    // Expand x = num/den with num + den odd. The unique even c with
    // |x - c| < 1 exists because x is never an odd integer, and the
    // remainder den/(c*den - num) keeps the opposite-parity property.
    std::vector<Integer> entries;
    Integer num = r.p();
    Integer den = r.p() - r.q();
    for (;;) {
        if (den == 1) {
            if (is_odd(num)) throw std::logic_error("murasugi_even_cf: odd terminal entry");
            entries.push_back(num);
            break;
        }
        Integer c = floor_div(num, den);
        if (is_odd(c)) c += 1;
        Integer rem = c * den - num;
        entries.push_back(c);
        if (rem < 0) {
            num = -den;
            den = -rem;
        } else {
            num = den;
            den = rem;
        }
        if (den == 0) throw std::logic_error("murasugi_even_cf: hit an integer before termination");
    }

    std::vector<std::vector<Integer>> blocks;
    for (const auto& e : entries) {
        const bool positive = e > 0;
        const bool want_positive = blocks.size() % 2 == 1;  // sign of the block being extended
        if (blocks.empty() || positive != want_positive) {
            if (blocks.empty() && !positive) throw std::logic_error("murasugi_even_cf: first entry negative");
            blocks.emplace_back();
        }
        blocks.back().push_back(abs(e) / 2);
    }
    return MurasugiBlocks(std::move(blocks));
}

Rational eval_even_cf(const MurasugiBlocks& mb) { return eval_cf(mb.signed_entries(), -1); }

}  // namespace twobridge
