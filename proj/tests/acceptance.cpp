// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons,
// wall-clock limits where a bound is stated. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "twobridge/braidstats.hpp"
#include "twobridge/classify.hpp"
#include "twobridge/diagram.hpp"
#include "twobridge/sweep.hpp"

using namespace twobridge;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

Outcome from_report(const VerifyReport& rep)
{
    Outcome o{rep.ok(), ""};
    for (const auto& r : rep.results) {
        o.detail += std::string(property_name(r.property)) + " " + std::to_string(r.checked - r.failed) + "/" +
                    std::to_string(r.checked) + "; ";
        if (r.failed != 0) o.detail += "first failure: " + r.first_counterexample + "; ";
    }
    return o;
}

Outcome sweep(std::int64_t max_p, std::vector<Property> only)
{
    VerifyOptions opts;
    opts.max_p = max_p;
    opts.only = std::move(only);
    return from_report(verify_parallel(opts));
}

Outcome exact_values()
{
    const NegCF a = neg_cf(Rational(16, 3));
    const NegCF b = neg_cf(Rational(16, 13));
    const bool ok = a.coeffs() == ints({6, 2, 2}) && b.coeffs() == ints({2, 2, 2, 2, 4}) &&
                    riemenschneider_dual(a) == b && riemenschneider_dual(b) == a;
    return {ok, "16/3 -> [6,2,2], 16/13 -> [2,2,2,2,4], dual pair"};
}

Outcome known_knots()
{
    struct Case {
        const char* name;
        MurasugiBlocks mb;
        int b, e;
    };
    const Case cases[] = {
        {"trefoil", MurasugiBlocks({ints({1, 1})}), 2, 3},
        {"figure-eight", MurasugiBlocks({ints({1}), ints({1})}), 3, 0},
        {"5_2", MurasugiBlocks({ints({1, 2})}), 3, 4},
    };
    Outcome o{true, ""};
    for (const auto& c : cases) {
        const auto be = braid_index_exponent(c.mb);
        // The diagram the formulas describe must carry the same data.
        const auto st = seifert_data(build_murasugi(c.mb)).second;
        const auto closed = closed_form_stats(c.mb);
        const bool ok = be.b == c.b && be.e == c.e && st == closed;
        o.ok = o.ok && ok;
        o.detail += std::string(c.name) + " (b,e)=(" + be.b.str() + "," + be.e.str() + ")" + (ok ? "" : " MISMATCH") + "; ";
    }
    return o;
}

Outcome slice_family()
{
    std::uint64_t members = 0;
    for (int m = 3; m <= 99; m += 2)
        for (int h = 1; h < m; ++h) {
            if (std::gcd(m, h) != 1) continue;
            ++members;
            const LiscaOMembership mem{m, h};
            const TwoBridge tb = TwoBridge::from(mem.p(), mem.q());
            const auto witness = in_lisca_O(tb);
            const auto verdict = verify_slice_nonqp(mem);
            if (classify(tb).status != Status::NonQuasipositive || !witness || witness->m != m || witness->h != h ||
                !verdict.holds)
                return {false, "m=" + std::to_string(m) + " h=" + std::to_string(h) + ": " + verdict.failure};
        }
    return {true, std::to_string(members) + " members of O with m <= 99"};
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* title;
        double limit_s;  // <= 0: no bound stated
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "exact expansions of 16/3 and 16/13", 0.001, exact_values},
        {2, "conversion formulas, p <= 2000", 10.0,
         [] { return sweep(2000, {Property::RegToNeg, Property::RegToNegComplement}); }},
        {3, "even-CF / regular-CF / pq-odd consistency, p <= 2000", 0,
         [] {
             return sweep(2000, {Property::ParityLemma, Property::PqOddShortcut, Property::MirrorExclusivity,
                                 Property::ComplementRegularCriterion});
         }},
        {4, "diagram oracle equals closed forms, p <= 300", 30.0,
         [] { return sweep(300, {Property::OracleEquivalence}); }},
        {5, "2r+ <= d+, 2r- <= d- with exact residues, p <= 2000", 0,
         [] { return sweep(2000, {Property::InequalityTheorem}); }},
        {6, "known knots: trefoil, figure-eight, 5_2", 0, known_knots},
        {7, "slice family O is non-quasipositive, m <= 99", 5.0, slice_family},
        {8, "isotopy invariance under q -> q', p <= 2000", 0,
         [] { return sweep(2000, {Property::IsotopyInvariance}); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs > c.limit_s) {
            o.ok = false;
            o.detail += "time limit " + std::to_string(c.limit_s) + " s exceeded; ";
        }
        failed += !o.ok;
        std::printf("AC%d %s  %-58s %10.3f s  %s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, secs, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed;
}
