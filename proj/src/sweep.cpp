#include "twobridge/sweep.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "twobridge/diagram.hpp"
#include "twobridge/json_io.hpp"

namespace twobridge {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

void require_max_p(std::int64_t max_p)
{
    if (max_p < 2) throw std::invalid_argument("max_p must be at least 2");
}

}  // namespace

// ---------------------------------------------------------------------------
// Tabulation

TabulationRow tabulation_row(const TwoBridge& tb)
{
    TabulationRow row;
    row.p = tb.p();
    row.q = tb.q();
    row.components = tb.components();
    Classification c = classify(tb);
    row.even_cf = is_even_cf(c.cf);
    row.status = c.status;
    row.neg_cf = std::move(c.cf);
    row.stats = stats_for(tb.r());
    row.in_O = in_lisca_O(tb).has_value();
    row.canonical = canonical_isotopy_rep(tb) == tb;
    return row;
}

namespace {

std::vector<TabulationRow> rows_for_p(std::int64_t p, bool canonical_only)
{
    std::vector<TabulationRow> rows;
    for (std::int64_t q = 1; q < p; ++q) {
        if (gcd64(p, q) != 1) continue;
        TabulationRow row = tabulation_row(TwoBridge(Rational(p, q)));
        if (canonical_only && !row.canonical) continue;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TabulationRow> flatten(std::vector<std::vector<TabulationRow>>& per_p)
{
    std::vector<TabulationRow> out;
    for (auto& rows : per_p)
        for (auto& r : rows) out.push_back(std::move(r));
    return out;
}

}  // namespace

std::vector<TabulationRow> tabulate_serial(std::int64_t max_p, bool canonical_only)
{
    require_max_p(max_p);
    std::vector<std::vector<TabulationRow>> per_p(static_cast<std::size_t>(max_p + 1));
    for (std::int64_t p = 2; p <= max_p; ++p) per_p[static_cast<std::size_t>(p)] = rows_for_p(p, canonical_only);
    return flatten(per_p);
}

std::vector<TabulationRow> tabulate_parallel(std::int64_t max_p, bool canonical_only)
{
    require_max_p(max_p);
    std::vector<std::vector<TabulationRow>> per_p(static_cast<std::size_t>(max_p + 1));
    std::string error;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t p = max_p; p >= 2; --p) {
        try {
            per_p[static_cast<std::size_t>(p)] = rows_for_p(p, canonical_only);
        } catch (const std::exception& e) {
#pragma omp critical(tabulate_error)
            error = "p=" + std::to_string(p) + ": " + e.what();
        }
    }
    if (!error.empty()) throw std::runtime_error("tabulate: " + error);
    return flatten(per_p);
}

std::string csv_header()
{
    return "p,q,components,neg_cf,even_cf,status,t,b,e,s,w,d_plus,d_minus,r_plus,r_minus,ineq_ok,in_O";
}

std::string csv_line(const TabulationRow& row)
{
    const BraidStats& s = row.stats.stats;
    std::ostringstream os;
    os << row.p << ',' << row.q << ',' << row.components << ",\"" << to_json(row.neg_cf).dump() << "\","
       << (row.even_cf ? "true" : "false") << ',' << to_string(row.status) << ',' << s.t << ',' << s.b << ','
       << s.e << ',' << s.s << ',' << s.w << ',' << s.d_plus << ',' << s.d_minus << ',' << s.r_plus << ','
       << s.r_minus << ',' << (row.stats.inequalities_hold ? "true" : "false") << ','
       << (row.in_O ? "true" : "false");
    return os.str();
}

std::string jsonl_line(const TabulationRow& row)
{
    nlohmann::json rec = stats_record(Rational(row.p, row.q), row.stats);
    rec["components"] = row.components;
    rec["neg_cf"] = to_json(row.neg_cf);
    rec["even_cf"] = row.even_cf;
    rec["status"] = std::string(to_string(row.status));
    rec["in_O"] = row.in_O;
    return rec.dump();
}

// ---------------------------------------------------------------------------
// Verification

std::string_view property_name(Property p)
{
    switch (p) {
    case Property::NegCfRoundTrip: return "neg_cf_round_trip";
    case Property::RegCfRoundTrip: return "reg_cf_round_trip";
    case Property::EvenCfRoundTrip: return "even_cf_round_trip";
    case Property::RegToNeg: return "reg_to_neg";
    case Property::RegToNegComplement: return "reg_to_neg_complement";
    case Property::DualInvolution: return "dual_involution";
    case Property::ParityLemma: return "parity_lemma";
    case Property::PqOddShortcut: return "pq_odd_shortcut";
    case Property::MirrorExclusivity: return "mirror_exclusivity";
    case Property::ComplementRegularCriterion: return "complement_regular_criterion";
    case Property::IsotopyInvariance: return "isotopy_invariance";
    case Property::SliceFamily: return "slice_family";
    case Property::OracleEquivalence: return "oracle_equivalence";
    case Property::EulerIdentity: return "euler_identity";
    case Property::SignPurity: return "sign_purity";
    case Property::Alternating: return "alternating";
    case Property::StandardShape: return "standard_shape";
    case Property::PositiveDiagramIffQp: return "positive_diagram_iff_even";
    case Property::DifferenceIdentity: return "difference_identity";
    case Property::InequalityTheorem: return "inequality_theorem";
    case Property::MirrorInvolution: return "mirror_involution";
    }
    return "?";
}

bool VerifyReport::ok() const
{
    return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.failed == 0; });
}

const PropertyResult& VerifyReport::at(Property p) const
{
    for (const auto& r : results)
        if (r.property == p) return r;
    throw std::out_of_range("property not enabled: " + std::string(property_name(p)));
}

void VerifyReport::print(std::ostream& os) const
{
    std::uint64_t failures = 0;
    for (const auto& r : results) {
        os << (r.failed == 0 ? "PASS " : "FAIL ") << property_name(r.property) << " checked=" << r.checked
           << " failed=" << r.failed << '\n';
        if (r.failed != 0) os << "  first counterexample: " << r.first_counterexample << '\n';
        failures += r.failed;
    }
    os << (failures == 0 ? "all properties pass" : "verification FAILED") << ", " << failures << " failures\n";
}

namespace {

// Location of a check, formatted only when the check fails.
struct Where {
    const char* first_label;
    std::int64_t first;
    const char* second_label;
    std::int64_t second;
    const char* suffix = "";

    std::string str() const
    {
        return first_label + std::to_string(first) + second_label + std::to_string(second) + suffix;
    }
};

Where pair_at(std::int64_t p, std::int64_t q, const char* suffix = "") { return {"p=", p, " q=", q, suffix}; }

class Accumulator {
public:
    explicit Accumulator(const VerifyOptions& o)
    {
        for (int i = 0; i < kPropertyCount; ++i) results_[static_cast<std::size_t>(i)].property = Property(i);
        if (o.only.empty())
            enabled_.fill(true);
        else
            for (Property p : o.only) enabled_[static_cast<std::size_t>(p)] = true;
    }

    bool enabled(Property p) const { return enabled_[static_cast<std::size_t>(p)]; }

    // Runs one check; an exception counts as a failure. fn fills in its
    // detail string only when it fails.
    template <class Check>
    void check(Property p, const Where& where, Check&& fn)
    {
        if (!enabled(p)) return;
        PropertyResult& r = results_[static_cast<std::size_t>(p)];
        ++r.checked;
        std::string detail;
        bool ok = false;
        try {
            ok = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) {
            if (r.failed++ == 0) r.first_counterexample = where.str() + (detail.empty() ? "" : ": " + detail);
        }
    }

    void merge(const Accumulator& other)
    {
        for (std::size_t i = 0; i < results_.size(); ++i) {
            PropertyResult& r = results_[i];
            const PropertyResult& o = other.results_[i];
            if (r.failed == 0 && o.failed != 0) r.first_counterexample = o.first_counterexample;
            r.checked += o.checked;
            r.failed += o.failed;
        }
    }

    // Records an error raised outside any single check.
    void fail_first_enabled(const Where& where, const std::string& what)
    {
        for (std::size_t i = 0; i < results_.size(); ++i) {
            if (!enabled_[i]) continue;
            check(Property(i), where, [&](std::string& why) {
                why = "exception: " + what;
                return false;
            });
            return;
        }
    }

    VerifyReport report() const
    {
        VerifyReport rep;
        for (std::size_t i = 0; i < results_.size(); ++i)
            if (enabled_[i]) rep.results.push_back(results_[i]);
        return rep;
    }

private:
    std::array<PropertyResult, kPropertyCount> results_{};
    std::array<bool, kPropertyCount> enabled_{};
};

bool any_enabled(const Accumulator& acc, std::initializer_list<Property> ps)
{
    return std::any_of(ps.begin(), ps.end(), [&](Property p) { return acc.enabled(p); });
}

std::string show(const NegCF& cf) { return to_json(cf).dump(); }

void check_slice_family(std::int64_t p, Accumulator& acc)
{
    if (!acc.enabled(Property::SliceFamily) || p % 2 == 0) return;
    std::int64_t m = 1;
    while ((m + 1) * (m + 1) <= p) ++m;
    if (m * m != p || m <= 1) return;
    for (std::int64_t h = 1; h < m; ++h) {
        if (gcd64(m, h) != 1) continue;
        const Where where{"m=", m, " h=", h};
        acc.check(Property::SliceFamily, where, [&](std::string& why) {
            const LiscaOMembership mem{m, h};
            const TwoBridge tb(Rational(mem.p(), mem.q()));
            const auto found = in_lisca_O(tb);
            if (!found || found->m != m || found->h != h) {
                why = "membership test misses the pair";
                return false;
            }
            const SliceVerdict v = verify_slice_nonqp(mem);
            if (!v.holds) {
                why = v.failure;
                return false;
            }
            if (classify(tb).status != Status::NonQuasipositive) {
                why = "classified quasipositive";
                return false;
            }
            return true;
        });
    }
}

void check_pair(std::int64_t pi, std::int64_t qi, const VerifyOptions& o, Accumulator& acc)
{
    const Where where = pair_at(pi, qi);
    const Rational r(pi, qi);
    const TwoBridge tb(r);
    const Rational comp = r.complement();
    const NegCF cf = neg_cf(r);
    const NegCF cf_comp = neg_cf(comp);
    const bool even = is_even_cf(cf);
    const bool q_odd = qi % 2 == 1;
    const std::int64_t oracle_max = o.oracle_max_p > 0 ? o.oracle_max_p : o.max_p;
    const bool oracle = pi <= oracle_max;

    acc.check(Property::NegCfRoundTrip, where, [&](std::string& why) {
        if (eval_neg_cf(cf) == r) return true;
        why = show(cf);
        return false;
    });

    if (any_enabled(acc, {Property::RegCfRoundTrip, Property::RegToNeg, Property::RegToNegComplement})) {
        const RegCF reg = reg_cf_odd(r);
        acc.check(Property::RegCfRoundTrip, where, [&](std::string&) {
            return reg.odd_length() && eval_reg_cf(reg) == r;
        });
        acc.check(Property::RegToNeg, where, [&](std::string& why) {
            const NegCF got = reg_to_neg(reg);
            if (got == cf) return true;
            why = show(got) + " vs " + show(cf);
            return false;
        });
        acc.check(Property::RegToNegComplement, where, [&](std::string& why) {
            const NegCF got = reg_to_neg_complement(reg);
            if (got == cf_comp) return true;
            why = show(got) + " vs " + show(cf_comp);
            return false;
        });
    }

    acc.check(Property::DualInvolution, where, [&](std::string& why) {
        const NegCF dual = riemenschneider_dual(cf);
        if (dual == cf_comp && riemenschneider_dual(dual) == cf) return true;
        why = show(dual);
        return false;
    });
    acc.check(Property::ParityLemma, where, [&](std::string&) { return !(pi % 2 == 1 && even) || qi % 2 == 0; });
    if (pi % 2 == 1 && q_odd) {
        acc.check(Property::PqOddShortcut, where, [&](std::string&) {
            const Classification c = classify(tb);
            return pq_odd_shortcut(tb) && !even && c.status == Status::NonQuasipositive &&
                   c.has_reason(Reason::PqOdd);
        });
    }
    if (pi % 2 == 1 && pi >= 3)
        acc.check(Property::MirrorExclusivity, where, [&](std::string&) { return !(even && is_even_cf(cf_comp)); });
    acc.check(Property::ComplementRegularCriterion, where,
              [&](std::string&) { return complement_regular_criterion(tb) == even; });
    acc.check(Property::IsotopyInvariance, where, [&](std::string& why) {
        const TwoBridge inv = inverse_rep(tb);
        const NegCF inv_cf = neg_cf(inv.r());
        std::vector<Integer> reversed(cf.coeffs().rbegin(), cf.coeffs().rend());
        const Status status = classify(tb).status;
        const TwoBridge canon = tb.q() < inv.q() ? tb : inv;
        if ((inv.q() * tb.q()) % tb.p() == 1 && inv_cf.coeffs() == reversed && classify(inv).status == status &&
            canonical_isotopy_rep(tb) == canon && canonical_isotopy_rep(inv) == canon)
            return true;
        why = "q'=" + inv.q().str() + " " + show(inv_cf) + " vs " + show(cf);
        return false;
    });

    if (oracle && any_enabled(acc, {Property::EulerIdentity, Property::Alternating, Property::StandardShape})) {
        const RegCF reg = reg_cf_odd(r);
        const LinkDiagram d = build_standard(reg);
        acc.check(Property::StandardShape, pair_at(pi, qi, " (standard)"), [&](std::string& why) {
            const Integer total = std::accumulate(reg.coeffs().begin(), reg.coeffs().end(), Integer{0});
            if (Integer(d.crossing_count()) == total &&
                d.component_count() == static_cast<std::size_t>(tb.components()))
                return true;
            why = "crossings=" + std::to_string(d.crossing_count()) +
                  " components=" + std::to_string(d.component_count());
            return false;
        });
        acc.check(Property::Alternating, pair_at(pi, qi, " (standard)"), [&](std::string&) { return is_alternating(d); });
        acc.check(Property::EulerIdentity, pair_at(pi, qi, " (standard)"), [&](std::string&) {
            const auto st = seifert_data(d).second;
            return st.s - (st.d_plus + st.d_minus) == 1;
        });
    }

    if (!q_odd) return;

    const bool need_blocks =
        any_enabled(acc, {Property::EvenCfRoundTrip, Property::DifferenceIdentity, Property::InequalityTheorem,
                          Property::MirrorInvolution}) ||
        (oracle && any_enabled(acc, {Property::OracleEquivalence, Property::EulerIdentity, Property::SignPurity,
                                     Property::Alternating, Property::PositiveDiagramIffQp}));
    if (!need_blocks) return;
    const MurasugiBlocks mb = murasugi_even_cf(r);

    acc.check(Property::EvenCfRoundTrip, where, [&](std::string& why) {
        if (eval_even_cf(mb) == comp) return true;
        why = to_json(mb).dump();
        return false;
    });
    acc.check(Property::DifferenceIdentity, where, [&](std::string&) {
        const BraidStats st = braid_stats(mb);
        Integer excess = 0, alt = 0;
        for (std::size_t i = 0; i < mb.blocks().size(); ++i)
            for (const auto& n : mb.blocks()[i]) {
                excess += n - 1;
                alt += (i % 2 == 0 ? 1 : -1) * (n - 1);
            }
        return st.s - st.b == excess && st.w - st.e == alt;
    });
    acc.check(Property::InequalityTheorem, where, [&](std::string& why) {
        const InequalityReport rep = check_inequalities(mb);
        why = rep.failure;
        return rep.holds;
    });
    acc.check(Property::MirrorInvolution, where, [&](std::string&) {
        const BraidStats st = braid_stats(mb);
        const BraidStats m = mirror_stats(st);
        return mirror_stats(m) == st && m.d_plus == st.d_minus && m.r_plus == st.r_minus && m.w == -st.w &&
               m.e == -st.e && m.s == st.s && m.b == st.b;
    });

    if (!oracle) return;
    acc.check(Property::PositiveDiagramIffQp, where, [&](std::string&) {
        return (mb.t() == 1) == is_even_cf(cf_comp);
    });
    if (!any_enabled(acc, {Property::OracleEquivalence, Property::EulerIdentity, Property::SignPurity,
                           Property::Alternating}))
        return;

    const LinkDiagram d = build_murasugi(mb);
    const DiagramStats measured = seifert_data(d).second;
    acc.check(Property::OracleEquivalence, where, [&](std::string& why) {
        DiagramStats closed = closed_form_stats(mb);
        if (o.fault == Fault::FlipTreeSignSum) {
            const Integer ceil_t = (Integer(mb.t()) + 1) / 2;
            closed.d_plus = 2 * ceil_t - closed.d_plus;
        }
        if (measured == closed) return true;
        why = "measured s=" + measured.s.str() + " w=" + measured.w.str() + " d+=" + measured.d_plus.str() +
              " d-=" + measured.d_minus.str() + " reduced=" + (measured.reduced ? "1" : "0") +
              " choice_independent=" + (measured.tree_choice_independent ? "1" : "0") + "; closed form s=" +
              closed.s.str() + " w=" + closed.w.str() + " d+=" + closed.d_plus.str() + " d-=" + closed.d_minus.str();
        return false;
    });
    acc.check(Property::EulerIdentity, pair_at(pi, qi, " (murasugi)"),
              [&](std::string&) { return measured.s - (measured.d_plus + measured.d_minus) == 1; });
    acc.check(Property::SignPurity, where, [&](std::string& why) {
        for (const auto& x : d.crossings()) {
            if (x.sign != (x.group % 2 == 1 ? 1 : -1)) {
                why = "crossing " + std::to_string(x.id) + " in tangle " + std::to_string(x.group);
                return false;
            }
        }
        return true;
    });
    acc.check(Property::Alternating, pair_at(pi, qi, " (murasugi)"), [&](std::string&) { return is_alternating(d); });
}

void check_p(std::int64_t p, const VerifyOptions& o, Accumulator& acc)
{
    for (std::int64_t q = 1; q < p; ++q)
        if (gcd64(p, q) == 1) {
            try {
                check_pair(p, q, o, acc);
            } catch (const std::exception& e) {
                acc.fail_first_enabled(pair_at(p, q), e.what());
            }
        }
    check_slice_family(p, acc);
}

}  // namespace

VerifyReport verify_serial(const VerifyOptions& opts)
{
    require_max_p(opts.max_p);
    Accumulator acc(opts);
    for (std::int64_t p = 2; p <= opts.max_p; ++p) check_p(p, opts, acc);
    return acc.report();
}

VerifyReport verify_parallel(const VerifyOptions& opts)
{
    require_max_p(opts.max_p);
    std::vector<Accumulator> per_p(static_cast<std::size_t>(opts.max_p + 1), Accumulator(opts));
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t p = opts.max_p; p >= 2; --p) check_p(p, opts, per_p[static_cast<std::size_t>(p)]);
    Accumulator total(opts);
    for (std::int64_t p = 2; p <= opts.max_p; ++p) total.merge(per_p[static_cast<std::size_t>(p)]);
    return total.report();
}

}  // namespace twobridge
