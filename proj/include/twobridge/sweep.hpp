#pragma once

// Exhaustive sweeps over all coprime pairs p > q >= 1 with p <= max_p.
//
// Every sweep has a serial reference and an OpenMP version. Work is
// partitioned by p; per-p results are merged in increasing p, so both
// versions produce identical output.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/braidstats.hpp"
#include "twobridge/classify.hpp"

namespace twobridge {

// ---------------------------------------------------------------------------
// Tabulation

struct TabulationRow {
    Integer p;
    Integer q;
    int components = 0;
    NegCF neg_cf{{Integer{2}}};
    bool even_cf = false;
    Status status = Status::NonQuasipositive;
    TypedStats stats;
    bool in_O = false;
    bool canonical = false;  // q <= q' with q q' = 1 (mod p)
};

TabulationRow tabulation_row(const TwoBridge& tb);

/// Rows ordered by (p, q). With canonical_only, only the isotopy
/// representative with the smaller q is kept.
std::vector<TabulationRow> tabulate_serial(std::int64_t max_p, bool canonical_only);
std::vector<TabulationRow> tabulate_parallel(std::int64_t max_p, bool canonical_only);

/// Fixed column order:
/// p,q,components,neg_cf,even_cf,status,t,b,e,s,w,d_plus,d_minus,r_plus,r_minus,ineq_ok,in_O
std::string csv_header();
std::string csv_line(const TabulationRow& row);
std::string jsonl_line(const TabulationRow& row);

// ---------------------------------------------------------------------------
// Verification

enum class Property {
    NegCfRoundTrip,
    RegCfRoundTrip,
    EvenCfRoundTrip,
    RegToNeg,
    RegToNegComplement,
    DualInvolution,
    ParityLemma,
    PqOddShortcut,
    MirrorExclusivity,
    ComplementRegularCriterion,
    IsotopyInvariance,
    SliceFamily,
    OracleEquivalence,
    EulerIdentity,
    SignPurity,
    Alternating,
    StandardShape,
    PositiveDiagramIffQp,
    DifferenceIdentity,
    InequalityTheorem,
    MirrorInvolution,
};

inline constexpr int kPropertyCount = static_cast<int>(Property::MirrorInvolution) + 1;

std::string_view property_name(Property p);

enum class Fault {
    None,
    // Flip the sign of the block sum in the closed form for d+; the diagram
    // oracle must then disagree.
    FlipTreeSignSum,
};

struct VerifyOptions {
    std::int64_t max_p = 300;
    // Diagram-level properties run only for p <= oracle_max_p (<= 0: max_p).
    std::int64_t oracle_max_p = 0;
    // Empty: every property.
    std::vector<Property> only;
    Fault fault = Fault::None;
};

struct PropertyResult {
    Property property;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::string first_counterexample;
};

struct VerifyReport {
    std::vector<PropertyResult> results;  // enabled properties, in enum order

    bool ok() const;
    const PropertyResult& at(Property p) const;
    void print(std::ostream& os) const;
};

VerifyReport verify_serial(const VerifyOptions& opts);
VerifyReport verify_parallel(const VerifyOptions& opts);

}  // namespace twobridge
