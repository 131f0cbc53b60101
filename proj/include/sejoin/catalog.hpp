#pragma once

// Record assembly, enumeration, worked-example verification and export.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sejoin/metric.hpp"
#include "sejoin/topology.hpp"

namespace sejoin {

inline constexpr int schema_version = 1;

struct SERecord {
    JoinSpec spec;
    std::optional<Rational> k;  // the value requested, when the record came from a k list
    std::optional<ReebRay> ray;
    SmoothnessReport smoothness;
    std::optional<JoinQuotient> quotient;
    std::optional<TorsionInvariant> torsion;
    std::optional<Rational> r3;
    KEConditions ke;
    bool log_fano = false;
    bool positive = false;
    std::optional<CalabiProfile> profile;
    std::vector<std::string> notes;
    std::string error;  // nonempty when assembly stopped early
};

// Quasi-regular Y^{p,q} with p <= p_max, sorted by (p, q).
std::vector<YpqEinstein> enumerate_ypq(long p_max);

// Everything downstream of a join. Never throws for valid specs; problems end
// up in `error` or `notes`.
SERecord build_record(const JoinSpec& spec);

// canonical_l join for each w; records that cannot be normalized carry an error.
SERecord build_record(const YpqEinstein& ypq, const Integer& w1, const Integer& w2);

std::vector<SERecord> enumerate_joins(const YpqEinstein& ypq, const std::vector<Rational>& k_list);
// All coprime w1 > w2 >= 1 with w1 <= w_bound.
std::vector<SERecord> enumerate_joins(const YpqEinstein& ypq, long w_bound);

// Sort by (p, q, w1, w2).
void sort_records(std::vector<SERecord>& records);

// JSON form of a record. Integers and rationals are strings ("n" or "n/d");
// irrational k is given by certified decimal bounds with `digits` places.
nlohmann::ordered_json record_json(const SERecord& record, int digits = 40);

struct ExampleExpectation {
    std::string label;
    Integer p, q;
    Rational k;
    nlohmann::ordered_json fields;  // subset of record_json keys
};

struct VerificationReport {
    int blocks = 0;
    std::vector<std::string> passed;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// The two Y^{13,q} examples and the family for t = 1..10 with their
// published values.
std::vector<ExampleExpectation> worked_example_expectations();

// Rebuilds each record from (p, q, k) and diffs the listed fields. Also checks
// that the Y^{13,q} pair is distinguished by torsion and that the family's
// k2 = 0 member is flagged non-smooth.
VerificationReport verify_worked_examples(const std::vector<ExampleExpectation>& expectations);
VerificationReport verify_worked_examples();

enum class ExportFormat { Json, Csv };

// Records are sorted first; output is byte-for-byte deterministic.
void write_export(std::vector<SERecord> records, ExportFormat format, std::ostream& out, int digits = 40);
// Throws std::runtime_error naming the path on I/O failure.
void write_export_file(std::vector<SERecord> records, ExportFormat format, const std::string& path,
                       int digits = 40);

std::vector<std::string> csv_columns();

// Profile rebuilt from an exported record (r3 and F_coeffs).
CalabiProfile profile_from_json(const nlohmann::json& record);

}  // namespace sejoin
