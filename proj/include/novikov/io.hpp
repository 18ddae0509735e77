// Serialization: the algebra exchange format, analysis reports with
// re-verifiable witnesses, and canonical (byte-stable) output.
//
// Scalars always serialize as strings ("5", "-3/4", residues as decimals);
// exactness survives every parser. Canonical mode uses a fixed key order and
// compact separators, so identical inputs produce byte-identical documents.
#pragma once

#include <nlohmann/json.hpp>

#include "novikov/theorems.hpp"

namespace novikov::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kFormatVersion = 1;

json field_to_json(const FieldDescriptor& f);
FieldDescriptor field_from_json(const json& j, const std::string& where);

json vec_to_json(const Vec& v);
Vec vec_from_json(const FieldDescriptor& f, std::size_t n, const json& j,
                  const std::string& where);

json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const FieldDescriptor& f, const json& j, const std::string& where);

json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

struct AlgebraFile {
    Algebra algebra;
    json meta;                                              // null when absent
    std::vector<std::pair<std::string, Subspace>> subspaces; // optional named subspaces
};

AlgebraFile parse_algebra_file(const std::string& text);
AlgebraFile load_algebra_file(const std::string& path);
std::string serialize_algebra_file(const AlgebraFile& f, bool pretty);

// Canonical compact serialization of the bare algebra; input to the digest.
std::string canonical_algebra_string(const Algebra& a);
// FNV-1a 64-bit digest, rendered as "fnv1a64:<16 hex digits>".
std::string digest_hex(const std::string& bytes);

json identity_report_to_json(const IdentityReport& r);
json decision_to_json(const Decision& d);
json verdict_to_json(const Verdict& v);
json suite_report_to_json(const SuiteReport& r);
json baer_chain_to_json(const BaerChain& c);

// Self-contained witness records: each embeds the algebra it refers to and
// re-verifies with no other inputs.
json witness_identity(const Algebra& a, const IdentityReport& failed);
json witness_decision(const Algebra& a, const Decision& d);
json witness_verdict(const Algebra& a, const Verdict& failed);
json witness_radical_chain(const Algebra& a, const BaerChain& chain);

// Empty string when the record re-verifies; otherwise a failure description.
std::string verify_witness_record(const json& record);

std::string iso_timestamp_utc();

} // namespace novikov::io
