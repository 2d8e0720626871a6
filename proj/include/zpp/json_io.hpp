#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zpp/fixtures.hpp"
#include "zpp/jordan.hpp"

namespace zpp {

/// Insertion-ordered JSON so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Field: {"kind":"gf","p":7} or {"kind":"q"}.
Json field_to_json(const FieldDesc& f);
FieldDesc field_from_json(const Json& j);

// Scalar entries: GF(p) residues as integers in [0, p); rationals as
// integers when they fit, else strings "num/den" (or "num").
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const FieldDesc& f);

// Matrix: {"rows":R,"cols":C,"entries":[[...], ...]}.
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, const FieldDesc& f);

// LinMap: {"field":F,"n":N,"r":R,"images":{"i,j":Mat, ...}} with all n^2
// 1-based keys present.
Json linmap_to_json(const LinMap& m);
LinMap linmap_from_json(const Json& j);

// Subspace: {"field":F,"l":L,"basis":[Mat, ...]}.
Json subspace_to_json(const FieldDesc& f, int l, const std::vector<Mat>& basis);
std::pair<std::vector<Mat>, int> subspace_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Json certificate_to_json(const StructureCertificate& c);
StructureCertificate certificate_from_json(const Json& j, const FieldDesc& f,
                                           int n);
Json jordan_split_to_json(const JordanSplit& s);
Json jordan_form_to_json(const JordanCanonicalForm& s);
Json dzp_certificate_to_json(const DzpCertificate& c);
DzpCertificate dzp_certificate_from_json(const Json& j, const FieldDesc& f,
                                         int n);
Json trivial_mult_form_to_json(const TrivialMultForm& t);
Json small_codomain_to_json(const SmallCodomainForm& s);
Json promotion_to_json(const PromotionReport& p);

/// Parses a whole document, translating parse errors into InputError.
Json parse_json(const std::string& text);

}  // namespace zpp
