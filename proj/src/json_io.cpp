#include "zpp/json_io.hpp"

namespace zpp {

namespace {

void expect_object(const Json& j, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected object");
}

const Json& get_key(const Json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end())
    throw InputError(std::string(what) + ": missing key \"" + key + "\"");
  return *it;
}

int get_int(const Json& j, const char* key, const char* what) {
  const Json& v = get_key(j, key, what);
  if (!v.is_number_integer())
    throw InputError(std::string(what) + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

mpq_class parse_rational_string(const std::string& s) {
  // strict "[-]digits[/digits]"; GMP's own parser is lenient about
  // whitespace, so validate the shape first
  bool seen_slash = false, digit_before = false, digit_after = false;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '-' && i == 0) continue;
    if (c == '/' && !seen_slash && digit_before) {
      seen_slash = true;
      continue;
    }
    if (c < '0' || c > '9')
      throw InputError("bad rational literal \"" + s + "\"");
    (seen_slash ? digit_after : digit_before) = true;
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw InputError("bad rational literal \"" + s + "\"");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw InputError("bad rational literal \"" + s + "\"");
  if (q.get_den() == 0) throw InputError("rational with zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON input");
  return j;
}

Json field_to_json(const FieldDesc& f) {
  Json j;
  if (f.kind() == FieldKind::PrimeField) {
    j["kind"] = "gf";
    j["p"] = f.modulus();
  } else {
    j["kind"] = "q";
  }
  return j;
}

FieldDesc field_from_json(const Json& j) {
  expect_object(j, "field");
  const Json& kind = get_key(j, "kind", "field");
  if (kind == "gf") {
    const Json& p = get_key(j, "p", "field");
    if (!p.is_number_unsigned() && !p.is_number_integer())
      throw InputError("field: \"p\" must be an integer");
    long long pv = p.get<long long>();
    if (pv < 2) throw InputError("field: p must be at least 2");
    return FieldDesc::gf(static_cast<std::uint64_t>(pv));
  }
  if (kind == "q") return FieldDesc::rationals();
  throw InputError("field: unknown kind");
}

Json scalar_to_json(const Scalar& s) {
  if (s.field().kind() == FieldKind::PrimeField) return s.gf_value();
  const mpq_class& q = s.rational_value();
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return q.get_num().get_si();
  return q.get_str();
}

Scalar scalar_from_json(const Json& j, const FieldDesc& f) {
  if (f.kind() == FieldKind::PrimeField) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
      throw InputError("GF(p) entry must be an integer");
    long long v = j.get<long long>();
    if (v < 0 || static_cast<std::uint64_t>(v) >= f.modulus())
      throw InputError("GF(p) entry out of range [0, p)");
    return Scalar::gf_residue(f, static_cast<std::uint64_t>(v));
  }
  if (j.is_number_integer() || j.is_number_unsigned())
    return Scalar::from_int(f, j.get<long long>());
  if (j.is_string())
    return Scalar::rational(parse_rational_string(j.get<std::string>()));
  throw InputError("rational entry must be an integer or \"num/den\" string");
}

Json mat_to_json(const Mat& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(i, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Mat mat_from_json(const Json& j, const FieldDesc& f) {
  expect_object(j, "matrix");
  int rows = get_int(j, "rows", "matrix");
  int cols = get_int(j, "cols", "matrix");
  if (rows < 0 || cols < 0) throw InputError("matrix: negative dimension");
  const Json& entries = get_key(j, "entries", "matrix");
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    throw InputError("matrix: entries must be an array of `rows` rows");
  Mat m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw InputError("matrix: row length mismatch");
    for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(row[c], f);
  }
  return m;
}

Json linmap_to_json(const LinMap& m) {
  Json j;
  j["field"] = field_to_json(m.field());
  j["n"] = m.n();
  j["r"] = m.r();
  Json images;
  for (int i = 0; i < m.n(); ++i)
    for (int jj = 0; jj < m.n(); ++jj) {
      std::string key =
          std::to_string(i + 1) + "," + std::to_string(jj + 1);
      images[key] = mat_to_json(m.image(i, jj));
    }
  j["images"] = std::move(images);
  return j;
}

LinMap linmap_from_json(const Json& j) {
  expect_object(j, "map");
  FieldDesc f = field_from_json(get_key(j, "field", "map"));
  int n = get_int(j, "n", "map");
  int r = get_int(j, "r", "map");
  if (n < 1) throw InputError("map: n must be >= 1");
  if (r < 1) throw InputError("map: r must be >= 1");
  const Json& images = get_key(j, "images", "map");
  expect_object(images, "map images");
  std::vector<Mat> mats;
  mats.reserve(static_cast<size_t>(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int jj = 1; jj <= n; ++jj) {
      std::string key = std::to_string(i) + "," + std::to_string(jj);
      auto it = images.find(key);
      if (it == images.end())
        throw InputError("map: missing image \"" + key + "\"");
      Mat m = mat_from_json(*it, f);
      if (m.rows() != r || m.cols() != r)
        throw InputError("map: image \"" + key + "\" is not r x r");
      mats.push_back(std::move(m));
    }
  if (images.size() != static_cast<size_t>(n) * n)
    throw InputError("map: unexpected extra image keys");
  return LinMap(f, n, r, std::move(mats));
}

Json subspace_to_json(const FieldDesc& f, int l,
                      const std::vector<Mat>& basis) {
  Json j;
  j["field"] = field_to_json(f);
  j["l"] = l;
  Json arr = Json::array();
  for (const Mat& m : basis) arr.push_back(mat_to_json(m));
  j["basis"] = std::move(arr);
  return j;
}

std::pair<std::vector<Mat>, int> subspace_from_json(const Json& j) {
  expect_object(j, "subspace");
  FieldDesc f = field_from_json(get_key(j, "field", "subspace"));
  int l = get_int(j, "l", "subspace");
  if (l < 1) throw InputError("subspace: l must be >= 1");
  const Json& arr = get_key(j, "basis", "subspace");
  if (!arr.is_array()) throw InputError("subspace: basis must be an array");
  std::vector<Mat> basis;
  for (const Json& mj : arr) {
    Mat m = mat_from_json(mj, f);
    if (m.rows() != l || m.cols() != l)
      throw InputError("subspace: basis matrix is not l x l");
    basis.push_back(std::move(m));
  }
  if (basis.empty()) basis.push_back(Mat(f, l, l));
  return {std::move(basis), l};
}

namespace {

Json witness_to_json(const Witness& w) {
  Json j;
  if (const auto* uw = std::get_if<UnitsWitness>(&w)) {
    j["type"] = "units";
    j["identity"] = uw->identity;
    j["i"] = uw->i + 1;
    j["j"] = uw->j + 1;
    if (uw->k >= 0) {
      j["k"] = uw->k + 1;
      j["l"] = uw->l + 1;
    }
    j["lhs"] = mat_to_json(uw->lhs);
    j["rhs"] = mat_to_json(uw->rhs);
  } else if (const auto* pw = std::get_if<PairWitness>(&w)) {
    j["type"] = "pair";
    j["A"] = mat_to_json(pw->a);
    j["B"] = mat_to_json(pw->b);
    j["side"] = pw->ba_side ? "BA" : "AB";
    j["double_zero"] = pw->double_zero;
    j["product"] = mat_to_json(pw->product);
  } else if (const auto* tw = std::get_if<TupleWitness>(&w)) {
    j["type"] = "tuple";
    Json arr = Json::array();
    for (const Mat& m : tw->inputs) arr.push_back(mat_to_json(m));
    j["inputs"] = std::move(arr);
    j["product"] = mat_to_json(tw->product);
  } else if (const auto* iw = std::get_if<IdempotentWitness>(&w)) {
    j["type"] = "idempotent";
    j["P"] = mat_to_json(iw->p);
    j["image"] = mat_to_json(iw->image);
    j["image_squared"] = mat_to_json(iw->image_squared);
  } else if (const auto* bw = std::get_if<BasisPairWitness>(&w)) {
    j["type"] = "basis_pair";
    j["i"] = bw->i;
    j["j"] = bw->j;
    j["product"] = mat_to_json(bw->product);
  }
  return j;
}

}  // namespace

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["mode"] = v.mode == CheckMode::Exact ? "exact" : "randomized";
  j["trials"] = v.trials;
  j["witness"] = v.witness ? witness_to_json(*v.witness) : Json(nullptr);
  return j;
}

Json certificate_to_json(const StructureCertificate& c) {
  Json j;
  j["S"] = mat_to_json(c.S);
  j["k"] = c.k;
  j["R1"] = mat_to_json(c.R1);
  j["phi0"] = c.phi0.r() > 0 ? linmap_to_json(c.phi0) : Json(nullptr);
  j["nu"] = c.nu;
  return j;
}

StructureCertificate certificate_from_json(const Json& j, const FieldDesc& f,
                                           int n) {
  expect_object(j, "certificate");
  Mat s = mat_from_json(get_key(j, "S", "certificate"), f);
  int k = get_int(j, "k", "certificate");
  Mat r1 = mat_from_json(get_key(j, "R1", "certificate"), f);
  const Json& phi0j = get_key(j, "phi0", "certificate");
  LinMap phi0 = phi0j.is_null() ? LinMap::zero_map(f, n, 0)
                                : linmap_from_json(phi0j);
  int nu = get_int(j, "nu", "certificate");
  return StructureCertificate{std::move(s), k, std::move(r1), std::move(phi0),
                              nu};
}

Json jordan_split_to_json(const JordanSplit& s) {
  Json j;
  j["P"] = mat_to_json(s.P);
  j["Q"] = mat_to_json(s.Q);
  j["h"] = linmap_to_json(s.h);
  j["g"] = linmap_to_json(s.g);
  return j;
}

Json jordan_form_to_json(const JordanCanonicalForm& s) {
  Json j;
  j["S"] = mat_to_json(s.S);
  j["k1"] = s.k1;
  j["k2"] = s.k2;
  j["t"] = s.t;
  return j;
}

Json dzp_certificate_to_json(const DzpCertificate& c) {
  Json j;
  j["S"] = mat_to_json(c.S);
  j["k1"] = c.k1;
  j["k2"] = c.k2;
  j["R1"] = mat_to_json(c.R1);
  j["R2"] = mat_to_json(c.R2);
  j["phi0"] = c.phi0.r() > 0 ? linmap_to_json(c.phi0) : Json(nullptr);
  return j;
}

DzpCertificate dzp_certificate_from_json(const Json& j, const FieldDesc& f,
                                         int n) {
  expect_object(j, "dzp certificate");
  Mat s = mat_from_json(get_key(j, "S", "dzp certificate"), f);
  int k1 = get_int(j, "k1", "dzp certificate");
  int k2 = get_int(j, "k2", "dzp certificate");
  Mat r1 = mat_from_json(get_key(j, "R1", "dzp certificate"), f);
  Mat r2 = mat_from_json(get_key(j, "R2", "dzp certificate"), f);
  const Json& phi0j = get_key(j, "phi0", "dzp certificate");
  LinMap phi0 = phi0j.is_null() ? LinMap::zero_map(f, n, 0)
                                : linmap_from_json(phi0j);
  return DzpCertificate{std::move(s), k1, k2, std::move(r1), std::move(r2),
                        std::move(phi0)};
}

Json trivial_mult_form_to_json(const TrivialMultForm& t) {
  Json j;
  j["S0"] = mat_to_json(t.S0);
  j["p"] = t.p;
  j["q"] = t.q;
  j["u"] = t.u;
  j["v"] = t.v;
  return j;
}

Json small_codomain_to_json(const SmallCodomainForm& s) {
  Json j;
  if (s.variant == SmallCodomainForm::Variant::ScalarInner) {
    j["variant"] = "scalar_inner";
    j["alpha"] = scalar_to_json(*s.alpha);
    j["S"] = mat_to_json(*s.S);
  } else {
    j["variant"] = "trivial_range";
  }
  return j;
}

Json promotion_to_json(const PromotionReport& p) {
  Json j;
  j["holds"] = p.holds;
  j["jordan"] = verdict_to_json(p.jordan);
  j["zpp"] = verdict_to_json(p.zpp);
  j["ring_hom"] = verdict_to_json(p.ring_hom);
  return j;
}

}  // namespace zpp
