#include "emcg/io.hpp"

#include <limits>

#include "emcg/error.hpp"

namespace emcg::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, "JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    bad(std::string("field '") + what + "' has the wrong type");
  }
}

Json big_to_json(const sl2z::BigInt& x) {
  if (x <= std::numeric_limits<std::int64_t>::max() && x >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(x);
  return x.str();
}

sl2z::BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return sl2z::BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return sl2z::BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      bad("bad integer string");
    }
  }
  bad("matrix entries must be integers");
}

std::vector<std::vector<int>> int_rows(const Json& j) {
  if (!j.is_array()) bad("rows must be an array");
  std::vector<std::vector<int>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) bad("each row must be an array");
    std::vector<int> row;
    for (const auto& e : r) {
      if (!e.is_number_integer()) bad("entries must be integers");
      row.push_back(e.get<int>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json group_field(const cls::GroupField& f) {
  if (!f.is_known()) return nullptr;
  return std::string(cls::to_string(f.group->name));
}

cls::GroupField group_field_from(const Json& j, const Json& reasons, const char* key) {
  const Json& v = field(j, key);
  if (v.is_null()) {
    std::string reason;
    if (reasons.is_object() && reasons.contains(key)) reason = get<std::string>(reasons.at(key), key);
    return cls::GroupField::unknown(reason);
  }
  return cls::GroupField::known(cls::group_name_from_string(get<std::string>(v, key)));
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(e.what());
  }
}

// ---------------------------------------------------------------- sl2z

Json to_json(const sl2z::UniModMat2& m) {
  return {{"rows", Json::array({Json::array({big_to_json(m.d1()), big_to_json(m.d2())}),
                                Json::array({big_to_json(m.d3()), big_to_json(m.d4())})})}};
}

sl2z::UniModMat2 unimod_from_json(const Json& j) {
  const Json& rows = field(j, "rows");
  if (!rows.is_array() || rows.size() != 2 || !rows[0].is_array() || !rows[1].is_array() || rows[0].size() != 2 ||
      rows[1].size() != 2)
    bad("'rows' must be a 2x2 array");
  return sl2z::UniModMat2(big_from_json(rows[0][0]), big_from_json(rows[0][1]), big_from_json(rows[1][0]),
                          big_from_json(rows[1][1]));
}

Json to_json(const sl2z::GenWord& w) {
  Json tokens = Json::array();
  for (const auto& t : w.tokens) tokens.push_back({t.gen == sl2z::Gen::V ? "V" : "T", t.exponent});
  return {{"tokens", tokens}, {"sign", w.central_sign}};
}

sl2z::GenWord word_from_json(const Json& j) {
  sl2z::GenWord w;
  w.central_sign = get<int>(field(j, "sign"), "sign");
  if (w.central_sign != 1 && w.central_sign != -1) bad("'sign' must be 1 or -1");
  const Json& tokens = field(j, "tokens");
  if (!tokens.is_array()) bad("'tokens' must be an array");
  for (const auto& t : tokens) {
    if (!t.is_array() || t.size() != 2) bad("each token must be [generator, exponent]");
    const auto g = get<std::string>(t[0], "generator");
    if (g != "V" && g != "T") bad("generator must be \"V\" or \"T\"");
    w.tokens.push_back({g == "V" ? sl2z::Gen::V : sl2z::Gen::T, get<std::int64_t>(t[1], "exponent")});
  }
  return w;
}

Json to_json(const sl2z::PresentationReport& r) {
  return {{"v4_is_identity", r.v4_is_identity},
          {"v2_commutes_with_t", r.v2_commutes_with_t},
          {"length_bound", r.length_bound},
          {"forms_checked", r.forms_checked},
          {"collisions", r.collisions},
          {"failures", r.failures},
          {"ok", r.ok()}};
}

// ---------------------------------------------------------------- f2

Json to_json(const f2::Matrix& m) { return {{"rows", m.rows()}}; }

f2::Matrix f2_matrix_from_json(const Json& j) { return f2::Matrix::from_rows(int_rows(field(j, "rows"))); }

Json to_json(const f2::QuadraticRefinement& q) {
  return {{"gram", q.space().gram().rows()}, {"values", q.basis_value_list()}};
}

f2::QuadraticRefinement refinement_from_json(const Json& j) {
  const Json& values = field(j, "values");
  if (!values.is_array()) bad("'values' must be an array");
  std::vector<int> v;
  for (const auto& e : values) v.push_back(get<int>(e, "values"));
  if (v.empty() || v.size() % 2 != 0) bad("'values' must have even positive length");
  const auto space = j.contains("gram") ? f2::SymplecticSpace(f2::Matrix::from_rows(int_rows(j.at("gram"))))
                                        : f2::SymplecticSpace::standard(static_cast<int>(v.size() / 2));
  return f2::QuadraticRefinement(space, std::span<const int>(v));
}

// ---------------------------------------------------------------- geometry

Json to_json(const geom::SignedPermMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) entries.push_back({i, m.row(i).col, m.row(i).sign});
  return {{"size", m.size()}, {"entries", entries}};
}

geom::SignedPermMatrix signed_perm_from_json(const Json& j) {
  const auto size = get<std::size_t>(field(j, "size"), "size");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != size) bad("'entries' must list one entry per row");
  std::vector<geom::SignedEntry> image(size, {size, 0});
  std::vector<bool> seen(size, false);
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3) bad("each entry must be [row, col, sign]");
    const auto row = get<std::size_t>(e[0], "row");
    if (row >= size || seen[row]) bad("row index out of range or repeated");
    seen[row] = true;
    image[row] = {get<std::size_t>(e[1], "col"), get<int>(e[2], "sign")};
  }
  return geom::SignedPermMatrix(std::move(image));
}

Json to_json(const geom::HpAction& h) {
  return {{"rows", Json::array({Json::array({h.m[0][0], h.m[0][1]}), Json::array({h.m[1][0], h.m[1][1]})})}};
}

geom::HpAction hp_action_from_json(const Json& j) {
  const auto rows = int_rows(field(j, "rows"));
  if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2) bad("'rows' must be 2x2");
  geom::HpAction h;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) h.m[i][k] = rows[i][k];
  return h;
}

Json to_json(const geom::ProductMapDescriptor& d) {
  return {{"swaps_factors", d.swaps_factors},
          {"first_block_det", d.first_block_det},
          {"second_block_det", d.second_block_det},
          {"p", d.p},
          {"q", d.q}};
}

// ---------------------------------------------------------------- groups

Json to_json(const htpy::FinAbGroup& g) { return {{"rank", g.free_rank()}, {"torsion", g.torsion()}}; }

htpy::FinAbGroup fin_ab_from_json(const Json& j) {
  return htpy::FinAbGroup(get<int>(field(j, "rank"), "rank"),
                          get<std::vector<std::int64_t>>(field(j, "torsion"), "torsion"));
}

Json to_json(const grp::MulTableGroup& g) {
  return {{"order", g.order()}, {"identity", g.identity()}, {"table", g.table()}};
}

grp::MulTableGroup table_group_from_json(const Json& j) {
  return grp::MulTableGroup(get<std::vector<std::vector<std::size_t>>>(field(j, "table"), "table"),
                            get<std::size_t>(field(j, "identity"), "identity"));
}

// ---------------------------------------------------------------- classification

Json to_json(const cls::ClassificationResult& r) {
  Json reasons = Json::object();
  if (!r.image.is_known()) reasons["image"] = r.image.unknown_reason;
  if (!r.kernel.is_known()) reasons["kernel"] = r.kernel.unknown_reason;
  if (!r.total.is_known()) reasons["total"] = r.total.unknown_reason;
  if (!r.splits_reason.empty()) reasons["splits"] = r.splits_reason;
  Json citations = Json::array();
  for (auto c : r.citations) citations.push_back(std::string(cls::citation_tag(c)));
  return {{"image", group_field(r.image)},
          {"kernel", group_field(r.kernel)},
          {"total", group_field(r.total)},
          {"splits", r.splits ? Json(*r.splits) : Json(nullptr)},
          {"reasons", reasons},
          {"citations", citations},
          {"notes", r.notes}};
}

cls::ClassificationResult classification_from_json(const Json& j) {
  cls::ClassificationResult r;
  const Json reasons = j.contains("reasons") ? j.at("reasons") : Json::object();
  r.image = group_field_from(j, reasons, "image");
  r.kernel = group_field_from(j, reasons, "kernel");
  r.total = group_field_from(j, reasons, "total");
  const Json& splits = field(j, "splits");
  if (!splits.is_null()) r.splits = get<bool>(splits, "splits");
  if (reasons.contains("splits")) r.splits_reason = get<std::string>(reasons.at("splits"), "splits");
  for (const auto& c : field(j, "citations")) r.citations.push_back(cls::citation_from_tag(get<std::string>(c, "citations")));
  if (j.contains("notes")) r.notes = get<std::vector<std::string>>(j.at("notes"), "notes");
  return r;
}

Json to_json(const cls::ExactSequence& s) {
  Json orders = Json::array();
  for (const auto& o : s.orders) orders.push_back(o ? Json(*o) : Json(nullptr));
  Json citations = Json::array();
  for (auto c : s.citations) citations.push_back(std::string(cls::citation_tag(c)));
  return {{"label", s.label},
          {"terms", s.terms},
          {"orders", orders},
          {"order_consistent", s.order_consistent ? Json(*s.order_consistent) : Json(nullptr)},
          {"splits", s.splits ? Json(*s.splits) : Json(nullptr)},
          {"citations", citations}};
}

Json to_json(const cls::CrossValidation& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"ok", v.ok()}, {"checks", checks}};
}

}  // namespace emcg::io
