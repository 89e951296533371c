#pragma once

// JSON schemas shared by the CLI and the Python module. Every to_json has a
// matching from_json with from_json(to_json(x)) == x.
//
//   UniModMat2          {"rows": [[d1,d2],[d3,d4]]}       (entries beyond 64 bits as strings)
//   GenWord             {"tokens": [["V",1],["T",-3]], "sign": 1}
//   f2::Matrix          {"rows": [[0,1],[1,0]]}
//   QuadraticRefinement {"gram": [[0,1],[1,0]], "values": [1,1]}  ("gram" optional on input)
//   SignedPermMatrix    {"size": n, "entries": [[row, col, sign], ...]}
//   HpAction            {"rows": [[a,b],[c,d]]}
//   FinAbGroup          {"rank": r, "torsion": [..]}
//   MulTableGroup       {"order": n, "identity": e, "table": [[..]]}
//   ClassificationResult {"image": name|null, "kernel": ..., "total": ..., "splits": bool|null,
//                         "reasons": {field: text}, "citations": [tag], "notes": [..]}

#include <json.hpp>

#include "emcg/ambient_geom.hpp"
#include "emcg/classifier.hpp"
#include "emcg/f2_forms.hpp"
#include "emcg/homotopy_tables.hpp"
#include "emcg/sl2z.hpp"
#include "emcg/smallgrp.hpp"

namespace emcg::io {

using Json = nlohmann::json;

/// Throws Error(Parse) instead of nlohmann exceptions.
Json parse_json(std::string_view text);

Json to_json(const sl2z::UniModMat2& m);
sl2z::UniModMat2 unimod_from_json(const Json& j);

Json to_json(const sl2z::GenWord& w);
sl2z::GenWord word_from_json(const Json& j);

Json to_json(const f2::Matrix& m);
f2::Matrix f2_matrix_from_json(const Json& j);

Json to_json(const f2::QuadraticRefinement& q);
f2::QuadraticRefinement refinement_from_json(const Json& j);

Json to_json(const geom::SignedPermMatrix& m);
geom::SignedPermMatrix signed_perm_from_json(const Json& j);

Json to_json(const geom::HpAction& h);
geom::HpAction hp_action_from_json(const Json& j);

Json to_json(const geom::ProductMapDescriptor& d);

Json to_json(const htpy::FinAbGroup& g);
htpy::FinAbGroup fin_ab_from_json(const Json& j);

Json to_json(const grp::MulTableGroup& g);
grp::MulTableGroup table_group_from_json(const Json& j);

Json to_json(const cls::ClassificationResult& r);
cls::ClassificationResult classification_from_json(const Json& j);

Json to_json(const cls::ExactSequence& s);
Json to_json(const cls::CrossValidation& v);
Json to_json(const sl2z::PresentationReport& r);

}  // namespace emcg::io
