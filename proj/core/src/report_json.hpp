#pragma once

// Internal shared serializer: BoundReport -> JSON object.  Used by the bounds
// and experiment translation units; the JSON library stays private to src/.

#include "json.hpp"
#include "qgs/bounds.hpp"
#include "qgs/format.hpp"

namespace qgs::detail {

inline nlohmann::json bound_report_json(const BoundReport& r) {
    nlohmann::json hyp = nlohmann::json::array();
    for (const HypothesisCheck& h : r.hypotheses)
        hyp.push_back({{"name", h.name}, {"ok", h.ok}, {"witness", h.witness}});
    return {{"bound_id", r.bound_id},
            {"k", r.k},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"constant", r.constant},
            {"ratio", r.ratio},
            {"exact_constant", r.exact_constant},
            {"hypotheses", hyp},
            {"verdict", verdict_name(r.verdict)},
            {"note", r.note}};
}

inline std::string bound_report_csv_row(const BoundReport& r) {
    return r.bound_id + "," + std::to_string(r.k) + "," + fmt_double(r.lhs) + "," + fmt_double(r.rhs) + "," +
           fmt_double(r.ratio) + "," + verdict_name(r.verdict) + "," + fmt_double(r.constant) + "," +
           (r.hypotheses_ok() ? "1" : "0");
}

}  // namespace qgs::detail
