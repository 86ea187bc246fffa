#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "labelsem/classical.hpp"
#include "labelsem/hedge.hpp"
#include "labelsem/label.hpp"

namespace labelsem {

using json = nlohmann::json;

// Threshold: {"dist":"uniform","lo":0,"hi":3}
//            {"dist":"piecewise","knots":[[e,delta],...]}
ThresholdDist threshold_from_json(const json& j);
json threshold_to_json(const ThresholdDist& t);

// Metric: "euclidean" | "absolute-1d" | {"kind":"weighted-euclidean","weights":[...]}
Metric metric_from_json(const json& j);
json metric_to_json(const Metric& m);

// Prototype: {"interval":[lo,hi]} | {"points":[[...],[...]]}
PrototypeSet prototype_from_json(const json& j);
json prototype_to_json(const PrototypeSet& p);

// Label: {"name":..., "prototype":..., "metric":..., "threshold":...}
Label label_from_json(const json& j);
json label_to_json(const Label& l);

// Monotone map: {"kind":"linear","k":2.0} | {"kind":"affine","k":..,"b":..}
//               {"kind":"power","b":3.0,"k":2.0}
MonotoneFn monotone_fn_from_json(const json& j);

// One hedge: {"hedge":"quite"|"very"|"dilate"|"concentrate"|"rescale",
//             "f":{...}?, "k":scale?, "prototype":{...}?}
// or a bare alias string. "extremely" expands to two concentrations, so a
// single JSON value may contribute several chain elements.
std::vector<HedgeSpec> hedge_from_json(const json& j);

// A chain: array of hedge values (or one hedge value).
std::vector<HedgeSpec> hedge_chain_from_json(const json& j);

// Trapezoids serialize as [A,B,C,D].
Trapezoid trapezoid_from_json(const json& j);
json trapezoid_to_json(const Trapezoid& t);

}  // namespace labelsem
