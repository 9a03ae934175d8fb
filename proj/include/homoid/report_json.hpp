#pragma once

#include <vector>

#include "json.hpp"

#include "homoid/cancellativity.hpp"
#include "homoid/divisibility.hpp"
#include "homoid/inversion.hpp"
#include "homoid/series.hpp"
#include "homoid/towers.hpp"

namespace homoid::json {

using document = nlohmann::ordered_json;

// {"truncation": d, "coefficients": [c0, ..., cd]}
document to_json(TruncatedSeries const& s);
// Throws ValidationError on anything but the exact schema above.
TruncatedSeries series_from_json(document const& doc);

// {"height": n, "stages": [[w, ...], ...], "top_mcm": [w, ...]}
document to_json(Presentation const& p, Tower const& t);

document to_json(Presentation const& p, std::vector<Element> const& set);
document to_json(InversionReport const& r);
document to_json(Presentation const& p, CancellationReport const& r);
document to_json(Presentation const& p, ConditionLReport const& r);

}  // namespace homoid::json
