#include "homoid/report_json.hpp"

#include "homoid/error.hpp"

namespace homoid::json {

document to_json(TruncatedSeries const& s) {
  document doc;
  doc["truncation"]   = s.truncation();
  doc["coefficients"] = s.coefficients();
  return doc;
}

TruncatedSeries series_from_json(document const& doc) {
  if (!doc.is_object() || doc.size() != 2 || !doc.contains("truncation")
      || !doc.contains("coefficients")) {
    throw ValidationError(
        "a series document has exactly the fields truncation and coefficients");
  }
  auto const& t = doc["truncation"];
  auto const& c = doc["coefficients"];
  if (!t.is_number_unsigned() || !c.is_array()) {
    throw ValidationError("malformed series document");
  }
  std::vector<std::int64_t> coefficients;
  for (auto const& x : c) {
    if (!x.is_number_integer()) {
      throw ValidationError("series coefficients must be integers");
    }
    coefficients.push_back(x.get<std::int64_t>());
  }
  if (coefficients.size() != t.get<std::size_t>() + 1) {
    throw ValidationError("coefficient count does not match truncation");
  }
  return TruncatedSeries(std::move(coefficients));
}

document to_json(Presentation const& p, std::vector<Element> const& set) {
  document doc = document::array();
  for (auto const& x : set) {
    doc.push_back(p.format(x.canonical));
  }
  return doc;
}

document to_json(Presentation const& p, Tower const& t) {
  document doc;
  doc["height"] = t.height();
  document stages = document::array();
  for (auto const& j : t.stages) {
    stages.push_back(to_json(p, j));
  }
  doc["stages"]  = std::move(stages);
  doc["top_mcm"] = to_json(p, t.top());
  return doc;
}

document to_json(InversionReport const& r) {
  document doc;
  doc["verdict"]      = r.pass ? "pass" : "fail";
  doc["presentation"] = r.name;
  doc["max_degree"]   = r.d_max;
  doc["growth"]       = to_json(r.growth);
  doc["skew"]         = to_json(r.skew);
  doc["product"]      = to_json(r.product);
  doc["first_failing_degree"]
      = r.first_failing_degree ? document(*r.first_failing_degree) : document();
  return doc;
}

document to_json(Presentation const& p, CancellationReport const& r) {
  document doc;
  doc["verdict"] = r.verdict == CancellationReport::Verdict::counterexample
                       ? "counterexample"
                       : "no-counterexample";
  doc["side"]       = to_string(r.side);
  doc["max_degree"] = r.d_max;
  if (r.witness) {
    auto const& w = *r.witness;
    document    wd;
    wd["side"]      = to_string(w.side);
    wd["generator"] = p.format(w.generator.canonical);
    wd["x"]         = p.format(w.x.canonical);
    wd["y"]         = p.format(w.y.canonical);
    wd["product"]   = p.format(w.product.canonical);
    doc["witness"]  = std::move(wd);
  } else {
    doc["witness"] = nullptr;
  }
  return doc;
}

document to_json(Presentation const& p, ConditionLReport const& r) {
  document doc;
  doc["verdict"] = r.verdict == ConditionLReport::Verdict::violated
                       ? "violated"
                       : "no-violation-found";
  doc["max_degree"] = r.d_max;
  document witnesses = document::array();
  for (auto const& w : r.witnesses) {
    witnesses.push_back(
        {{"subset", to_json(p, w.subset)}, {"minimal", to_json(p, w.minimal)}});
  }
  doc["witnesses"] = std::move(witnesses);
  document least   = document::array();
  for (auto const& l : r.least) {
    least.push_back(
        {{"subset", to_json(p, l.subset)}, {"minimal", p.format(l.lcm.canonical)}});
  }
  doc["single_minimal"] = std::move(least);
  document undetermined = document::array();
  for (auto const& j : r.undetermined) {
    undetermined.push_back(to_json(p, j));
  }
  doc["undetermined"] = std::move(undetermined);
  return doc;
}

}  // namespace homoid::json
