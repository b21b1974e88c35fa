#pragma once

// JSON reports for the command-line front end. Keys are sorted (std::map
// backed json), rationals are "p/q" strings and floating-point values are
// 12-significant-digit scientific strings, so identical inputs give
// byte-identical output.

#include <json.hpp>
#include <string>
#include <vector>

#include "g2kit/classifier.hpp"
#include "g2kit/g2pipeline.hpp"
#include "g2kit/numgeom.hpp"

namespace g2kit {

using Json = nlohmann::json;

struct Report {
  Json body;
  bool pass = true;
};

Json to_json(const Rational& q);
Json to_json(const Form& a);
Json to_json(const QMatrix& m);
Json to_json(const QVector& v);
Json to_json(const std::vector<EigenvalueEntry>& spectrum);
Json to_json(const ChecklistItem& item);
Json to_json(const num::Vec& v);

Report decompose_report(const Form& a);
Report lemma_report(const EigenTriple& m, const Rational& mu);
Report values_report(const Rational& mu);
Report kernels_report();
Report det_e2_report(const Rational& b, const Rational& mu);
Report group_report(const G2Report& r);
Report kahler_report(const num::ChartConfig& cfg, const num::KahlerRun& run);
Report theorem1_report(const num::ChartConfig& cfg, const num::Theorem1Run& run);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& j);

}  // namespace g2kit
