#include "veronese/serialization.hpp"

#include <sstream>

namespace veronese {

Json to_json(const Partition& lambda) {
  Json a = Json::array();
  for (int v : lambda.parts()) a.push_back(v);
  return a;
}

Json to_json(const SchurExpansion& e) {
  Json terms = Json::array();
  for (const auto& [lambda, m] : e.terms()) terms.push_back({{"lambda", to_json(lambda)}, {"mult", m.str()}});
  return {{"n", e.n()},
          {"degree", e.degree()},
          {"terms", terms},
          {"N", total_multiplicity(e).str()},
          {"c", complexity(e).str()}};
}

Json to_json(const RatioTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"d", r.d},
                    {"numerator", r.numerator.str()},
                    {"denominator", r.denominator.str()},
                    {"ratio", to_string(r.ratio)}});
  Json j = {{"theorem", t.theorem}, {"p", t.p}, {"b", t.b}, {"n", t.n}};
  if (t.theorem == "t2p") j["mu"] = to_json(t.mu);
  j["limit"] = to_string(t.limit);
  j["rows"] = rows;
  return j;
}

Json to_json(const PatternReport& r) {
  Json j = {{"kind", r.kind}, {"path", r.path}, {"p", r.p},     {"b", r.b},
            {"d", r.d},       {"n", r.n},       {"partitions", r.partitions.str()}};
  if (r.literal_count) j["literal_count"] = r.literal_count->str();
  if (r.direct_count) j["direct_count"] = r.direct_count->str();
  if (r.molds) j["molds"] = r.molds->str();
  if (r.kind == "twin") {
    j["B"] = to_string(r.B);
    j["lambda1_range"] = {r.lambda1_min, r.lambda1_max};
  }
  j["sample_ok"] = r.sample_ok;
  return j;
}

Json to_json(const CheckReport& r) {
  return {{"ok", r.ok}, {"checks", r.checks}, {"failures", r.failures}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

std::string expansion_csv(const SchurExpansion& e) {
  std::string out = csv_row({"row", "lambda", "mult"});
  for (const auto& [lambda, m] : e.terms()) out += csv_row({"term", lambda.str(), m.str()});
  out += csv_row({"N", "", total_multiplicity(e).str()});
  out += csv_row({"c", "", complexity(e).str()});
  return out;
}

std::string expansion_pretty(const SchurExpansion& e) {
  std::ostringstream os;
  for (const auto& [lambda, m] : e.terms()) os << lambda.str() << " : " << m << '\n';
  os << "N = " << total_multiplicity(e) << "  c = " << complexity(e) << '\n';
  return os.str();
}

}  // namespace veronese
