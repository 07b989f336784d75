#include "geomgroup/report_io.hpp"

#include <json.hpp>

namespace geomgroup {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_json(const GroupRecord& r) {
  ordered_json out;
  out["pattern"] = r.pattern;
  ordered_json gens = ordered_json::array();
  for (const SignedBlade& g : r.generators.generators())
    gens.push_back(to_string(g));
  out["generators"] = std::move(gens);
  out["n"] = r.gen_count;
  out["order"] = r.group_order();
  out["class"] = r.verdict == GroupClass::choir ? "choir" : "band";
  out["signature"] = r.signature;
  out["target"] = "C(" + std::to_string(r.clifford_target.first) + "," +
                  std::to_string(r.clifford_target.second) + ")";
  out["disorder"] = r.disorder;
  out["chord"] = r.chord;
  if (r.beat)
    out["beat"] = ordered_json{{"num", r.beat->num}, {"den", r.beat->den}};
  else
    out["beat"] = nullptr;
  return out;
}

ordered_json block_json(const TaxonomyReport& report, const ClassBlock& block,
                        bool with_mode) {
  ordered_json out;
  if (with_mode) out["mode"] = report.classes[block.leader()].gen_count;
  out["leader"] = report.classes[block.leader()].pattern;
  ordered_json members = ordered_json::array();
  for (std::size_t member : block.members)
    members.push_back(report.classes[member].pattern);
  out["members"] = std::move(members);
  return out;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const GroupRecord& r) {
  std::string chord;
  if (!r.chord.empty()) {
    chord = "(";
    for (std::size_t i = 0; i < r.chord.size(); ++i) {
      if (i) chord += ',';
      chord += std::to_string(r.chord[i]);
    }
    chord += ')';
  }
  std::string beat;
  if (r.beat)
    beat = std::to_string(r.beat->num) + "/" + std::to_string(r.beat->den);
  std::string out;
  out += csv_quote(r.pattern);
  out += ',' + std::to_string(r.gen_count);
  out += ',' + std::to_string(r.group_order());
  out += ',';
  out += r.verdict == GroupClass::choir ? "choir" : "band";
  out += ',' + csv_quote(r.signature);
  out += ",\"C(" + std::to_string(r.clifford_target.first) + "," +
         std::to_string(r.clifford_target.second) + ")\"";
  out += ',' + std::to_string(r.disorder);
  out += ',' + csv_quote(chord);
  out += ',' + beat;
  return out;
}

constexpr const char* kCsvHeader =
    "pattern,n,order,class,signature,target,disorder,chord,beat";

}  // namespace

std::string to_json(const ElementSet& set) {
  ordered_json out = ordered_json::array();
  for (const SignedBlade& e : set) out.push_back(to_string(e));
  return out.dump(2);
}

std::string to_json(const GroupRecord& record) {
  return record_json(record).dump(2);
}

std::string to_json(const TaxonomyReport& report) {
  ordered_json out;
  out["dimension"] = report.dim;
  out["max_generators"] = report.max_gens;
  out["counts"] = ordered_json{
      {"total", report.counts.total},
      {"choirs", report.counts.choirs},
      {"bands", report.counts.bands},
      {"isomorphism_classes", report.counts.isomorphism_classes},
  };
  ordered_json classes = ordered_json::array();
  for (const GroupRecord& r : report.classes) classes.push_back(record_json(r));
  out["classes"] = std::move(classes);
  ordered_json modes = ordered_json::array();
  for (const ClassBlock& block : report.modes)
    modes.push_back(block_json(report, block, true));
  out["modes"] = std::move(modes);
  ordered_json rhythms = ordered_json::array();
  for (const ClassBlock& block : report.rhythms)
    rhythms.push_back(block_json(report, block, false));
  out["rhythms"] = std::move(rhythms);
  out["notes"] = report.notes;
  return out.dump(2);
}

std::string to_csv(const GroupRecord& record) {
  return std::string(kCsvHeader) + "\n" + csv_row(record) + "\n";
}

std::string to_csv(const TaxonomyReport& report) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const GroupRecord& r : report.classes) {
    out += csv_row(r);
    out += '\n';
  }
  return out;
}

std::string to_text(const ElementSet& set) {
  std::string out = "{";
  bool first = true;
  for (const SignedBlade& e : set) {
    if (!first) out += ", ";
    out += to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace geomgroup
