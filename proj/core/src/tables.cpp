#include "geomgroup/tables.hpp"

#include <algorithm>
#include <array>

#include "notes.hpp"

namespace geomgroup {

namespace {

constexpr const char* kGammaNote =
    "the chord column of this table is headed Γ; the other band tables head "
    "the same column X";

std::string sign_display(const GroupRecord& r) {
  return r.signature.empty() ? "+" : r.signature;
}

std::string target_display(const GroupRecord& r) {
  return "C(" + std::to_string(r.clifford_target.first) + "," +
         std::to_string(r.clifford_target.second) + ")";
}

std::string chord_display(const GroupRecord& r) {
  if (r.chord.empty()) return "";
  std::string out = "(";
  for (std::size_t i = 0; i < r.chord.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(r.chord[i]);
  }
  out += ')';
  return out;
}

std::string beat_display(const GroupRecord& r) {
  if (!r.beat) return "";
  return std::to_string(r.beat->num) + "/" + std::to_string(r.beat->den);
}

std::vector<std::string> choir_row(const GroupRecord& r) {
  return {std::to_string(r.gen_count), target_display(r), r.pattern,
          sign_display(r)};
}

std::vector<std::string> band_row(const GroupRecord& r) {
  return {std::to_string(r.gen_count), target_display(r), r.pattern,
          sign_display(r),         std::to_string(r.disorder),
          chord_display(r),        beat_display(r)};
}

std::size_t utf8_length(std::string_view s) {
  std::size_t n = 0;
  for (char c : s)
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  return n;
}

}  // namespace

Table table_rows(const TaxonomyReport& report, int table_id) {
  if (report.dim != 3 || report.max_gens != 3)
    throw std::invalid_argument(
        "reference tables describe the dimension-3 taxonomy with at most 3 "
        "generators; run the enumeration at dim 3, max_gens 3");
  if (table_id < 1 || table_id > 10)
    throw std::invalid_argument("table id must be in 1..10, got " +
                                std::to_string(table_id));

  Table table;
  table.id = table_id;
  const std::vector<std::string> choir_header = {"n", "≅", "Choir", "Sign"};
  const std::vector<std::string> band_header = {"n", "≇", "Band", "Sign",
                                                "Φ", "X",  "B"};

  if (table_id == 1) {
    table.title = "choir groups and their traditional names";
    table.header = choir_header;
    table.header.push_back("Name");
    for (const GroupRecord& r : report.classes)
      if (r.verdict == GroupClass::choir) {
        auto row = choir_row(r);
        row.emplace_back(angelic_name(r.pattern));
        table.rows.push_back(std::move(row));
      }
  } else if (table_id <= 5) {
    const std::size_t mode = static_cast<std::size_t>(table_id - 2);
    if (mode >= report.modes.size())
      throw std::invalid_argument("the report has no mode " +
                                  std::to_string(mode));
    const ClassBlock& block = report.modes[mode];
    table.title = "mode " + std::to_string(mode) + " led by " +
                  report.classes[block.leader()].pattern;
    table.header = choir_header;
    for (std::size_t member : block.members)
      table.rows.push_back(choir_row(report.classes[member]));
    if (table_id == 3) table.footnotes.push_back(detail::kModeOneNote);
  } else if (table_id == 6) {
    table.title =
        "band groups arranged by signature (p,q), disorder Φ, chord X, and "
        "beat B";
    table.header = band_header;
    for (const GroupRecord& r : report.classes)
      if (r.verdict == GroupClass::band) table.rows.push_back(band_row(r));
  } else {
    const std::size_t rhythm = static_cast<std::size_t>(table_id - 7);
    if (rhythm >= report.rhythms.size())
      throw std::invalid_argument("the report has no rhythm " +
                                  std::to_string(rhythm + 1));
    const ClassBlock& block = report.rhythms[rhythm];
    table.title =
        "rhythm of " + report.classes[block.leader()].pattern;
    table.header = band_header;
    if (table_id == 7) table.header[5] = "Γ";
    for (std::size_t member : block.members)
      table.rows.push_back(band_row(report.classes[member]));
    table.footnotes.push_back(detail::kRhythmSingletonNote);
    if (table_id == 7) table.footnotes.push_back(kGammaNote);
  }
  return table;
}

std::string render_table(const Table& table) {
  std::vector<std::size_t> widths;
  widths.reserve(table.header.size());
  for (const std::string& h : table.header) widths.push_back(utf8_length(h));
  for (const auto& row : table.rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], utf8_length(row[i]));

  std::string out = "Table " + std::to_string(table.id) + ": " + table.title +
                    "\n";
  auto emit_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += " | ";
      out += cells[i];
      if (i + 1 < cells.size())
        out.append(widths[i] - utf8_length(cells[i]), ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  };
  emit_row(table.header);
  for (std::size_t i = 0; i < widths.size(); ++i) {
    if (i) out += "-+-";
    out.append(widths[i], '-');
  }
  out += '\n';
  for (const auto& row : table.rows) emit_row(row);
  for (const std::string& note : table.footnotes) out += "# " + note + "\n";
  return out;
}

std::string_view angelic_name(std::string_view pattern) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 9>
      names{{
          {"{±1}", "Seraphim"},
          {"E_a", "Cherubim"},
          {"E_ab", "Thrones"},
          {"E_abc", "Virtues"},
          {"E_a E_b", "Dominations"},
          {"E_a E_ab", "Powers"},
          {"E_ab E_ac", "Principalities"},
          {"E_a E_b E_c", "Archangels"},
          {"E_a E_ab E_ac", "Angels"},
      }};
  for (const auto& [key, name] : names)
    if (key == pattern) return name;
  return {};
}

}  // namespace geomgroup
