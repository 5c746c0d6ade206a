#include "amptk/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace amptk {

void Dataset::recount() {
  n_pos = 0;
  n_neg = 0;
  for (const auto& r : records) (r.label == 1 ? n_pos : n_neg)++;
}

DatasetRegistry DatasetRegistry::builtin() {
  DatasetRegistry reg;
  auto add = [&](const char* name, long total, long pos, long neg) {
    reg.entries[name].push_back({total, pos, neg});
  };
  add("acp_mlacp", 585, 398, 187);
  add("aip_antiinfam", 2124, 1261, 863);
  add("amp_antibp2", 1993, 994, 999);
  add("cpp_mlcpp", 492, 246, 246);
  add("hem_hemopi", 1478, 739, 739);
  add("isp_il10pred", 1903, 1165, 738);
  add("pip_pipel", 1104, 582, 522);
  add("acp_mlacp", 1242, 848, 394);
  add("aip_antiinfam", 1750, 875, 875);
  add("amp_antibp2", 3228, 2395, 833);
  return reg;
}

const std::vector<DatasetRegistry::Sizes>* DatasetRegistry::find(
    const std::string& name) const {
  auto it = entries.find(name);
  return it == entries.end() ? nullptr : &it->second;
}

std::string validate_sequence(const std::string& raw) {
  if (raw.empty()) throw ValidationError("empty sequence");
  std::string seq;
  seq.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    char c = static_cast<char>(
        std::toupper(static_cast<unsigned char>(raw[i])));
    if (residue_index(c) < 0) {
      throw ValidationError("illegal residue '" + std::string(1, c) +
                                "' at index " + std::to_string(i),
                            static_cast<long>(i));
    }
    seq.push_back(c);
  }
  return seq;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty() && cur.back() == '\r') cur.pop_back();
  if (!cur.empty()) lines.push_back(std::move(cur));
  return lines;
}

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c);
  });
}

// Validates a raw sequence for a named record; rewraps alphabet failures
// with the record id and a 1-based position.
std::string validate_record_sequence(const std::string& raw,
                                     const std::string& id) {
  try {
    return validate_sequence(raw);
  } catch (const ValidationError& e) {
    if (e.index >= 0) {
      char bad = static_cast<char>(
          std::toupper(static_cast<unsigned char>(raw[e.index])));
      throw ValidationError("record '" + id + "': illegal residue '" +
                                std::string(1, bad) + "' at position " +
                                std::to_string(e.index + 1),
                            e.index);
    }
    throw ValidationError("record '" + id + "': " + e.what());
  }
}

void check_unique_id(std::set<std::string>& seen, const std::string& id) {
  if (!seen.insert(id).second)
    throw ValidationError("duplicate record id '" + id + "'");
}

}  // namespace

std::vector<PeptideRecord> parse_fasta(const std::string& text) {
  std::vector<PeptideRecord> records;
  std::set<std::string> seen;

  const auto lines = split_lines(text);
  bool have_entry = false;
  std::string id, raw;
  int label = 0;
  std::size_t header_line = 0;

  auto flush = [&]() {
    if (!have_entry) return;
    if (raw.empty())
      throw ParseError("empty sequence for record '" + id + "' (header at line " +
                       std::to_string(header_line) + ")");
    records.push_back({id, validate_record_sequence(raw, id), label});
  };

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (is_blank(line)) continue;
    if (line[0] == '>') {
      flush();
      std::string header = line.substr(1);
      auto bar = header.rfind('|');
      std::string token = bar == std::string::npos ? "" : header.substr(bar + 1);
      if (token != "0" && token != "1")
        throw ParseError("line " + std::to_string(i + 1) +
                         ": header lacks a trailing |0 or |1 label token");
      id = header.substr(0, bar);
      while (!id.empty() && std::isspace(static_cast<unsigned char>(id.back())))
        id.pop_back();
      if (id.empty())
        throw ParseError("line " + std::to_string(i + 1) + ": empty record id");
      check_unique_id(seen, id);
      label = token == "1" ? 1 : 0;
      raw.clear();
      have_entry = true;
      header_line = i + 1;
    } else {
      if (!have_entry)
        throw ParseError("line " + std::to_string(i + 1) +
                         ": sequence data before any '>' header");
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) raw.push_back(c);
    }
  }
  flush();
  return records;
}

std::vector<PeptideRecord> parse_labeled_csv(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty CSV: missing header row");

  std::vector<std::string> cols;
  {
    std::stringstream ss(lines[0]);
    std::string f;
    while (std::getline(ss, f, ',')) cols.push_back(f);
  }
  const std::vector<std::string> want = {"id", "sequence", "label"};
  for (const auto& c : want)
    if (std::find(cols.begin(), cols.end(), c) == cols.end())
      throw ParseError("CSV header missing column '" + c + "'");
  if (cols != want)
    throw ParseError("CSV header must be exactly 'id,sequence,label'");

  std::vector<PeptideRecord> records;
  std::set<std::string> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (is_blank(lines[i])) continue;
    std::vector<std::string> f;
    std::stringstream ss(lines[i]);
    std::string part;
    while (std::getline(ss, part, ',')) f.push_back(part);
    if (f.size() != 3)
      throw ParseError("line " + std::to_string(i + 1) + ": expected 3 fields, got " +
                       std::to_string(f.size()));
    if (f[2] != "0" && f[2] != "1")
      throw ValidationError("line " + std::to_string(i + 1) + ": label '" + f[2] +
                            "' outside {0,1}");
    check_unique_id(seen, f[0]);
    records.push_back({f[0], validate_record_sequence(f[1], f[0]),
                       f[2] == "1" ? 1 : 0});
  }
  return records;
}

std::string to_labeled_csv(const std::vector<PeptideRecord>& records) {
  std::string out = "id,sequence,label\n";
  for (const auto& r : records) {
    out += r.id;
    out += ',';
    out += r.sequence;
    out += ',';
    out += r.label == 1 ? "1\n" : "0\n";
  }
  return out;
}

std::string to_fasta(const std::vector<PeptideRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += '>';
    out += r.id;
    out += r.label == 1 ? "|1\n" : "|0\n";
    out += r.sequence;
    out += '\n';
  }
  return out;
}

Dataset make_dataset(std::string name, std::vector<PeptideRecord> records) {
  Dataset ds;
  ds.name = std::move(name);
  ds.records = std::move(records);
  ds.recount();
  return ds;
}

Dataset load_dataset(const std::string& name, const std::string& path,
                     const DatasetRegistry& registry) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open dataset file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });

  std::vector<PeptideRecord> records;
  if (ext == "csv")
    records = parse_labeled_csv(text);
  else if (ext == "fasta" || ext == "fa" || ext == "faa")
    records = parse_fasta(text);
  else
    throw IoError("unsupported dataset extension '." + ext + "' for " + path);

  Dataset ds = make_dataset(name, std::move(records));
  if (const auto* rows = registry.find(name)) {
    bool matched = false;
    for (const auto& r : *rows)
      if (r.total == static_cast<long>(ds.records.size()) &&
          r.n_pos == ds.n_pos && r.n_neg == ds.n_neg)
        matched = true;
    if (!matched) {
      std::string expect;
      for (const auto& r : *rows) {
        if (!expect.empty()) expect += " or ";
        expect += std::to_string(r.total) + " (" + std::to_string(r.n_pos) +
                  "," + std::to_string(r.n_neg) + ")";
      }
      ds.warnings.push_back(
          "registry size mismatch for '" + name + "': file has " +
          std::to_string(ds.records.size()) + " (" + std::to_string(ds.n_pos) +
          "," + std::to_string(ds.n_neg) + "), registry lists " + expect);
    }
  }
  return ds;
}

}  // namespace amptk
