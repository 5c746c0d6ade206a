#include "amptk/encoding.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace amptk {

PropertyTable PropertyTable::standardized() const {
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= kAlphabetSize;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= kAlphabetSize;
  double sd = std::sqrt(var);
  PropertyTable out;
  out.id = id + ":std";
  for (int i = 0; i < kAlphabetSize; ++i)
    out.values[i] = sd > 0.0 ? (values[i] - mean) / sd : 0.0;
  return out;
}

PropertyTable load_property_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.empty())
    throw ParseError("property table: missing id header line");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  PropertyTable table;
  table.id = line;
  std::array<bool, kAlphabetSize> seen{};
  int n = 0;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab != 1)
      throw ParseError("property table line " + std::to_string(lineno) +
                       ": expected '<residue>\\t<value>'");
    int idx = residue_index(line[0]);
    if (idx < 0)
      throw ParseError("property table line " + std::to_string(lineno) +
                       ": unknown residue '" + std::string(1, line[0]) + "'");
    if (seen[idx])
      throw ParseError("property table: duplicate residue '" +
                       std::string(1, line[0]) + "'");
    const char* first = line.data() + 2;
    const char* last = line.data() + line.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      throw ParseError("property table line " + std::to_string(lineno) +
                       ": non-numeric value '" + line.substr(2) + "'");
    if (!std::isfinite(value))
      throw ParseError("property table: non-finite value for '" +
                       std::string(1, line[0]) + "'");
    seen[idx] = true;
    table.values[idx] = value;
    ++n;
  }
  if (n != kAlphabetSize)
    for (int i = 0; i < kAlphabetSize; ++i)
      if (!seen[i])
        throw ParseError("property table '" + table.id +
                         "': missing residue '" + std::string(1, kAlphabet[i]) +
                         "'");
  return table;
}

PropertyTable load_property_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open property table: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return load_property_table(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Index BlockSchema::total_width() const {
  Index w = 0;
  for (const auto& b : blocks) w += b.width;
  return w;
}

const Block& BlockSchema::find(std::string_view name) const {
  for (const auto& b : blocks)
    if (b.name == name) return b;
  throw ConfigError("no block named '" + std::string(name) + "'");
}

Vector encode_sparse(std::string_view seq, const SparseConfig& cfg) {
  if (cfg.max_len < 1) throw ConfigError("sparse: max_len must be >= 1");
  Vector v = Vector::Zero(static_cast<Index>(kAlphabetSize) * cfg.max_len);
  const std::size_t n = std::min<std::size_t>(seq.size(),
                                              static_cast<std::size_t>(cfg.max_len));
  for (std::size_t i = 0; i < n; ++i)
    v[static_cast<Index>(i) * kAlphabetSize + residue_index(seq[i])] = 1.0;
  return v;
}

Vector encode_aac(std::string_view seq) {
  Vector v = Vector::Zero(kAlphabetSize);
  for (char c : seq) v[residue_index(c)] += 1.0;
  v /= static_cast<double>(seq.size());
  return v;
}

Vector encode_pseaac(std::string_view seq, const PseAacConfig& cfg) {
  const long len = static_cast<long>(seq.size());
  if (cfg.lambda < 0) throw ConfigError("pseaac: lambda must be >= 0");
  if (cfg.weight <= 0.0) throw ConfigError("pseaac: weight must be > 0");
  if (len <= cfg.lambda)
    throw ConfigError("pseaac: sequence length " + std::to_string(len) +
                      " must exceed lambda " + std::to_string(cfg.lambda));
  if (cfg.lambda > 0 && cfg.properties.empty())
    throw ConfigError("pseaac: lambda > 0 requires at least one property table");

  Vector out = Vector::Zero(kAlphabetSize + cfg.lambda);
  const Vector freq = encode_aac(seq);

  std::vector<PropertyTable> props;
  props.reserve(cfg.properties.size());
  for (const auto& t : cfg.properties) props.push_back(t.standardized());

  // theta_j: mean over i of the mean-squared standardized-property gap
  // between residues j apart.
  Vector theta = Vector::Zero(cfg.lambda);
  for (int j = 1; j <= cfg.lambda; ++j) {
    double acc = 0.0;
    for (long i = 0; i + j < len; ++i) {
      double corr = 0.0;
      for (const auto& p : props) {
        double d = p[seq[i]] - p[seq[i + j]];
        corr += d * d;
      }
      acc += corr / static_cast<double>(props.size());
    }
    theta[j - 1] = acc / static_cast<double>(len - j);
  }

  const double denom = 1.0 + cfg.weight * theta.sum();
  out.head(kAlphabetSize) = freq / denom;
  for (int j = 0; j < cfg.lambda; ++j)
    out[kAlphabetSize + j] = cfg.weight * theta[j] / denom;
  return out;
}

Vector encode_physicochemical(std::string_view seq,
                              const std::vector<PropertyTable>& tables) {
  if (tables.empty())
    throw ConfigError("physicochemical: at least one property table required");
  Vector out(static_cast<Index>(tables.size()));
  for (std::size_t k = 0; k < tables.size(); ++k) {
    double acc = 0.0;
    for (char c : seq) acc += tables[k][c];
    out[static_cast<Index>(k)] = acc / static_cast<double>(seq.size());
  }
  return out;
}

void fft_radix2(std::vector<std::complex<double>>& x) {
  const std::size_t n = x.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw ConfigError("fft size must be a nonzero power of two");
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * M_PI / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = x[i + k];
        std::complex<double> v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

Vector encode_fourier(std::string_view seq, const FourierConfig& cfg) {
  if (cfg.n_fft < 2 || (cfg.n_fft & (cfg.n_fft - 1)) != 0)
    throw ConfigError("fourier: n_fft must be a power of two >= 2");
  if (static_cast<long>(seq.size()) > cfg.n_fft)
    throw ConfigError("fourier: sequence length " + std::to_string(seq.size()) +
                      " exceeds n_fft " + std::to_string(cfg.n_fft) +
                      "; choose a larger n_fft");
  std::vector<std::complex<double>> x(static_cast<std::size_t>(cfg.n_fft),
                                      {0.0, 0.0});
  for (std::size_t i = 0; i < seq.size(); ++i) x[i] = cfg.table[seq[i]];
  fft_radix2(x);
  Vector mags(cfg.n_fft / 2 + 1);
  for (int k = 0; k <= cfg.n_fft / 2; ++k) mags[k] = std::abs(x[k]);
  if (cfg.normalize_by_length) mags /= static_cast<double>(seq.size());
  return mags;
}

const char* encoder_name(EncoderKind k) {
  switch (k) {
    case EncoderKind::Sparse: return "sparse";
    case EncoderKind::Aac: return "aac";
    case EncoderKind::PseAac: return "pseaac";
    case EncoderKind::Physchem: return "physchem";
    case EncoderKind::Fourier: return "fourier";
  }
  return "?";
}

EncoderKind encoder_from_name(std::string_view name) {
  if (name == "sparse") return EncoderKind::Sparse;
  if (name == "aac") return EncoderKind::Aac;
  if (name == "pseaac") return EncoderKind::PseAac;
  if (name == "physchem") return EncoderKind::Physchem;
  if (name == "fourier") return EncoderKind::Fourier;
  throw ConfigError("unknown encoder '" + std::string(name) + "'");
}

FeatureMatrix encode_dataset(const Dataset& ds, const EncoderConfigs& configs,
                             const std::vector<EncoderKind>& enabled) {
  if (enabled.empty()) throw ConfigError("encode_dataset: no encoders enabled");
  auto on = [&](EncoderKind k) {
    return std::find(enabled.begin(), enabled.end(), k) != enabled.end();
  };

  // Fixed block order regardless of the order the caller enabled them in.
  const EncoderKind order[] = {EncoderKind::Sparse, EncoderKind::Aac,
                               EncoderKind::PseAac, EncoderKind::Physchem,
                               EncoderKind::Fourier};

  auto encode_one = [&](EncoderKind k, std::string_view seq) -> Vector {
    switch (k) {
      case EncoderKind::Sparse: return encode_sparse(seq, configs.sparse);
      case EncoderKind::Aac: return encode_aac(seq);
      case EncoderKind::PseAac: return encode_pseaac(seq, configs.pseaac);
      case EncoderKind::Physchem:
        return encode_physicochemical(seq, configs.physchem);
      case EncoderKind::Fourier: return encode_fourier(seq, configs.fourier);
    }
    throw ConfigError("unreachable encoder kind");
  };

  FeatureMatrix fm;
  const Index n = static_cast<Index>(ds.records.size());

  // Widths are sequence-independent; build the schema up front.
  Index offset = 0;
  std::vector<EncoderKind> active;
  for (EncoderKind k : order) {
    if (!on(k)) continue;
    Index width = 0;
    switch (k) {
      case EncoderKind::Sparse:
        width = static_cast<Index>(kAlphabetSize) * configs.sparse.max_len;
        break;
      case EncoderKind::Aac: width = kAlphabetSize; break;
      case EncoderKind::PseAac:
        width = kAlphabetSize + configs.pseaac.lambda;
        break;
      case EncoderKind::Physchem:
        width = static_cast<Index>(configs.physchem.size());
        break;
      case EncoderKind::Fourier: width = configs.fourier.n_fft / 2 + 1; break;
    }
    fm.schema.blocks.push_back({encoder_name(k), offset, width});
    offset += width;
    active.push_back(k);
  }

  fm.rows.resize(n, offset);
  fm.labels.resize(n);
  fm.row_ids.reserve(ds.records.size());

  for (Index r = 0; r < n; ++r) {
    const PeptideRecord& rec = ds.records[static_cast<std::size_t>(r)];
    fm.row_ids.push_back(rec.id);
    fm.labels[r] = rec.label;
    Index col = 0;
    for (std::size_t b = 0; b < active.size(); ++b) {
      Vector v;
      try {
        v = encode_one(active[b], rec.sequence);
      } catch (const Error& e) {
        throw ConfigError("record '" + rec.id + "': " + e.what());
      }
      fm.rows.row(r).segment(col, v.size()) = v.transpose();
      col += v.size();
    }
  }
  return fm;
}

namespace {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

std::string feature_matrix_to_csv(const FeatureMatrix& fm,
                                  const std::vector<std::string>* provenance) {
  std::string out = "id,label";
  for (const auto& b : fm.schema.blocks)
    for (Index j = 0; j < b.width; ++j)
      out += "," + b.name + "_" + std::to_string(j);
  if (provenance) out += ",provenance";
  out += '\n';
  for (Index r = 0; r < fm.rows.rows(); ++r) {
    out += fm.row_ids[static_cast<std::size_t>(r)];
    out += ',';
    out += std::to_string(fm.labels[r]);
    for (Index c = 0; c < fm.rows.cols(); ++c) {
      out += ',';
      out += format_double(fm.rows(r, c));
    }
    if (provenance) {
      out += ',';
      out += (*provenance)[static_cast<std::size_t>(r)];
    }
    out += '\n';
  }
  return out;
}

FeatureMatrix feature_matrix_from_csv(const std::string& text,
                                      std::vector<std::string>* provenance) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("feature CSV: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::vector<std::string> cols;
  {
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) cols.push_back(f);
  }
  if (cols.size() < 3 || cols[0] != "id" || cols[1] != "label")
    throw ParseError("feature CSV: header must start with 'id,label'");

  bool has_prov = cols.back() == "provenance";
  const std::size_t feat_begin = 2;
  const std::size_t feat_end = cols.size() - (has_prov ? 1 : 0);

  FeatureMatrix fm;
  for (std::size_t c = feat_begin; c < feat_end; ++c) {
    auto us = cols[c].rfind('_');
    if (us == std::string::npos)
      throw ParseError("feature CSV: malformed feature column '" + cols[c] + "'");
    std::string block = cols[c].substr(0, us);
    if (fm.schema.blocks.empty() || fm.schema.blocks.back().name != block)
      fm.schema.blocks.push_back({block, static_cast<Index>(c - feat_begin), 0});
    fm.schema.blocks.back().width++;
  }

  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string part;
    while (std::getline(ss, part, ',')) f.push_back(part);
    if (f.size() != cols.size())
      throw ParseError("feature CSV row " + std::to_string(rows.size() + 2) +
                       ": field count mismatch");
    fm.row_ids.push_back(f[0]);
    labels.push_back(f[1] == "1" ? 1 : 0);
    if (f[1] != "0" && f[1] != "1")
      throw ValidationError("feature CSV: label '" + f[1] + "' outside {0,1}");
    std::vector<double> vals(feat_end - feat_begin);
    for (std::size_t c = feat_begin; c < feat_end; ++c) {
      double v = 0.0;
      auto [p, ec] = std::from_chars(f[c].data(), f[c].data() + f[c].size(), v);
      if (ec != std::errc() || p != f[c].data() + f[c].size())
        throw ParseError("feature CSV: non-numeric value '" + f[c] + "'");
      vals[c - feat_begin] = v;
    }
    rows.push_back(std::move(vals));
    if (has_prov && provenance) provenance->push_back(f.back());
  }

  fm.rows.resize(static_cast<Index>(rows.size()),
                 static_cast<Index>(feat_end - feat_begin));
  fm.labels.resize(static_cast<Index>(labels.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      fm.rows(static_cast<Index>(r), static_cast<Index>(c)) = rows[r][c];
    fm.labels[static_cast<Index>(r)] = labels[r];
  }
  return fm;
}

}  // namespace amptk
