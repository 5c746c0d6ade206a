#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "amptk/errors.hpp"
#include "amptk/sequence.hpp"
#include "amptk/types.hpp"

namespace amptk {

// One numeric index value per canonical residue, in alphabet order.
struct PropertyTable {
  std::string id;
  std::array<double, kAlphabetSize> values{};

  double operator[](char residue) const {
    return values[static_cast<std::size_t>(residue_index(residue))];
  }
  // Zero mean / unit population-variance copy over the 20 residues.
  PropertyTable standardized() const;
};

// File format: line 1 = table id, lines 2..21 = `<residue>\t<value>`.
PropertyTable load_property_table(const std::string& text);
PropertyTable load_property_table_file(const std::string& path);

struct SparseConfig {
  int max_len = 100;  // pad/truncate length for one-hot stacking
};

struct PseAacConfig {
  int lambda = 5;
  double weight = 0.05;
  std::vector<PropertyTable> properties;  // required when lambda > 0
};

struct FourierConfig {
  PropertyTable table;  // residue -> signal value (EIIP by default)
  int n_fft = 128;      // power of two
  bool normalize_by_length = true;
};

struct Block {
  std::string name;
  Index offset = 0;
  Index width = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockSchema {
  std::vector<Block> blocks;

  Index total_width() const;
  const Block& find(std::string_view name) const;

  friend bool operator==(const BlockSchema&, const BlockSchema&) = default;
};

struct FeatureMatrix {
  Matrix rows;                       // n_samples x n_features
  BlockSchema schema;
  std::vector<std::string> row_ids;  // aligned with rows
  IntVector labels;                  // aligned with rows
};

Vector encode_sparse(std::string_view seq, const SparseConfig& cfg);
Vector encode_aac(std::string_view seq);
Vector encode_pseaac(std::string_view seq, const PseAacConfig& cfg);
Vector encode_physicochemical(std::string_view seq,
                              const std::vector<PropertyTable>& tables);
Vector encode_fourier(std::string_view seq, const FourierConfig& cfg);

// In-place iterative radix-2 transform; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& x);

enum class EncoderKind { Sparse, Aac, PseAac, Physchem, Fourier };

const char* encoder_name(EncoderKind k);
EncoderKind encoder_from_name(std::string_view name);

struct EncoderConfigs {
  SparseConfig sparse;
  PseAacConfig pseaac;
  std::vector<PropertyTable> physchem;
  FourierConfig fourier;
};

// Concatenates the enabled encodings in the fixed block order
// sparse, aac, pseaac, physchem, fourier. Row order follows the dataset.
FeatureMatrix encode_dataset(const Dataset& ds, const EncoderConfigs& configs,
                             const std::vector<EncoderKind>& enabled);

// CSV interchange: header `id,label,<block>_<index>,...`; an optional
// trailing `provenance` column marks GAN-balanced exports.
std::string feature_matrix_to_csv(const FeatureMatrix& fm,
                                  const std::vector<std::string>* provenance = nullptr);
FeatureMatrix feature_matrix_from_csv(const std::string& text,
                                      std::vector<std::string>* provenance = nullptr);

}  // namespace amptk
