#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "arrangeclass/enumerate.hpp"
#include "arrangeclass/groupcmp.hpp"
#include "arrangeclass/lattice.hpp"
#include "arrangeclass/similarity.hpp"

namespace arrangeclass {

/// Signatures whose enumeration and classification take hours; the pipeline
/// skips them unless asked.
const std::vector<Signature>& extended_signatures();
bool is_extended(const Signature& sig);

struct PipelineOptions {
  std::optional<std::filesystem::path> cache;
  EnumerateOptions enumerate;
  ProfileOptions profile;
  bool extended = false;
  bool groups = true;
  /// Representatives examined per signature with at most two multiple points.
  std::size_t samples = 8;
};

struct LatticeClassReport {
  CanonicalLattice lattice;
  /// Indices into the signature's ω list of the similarity-class
  /// representatives with this lattice.
  std::vector<std::size_t> members;
  std::optional<StructuredGroup> projective_oracle;
  std::optional<StructuredGroup> affine_oracle;
  /// All members have equal profiles in both modes.
  bool groups_agree = true;
  /// Profiles match the oracle groups where those exist.
  bool oracle_agrees = true;
};

enum class RowStatus { Classified, Structured, Excluded, Skipped };
const char* to_string(RowStatus s);

struct SignatureReport {
  int lines = 0;
  Signature signature;
  RowStatus status = RowStatus::Classified;
  std::string note;
  std::size_t omega = 0;
  std::optional<std::size_t> similarity;
  std::vector<LatticeClassReport> lattices;
  bool groups_checked = false;

  bool theorem_holds() const;
  bool oracle_holds() const;
};

struct ClassificationReport {
  std::vector<SignatureReport> rows;

  std::string to_tsv() const;
  std::string summary() const;
  bool theorem_holds() const;
};

SignatureReport process_signature(const Signature& sig, const PipelineOptions& opts);

/// Every admissible signature for the given number of lines, plus one row
/// per signature excluded by the filters.
ClassificationReport pipeline(int lines, const PipelineOptions& opts);

/// Loads ω from the cache when possible, otherwise enumerates and stores it.
OmegaList load_or_enumerate(const Signature& sig, const PipelineOptions& opts,
                            EnumerateStats* stats = nullptr);

}  // namespace arrangeclass
