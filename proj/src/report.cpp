#include "arrangeclass/report.hpp"

#include <algorithm>
#include <sstream>

#include "arrangeclass/sigs.hpp"

namespace arrangeclass {

namespace {

std::vector<std::size_t> spread(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) return {};
  if (k >= n) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t i = k == 1 ? 0 : j * (n - 1) / (k - 1);
    if (out.empty() || out.back() != i) out.push_back(i);
  }
  return out;
}

std::vector<LatticeClassReport> group_by_lattice(const OmegaList& omega,
                                                 const std::vector<std::size_t>& reps) {
  std::vector<LatticeClassReport> classes;
  for (std::size_t i : reps) {
    const IncidenceLattice lat = lattice_of(omega.at(i));
    CanonicalLattice canon = canonical_form(lat);
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const LatticeClassReport& c) { return c.lattice == canon; });
    if (it == classes.end()) {
      LatticeClassReport c;
      c.lattice = std::move(canon);
      c.projective_oracle = structured_group_oracle(lat, GroupMode::Projective);
      c.affine_oracle = structured_group_oracle(lat, GroupMode::Affine);
      classes.push_back(std::move(c));
      it = classes.end() - 1;
    }
    it->members.push_back(i);
  }
  std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
    return x.lattice.rows < y.lattice.rows;
  });
  return classes;
}

void check_groups(const OmegaList& omega, LatticeClassReport& c, const ProfileOptions& opts) {
  for (GroupMode mode : {GroupMode::Affine, GroupMode::Projective}) {
    const auto& oracle = mode == GroupMode::Affine ? c.affine_oracle : c.projective_oracle;
    std::optional<InvariantProfile> expected;
    if (oracle) expected = invariant_profile(structured_group_presentation(*oracle), opts);
    std::optional<InvariantProfile> first;
    for (std::size_t i : c.members) {
      InvariantProfile p = invariant_profile(presentation(omega.at(i), mode), opts);
      if (expected && !(p == *expected)) c.oracle_agrees = false;
      if (!first) {
        first = std::move(p);
      } else if (!(p == *first)) {
        c.groups_agree = false;
      }
    }
  }
}

std::string join_groups(const SignatureReport& row, bool projective) {
  std::string out;
  for (const auto& c : row.lattices) {
    const auto& g = projective ? c.projective_oracle : c.affine_oracle;
    if (!out.empty()) out += "; ";
    out += g ? g->to_string() : "?";
  }
  return out.empty() ? "-" : out;
}

}  // namespace

const std::vector<Signature>& extended_signatures() {
  static const std::vector<Signature> sigs = {
      Signature::parse("2^13 3^3 4^1"), Signature::parse("2^13 3^5"),
      Signature::parse("2^16 3^2 4^1"), Signature::parse("2^16 3^4"),
      Signature::parse("2^19 3^3"),
  };
  return sigs;
}

bool is_extended(const Signature& sig) {
  const auto& ext = extended_signatures();
  return std::find(ext.begin(), ext.end(), sig) != ext.end();
}

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Classified: return "classified";
    case RowStatus::Structured: return "structured";
    case RowStatus::Excluded: return "excluded";
    case RowStatus::Skipped: return "skipped";
  }
  return "?";
}

bool SignatureReport::theorem_holds() const {
  return std::all_of(lattices.begin(), lattices.end(), [](const auto& c) { return c.groups_agree; });
}

bool SignatureReport::oracle_holds() const {
  return std::all_of(lattices.begin(), lattices.end(), [](const auto& c) { return c.oracle_agrees; });
}

OmegaList load_or_enumerate(const Signature& sig, const PipelineOptions& opts, EnumerateStats* stats) {
  if (opts.cache) {
    if (auto cached = load_omega_cache(*opts.cache, sig)) return std::move(*cached);
  }
  OmegaList omega = enumerate_omega(sig, opts.enumerate, stats);
  if (opts.cache) save_omega_cache(*opts.cache, omega);
  return omega;
}

SignatureReport process_signature(const Signature& sig, const PipelineOptions& opts) {
  SignatureReport row;
  row.signature = sig;
  row.lines = sig.lines();
  if (is_extended(sig) && !opts.extended) {
    row.status = RowStatus::Skipped;
    row.note = "needs --extended";
    return row;
  }
  const OmegaList omega = load_or_enumerate(sig, opts);
  row.omega = omega.size();
  if (omega.empty()) {
    row.note = "no wiring diagram";
    row.similarity = 0;
    return row;
  }
  std::vector<std::size_t> reps;
  if (sig.multiple_points() <= 2) {
    row.status = RowStatus::Structured;
    reps = spread(omega.size(), opts.samples);
  } else {
    const SimilarityClassification cls = classify(omega);
    row.similarity = cls.size();
    reps = cls.representatives();
  }
  row.lattices = group_by_lattice(omega, reps);
  if (opts.groups) {
    for (auto& c : row.lattices) check_groups(omega, c, opts.profile);
    row.groups_checked = true;
  }
  return row;
}

ClassificationReport pipeline(int lines, const PipelineOptions& opts) {
  ClassificationReport report;
  for (const SignatureVerdict& v : classify_signatures(lines)) {
    if (!v.admissible) {
      SignatureReport row;
      row.lines = lines;
      row.signature = v.signature;
      row.status = RowStatus::Excluded;
      row.note = v.reason;
      report.rows.push_back(std::move(row));
      continue;
    }
    report.rows.push_back(process_signature(v.signature, opts));
  }
  return report;
}

std::string ClassificationReport::to_tsv() const {
  std::ostringstream out;
  out << "lines\tsignature\tstatus\tomega\tsimilarity\tlattices\tprojective\taffine\ttheorem\toracle\tnote\n";
  for (const auto& r : rows) {
    const bool ran = r.status == RowStatus::Classified || r.status == RowStatus::Structured;
    out << r.lines << '\t' << r.signature.to_string() << '\t' << to_string(r.status) << '\t';
    out << (ran ? std::to_string(r.omega) : "-") << '\t';
    out << (r.similarity ? std::to_string(*r.similarity) : "-") << '\t';
    out << (ran ? std::to_string(r.lattices.size()) : "-") << '\t';
    out << join_groups(r, true) << '\t' << join_groups(r, false) << '\t';
    if (r.groups_checked) {
      out << (r.theorem_holds() ? "ok" : "FAIL") << '\t' << (r.oracle_holds() ? "ok" : "FAIL");
    } else {
      out << "-\t-";
    }
    out << '\t' << (r.note.empty() ? "-" : r.note) << '\n';
  }
  return out.str();
}

std::string ClassificationReport::summary() const {
  std::ostringstream out;
  std::size_t classified = 0, excluded = 0, skipped = 0, failures = 0;
  for (const auto& r : rows) {
    switch (r.status) {
      case RowStatus::Excluded: ++excluded; break;
      case RowStatus::Skipped: ++skipped; break;
      default: ++classified;
    }
    if (r.groups_checked && (!r.theorem_holds() || !r.oracle_holds())) ++failures;
  }
  out << classified << " signatures processed, " << excluded << " excluded, " << skipped
      << " skipped\n";
  for (const auto& r : rows) {
    if (r.status != RowStatus::Classified || r.omega == 0) continue;
    out << "  " << r.signature.to_string() << ": " << r.omega << " classes, "
        << (r.similarity ? *r.similarity : 0) << " similarity classes, " << r.lattices.size()
        << " lattices\n";
  }
  out << (failures == 0 ? "lattice determines the group profiles in every case\n"
                        : std::to_string(failures) + " signatures with group disagreements\n");
  return out.str();
}

bool ClassificationReport::theorem_holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const SignatureReport& r) {
    return !r.groups_checked || (r.theorem_holds() && r.oracle_holds());
  });
}

}  // namespace arrangeclass
