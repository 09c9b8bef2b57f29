// Command-line front end: arrangeclass <subcommand> [options].

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "arrangeclass/enumerate.hpp"
#include "arrangeclass/groupcmp.hpp"
#include "arrangeclass/lattice.hpp"
#include "arrangeclass/moves.hpp"
#include "arrangeclass/pi1.hpp"
#include "arrangeclass/render.hpp"
#include "arrangeclass/report.hpp"
#include "arrangeclass/sigs.hpp"
#include "arrangeclass/similarity.hpp"

using namespace arrangeclass;

namespace {

struct Common {
  std::string cache;
  double mem_gb = 0;
  bool extended = false;
};

PipelineOptions pipeline_options(const Common& c) {
  PipelineOptions opts;
  std::string cache = c.cache;
  if (cache.empty()) {
    if (const char* env = std::getenv("ARRANGECLASS_CACHE")) cache = env;
  }
  if (!cache.empty()) opts.cache = cache;
  double mem = c.mem_gb;
  if (mem <= 0) {
    if (const char* env = std::getenv("ARRANGECLASS_MEM_GB")) {
      try {
        mem = std::stod(env);
      } catch (const std::exception&) {
        throw InputError(std::string("ARRANGECLASS_MEM_GB is not a number: ") + env);
      }
    }
  }
  if (mem > 0) opts.enumerate.mem_gb = mem;
  opts.extended = c.extended;
  return opts;
}

void require_desk_scale(const Signature& sig, const Common& c) {
  if (is_extended(sig) && !c.extended) {
    throw InputError(sig.to_string() + " takes hours; pass --extended to run it");
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

GroupPresentation read_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return GroupPresentation::parse_plain(in);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out || !(out << text)) throw ResourceError("cannot write " + path);
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--cache", c.cache, "Directory for cached representative lists");
  cmd->add_option("--mem-gb", c.mem_gb, "Memory budget for the first-half table");
  cmd->add_flag("--extended", c.extended, "Allow the multi-hour signatures");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate and classify wiring diagrams of real line arrangements"};
  app.require_subcommand(1);
  Common common;

  int sig_lines = 0;
  bool sig_all = false;
  auto* sigs = app.add_subcommand("sigs", "Signatures admissible for a number of lines");
  sigs->add_option("--lines,-l", sig_lines, "Number of lines")->required();
  sigs->add_flag("--all", sig_all, "Also list excluded signatures with the reason");

  std::string en_sig, en_out;
  int en_p0 = 0;
  bool en_count = false;
  std::size_t en_samples = 0;
  std::uint64_t en_seed = 1;
  auto* enumerate = app.add_subcommand("enumerate", "Minimal representatives of the classes of W_S");
  enumerate->add_option("--sig,-s", en_sig, "Signature, e.g. \"2^6 3^3\"")->required();
  enumerate->add_option("--p0", en_p0, "Points in the first half (default: automatic)");
  enumerate->add_option("--out,-o", en_out, "Write the list to a file instead of stdout");
  enumerate->add_flag("--count", en_count, "Print only the counts");
  enumerate->add_option("--estimate", en_samples, "Estimate |W_S| from this many samples");
  enumerate->add_option("--seed", en_seed, "Sampling seed");
  add_common(enumerate, common);

  std::string cl_sig, cl_rels = "stmx";
  bool cl_table = false, cl_reps = false;
  auto* classify_cmd = app.add_subcommand("classify", "Similarity classes of a signature");
  classify_cmd->add_option("--sig,-s", cl_sig, "Signature")->required();
  classify_cmd->add_option("--rels", cl_rels, "Relations: letters from s t m x, or '-' for none");
  classify_cmd->add_flag("--table", cl_table, "Class counts for every subset of relations");
  classify_cmd->add_flag("--reps", cl_reps, "Print the class representatives");
  add_common(classify_cmd, common);

  std::string la_list, la_oracle;
  bool la_canon = false, la_graph = false;
  auto* lattice = app.add_subcommand("lattice", "Incidence lattice of a list");
  lattice->add_option("--list", la_list, "Lefschetz list, e.g. \"l=3 (1,2)(2,3)(1,2)\"")->required();
  lattice->add_flag("--canon", la_canon, "Canonical incidence matrix");
  lattice->add_flag("--graph", la_graph, "Graph of multiple points");
  lattice->add_option("--oracle", la_oracle, "Structured group for affine or projective mode");

  std::string pi_list, pi_mode = "affine", pi_format = "plain";
  std::size_t pi_skeleton = 0;
  bool pi_ascii = false;
  auto* pi1 = app.add_subcommand("pi1", "Presentation of the fundamental group");
  pi1->add_option("--list", pi_list, "Lefschetz list")->required();
  pi1->add_option("--mode", pi_mode, "affine or projective");
  pi1->add_option("--format", pi_format, "plain or gap");
  pi1->add_option("--skeleton", pi_skeleton, "Print the skeleton of this point instead");
  pi1->add_flag("--ascii", pi_ascii, "ASCII marks for --skeleton");

  std::string cmp_a, cmp_b, cmp_targets;
  int cmp_depth = 3;
  auto* compare = app.add_subcommand("compare", "Compare two presentations by invariants");
  compare->add_option("--a", cmp_a, "First presentation file")->required();
  compare->add_option("--b", cmp_b, "Second presentation file")->required();
  compare->add_option("--targets", cmp_targets, "Comma separated finite groups");
  compare->add_option("--lcs-depth", cmp_depth, "Lower central series depth (0 to skip)");

  std::string re_list, re_kind = "wiring", re_out;
  auto* render = app.add_subcommand("render", "SVG picture of a list");
  render->add_option("--list", re_list, "Lefschetz list")->required();
  render->add_option("--kind", re_kind, "wiring or multipoint");
  render->add_option("--out,-o", re_out, "Output file (default stdout)");

  int rp_lines = 0;
  std::string rp_sig, rp_out;
  bool rp_no_groups = false;
  auto* report = app.add_subcommand("report", "Full classification table as TSV");
  report->add_option("--lines,-l", rp_lines, "Number of lines");
  report->add_option("--sig,-s", rp_sig, "A single signature instead of all");
  report->add_option("--out,-o", rp_out, "TSV output file (default stdout)");
  report->add_flag("--no-groups", rp_no_groups, "Skip the fundamental group checks");
  add_common(report, common);

  std::string mv_list;
  auto* moves = app.add_subcommand("moves", "Class minimum and every move applicable to a list");
  moves->add_option("--list", mv_list, "Lefschetz list")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*sigs) {
      for (const auto& v : classify_signatures(sig_lines)) {
        if (v.admissible) {
          std::cout << v.signature.to_string() << '\n';
        } else if (sig_all) {
          std::cout << v.signature.to_string() << "\texcluded: " << v.reason << '\n';
        }
      }
    } else if (*enumerate) {
      const Signature sig = Signature::parse(en_sig);
      require_desk_scale(sig, common);
      PipelineOptions opts = pipeline_options(common);
      opts.enumerate.p0 = en_p0;
      EnumerateStats stats;
      const OmegaList omega = load_or_enumerate(sig, opts, &stats);
      if (en_samples > 0) {
        const SizeEstimate est = estimate_ws_size(omega, en_samples, en_seed);
        std::cout << "W_S estimate " << est.estimate << " (10^" << est.log10() << ") +- "
                  << est.std_error << " from " << est.samples << " samples\n";
      }
      if (en_count) {
        std::cout << "classes " << omega.size() << '\n';
        if (stats.dissections > 0) {
          std::cout << "p0 " << stats.p0 << "\nhalf_classes " << stats.half_classes
                    << "\ndissections " << stats.dissections << '\n';
        }
      } else if (en_samples == 0) {
        std::ostringstream text;
        write_omega(text, omega);
        write_text(en_out, text.str());
      }
    } else if (*classify_cmd) {
      const Signature sig = Signature::parse(cl_sig);
      require_desk_scale(sig, common);
      const OmegaList omega = load_or_enumerate(sig, pipeline_options(common));
      if (cl_table) {
        std::cout << "s t m x\tclasses\n";
        for (const auto& row : relation_table(omega)) {
          std::string marks;
          for (char c : row.relations.marks()) marks += std::string(1, c) + ' ';
          marks.pop_back();
          std::cout << marks << '\t' << row.classes << '\n';
        }
      } else {
        const auto cls = classify(omega, RelationSet::parse(cl_rels));
        std::cout << "classes " << omega.size() << "\nsimilarity " << cls.size() << '\n';
        if (cl_reps) {
          for (std::size_t i : cls.representatives()) std::cout << omega.at(i).to_string() << '\n';
        }
      }
    } else if (*lattice) {
      const LefschetzList list = LefschetzList::parse(la_list);
      if (!check_uip(list)) throw InputError("list does not have the unique intersection property");
      const IncidenceLattice lat = lattice_of(list);
      if (la_canon) {
        for (const auto& row : canonical_form(lat).rows) std::cout << row << '\n';
      } else if (la_graph) {
        const MultiPointGraph g = multipoint_graph(lat);
        for (std::size_t v = 0; v < g.points.size(); ++v) {
          std::cout << "point " << g.points[v] + 1 << " multiplicity " << g.multiplicities[v] << '\n';
        }
        for (const auto& e : g.edges) {
          std::cout << "edge " << g.points[e.u] + 1 << ' ' << g.points[e.v] + 1 << " line " << e.line << '\n';
        }
        std::cout << (g.acyclic() ? "acyclic" : "cyclic") << '\n';
      } else if (!la_oracle.empty()) {
        const auto g = structured_group_oracle(lat, parse_group_mode(la_oracle));
        std::cout << (g ? g->to_string() : "not determined") << '\n';
      } else {
        for (const auto& row : lat.matrix()) {
          for (auto v : row) std::cout << int{v};
          std::cout << '\n';
        }
      }
    } else if (*pi1) {
      const LefschetzList list = LefschetzList::parse(pi_list);
      if (pi_skeleton > 0) {
        std::cout << compute_skeleton(list, pi_skeleton).to_string(!pi_ascii) << '\n';
      } else {
        if (!check_uip(list)) throw InputError("list does not have the unique intersection property");
        const GroupPresentation p = presentation(list, parse_group_mode(pi_mode));
        if (pi_format == "plain") {
          std::cout << p.to_plain();
        } else if (pi_format == "gap") {
          std::cout << p.to_gap();
        } else {
          throw InputError("format must be 'plain' or 'gap'");
        }
      }
    } else if (*compare) {
      ProfileOptions opts;
      if (!cmp_targets.empty()) opts.targets = split_commas(cmp_targets);
      opts.lcs_depth = cmp_depth;
      const GroupPresentation a = read_presentation(cmp_a);
      const GroupPresentation b = read_presentation(cmp_b);
      const InvariantProfile pa = invariant_profile(a, opts);
      const InvariantProfile pb = invariant_profile(b, opts);
      std::cout << (pa == pb ? to_string(Verdict::Indistinguishable) : to_string(Verdict::Distinguished))
                << "\n# a\n" << pa.to_string() << "# b\n" << pb.to_string();
    } else if (*render) {
      const LefschetzList list = LefschetzList::parse(re_list);
      write_text(re_out, render_svg(list, parse_render_kind(re_kind)));
    } else if (*report) {
      PipelineOptions opts = pipeline_options(common);
      opts.groups = !rp_no_groups;
      ClassificationReport result;
      if (!rp_sig.empty()) {
        result.rows.push_back(process_signature(Signature::parse(rp_sig), opts));
      } else if (rp_lines > 0) {
        result = pipeline(rp_lines, opts);
      } else {
        throw InputError("report needs --lines or --sig");
      }
      write_text(rp_out, result.to_tsv());
      std::cerr << result.summary();
      if (!result.theorem_holds()) return 3;
    } else if (*moves) {
      const LefschetzList list = LefschetzList::parse(mv_list);
      const LefschetzList rep = equiv_class_min(list);
      std::cout << "min\t" << rep.to_string() << "\nclass size\t" << equiv_class_size(list) << '\n';
      if (check_uip(list)) {
        std::cout << "tau\t" << equiv_class_min(tau(rep)).to_string() << '\n';
        std::cout << "mu\t" << mu(rep).to_string() << '\n';
        for (const auto& s : sigma_class_targets(rep)) std::cout << "sigma\t" << s.to_string() << '\n';
      }
      for (const auto& m : triangle_windows(rep)) {
        std::cout << "triangle\tt=" << m.t << " i=" << m.i << " c=" << m.offset << ' '
                  << (m.direction == TriangleDirection::UpToDown ? "down" : "up") << '\t'
                  << m.result.to_string() << '\n';
      }
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource limit: out of memory\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
