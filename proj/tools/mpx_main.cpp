// mpx: build, transform and certify maniplexes from the command line.
//
// Exit codes: 0 success / verdict passed, 1 verdict failed, 2 malformed
// input or unusable arguments.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "maniplex/catalog.hpp"
#include "maniplex/extend.hpp"
#include "maniplex/io.hpp"
#include "maniplex/maniplex.hpp"
#include "maniplex/pipeline.hpp"
#include "maniplex/symmetry.hpp"
#include "maniplex/weights.hpp"

namespace {

using namespace maniplex;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitMalformed = 2;

// well-formed input that fails a required verdict (exit 1, not 2)
struct VerdictFail : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Maniplex load_valid(const std::string& path) {
  Maniplex m = read_mpx_file(path);
  const ValidationReport report = validate(m);
  if (!report.ok()) {
    std::cerr << path << ": not a valid maniplex\n";
    for (const std::string& f : report.failures) std::cerr << "  " << f << '\n';
    throw VerdictFail("input fails validation");
  }
  return m;
}

int cmd_validate(const std::string& path) {
  const Maniplex m = read_mpx_file(path);
  const ValidationReport r = validate(m);
  auto line = [](const char* name, bool ok) {
    std::cout << name << ": " << (ok ? "pass" : "FAIL") << '\n';
  };
  line("involutions", r.involutions);
  line("fixed-point-free", r.fixed_point_free);
  line("proper-colouring", r.proper_colouring);
  line("connected", r.connected);
  line("string-property", r.string_property);
  if (m.facet_labels()) line("facet-labels", r.facet_labels_consistent);
  for (const std::string& f : r.failures) std::cout << "  " << f << '\n';
  std::cout << (r.ok() ? "valid maniplex" : "NOT a maniplex") << '\n';
  return r.ok() ? kExitOk : kExitVerdictFail;
}

int cmd_info(const std::string& path) {
  const Maniplex m = read_mpx_file(path);
  std::cout << "rank " << m.rank() << '\n' << "flags " << m.num_flags() << '\n';
  const ValidationReport r = validate(m);
  std::cout << "valid " << (r.ok() ? "yes" : "no") << '\n';
  if (!r.ok()) return kExitVerdictFail;
  std::cout << "orientable " << (is_orientable(m) ? "yes" : "no") << '\n';
  for (Colour i = 0; i < m.rank(); ++i)
    std::cout << "faces " << i << " " << faces(m, i).num_faces << '\n';
  if (m.rank() == 3) {
    const auto type = schlafli_type(m);
    if (type)
      std::cout << "type {" << type->p << "," << type->q << "}\n";
    else
      std::cout << "type non-equivelar\n";
  }
  if (m.facet_labels())
    std::cout << "facet-label-bits " << m.facet_labels()->bits << '\n';
  return kExitOk;
}

int cmd_faces(const std::string& path, int colour) {
  const Maniplex m = load_valid(path);
  const FacePartition fp = faces(m, colour);
  std::cout << "faces " << colour << " " << fp.num_faces << '\n';
  return kExitOk;
}

int cmd_stg(const std::string& path) {
  const Maniplex m = load_valid(path);
  const SymmetryTypeGraph stg = symmetry_type_graph(m);
  std::cout << "orbits " << stg.num_orbits << '\n';
  for (Colour i = 0; i < m.rank(); ++i) {
    std::cout << "c " << i << " :";
    for (std::uint32_t o = 0; o < stg.num_orbits; ++o) {
      if (stg.semi_edge(i, o))
        std::cout << " S";
      else
        std::cout << ' ' << stg.target[static_cast<std::size_t>(i)][o];
    }
    std::cout << '\n';
  }
  const std::string label = stg_label(stg, m.rank());
  if (!label.empty()) std::cout << "label " << label << '\n';
  return kExitOk;
}

int cmd_stability(const std::string& path) {
  const Maniplex m = load_valid(path);
  const StabilityVerdict v = is_stable(m);
  std::cout << (v.stable ? "stable" : "unstable") << '\n'
            << "aut_order " << v.aut_order_base << '\n'
            << "aut_order_double_cover " << v.aut_order_cover << '\n';
  return v.stable ? kExitOk : kExitVerdictFail;
}

int cmd_cross(const std::string& mpx_path, const std::string& wgt_path,
              const std::string& out_path) {
  const Maniplex m = load_valid(mpx_path);
  const WeightFunction w = read_wgt_file(wgt_path);
  require_compatible(m, w);
  const Maniplex cover = cross_cover(m, w);
  write_mpx_file(out_path, cover);
  std::cout << "wrote " << out_path << " (" << cover.num_flags() << " flags)\n";
  return kExitOk;
}

int cmd_extend(const std::string& mpx_path, const std::string& colouring,
               const std::string& out_path, const std::string& emit_clr) {
  const Maniplex m = load_valid(mpx_path);
  Colouring c;
  if (colouring == "total")
    c = total_colouring(m);
  else if (colouring == "antipodal")
    c = antipodal_colouring(m);
  else
    c = read_clr_file(colouring);
  const Maniplex ext = extension(m, c);
  write_mpx_file(out_path, ext);
  if (!emit_clr.empty()) write_clr_file(emit_clr, c);
  std::cout << "wrote " << out_path << " (" << ext.num_flags() << " flags, "
            << (1u << c.num_colours) << " facets)\n";
  return kExitOk;
}

int cmd_double(const std::string& mpx_path, const std::string& out_path) {
  const Maniplex m = load_valid(mpx_path);
  const Maniplex cover = double_cover(m);
  write_mpx_file(out_path, cover);
  std::cout << "wrote " << out_path << " (" << cover.num_flags() << " flags)\n";
  return kExitOk;
}

int cmd_catalog_list() {
  for (const SeedSpec& s : seed_catalogue())
    std::cout << s.name << " type {" << s.type.p << "," << s.type.q << "} flags "
              << s.flags << '\n';
  return kExitOk;
}

int cmd_catalog_build(const std::string& name, const std::string& out_path) {
  const Maniplex m = build_seed(name);
  write_mpx_file(out_path, m);
  std::cout << "wrote " << out_path << " (" << m.num_flags() << " flags)\n";
  return kExitOk;
}

int cmd_theorem1(const TheoremOneOptions& options, const std::string& report_path) {
  const TheoremOneReport report = run_theorem1(options);
  std::cout << report_text(report);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw ParseError(0, "cannot open " + report_path + " for writing");
    out << report_json_text(report);
  }
  return report.ok ? kExitOk : kExitVerdictFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maniplex toolkit: cross-covers, extensions and stability certificates"};
  app.require_subcommand(1);

  std::string in_path, wgt_path, out_path, clr_spec, emit_clr, seed_name, report_path;
  int face_colour = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check the maniplex axioms");
  validate_cmd->add_option("file", in_path, "MPX input")->required();

  auto* info_cmd = app.add_subcommand("info", "summary of an MPX file");
  info_cmd->add_option("file", in_path, "MPX input")->required();

  auto* faces_cmd = app.add_subcommand("faces", "count i-faces");
  faces_cmd->add_option("file", in_path, "MPX input")->required();
  faces_cmd->add_option("-i,--colour", face_colour, "face colour")->required();

  auto* stg_cmd = app.add_subcommand("stg", "symmetry-type graph");
  stg_cmd->add_option("file", in_path, "MPX input")->required();

  auto* stability_cmd = app.add_subcommand("stability", "stability verdict");
  stability_cmd->add_option("file", in_path, "MPX input")->required();

  auto* cross_cmd = app.add_subcommand("cross", "cross-cover by a weight function");
  cross_cmd->add_option("mpx", in_path, "MPX input")->required();
  cross_cmd->add_option("wgt", wgt_path, "WGT input")->required();
  cross_cmd->add_option("-o,--out", out_path, "MPX output")->required();

  auto* extend_cmd = app.add_subcommand("extend", "colour-coded extension");
  extend_cmd->add_option("mpx", in_path, "MPX input")->required();
  extend_cmd
      ->add_option("--colouring", clr_spec, "total, antipodal, or a CLR v1 file path")
      ->required();
  extend_cmd->add_option("-o,--out", out_path, "MPX output")->required();
  extend_cmd->add_option("--emit-clr", emit_clr, "also write the colouring used");

  auto* double_cmd = app.add_subcommand("double", "canonical double cover");
  double_cmd->add_option("mpx", in_path, "MPX input")->required();
  double_cmd->add_option("-o,--out", out_path, "MPX output")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "seed maps");
  auto* catalog_list = catalog_cmd->add_subcommand("list", "list catalogued seeds");
  auto* catalog_build = catalog_cmd->add_subcommand("build", "build a seed");
  catalog_build->add_option("name", seed_name, "seed name")->required();
  catalog_build->add_option("-o,--out", out_path, "MPX output")->required();
  catalog_cmd->require_subcommand(1);

  TheoremOneOptions opts;
  std::string variants = "all";
  auto* theorem_cmd = app.add_subcommand(
      "theorem1", "certify the unstable 2-orbit family up to a rank");
  theorem_cmd->add_option("--seed", opts.seed, "catalogued seed name")
      ->default_val("hemicube");
  theorem_cmd->add_option("--max-rank", opts.max_rank, "largest rank to certify")
      ->required();
  theorem_cmd->add_option("--variants", variants, "all | antipodal-only")
      ->check(CLI::IsMember({"all", "antipodal-only"}));
  theorem_cmd->add_option("--max-flags", opts.max_flags,
                          "skip variants whose cross-cover exceeds this");
  theorem_cmd->add_option("--threads", opts.threads, "certification worker threads");
  theorem_cmd->add_option("--report", report_path, "write the JSON report here");
  theorem_cmd->add_option("--out-dir", opts.out_dir, "serialize certified covers here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (*validate_cmd) return cmd_validate(in_path);
    if (*info_cmd) return cmd_info(in_path);
    if (*faces_cmd) return cmd_faces(in_path, face_colour);
    if (*stg_cmd) return cmd_stg(in_path);
    if (*stability_cmd) return cmd_stability(in_path);
    if (*cross_cmd) return cmd_cross(in_path, wgt_path, out_path);
    if (*extend_cmd) return cmd_extend(in_path, clr_spec, out_path, emit_clr);
    if (*double_cmd) return cmd_double(in_path, out_path);
    if (*catalog_list) return cmd_catalog_list();
    if (*catalog_build) return cmd_catalog_build(seed_name, out_path);
    if (*theorem_cmd) {
      opts.variants = variants == "all" ? VariantMode::all : VariantMode::antipodal_only;
      return cmd_theorem1(opts, report_path);
    }
  } catch (const VerdictFail&) {
    return kExitVerdictFail;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitMalformed;
  }
  return kExitMalformed;
}
