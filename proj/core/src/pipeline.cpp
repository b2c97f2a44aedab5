#include "maniplex/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "maniplex/extend.hpp"
#include "maniplex/io.hpp"
#include "maniplex/weights.hpp"

namespace maniplex {

namespace {

constexpr std::uint64_t kSizeOverflow = ~std::uint64_t{0};

std::uint64_t saturating_shift(std::uint64_t value, std::uint64_t bits) {
  if (value == kSizeOverflow || bits >= 63) return kSizeOverflow;
  const std::uint64_t out = value << bits;
  return (out >> bits) == value ? out : kSizeOverflow;
}

// Facet and flag counts along an extension chain, computed arithmetically
// so budget decisions never require building oversized objects.
struct PredictedSizes {
  std::uint64_t flags = 0;
  std::uint64_t facets = 0;
  bool label_capacity_ok = true;
};

PredictedSizes predict_sizes(std::uint64_t seed_flags, std::uint64_t seed_facets,
                             const std::string& word) {
  PredictedSizes s{seed_flags, seed_facets, true};
  for (char step : word) {
    const std::uint64_t bits = (step == 'T') ? s.facets : s.facets / 2;
    if (bits > static_cast<std::uint64_t>(kMaxLabelBits)) s.label_capacity_ok = false;
    s.flags = saturating_shift(s.flags, bits);
    s.facets = bits >= 63 ? kSizeOverflow : (std::uint64_t{1} << bits);
  }
  return s;
}

int resolve_threads(int requested) {
  int threads = requested > 0 ? requested
                              : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (const char* env = std::getenv("MANIPLEX_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < threads) threads = cap;
  }
  return threads;
}

struct ChainNode {
  Maniplex m;
  WeightFunction w;
};

// extension chain nodes keyed by colouring word prefix ("" = the seed)
ChainNode extend_chain(const ChainNode& parent, char step) {
  const Colouring c = (step == 'T') ? total_colouring(parent.m)
                                    : antipodal_colouring(parent.m);
  return ChainNode{extension(parent.m, c), extend_weight(parent.m, c, parent.w)};
}

void certify_into(TheoremOneEntry& entry, const ChainNode& node, AutSearch mode,
                  const std::string& out_path) {
  const auto started = std::chrono::steady_clock::now();

  const ProperPairReport pair = verify_proper_pair(node.m, node.w, mode);
  entry.proper_pair = pair.verdict();
  entry.pair_regular = pair.regular;
  entry.pair_odd_even_walk = pair.odd_even_walk.has_value();
  entry.pair_cover_ok = pair.cover_nonorientable_maniplex;
  entry.pair_aut_consistent = pair.aut_consistent;
  entry.extension_aut_order = pair.aut_order;

  const Maniplex cover = cross_cover(node.m, node.w);
  entry.cert = certify_cover(cover, mode);
  entry.cover_flags = entry.cert.cover_flags;
  entry.double_cover_flags = entry.cert.double_cover_flags;

  entry.certified_ok = entry.proper_pair && entry.cert.valid_maniplex &&
                       entry.cert.non_orientable && entry.cert.orbits == 2 &&
                       entry.cert.stg == expected_stg_label(cover.rank()) &&
                       entry.cert.fully_transitive && !entry.cert.stable &&
                       entry.cert.stability_lower_bound_ok;

  if (!out_path.empty()) {
    write_mpx_file(out_path, cover);
    entry.mpx_path = out_path;
  }

  entry.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - started)
                      .count();
}

std::string cover_file_name(int rank, const std::string& word) {
  std::string name = "rank" + std::to_string(rank);
  name += word.empty() ? "_seed" : "_" + word;
  return name + "_cross.mpx";
}

}  // namespace

CoverCertificate certify_cover(const Maniplex& cover, AutSearch mode) {
  CoverCertificate cert;
  cert.cover_flags = cover.num_flags();
  cert.double_cover_flags = 2 * static_cast<std::uint64_t>(cover.num_flags());

  cert.valid_maniplex = validate(cover).ok();
  if (!cert.valid_maniplex) return cert;
  cert.non_orientable = !is_orientable(cover);

  const AutAnalysis analysis = analyze_automorphisms(cover, mode);
  cert.orbits = analysis.num_orbits;
  cert.aut_order = analysis.order;
  const SymmetryTypeGraph stg = symmetry_type_graph(cover, analysis);
  cert.stg = stg_label(stg, cover.rank());
  cert.fully_transitive = is_fully_transitive(stg).fully;

  if (cert.non_orientable) {
    const StabilityVerdict verdict = is_stable(cover, mode);
    cert.stable = verdict.stable;
    cert.aut_order_double = verdict.aut_order_cover;
    cert.stability_lower_bound_ok = verdict.aut_order_cover >= 2 * verdict.aut_order_base;
  }
  return cert;
}

std::string expected_stg_label(int rank) {
  std::string inner = "1";
  for (int i = 3; i < rank; ++i) inner += "," + std::to_string(i);
  return "2^" + std::to_string(rank) + "_{" + inner + "}";
}

std::vector<std::string> variant_words(int rank, VariantMode mode) {
  if (rank < 3) throw std::invalid_argument("variant words exist for rank >= 3");
  if (rank == 3) return {""};
  std::vector<std::string> words{"T"};
  for (int step = 5; step <= rank; ++step) {
    std::vector<std::string> next;
    for (const std::string& w : words) {
      if (mode == VariantMode::all) next.push_back(w + "T");
      next.push_back(w + "A");
    }
    words = std::move(next);
  }
  return words;
}

TheoremOneReport run_theorem1(const TheoremOneOptions& options) {
  if (options.max_rank < 3) throw std::invalid_argument("max rank must be >= 3");

  TheoremOneReport report;
  report.options = options;

  const Maniplex seed = build_seed(options.seed);
  const WeightFunction theta = vartheta(seed);
  const std::uint64_t seed_facets = count_facets(seed);

  if (!options.out_dir.empty()) std::filesystem::create_directories(options.out_dir);

  // Chain nodes for every within-budget prefix, built up front so the
  // certification jobs only read shared immutable data.
  std::map<std::string, ChainNode> chain;
  chain.emplace("", ChainNode{seed, theta});

  struct Job {
    std::size_t entry_index;
    const ChainNode* node;
    std::string out_path;
  };
  std::vector<Job> jobs;

  for (int rank = 3; rank <= options.max_rank; ++rank) {
    for (const std::string& word : variant_words(rank, options.variants)) {
      TheoremOneEntry entry;
      entry.rank = rank;
      entry.variant = word;

      const PredictedSizes sizes = predict_sizes(seed.num_flags(), seed_facets, word);
      entry.extension_flags = sizes.flags;
      entry.extension_facets = sizes.facets;
      entry.cover_flags = saturating_shift(sizes.flags, 2);  // k = 4
      entry.double_cover_flags = saturating_shift(entry.cover_flags, 1);

      if (!sizes.label_capacity_ok) {
        entry.skipped = true;
        entry.skip_reason = "budget: colouring exceeds " +
                            std::to_string(kMaxLabelBits) + " label bits";
      } else if (entry.cover_flags > options.max_flags) {
        entry.skipped = true;
        entry.skip_reason = "budget: cover needs " +
                            (entry.cover_flags == kSizeOverflow
                                 ? std::string("2^64+")
                                 : std::to_string(entry.cover_flags)) +
                            " flags > max " + std::to_string(options.max_flags);
      } else {
        // materialize the chain up to this word
        for (std::size_t len = 1; len <= word.size(); ++len) {
          const std::string prefix = word.substr(0, len);
          if (!chain.count(prefix))
            chain.emplace(prefix,
                          extend_chain(chain.at(word.substr(0, len - 1)), word[len - 1]));
        }
        const ChainNode& node = chain.at(word);
        entry.extension_flags = node.m.num_flags();
        entry.extension_facets = count_facets(node.m);
        std::string out_path;
        if (!options.out_dir.empty())
          out_path = (std::filesystem::path(options.out_dir) /
                      cover_file_name(rank, word))
                         .string();
        jobs.push_back(Job{report.entries.size(), &chain.at(word), out_path});
      }
      report.entries.push_back(std::move(entry));
    }
  }

  // Certification jobs are independent; entries are preallocated so the
  // report order never depends on scheduling.
  int threads = resolve_threads(options.threads);
  if (!jobs.empty() && static_cast<std::size_t>(threads) > jobs.size())
    threads = static_cast<int>(jobs.size());
  std::atomic<std::size_t> next_job{0};
  auto worker = [&] {
    while (true) {
      const std::size_t j = next_job.fetch_add(1);
      if (j >= jobs.size()) break;
      certify_into(report.entries[jobs[j].entry_index], *jobs[j].node,
                   options.aut_mode, jobs[j].out_path);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // pairwise non-isomorphism across the certified variants of each rank
  for (int rank = 4; rank <= options.max_rank; ++rank) {
    std::vector<const TheoremOneEntry*> at_rank;
    for (const TheoremOneEntry& e : report.entries)
      if (e.rank == rank && !e.skipped) at_rank.push_back(&e);
    for (std::size_t a = 0; a < at_rank.size(); ++a) {
      for (std::size_t b = a + 1; b < at_rank.size(); ++b) {
        NonIsomorphismRecord rec;
        rec.rank = rank;
        rec.variant_a = at_rank[a]->variant;
        rec.variant_b = at_rank[b]->variant;
        if (at_rank[a]->extension_facets != at_rank[b]->extension_facets ||
            at_rank[a]->cover_flags != at_rank[b]->cover_flags) {
          rec.method = "facet-count";
          rec.isomorphic = false;
        } else {
          rec.method = "full-isomorphism";
          const Maniplex ca = cross_cover(chain.at(at_rank[a]->variant).m,
                                          chain.at(at_rank[a]->variant).w);
          const Maniplex cb = cross_cover(chain.at(at_rank[b]->variant).m,
                                          chain.at(at_rank[b]->variant).w);
          rec.isomorphic = are_isomorphic(ca, cb).has_value();
        }
        report.non_isomorphism.push_back(std::move(rec));
      }
    }
  }

  report.variant_counts_ok = true;
  for (int rank = 3; rank <= options.max_rank; ++rank) {
    const std::size_t expected =
        options.variants == VariantMode::all
            ? (rank == 3 ? 1u : (std::size_t{1} << (rank - 4)))
            : 1u;
    if (variant_words(rank, options.variants).size() != expected)
      report.variant_counts_ok = false;
  }

  report.ok = report.variant_counts_ok;
  for (const TheoremOneEntry& e : report.entries)
    if (!e.skipped && !e.certified_ok) report.ok = false;
  for (const NonIsomorphismRecord& r : report.non_isomorphism)
    if (r.isomorphic) report.ok = false;

  return report;
}

std::string report_text(const TheoremOneReport& report) {
  std::ostringstream os;
  os << "theorem1 seed=" << report.options.seed
     << " max_rank=" << report.options.max_rank << " variants="
     << (report.options.variants == VariantMode::all ? "all" : "antipodal-only")
     << " max_flags=" << report.options.max_flags << '\n';
  for (const TheoremOneEntry& e : report.entries) {
    os << "rank " << e.rank << " variant "
       << (e.variant.empty() ? "(seed)" : e.variant) << ": ";
    if (e.skipped) {
      os << "SKIPPED(" << e.skip_reason << ")";
    } else {
      os << (e.certified_ok ? "CERTIFIED" : "FAILED") << " ext=" << e.extension_flags
         << " facets=" << e.extension_facets << " cover=" << e.cover_flags
         << " orbits=" << e.cert.orbits << " aut=" << e.cert.aut_order
         << " stg=" << e.cert.stg
         << " fully_transitive=" << (e.cert.fully_transitive ? "yes" : "no")
         << " stable=" << (e.cert.stable ? "yes" : "no")
         << " double_aut=" << e.cert.aut_order_double << " proper_pair="
         << (e.proper_pair ? "yes" : "no") << " [" << e.wall_ms << " ms]";
    }
    os << '\n';
  }
  for (const NonIsomorphismRecord& r : report.non_isomorphism)
    os << "rank " << r.rank << " variants " << r.variant_a << "/" << r.variant_b
       << ": " << (r.isomorphic ? "ISOMORPHIC" : "non-isomorphic") << " ("
       << r.method << ")\n";
  os << "variant counts " << (report.variant_counts_ok ? "ok" : "WRONG") << '\n';
  os << (report.ok ? "all certifications passed" : "certification FAILED") << '\n';
  return os.str();
}

std::string report_json_text(const TheoremOneReport& report) {
  nlohmann::ordered_json j;
  j["seed"] = report.options.seed;
  j["max_rank"] = report.options.max_rank;
  j["variants_mode"] =
      report.options.variants == VariantMode::all ? "all" : "antipodal-only";
  j["max_flags"] = report.options.max_flags;
  j["entries"] = nlohmann::ordered_json::array();
  for (const TheoremOneEntry& e : report.entries) {
    nlohmann::ordered_json je;
    je["rank"] = e.rank;
    je["variant"] = e.variant;
    je["status"] = e.skipped ? "SKIPPED" : (e.certified_ok ? "CERTIFIED" : "FAILED");
    if (e.skipped) je["skip_reason"] = e.skip_reason;
    je["extension_flags"] = e.extension_flags;
    je["extension_facets"] = e.extension_facets;
    je["cover_flags"] = e.cover_flags;
    je["double_cover_flags"] = e.double_cover_flags;
    if (!e.skipped) {
      je["proper_pair"] = e.proper_pair;
      je["pair_regular"] = e.pair_regular;
      je["pair_odd_even_walk"] = e.pair_odd_even_walk;
      je["pair_cover_ok"] = e.pair_cover_ok;
      je["pair_aut_consistent"] = e.pair_aut_consistent;
      je["extension_aut_order"] = e.extension_aut_order;
      je["orbits"] = e.cert.orbits;
      je["aut_order_cover"] = e.cert.aut_order;
      je["stg"] = e.cert.stg;
      je["fully_transitive"] = e.cert.fully_transitive;
      je["stable"] = e.cert.stable;
      je["aut_order_double_cover"] = e.cert.aut_order_double;
      je["wall_ms"] = e.wall_ms;
      if (!e.mpx_path.empty()) je["mpx_path"] = e.mpx_path;
    }
    j["entries"].push_back(std::move(je));
  }
  j["non_isomorphism"] = nlohmann::ordered_json::array();
  for (const NonIsomorphismRecord& r : report.non_isomorphism) {
    nlohmann::ordered_json jr;
    jr["rank"] = r.rank;
    jr["variant_a"] = r.variant_a;
    jr["variant_b"] = r.variant_b;
    jr["method"] = r.method;
    jr["isomorphic"] = r.isomorphic;
    j["non_isomorphism"].push_back(std::move(jr));
  }
  j["variant_counts_ok"] = report.variant_counts_ok;
  j["ok"] = report.ok;
  return j.dump(2) + "\n";
}

}  // namespace maniplex
