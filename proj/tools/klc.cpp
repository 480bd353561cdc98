// Command-line front end: multiplication tables, cells, characters,
// classification of transitive matrix modules and the verification suite.

#include <iostream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "klc/annotations.hpp"
#include "klc/basedring.hpp"
#include "klc/characters.hpp"
#include "klc/classifier.hpp"
#include "klc/render.hpp"
#include "klc/suite.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RingChoice {
  std::optional<int> n;
  std::string ring_file;
};

void add_ring_options(CLI::App* cmd, RingChoice& choice) {
  cmd->add_option("--n", choice.n, "Coxeter exponent n of D_{2n}")->check(CLI::Range(2, 1000));
  cmd->add_option("--ring-file", choice.ring_file, "based ring in the JSON ring format")
      ->check(CLI::ExistingFile);
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
}

int require_n(const RingChoice& choice) {
  if (!choice.n) throw UsageError("--n is required");
  return *choice.n;
}

// Q_n unless a ring file is given.
std::pair<std::string, klc::BasedRing> resolve_ring(const RingChoice& choice) {
  if (!choice.ring_file.empty()) {
    if (choice.n) throw UsageError("--n and --ring-file are mutually exclusive");
    return {"custom", klc::load_ring_file(choice.ring_file)};
  }
  const int n = require_n(choice);
  if (n < 3) throw UsageError("Q_n needs n >= 3");
  return {"Q" + std::to_string(n), klc::subquotient_qn(n)};
}

nlohmann::json meta(const std::string& command, const RingChoice& choice) {
  nlohmann::json m{{"tool", "klc"}, {"version", klc::kToolVersion}, {"command", command}};
  m["n"] = choice.n ? nlohmann::json(*choice.n) : nlohmann::json(nullptr);
  return m;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig combinatorics of dihedral groups and classification of "
               "transitive matrix modules over the subquotient rings Q_n"};
  app.require_subcommand(1);

  std::string format = "text";
  RingChoice choice;

  auto* ring_cmd = app.add_subcommand("ring", "print a multiplication table");
  add_ring_options(ring_cmd, choice);
  add_format_option(ring_cmd, format);
  bool full_kl = false, qn = false, an = false;
  auto* full_flag = ring_cmd->add_flag("--full-kl", full_kl, "full Kazhdan-Lusztig ring of D_{2n}");
  auto* qn_flag = ring_cmd->add_flag("--qn", qn, "subquotient ring Q_n (default)");
  auto* an_flag = ring_cmd->add_flag("--an", an, "subring A_n spanned by e and s");
  full_flag->excludes(qn_flag, an_flag);
  qn_flag->excludes(an_flag);

  auto* cells_cmd = app.add_subcommand("cells", "cells of the full ring and of Q_n");
  add_ring_options(cells_cmd, choice);
  add_format_option(cells_cmd, format);

  auto* chars_cmd = app.add_subcommand("characters", "exact character table of Q_n");
  add_ring_options(chars_cmd, choice);
  add_format_option(chars_cmd, format);

  auto* classify_cmd = app.add_subcommand("classify", "classify transitive matrix modules");
  add_ring_options(classify_cmd, choice);
  add_format_option(classify_cmd, format);
  std::optional<int> rank;
  std::optional<std::int64_t> bound;
  int max_rank = 6;
  std::vector<std::string> add_filters, drop_filters;
  std::string annotations_file;
  classify_cmd->add_option("--rank", rank, "only this rank")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--max-rank", max_rank, "largest rank considered")
      ->check(CLI::Range(1, 6));
  classify_cmd->add_option("--bound", bound, "hard bound on matrix entries")
      ->check(CLI::NonNegativeNumber);
  classify_cmd->add_option("--filter", add_filters, "enable a named filter");
  classify_cmd->add_option("--no-filter", drop_filters, "disable a named filter");
  classify_cmd->add_option("--annotations", annotations_file, "replacement annotation data")
      ->check(CLI::ExistingFile);

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant and regression suite");
  int max_n = 8;
  verify_cmd->add_option("--max-n", max_n, "largest n checked")->check(CLI::Range(3, 16));
  verify_cmd->add_option("--annotations", annotations_file, "replacement annotation data")
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  const bool structured = format == "structured";
  try {
    if (*ring_cmd) {
      klc::BasedRing ring;
      std::string which = full_kl ? "full-kl" : (an ? "an" : "qn");
      if (!choice.ring_file.empty()) {
        ring = resolve_ring(choice).second;
        which = "custom";
      } else {
        const int n = require_n(choice);
        if (full_kl) ring = klc::full_kl_ring(n);
        else if (n < 3) throw UsageError("Q_n and A_n need n >= 3");
        else ring = an ? klc::subring_an(n) : klc::subquotient_qn(n);
      }
      if (structured) {
        auto m = meta("ring", choice);
        m["ring_kind"] = which;
        emit({{"ring", klc::ring_to_json(ring)}, {"meta", m}});
      } else {
        std::cout << klc::render_multiplication_table(ring);
      }
      return 0;
    }

    if (*cells_cmd) {
      nlohmann::json out{{"meta", meta("cells", choice)}};
      if (choice.ring_file.empty()) {
        const int n = require_n(choice);
        const auto full = klc::full_kl_ring(n);
        const auto cells = klc::cells_of(full);
        if (structured) {
          out["full"] = {{"ring", klc::ring_to_json(full)}, {"cells", klc::cells_to_json(full, cells)}};
        } else {
          std::cout << "Kazhdan-Lusztig ring of D_" << 2 * n << "\n"
                    << klc::render_cells(full, cells) << "\n";
        }
        if (n < 3) {
          if (structured) emit(out);
          return 0;
        }
      }
      const auto [id, ring] = resolve_ring(choice);
      const auto cells = klc::cells_of(ring);
      if (structured) {
        out["ring"] = klc::ring_to_json(ring);
        out["cells"] = klc::cells_to_json(ring, cells);
        emit(out);
      } else {
        std::cout << "ring " << id << "\n" << klc::render_cells(ring, cells);
      }
      return 0;
    }

    if (*chars_cmd) {
      const auto [id, ring] = resolve_ring(choice);
      const auto table = klc::character_table(ring);
      if (structured) {
        emit({{"ring", klc::ring_to_json(ring)},
              {"characters", klc::characters_to_json(table)},
              {"meta", meta("characters", choice)}});
      } else {
        std::cout << "ring " << id << "\n" << klc::render_character_table(table);
      }
      return 0;
    }

    std::vector<klc::Annotation> annotations = klc::bundled_annotations();
    if (!annotations_file.empty()) annotations = klc::load_annotations_file(annotations_file);

    if (*classify_cmd) {
      klc::ClassifyOptions options;
      options.rank = rank;
      options.bound = bound;
      options.max_rank = max_rank;
      options.annotations = &annotations;
      for (const auto& f : add_filters) {
        klc::find_filter(f);
        options.filters.insert(f);
      }
      for (const auto& f : drop_filters) {
        if (klc::find_filter(f).always_on) throw UsageError("filter '" + f + "' cannot be disabled");
        options.filters.erase(f);
      }
      const auto [id, ring] = resolve_ring(choice);
      const auto report = klc::classify(id, ring, options);
      if (structured) {
        auto m = meta("classify", choice);
        m["filters"] = std::vector<std::string>(report.filters.begin(), report.filters.end());
        m["bound"] = report.bound;
        m["bound_exhausted"] = report.bound_exhausted;
        m["realized"] = report.realized_count();
        m["mismatches"] = report.mismatches;
        emit({{"ring", klc::ring_to_json(report.ring)},
              {"characters", klc::characters_to_json(report.table)},
              {"candidates", klc::candidates_to_json(report)},
              {"meta", m}});
      } else {
        std::cout << klc::render_classification(report);
      }
      return report.mismatches.empty() ? 0 : kExitFailure;
    }

    if (*verify_cmd) {
      const auto report = klc::run_verification_suite(max_n, annotations);
      std::cout << report.render();
      return report.ok() ? 0 : kExitFailure;
    }
  } catch (const UsageError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
