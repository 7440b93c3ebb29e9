// nestkit command line front end: renders nest figures, runs dimension
// estimates and parameter sweeps, and verifies the toolkit against its
// built-in criteria.  Talks to the library exclusively through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nestkit.h"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

struct NestFlags {
  std::string kind = "centre";
  std::string base = "singleton";
  double alpha = 1.0;
  double beta = 1.0;
  int copies = 3;
  double ratio = 0.0;
  CLI::Option* ratio_opt = nullptr;
};

void add_nest_flags(CLI::App* cmd, NestFlags* flags) {
  cmd->add_option("--kind", flags->kind, "nest kind: centre|outer")
      ->check(CLI::IsMember({"centre", "outer"}));
  cmd->add_option("--base", flags->base,
                  "base set: singleton|ealpha|dbeta|cantor|circle")
      ->check(CLI::IsMember({"singleton", "ealpha", "dbeta", "cantor",
                             "circle"}));
  cmd->add_option("--alpha", flags->alpha, "nest scaling exponent");
  cmd->add_option("--beta", flags->beta,
                  "base exponent (dbeta and ealpha bases)");
  cmd->add_option("--N", flags->copies, "Cantor base: intervals kept per level");
  flags->ratio_opt = cmd->add_option("--r", flags->ratio,
                                     "Cantor base: relative interval length");
}

int build_nest(const NestFlags& flags, nk_nest* nest) {
  nest->kind = flags.kind == "outer" ? NK_OUTER : NK_CENTRE;
  nest->alpha = flags.alpha;
  nest->base = {};
  if (flags.base == "singleton") {
    nest->base.kind = NK_BASE_SINGLETON;
  } else if (flags.base == "ealpha") {
    nest->base.kind = NK_BASE_EALPHA;
    nest->base.alpha = flags.beta;
  } else if (flags.base == "dbeta") {
    nest->base.kind = NK_BASE_DBETA;
    nest->base.beta = flags.beta;
  } else if (flags.base == "cantor") {
    if (flags.ratio_opt == nullptr || flags.ratio_opt->count() == 0) {
      std::cerr << "error: --base cantor requires --r\n";
      return kExitValidation;
    }
    nest->base.kind = NK_BASE_CANTOR;
    nest->base.copies = flags.copies;
    nest->base.ratio = flags.ratio;
  } else {
    nest->base.kind = NK_BASE_CIRCLE;
  }
  return 0;
}

int report_failure(int status) {
  std::cerr << "error: " << nk_last_error() << "\n";
  return status == NK_EINVAL ? kExitValidation : kExitRuntime;
}

bool write_file(const std::string& path, const char* data, size_t len) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out.write(data, static_cast<std::streamsize>(len));
  return static_cast<bool>(out);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractal nest toolkit"};
  app.require_subcommand(1);

  // render
  NestFlags render_nest;
  double render_eps = 0.0;
  int render_size = 600;
  std::string render_format = "svg";
  std::string render_out = "render.svg";
  CLI::App* render = app.add_subcommand("render", "write an SVG or EPS figure");
  add_nest_flags(render, &render_nest);
  render->add_option("--eps", render_eps,
                     "sausage half-width (0 = figure default)");
  render->add_option("--size", render_size, "canvas size in pixels");
  render->add_option("--format", render_format, "svg|eps")
      ->check(CLI::IsMember({"svg", "eps"}));
  render->add_option("--out", render_out, "output path");

  // estimate
  NestFlags est_nest;
  double est_hi = 0x1p-10, est_lo = 0x1p-22;
  int est_samples = 10;
  std::string est_counter = "primitive";
  double est_dim = 0.0;
  std::string est_out = "estimate.csv";
  CLI::App* estimate =
      app.add_subcommand("estimate", "box-counting dimension estimate");
  add_nest_flags(estimate, &est_nest);
  estimate->add_option("--eps-hi", est_hi, "largest resolution");
  estimate->add_option("--eps-lo", est_lo, "smallest resolution");
  estimate->add_option("--samples", est_samples, "schedule length");
  estimate->add_option("--counter", est_counter, "primitive|grid")
      ->check(CLI::IsMember({"primitive", "grid"}));
  estimate->add_option("--dim", est_dim,
                       "reference dimension (0 = closed form)");
  estimate->add_option("--out", est_out, "CSV output path");

  // sweep
  double sweep_dim = 0.0;
  double sweep_alpha_lo = 0.0, sweep_alpha_hi = 0.0;
  double sweep_d_lo = 0.3, sweep_d_hi = 0.95;
  int sweep_points = 0;
  int sweep_copies = 3;
  double sweep_hi = 0x1p-10, sweep_lo = 0x1p-22;
  int sweep_samples = 10;
  bool sweep_force = false;
  std::string sweep_out = "sweep.csv";
  CLI::App* sweep = app.add_subcommand(
      "sweep", "family sweeps: fixed target dimension (--dim) or varying");
  sweep->add_option("--dim", sweep_dim,
                    "fixed target dimension (omit for a varying-d sweep)");
  sweep->add_option("--alpha-lo", sweep_alpha_lo, "fixed sweep: grid start");
  sweep->add_option("--alpha-hi", sweep_alpha_hi, "fixed sweep: grid end");
  sweep->add_option("--d-lo", sweep_d_lo, "varying sweep: dimension start");
  sweep->add_option("--d-hi", sweep_d_hi, "varying sweep: dimension end");
  sweep->add_option("--points", sweep_points, "grid points");
  sweep->add_option("--N", sweep_copies, "Cantor family: intervals per level");
  sweep->add_option("--eps-hi", sweep_hi, "largest resolution");
  sweep->add_option("--eps-lo", sweep_lo, "smallest resolution");
  sweep->add_option("--samples", sweep_samples, "schedule length");
  sweep->add_flag("--force", sweep_force,
                  "allow alpha at or beyond the admissible interval");
  sweep->add_option("--out", sweep_out, "CSV output path");

  // verify
  CLI::App* verify =
      app.add_subcommand("verify", "run the built-in verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitValidation;
  }

  if (render->parsed()) {
    nk_nest nest;
    if (int rc = build_nest(render_nest, &nest); rc != 0) return rc;
    char* bytes = nullptr;
    size_t len = 0;
    const int status = nk_render(
        &nest, render_eps, render_size,
        render_format == "eps" ? NK_FORMAT_EPS : NK_FORMAT_SVG, &bytes, &len);
    if (status != NK_OK) return report_failure(status);
    const bool ok = write_file(render_out, bytes, len);
    nk_buffer_free(bytes);
    if (!ok) {
      std::cerr << "error: cannot write " << render_out << "\n";
      return kExitRuntime;
    }
    std::cout << "wrote " << render_out << "\n";
    return 0;
  }

  if (estimate->parsed()) {
    nk_nest nest;
    if (int rc = build_nest(est_nest, &nest); rc != 0) return rc;
    char* csv = nullptr;
    char* summary = nullptr;
    const int status = nk_estimate(
        &nest, est_hi, est_lo, est_samples,
        est_counter == "grid" ? NK_COUNTER_GRID : NK_COUNTER_PRIMITIVE,
        est_dim, &csv, &summary);
    if (status != NK_OK) return report_failure(status);
    const bool ok = write_file(est_out, csv, std::string(csv).size());
    std::cout << summary << "\n";
    nk_buffer_free(csv);
    nk_buffer_free(summary);
    if (!ok) {
      std::cerr << "error: cannot write " << est_out << "\n";
      return kExitRuntime;
    }
    return 0;
  }

  if (sweep->parsed()) {
    char* csv = nullptr;
    char* warnings = nullptr;
    int status = NK_OK;
    if (sweep_dim > 0.0) {
      double lo = sweep_alpha_lo, hi = sweep_alpha_hi;
      if (!(lo < hi)) {
        // default grid spans the admissible interval with small margins
        lo = 1.0 / sweep_dim - 1.0 + 0.05;
        hi = 1.0 / sweep_dim - 0.15;
      }
      const int points = sweep_points > 0 ? sweep_points : 12;
      status = nk_sweep_fixed(sweep_dim, lo, hi, points, sweep_copies,
                              sweep_hi, sweep_lo, sweep_samples,
                              sweep_force ? 1 : 0, &csv, &warnings);
    } else {
      const int points = sweep_points > 0 ? sweep_points : 8;
      status = nk_sweep_varying(sweep_d_lo, sweep_d_hi, points, sweep_copies,
                                sweep_hi, sweep_lo, sweep_samples, &csv,
                                &warnings);
    }
    if (status != NK_OK) return report_failure(status);
    if (warnings != nullptr && warnings[0] != '\0') {
      std::cerr << warnings;
    }
    const bool ok = write_file(sweep_out, csv, std::string(csv).size());
    nk_buffer_free(csv);
    nk_buffer_free(warnings);
    if (!ok) {
      std::cerr << "error: cannot write " << sweep_out << "\n";
      return kExitRuntime;
    }
    std::cout << "wrote " << sweep_out << "\n";
    return 0;
  }

  if (verify->parsed()) {
    const int failures = nk_verify(
        [](const char* line, void*) { std::printf("%s\n", line); }, nullptr);
    if (failures < 0) return report_failure(-failures);
    return failures == 0 ? 0 : kExitRuntime;
  }

  return kExitValidation;
}
