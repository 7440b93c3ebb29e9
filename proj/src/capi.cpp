#include "nestkit.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nestkit/acceptance.hpp"
#include "nestkit/base_sets.hpp"
#include "nestkit/boxcount.hpp"
#include "nestkit/experiment.hpp"
#include "nestkit/gamma.hpp"
#include "nestkit/nests.hpp"
#include "nestkit/render.hpp"
#include "nestkit/theory.hpp"

struct nk_scene {
  nestkit::Scene scene;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return NK_OK;
  } catch (const std::invalid_argument& err) {
    return fail(NK_EINVAL, err.what());
  } catch (const std::exception& err) {
    return fail(NK_ERUNTIME, err.what());
  } catch (...) {
    return fail(NK_ERUNTIME, "unknown failure");
  }
}

char* copy_out(const std::string& text) {
  char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
  if (buffer == nullptr) throw std::bad_alloc();
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return buffer;
}

nestkit::BaseSet to_base(const nk_base& base) {
  switch (base.kind) {
    case NK_BASE_SINGLETON:
      return nestkit::Singleton{};
    case NK_BASE_EALPHA:
      return nestkit::EAlpha{base.alpha};
    case NK_BASE_DBETA:
      return nestkit::DBeta{base.beta};
    case NK_BASE_CANTOR:
      return nestkit::UniformCantor{base.copies, base.ratio};
    case NK_BASE_CIRCLE:
      return nestkit::FullCircle{};
    case NK_BASE_CUBEFACE:
      return nestkit::CubeFace{base.face_dim};
  }
  throw std::invalid_argument("unknown base kind");
}

nestkit::NestSpec to_nest(const nk_nest& nest) {
  return {nest.kind == NK_OUTER ? nestkit::NestKind::Outer
                                : nestkit::NestKind::Centre,
          nest.alpha, to_base(nest.base)};
}

nestkit::NestKind to_kind(nk_nest_kind kind) {
  return kind == NK_OUTER ? nestkit::NestKind::Outer
                          : nestkit::NestKind::Centre;
}

void require_out(const void* ptr) {
  if (ptr == nullptr) throw std::invalid_argument("output pointer is null");
}

std::string joined(const std::vector<std::string>& lines) {
  std::string text;
  for (const std::string& line : lines) {
    text += line;
    text += '\n';
  }
  return text;
}

} // namespace

extern "C" {

const char* nk_last_error(void) { return g_last_error.c_str(); }

void nk_buffer_free(char* buffer) { std::free(buffer); }

int nk_base_dimension(const nk_base* base, double* out_delta) {
  return guarded([&] {
    require_out(base);
    require_out(out_delta);
    *out_delta = nestkit::base_dimension(to_base(*base));
  });
}

int nk_gamma_coeff(double x, double* out) {
  return guarded([&] {
    require_out(out);
    *out = nestkit::gamma_coeff(x);
  });
}

int nk_e_alpha_content(double alpha, double* out) {
  return guarded([&] {
    require_out(out);
    *out = nestkit::e_alpha_content(alpha);
  });
}

int nk_cantor_contents(int copies, double ratio, double* out_upper,
                       double* out_lower) {
  return guarded([&] {
    require_out(out_upper);
    require_out(out_lower);
    const nestkit::ContentBounds bounds =
        nestkit::cantor_minkowski_contents(copies, ratio);
    *out_upper = bounds.upper;
    *out_lower = bounds.lower;
  });
}

int nk_cube_sausage_volume(int m, int n, double eps, double* out) {
  return guarded([&] {
    require_out(out);
    *out = nestkit::cube_sausage_volume(m, n, eps);
  });
}

int nk_split_indices(double alpha, double eps, long long* out_tail,
                     long long* out_core) {
  return guarded([&] {
    require_out(out_tail);
    require_out(out_core);
    const nestkit::SplitIndices split = nestkit::split_indices(alpha, eps);
    *out_tail = split.tail_count;
    *out_core = split.core_count;
  });
}

int nk_scene_generate(const nk_nest* nest, double eps, nk_scene** out_scene) {
  return guarded([&] {
    require_out(nest);
    require_out(out_scene);
    auto holder = std::make_unique<nk_scene>();
    holder->scene = nestkit::generate_scene(to_nest(*nest), eps);
    *out_scene = holder.release();
  });
}

void nk_scene_free(nk_scene* scene) { delete scene; }

long long nk_scene_size(const nk_scene* scene) {
  return scene == nullptr
             ? 0
             : static_cast<long long>(scene->scene.primitives.size());
}

int nk_primitive_count(const nk_scene* scene, long long* out) {
  return guarded([&] {
    require_out(scene);
    require_out(out);
    *out = nestkit::weighted_primitive_count(scene->scene);
  });
}

int nk_grid_count(const nk_scene* scene, double eps, long long* out) {
  return guarded([&] {
    require_out(scene);
    require_out(out);
    *out = nestkit::grid_count(scene->scene, eps);
  });
}

int nk_nest_dimension(nk_nest_kind kind, double alpha, double delta,
                      double* out_value, int* out_nondegenerate,
                      nk_regime* out_regime) {
  return guarded([&] {
    require_out(out_value);
    const nestkit::DimensionResult res =
        nestkit::nest_dimension(to_kind(kind), alpha, delta);
    *out_value = res.value;
    if (out_nondegenerate != nullptr) {
      *out_nondegenerate = res.nondegenerate ? 1 : 0;
    }
    if (out_regime != nullptr) {
      switch (res.regime) {
        case nestkit::Regime::TailDominant: *out_regime = NK_REGIME_TAIL; break;
        case nestkit::Regime::CoreDominant: *out_regime = NK_REGIME_CORE; break;
        case nestkit::Regime::Critical: *out_regime = NK_REGIME_CRITICAL; break;
        case nestkit::Regime::Outer: *out_regime = NK_REGIME_OUTER; break;
      }
    }
  });
}

int nk_bifractal_dimension(double alpha, double beta, double* out) {
  return guarded([&] {
    require_out(out);
    *out = nestkit::bifractal_dimension(alpha, beta);
  });
}

int nk_cantor_nest_dimension(nk_nest_kind kind, double alpha, int copies,
                             double ratio, double* out) {
  return guarded([&] {
    require_out(out);
    *out =
        nestkit::cantor_nest_dimension(to_kind(kind), alpha, copies, ratio);
  });
}

int nk_hypersphere_nest_dimension(int n, double alpha, nk_nest_kind kind,
                                  double* out) {
  return guarded([&] {
    require_out(out);
    *out = nestkit::hypersphere_nest_dimension(n, alpha, to_kind(kind));
  });
}

int nk_solve_parameters(double target_dim, double alpha, int copies,
                        nk_params* out) {
  return guarded([&] {
    require_out(out);
    const nestkit::SynthesisedParams params =
        nestkit::solve_parameters(target_dim, alpha, copies);
    out->target_dim = params.target_dim;
    out->alpha = params.alpha;
    out->delta = params.delta;
    out->beta = params.beta;
    out->ratio = params.ratio;
    out->copies = params.copies;
  });
}

int nk_centered_alpha(double target_dim, double* out) {
  return guarded([&] {
    require_out(out);
    *out = nestkit::centered_alpha(target_dim);
  });
}

int nk_normalized_content_ratio(double sausage_volume, int n, double delta,
                                double eps, double* out) {
  return guarded([&] {
    require_out(out);
    *out = nestkit::normalized_content_ratio(sausage_volume, n, delta, eps);
  });
}

int nk_epsilon_schedule(double eps_hi, double eps_lo, int samples,
                        double* out) {
  return guarded([&] {
    require_out(out);
    const std::vector<double> schedule =
        nestkit::epsilon_schedule(eps_hi, eps_lo, samples);
    for (std::size_t i = 0; i < schedule.size(); ++i) out[i] = schedule[i];
  });
}

int nk_sausage_measure_1d(const double* points, long long n_points,
                          const double* interval_bounds, long long n_intervals,
                          double eps, double* out) {
  return guarded([&] {
    require_out(out);
    if ((n_points > 0 && points == nullptr) ||
        (n_intervals > 0 && interval_bounds == nullptr)) {
      throw std::invalid_argument("null input with nonzero length");
    }
    std::vector<nestkit::Interval> intervals(
        static_cast<std::size_t>(n_intervals));
    for (long long i = 0; i < n_intervals; ++i) {
      intervals[static_cast<std::size_t>(i)] = {interval_bounds[2 * i],
                                                interval_bounds[2 * i + 1]};
    }
    *out = nestkit::sausage_measure_1d(
        {points, static_cast<std::size_t>(n_points)}, intervals, eps);
  });
}

int nk_regression_dimension(const double* eps, const long long* counts,
                            int rows, double* out_slope, double* out_intercept,
                            double* out_residuals) {
  return guarded([&] {
    require_out(eps);
    require_out(counts);
    require_out(out_slope);
    nestkit::CountSeries series;
    for (int i = 0; i < rows; ++i) {
      series.rows.push_back({eps[i], counts[i]});
    }
    const nestkit::EstimateReport report =
        nestkit::regression_dimension(series);
    *out_slope = report.slope;
    if (out_intercept != nullptr) *out_intercept = report.intercept;
    if (out_residuals != nullptr) {
      for (int i = 0; i < rows; ++i) {
        out_residuals[i] = report.residuals[static_cast<std::size_t>(i)];
      }
    }
  });
}

int nk_render(const nk_nest* nest, double eps, int size_px, nk_format format,
              char** out_bytes, size_t* out_len) {
  return guarded([&] {
    require_out(nest);
    require_out(out_bytes);
    const double use_eps = eps > 0.0 ? eps : nestkit::default_render_eps();
    const int use_size = size_px > 0 ? size_px : nestkit::kDefaultCanvasPx;
    const nestkit::Scene scene =
        nestkit::generate_scene(to_nest(*nest), use_eps);
    const std::string bytes = nestkit::render_scene(
        scene, use_size,
        format == NK_FORMAT_EPS ? nestkit::ImageFormat::Eps
                                : nestkit::ImageFormat::Svg);
    *out_bytes = copy_out(bytes);
    if (out_len != nullptr) *out_len = bytes.size();
  });
}

int nk_estimate(const nk_nest* nest, double eps_hi, double eps_lo, int samples,
                nk_counter counter, double theory, char** out_csv,
                char** out_summary) {
  return guarded([&] {
    require_out(nest);
    std::optional<double> theory_override;
    if (theory > 0.0) theory_override = theory;
    const nestkit::EstimateRun run = nestkit::run_estimate(
        to_nest(*nest), eps_hi, eps_lo, samples,
        counter == NK_COUNTER_GRID ? nestkit::CounterKind::Grid
                                   : nestkit::CounterKind::Primitive,
        theory_override);
    if (out_csv != nullptr) *out_csv = copy_out(run.csv);
    if (out_summary != nullptr) *out_summary = copy_out(run.summary);
  });
}

int nk_sweep_fixed(double target_dim, double alpha_lo, double alpha_hi,
                   int grid_points, int copies, double eps_hi, double eps_lo,
                   int samples, int force, char** out_csv,
                   char** out_warnings) {
  return guarded([&] {
    const nestkit::SweepResult result = nestkit::sweep_fixed_dimension(
        target_dim, alpha_lo, alpha_hi, grid_points, copies, eps_hi, eps_lo,
        samples, force != 0);
    if (out_csv != nullptr) *out_csv = copy_out(nestkit::sweep_csv(result));
    if (out_warnings != nullptr) *out_warnings = copy_out(joined(result.warnings));
  });
}

int nk_sweep_varying(double dim_lo, double dim_hi, int grid_points, int copies,
                     double eps_hi, double eps_lo, int samples, char** out_csv,
                     char** out_warnings) {
  return guarded([&] {
    const nestkit::SweepResult result = nestkit::sweep_varying_dimension(
        dim_lo, dim_hi, grid_points, copies, eps_hi, eps_lo, samples);
    if (out_csv != nullptr) *out_csv = copy_out(nestkit::sweep_csv(result));
    if (out_warnings != nullptr) *out_warnings = copy_out(joined(result.warnings));
  });
}

int nk_verify(nk_report_fn emit, void* user) {
  int failures = 0;
  const int status = guarded([&] {
    failures = nestkit::run_acceptance([&](const std::string& line) {
      if (emit != nullptr) emit(line.c_str(), user);
    });
  });
  if (status != NK_OK) return -status;
  return failures;
}

} // extern "C"
