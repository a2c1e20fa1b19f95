#include "rieszlab/rieszlab.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rieszlab/constants.hpp"
#include "rieszlab/error.hpp"
#include "rieszlab/function_core.hpp"
#include "rieszlab/hilbert.hpp"
#include "rieszlab/inequality_lab.hpp"
#include "rieszlab/norms.hpp"
#include "rieszlab/report.hpp"
#include "rieszlab/suite.hpp"
#include "rieszlab/theorem_suite.hpp"

struct rl_map {
  rieszlab::HarmonicMap map;
};

struct rl_report {
  std::variant<rieszlab::VerificationReport, rieszlab::SuiteResult> value;
};

namespace {

using namespace rieszlab;

thread_local std::string last_error;

rl_status fail(rl_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

/// Runs `body`, translating library exceptions into status codes.
template <class F>
rl_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return RL_OK;
  } catch (const ParseError& e) {
    std::string msg = e.what();
    if (!e.field().empty()) msg += " [field " + e.field() + "]";
    return fail(RL_PARSE, msg);
  } catch (const HypothesisError& e) {
    return fail(RL_HYPOTHESIS, e.what());
  } catch (const DomainError& e) {
    return fail(RL_DOMAIN, e.what());
  } catch (const ConvergenceError& e) {
    return fail(RL_CONVERGENCE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RL_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RL_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RL_INTERNAL, e.what());
  } catch (...) {
    return fail(RL_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

TaylorPoly poly_from(const double* pairs, std::size_t count) {
  if (count == 0) return TaylorPoly();
  require(pairs != nullptr, "coefficient array is null");
  std::vector<cplx> c(count);
  for (std::size_t k = 0; k < count; ++k) {
    c[k] = {pairs[2 * k], pairs[2 * k + 1]};
    require(std::isfinite(c[k].real()) && std::isfinite(c[k].imag()), "coefficients must be finite");
  }
  return TaylorPoly(std::move(c));
}

std::optional<Constraint> relaxed_from(const char* relaxed) {
  if (!relaxed || !*relaxed) return std::nullopt;
  return constraint_from_string(relaxed);
}

InequalityId inequality_named(const char* id) {
  require(id != nullptr, "inequality id is null");
  const auto parsed = inequality_from_string(id);
  if (!parsed) throw std::invalid_argument(std::string("unknown inequality id '") + id + "'");
  return *parsed;
}

MinorantId minorant_named(const char* id) {
  require(id != nullptr, "minorant id is null");
  const auto parsed = minorant_from_string(id);
  if (!parsed) throw std::invalid_argument(std::string("unknown minorant id '") + id + "'");
  return *parsed;
}

TheoremId theorem_named(const char* id) {
  require(id != nullptr, "theorem id is null");
  const auto parsed = theorem_from_string(id);
  if (!parsed) throw std::invalid_argument(std::string("unknown theorem id '") + id + "'");
  return *parsed;
}

GridSpec grid_from(const rl_grid* grid) {
  GridSpec spec;
  if (!grid) return spec;
  if (grid->n_r) spec.n_r = grid->n_r;
  if (grid->n_t) spec.n_t = grid->n_t;
  if (grid->n_1d) spec.n_1d = grid->n_1d;
  if (grid->refine_nodes) spec.refine_nodes = grid->refine_nodes;
  if (grid->tolerance != 0.0) spec.tolerance = grid->tolerance;
  spec.validate();
  return spec;
}

#ifdef RIESZLAB_TEST_STUBS
/// A lemma whose slack is negative by construction, for exit-code tests.
VerificationReport negative_stub(double p) {
  VerificationReport report;
  report.id = "TEST_NEGATIVE_STUB";
  report.p = p;
  report.observe(-1.0, {0.5, 0.0});
  report.add_violation({0.5, 0.0}, -1.0);
  return report;
}
#endif

rl_status emit(rl_report** out, VerificationReport report) {
  *out = new rl_report{std::move(report)};
  return RL_OK;
}

}  // namespace

extern "C" {

const char* rl_version(void) { return "1.0.0"; }

const char* rl_last_error(void) { return last_error.c_str(); }

void rl_string_free(char* text) { std::free(text); }

rl_status rl_map_create(const double* g, size_t g_len, const double* h, size_t h_len, rl_map** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = new rl_map{{poly_from(g, g_len), poly_from(h, h_len)}};
  });
}

rl_status rl_map_from_json(const char* text, rl_map** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new rl_map{map_from_json(text)};
  });
}

rl_status rl_map_to_json(const rl_map* map, int with_series, char** out) {
  return guarded([&] {
    require(map != nullptr && out != nullptr, "null argument");
    *out = copy_string(map_to_json(map->map, with_series != 0));
  });
}

rl_status rl_map_random(int degree, uint64_t seed, const char* constraint, rl_map** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    const Constraint c = constraint ? constraint_from_string(constraint) : Constraint::None;
    *out = new rl_map{random_harmonic(degree, seed, c)};
  });
}

rl_status rl_map_eval(const rl_map* map, double re, double im, double* out_re, double* out_im) {
  return guarded([&] {
    require(map != nullptr && out_re != nullptr && out_im != nullptr, "null argument");
    const cplx value = eval_harmonic(map->map, {re, im});
    *out_re = value.real();
    *out_im = value.imag();
  });
}

rl_status rl_map_conjugate(const rl_map* map, rl_map** out) {
  return guarded([&] {
    require(map != nullptr && out != nullptr, "null argument");
    *out = new rl_map{conjugate_map(map->map)};
  });
}

void rl_map_free(rl_map* map) { delete map; }

rl_status rl_norm(const rl_map* map, rl_norm_kind kind, double p, int n_angle, int n_radial, double* out) {
  return guarded([&] {
    require(map != nullptr && out != nullptr, "null argument");
    QuadratureSpec spec;
    spec.n_angle = n_angle;
    spec.n_radial = n_radial;
    switch (kind) {
      case RL_NORM_HARDY: *out = hardy_norm(map->map, p, spec); return;
      case RL_NORM_TRIPLE: *out = triple_norm(map->map, p, spec); return;
      case RL_NORM_BERGMAN: *out = bergman_norm(map->map, p, spec); return;
      case RL_NORM_BERGMAN_TRIPLE: *out = bergman_triple_norm(map->map, p, spec); return;
    }
    throw std::invalid_argument("unknown norm kind");
  });
}

rl_status rl_sharp_constant(const char* kind, double p, double* out) {
  return guarded([&] {
    require(kind != nullptr && out != nullptr, "null argument");
    const auto parsed = constant_from_string(kind);
    if (!parsed) throw std::invalid_argument(std::string("unknown constant '") + kind + "'");
    *out = sharp_constant(*parsed, p);
  });
}

rl_status rl_constants_json(double p, char** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    nlohmann::ordered_json doc;
    doc["p"] = p;
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (ConstantKind kind : all_constant_kinds()) {
      if (!validity(kind).contains(p)) continue;
      if (kind == ConstantKind::Isop && p != std::floor(p)) continue;
      values[std::string(to_string(kind))] = sharp_constant(kind, p);
    }
    doc["constants"] = values;
    *out = copy_string(doc.dump(2));
  });
}

rl_status rl_verify_lemma(const char* id, double p, const rl_grid* grid, rl_report** out) {
  return guarded([&] {
    require(id != nullptr && out != nullptr, "null argument");
#ifdef RIESZLAB_TEST_STUBS
    if (std::string(id) == "TEST_NEGATIVE_STUB") {
      emit(out, negative_stub(p));
      return;
    }
#endif
    emit(out, verify_pointwise(inequality_named(id), p, grid_from(grid)));
  });
}

rl_status rl_locate_equality(const char* id, double p, double params[2], size_t* n_params, double* slack) {
  return guarded([&] {
    require(params != nullptr && n_params != nullptr && slack != nullptr, "null argument");
    const EqualityPoint point = locate_equality(inequality_named(id), p);
    *n_params = point.params.size();
    for (std::size_t i = 0; i < point.params.size() && i < 2; ++i) params[i] = point.params[i];
    *slack = point.slack;
  });
}

rl_status rl_check_submean(const char* minorant, double p, int centers, int radii, int angles, uint64_t seed,
                           double tol, rl_report** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    emit(out, check_submean(minorant_named(minorant), p, centers, radii, angles, seed, tol));
  });
}

rl_status rl_check_pluri_lines(const char* minorant, double p, int lines, int angles, uint64_t seed, double tol,
                               rl_report** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    emit(out, check_pluri_lines(minorant_named(minorant), p, lines, seed, tol, 4, angles));
  });
}

rl_status rl_verify_theorem(const char* id, double p, int samples, int degree, uint64_t seed, double tol,
                            const char* relaxed, rl_report** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    emit(out, verify_theorem(theorem_named(id), p, samples, degree, seed, tol, relaxed_from(relaxed)));
  });
}

rl_status rl_verify_theorem_on(const char* id, double p, const rl_map* map, double tol, const char* relaxed,
                               rl_report** out) {
  return guarded([&] {
    require(map != nullptr && out != nullptr, "null argument");
    const HarmonicMap maps[] = {map->map};
    emit(out, verify_theorem_on(theorem_named(id), p, maps, tol, relaxed_from(relaxed)));
  });
}

rl_status rl_probe_sharpness(const char* id, double p, const double* gamma_fractions, size_t count, double tol,
                             rl_report** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    require(gamma_fractions != nullptr && count > 0, "at least one gamma fraction is required");
    emit(out, probe_report(theorem_named(id), p, {gamma_fractions, count}, tol));
  });
}

rl_status rl_run_suite(const rl_suite_options* options, rl_report** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    SuiteOptions opts;
    if (options) {
      opts.seed = options->seed;
      opts.grid = grid_from(&options->grid);
      if (options->theorem_samples) opts.theorem_samples = options->theorem_samples;
      if (options->degree) opts.degree = options->degree;
      if (options->tolerance != 0.0) opts.tolerance = options->tolerance;
    }
    *out = new rl_report{run_suite(opts)};
  });
}

rl_status rl_report_format(const rl_report* report, rl_format format, char** out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    std::string text;
    if (const auto* single = std::get_if<VerificationReport>(&report->value)) {
      switch (format) {
        case RL_FORMAT_JSON: text = to_json(*single); break;
        case RL_FORMAT_CSV: text = csv_header() + "\n" + to_csv_row(*single) + "\n"; break;
        case RL_FORMAT_HUMAN: text = to_human(*single); break;
        default: throw std::invalid_argument("unknown report format");
      }
    } else {
      const SuiteResult& suite = std::get<SuiteResult>(report->value);
      switch (format) {
        case RL_FORMAT_JSON: text = suite_to_json(suite); break;
        case RL_FORMAT_CSV: text = suite_to_csv(suite); break;
        case RL_FORMAT_HUMAN: text = suite_to_human(suite); break;
        default: throw std::invalid_argument("unknown report format");
      }
    }
    *out = copy_string(text);
  });
}

int rl_report_passed(const rl_report* report) {
  if (!report) return 0;
  if (const auto* single = std::get_if<VerificationReport>(&report->value)) return single->passed() ? 1 : 0;
  return std::get<SuiteResult>(report->value).passed() ? 1 : 0;
}

size_t rl_report_violation_count(const rl_report* report) {
  if (!report) return 0;
  if (const auto* single = std::get_if<VerificationReport>(&report->value)) return single->violation_count;
  std::size_t total = 0;
  for (const SuiteSection& s : std::get<SuiteResult>(report->value).sections) {
    for (const SuiteCheck& c : s.checks) total += c.passed ? 0 : 1;
    for (const VerificationReport& r : s.reports) total += r.violation_count;
  }
  return total;
}

rl_status rl_report_set_seed(rl_report* report, uint64_t seed) {
  return guarded([&] {
    require(report != nullptr, "null argument");
    if (auto* single = std::get_if<VerificationReport>(&report->value)) {
      if (!single->seed) single->seed = seed;
    }
  });
}

void rl_report_free(rl_report* report) { delete report; }

}  // extern "C"
