#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "raman/distributions.hpp"
#include "raman/oracle.hpp"
#include "raman/witnesses.hpp"

namespace raman {

/// Raw, rebuildable ingredients of a RamanConfig; sweeps mutate these
/// and rebuild a validated config per point.
struct ConfigInput {
  Complex g{1.0, 0.0};
  Complex chi{1.0, 0.0};
  double dw1 = 0.0;
  double dw2 = 0.0;
  double omega_v = 1.0;
  double omega_l = kDefaultPumpFrequency;
  double gt = 0.1;
  PerMode<Complex> xi{};
  bool chaotic = false;
  double n_mean = 0.0;

  RamanConfig build() const;
};

/// Parses the flat key=value config format ('#' comments, blank lines
/// ignored).  Keys: g_re, g_im, chi_re, chi_im, dw1, dw2, omega_v,
/// omega_l, gt, i_l, i_s, i_v, i_a (intensities, phase 0) or
/// xi_<m>_re / xi_<m>_im, phonon (coherent|chaotic), n_mean.
/// Unknown keys and malformed lines raise ValidationError with the
/// line number.
ConfigInput parse_config(std::istream& in, const std::string& source_name);
ConfigInput parse_config_file(const std::string& path);

/// One sweep axis: parameter name, inclusive range, sample count.
struct SweepAxis {
  std::string param;
  double start = 0.0;
  double stop = 1.0;
  int count = 2;
};

/// "param:start:stop:count[,param:start:stop:count]" -> 1 or 2 axes.
std::vector<SweepAxis> parse_sweep_spec(const std::string& spec);

/// Evaluation context: the config ingredients plus the auxiliary
/// arguments of distribution-type quantities.
struct EvalContext {
  ConfigInput input;
  double s = 0.8;            // ordering parameter
  double w_s = 1.0, w_v = 0.5, w_l = 1.0;
  double n = 1.0;            // difference / diagonal count
  double n_l = 1.0, n_v = 2.0;
};

/// Applies a sweep parameter value; knows dw1, dw2, dw_locked_plus,
/// dw_locked_minus, gt, n_mean, i_l, i_s, i_v, i_a, s, w_s, w_v, w_l,
/// n, n_l, n_v.
void apply_param(EvalContext& ctx, const std::string& param, double value);

/// All scannable quantity names.
std::vector<std::string> known_quantities();

/// Evaluates one named quantity at the context point.
double evaluate_quantity(const EvalContext& ctx, const std::string& name);

struct ScanTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Runs the sweep (1 or 2 axes; 2D in row-major order, first axis
/// slowest).  Points are evaluated in parallel; the table order is
/// deterministic.
ScanTable run_scan(const EvalContext& base, const std::vector<SweepAxis>& axes,
                   const std::vector<std::string>& quantities);

/// Comma-separated CSV with 17-significant-digit floats and Unix
/// newlines.
std::string to_csv(const ScanTable& table);
std::string format_double(double v);

/// Witness table for one config: name, value, nonclassicality flag.
struct WitnessRow {
  std::string name;
  double value = 0.0;
  bool flagged = false;       // nonclassical by this witness's criterion
  bool has_flag = true;       // some rows are informational only
};
std::vector<WitnessRow> witness_table(const RamanConfig& cfg);

/// Pipeline vs closed-form cross-check rows.
struct CrossCheckRow {
  std::string name;
  double pipeline = 0.0;
  double closed = 0.0;
};
std::vector<CrossCheckRow> closed_form_crosscheck(const RamanConfig& cfg);

/// A figure dataset panel: output file stem, context and sweep.
struct FigurePanel {
  std::string name;  // file stem, e.g. "fig1a"
  std::string title;
  EvalContext ctx;
  std::vector<SweepAxis> axes;
  std::vector<std::string> quantities;
};

std::vector<std::string> known_figures();
std::vector<FigurePanel> figure_panels(const std::string& figure_id);

}  // namespace raman
