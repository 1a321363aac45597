#include "raman/scan.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace raman {

RamanConfig ConfigInput::build() const {
  return make_config(g, chi, dw1, dw2, omega_v, gt, xi,
                     chaotic ? PhononState::chaotic(n_mean)
                             : PhononState::coherent(),
                     omega_l);
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_number(const std::string& text, const std::string& where) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ValidationError(where + ": cannot parse number '" + text + "'");
  }
}

Mode mode_from_letter(char c) {
  switch (c) {
    case 'l': return Mode::Pump;
    case 's': return Mode::Stokes;
    case 'v': return Mode::Phonon;
    case 'a': return Mode::AntiStokes;
    default: throw ValidationError("unknown mode letter");
  }
}

}  // namespace

ConfigInput parse_config(std::istream& in, const std::string& source_name) {
  ConfigInput cfg;
  cfg.xi = {Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = source_name + ":" + std::to_string(lineno);

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ValidationError(where + ": expected key=value");
    const std::string key = lower(trim(line.substr(0, eq)));
    const std::string val = trim(line.substr(eq + 1));
    if (val.empty()) throw ValidationError(where + ": empty value");

    if (key == "phonon") {
      const std::string v = lower(val);
      if (v == "coherent") cfg.chaotic = false;
      else if (v == "chaotic") cfg.chaotic = true;
      else throw ValidationError(where + ": phonon must be coherent|chaotic");
      continue;
    }

    auto num = [&]() { return parse_number(val, where); };
    if (key == "g_re") cfg.g.real(num());
    else if (key == "g_im") cfg.g.imag(num());
    else if (key == "chi_re") cfg.chi.real(num());
    else if (key == "chi_im") cfg.chi.imag(num());
    else if (key == "dw1") cfg.dw1 = num();
    else if (key == "dw2") cfg.dw2 = num();
    else if (key == "omega_v") cfg.omega_v = num();
    else if (key == "omega_l") cfg.omega_l = num();
    else if (key == "gt") cfg.gt = num();
    else if (key == "n_mean") cfg.n_mean = num();
    else if (key.size() == 3 && key.compare(0, 2, "i_") == 0) {
      const double intensity = num();
      if (intensity < 0.0)
        throw ValidationError(where + ": intensity must be non-negative");
      at(cfg.xi, mode_from_letter(key[2])) = Complex{std::sqrt(intensity), 0.0};
    } else if (key.size() == 7 && key.compare(0, 3, "xi_") == 0 &&
               (key.compare(4, 3, "_re") == 0 || key.compare(4, 3, "_im") == 0)) {
      Complex& xi = at(cfg.xi, mode_from_letter(key[3]));
      if (key.compare(4, 3, "_re") == 0) xi.real(num());
      else xi.imag(num());
    } else {
      throw ValidationError(where + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

ConfigInput parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  return parse_config(in, path);
}

std::vector<SweepAxis> parse_sweep_spec(const std::string& spec) {
  std::vector<SweepAxis> axes;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    if (part.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ps(part);
    std::string tok;
    while (std::getline(ps, tok, ':')) f.push_back(trim(tok));
    if (f.size() != 4)
      throw ValidationError("sweep axis '" + part +
                            "' must be param:start:stop:count");
    SweepAxis ax;
    ax.param = lower(f[0]);
    ax.start = parse_number(f[1], "sweep start");
    ax.stop = parse_number(f[2], "sweep stop");
    ax.count = static_cast<int>(parse_number(f[3], "sweep count"));
    if (ax.count < 2) throw ValidationError("sweep count must be >= 2");
    if (!(ax.start < ax.stop))
      throw ValidationError("sweep start must be < stop");
    axes.push_back(ax);
  }
  if (axes.empty() || axes.size() > 2)
    throw ValidationError("sweep spec must have one or two axes");
  return axes;
}

void apply_param(EvalContext& ctx, const std::string& param, double value) {
  const std::string p = lower(param);
  auto set_intensity = [&](Mode m) {
    if (value < 0.0) throw ValidationError("intensity sweep value < 0");
    Complex& xi = at(ctx.input.xi, m);
    const double phase = std::abs(xi) > 0.0 ? std::arg(xi) : 0.0;
    xi = std::polar(std::sqrt(value), phase);
  };
  if (p == "dw1") ctx.input.dw1 = value;
  else if (p == "dw2") ctx.input.dw2 = value;
  else if (p == "dw_locked_plus") { ctx.input.dw1 = value; ctx.input.dw2 = value; }
  else if (p == "dw_locked_minus") { ctx.input.dw1 = value; ctx.input.dw2 = -value; }
  else if (p == "gt") ctx.input.gt = value;
  else if (p == "n_mean") { ctx.input.n_mean = value; ctx.input.chaotic = true; }
  else if (p == "i_l") set_intensity(Mode::Pump);
  else if (p == "i_s") set_intensity(Mode::Stokes);
  else if (p == "i_v") set_intensity(Mode::Phonon);
  else if (p == "i_a") set_intensity(Mode::AntiStokes);
  else if (p == "s") ctx.s = value;
  else if (p == "w_s") ctx.w_s = value;
  else if (p == "w_v") ctx.w_v = value;
  else if (p == "w_l") ctx.w_l = value;
  else if (p == "n") ctx.n = value;
  else if (p == "n_l") ctx.n_l = value;
  else if (p == "n_v") ctx.n_v = value;
  else throw ValidationError("unknown sweep parameter '" + param + "'");
}

namespace {

const char* kModeSuffix[4] = {"l", "s", "v", "a"};
const char* kPairSuffix[6] = {"ls", "lv", "la", "sv", "sa", "va"};

int mode_by_suffix(const std::string& s) {
  for (int i = 0; i < 4; ++i)
    if (s == kModeSuffix[i]) return i;
  return -1;
}

int pair_by_suffix(const std::string& s) {
  for (int i = 0; i < 6; ++i)
    if (s == kPairSuffix[i]) return i;
  return -1;
}

}  // namespace

std::vector<std::string> known_quantities() {
  std::vector<std::string> q;
  for (const char* m : kModeSuffix) {
    q.push_back(std::string("lambda_") + m);
    q.push_back(std::string("varw_") + m);
    q.push_back(std::string("b_") + m);
  }
  for (const char* p : kPairSuffix) {
    q.push_back(std::string("lambda_") + p);
    q.push_back(std::string("k_") + p + "_plus");
    q.push_back(std::string("k_") + p + "_minus");
    q.push_back(std::string("c_") + p);
    q.push_back(std::string("covw_") + p);
    q.push_back(std::string("sumvar_") + p);
    q.push_back(std::string("diffvar_") + p);
  }
  q.insert(q.end(), {"sth_sv", "sth_lv", "fano_l", "fano_v", "quasi_sv",
                     "quasi_lv", "p_sv", "p_lv", "pc_l", "pc_v", "p_minus",
                     "p_poiss"});
  return q;
}

double evaluate_quantity(const EvalContext& ctx, const std::string& raw_name) {
  const std::string name = lower(raw_name);
  const RamanConfig cfg = ctx.input.build();
  const CoeffSet k = eval_coeffs(cfg);
  const NoiseTerms nt = noise_terms(cfg, k);

  auto suffix_after = [&](std::size_t prefix_len) {
    return name.substr(prefix_len);
  };

  if (name.rfind("lambda_", 0) == 0) {
    const std::string s = suffix_after(7);
    if (int m = mode_by_suffix(s); m >= 0)
      return squeezing_single(nt, static_cast<Mode>(m));
    if (int p = pair_by_suffix(s); p >= 0)
      return squeezing_pair(nt, static_cast<ModePair>(p));
  }
  if (name.rfind("varw_", 0) == 0) {
    if (int m = mode_by_suffix(suffix_after(5)); m >= 0)
      return wave_variance(nt, static_cast<Mode>(m));
  }
  if (name.rfind("b_", 0) == 0) {
    if (int m = mode_by_suffix(suffix_after(2)); m >= 0)
      return nt.b(static_cast<Mode>(m));
  }
  if (name.rfind("k_", 0) == 0) {
    const auto us = name.rfind('_');
    const std::string pair = name.substr(2, us - 2);
    const std::string sign = name.substr(us + 1);
    if (int p = pair_by_suffix(pair); p >= 0 && (sign == "plus" || sign == "minus")) {
      const auto [kp, km] = entanglement(nt, static_cast<ModePair>(p));
      return sign == "plus" ? kp : km;
    }
  }
  if (name.rfind("c_", 0) == 0) {
    if (int p = pair_by_suffix(suffix_after(2)); p >= 0)
      return sub_shot(nt, static_cast<ModePair>(p));
  }
  if (name.rfind("covw_", 0) == 0) {
    if (int p = pair_by_suffix(suffix_after(5)); p >= 0)
      return wave_covariance(nt, static_cast<ModePair>(p));
  }
  if (name.rfind("sumvar_", 0) == 0) {
    if (int p = pair_by_suffix(suffix_after(7)); p >= 0)
      return sum_diff_variance(nt, static_cast<ModePair>(p)).first;
  }
  if (name.rfind("diffvar_", 0) == 0) {
    if (int p = pair_by_suffix(suffix_after(8)); p >= 0)
      return sum_diff_variance(nt, static_cast<ModePair>(p)).second;
  }

  if (name == "sth_sv") return sth_sv(nt);
  if (name == "sth_lv") return sth_lv(nt);
  if (name == "fano_l") return conditional_fano_pump(nt);
  if (name == "fano_v") return conditional_fano_phonon(nt, ctx.n_l);
  if (name == "quasi_sv") return quasi_sv_value(nt, ctx.s, ctx.w_s, ctx.w_v);
  if (name == "quasi_lv") return quasi_lv_value(nt, ctx.w_l, ctx.w_v);
  if (name == "p_sv") return joint_sv_density(stokes_phonon_intensity(nt), ctx.n);
  if (name == "p_lv" || name == "pc_l" || name == "pc_v" ||
      name == "p_minus" || name == "p_poiss") {
    const auto [bl, bv] = pump_phonon_intensities(nt);
    if (name == "p_lv") return joint_lv_density(bl, bv, ctx.n_l, ctx.n_v);
    if (name == "pc_l") return conditional_pump_density(bl, bv, ctx.n_l, ctx.n_v);
    if (name == "pc_v") return conditional_phonon_density(bl, bv, ctx.n_l, ctx.n_v);
    if (name == "p_minus") return difference_density(bl, bv, ctx.n);
    return poisson_density(bl, bv, ctx.n);
  }
  throw ValidationError("unknown quantity '" + raw_name + "'");
}

ScanTable run_scan(const EvalContext& base, const std::vector<SweepAxis>& axes,
                   const std::vector<std::string>& quantities) {
  if (axes.empty() || axes.size() > 2)
    throw ValidationError("run_scan: one or two axes required");
  if (quantities.empty())
    throw ValidationError("run_scan: at least one quantity required");
  const auto known = known_quantities();
  for (const auto& q : quantities)
    if (std::find(known.begin(), known.end(), lower(q)) == known.end())
      throw ValidationError("unknown quantity '" + q + "'");

  ScanTable table;
  for (const auto& ax : axes) table.header.push_back(ax.param);
  for (const auto& q : quantities) table.header.push_back(lower(q));

  const std::size_t n1 = static_cast<std::size_t>(axes[0].count);
  const std::size_t n2 = axes.size() == 2 ? static_cast<std::size_t>(axes[1].count) : 1;
  const std::size_t total = n1 * n2;
  table.rows.assign(total, {});

  auto axis_value = [](const SweepAxis& ax, std::size_t i) {
    return ax.start + (ax.stop - ax.start) * static_cast<double>(i) /
                          static_cast<double>(ax.count - 1);
  };

  auto eval_point = [&](std::size_t flat) {
    const std::size_t i = flat / n2;
    const std::size_t j = flat % n2;
    EvalContext ctx = base;
    std::vector<double> row;
    row.reserve(axes.size() + quantities.size());
    const double v1 = axis_value(axes[0], i);
    apply_param(ctx, axes[0].param, v1);
    row.push_back(v1);
    if (axes.size() == 2) {
      const double v2 = axis_value(axes[1], j);
      apply_param(ctx, axes[1].param, v2);
      row.push_back(v2);
    }
    for (const auto& q : quantities) row.push_back(evaluate_quantity(ctx, q));
    table.rows[flat] = std::move(row);
  };

  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(total));
  if (workers <= 1 || total < 16) {
    for (std::size_t f = 0; f < total; ++f) eval_point(f);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        try {
          for (std::size_t f = w; f < total; f += workers) eval_point(f);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }
  return table;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_csv(const ScanTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<WitnessRow> witness_table(const RamanConfig& cfg) {
  const CoeffSet k = eval_coeffs(cfg);
  const NoiseTerms nt = noise_terms(cfg, k);
  const WitnessReport r = witness_report(nt);

  std::vector<WitnessRow> rows;
  auto add = [&](const std::string& name, double v, bool flagged,
                 bool has_flag = true) {
    rows.push_back({name, v, flagged, has_flag});
  };
  for (Mode m : kAllModes)
    add("b_" + mode_name(m), nt.b(m), false, false);
  for (Mode m : kAllModes) {
    const double v = at(r.lambda_single, m);
    add("lambda_" + mode_name(m), v, v < 1.0);
  }
  for (ModePair p : kAllPairs) {
    const double v = at(r.lambda_pair, p);
    add("lambda_" + pair_name(p), v, v < 1.0);
  }
  for (ModePair p : kAllPairs) {
    add("K_" + pair_name(p) + "_plus", at(r.K_plus, p),
        std::min(at(r.K_plus, p), at(r.K_minus, p)) < 0.0);
    add("K_" + pair_name(p) + "_minus", at(r.K_minus, p),
        std::min(at(r.K_plus, p), at(r.K_minus, p)) < 0.0);
    add("C_" + pair_name(p), at(r.C_shot, p), at(r.C_shot, p) < 0.0);
  }
  for (Mode m : kAllModes)
    add("varW_" + mode_name(m), at(r.varW, m), at(r.varW, m) < 0.0);
  for (ModePair p : kAllPairs) {
    add("covW_" + pair_name(p), at(r.covW, p), false, false);
    add("sumvar_" + pair_name(p), at(r.sumvar, p), at(r.sumvar, p) < 0.0);
    add("diffvar_" + pair_name(p), at(r.diffvar, p), at(r.diffvar, p) < 0.0);
  }
  return rows;
}

std::vector<CrossCheckRow> closed_form_crosscheck(const RamanConfig& cfg) {
  const CoeffSet k = eval_coeffs(cfg);
  const NoiseTerms nt = noise_terms(cfg, k);
  const auto closed = closed_forms(cfg, k);

  std::vector<CrossCheckRow> rows;
  auto pick = [&](const std::string& key, double pipeline) {
    const auto it = closed.find(key);
    if (it != closed.end()) rows.push_back({key, pipeline, it->second});
  };
  const auto [kp_lv, km_lv] = entanglement(nt, ModePair::PumpPhonon);
  const auto [kp_sv, km_sv] = entanglement(nt, ModePair::StokesPhonon);
  pick("k_lv_plus", kp_lv);
  pick("k_lv_minus", km_lv);
  pick("k_sv_plus", kp_sv);
  pick("k_sv_minus", km_sv);
  pick("lambda_l", squeezing_single(nt, Mode::Pump));
  pick("lambda_v", squeezing_single(nt, Mode::Phonon));
  pick("varw_l", wave_variance(nt, Mode::Pump));
  pick("varw_v", wave_variance(nt, Mode::Phonon));
  pick("c_lv", sub_shot(nt, ModePair::PumpPhonon));
  pick("c_sv", sub_shot(nt, ModePair::StokesPhonon));
  pick("c_va", sub_shot(nt, ModePair::PhononAntiStokes));
  return rows;
}

namespace {

EvalContext figure_base() {
  EvalContext ctx;
  ctx.input.g = {1.0, 0.0};
  ctx.input.chi = {1.0, 0.0};
  ctx.input.omega_v = 1.0;
  ctx.input.omega_l = kDefaultPumpFrequency;
  ctx.input.gt = 0.1;
  ctx.input.xi = {Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}};
  return ctx;
}

void set_intensities(EvalContext& ctx, double il, double is, double iv,
                     double ia) {
  at(ctx.input.xi, Mode::Pump) = Complex{std::sqrt(il), 0.0};
  at(ctx.input.xi, Mode::Stokes) = Complex{std::sqrt(is), 0.0};
  at(ctx.input.xi, Mode::Phonon) = Complex{std::sqrt(iv), 0.0};
  at(ctx.input.xi, Mode::AntiStokes) = Complex{std::sqrt(ia), 0.0};
}

}  // namespace

std::vector<std::string> known_figures() {
  return {"1", "2", "3", "4", "5", "6", "7", "8", "9"};
}

std::vector<FigurePanel> figure_panels(const std::string& figure_id) {
  std::vector<FigurePanel> panels;
  auto add = [&](const std::string& name, const std::string& title,
                 EvalContext ctx, std::vector<SweepAxis> axes,
                 std::vector<std::string> quantities) {
    panels.push_back({name, title, std::move(ctx), std::move(axes),
                      std::move(quantities)});
  };

  if (figure_id == "1") {
    EvalContext c = figure_base();
    set_intensities(c, 10.0, 9.0, 0.01, 1.0);
    c.input.dw2 = 10.0;
    c.input.gt = 0.1;
    add("fig1a", "phonon squeezing vs Stokes detuning", c,
        {{"dw1", -100.0, 100.0, 801}}, {"lambda_v"});
    EvalContext ct = c;
    ct.input.dw1 = 10.0;
    add("fig1b", "pump-Stokes squeezing vs rescaled time", ct,
        {{"gt", 0.0, 0.5, 501}}, {"lambda_ls"});
    add("fig1c", "Stokes-anti-Stokes squeezing vs rescaled time", ct,
        {{"gt", 0.0, 0.5, 501}}, {"lambda_sa"});
    EvalContext cd = c;
    cd.input.dw1 = -19.0;  // the negative region sits at negative detuning
    add("fig1d", "phonon-anti-Stokes squeezing vs rescaled time", cd,
        {{"gt", 0.0, 0.5, 501}}, {"lambda_va"});
  } else if (figure_id == "2") {
    EvalContext c = figure_base();
    set_intensities(c, 10.0, 9.0, 0.0, 1.0);
    c.input.dw2 = 10.0;
    c.input.gt = 0.1;
    c.input.chaotic = true;
    add("fig2", "pump squeezing vs Stokes detuning and mean phonons", c,
        {{"dw1", 0.0, 100.0, 101}, {"n_mean", 0.0, 2.0, 41}}, {"lambda_l"});
  } else if (figure_id == "3") {
    EvalContext sv = figure_base();
    set_intensities(sv, 10.0, 0.0, 0.0, 0.0);
    sv.input.chaotic = true;  // phonon vacuum, n_mean = 0
    sv.input.gt = 0.1;
    add("fig3a", "Stokes-phonon joint numbers vs count and detuning", sv,
        {{"n", 0.0, 5.0, 51}, {"dw1", 0.0, 50.0, 51}}, {"p_sv"});
    EvalContext svb = sv;
    svb.n = 0.1;
    add("fig3b", "Stokes-phonon joint numbers vs detuning and time", svb,
        {{"dw1", 0.0, 50.0, 51}, {"gt", 0.0, 0.5, 51}}, {"p_sv"});
    EvalContext lv = figure_base();
    set_intensities(lv, 10.0, 0.0, 0.0, 1.0);
    lv.input.chaotic = true;
    lv.input.gt = 0.1;
    lv.n_l = 0.06;
    lv.n_v = 0.12;
    add("fig3c", "pump-phonon joint numbers vs both detunings", lv,
        {{"dw1", 0.0, 50.0, 51}, {"dw2", 0.0, 50.0, 51}}, {"p_lv"});
    EvalContext lvd = lv;
    lvd.n_v = 2.0;
    add("fig3d", "pump-phonon joint numbers vs pump count and locked detuning",
        lvd, {{"n_l", 0.0, 2.0, 21}, {"dw_locked_plus", 0.0, 30.0, 61}},
        {"p_lv"});
  } else if (figure_id == "4") {
    EvalContext sv = figure_base();
    set_intensities(sv, 10.0, 0.0, 0.0, 0.0);
    sv.input.chaotic = true;
    sv.input.gt = 0.1;
    add("fig4_sv", "Stokes-phonon threshold ordering parameter", sv,
        {{"dw1", 0.0, 30.0, 61}, {"dw2", 0.0, 30.0, 61}}, {"sth_sv"});
    EvalContext lv = figure_base();
    set_intensities(lv, 10.0, 0.0, 0.0, 1.0);
    lv.input.chaotic = true;
    lv.input.gt = 0.1;
    add("fig4_lv", "pump-phonon threshold ordering parameter", lv,
        {{"dw1", 0.0, 30.0, 61}, {"dw2", 0.0, 30.0, 61}}, {"sth_lv"});
  } else if (figure_id == "5") {
    EvalContext sv = figure_base();
    set_intensities(sv, 10.0, 0.0, 0.0, 0.0);
    sv.input.chaotic = true;
    sv.input.dw1 = 1.0;
    sv.input.dw2 = 1.0;
    sv.s = 0.8;
    sv.w_s = 1.0;
    sv.w_v = 0.5;
    add("fig5a", "Stokes-phonon quasidistribution vs rescaled time", sv,
        {{"gt", 0.0, 0.3, 301}}, {"quasi_sv"});
    EvalContext lv = figure_base();
    set_intensities(lv, 10.0, 0.0, 0.0, 1.0);
    lv.input.chaotic = true;
    lv.input.dw1 = 1.0;
    lv.input.dw2 = 1.0;
    lv.w_l = 1.0;
    lv.w_v = 0.5;
    add("fig5b", "pump-phonon quasidistribution vs rescaled time", lv,
        {{"gt", 0.01, 0.3, 291}}, {"quasi_lv"});
  } else if (figure_id == "6") {
    EvalContext lv = figure_base();
    set_intensities(lv, 10.0, 0.0, 0.0, 1.0);
    lv.input.chaotic = true;
    lv.input.gt = 0.1;
    lv.w_l = 0.1;
    lv.w_v = 0.05;
    add("fig6a", "pump-phonon quasidistribution vs both detunings", lv,
        {{"dw1", 0.0, 30.0, 61}, {"dw2", 0.0, 30.0, 61}}, {"quasi_lv"});
    add("fig6b", "pump-phonon quasidistribution vs time and locked detuning",
        lv, {{"gt", 0.01, 0.3, 59}, {"dw_locked_plus", 0.0, 30.0, 61}},
        {"quasi_lv"});
    EvalContext lvc = lv;
    add("fig6c", "pump-phonon quasidistribution vs locked detuning and W_L",
        lvc, {{"dw_locked_plus", 0.0, 30.0, 61}, {"w_l", 0.0, 2.0, 51}},
        {"quasi_lv"});
    EvalContext lvd = lv;
    lvd.w_l = 1.0;
    add("fig6d", "pump-phonon quasidistribution vs locked detuning and W_V",
        lvd, {{"dw_locked_plus", 0.0, 30.0, 61}, {"w_v", 0.0, 2.0, 51}},
        {"quasi_lv"});
  } else if (figure_id == "7") {
    EvalContext lv = figure_base();
    set_intensities(lv, 10.0, 0.0, 0.0, 1.0);
    lv.input.chaotic = true;
    lv.input.gt = 0.1;
    add("fig7", "conditional phonon Fano factor", lv,
        {{"n_l", 0.0, 10.0, 41}, {"dw_locked_plus", 0.0, 30.0, 61}},
        {"fano_v"});
  } else if (figure_id == "8") {
    EvalContext lv = figure_base();
    set_intensities(lv, 10.0, 0.0, 0.0, 1.0);
    lv.input.chaotic = true;
    lv.input.gt = 0.1;
    lv.n_l = 1.0;
    lv.n_v = 2.0;
    add("fig8a", "conditional pump numbers vs both detunings", lv,
        {{"dw1", 0.0, 30.0, 61}, {"dw2", 0.0, 30.0, 61}}, {"pc_l"});
    add("fig8b", "conditional phonon numbers vs time and locked detuning", lv,
        {{"gt", 0.0, 0.3, 61}, {"dw_locked_plus", 0.0, 30.0, 61}}, {"pc_v"});
  } else if (figure_id == "9") {
    EvalContext lv = figure_base();
    set_intensities(lv, 10.0, 0.0, 0.0, 1.0);
    lv.input.chaotic = true;
    lv.input.gt = 0.1;
    lv.n = 1.6;
    add("fig9a", "difference and Poissonian distributions vs detunings", lv,
        {{"dw1", 0.0, 30.0, 61}, {"dw2", 0.0, 30.0, 61}},
        {"p_minus", "p_poiss"});
    add("fig9b", "difference and Poissonian distributions vs count", lv,
        {{"n", 0.0, 6.0, 61}, {"dw_locked_plus", 0.0, 30.0, 61}},
        {"p_minus", "p_poiss"});
  } else {
    throw ValidationError("unknown figure id '" + figure_id + "'");
  }
  return panels;
}

}  // namespace raman
