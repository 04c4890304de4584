#include "report.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace trigonal::io {

namespace {

real parse_real(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw NumericError(ErrorCode::InvalidParam, "cannot parse number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string num(real v) {
  // Shortest round-trip text for the double value, as the JSON writer uses.
  return ordered_json(static_cast<double>(v)).dump();
}

}  // namespace

cplx parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_real(parts[0]), 0};
  if (parts.size() == 2) return {parse_real(parts[0]), parse_real(parts[1])};
  throw NumericError(ErrorCode::InvalidParam, "complex value must be 're,im' or a real: '" + text + "'");
}

std::vector<cplx> parse_grid(const std::string& text) {
  std::vector<cplx> grid;
  for (const auto& part : split(text, ',')) grid.emplace_back(parse_real(part), 0);
  return grid;
}

CVec parse_vector(const std::string& text) {
  const auto parts = split(text, ';');
  CVec v(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) v[static_cast<Eigen::Index>(i)] = parse_complex(parts[i]);
  return v;
}

ordered_json to_json(cplx z) {
  return ordered_json::array({static_cast<double>(z.real()), static_cast<double>(z.imag())});
}

ordered_json to_json(const CVec& v) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

ordered_json to_json(const CMat& m) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(CVec(m.row(i).transpose())));
  return out;
}

ordered_json to_json(const RVec& v) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(static_cast<double>(v[i]));
  return out;
}

ordered_json to_json(const FamilyParams& p) {
  return {{"b1", to_json(p.b1)}, {"b2", to_json(p.b2)}, {"s", to_json(p.s)}};
}

ordered_json to_json(const PeriodData& pd) {
  const auto& d = pd.diag;
  ordered_json diag = {
      {"legendre_defect", static_cast<double>(d.legendre_defect)},
      {"legendre_displayed_defect", static_cast<double>(d.legendre_printed_defect)},
      {"tau_symmetry_defect", static_cast<double>(d.tau_symmetry_defect)},
      {"im_tau_min_eigenvalue", static_cast<double>(d.im_tau_min_eig)},
      {"closed_loop_defect", static_cast<double>(d.closed_loop_defect)},
      {"divisor_vanishing", static_cast<double>(d.divisor_best)},
      {"divisor_runner_up", static_cast<double>(d.divisor_runner_up)},
  };
  return {{"genus", pd.genus},
          {"params", to_json(pd.params)},
          {"omega_p", to_json(pd.omega_p)},
          {"omega_pp", to_json(pd.omega_pp)},
          {"eta_p", to_json(pd.eta_p)},
          {"eta_pp", to_json(pd.eta_pp)},
          {"tau", to_json(pd.tau)},
          {"characteristic", {{"a", to_json(pd.delta.a)}, {"b", to_json(pd.delta.b)}}},
          {"riemann_constant", to_json(pd.xi)},
          {"riemann_constant_shifted", to_json(pd.xi_shifted)},
          {"b0_image", to_json(pd.b0_image)},
          {"diagnostics", diag}};
}

ordered_json to_json(const IdentityCheck& c) {
  return {{"suite", c.suite},
          {"identity", c.identity},
          {"defect", static_cast<double>(c.defect)},
          {"tol", static_cast<double>(c.tol)},
          {"pass", c.pass()},
          {"form", c.displayed ? "displayed" : "consistent"}};
}

ordered_json to_json(const CheckList& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

ordered_json to_json(const DegenerationReport& r) {
  ordered_json grid = ordered_json::array(), values = ordered_json::array();
  for (cplx s : r.s_grid) grid.push_back(to_json(s));
  for (cplx v : r.values) values.push_back(to_json(v));
  return {{"observable", r.observable},
          {"key", observable_key(r.observable)},
          {"s_grid", grid},
          {"values", values},
          {"fitted_exponent", static_cast<double>(r.fitted_exponent)},
          {"limit_estimate", to_json(r.limit_estimate)},
          {"fit_residual", static_cast<double>(r.fit_residual)}};
}

ordered_json to_json(const MainTheoremPoint& m) {
  ordered_json ratios = ordered_json::array();
  for (cplx r : m.ratios) ratios.push_back(to_json(r));
  return {{"x1", to_json(m.p1.x)},
          {"sheet1", m.p1.sheet},
          {"x2", to_json(m.p2.x)},
          {"sheet2", m.p2.sheet},
          {"ratios", ratios},
          {"limit", to_json(m.limit)},
          {"modulus_defect_smallest_s", static_cast<double>(m.modulus_defect_last)},
          {"modulus_defect_limit", static_cast<double>(m.modulus_defect_limit)},
          {"phase_cube_defect", static_cast<double>(m.phase_cube_defect)},
          {"convergence_exponent", static_cast<double>(m.convergence_exponent)},
          {"pass", m.modulus_defect_last < 0.02L && m.phase_cube_defect < 1e-4L}};
}

ordered_json error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

std::string checks_csv(const CheckList& rows) {
  std::ostringstream out;
  out << "suite,identity,defect,tol,pass,form\n";
  for (const auto& r : rows) {
    out << r.suite << ",\"" << r.identity << "\"," << num(r.defect) << ',' << num(r.tol) << ','
        << (r.pass() ? "true" : "false") << ',' << (r.displayed ? "displayed" : "consistent") << '\n';
  }
  return out.str();
}

std::string reports_csv(const std::vector<DegenerationReport>& reports) {
  std::ostringstream out;
  out << "observable,s_re,s_im,value_re,value_im,fitted_exponent\n";
  for (const auto& r : reports) {
    for (std::size_t i = 0; i < r.s_grid.size(); ++i) {
      out << observable_key(r.observable) << ',' << num(r.s_grid[i].real()) << ',' << num(r.s_grid[i].imag())
          << ',' << num(r.values[i].real()) << ',' << num(r.values[i].imag()) << ',' << num(r.fitted_exponent)
          << '\n';
    }
  }
  return out.str();
}

std::string periods_csv(const PeriodData& pd) {
  std::ostringstream out;
  out << "matrix,row,col,re,im\n";
  const std::pair<const char*, const CMat*> mats[] = {{"omega_p", &pd.omega_p}, {"omega_pp", &pd.omega_pp},
                                                      {"eta_p", &pd.eta_p},     {"eta_pp", &pd.eta_pp},
                                                      {"tau", &pd.tau}};
  for (const auto& [name, m] : mats) {
    for (Eigen::Index i = 0; i < m->rows(); ++i)
      for (Eigen::Index j = 0; j < m->cols(); ++j)
        out << name << ',' << i + 1 << ',' << j + 1 << ',' << num((*m)(i, j).real()) << ','
            << num((*m)(i, j).imag()) << '\n';
  }
  return out.str();
}

std::string observable_key(const std::string& name) {
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char ch = name[i];
    if (ch == '\'') {
      if (i + 1 < name.size() && name[i + 1] == '\'') {
        out += "_pp";
        ++i;
      } else {
        out += "_p";
      }
    } else if (ch == ' ') {
      if (!out.empty() && out.back() != '_') out += '_';
    } else {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
  }
  std::string squeezed;
  for (char ch : out)
    if (!(ch == '_' && !squeezed.empty() && squeezed.back() == '_')) squeezed += ch;
  return squeezed;
}

}  // namespace trigonal::io
