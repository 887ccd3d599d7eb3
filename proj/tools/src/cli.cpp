#include "cylindric/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "cylindric/identity.hpp"
#include "cylindric/io.hpp"
#include "cylindric/paths.hpp"
#include "cylindric/render.hpp"
#include "cylindric/symfunc.hpp"

namespace cylindric::cli {

namespace {

// Bad flags, unreadable files, malformed records.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw InputError("cannot read " + path);
    in = &file;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(*in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  return lines;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
  if (!file) throw InputError("error writing " + path);
}

Profile parse_profile(const std::string& s) {
  try {
    return Profile(s);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

struct PointArgs {
  std::string q;
  std::string t;

  void attach(CLI::App* app) {
    app->add_option("--q", q, "q as an exact rational A/B");
    app->add_option("--t", t, "t as an exact rational A/B");
  }
  bool given() const { return !q.empty() || !t.empty(); }
  QtPoint get(const QtPoint& fallback) const {
    if (q.empty() != t.empty()) throw InputError("--q and --t must be given together");
    if (!given()) return fallback;
    try {
      return {parse_rational(q), parse_rational(t)};
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
};

std::string monomial_string(const std::vector<std::string>& names, const std::vector<int>& e) {
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (!e[v]) continue;
    if (!out.empty()) out += '*';
    out += names[v];
    if (e[v] > 1) out += '^' + std::to_string(e[v]);
  }
  return out.empty() ? "1" : out;
}

// Splits a series into its coefficients with respect to the variables from
// `offset` on; the leading variables (q, t in series mode) stay in the
// coefficient.
std::map<std::vector<int>, Series> split(const Series& f, std::size_t offset) {
  const SeriesSpace& sp = *f.space();
  std::vector<std::string> names(sp.names().begin(), sp.names().begin() + static_cast<long>(offset));
  std::vector<int> bounds;
  for (std::size_t v = 0; v < offset; ++v) bounds.push_back(sp.max_degree(v));
  const auto coeff_space = make_space(names, bounds, std::vector<bool>(offset, false));
  std::map<std::vector<int>, Series> out;
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> outer(e.begin() + static_cast<long>(offset), e.end());
    std::vector<int> inner(e.begin(), e.begin() + static_cast<long>(offset));
    auto [it, fresh] = out.try_emplace(std::move(outer), coeff_space);
    it->second.add_term(inner, c);
  }
  return out;
}

// Prints rows of cells with each column padded to its widest entry.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

// Graded order on exponent vectors, as in Series::terms.
bool graded_less(const std::vector<int>& a, const std::vector<int>& b) {
  int da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da < db;
  return a > b;
}

// Side-by-side table of two series over the same space, grouped by the
// variables from `offset` on. Returns true when they agree.
bool compare_table(std::ostream& out, std::ostream& err, const Series& lhs, const Series& rhs, std::size_t offset,
                   const std::string& left_name, const std::string& right_name) {
  const auto l = split(lhs, offset), r = split(rhs, offset);
  std::vector<std::vector<int>> keys;
  for (const auto& [k, _] : l) keys.push_back(k);
  for (const auto& [k, _] : r)
    if (!l.count(k)) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), graded_less);
  const auto& all_names = lhs.space()->names();
  const std::vector<std::string> outer_names(all_names.begin() + static_cast<long>(offset), all_names.end());

  std::vector<std::vector<std::string>> rows{{"monomial", left_name, right_name, "status"}};
  for (const auto& k : keys) {
    const auto li = l.find(k), ri = r.find(k);
    const std::string ls = li == l.end() ? "0" : li->second.to_string();
    const std::string rs = ri == r.end() ? "0" : ri->second.to_string();
    rows.push_back({monomial_string(outer_names, k), ls, rs, ls == rs ? "ok" : "MISMATCH"});
  }
  print_table(out, rows);
  if (const auto m = first_mismatch(lhs, rhs)) {
    err << "mismatch at " << monomial_string(all_names, m->exponents) << ": " << left_name << " " << m->lhs << ", "
        << right_name << " " << m->rhs << '\n';
    out << "FAIL\n";
    return false;
  }
  out << "PASS\n";
  return true;
}

CoefficientMode make_mode(const std::string& mode, int qt_degree, const PointArgs& point) {
  if (mode == "series") {
    if (point.given()) throw InputError("--q/--t only apply to --mode eval");
    return CoefficientMode::series(qt_degree);
  }
  return CoefficientMode::eval(point.get(default_points().front()));
}

// --- subcommands ----------------------------------------------------------

struct EnumerateArgs {
  std::string profile;
  int max_weight = 0;
  std::string jsonl;
  unsigned threads = 1;
  bool rpp = false;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const auto cpps = enumerate(parse_profile(a.profile), a.max_weight, {a.threads, a.rpp});
  std::string text;
  for (const auto& c : cpps) text += to_json(c) + '\n';
  if (a.jsonl.empty())
    out << text;
  else
    write_file(a.jsonl, text);
  return kSuccess;
}

int cmd_weight(const std::string& in, const PointArgs& point, std::ostream& out) {
  const std::optional<QtPoint> p = point.given() ? std::optional<QtPoint>(point.get({})) : std::nullopt;
  for (const auto& line : read_lines(in)) out << weight_record(cpp_from_json(line), p) << '\n';
  return kSuccess;
}

int cmd_paths(bool to, const std::string& in, std::ostream& out) {
  for (const auto& line : read_lines(in)) {
    if (to)
      out << to_json(to_paths(cpp_from_json(line))) << '\n';
    else
      out << to_json(from_paths(path_family_from_json(line))) << '\n';
  }
  return kSuccess;
}

struct VerifyArgs {
  std::string profile;
  int max_weight = 0;
  std::string mode = "eval";
  bool refined = false;
  int qt_degree = 8;
  PointArgs point;
  unsigned threads = 1;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  IdentityOptions o;
  o.max_weight = a.max_weight;
  o.mode = make_mode(a.mode, a.qt_degree, a.point);
  o.refined = a.refined;
  o.threads = a.threads;
  const Profile profile = parse_profile(a.profile);
  const IdentityReport r = verify(profile, o);
  if (a.json) {
    out << to_json(r) << '\n';
    if (const auto& m = r.first_mismatch)
      err << "mismatch at " << monomial_string(r.lhs.space()->names(), m->exponents) << '\n';
    return r.passed() ? kSuccess : kMismatch;
  }
  out << "profile " << profile.str() << "  max-weight " << a.max_weight << "  mode " << o.mode.describe()
      << (a.refined ? "  refined" : "") << '\n';
  return compare_table(out, err, r.lhs, r.rhs, o.mode.is_series() ? 2 : 0, "lhs", "rhs") ? kSuccess : kMismatch;
}

struct SpecialArgs {
  bool borodin = false, stanley = false, okada = false, macmahon = false;
  std::string profile;
  int max_weight = 6;
  std::string mode = "eval";
  int qt_degree = 8;
  PointArgs point;
  std::string q_equals_t = "2/7";
  int a = 5, b = 5;
  unsigned threads = 1;
};

std::vector<std::string> coefficient_strings(const Series& f) {
  std::vector<std::string> out;
  for (const auto& c : z_coefficients(f)) out.push_back(c.get_str());
  return out;
}

// One row per power of z; returns true when every column agrees.
bool z_table(std::ostream& out, const std::vector<std::string>& names, const std::vector<Series>& columns) {
  std::vector<std::vector<std::string>> cols;
  for (const auto& s : columns) cols.push_back(coefficient_strings(s));
  std::vector<std::vector<std::string>> rows{{"n"}};
  for (const auto& n : names) rows.front().push_back(n);
  bool ok = true;
  for (std::size_t n = 0; n < cols.front().size(); ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& c : cols) {
      row.push_back(c[n]);
      ok = ok && c[n] == cols.front()[n];
    }
    rows.push_back(std::move(row));
  }
  print_table(out, rows);
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok;
}

int cmd_special(const SpecialArgs& a, std::ostream& out, std::ostream& err) {
  const int chosen = a.borodin + a.stanley + a.okada + a.macmahon;
  if (chosen != 1) throw InputError("special: choose exactly one of --borodin, --stanley, --okada, --macmahon");
  if (a.macmahon) {
    const MacMahonReport r = macmahon_check(a.a, a.b, a.max_weight);
    std::vector<std::vector<std::string>> rows{{"n", "reverse plane partitions", "product", "plane partitions"}};
    for (std::size_t n = 0; n < r.rpp.size(); ++n)
      rows.push_back({std::to_string(n), r.rpp[n].get_str(), r.product[n].get_str(), std::to_string(r.direct[n])});
    out << "profile 1^" << a.a << " 0^" << a.b << " at q=t, max-weight " << a.max_weight << '\n';
    print_table(out, rows);
    out << (r.passed() ? "PASS" : "FAIL") << '\n';
    if (!r.passed()) err << "MacMahon coefficients disagree\n";
    return r.passed() ? kSuccess : kMismatch;
  }
  if (a.profile.empty()) throw InputError("special: --profile is required");
  const Profile profile = parse_profile(a.profile);
  IdentityOptions o;
  o.max_weight = a.max_weight;
  o.threads = a.threads;
  if (a.okada) {
    o.mode = make_mode(a.mode, a.qt_degree, a.point);
    const auto [lhs, rhs] = rpp_series(profile, o);
    out << "reverse plane partitions, profile " << profile.str() << "  mode " << o.mode.describe() << '\n';
    return compare_table(out, err, lhs, rhs, o.mode.is_series() ? 2 : 0, "lhs", "rhs") ? kSuccess : kMismatch;
  }
  Rational q;
  try {
    q = parse_rational(a.q_equals_t);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  o.mode = CoefficientMode::eval({q, q});
  bool ok;
  if (a.borodin) {
    out << "profile " << profile.str() << " at q=t=" << q << '\n';
    ok = z_table(out, {"count", "product", "lhs", "rhs"},
                 {count_series(profile, a.max_weight, false, a.threads), borodin_product(profile, a.max_weight),
                  lhs_series(profile, o), rhs_series(profile, o)});
  } else {
    out << "reverse plane partitions, profile " << profile.str() << " at q=t=" << q << '\n';
    const auto [lhs, rhs] = rpp_series(profile, o);
    ok = z_table(out, {"count", "product", "lhs", "rhs"},
                 {count_series(profile, a.max_weight, true, a.threads), stanley_product(profile, a.max_weight), lhs,
                  rhs});
  }
  if (!ok) err << "specialization columns disagree\n";
  return ok ? kSuccess : kMismatch;
}

struct MacdonaldArgs {
  bool pieri = false, commutation = false, basis = false;
  int max_degree = 3;
  int order = 4;
  PointArgs point;
};

int cmd_macdonald(const MacdonaldArgs& a, std::ostream& out, std::ostream& err) {
  if (a.pieri + a.commutation + a.basis != 1)
    throw InputError("macdonald: choose exactly one of --pieri, --commutation, --basis");
  if (a.max_degree < 0 || a.max_degree > 6) throw InputError("macdonald: --max-deg must be in 0..6");
  const QtPoint p = a.point.get(default_points().front());
  const MacdonaldOracle oracle(a.max_degree, p);
  out << "q=" << p.q << " t=" << p.t << '\n';
  if (a.basis) {
    for (const auto& lambda : partitions_up_to(a.max_degree)) {
      std::string line = "P" + to_string(lambda) + " =";
      bool first = true;
      for (const auto& [mu, c] : oracle.to_monomial(oracle.P(lambda))) {
        line += (first ? " " : " + ") + c.get_str() + "*m" + to_string(mu);
        first = false;
      }
      out << line << '\n';
    }
    return kSuccess;
  }
  if (a.pieri) {
    std::vector<std::vector<std::string>> rows{{"lambda", "mu", "phi", "psi", "product formula"}};
    bool ok = true;
    for (const auto& e : extract_pieri_coeffs(oracle, a.max_degree)) {
      if (!is_horizontal_strip(e.lambda, e.mu)) {
        if (e.phi != 0 || e.psi != 0) {
          ok = false;
          err << "nonzero coefficient for non-strip " << to_string(e.lambda) << "/" << to_string(e.mu) << '\n';
        }
        continue;
      }
      const bool match =
          e.phi == pieri_phi(e.lambda, e.mu).value(p) && e.psi == pieri_psi(e.lambda, e.mu).value(p);
      ok = ok && match;
      rows.push_back({to_string(e.lambda), to_string(e.mu), e.phi.get_str(), e.psi.get_str(), match ? "ok" : "MISMATCH"});
    }
    print_table(out, rows);
    out << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kSuccess : kMismatch;
  }
  const CommutationReport r = verify_commutation(oracle, a.max_degree, a.order);
  std::vector<std::vector<std::string>> rows{{"n", "s_n", "(t;q)_n/(q;q)_n"}};
  for (std::size_t n = 0; n < r.scalar.size(); ++n)
    rows.push_back({std::to_string(n), r.scalar[n].get_str(), r.expected[n].get_str()});
  print_table(out, rows);
  out << "lambda-independent: " << (r.lambda_independent ? "yes" : "no") << '\n';
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
  if (!r.passed()) err << (r.failure.empty() ? "commutation scalar differs from the expected ratio" : r.failure) << '\n';
  return r.passed() ? kSuccess : kMismatch;
}

int cmd_render(const std::string& in, const std::string& svg) {
  const auto lines = read_lines(in);
  if (lines.empty()) throw InputError("render: no record in " + in);
  write_file(svg, render_svg(to_paths(cpp_from_json(lines.front()))));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cylindric plane partitions, their (q,t) weights, and generating-function identities", "cylpp"};
  app.require_subcommand(1);

  EnumerateArgs en;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List cylindric plane partitions as JSON lines");
  enumerate_cmd->add_option("--profile", en.profile, "Profile over {0,1}")->required();
  enumerate_cmd->add_option("--max-weight", en.max_weight, "Largest weight")->required()->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--jsonl", en.jsonl, "Write to this file instead of stdout");
  enumerate_cmd->add_option("--threads", en.threads, "Worker threads")->check(CLI::PositiveNumber);
  enumerate_cmd->add_flag("--rpp", en.rpp, "Only reverse plane partitions (first and last partition empty)");

  std::string weight_in;
  PointArgs weight_point;
  auto* weight_cmd = app.add_subcommand("weight", "Attach Macdonald weights to JSON lines");
  weight_cmd->add_option("--in", weight_in, "Input JSON lines ('-' for stdin)")->required();
  weight_point.attach(weight_cmd);

  std::string paths_in;
  bool paths_to = false, paths_from = false;
  auto* paths_cmd = app.add_subcommand("paths", "Convert between partitions and lattice path families");
  auto* to_flag = paths_cmd->add_flag("--to", paths_to, "Partitions to path families");
  auto* from_flag = paths_cmd->add_flag("--from", paths_from, "Path families to partitions");
  to_flag->excludes(from_flag);
  paths_cmd->add_option("--in", paths_in, "Input JSON lines ('-' for stdin)")->required();

  VerifyArgs ve;
  auto* verify_cmd = app.add_subcommand("verify", "Compare both sides of the generating-function identity");
  verify_cmd->add_option("--profile", ve.profile, "Profile over {0,1}")->required();
  verify_cmd->add_option("--max-weight", ve.max_weight, "z-degree bound")->required()->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--mode", ve.mode, "series or eval")->check(CLI::IsMember({"series", "eval"}));
  verify_cmd->add_flag("--refined", ve.refined, "One variable per cylinder position");
  verify_cmd->add_option("--qt-deg", ve.qt_degree, "(q,t)-degree bound in series mode")->check(CLI::NonNegativeNumber);
  ve.point.attach(verify_cmd);
  verify_cmd->add_option("--threads", ve.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", ve.json, "Print the report as JSON");

  SpecialArgs sp;
  auto* special_cmd = app.add_subcommand("special", "Specializations of the identity");
  special_cmd->add_flag("--borodin", sp.borodin, "q = t: counts against the product formula");
  special_cmd->add_flag("--stanley", sp.stanley, "Reverse plane partitions at q = t");
  special_cmd->add_flag("--okada", sp.okada, "Reverse plane partitions with (q,t) weights");
  special_cmd->add_flag("--macmahon", sp.macmahon, "Plane partitions via profile 1^a 0^b");
  special_cmd->add_option("--profile", sp.profile, "Profile over {0,1}");
  special_cmd->add_option("--max-weight", sp.max_weight, "z-degree bound")->check(CLI::NonNegativeNumber);
  special_cmd->add_option("--mode", sp.mode, "series or eval (--okada)")->check(CLI::IsMember({"series", "eval"}));
  special_cmd->add_option("--qt-deg", sp.qt_degree, "(q,t)-degree bound in series mode")->check(CLI::NonNegativeNumber);
  sp.point.attach(special_cmd);
  special_cmd->add_option("--at", sp.q_equals_t, "Common value of q and t (--borodin, --stanley)");
  special_cmd->add_option("--a", sp.a, "Number of ones (--macmahon)")->check(CLI::NonNegativeNumber);
  special_cmd->add_option("--b", sp.b, "Number of zeros (--macmahon)")->check(CLI::NonNegativeNumber);
  special_cmd->add_option("--threads", sp.threads, "Worker threads")->check(CLI::PositiveNumber);

  MacdonaldArgs ma;
  auto* macdonald_cmd = app.add_subcommand("macdonald", "Symmetric-function oracle");
  macdonald_cmd->add_flag("--pieri", ma.pieri, "Pieri coefficients against the product formulas");
  macdonald_cmd->add_flag("--commutation", ma.commutation, "Commutation scalar of the add/remove operators");
  macdonald_cmd->add_flag("--basis", ma.basis, "Monomial expansions of P_lambda");
  macdonald_cmd->add_option("--max-deg", ma.max_degree, "Degree bound (0..6)");
  macdonald_cmd->add_option("--order", ma.order, "z-order for --commutation")->check(CLI::NonNegativeNumber);
  ma.point.attach(macdonald_cmd);

  std::string render_in, render_svg_path;
  auto* render_cmd = app.add_subcommand("render", "Draw the lattice paths of a partition as SVG");
  render_cmd->add_option("--in", render_in, "Input JSON lines; the first record is drawn")->required();
  render_cmd->add_option("--svg", render_svg_path, "Output SVG file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*enumerate_cmd) return cmd_enumerate(en, out);
    if (*weight_cmd) return cmd_weight(weight_in, weight_point, out);
    if (*paths_cmd) {
      if (!paths_to && !paths_from) throw InputError("paths: give --to or --from");
      return cmd_paths(paths_to, paths_in, out);
    }
    if (*verify_cmd) return cmd_verify(ve, out, err);
    if (*special_cmd) return cmd_special(sp, out, err);
    if (*macdonald_cmd) return cmd_macdonald(ma, out, err);
    if (*render_cmd) return cmd_render(render_in, render_svg_path);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace cylindric::cli
