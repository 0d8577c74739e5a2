#include "logder/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>

#include "logder/arrangement.hpp"
#include "logder/constraints.hpp"
#include "logder/error.hpp"
#include "logder/io.hpp"
#include "logder/logderiv.hpp"
#include "logder/syzygy.hpp"
#include "logder/ziegler.hpp"

namespace logder::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Json diagnostics = Json::array();

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["diagnostics"] = diagnostics;
    return j;
  }
};

// ------------------------------------------------------------- rendering

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render_text(const Json& j, int indent, std::ostream& out);

void render_entry(const std::string& prefix, const Json& value, int indent, std::ostream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_scalar(value)) {
    out << pad << prefix << scalar_text(value) << "\n";
    return;
  }
  if (value.is_array() && std::all_of(value.begin(), value.end(), is_scalar)) {
    std::string inline_text = "[";
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i) inline_text += ", ";
      inline_text += scalar_text(value[i]);
    }
    inline_text += "]";
    if (inline_text.size() + prefix.size() + pad.size() <= 100) {
      out << pad << prefix << inline_text << "\n";
      return;
    }
  }
  if (value.empty()) {
    out << pad << prefix << (value.is_array() ? "[]" : "{}") << "\n";
    return;
  }
  out << pad << prefix.substr(0, prefix.size() - 1) << "\n";
  render_text(value, indent + 2, out);
}

void render_text(const Json& j, int indent, std::ostream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) render_entry(key + ": ", value, indent, out);
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object() && !value.empty()) {
        bool first = true;
        for (const auto& [key, inner] : value.items()) {
          const std::string lead = first ? "- " : "  ";
          first = false;
          std::ostringstream buffer;
          render_entry(key + ": ", inner, indent + 2, buffer);
          std::string text = buffer.str();
          text.replace(static_cast<std::size_t>(indent), 2, lead);
          out << text;
        }
      } else {
        render_entry("- ", value, indent, out);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

void emit(const Report& report, bool json, std::ostream& out) {
  if (json) {
    out << report.to_json().dump(2) << "\n";
    return;
  }
  Json j = report.to_json();
  render_text(j, 0, out);
}

// ------------------------------------------------------------ formatting

Json rational_list(std::span<const Rational> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return arr;
}

Json one_based(std::span<const std::size_t> indices) {
  Json arr = Json::array();
  for (auto i : indices) arr.push_back(i + 1);
  return arr;
}

Json derivation_json(const Derivation& d) {
  Json arr = Json::array();
  for (const auto& p : d.coords()) arr.push_back(to_string(p));
  return arr;
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    rows.push_back(rational_list(row));
  }
  return rows;
}

std::string form_text(const LinearForm& f) { return to_string(f.to_polynomial()); }

std::string row_text(const ConstraintRow& row) {
  std::string out;
  bool first = true;
  for (const auto& [cell, b] : row.coefficients) {
    const std::string symbol = "c[" + std::to_string(cell.first + 1) + "," + std::to_string(cell.second + 1) + "]";
    const Rational magnitude = abs(b);
    if (first) {
      if (b < 0) out += "-";
    } else {
      out += b < 0 ? " - " : " + ";
    }
    first = false;
    out += magnitude == 1 ? symbol : magnitude.get_str() + "*" + symbol;
  }
  return (out.empty() ? "0" : out) + " = 0";
}

Json row_json(const ConstraintRow& row) {
  Json j;
  j["kind"] = row.kind();
  if (const auto* s = std::get_if<InteriorSource>(&row.source)) {
    j["hyperplane"] = s->hyperplane + 1;
    j["reduced_monomial"] = to_string(Polynomial::monomial(s->reduced));
  } else if (const auto* s = std::get_if<ExteriorSource>(&row.source)) {
    j["circuit"] = one_based(s->circuit.indices);
    j["monomial"] = s->monomial + 1;
  } else if (const auto* s = std::get_if<HiddenSource>(&row.source)) {
    j["point"] = rational_list(s->point);
    j["basis"] = one_based(s->basis);
  }
  j["relation"] = row_text(row);
  return j;
}

// ---------------------------------------------------------------- inputs

Arrangement read_arrangement(const std::string& path) { return load_arrangement(read_text_file(path)); }

Derivation read_derivation(const std::string& path, std::size_t ell) {
  return load_derivation(read_text_file(path), ell);
}

std::vector<std::size_t> parse_indices(const std::string& text, std::size_t n) {
  std::vector<std::size_t> out;
  for (const auto& v : parse_rational_list(text)) {
    if (v.get_den() != 1 || v < 1 || v > static_cast<long>(n)) {
      throw InputError("hyperplane index '" + v.get_str() + "' outside 1.." + std::to_string(n));
    }
    out.push_back(v.get_num().get_ui() - 1);
  }
  return out;
}

std::size_t equation_index(long j, const Arrangement& a) {
  if (j < static_cast<long>(a.ell()) + 1 || j > static_cast<long>(a.size())) {
    throw InputError("equation index " + std::to_string(j) + " outside " + std::to_string(a.ell() + 1) + ".." +
                     std::to_string(a.size()));
  }
  return static_cast<std::size_t>(j - 1);
}

/// Canonicalizes when needed and records what was done.
Arrangement canonical_input(const Arrangement& a, Report& report) {
  if (a.is_canonical()) {
    report.results["canonicalized"] = false;
    return a;
  }
  auto cf = to_canonical(a);
  report.results["canonicalized"] = true;
  report.results["permutation"] = one_based(cf.change.permutation);
  report.results["change_of_basis"] = matrix_json(cf.change.matrix);
  report.diagnostics.push_back("input was not canonical; working in coordinates X = A x");
  return cf.arrangement;
}

// -------------------------------------------------------------- commands

struct Options {
  bool json = false;
  int max_degree = 12;
  int height = 3;
  std::array<std::string, 3> files;
  int degree = -1;
  long j = -1;
  int check_degree = 3;
  std::string basis;
  std::string point;
  std::string perm;
  std::string emit_dir;
};

void cmd_arr_lattice(const Options& o, Report& r) {
  const Arrangement a = read_arrangement(o.files[0]);
  const auto flats = intersection_lattice(a);
  Json counts = Json::object();
  Json list = Json::array();
  for (const auto& f : flats) {
    const std::string key = std::to_string(f.rank);
    counts[key] = counts.value(key, 0) + 1;
    list.push_back({{"rank", f.rank}, {"hyperplanes", one_based(f.hyperplanes)}});
  }
  r.results["ell"] = a.ell();
  r.results["n"] = a.size();
  r.results["flats_per_rank"] = counts;
  r.results["flats"] = list;
}

void cmd_arr_canonical(const Options& o, Report& r) {
  const Arrangement a = read_arrangement(o.files[0]);
  const auto cf = to_canonical(a);
  r.results["identity"] = cf.change.is_identity();
  r.results["permutation"] = one_based(cf.change.permutation);
  r.results["matrix"] = matrix_json(cf.change.matrix);
  r.results["inverse"] = matrix_json(cf.change.inverse);
  Json forms = Json::array();
  for (const auto& f : cf.arrangement.forms()) forms.push_back(form_text(f));
  r.results["forms"] = forms;
}

void cmd_arr_circuits(const Options& o, Report& r) {
  const Arrangement a = read_arrangement(o.files[0]);
  Json list = Json::array();
  for (const auto& c : circuits(a)) {
    list.push_back({{"indices", one_based(c.indices)}, {"coefficients", rational_list(c.coefficients)}});
  }
  r.results["count"] = list.size();
  r.results["circuits"] = list;
}

void cmd_deriv_check(const Options& o, Report& r) {
  const Arrangement a = read_arrangement(o.files[0]);
  const Derivation theta = read_derivation(o.files[1], a.ell());
  const KTuple k = k_vector(a, theta);
  const auto d = theta.degree();
  // For homogeneous theta of degree d every k_i lies in S_{d-1}, the zero
  // polynomial included; otherwise report the plain degree (null for 0).
  auto k_degree = [&](const Polynomial& p) -> Json {
    if (d) return *d - 1;
    return p.is_zero() ? Json(nullptr) : Json(p.degree());
  };
  Json entries = Json::array();
  Json degrees = Json::array();
  Json zeros = Json::array();
  for (std::size_t i = 0; i < k.entries.size(); ++i) {
    entries.push_back({{"hyperplane", i + 1}, {"k", to_string(k.entries[i])}, {"degree", k_degree(k.entries[i])}});
    degrees.push_back(k_degree(k.entries[i]));
    if (k.entries[i].is_zero()) zeros.push_back(i + 1);
  }
  r.results["logarithmic"] = true;
  r.results["derivation_degree"] = d ? Json(*d) : Json(nullptr);
  r.results["k_degrees"] = degrees;
  r.results["zero_k"] = zeros;
  for (const auto& i : zeros) {
    const std::string index = std::to_string(i.get<std::size_t>());
    r.diagnostics.push_back("k_" + index + " is identically zero: theta is tangent to hyperplane " + index);
  }
  r.results["theta_Q_over_Q"] = to_string(k.sum());
  r.results["k_vector"] = entries;
}

void cmd_deriv_graded(const Options& o, Report& r) {
  if (o.degree < 0) throw CLI::ValidationError("-d", "degree is required");
  const Arrangement a = read_arrangement(o.files[0]);
  const GradedBasis g = graded_component(a, o.degree);
  const std::size_t euler = euler_multiple_dimension(a.ell(), o.degree);
  r.results["degree"] = o.degree;
  r.results["dimension"] = g.dimension();
  r.results["euler_multiple_dimension"] = euler;
  r.results["excess_over_euler_multiples"] = static_cast<long>(g.dimension()) - static_cast<long>(euler);
  Json members = Json::array();
  for (const auto& m : g.members) members.push_back(derivation_json(m));
  r.results["members"] = members;
}

void cmd_free_check(const Options& o, Report& r) {
  const Arrangement a = read_arrangement(o.files[0]);
  const FreenessReport f = free_check(a, o.max_degree);
  r.results["verdict"] = to_string(f.verdict);
  r.results["reason"] = f.reason;
  r.results["searched_degree"] = f.searched_degree;
  r.results["exponents"] = f.exponents;
  if (f.saito) {
    r.results["saito_scalar"] = f.saito->scalar.get_str();
    r.results["determinant"] = to_string(f.saito->determinant);
  }
  Json gens = Json::array();
  for (const auto& g : f.generators) gens.push_back(derivation_json(g));
  r.results["generators"] = gens;
  if (f.verdict == FreenessVerdict::inconclusive) {
    r.diagnostics.push_back("inconclusive at degree cap " + std::to_string(o.max_degree));
  }
}

std::string equation_text(const SyzygySystem& sys, std::size_t j) {
  const auto& a = sys.coefficients(j);
  Polynomial rhs(sys.ell);
  std::string out = "k" + std::to_string(j + 1) + "*(" + form_text(sys.form(j)) + ") =";
  bool first = true;
  for (std::size_t i = 0; i < sys.ell; ++i) {
    if (a[i] == 0) continue;
    const std::string term = to_string(Polynomial::monomial(Monomial::variable(sys.ell, i), abs(a[i])));
    out += first ? (a[i] < 0 ? " -" : " ") : (a[i] < 0 ? " - " : " + ");
    out += "k" + std::to_string(i + 1) + "*" + term;
    first = false;
  }
  return out;
}

void cmd_syzygy_system(const Options& o, Report& r) {
  const Arrangement a = canonical_input(read_arrangement(o.files[0]), r);
  const SyzygySystem sys = build_system(a);
  Json eqs = Json::array();
  for (std::size_t j = sys.ell; j < sys.n; ++j) {
    eqs.push_back({{"j", j + 1}, {"coefficients", rational_list(sys.coefficients(j))}, {"equation", equation_text(sys, j)}});
  }
  r.results["ell"] = sys.ell;
  r.results["n"] = sys.n;
  r.results["equations"] = eqs;
}

Json tuple_json(const SolutionTuple& t) {
  Json arr = Json::array();
  for (const auto& p : t.entries) arr.push_back(to_string(p));
  return arr;
}

void cmd_syzygy_gens(const Options& o, Report& r) {
  const Arrangement a = canonical_input(read_arrangement(o.files[0]), r);
  const SyzygySystem sys = build_system(a);
  const std::size_t j = equation_index(o.j, a);
  const GeneratorSet g = canonical_generators(sys, j);
  Json members = Json::array();
  auto add = [&](const std::string& kind, const SolutionTuple& t) {
    const auto v = verify_solution(sys, t, j);
    members.push_back({{"kind", kind},
                       {"tuple", tuple_json(t)},
                       {"verified", v.ok},
                       {"k_j", v.k_j ? to_string(*v.k_j) : std::string("-")}});
  };
  add("e", g.e);
  for (const auto& u : g.unit_members) add("e_" + std::to_string(u.r + 1), u.tuple);
  for (const auto& k : g.koszul_members) add("koszul(" + std::to_string(k.s + 1) + "," + std::to_string(k.t + 1) + ")", k.tuple);
  r.results["j"] = j + 1;
  r.results["equation"] = equation_text(sys, j);
  r.results["generators"] = members;
  bool spans = true;
  for (int d = 0; d <= o.check_degree; ++d) spans = spans && generators_span_solutions(sys, j, d);
  r.results["generation_checked_up_to_degree"] = o.check_degree;
  r.results["generates_solutions"] = spans;
  r.diagnostics.push_back("generation verified only for solutions of degree <= " + std::to_string(o.check_degree));
}

void cmd_syzygy_verify(const Options& o, Report& r) {
  const Arrangement a = canonical_input(read_arrangement(o.files[0]), r);
  const SyzygySystem sys = build_system(a);
  const std::size_t j = equation_index(o.j, a);
  auto entries = load_polynomial_lines(read_text_file(o.files[1]), a.ell());
  if (entries.size() != a.ell()) throw ParseError("k-tuple file must hold " + std::to_string(a.ell()) + " lines");
  const auto v = verify_solution(sys, SolutionTuple{std::move(entries), std::nullopt}, j);
  r.results["j"] = j + 1;
  r.results["ok"] = v.ok;
  r.results["k_j"] = v.k_j ? Json(to_string(*v.k_j)) : Json(nullptr);
}

void cmd_constraints(const Options& o, Report& r) {
  const Arrangement a = read_arrangement(o.files[0]);
  const Derivation theta = read_derivation(o.files[1], a.ell());
  const auto decomposition = monomial_decomposition(theta);
  const ContactTable table = contact_table(a, decomposition);
  const ConstraintSpace space = constraint_space(a, theta);

  Json monomials = Json::array();
  Json contact = Json::array();
  for (std::size_t k = 0; k < decomposition.size(); ++k) {
    monomials.push_back({{"k", k + 1},
                         {"monomial", to_string(Polynomial::monomial(decomposition.monomials[k]))},
                         {"v", rational_list(decomposition.vectors[k])}});
    RationalVector row(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) row[j] = table(k, j);
    contact.push_back(rational_list(row));
  }
  std::size_t interior = 0;
  std::size_t exterior = 0;
  Json rows = Json::array();
  for (const auto& row : space.rows) {
    (row.kind() == "interior" ? interior : exterior) += 1;
    if (row.evaluate(table) != 0) throw Error("InternalError", "constraint row does not annihilate the contact table");
    rows.push_back(row_json(row));
  }
  r.results["M"] = decomposition.size();
  r.results["monomials"] = monomials;
  r.results["contact_table"] = contact;
  r.results["interior_rows"] = interior;
  r.results["exterior_rows"] = exterior;
  r.results["rank"] = space.rank();
  r.results["ambient"] = space.monomials * space.forms;
  r.results["rows"] = rows;
}

void cmd_critical(const Options& o, Report& r, bool search) {
  const Arrangement a = read_arrangement(o.files[0]);
  const Derivation theta = read_derivation(o.files[1], a.ell());
  if (o.basis.empty()) throw CLI::ValidationError("--basis", "basis indices are required");
  const auto basis = parse_indices(o.basis, a.size());
  const AssociatedField field = associated_field(a, theta, basis);
  Json q = Json::array();
  for (const auto& p : field.q) q.push_back(to_string(p));
  r.results["basis"] = one_based(field.basis_indices);
  r.results["field"] = q;
  if (search) {
    const auto result = search_critical_points(a, field, o.height);
    Json points = Json::array();
    for (const auto& p : result.points) points.push_back(rational_list(p));
    r.results["height"] = o.height;
    r.results["projective_scan"] = result.projective;
    r.results["points_scanned"] = result.points_scanned;
    r.results["critical_points"] = points;
    r.diagnostics.push_back("search incomplete at height " + std::to_string(o.height) +
                            ": points outside the scanned grid are not examined");
    return;
  }
  if (o.point.empty()) throw CLI::ValidationError("--point", "a point is required");
  const RationalVector point = parse_rational_list(o.point);
  if (point.size() != a.ell()) throw InputError("point must have " + std::to_string(a.ell()) + " coordinates");
  const auto check = verify_critical_point(a, field, point);
  Json values = Json::array();
  for (const auto& p : field.q) values.push_back(p.evaluate(point).get_str());
  r.results["point"] = rational_list(point);
  r.results["field_values"] = values;
  r.results["is_zero"] = check.is_zero;
  r.results["in_complement"] = check.in_complement;
  if (check.is_zero && check.in_complement) {
    const auto row = hidden_constraint(a, theta, point, basis);
    const auto table = contact_table(a, monomial_decomposition(theta));
    r.results["hidden_constraint"] = row_json(row);
    r.results["hidden_constraint_value"] = row.evaluate(table).get_str();
  }
}

void cmd_transport(const Options& o, Report& r) {
  const Arrangement a = read_arrangement(o.files[0]);
  const Arrangement b = read_arrangement(o.files[1]);
  const Derivation theta = read_derivation(o.files[2], a.ell());
  if (o.perm.empty()) throw CLI::ValidationError("--perm", "a bijection file is required");
  const auto perm = load_permutation(read_text_file(o.perm));
  const auto result = transport_derivation(a, b, perm, theta);
  r.results["solution_dim"] = result.solution_dim;
  r.results["witness"] = result.witness ? derivation_json(*result.witness) : Json(nullptr);
  r.results["rows_checked"] = result.rows_checked;
  r.results["rows_satisfied"] = result.rows_satisfied;
  r.results["witness_satisfies_transported_constraints"] = result.witness_satisfies_constraints();
  r.diagnostics.push_back("experiment only: no claim about combinatorial determination is made");
}

void cmd_example_ziegler(const Options& o, Report& r) {
  const ZieglerFixture& z = emit_ziegler_fixture();
  if (!o.emit_dir.empty()) {
    std::filesystem::create_directories(o.emit_dir);
    const std::filesystem::path dir(o.emit_dir);
    write_text_file(dir / "x2.arr", ziegler_x2_text());
    write_text_file(dir / "theta_z.der", ziegler_theta_z_text());
    r.results["written"] = Json::array({(dir / "x2.arr").string(), (dir / "theta_z.der").string()});
  }
  Json forms = Json::array();
  for (const auto& f : z.x2.forms()) forms.push_back(form_text(f));
  r.results["ell"] = z.x2.ell();
  r.results["n"] = z.x2.size();
  r.results["forms"] = forms;
  r.results["theta_z"] = derivation_json(z.theta_z);
  r.results["self_check"] = "k_vector(X2, theta_z) succeeds";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logarithmic derivations of hyperplane arrangements in exact arithmetic", "logder"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "emit JSON instead of text");
  app.add_option("--max-degree", o.max_degree, "degree cap for graded and freeness computations")
      ->capture_default_str();
  app.add_option("--height", o.height, "height bound for the critical point scan")->capture_default_str();

  Report report;
  std::function<void(const Options&, Report&)> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& description,
                  std::vector<std::string> positional, std::function<void(const Options&, Report&)> fn) {
    CLI::App* sub = parent->add_subcommand(name, description);
    sub->fallthrough();
    for (std::size_t i = 0; i < positional.size(); ++i) sub->add_option(positional[i], o.files[i])->required();
    const std::string command = parent == &app ? name : parent->get_name() + " " + name;
    sub->callback([&, fn, command, positional] {
      report.command = command;
      for (std::size_t i = 0; i < positional.size(); ++i) report.inputs[positional[i]] = o.files[i];
      action = fn;
    });
    return sub;
  };

  auto* arr = app.add_subcommand("arr", "arrangement structure");
  arr->require_subcommand(1);
  leaf(arr, "lattice", "intersection lattice", {"arrangement"}, cmd_arr_lattice);
  leaf(arr, "canonical", "canonical form change of coordinates", {"arrangement"}, cmd_arr_canonical);
  leaf(arr, "circuits", "minimal linear dependencies", {"arrangement"}, cmd_arr_circuits);

  auto* deriv = app.add_subcommand("deriv", "logarithmic derivations");
  deriv->require_subcommand(1);
  leaf(deriv, "check", "membership and k-vector", {"arrangement", "derivation"}, cmd_deriv_check);
  auto* graded = leaf(deriv, "graded", "basis of a graded component", {"arrangement"}, cmd_deriv_graded);
  graded->add_option("-d,--degree", o.degree, "degree")->required()->check(CLI::NonNegativeNumber);

  auto* free = app.add_subcommand("free", "freeness");
  free->require_subcommand(1);
  leaf(free, "check", "greedy generator search with Saito's criterion", {"arrangement"}, cmd_free_check);

  auto* syz = app.add_subcommand("syzygy", "canonical equation system");
  syz->require_subcommand(1);
  leaf(syz, "system", "equations of the canonical system", {"arrangement"}, cmd_syzygy_system);
  auto* gens = leaf(syz, "gens", "canonical generators of equation J", {"arrangement"}, cmd_syzygy_gens);
  gens->add_option("-j", o.j, "equation index (ell+1..n)")->required();
  gens->add_option("--check-degree", o.check_degree, "degree bound for the generation check")->capture_default_str();
  auto* verify = leaf(syz, "verify", "check a k-tuple against equation J", {"arrangement", "ktuple"}, cmd_syzygy_verify);
  verify->add_option("-j", o.j, "equation index (ell+1..n)")->required();

  leaf(&app, "constraints", "interior and exterior constraints", {"arrangement", "derivation"}, cmd_constraints);

  auto* critical = app.add_subcommand("critical", "critical points of associated fields");
  critical->require_subcommand(1);
  auto* cverify = leaf(critical, "verify", "check a point", {"arrangement", "derivation"},
                       [](const Options& opt, Report& rep) { cmd_critical(opt, rep, false); });
  cverify->add_option("--basis", o.basis, "comma separated 1-based hyperplane indices")->required();
  cverify->add_option("--point", o.point, "comma separated rationals")->required();
  auto* csearch = leaf(critical, "search", "bounded scan for critical points", {"arrangement", "derivation"},
                       [](const Options& opt, Report& rep) { cmd_critical(opt, rep, true); });
  csearch->add_option("--basis", o.basis, "comma separated 1-based hyperplane indices")->required();

  auto* transport = leaf(&app, "transport", "transport a derivation along a lattice bijection",
                         {"source", "target", "derivation"}, cmd_transport);
  transport->add_option("--perm", o.perm, "file with the 1-based image of each hyperplane")->required();

  auto* example = app.add_subcommand("example", "built-in fixtures");
  example->require_subcommand(1);
  auto* ziegler = leaf(example, "ziegler", "Ziegler's arrangement X2 and theta_z", {}, cmd_example_ziegler);
  ziegler->add_option("--emit-files", o.emit_dir, "directory to write x2.arr and theta_z.der");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!action) {
    err << "usage error: no command given\n";
    return kExitUsage;
  }
  if (app.count("--max-degree")) report.inputs["max_degree"] = o.max_degree;
  if (app.count("--height")) report.inputs["height"] = o.height;
  if (o.degree > o.max_degree) {
    err << "usage error: degree " << o.degree << " exceeds --max-degree " << o.max_degree << "\n";
    return kExitUsage;
  }

  try {
    action(o, report);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    report.results = Json::object();
    Json error{{"error", e.name()}, {"message", e.what()}};
    if (const auto* nl = dynamic_cast<const NotLogarithmic*>(&e)) error["hyperplane"] = nl->index() + 1;
    report.diagnostics.push_back(error);
    emit(report, o.json, out);
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return kExitDomain;
  }
  emit(report, o.json, out);
  return kExitOk;
}

}  // namespace logder::cli
