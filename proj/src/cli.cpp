#include "hsg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsg/arithmetic.hpp"
#include "hsg/errors.hpp"
#include "hsg/format.hpp"
#include "hsg/group.hpp"
#include "hsg/hidden_subgroup.hpp"
#include "hsg/representations.hpp"
#include "hsg/ring_salc.hpp"
#include "hsg/rng.hpp"
#include "hsg/shor_sim.hpp"

namespace hsg::cli {

namespace {

using json = nlohmann::ordered_json;

// Bad flag values or combinations; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string n;
  std::string a;
  std::optional<std::uint64_t> j;
  std::optional<std::uint64_t> len;
  std::string reg = "pow2";
  std::optional<std::uint64_t> m;
  std::uint64_t seed = 0;
  std::string format;
  std::string out;
  double tol = 1e-10;
  std::uint64_t max_attempts = 16;
  std::string w = "1";
};

ExactInt parse_int(const std::string& text, const char* flag) {
  try {
    return ExactInt::parse(text);
  } catch (const Error&) {
    throw UsageError(std::string(flag) + ": expected a non-negative integer, got '" + text + "'");
  }
}

ExactInt required_int(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return parse_int(text, flag);
}


void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (format == f) return;
  }
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw UsageError("--format " + format + " is not supported here (use one of: " + list + ")");
}

RegisterMode register_mode(const std::string& reg) {
  return reg == "paper" ? RegisterMode::kPaperOrder : RegisterMode::kPowerOfTwo;
}

std::string join(const std::vector<std::uint64_t>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

// Left-aligned fixed-width table.
class Table {
public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      os << line << '\n';
    }
  }

private:
  std::vector<std::vector<std::string>> rows_;
};

// ---- factor ---------------------------------------------------------------

void cmd_factor(const Options& o, std::ostream& os) {
  require_format(o.format, {"json", "table"});
  const ExactInt n = required_int(o.n, "--n");
  FactorOptions options;
  if (!o.a.empty()) options.a = parse_int(o.a, "--a");
  options.mode = register_mode(o.reg);
  options.register_size = o.m;
  options.max_attempts = o.max_attempts;
  options.seed = o.seed;
  if (o.max_attempts == 0) throw UsageError("--max-attempts must be >= 1");
  const FactorReport report = factor(n, options);
  if (o.format == "json") {
    os << factor_report_json(report);
    return;
  }
  os << "# N=" << report.n << " mode=" << to_string(report.mode)
     << " register_size=" << report.register_size << " seed=" << report.seed << '\n';
  Table t({"attempt", "a", "w", "outcome", "candidate_r", "status"});
  for (std::size_t i = 0; i < report.samples.size(); ++i) {
    const auto& s = report.samples[i];
    t.add({std::to_string(i + 1), s.a.to_string(), std::to_string(s.residue), std::to_string(s.outcome),
           s.candidate_r ? std::to_string(*s.candidate_r) : "-", std::string(to_string(s.status))});
  }
  t.print(os);
  os << "order: " << (report.order ? std::to_string(*report.order) : "-") << '\n';
  os << "factors: " << report.factors->first << ' ' << report.factors->second << '\n';
}

// ---- order ----------------------------------------------------------------

void cmd_order(const Options& o, std::ostream& os) {
  require_format(o.format, {"table", "json", "csv"});
  const ExactInt n = required_int(o.n, "--n");
  const ExactInt a = required_int(o.a, "--a");
  const std::uint64_t r = multiplicative_order(a, n);
  if (o.format == "json") {
    json j;
    j["n"] = n.to_u64();
    j["a"] = a.to_u64();
    j["order"] = r;
    os << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    os << "n,a,order\n" << n << ',' << a << ',' << r << '\n';
  } else {
    Table t({"N", "a", "order"});
    t.add({n.to_string(), a.to_string(), std::to_string(r)});
    t.print(os);
  }
}

// ---- crt ------------------------------------------------------------------

std::string power_term(std::uint64_t n, std::uint64_t k) {
  return "C_" + std::to_string(n) + "^" + std::to_string(k);
}

std::string expansion(std::uint64_t n, const std::vector<std::uint64_t>& coeffs,
                      const PrimeFactorization& f) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const std::uint64_t generator = n / f.factors()[i].prime.to_u64();
    terms.push_back(power_term(n, generator * coeffs[i] % n));
  }
  const std::uint64_t k = subgroup_compose(coeffs, f).index;
  if (terms.empty()) return "E";
  std::string out;
  for (const auto& term : terms) out += (out.empty() ? "" : " ") + term;
  if (terms.size() > 1) out += " = " + power_term(n, k);
  return out;
}

void cmd_crt(const Options& o, std::ostream& os) {
  require_format(o.format, {"table", "json", "csv"});
  const ExactInt big_n = required_int(o.n, "--n");
  if (big_n < ExactInt{2}) throw UsageError("--n must be >= 2");
  if (big_n > ExactInt{1000000}) throw UsageError("--n must be <= 1000000 for the crt table");
  const std::uint64_t n = big_n.to_u64();
  const PrimeFactorization f = factorize(big_n);
  const CyclicGroup group(n);
  const bool square_free = f.square_free();

  std::vector<std::string> moduli;
  std::vector<std::string> primes;
  for (const auto& pp : f.factors()) {
    moduli.push_back(pp.value().to_string());
    primes.push_back(pp.prime.to_string());
  }

  if (o.format == "json") {
    json j;
    j["n"] = n;
    j["index_base"] = 0;
    json factors = json::array();
    for (const auto& pp : f.factors()) {
      factors.push_back(json{{"prime", pp.prime.to_u64()}, {"exponent", pp.exponent}});
    }
    j["factors"] = factors;
    json elements = json::array();
    for (std::uint64_t k = 0; k < n; ++k) {
      json e;
      e["k"] = k;
      e["residues"] = crt_residues(group.element(k), f);
      if (square_free) {
        const auto coeffs = subgroup_decompose(group.element(k), f);
        e["subgroup"] = coeffs;
        e["expansion"] = expansion(n, coeffs, f);
      } else {
        e["subgroup"] = nullptr;
        e["expansion"] = nullptr;
      }
      elements.push_back(std::move(e));
    }
    j["elements"] = elements;
    os << j.dump(2) << '\n';
    return;
  }
  if (o.format == "csv") {
    os << "k";
    for (const auto& q : moduli) os << ",mod_" << q;
    if (square_free) {
      for (const auto& b : primes) os << ",coeff_" << b;
    }
    os << '\n';
    for (std::uint64_t k = 0; k < n; ++k) {
      os << k << ',' << join(crt_residues(group.element(k), f), ',');
      if (square_free) os << ',' << join(subgroup_decompose(group.element(k), f), ',');
      os << '\n';
    }
    return;
  }
  os << "# G^" << n << " from prime-order subgroups";
  for (const auto& b : primes) os << " G^" << b;
  os << "; indices are 0-based (C_" << n << "^0 = E)\n";
  Table t({"k", "residues mod (" + [&] {
             std::string s;
             for (const auto& q : moduli) s += (s.empty() ? "" : ",") + q;
             return s;
           }() + ")",
           "subgroup coeffs", "expansion"});
  for (std::uint64_t k = 0; k < n; ++k) {
    const auto residues = crt_residues(group.element(k), f);
    if (square_free) {
      const auto coeffs = subgroup_decompose(group.element(k), f);
      t.add({std::to_string(k), "(" + join(residues, ',') + ")", "(" + join(coeffs, ',') + ")",
             expansion(n, coeffs, f)});
    } else {
      t.add({std::to_string(k), "(" + join(residues, ',') + ")", "-", "-"});
    }
  }
  t.print(os);
}

// ---- cosets ---------------------------------------------------------------

void cmd_cosets(const Options& o, std::ostream& os) {
  require_format(o.format, {"table", "json", "csv"});
  const ExtendedGroupSpec spec(required_int(o.n, "--n"), required_int(o.a, "--a"));
  if (spec.order() > 100000) throw UsageError("aN must be <= 100000 for the coset listing");
  const CyclicGroup group = spec.group();
  struct Partition {
    std::string name;
    GroupElement generator;
  };
  const std::vector<Partition> partitions = {
      {"G^N", spec.subgroup_n_generator()},
      {"G^a", spec.subgroup_a_generator()},
  };
  if (o.format == "json") {
    json j;
    j["n"] = spec.n().to_u64();
    j["a"] = spec.a().to_u64();
    j["order"] = spec.order();
    j["index_base"] = 0;
    for (const auto& p : partitions) {
      json cosets = json::array();
      for (const auto& c : coset_partition(group, p.generator)) {
        std::vector<std::uint64_t> members;
        for (const auto& m : c.members) members.push_back(m.index);
        cosets.push_back(json{{"representative", c.representative.index}, {"members", members}});
      }
      j[p.name == "G^N" ? "cosets_of_GN" : "cosets_of_Ga"] =
          json{{"generator", p.generator.index}, {"cosets", cosets}};
    }
    os << j.dump(2) << '\n';
    return;
  }
  if (o.format == "csv") {
    os << "subgroup,generator,representative,members\n";
    for (const auto& p : partitions) {
      for (const auto& c : coset_partition(group, p.generator)) {
        std::vector<std::uint64_t> members;
        for (const auto& m : c.members) members.push_back(m.index);
        os << p.name << ',' << p.generator.index << ',' << c.representative.index << ','
           << join(members, ' ') << '\n';
      }
    }
    return;
  }
  os << "# G^{" << spec.n() << "," << spec.a() << "}: order " << spec.order()
     << ", indices are 0-based (C_" << spec.order() << "^0 = E)\n";
  for (const auto& p : partitions) {
    const auto cosets = coset_partition(group, p.generator);
    os << "# cosets of " << p.name << " (generator C_" << spec.order() << "^" << p.generator.index
       << "): " << cosets.size() << " of size " << cosets.front().members.size() << '\n';
    Table t({"representative", "members"});
    for (const auto& c : cosets) {
      std::vector<std::uint64_t> members;
      for (const auto& m : c.members) members.push_back(m.index);
      t.add({std::to_string(c.representative.index), join(members, ' ')});
    }
    t.print(os);
  }
}

// ---- project --------------------------------------------------------------

GroupFunction random_function(std::uint64_t order, std::uint64_t seed) {
  Rng rng(seed);
  GroupFunction f = GroupFunction::zeros(order);
  for (auto& v : f.values) {
    const double re = 2.0 * rng.unit_double() - 1.0;
    const double im = 2.0 * rng.unit_double() - 1.0;
    v = {re, im};
  }
  return f;
}

std::uint64_t group_order_flag(const Options& o, std::uint64_t limit) {
  const ExactInt n = required_int(o.n, "--n");
  if (n < ExactInt{1}) throw UsageError("--n must be >= 1");
  if (n > ExactInt{limit}) throw UsageError("--n must be <= " + std::to_string(limit));
  return n.to_u64();
}

IrrepLabel label_flag(const Options& o, std::uint64_t order) {
  if (!o.j) throw UsageError("--j is required");
  if (*o.j >= order) throw UsageError("--j must be < --n");
  return IrrepLabel(*o.j, order);
}

void cmd_project(const Options& o, std::ostream& os) {
  require_format(o.format, {"csv", "table", "json"});
  const std::uint64_t m = group_order_flag(o, 4096);
  const IrrepLabel label = label_flag(o, m);
  const GroupFunction f = random_function(m, o.seed);
  const GroupFunction p = project(label, f);
  std::optional<GroupFunction> via_primes;
  if (m >= 2) {
    const auto fact = factorize(m);
    if (fact.square_free()) via_primes = project_via_primes(label, f, fact);
  }
  const auto translation = translation_phase_check(label, f, o.tol);
  const double idempotence = max_abs_difference(project(label, p), p);

  if (o.format == "csv") {
    os << "x,f_re,f_im,p_re,p_im\n";
    for (std::uint64_t x = 0; x < m; ++x) {
      os << x << ',' << format_real(f[x].real()) << ',' << format_real(f[x].imag()) << ','
         << format_real(p[x].real()) << ',' << format_real(p[x].imag()) << '\n';
    }
    return;
  }
  if (o.format == "json") {
    json j;
    j["order"] = m;
    j["j"] = label.j;
    j["seed"] = o.seed;
    j["idempotence_deviation"] = idempotence;
    j["translation_deviation"] = translation.max_deviation;
    j["prime_factor_deviation"] =
        via_primes ? json(max_abs_difference(*via_primes, p)) : json(nullptr);
    json values = json::array();
    for (std::uint64_t x = 0; x < m; ++x) {
      values.push_back(json::array({p[x].real(), p[x].imag()}));
    }
    j["projection"] = values;
    os << j.dump(2) << '\n';
    return;
  }
  os << "# P^(" << label.j << ") on G^" << m << ", random f (seed " << o.seed << ")\n";
  os << "# max |P P f - P f| = " << format_real(idempotence) << '\n';
  os << "# max |P f(x+1) - exp(2 pi i j/M) P f(x)| = " << format_real(translation.max_deviation)
     << '\n';
  if (via_primes) {
    os << "# max |prime-factor product - P f| = "
       << format_real(max_abs_difference(*via_primes, p)) << '\n';
  }
  Table t({"x", "re f", "im f", "re Pf", "im Pf"});
  for (std::uint64_t x = 0; x < m; ++x) {
    t.add({std::to_string(x), format_real(f[x].real()), format_real(f[x].imag()),
           format_real(p[x].real()), format_real(p[x].imag())});
  }
  t.print(os);
}

// ---- salc / ring ----------------------------------------------------------

void cmd_salc(const Options& o, std::ostream& os) {
  require_format(o.format, {"csv", "table", "json"});
  const std::uint64_t n = group_order_flag(o, 4096);
  if (n < 2) throw UsageError("--n must be >= 2");
  if (o.j && *o.j >= n) throw UsageError("--j must be < --n");
  const GroupFunction ao = GroupFunction::delta(n, 0);
  const auto fact = factorize(n);
  std::vector<std::pair<std::uint64_t, OrbitalVector>> salcs;
  std::vector<std::optional<double>> prime_dev;
  for (std::uint64_t j = 0; j < n; ++j) {
    if (o.j && *o.j != j) continue;
    const IrrepLabel label(j, n);
    salcs.emplace_back(j, salc(label, ao));
    if (fact.square_free()) {
      const auto alt = salc_via_primes(label, ao, fact);
      double dev = 0.0;
      for (std::size_t s = 0; s < n; ++s) {
        dev = std::max(dev, std::abs(alt.coefficients[s] - salcs.back().second.coefficients[s]));
      }
      prime_dev.emplace_back(dev);
    } else {
      prime_dev.emplace_back(std::nullopt);
    }
  }
  if (o.format == "csv") {
    write_salc_csv(os, salcs);
    return;
  }
  if (o.format == "json") {
    json j;
    j["n_sites"] = n;
    json list = json::array();
    for (std::size_t i = 0; i < salcs.size(); ++i) {
      json coeffs = json::array();
      for (const auto& c : salcs[i].second.coefficients) coeffs.push_back(json::array({c.real(), c.imag()}));
      list.push_back(json{{"j", salcs[i].first},
                          {"coefficients", coeffs},
                          {"prime_factor_deviation", prime_dev[i] ? json(*prime_dev[i]) : json(nullptr)}});
    }
    j["salcs"] = list;
    os << j.dump(2) << '\n';
    return;
  }
  os << "# SALCs of a single-site orbital on an " << n << "-site ring\n";
  Table t({"j", "site", "re", "im", "prime-factor deviation"});
  for (std::size_t i = 0; i < salcs.size(); ++i) {
    const auto& coeffs = salcs[i].second.coefficients;
    for (std::size_t s = 0; s < coeffs.size(); ++s) {
      t.add({std::to_string(salcs[i].first), std::to_string(s), format_real(coeffs[s].real()),
             format_real(coeffs[s].imag()),
             s == 0 ? (prime_dev[i] ? format_real(*prime_dev[i]) : "-") : ""});
    }
  }
  t.print(os);
}

void cmd_ring(const Options& o, std::ostream& os) {
  require_format(o.format, {"csv", "table", "json"});
  const std::uint64_t n = group_order_flag(o, 2048);
  if (n < 2) throw UsageError("--n must be >= 2");
  const RingSpec spec{n, 0.0, -1.0};
  const auto modes = analytic_modes(spec);
  if (o.format == "csv") {
    write_modes_csv(os, modes);
    return;
  }
  const auto diag = diagonalize_ring(spec);
  const auto subspaces = compare_degenerate_subspaces(spec);
  if (o.format == "json") {
    json j;
    j["n_sites"] = n;
    j["onsite"] = spec.onsite;
    j["hopping"] = spec.hopping;
    std::vector<double> eig(diag.eigenvalues.data(), diag.eigenvalues.data() + diag.eigenvalues.size());
    j["eigenvalues"] = eig;
    json classes = json::array();
    for (const auto& c : subspaces) {
      classes.push_back(json{{"modes", c.mode_class},
                             {"energy", c.energy},
                             {"numeric_dimension", c.numeric_dimension},
                             {"projector_deviation", c.projector_deviation}});
    }
    j["classes"] = classes;
    os << j.dump(2) << '\n';
    return;
  }
  os << "# " << n << "-site ring, onsite 0, hopping -1\n";
  Table t({"modes", "energy", "numeric dim", "projector deviation"});
  for (const auto& c : subspaces) {
    t.add({"{" + join(c.mode_class, ',') + "}", format_real(c.energy),
           std::to_string(c.numeric_dimension), format_real(c.projector_deviation)});
  }
  t.print(os);
}

// ---- oracle / spectrum ----------------------------------------------------

void cmd_oracle(const Options& o, std::ostream& os) {
  require_format(o.format, {"table", "json", "csv"});
  const OracleSpec spec(required_int(o.n, "--n"), required_int(o.a, "--a"));
  const std::uint64_t len = o.len.value_or(spec.extended().order());
  if (len > 100000) throw UsageError("--len must be <= 100000");
  struct Row {
    std::uint64_t x;
    SliceCoordinates slice;
    std::optional<ExactInt> alpha;
    ExactInt beta;
  };
  std::vector<Row> rows;
  const auto betas = residue_sequence(spec, len);
  for (std::uint64_t x = 0; x < len; ++x) {
    Row row{x, slice_coordinates(x, spec.extended(), SliceConvention::kByN), std::nullopt, betas[x]};
    try {
      row.alpha = oracle_eval(spec, x).alpha;
    } catch (const OverflowError&) {
    }
    rows.push_back(row);
  }
  if (o.format == "json") {
    json j;
    j["n"] = spec.n().to_u64();
    j["a"] = spec.a().to_u64();
    j["index_base"] = 0;
    j["slice_convention"] = "x = i + j*a";
    json list = json::array();
    for (const auto& r : rows) {
      list.push_back(json{{"x", r.x},
                          {"i", r.slice.inner},
                          {"j", r.slice.outer},
                          {"alpha", r.alpha ? json(r.alpha->to_string()) : json(nullptr)},
                          {"beta", r.beta.to_u64()}});
    }
    j["rows"] = list;
    os << j.dump(2) << '\n';
    return;
  }
  if (o.format == "csv") {
    os << "x,i,j,alpha,beta\n";
    for (const auto& r : rows) {
      os << r.x << ',' << r.slice.inner << ',' << r.slice.outer << ','
         << (r.alpha ? r.alpha->to_string() : "overflow") << ',' << r.beta << '\n';
    }
    return;
  }
  os << "# a^x = alpha*N + beta for N=" << spec.n() << ", a=" << spec.a()
     << "; x = i + j*a on G^{" << spec.n() << "," << spec.a() << "}\n";
  Table t({"x", "(i,j)", "alpha", "beta"});
  for (const auto& r : rows) {
    t.add({std::to_string(r.x),
           "(" + std::to_string(r.slice.inner) + "," + std::to_string(r.slice.outer) + ")",
           r.alpha ? r.alpha->to_string() : "overflow", r.beta.to_string()});
  }
  t.print(os);
}

void cmd_spectrum(const Options& o, std::ostream& os) {
  require_format(o.format, {"csv", "table", "json"});
  const OracleSpec spec(required_int(o.n, "--n"), required_int(o.a, "--a"));
  const std::uint64_t len = o.len.value_or(default_window(spec));
  if (len == 0 || len > 16384) throw UsageError("--len must be in [1, 16384]");
  const ExactInt w = parse_int(o.w, "--w");
  const auto spectrum = residue_spectrum(spec, len, w);
  if (o.format == "csv") {
    write_spectrum_csv(os, spectrum);
    return;
  }
  if (o.format == "json") {
    json j;
    j["n"] = spec.n().to_u64();
    j["a"] = spec.a().to_u64();
    j["length"] = len;
    j["residue"] = w.to_string();
    std::vector<double> mag;
    for (const auto& c : spectrum) mag.push_back(std::norm(c));
    j["magnitude_squared"] = mag;
    os << j.dump(2) << '\n';
    return;
  }
  os << "# |DFT|^2 of 1[a^x mod N = " << w << "], N=" << spec.n() << ", a=" << spec.a()
     << ", L=" << len << "; entries above 1e-12\n";
  Table t({"index", "magnitude_squared"});
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    const double p = std::norm(spectrum[k]);
    if (p > 1e-12) t.add({std::to_string(k), format_real(p)});
  }
  t.print(os);
}

// ---- simulate -------------------------------------------------------------

void cmd_simulate(const Options& o, std::ostream& os) {
  require_format(o.format, {"csv", "table", "json"});
  const ExactInt n = required_int(o.n, "--n");
  const ExactInt a = required_int(o.a, "--a");
  const auto config = RegisterConfig::make(n, a, register_mode(o.reg), o.m);
  const auto state = prepare_uniform(config);
  const auto collapsed = measure_bottom(state, std::nullopt, o.seed);
  const auto dist = qft_distribution(collapsed, n, a);
  if (o.format == "csv") {
    write_distribution_csv(os, dist);
    return;
  }
  if (o.format == "json") {
    json j;
    j["n"] = n.to_u64();
    j["a"] = a.to_u64();
    j["mode"] = std::string(to_string(config.mode));
    j["register_size"] = config.size;
    j["residue"] = collapsed.residue;
    j["support"] = json{{"offset", collapsed.support.offset},
                        {"step", collapsed.support.step},
                        {"count", collapsed.support.count}};
    j["probabilities"] = dist.probabilities;
    os << j.dump(2) << '\n';
    return;
  }
  std::vector<std::uint64_t> order(dist.probabilities.size());
  for (std::uint64_t v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](std::uint64_t x, std::uint64_t y) {
    return dist.probabilities[x] > dist.probabilities[y];
  });
  const std::size_t shown = std::min<std::size_t>(16, order.size());
  os << "# N=" << n << " a=" << a << " M=" << config.size << " (" << to_string(config.mode)
     << "), measured w=" << collapsed.residue << ", support " << collapsed.support.offset << " + "
     << collapsed.support.step << "t, " << collapsed.support.count << " values\n";
  os << "# " << shown << " most probable outcomes\n";
  Table t({"v", "probability"});
  for (std::size_t i = 0; i < shown; ++i) {
    t.add({std::to_string(order[i]), format_real(dist.probabilities[order[i]])});
  }
  t.print(os);
}

// ---- got-check ------------------------------------------------------------

int cmd_got_check(const Options& o, std::ostream& os) {
  require_format(o.format, {"table", "json", "csv"});
  const std::uint64_t m = group_order_flag(o, 2048);
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  const auto report = verify_great_orthogonality(m, o.tol);
  if (o.format == "json") {
    json j;
    j["order"] = m;
    j["max_deviation"] = report.max_deviation;
    j["tolerance"] = report.tolerance;
    j["passed"] = report.passed;
    os << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    os << "order,max_deviation,tolerance,passed\n"
       << m << ',' << format_real(report.max_deviation) << ',' << format_real(report.tolerance)
       << ',' << (report.passed ? "true" : "false") << '\n';
  } else {
    Table t({"order", "max_deviation", "tolerance", "status"});
    t.add({std::to_string(m), format_real(report.max_deviation), format_real(report.tolerance),
           report.passed ? "pass" : "FAIL"});
    t.print(os);
  }
  return report.passed ? kExitOk : kExitDomainError;
}

// ---- dispatch -------------------------------------------------------------

struct Command {
  const char* name;
  const char* help;
  const char* default_format;
  std::vector<std::string> flags;
  std::function<int(const Options&, std::ostream&)> body;
};

template <typename F>
std::function<int(const Options&, std::ostream&)> returning_ok(F f) {
  return [f](const Options& o, std::ostream& os) {
    f(o, os);
    return kExitOk;
  };
}

std::vector<Command> commands() {
  return {
      {"factor", "Factor N with the simulated period-finding circuit", "json",
       {"n", "a", "register", "m", "seed", "max-attempts"}, returning_ok(cmd_factor)},
      {"order", "Multiplicative order of a modulo N", "table", {"n", "a"}, returning_ok(cmd_order)},
      {"crt", "CRT residues and prime-subgroup expansion of every element of G^N", "table", {"n"},
       returning_ok(cmd_crt)},
      {"cosets", "Cosets of G^N and G^a inside G^{N,a}", "table", {"n", "a"},
       returning_ok(cmd_cosets)},
      {"project", "Project a seeded random function onto irrep j of G^N", "csv",
       {"n", "j", "seed", "tol"}, returning_ok(cmd_project)},
      {"salc", "SALCs of a single-site orbital on an N-site ring", "csv", {"n", "j"},
       returning_ok(cmd_salc)},
      {"ring", "Tight-binding ring modes (onsite 0, hopping -1)", "csv", {"n"},
       returning_ok(cmd_ring)},
      {"oracle", "Coset labels (alpha, beta) of a^x mod N", "table", {"n", "a", "len"},
       returning_ok(cmd_oracle)},
      {"spectrum", "DFT of the indicator of one residue of a^x mod N", "csv",
       {"n", "a", "len", "w"}, returning_ok(cmd_spectrum)},
      {"simulate", "Exact output distribution of one period-finding circuit run", "csv",
       {"n", "a", "register", "m", "seed"}, returning_ok(cmd_simulate)},
      {"got-check", "Great-orthogonality check of the character table of G^N", "table",
       {"n", "tol"}, cmd_got_check},
  };
}

void add_flags(CLI::App* sub, Options& o, const std::vector<std::string>& flags) {
  auto has = [&](const char* f) { return std::find(flags.begin(), flags.end(), f) != flags.end(); };
  if (has("n")) sub->add_option("--n", o.n, "Modulus / group order N");
  if (has("a")) sub->add_option("--a", o.a, "Base a, coprime to N");
  if (has("j")) sub->add_option("--j", o.j, "Irrep label j");
  if (has("len")) sub->add_option("--len", o.len, "Number of x values / window length");
  if (has("w")) sub->add_option("--w", o.w, "Residue w (default 1)");
  if (has("register")) {
    sub->add_option("--register", o.reg, "Top register size rule")
        ->check(CLI::IsMember({"pow2", "paper"}));
  }
  if (has("m")) sub->add_option("--m", o.m, "Override the top register size M");
  if (has("seed")) sub->add_option("--seed", o.seed, "64-bit RNG seed (default 0)");
  if (has("tol")) sub->add_option("--tol", o.tol, "Tolerance (default 1e-10)");
  if (has("max-attempts")) sub->add_option("--max-attempts", o.max_attempts, "Circuit runs (default 16)");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  sub->add_option("--out", o.out, "Write data to this path instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic groups, hidden subgroups and exact period-finding simulation", "hsg"};
  app.require_subcommand(1, 1);
  Options options;
  const auto table = commands();
  std::map<CLI::App*, const Command*> by_app;
  for (const auto& cmd : table) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    add_flags(sub, options, cmd.flags);
    by_app[sub] = &cmd;
  }

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("hsg");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help on a subcommand
      for (auto* sub : app.get_subcommands()) out << sub->help();
      if (app.get_subcommands().empty()) out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const Command& cmd = *by_app.at(chosen);
  if (options.format.empty()) options.format = cmd.default_format;

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    code = cmd.body(options, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << chosen->help();
    return kExitUsage;
  } catch (const AttemptsExhaustedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }

  if (options.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(options.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << options.out << " for writing\n";
      return kExitDomainError;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace hsg::cli
