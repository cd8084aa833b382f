#include "quantion/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iomanip>
#include <optional>
#include <sstream>

#include "quantion/io.hpp"
#include "quantion/representations.hpp"
#include "quantion/suite.hpp"
#include "quantion/tables.hpp"

namespace quantion::cli {

namespace {

struct Common {
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  double tol = kIdentityTol;
  unsigned threads = 1;
  std::string format = "text";

  SuiteOptions suite() const { return {samples, seed, tol, threads}; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--samples", c.samples, "random triples per identity")->check(CLI::Range(1ull, 100000000ull));
  cmd->add_option("--seed", c.seed, "sampling seed");
  cmd->add_option("--tol", c.tol, "relative residual tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", c.threads, "worker threads (results do not depend on it)")
      ->check(CLI::Range(1u, 256u));
  cmd->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
}

std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << x;
  return os.str();
}

void print_reports(const std::vector<VerificationReport>& reports, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << io::to_json(reports).dump(2) << '\n';
    return;
  }
  for (const auto& r : reports) {
    out << std::left << std::setw(12) << r.identity << " algebra=" << r.algebra << " samples=" << r.samples
        << " seed=" << r.seed << " max_residual=" << sci(r.max_residual) << " tol=" << sci(r.tol) << "  "
        << (r.pass() ? "PASS" : "FAIL") << '\n';
  }
}

int cmd_tables(const std::string& basis_arg, const std::string& format, std::ostream& out, std::ostream& err) {
  const auto basis = parse_basis(basis_arg);
  if (!basis) throw UsageError("unknown basis '" + basis_arg + "'");
  const BasisTable table = basis_table(*basis);
  const auto mismatch = diff_against_golden(table);

  if (format == "json") {
    io::json j = io::to_json(table);
    j["match"] = !mismatch.has_value();
    out << j.dump(2) << '\n';
  } else {
    const char* op = *basis == Basis::quaternion ? "." : "beta";
    out << std::left << std::setw(8) << op << "|";
    for (const auto& l : table.labels) out << ' ' << std::setw(8) << l;
    out << '\n' << std::string(9 + 4 * 9, '-') << '\n';
    for (int r = 0; r < 4; ++r) {
      out << std::setw(8) << table.labels[r] << "|";
      for (int c = 0; c < 4; ++c) out << ' ' << std::setw(8) << entry_label(table, table.entries[r][c]);
      out << '\n';
    }
  }
  if (mismatch) {
    err << "mismatch at row " << table.labels[mismatch->row] << ", column " << table.labels[mismatch->col]
        << ": expected " << mismatch->expected << ", computed " << mismatch->actual << '\n';
    return kFailure;
  }
  if (format != "json") out << "matches the reference table (16/16 cells)\n";
  return kOk;
}

int cmd_verify(const std::string& spec, std::optional<int> a, const Common& c, std::ostream& out) {
  AnyAlgebra alg = parse_algebra_spec(spec);
  if (a) {
    std::visit(
        [&](auto& x) {
          if (x.a != *a) x = with_a(x, *a);
        },
        alg);
  }
  const auto reports = run_suite(alg, c.suite());
  print_reports(reports, c.format, out);
  return all_pass(reports) ? kOk : kFailure;
}

int cmd_compose(const std::string& left, const std::string& right, const Common& c, std::ostream& out) {
  const AnyAlgebra l = parse_algebra_spec(left);
  const AnyAlgebra r = parse_algebra_spec(right);
  MatrixAlgebra composed;
  try {
    composed = compose(l, r);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto reports = run_suite(composed, c.suite());
  const MatrixAlgebra reference = reference_algebra(static_cast<int>(composed.unit.rows()), composed.a);
  reports.push_back(run_closure(composed, reference, c.suite()));
  print_reports(reports, c.format, out);
  return all_pass(reports) ? kOk : kFailure;
}

Quantion read_quantion(const std::string& path) { return io::quantion_from_json(io::read_json_file(path)); }

int cmd_current(const std::string& path, const std::string& format, std::ostream& out) {
  const ZovkoCurrent j = zovko_current(read_quantion(path));
  if (format == "json") {
    out << io::to_json(j).dump() << '\n';
  } else {
    out << "j = " << io::to_json(j.j).dump() << '\n' << "class = " << causal_class_name(j.cls) << '\n';
  }
  return kOk;
}

int cmd_inverse(const std::string& path, std::ostream& out, std::ostream& err) {
  const Quantion q = read_quantion(path);
  try {
    out << io::to_json(inverse(q)).dump() << '\n';
  } catch (const NullDivisor& e) {
    err << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

int parse_size(const std::string& text, const std::string& spec) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw UsageError("bad size in algebra spec '" + spec + "'");
  return v;
}

}  // namespace

AnyAlgebra parse_algebra_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("algebra spec must look like kind:N, got '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const int n = parse_size(spec.substr(colon + 1), spec);
  try {
    if (kind == "hermitian") return hermitian_algebra(n, 1);
    if (kind == "realsym") return realsym_algebra(n);
    if (kind == "poisson") return poisson_algebra(n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(spec + ": " + e.what());
  }
  throw UsageError("unknown algebra kind '" + kind + "' (expected hermitian, realsym or poisson)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantion algebra tables, identity verification and single-value queries", "qtn"};
  app.require_subcommand(1);

  std::string basis, format = "text";
  auto* tables = app.add_subcommand("tables", "print a basis multiplication table and diff it against the reference");
  tables->add_option("--basis", basis)->required()->check(CLI::IsMember({"tetrad", "quaternion", "null"}));
  tables->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  Common common;
  std::string spec;
  std::optional<int> a;
  auto* verify = app.add_subcommand("verify", "run the Jacobi, Leibniz and Petersen identity suite");
  verify->add_option("--algebra", spec, "hermitian:N | realsym:N | poisson:D")->required();
  verify->add_option("--a", a, "Petersen parameter (defaults to the realization's own)")
      ->check(CLI::IsMember({-1, 0, 1}));
  add_common(verify, common);

  std::string left, right;
  auto* comp = app.add_subcommand("compose", "compose two realizations and verify the tensor algebra");
  comp->add_option("--left", left)->required();
  comp->add_option("--right", right)->required();
  add_common(comp, common);

  std::string in;
  auto* current = app.add_subcommand("current", "Zovko current of a quantion file");
  current->add_option("--in", in)->required();
  current->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  auto* inv = app.add_subcommand("inverse", "inverse of a quantion file");
  inv->add_option("--in", in)->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qtn: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (tables->parsed()) return cmd_tables(basis, format, out, err);
    if (verify->parsed()) return cmd_verify(spec, a, common, out);
    if (comp->parsed()) return cmd_compose(left, right, common, out);
    if (current->parsed()) return cmd_current(in, format, out);
    if (inv->parsed()) return cmd_inverse(in, out, err);
  } catch (const UsageError& e) {
    err << "qtn: " << e.what() << '\n';
    return kUsage;
  } catch (const io::ParseError& e) {
    err << "qtn: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "qtn: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace quantion::cli
