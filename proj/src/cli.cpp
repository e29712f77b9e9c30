#include "fusionkit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fusionkit/arith_filter.hpp"
#include "fusionkit/char_table.hpp"
#include "fusionkit/dimensions.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/group_algebra.hpp"
#include "fusionkit/identities.hpp"
#include "fusionkit/io.hpp"
#include "fusionkit/report.hpp"

namespace fusionkit {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kIdentityTol = 1e-7;
constexpr double kZeroTol = 1e-7;
constexpr std::uint64_t kSecondSeedOffset = 0x9e3779b97f4a7c15ULL;

struct Settings {
  Tolerances tol;
  std::uint64_t seed = TableOptions{}.seed;
  std::optional<Profile> profile;
  bool honor_expect = false;
};

/// Collects verdicts for one input file.
class FileRun {
 public:
  FileRun(RunReport& report, const io::InputFile& in, const Settings& s)
      : report_(report), in_(in), s_(s) {}

  void add(Verdict v) {
    bool expected = false;
    if (s_.honor_expect) {
      const auto it = in_.expect.find(v.check);
      expected = it != in_.expect.end() && it->second == "fail";
    }
    report_.add(in_.path, std::move(v), expected);
  }
  void add_all(std::vector<Verdict> vs) {
    for (auto& v : vs) add(std::move(v));
  }
  void export_data(std::string kind, json data) {
    report_.exports.push_back({in_.path, std::move(kind), std::move(data)});
  }
  const Settings& settings() const { return s_; }
  TableOptions table_options() const { return {s_.seed, s_.tol.tol, TableOptions{}.max_retries}; }

 private:
  RunReport& report_;
  const io::InputFile& in_;
  const Settings& s_;
};

Verdict numeric_verdict(std::string name, double residual, bool ok, std::string details = {}) {
  return Verdict{std::move(name), ok ? Outcome::pass : Outcome::fail, residual, false,
                 std::move(details)};
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// ---------------------------------------------------------------------------
// Ring pipeline

struct RingState {
  const BasedRing& ring;
  Profile profile;
  bool modular = false;
  std::optional<DimensionData> dims;
  std::optional<CharacterTable> table;
};

bool step_validate(FileRun& run, RingState& st, const std::string& prefix = {}) {
  const auto rep = validate(st.ring, st.profile);
  std::string details;
  for (std::size_t k = 0; k < rep.violations.size() && k < 4; ++k)
    details += (k ? "; " : "") + rep.violations[k].axiom + ": " + rep.violations[k].detail;
  if (rep.violations.size() > 4)
    details += "; " + std::to_string(rep.violations.size() - 4) + " more";
  run.add(make_verdict(prefix + "validate." + std::string(to_string(st.profile)), rep.ok(), details));
  return rep.ok();
}

void step_dims(FileRun& run, RingState& st) {
  st.dims = fp_dims(st.ring, run.settings().tol);
}

/// Returns false when the ring has no character table (non-commutative).
bool step_table(FileRun& run, RingState& st, bool require_commutative, const std::string& prefix = {}) {
  if (!st.ring.is_commutative()) {
    if (require_commutative)
      run.add(make_verdict(prefix + "chartab.commutative", false, "ring is not commutative"));
    else
      run.add(not_applicable(prefix + "chartab", "ring is not commutative"));
    return false;
  }
  st.table = compute_table(st.ring, *st.dims, run.table_options());
  return true;
}

TableResiduals step_certify(FileRun& run, RingState& st, const std::string& prefix = {}) {
  const double tol = run.settings().tol.tol;
  const auto res = certify(st.ring, *st.dims, *st.table);
  const bool ok = res.homomorphism < tol && res.orthogonality < 10 * tol &&
                  res.class_dim_sum < 10 * tol && res.fp_row < 10 * tol;
  const double worst = std::max({res.homomorphism, res.orthogonality, res.class_dim_sum, res.fp_row});
  run.add(numeric_verdict(prefix + "chartab.certify", worst, ok,
                          "homomorphism " + fmt(res.homomorphism) + ", orthogonality " +
                              fmt(res.orthogonality) + ", class-dim sum " + fmt(res.class_dim_sum) +
                              ", fp row " + fmt(res.fp_row)));

  auto opts = run.table_options();
  opts.seed += kSecondSeedOffset;
  const auto other = compute_table(st.ring, *st.dims, opts);
  run.add(make_verdict(prefix + "chartab.seed-independence",
                       rows_equal_up_to_permutation(*st.table, other, kIdentityTol),
                       "seeds " + std::to_string(run.settings().seed) + " and " + std::to_string(opts.seed)));
  return res;
}

void step_hypergroup(FileRun& run, RingState& st, bool export_it) {
  const auto h = dual_hypergroup(st.ring, *st.dims, *st.table, run.settings().tol.tol);
  const std::size_t m = h.size;
  const std::size_t fp = st.table->fp_index;
  double worst = std::max(h.expansion_residual, h.imaginary_residual);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      double sum = 0;
      for (std::size_t c = 0; c < m; ++c) {
        sum += h(a, b, c);
        worst = std::max(worst, std::abs(h(a, b, c) - h(b, a, c)));
        if (a == fp) worst = std::max(worst, std::abs(h(a, b, c) - (b == c ? 1.0 : 0.0)));
      }
      worst = std::max(worst, std::abs(sum - 1.0));
    }
  run.add(numeric_verdict("hypergroup.normalized", worst, worst < kIdentityTol,
                          std::string("nonnegative: ") + (h.nonnegative ? "yes" : "no")));
  if (export_it) run.export_data("hypergroup", io::hypergroup_to_json(h));
}

void step_burnside(FileRun& run, RingState& st) {
  if (st.profile != Profile::fusion) {
    run.add(not_applicable("burnside", "needs the fusion profile"));
    return;
  }
  const auto rep = burnside_check(st.ring, *st.table, kZeroTol);
  std::string details;
  for (const auto& e : rep.entries)
    if (e.invertible == e.has_zero)
      details += (details.empty() ? "" : "; ") + st.ring.labels()[e.simple] +
                 (e.invertible ? " is invertible but vanishes" : " is non-invertible without a zero");
  if (!rep.holds && !st.dims->weakly_integral()) details += "; ring not weakly integral";
  run.add(make_verdict("burnside", rep.holds, details));
}

void step_harada(FileRun& run, RingState& st, const std::string& prefix = {}) {
  if (st.profile != Profile::fusion) {
    run.add(not_applicable(prefix + "harada", "needs the fusion profile"));
    return;
  }
  auto rep = verify_harada(st.ring, *st.dims, *st.table, kIdentityTol);
  for (auto& v : rep.checks) {
    v.check = prefix + v.check;
    if (v.failed() && !st.dims->weakly_integral()) v.details += "; ring not weakly integral";
    run.add(std::move(v));
  }
}

void step_divisibility(FileRun& run, RingState& st) {
  if (st.profile != Profile::fusion) {
    run.add(not_applicable("divisibility", "needs the fusion profile"));
    return;
  }
  const double snap = run.settings().tol.snap;
  run.add(check_codegree_divisibility(st.ring, *st.dims, *st.table, snap));
  run.add(check_modular_divisibility(st.ring, *st.dims, st.modular));
  run.add(check_modular_class_dims(st.ring, *st.dims, *st.table, st.modular, snap));
}

void step_type(FileRun& run, RingState& st) {
  if (st.profile != Profile::fusion) return;
  if (st.modular && st.dims->integral()) {
    for (auto v : check_type(type_of(*st.dims), true)) {
      v.check = "type." + v.check;
      run.add(std::move(v));
    }
  }
  run.add(check_nilpotent_adjoint(st.ring, *st.dims));
}

void sweep_ring(FileRun& run, const io::RingFile& f) {
  RingState st{f.ring, run.settings().profile.value_or(f.profile), f.modular, {}, {}};
  if (!step_validate(run, st)) return;
  step_dims(run, st);
  if (!step_table(run, st, false)) {
    step_type(run, st);
    return;
  }
  step_certify(run, st);
  step_hypergroup(run, st, false);
  step_burnside(run, st);
  step_harada(run, st);
  step_divisibility(run, st);
  step_type(run, st);
}

// ---------------------------------------------------------------------------
// Group pipeline

struct GroupState {
  ClassData cd;
  BasedRing class_ring = BasedRing::trivial();
  BasedRing rep_ring = BasedRing::trivial();
};

/// Class algebra, its table, the recovered characters and Rep(G).
GroupState group_rings(FileRun& run, const CayleyTable& table, bool checks) {
  GroupState g{class_data(table), BasedRing::trivial(), BasedRing::trivial()};
  g.class_ring = class_algebra_as_ring(g.cd);
  RingState cls{g.class_ring, Profile::based, false, {}, {}};
  if (checks && !step_validate(run, cls, "class-algebra.")) return g;
  step_dims(run, cls);
  step_table(run, cls, true, "class-algebra.");
  if (checks) step_certify(run, cls, "class-algebra.");
  const auto chars = group_characters(g.cd, *cls.table, run.settings().tol.snap);
  g.rep_ring = representation_ring(g.cd, chars, run.settings().tol.snap);
  if (!checks) return g;

  RingState rep{g.rep_ring, Profile::fusion, false, {}, {}};
  if (!step_validate(run, rep, "rep.")) return g;
  step_dims(run, rep);
  step_table(run, rep, true, "rep.");
  step_certify(run, rep, "rep.");

  // Class dimensions of Rep(G) are the conjugacy-class sizes.
  const double snap = run.settings().tol.snap;
  std::vector<std::int64_t> dims_found, sizes;
  bool integral = true;
  for (double c : rep.table->class_dims) {
    const double r = std::round(c);
    integral = integral && std::abs(c - r) < snap * std::max(1.0, r);
    dims_found.push_back(static_cast<std::int64_t>(r));
  }
  for (auto s : g.cd.sizes) sizes.push_back(static_cast<std::int64_t>(s));
  std::sort(dims_found.begin(), dims_found.end());
  std::sort(sizes.begin(), sizes.end());
  run.add(make_verdict("rep.class-sizes", integral && dims_found == sizes,
                       integral ? "" : "class dimensions are not integers"));

  // Each homomorphism of Rep(G) is evaluation of the characters at one class.
  const std::size_t m = g.cd.count();
  // Rep(G) lists irreps by degree (stable), as representation_ring does.
  std::vector<std::size_t> irrep(m);
  std::iota(irrep.begin(), irrep.end(), std::size_t{0});
  std::stable_sort(irrep.begin(), irrep.end(),
                   [&](std::size_t a, std::size_t b) { return chars.degrees[a] < chars.degrees[b]; });
  double worst = 0;
  std::vector<bool> used(m, false);
  for (std::size_t j = 0; j < m; ++j) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_c = 0;
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c]) continue;
      double d = 0;
      for (std::size_t a = 0; a < m; ++a) d = std::max(d, std::abs((*rep.table)(j, a) - chars.values(irrep[a], c)));
      if (d < best) best = d, best_c = c;
    }
    used[best_c] = true;
    const double cd = rep.table->class_dims[j];
    worst = std::max({worst, best, std::abs(cd - static_cast<double>(g.cd.sizes[best_c]))});
  }
  run.add(numeric_verdict("rep.central-characters", worst, worst < kIdentityTol));
  step_harada(run, rep, "rep.");
  return g;
}

void sweep_group(FileRun& run, const io::GroupFile& f) {
  const auto cd = class_data(f.table);
  run.add(verify_harada_group(cd).verdict);
  if (f.table.order <= 500) {
    run.add(group_ring_oracle(f.table, cd));
    run.add(coset_property(f.table, cd));
  } else {
    run.add(not_applicable("group-ring.oracle", "group order exceeds 500"));
    run.add(not_applicable("group-ring.coset", "group order exceeds 500"));
  }
  group_rings(run, f.table, true);
}

void sweep_type(FileRun& run, const io::TypeFile& f) {
  run.add_all(check_type(f.type, f.integral_modular));
}

// ---------------------------------------------------------------------------
// Per-file driver with error mapping

template <class Fn>
void guarded(RunReport& report, const std::string& path, Fn&& fn) {
  try {
    fn();
  } catch (const NumericError& e) {
    report.numeric_error = true;
    report.add(path, Verdict{"numeric", Outcome::fail, e.residual(), false, e.what()});
  } catch (const ParseError& e) {
    report.input_error = true;
    report.add(path, make_verdict("load", false, e.what()));
  } catch (const StructuralError& e) {
    report.input_error = true;
    report.add(path, make_verdict("load", false, e.what()));
  } catch (const SizeError& e) {
    report.input_error = true;
    report.add(path, make_verdict("size", false, e.what()));
  } catch (const Error& e) {
    report.add(path, make_verdict("precondition", false, e.what()));
  }
}

/// Loads `path` and, if that succeeds, runs `fn(FileRun&, InputFile&)`.
template <class Fn>
void with_file(RunReport& report, const Settings& s, const std::string& path, Fn&& fn) {
  std::optional<io::InputFile> in;
  guarded(report, path, [&] {
    in = io::load_file(path);
    report.inputs.emplace_back(in->path, in->sha256);
  });
  if (!in) return;
  FileRun run(report, *in, s);
  guarded(report, path, [&] { fn(run, *in); });
}

const io::RingFile& require_ring(const io::InputFile& in) {
  if (const auto* r = std::get_if<io::RingFile>(&in.content)) return *r;
  throw ParseError("expected a ring document");
}

RingState ring_state(const FileRun& run, const io::RingFile& f) {
  return RingState{f.ring, run.settings().profile.value_or(f.profile), f.modular, {}, {}};
}

std::vector<std::string> collect_files(const fs::path& dir, RunReport& report) {
  std::vector<std::string> files;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    report.input_error = true;
    report.add(dir.string(), make_verdict("load", false, "not a directory"));
    return files;
  }
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  return files;
}

IndexSet parse_subring(const BasedRing& ring, const std::string& text) {
  IndexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (item.empty()) continue;
    const bool numeric = std::all_of(item.begin(), item.end(), ::isdigit);
    const Index i = numeric ? std::stoul(item) : ring.index_of(item);
    if (i >= ring.rank()) throw ParseError("subring index out of range: " + item);
    out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// "1,4;2,2" or "(1,4; 2,2)": integral (d, n) pairs.
CategoryType parse_type_text(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') t += c;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> dn;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw ParseError("type entries must be d,n pairs: " + item);
    try {
      dn.emplace_back(std::stoull(item.substr(0, comma)), std::stoull(item.substr(comma + 1)));
    } catch (const std::exception&) {
      throw ParseError("type entry is not a pair of integers: " + item);
    }
  }
  return CategoryType::from_dims(dn);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character tables, Harada and Burnside checks, and type filters for fusion rings", "fusionkit"};
  app.require_subcommand(1);

  Settings s;
  bool json_doc = false, timing = false;
  std::string profile_text;
  app.add_option("--tol", s.tol.tol, "eigen tolerance")->capture_default_str();
  app.add_option("--snap", s.tol.snap, "integer snapping threshold")->capture_default_str();
  app.add_option("--seed", s.seed, "diagonalization seed")->capture_default_str();
  app.add_flag("--json", json_doc, "single JSON document instead of JSON lines");
  app.add_option("--profile", profile_text, "override ring profile")->check(CLI::IsMember({"based", "fusion"}));
  app.add_flag("--timing", timing, "include elapsed time in the summary");
  app.fallthrough();

  std::vector<std::string> files;
  auto* validate_cmd = app.add_subcommand("validate", "check the based-ring axioms");
  validate_cmd->add_option("files", files)->required();

  bool hypergroup = false;
  auto* chartab_cmd = app.add_subcommand("chartab", "character table with certification");
  chartab_cmd->add_option("files", files)->required();
  chartab_cmd->add_flag("--hypergroup", hypergroup, "also export the dual hypergroup");

  auto* burnside_cmd = app.add_subcommand("burnside", "Burnside vanishing property");
  burnside_cmd->add_option("files", files)->required();

  auto* harada_cmd = app.add_subcommand("harada", "Harada identity for rings or groups");
  harada_cmd->add_option("files", files)->required();

  std::string subring_text;
  auto* support_cmd = app.add_subcommand("support", "support of a fusion subring");
  support_cmd->add_option("files", files)->required();
  support_cmd->add_option("--subring", subring_text, "labels or indices; default the pointed part");

  auto* class_sums_cmd = app.add_subcommand("class-sums", "class sums as central elements");
  class_sums_cmd->add_option("files", files)->required();

  std::string type_text;
  std::uint64_t n_value = 0;
  bool modular = false;
  auto* typecheck_cmd = app.add_subcommand("typecheck", "divisibility filters on a type");
  typecheck_cmd->add_option("files", files);
  typecheck_cmd->add_option("--type", type_text, "integral type as d,n;d,n");
  typecheck_cmd->add_option("--N", n_value, "dimension (shape detection only without --type)");
  typecheck_cmd->add_flag("--modular", modular, "treat the type as integral modular");

  FilterFlags flags;
  bool all_filters = false;
  std::uint64_t cap = 1'000'000;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate types of dimension N");
  enumerate_cmd->add_option("N", n_value)->required();
  enumerate_cmd->add_flag("--square-divides", flags.square_divides);
  enumerate_cmd->add_flag("--unit-part", flags.unit_part);
  enumerate_cmd->add_flag("--coprime-squares", flags.coprime_squares);
  enumerate_cmd->add_flag("--pointed-multiple", flags.pointed_multiple);
  enumerate_cmd->add_flag("--orbit", flags.orbit);
  enumerate_cmd->add_flag("--all-filters", all_filters, "every filter except --orbit");
  enumerate_cmd->add_flag("--weakly-integral", flags.weakly_integral, "allow non-square d^2");
  enumerate_cmd->add_option("--cap", cap)->capture_default_str();

  std::string emit, out_path;
  auto* group_cmd = app.add_subcommand("group", "exact group checks and derived rings");
  group_cmd->add_option("files", files)->required();
  group_cmd->add_option("--emit-ring", emit)->check(CLI::IsMember({"rep", "class"}));
  group_cmd->add_option("--out", out_path, "write the emitted ring here");

  std::string dir;
  auto* sweep_cmd = app.add_subcommand("sweep", "every applicable check on a directory");
  sweep_cmd->add_option("dir", dir)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAllPassed : kInputError;
  }
  if (!profile_text.empty()) s.profile = profile_from_string(profile_text);

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.seed = s.seed;
  report.tol = s.tol.tol;
  report.snap = s.tol.snap;
  for (const auto& a : args) report.command += (report.command.empty() ? "" : " ") + a;

  if (*validate_cmd) {
    for (const auto& path : files)
      with_file(report, s, path, [&](FileRun& run, const io::InputFile& in) {
        if (const auto* g = std::get_if<io::GroupFile>(&in.content)) {
          const auto ring = class_algebra_as_ring(class_data(g->table));
          RingState st{ring, Profile::based, false, {}, {}};
          step_validate(run, st);
          return;
        }
        auto st = ring_state(run, require_ring(in));
        step_validate(run, st);
      });
  } else if (*chartab_cmd) {
    for (const auto& path : files)
      with_file(report, s, path, [&](FileRun& run, const io::InputFile& in) {
        auto st = ring_state(run, require_ring(in));
        if (!step_validate(run, st)) return;
        step_dims(run, st);
        if (!step_table(run, st, true)) return;
        const auto res = step_certify(run, st);
        run.export_data("table", io::table_to_json(st.ring, *st.table, res));
        if (hypergroup) step_hypergroup(run, st, true);
      });
  } else if (*burnside_cmd) {
    for (const auto& path : files)
      with_file(report, s, path, [&](FileRun& run, const io::InputFile& in) {
        auto st = ring_state(run, require_ring(in));
        if (!step_validate(run, st)) return;
        step_dims(run, st);
        if (step_table(run, st, true)) step_burnside(run, st);
      });
  } else if (*harada_cmd) {
    for (const auto& path : files)
      with_file(report, s, path, [&](FileRun& run, const io::InputFile& in) {
        if (const auto* g = std::get_if<io::GroupFile>(&in.content)) {
          run.add(verify_harada_group(class_data(g->table)).verdict);
          return;
        }
        auto st = ring_state(run, require_ring(in));
        if (!step_validate(run, st)) return;
        step_dims(run, st);
        if (step_table(run, st, true)) step_harada(run, st);
      });
  } else if (*support_cmd) {
    for (const auto& path : files)
      with_file(report, s, path, [&](FileRun& run, const io::InputFile& in) {
        auto st = ring_state(run, require_ring(in));
        if (!step_validate(run, st)) return;
        step_dims(run, st);
        if (!step_table(run, st, true)) return;
        const IndexSet seed = subring_text.empty() ? invertibles(st.ring) : parse_subring(st.ring, subring_text);
        const IndexSet closed = subring_closure(st.ring, seed);
        try {
          const auto sd = support(st.ring, *st.dims, *st.table, closed, kIdentityTol);
          run.add(make_verdict("support.idempotent", true));
          json labels = json::array();
          for (Index i : sd.subring) labels.push_back(st.ring.labels()[i]);
          run.export_data("support", {{"subring", labels},
                                      {"lambda_values", sd.lambda_values},
                                      {"support", sd.support}});
        } catch (const NumericError& e) {
          run.add(Verdict{"support.idempotent", Outcome::fail, e.residual(), false, e.what()});
        }
      });
  } else if (*class_sums_cmd) {
    for (const auto& path : files)
      with_file(report, s, path, [&](FileRun& run, const io::InputFile& in) {
        auto st = ring_state(run, require_ring(in));
        if (!step_validate(run, st)) return;
        step_dims(run, st);
        if (!step_table(run, st, true)) return;
        json sums = json::array();
        for (std::size_t j = 0; j < st.table->size(); ++j)
          sums.push_back({{"class", j},
                          {"class_dim", st.table->class_dims[j]},
                          {"action", io::central_to_json(class_sum(*st.dims, *st.table, j))}});
        const auto unit_dist =
            class_sum(*st.dims, *st.table, st.table->fp_index).distance(CentralElement::unit(st.ring.rank()));
        run.add(numeric_verdict("class-sums.unit-class", unit_dist.first, unit_dist.first < kIdentityTol));
        run.export_data("class-sums", sums);
      });
  } else if (*typecheck_cmd) {
    for (const auto& path : files)
      with_file(report, s, path, [&](FileRun& run, const io::InputFile& in) {
        const auto* t = std::get_if<io::TypeFile>(&in.content);
        if (!t) throw ParseError("expected a type document");
        run.export_data("type", io::type_to_json(t->type));
        run.add_all(check_type(t->type, t->integral_modular));
      });
    if (!type_text.empty() || n_value > 0) {
      const std::string label = "<command line>";
      guarded(report, label, [&] {
        if (!type_text.empty()) {
          const auto t = parse_type_text(type_text);
          if (n_value > 0 && t.total() != n_value)
            throw ParseError("type has dimension " + std::to_string(t.total()) + ", not " + std::to_string(n_value));
          report.exports.push_back({label, "type", io::type_to_json(t)});
          for (auto& v : check_type(t, modular)) report.add(label, std::move(v));
        } else {
          const auto split = squarefree_split(n_value);
          report.exports.push_back({label, "split", {{"N", n_value}, {"squarefree", split.squarefree},
                                                     {"square_part", split.square_part}}});
          const auto shape = detect_three_square_shape(n_value);
          if (shape)
            report.add(label, make_verdict("shape.p2q2r2d", true,
                                           "(p, q, r, d) = (" + std::to_string(shape->p) + ", " +
                                               std::to_string(shape->q) + ", " + std::to_string(shape->r) +
                                               ", " + std::to_string(shape->d) + ")"));
          else
            report.add(label, not_applicable("shape.p2q2r2d", "N is not of the form p^2 q^2 r^2 d"));
        }
      });
    }
    if (files.empty() && type_text.empty() && n_value == 0) {
      err << "typecheck: give a type file, --type or --N\n";
      return kInputError;
    }
  } else if (*enumerate_cmd) {
    if (all_filters) {
      const bool orbit = flags.orbit, weak = flags.weakly_integral;
      flags = FilterFlags::all();
      flags.orbit = orbit;
      flags.weakly_integral = weak;
    }
    const std::string label = "N=" + std::to_string(n_value);
    guarded(report, label, [&] {
      const auto found = enumerate_types(n_value, flags, cap);
      json list = json::array();
      for (const auto& c : found)
        list.push_back({{"type", io::type_to_json(c.type)}, {"passed", c.passed}});
      report.exports.push_back({label, "types", list});
      report.add(label, make_verdict("enumerate", true, std::to_string(found.size()) + " types"));
    });
  } else if (*group_cmd) {
    for (const auto& path : files)
      with_file(report, s, path, [&](FileRun& run, const io::InputFile& in) {
        const auto* g = std::get_if<io::GroupFile>(&in.content);
        if (!g) throw ParseError("expected a group-generators or cayley document");
        if (emit.empty()) {
          sweep_group(run, *g);
          return;
        }
        const auto gs = group_rings(run, g->table, false);
        const std::string base = g->name.empty() ? fs::path(path).stem().string() : g->name;
        const json doc = emit == "rep"
                             ? io::ring_to_json(gs.rep_ring, "Rep(" + base + ")", Profile::fusion, false)
                             : io::ring_to_json(gs.class_ring, "Z(" + base + ")", Profile::based, false);
        if (out_path.empty()) {
          run.export_data("ring", doc);
        } else {
          std::ofstream os(out_path);
          if (!os) throw ParseError("cannot write " + out_path);
          os << doc.dump(1) << "\n";
        }
      });
  } else if (*sweep_cmd) {
    s.honor_expect = true;
    const auto paths = collect_files(dir, report);
    if (paths.empty() && !report.input_error) report.warnings.push_back("no input files; zero checks run");
    std::vector<RunReport> parts(paths.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(paths.size()); ++k) {
      const auto idx = static_cast<std::size_t>(k);
      with_file(parts[idx], s, paths[idx], [&](FileRun& run, const io::InputFile& in) {
        if (const auto* r = std::get_if<io::RingFile>(&in.content)) sweep_ring(run, *r);
        else if (const auto* g = std::get_if<io::GroupFile>(&in.content)) sweep_group(run, *g);
        else sweep_type(run, std::get<io::TypeFile>(in.content));
      });
    }
    for (auto& p : parts) report.append(std::move(p));
    for (const auto& e : report.entries)
      if (e.unexpected()) err << "FAIL " << e.file << ": " << e.verdict.check << "\n";
  }

  if (timing)
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << report.render(json_doc);
  return report.exit_code();
}

}  // namespace fusionkit
