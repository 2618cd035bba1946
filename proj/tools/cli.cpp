#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "thetaq/catalog.hpp"
#include "thetaq/dissect.hpp"
#include "thetaq/error.hpp"
#include "thetaq/expr.hpp"
#include "thetaq/parallel.hpp"

namespace thetaq::cli {

namespace {

struct RunConfig {
  std::int64_t degree = 60;
  std::optional<int> order;
  std::string format = "text";
  std::string out_path;
  std::string jobs = "auto";
};

unsigned job_count(const RunConfig& cfg) {
  if (cfg.jobs == "auto") return default_jobs();
  return static_cast<unsigned>(std::max(1, std::stoi(cfg.jobs)));
}

// Writes the command output to --out when given, otherwise to `out`.
class Sink {
 public:
  Sink(const RunConfig& cfg, std::ostream& out) : out_(out), path_(cfg.out_path) {}
  std::ostream& stream() { return buffer_; }
  bool flush(std::ostream& err) {
    if (path_.empty()) {
      out_ << buffer_.str();
      return true;
    }
    std::ofstream f(path_);
    if (!f) {
      err << "error: cannot write " << path_ << "\n";
      return false;
    }
    f << buffer_.str();
    return static_cast<bool>(f);
  }

 private:
  std::ostream& out_;
  std::string path_;
  std::ostringstream buffer_;
};

int report_error(const std::exception& e, std::ostream& err) {
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err << "parse error: " << pe->what();
    if (!pe->expected().empty()) {
      err << " (expected one of:";
      for (const auto& x : pe->expected()) err << " " << x;
      err << ")";
    }
    err << "\n";
    return kUsage;
  }
  if (const auto* te = dynamic_cast<const Error*>(&e)) {
    err << "error: " << te->what() << "\n";
    if (te->kind() == ErrorKind::UnknownIdentityName || te->kind() == ErrorKind::InvalidArgument) return kUsage;
    return is_parse_error(te->kind()) ? kUsage : kEvaluation;
  }
  err << "error: " << e.what() << "\n";
  return kEvaluation;
}

int cmd_expand(const std::string& text, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ExprPtr expr;
  try {
    expr = parse_expr(text);
  } catch (const std::exception& e) {
    return report_error(e, err);
  }
  LaurentSeries s;
  int order = 1;
  try {
    order = cfg.order.value_or(required_root_order(*expr));
    s = evaluate(*expr, cfg.degree, order);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kEvaluation;
  }
  Sink sink(cfg, out);
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["expression"] = print_expr(*expr);
    j["degree"] = cfg.degree;
    j["order"] = order;
    j["validity"] = s.validity();
    j["series"] = s.to_string();
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [m, c] : s.terms())
      j["terms"].push_back({{"a", m.a}, {"b", m.b}, {"coeff", c.to_string()}});
    sink.stream() << j.dump(2) << "\n";
  } else {
    sink.stream() << s.to_string() << "\n" << "valid through total degree " << s.validity() << "\n";
  }
  return sink.flush(err) ? kOk : kUsage;
}

void print_report_text(std::ostream& os, const Report& r, bool with_series) {
  os << r.name << ": " << to_string(r.status) << " through degree " << r.degree << " (order " << r.order
     << "; lhs " << r.lhs_terms << " terms, rhs " << r.rhs_terms << " terms)";
  if (r.first_mismatch)
    os << "; first mismatch at " << r.first_mismatch->monomial << ": lhs " << r.first_mismatch->lhs << ", rhs "
       << r.first_mismatch->rhs;
  if (r.status == Status::error) os << "; " << r.error;
  os << "\n";
  if (with_series && r.status != Status::error) {
    os << "  lhs: " << r.lhs_series << "\n";
    os << "  rhs: " << r.rhs_series << "\n";
  }
}

int status_exit(const Report& r) {
  switch (r.status) {
    case Status::verified: return kOk;
    case Status::failed: return kFailed;
    case Status::error: return kEvaluation;
  }
  return kEvaluation;
}

int cmd_verify(const std::string& text, const RunConfig& cfg, bool show_series, std::ostream& out,
               std::ostream& err) {
  Identity id;
  try {
    id = make_identity("identity", text, "command line");
  } catch (const std::exception& e) {
    return report_error(e, err);
  }
  const Report r = verify_identity(id, cfg.degree, cfg.order);
  if (r.status == Status::error) err << "error: " << r.error << "\n";
  Sink sink(cfg, out);
  if (cfg.format == "json") sink.stream() << report_json(r, show_series) << "\n";
  else print_report_text(sink.stream(), r, show_series);
  if (!sink.flush(err)) return kUsage;
  return status_exit(r);
}

int cmd_catalog(const std::vector<std::string>& names, const RunConfig& cfg, bool degree_given, bool show_series,
                bool list, std::ostream& out, std::ostream& err) {
  const auto& catalog = builtin_catalog();
  std::vector<Identity> selected;
  if (names.empty() || (names.size() == 1 && names.front() == "all")) {
    selected = catalog;
  } else {
    for (const auto& n : names) {
      auto it = std::find_if(catalog.begin(), catalog.end(), [&](const Identity& id) { return id.name == n; });
      if (it == catalog.end()) {
        err << "error: " << to_string(ErrorKind::UnknownIdentityName) << ": no catalog entry named '" << n << "'\n";
        return kUsage;
      }
      selected.push_back(*it);
    }
  }
  Sink sink(cfg, out);
  if (list) {
    for (const auto& id : selected)
      sink.stream() << id.name << ": " << print_expr(*id.lhs) << " = " << print_expr(*id.rhs) << "  ["
                    << id.reference << "]\n";
    return sink.flush(err) ? kOk : kUsage;
  }
  const auto reports = run_catalog(selected, degree_given ? std::optional(cfg.degree) : std::nullopt,
                                   job_count(cfg), cfg.order);
  const RunSummary s = summarize(reports);
  if (cfg.format == "json") {
    sink.stream() << run_json(reports, show_series) << "\n";
  } else {
    for (const auto& r : reports) print_report_text(sink.stream(), r, show_series);
    sink.stream() << "total " << s.total << ", verified " << s.verified << ", failed " << s.failed << ", error "
                  << s.error << "\n";
  }
  if (!sink.flush(err)) return kUsage;
  return s.verified == s.total ? kOk : kFailed;
}

int cmd_dissect(int m, std::optional<int> k, const std::string& mode, const RunConfig& cfg, std::ostream& out,
                std::ostream& err) {
  if (m < 1) {
    err << "error: modulus --m must be >= 1\n";
    return kUsage;
  }
  if (k && (*k < 0 || *k >= m)) {
    err << "error: residue --k must lie in [0, " << m << ")\n";
    return kUsage;
  }
  std::vector<int> classes;
  if (k) classes.push_back(*k);
  else
    for (int r = 0; r < m; ++r) classes.push_back(r);

  struct Row {
    int k;
    std::string filter, closed;
    bool agree = true;
  };
  const bool want_filter = mode != "closed";
  const bool want_closed = mode != "filter";
  const auto rows = parallel_map(classes.size(), job_count(cfg), [&](std::size_t i) {
    Row row{classes[i], {}, {}, true};
    const DissectionSpec spec(m, row.k);
    std::optional<LaurentSeries> f, c;
    if (want_filter) f = dissect_filter(spec, cfg.degree);
    if (want_closed) c = dissect_closed(spec, cfg.degree);
    if (f) row.filter = f->to_string();
    if (c) row.closed = c->to_string();
    if (f && c) row.agree = series_equal_through(*f, *c, cfg.degree).equal;
    return row;
  });
  std::size_t agree = 0;
  for (const auto& r : rows) agree += r.agree;

  Sink sink(cfg, out);
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["degree"] = cfg.degree;
    j["mode"] = mode;
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json row{{"k", r.k}};
      if (want_filter) row["filter"] = r.filter;
      if (want_closed) row["closed"] = r.closed;
      if (want_filter && want_closed) row["agree"] = r.agree;
      j["classes"].push_back(row);
    }
    if (want_filter && want_closed) j["agreeing"] = agree;
    j["total"] = rows.size();
    sink.stream() << j.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      if (want_filter && want_closed) {
        sink.stream() << "S_" << r.k << " filter: " << r.filter << "\n";
        sink.stream() << "S_" << r.k << " closed: " << r.closed << "\n";
        sink.stream() << "S_" << r.k << ": " << (r.agree ? "agree" : "DISAGREE") << "\n";
      } else {
        sink.stream() << "S_" << r.k << ": " << (want_filter ? r.filter : r.closed) << "\n";
      }
    }
    if (want_filter && want_closed) sink.stream() << agree << "/" << rows.size() << " agree\n";
  }
  if (!sink.flush(err)) return kUsage;
  return agree == rows.size() ? kOk : kFailed;
}

void add_common(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--degree", cfg.degree, "Truncation degree (total degree in a and b)")
      ->check(CLI::NonNegativeNumber);
  sub.add_option("--order", cfg.order, "Working cyclotomic order (multiple of every root order used)")
      ->check(CLI::PositiveNumber);
  sub.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub.add_option("--out", cfg.out_path, "Write output to this file instead of standard output");
  sub.add_option("--jobs", cfg.jobs, "Worker threads (integer or auto)")
      ->check(CLI::IsMember({"auto"}) | CLI::PositiveNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series engine for the theta function f(a,b) and its root-of-unity transformations",
               "thetaq"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string expr_text;
  std::string identity_text;
  std::vector<std::string> names;
  bool show_series = false;
  bool list = false;
  int m = 0;
  std::optional<int> k;
  std::string mode = "both";

  auto* expand = app.add_subcommand("expand", "Expand an expression as a truncated series");
  expand->add_option("expr", expr_text, "Expression, e.g. \"f(a, b)\"")->required();
  add_common(*expand, cfg);

  auto* verify = app.add_subcommand("verify", "Verify an identity lhs = rhs through the truncation degree");
  verify->add_option("identity", identity_text, "Identity, e.g. \"f(a, b) = f(b, a)\"")->required();
  verify->add_flag("--show-series", show_series, "Print both expanded sides");
  add_common(*verify, cfg);

  auto* catalog = app.add_subcommand("catalog", "Verify built-in identities (all, or the named ones)");
  catalog->add_option("names", names, "Identity names, or 'all'");
  catalog->add_flag("--show-series", show_series, "Print both expanded sides of every entry");
  catalog->add_flag("--list", list, "List the selected identities instead of verifying them");
  add_common(*catalog, cfg);

  auto* dissect = app.add_subcommand("dissect", "Compare residue-class components S_k computed two ways");
  dissect->add_option("--m", m, "Modulus")->required();
  dissect->add_option("--k", k, "Residue class (default: all)");
  dissect->add_option("--mode", mode, "filter, closed or both")->check(CLI::IsMember({"filter", "closed", "both"}));
  add_common(*dissect, cfg);

  std::vector<std::string> argv_storage{"thetaq"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*expand) return cmd_expand(expr_text, cfg, out, err);
    if (*verify) return cmd_verify(identity_text, cfg, show_series, out, err);
    if (*catalog)
      return cmd_catalog(names, cfg, catalog->count("--degree") > 0, show_series, list, out, err);
    if (*dissect) return cmd_dissect(m, k, mode, cfg, out, err);
  } catch (const std::exception& e) {
    return report_error(e, err);
  }
  return kUsage;
}

}  // namespace thetaq::cli
