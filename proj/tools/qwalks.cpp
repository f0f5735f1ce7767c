// qwalks: command-line front end.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include "qwalks/io/json.hpp"
#include "qwalks/qwalks.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace qwalks;
using nlohmann::json;

namespace {

struct Options {
  std::string steps;
  std::string region = "quarter";
  int n = 10;
  int max_elements = 200;
  std::string csv;
  bool as_json = false;
  bool all = false;
  double max_cells = 1e8;
};

void guard_cells(double cells, const Options& o) {
  if (cells > o.max_cells)
    throw GuardExceeded("request needs about " + std::to_string(static_cast<long long>(cells)) +
                        " layer cells, above --max-cells=" + std::to_string(static_cast<long long>(o.max_cells)) +
                        "; lower -n, use a smaller region, or raise --max-cells");
}

Series series_for(const StepSet& s, Region r, int n, const Options& o) {
  if (r == Region::QuarterPlane) {
    guard_cells(static_cast<double>(n / 2 + 6) * (n / 2 + 6) * 2, o);
    return quarter_plane_totals(s, n);
  }
  guard_cells(static_cast<double>(count_walks_cells(r, n, History::Last)), o);
  return count_walks(s, r, n, History::Last).totals;
}

std::string registry_tag(const StepSet& s) {
  auto hit = find_registry(s);
  if (!hit) return "";
  return "model " + std::to_string(hit->first->index) + (hit->second ? " (mirrored)" : "");
}

int cmd_classify(const Options& o) {
  StepSet s = parse(o.steps);
  ModelClass c = classify(s);
  DriftVector d = drift(s);
  if (o.as_json) {
    std::cout << json{{"steps", s.to_string()}, {"class", std::string(to_string(c))}, {"drift", {d.dx_total, d.dy_total}}}.dump(2)
              << "\n";
  } else {
    std::cout << s.to_string() << ": " << to_string(c) << ", drift (" << d.dx_total << "," << d.dy_total << ")";
    if (auto tag = registry_tag(s); !tag.empty()) std::cout << ", " << tag;
    std::cout << "\n";
  }
  return 0;
}

int cmd_models(const Options&) {
  for (const auto& s : enumerate_models()) {
    std::cout << s.to_string();
    if (auto tag = registry_tag(s); !tag.empty()) std::cout << "\t" << tag;
    std::cout << "\n";
  }
  return 0;
}

int cmd_count(const Options& o) {
  StepSet s = parse(o.steps);
  Region r = parse_region(o.region);
  if (o.n < 0) throw DomainError("-n must be nonnegative");
  guard_cells(static_cast<double>(count_walks_cells(r, o.n, History::All)), o);
  std::cout << io::to_json(count_walks(s, r, o.n, History::All)).dump() << "\n";
  return 0;
}

int cmd_series(const Options& o) {
  StepSet s = parse(o.steps);
  Region r = parse_region(o.region);
  if (o.n < 0) throw DomainError("-n must be nonnegative");
  Series q = series_for(s, r, o.n, o);
  if (o.csv.empty()) {
    io::write_csv(std::cout, q);
  } else {
    std::ofstream f(o.csv);
    if (!f) throw DomainError("cannot open " + o.csv);
    io::write_csv(f, q);
  }
  return 0;
}

void print_certificate(const growth::GrowthCertificate& c) {
  std::cout << "model    " << c.model.to_string() << " (registry " << c.registry_index << ", drift " << to_string(c.drift_sign)
            << ")\n";
  std::cout << "upper    " << to_string(c.upper.value) << "  [" << growth::to_string(c.upper.kind) << ": " << c.upper.note
            << "]\n";
  std::cout << "lower    " << to_string(c.lower.value) << "\n";
  for (const auto& l : c.lower.chain)
    std::cout << "  " << growth::to_string(l.kind) << " " << l.source << " -> " << to_string(l.value) << "  (" << l.note
              << ")\n";
  std::cout << "beta     " << to_string(c.beta) << " ~ " << c.beta.to_float() << "\n";
  std::cout << "verified " << (c.verified ? "true" : "false") << "\n";
}

int cmd_growth(const Options& o) {
  auto c = growth::certify(parse(o.steps));
  if (o.as_json) std::cout << io::to_json(c).dump(2) << "\n";
  else print_certificate(c);
  return c.verified ? 0 : 1;
}

int cmd_group(const Options& o) {
  StepSet s = parse(o.steps);
  auto orb = group::orbit(s, o.max_elements);
  json out = io::to_json(orb);
  out["steps"] = s.to_string();
  if (orb.finite()) {
    auto os = group::orbit_sum(orb);
    out["orbit_sum"] = {{"value", io::to_json(os.value)}, {"is_laurent", os.is_laurent}, {"is_zero", os.is_zero()}};
  }
  if (o.as_json) {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << s.to_string() << ": " << (orb.finite() ? "Finite, order " + std::to_string(orb.order) : "ExceededBound")
            << "\n";
  for (const auto& e : orb.elements)
    std::cout << "  " << (e.sign > 0 ? "+" : "-") << " (" << to_string(e.map.x_image) << ", " << to_string(e.map.y_image)
              << ")\n";
  if (orb.finite()) {
    auto os = group::orbit_sum(orb);
    std::cout << "orbit sum: " << to_string(os.value) << (os.is_laurent ? " (Laurent)" : "") << "\n";
  }
  return 0;
}

json estimate_json(const StepSet& s, int n, const Options& o) {
  Series q = series_for(s, Region::QuarterPlane, n, o);
  if (auto hit = find_registry(s)) return io::to_json(estimate::compare_registry(hit->first->index, q));
  auto e = estimate::estimate_beta(q);
  return {{"model", s.to_string()}, {"beta_hat", e.beta_hat}, {"alpha_hat", e.alpha_hat}};
}

int cmd_estimate(const Options& o) {
  std::cout << estimate_json(parse(o.steps), o.n, o).dump(2) << "\n";
  return 0;
}

int cmd_report(const Options& o) {
  if (!o.all) throw DomainError("report needs --all");
  json models = json::array();
  for (const auto& rec : registry()) {
    json m;
    m["index"] = rec.index;
    m["certificate"] = io::to_json(growth::certify(rec.steps));
    m["estimate"] = estimate_json(rec.steps, o.n, o);
    m["kappa_label"] = rec.kappa_label;
    models.push_back(std::move(m));
  }
  std::cout << json{{"n", o.n}, {"models", models}}.dump(2) << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and growth certificates for small-step lattice walks"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-cells", o.max_cells, "Memory guard on layer cells")->capture_default_str();

  auto steps_opt = [&](CLI::App* c) { c->add_option("-s,--steps", o.steps, "Step set, e.g. \"N,E,S,W\"")->required(); };

  auto* classify = app.add_subcommand("classify", "Model class and drift of a step set");
  steps_opt(classify);
  classify->add_flag("--json", o.as_json);

  auto* models = app.add_subcommand("models", "The quarter-plane models up to diagonal reflection");

  auto* count = app.add_subcommand("count", "Endpoint-resolved counts as JSON");
  steps_opt(count);
  count->add_option("-r,--region", o.region, "quarter | half-y | half-x | full")->capture_default_str();
  count->add_option("-n", o.n, "Maximum length")->capture_default_str();

  auto* series = app.add_subcommand("series", "Total counts per length as CSV");
  steps_opt(series);
  series->add_option("-r,--region", o.region, "quarter | half-y | half-x | full")->capture_default_str();
  series->add_option("-n", o.n, "Maximum length")->capture_default_str();
  series->add_option("--csv", o.csv, "Output file (default stdout)");

  auto* growth_cmd = app.add_subcommand("growth", "Growth certificate of a registered model");
  steps_opt(growth_cmd);
  growth_cmd->add_flag("--json", o.as_json);

  auto* group_cmd = app.add_subcommand("group", "Orbit and orbit sum of the group of the walk");
  steps_opt(group_cmd);
  group_cmd->add_option("--max", o.max_elements, "Orbit size bound")->capture_default_str();
  group_cmd->add_flag("--json", o.as_json);

  auto* estimate_cmd = app.add_subcommand("estimate", "Ratio estimates of beta and alpha");
  steps_opt(estimate_cmd);
  estimate_cmd->add_option("-n", o.n, "Series length")->default_val(1000);

  auto* report = app.add_subcommand("report", "Certificates and estimates for all registered models");
  report->add_flag("--all", o.all);
  report->add_option("-n", o.n, "Series length for the estimates")->default_val(1000);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*models) return cmd_models(o);
    if (*count) return cmd_count(o);
    if (*series) return cmd_series(o);
    if (*growth_cmd) return cmd_growth(o);
    if (*group_cmd) return cmd_group(o);
    if (*estimate_cmd) return cmd_estimate(o);
    if (*report) return cmd_report(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
