// Command line front end: prints speciality reports, resolutions, cluster
// data and McKay quivers for C_{r,a}, runs the cross-validation suite and
// writes full report bundles.
//
// Exit codes: 0 success, 1 validation failures, 2 usage or input error.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mckay/render.hpp"
#include "mckay/validate.hpp"

namespace {

struct GlobalOptions {
  std::string format = "text";
  bool quiet = false;
};

void print(const GlobalOptions& opt, const std::string& body) {
  if (!opt.quiet) std::cout << body;
}

void print_json(const GlobalOptions& opt, const nlohmann::json& doc) {
  if (!opt.quiet) std::cout << doc.dump(2) << "\n";
}

int unsupported(const std::string& sub, const std::string& format) {
  std::cerr << "format '" << format << "' is not available for '" << sub << "'\n";
  return 2;
}

int run_special(const mckay::GroupParams& g, const GlobalOptions& opt) {
  if (opt.format == "text") {
    print(opt, mckay::specials_text(g));
    print(opt, mckay::bg_chart_text(g));
    return 0;
  }
  if (opt.format == "json") {
    print_json(opt, nlohmann::json{{"group", mckay::group_json(g)},
                                   {"basis", mckay::basis_json(g)},
                                   {"specials", mckay::specials_json(g)}});
    return 0;
  }
  return unsupported("special", opt.format);
}

int run_resolve(const mckay::GroupParams& g, const GlobalOptions& opt) {
  if (opt.format == "text") {
    print(opt, mckay::resolution_text(g));
    return 0;
  }
  if (opt.format == "json") {
    print_json(opt, nlohmann::json{{"group", mckay::group_json(g)},
                                   {"resolution", mckay::resolution_json(g)}});
    return 0;
  }
  if (opt.format == "dot") {
    print(opt, mckay::dual_graph_dot(g));
    return 0;
  }
  if (opt.format == "svg") {
    print(opt, mckay::newton_svg(g));
    return 0;
  }
  return unsupported("resolve", opt.format);
}

int run_clusters(const mckay::GroupParams& g, const GlobalOptions& opt) {
  if (opt.format == "text") {
    print(opt, mckay::clusters_text(g));
    return 0;
  }
  if (opt.format == "json") {
    print_json(opt, nlohmann::json{{"group", mckay::group_json(g)},
                                   {"clusters", mckay::clusters_json(g)}});
    return 0;
  }
  if (opt.format == "svg") {
    print(opt, mckay::clusters_svg(g));
    return 0;
  }
  return unsupported("clusters", opt.format);
}

int run_quiver(const mckay::GroupParams& g, const GlobalOptions& opt) {
  if (opt.format == "text") {
    print(opt, mckay::quiver_text(g));
    return 0;
  }
  if (opt.format == "json") {
    print_json(opt, nlohmann::json{{"group", mckay::group_json(g)},
                                   {"quiver", mckay::quiver_json(g)}});
    return 0;
  }
  if (opt.format == "dot") {
    print(opt, mckay::quiver_dot(g));
    return 0;
  }
  return unsupported("quiver", opt.format);
}

int run_check_single(const mckay::GroupParams& g, const GlobalOptions& opt) {
  const mckay::ValidationReport report = mckay::check_group(g);
  if (opt.format == "text")
    print(opt, mckay::checks_text(report));
  else if (opt.format == "json")
    print_json(opt, mckay::validation_json(report));
  else
    return unsupported("check", opt.format);
  return report.all_pass() ? 0 : 1;
}

int run_check_sweep(mckay::Int r_max, const GlobalOptions& opt) {
  const auto reports = mckay::sweep(r_max);
  mckay::Int failures = 0;
  for (const auto& rep : reports) failures += rep.all_pass() ? 0 : 1;

  if (opt.format == "json") {
    nlohmann::json doc;
    nlohmann::json list = nlohmann::json::array();
    for (const auto& rep : reports) list.push_back(mckay::validation_json(rep));
    doc["reports"] = list;
    doc["summary"] = {{"pass", static_cast<mckay::Int>(reports.size()) - failures},
                      {"fail", failures}};
    print_json(opt, doc);
  } else if (opt.format == "text") {
    std::string body;
    for (const auto& rep : reports) {
      body += rep.all_pass() ? "PASS" : "FAIL";
      body += " C(" + std::to_string(rep.group.r()) + "," + std::to_string(rep.group.a()) + ")";
      body += "  specials=" + std::to_string(rep.counts.specials);
      body += " curves=" + std::to_string(rep.counts.curves);
      body += " clusters=" + std::to_string(rep.counts.clusters);
      body += " hj=" + std::to_string(rep.counts.hj_length) + "\n";
      if (!rep.all_pass())
        for (const auto& c : rep.checks)
          if (!c.pass) body += "  FAIL " + c.name + ": " + c.detail + "\n";
    }
    body += std::to_string(reports.size()) + " groups, " +
            std::to_string(reports.size() - static_cast<std::size_t>(failures)) + " pass, " +
            std::to_string(failures) + " fail\n";
    print(opt, body);
  } else {
    return unsupported("check --sweep", opt.format);
  }
  return failures == 0 ? 0 : 1;
}

int run_report(const mckay::GroupParams& g, const std::string& outdir, const GlobalOptions& opt) {
  const mckay::ReportBundle bundle = mckay::emit(g);
  mckay::write_bundle(bundle, outdir);
  if (!opt.quiet)
    std::cout << "wrote " << bundle.files().size() << " files to " << outdir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"special representations, toric resolutions, torus-fixed clusters and McKay "
               "quivers of cyclic quotient surface singularities C_{r,a}"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "dot", "text", "svg"}));
  app.add_flag("--quiet", opt.quiet, "suppress stdout");

  mckay::Int r = 0, a = 0, sweep_max = 0;
  std::string outdir;

  auto* special = app.add_subcommand("special", "special representations and the G-basis");
  special->add_option("R", r, "group order")->required();
  special->add_option("A", a, "action exponent")->required();

  auto* resolve = app.add_subcommand("resolve", "toric minimal resolution data");
  resolve->add_option("R", r, "group order")->required();
  resolve->add_option("A", a, "action exponent")->required();

  auto* clusters = app.add_subcommand("clusters", "torus-fixed clusters of the Hilbert scheme");
  clusters->add_option("R", r, "group order")->required();
  clusters->add_option("A", a, "action exponent")->required();

  auto* quiver = app.add_subcommand("quiver", "McKay quiver and Cartan comparison");
  quiver->add_option("R", r, "group order")->required();
  quiver->add_option("A", a, "action exponent")->required();

  auto* check = app.add_subcommand("check", "cross-validate one group or sweep all r <= RMAX");
  check->add_option("R", r, "group order");
  check->add_option("A", a, "action exponent");
  check->add_option("--sweep", sweep_max, "run every small pair with r <= RMAX");

  auto* report = app.add_subcommand("report", "write the full document bundle for one group");
  report->add_option("R", r, "group order")->required();
  report->add_option("A", a, "action exponent")->required();
  report->add_option("-o,--output", outdir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (special->parsed()) return run_special(mckay::make_group(r, a), opt);
    if (resolve->parsed()) return run_resolve(mckay::make_group(r, a), opt);
    if (clusters->parsed()) return run_clusters(mckay::make_group(r, a), opt);
    if (quiver->parsed()) return run_quiver(mckay::make_group(r, a), opt);
    if (check->parsed()) {
      const bool has_pair = check->count("R") == 1 && check->count("A") == 1;
      const bool has_sweep = check->count("--sweep") == 1;
      if (has_pair == has_sweep) {
        std::cerr << "check needs either R A or --sweep RMAX\n";
        return 2;
      }
      return has_sweep ? run_check_sweep(sweep_max, opt)
                       : run_check_single(mckay::make_group(r, a), opt);
    }
    if (report->parsed()) return run_report(mckay::make_group(r, a), outdir, opt);
  } catch (const mckay::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 2;
  } catch (const mckay::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
