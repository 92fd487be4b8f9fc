#include "legfill/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "legfill/classifier.hpp"
#include "legfill/diagram.hpp"
#include "legfill/disk_engine.hpp"
#include "legfill/filling_maps.hpp"
#include "legfill/serialization.hpp"

namespace legfill {
namespace {

std::string format_tuple(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string render_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string dga_action(int n, const std::string& format) {
  auto dga = differential(build_torus_2n(n));
  if (format == "json") return render_json(to_json(dga));
  std::ostringstream os;
  os << "(2," << n << ") torus link: twist chords b1..b" << n
     << " (degree 0), caps a1, a2 (degree 1)\n"
     << "coefficients: Z2 Laurent polynomials in s0\n";
  for (int c = 0; c < dga.alphabet->size(); ++c)
    os << "d " << dga.alphabet->label(c) << " = " << dga.of(c).str() << "\n";
  return os.str();
}

std::string aug_action(const Permutation& sigma, const std::string& format) {
  auto aug = closed_form_augmentation(sigma);
  auto cvec = invariant_vector(sigma);
  if (format == "json") {
    auto j = to_json(aug);
    j["C"] = cvec;
    return render_json(j);
  }
  std::ostringstream os;
  os << "sigma = " << sigma.str() << "\n"
     << "C = " << format_tuple(cvec) << "\n";
  for (int i = 0; i < aug.n; ++i)
    os << "eps(b" << i + 1 << ") = " << aug.images[i].str() << "\n";
  return os.str();
}

std::string table_action(int n, const std::string& format) {
  auto orders = all_pinch_orders(n);
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : orders)
      rows.push_back({{"C", invariant_vector(s)},
                      {"aug", to_json(closed_form_augmentation(s))}});
    return render_json({{"n", n}, {"orders", rows}});
  }
  std::ostringstream os;
  os << orders.size() << " pinch orders\n";
  for (const auto& s : orders)
    os << s.str() << "  C = " << format_tuple(invariant_vector(s)) << "  "
       << closed_form_augmentation(s).str() << "\n";
  return os.str();
}

std::string classes_action(int n, bool force, const std::string& format) {
  auto report = enumerate_classes(n, force);
  if (format == "json") return render_json(to_json(report));
  std::ostringstream os;
  os << report.classes.size() << " classes (Catalan C_" << n << " = "
     << report.catalan_number << ")\n";
  int k = 0;
  for (const auto& cls : report.classes) {
    os << "class " << ++k << ": rep " << cls.rep.str() << "  size " << cls.size
       << "  C = " << format_tuple(cls.cvec);
    if (n % 2 == 0) os << "  lift " << Permutation(cls.aug.sigma).str();
    os << "\n  " << cls.aug.str() << "\n";
  }
  return os.str();
}

int verify_action(int n, bool force, std::ostream& os) {
  const int m = (n % 2 == 1) ? n : n + 1;
  bool good = true;
  std::optional<Dga> dga;
  try {
    dga = differential(build_torus_2n(m));
    os << "ok: (2," << m << ") differential squares to zero and lowers degree by one\n";
  } catch (const std::domain_error& e) {
    os << "FAIL: " << e.what() << "\n";
    good = false;
  }

  auto report = enumerate_classes(n, force);
  if (report.classes.size() == report.catalan_number) {
    os << "ok: " << report.classes.size() << " filling classes = Catalan C_" << n << "\n";
  } else {
    os << "FAIL: " << report.classes.size() << " classes, expected Catalan C_" << n
       << " = " << report.catalan_number << "\n";
    good = false;
  }

  auto msg = distinctness_report(report);
  if (msg.empty()) {
    os << "ok: class augmentations are valid and pairwise distinct\n";
  } else {
    os << "FAIL: " << msg << "\n";
    good = false;
  }

  if (n <= 6 && dga) {
    bool sweep = true;
    for (const auto& s : all_pinch_orders(n)) {
      auto direct = closed_form_augmentation(s);
      if (!(direct == close_filling(run_pinches(n, s)))) sweep = false;
      auto carried = (n % 2 == 1) ? direct : closed_form_augmentation(lift_permutation(s));
      if (!is_augmentation(*dga, carried)) sweep = false;
      if (!sweep) {
        os << "FAIL: pinch order " << s.str() << " does not verify\n";
        good = false;
        break;
      }
    }
    if (sweep)
      os << "ok: all " << all_pinch_orders(n).size()
         << " pinch sequences agree with their closed forms and augment the DGA\n";
  } else {
    os << "skipped: exhaustive pinch sweep (n > 6)\n";
  }

  if (!good) {
    os << "verification failed for n = " << n << "\n";
    return 1;
  }
  os << "all checks passed for n = " << n << "\n";
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Augmentations and filling classes of maximal-tb (2,n) torus links"};
  app.require_subcommand(1);

  int n = 0;
  std::vector<int> sigma_vals;
  std::string format = "text";
  std::string out_path;
  bool force = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write output to this file");
  };

  auto* dga_cmd =
      app.add_subcommand("dga", "differential of the (2,n) torus link DGA");
  dga_cmd->add_option("-n,--chords", n, "number of twist chords (odd)")->required();
  add_format(dga_cmd);
  add_out(dga_cmd);

  auto* aug_cmd =
      app.add_subcommand("aug", "augmentation induced by one pinch order");
  aug_cmd->add_option("--sigma", sigma_vals, "pinch order, e.g. 2,3,1")
      ->required()
      ->delimiter(',');
  aug_cmd->add_option("-n,--chords", n, "number of twist chords (checked against --sigma)");
  add_format(aug_cmd);
  add_out(aug_cmd);

  auto* table_cmd =
      app.add_subcommand("table", "augmentations of every pinch order");
  table_cmd->add_option("-n,--chords", n, "number of twist chords")->required();
  add_format(table_cmd);
  add_out(table_cmd);

  auto* classes_cmd =
      app.add_subcommand("classes", "filling classes and their augmentations");
  classes_cmd->add_option("-n,--chords", n, "number of twist chords")->required();
  classes_cmd->add_flag("--force", force, "allow n > 10");
  add_format(classes_cmd);
  add_out(classes_cmd);

  auto* verify_cmd =
      app.add_subcommand("verify", "check the DGA and classification invariants");
  verify_cmd->add_option("-n,--chords", n, "number of twist chords")->required();
  verify_cmd->add_flag("--force", force, "allow n > 10");
  add_out(verify_cmd);

  try {
    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("legfill");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const auto& s : full) argv.push_back(s.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  int code = 0;
  std::string body;
  try {
    if (app.got_subcommand(dga_cmd)) {
      body = dga_action(n, format);
    } else if (app.got_subcommand(aug_cmd)) {
      if (aug_cmd->count("-n") && n != static_cast<int>(sigma_vals.size()))
        throw std::invalid_argument("-n disagrees with the length of --sigma");
      body = aug_action(Permutation(sigma_vals), format);
    } else if (app.got_subcommand(table_cmd)) {
      body = table_action(n, format);
    } else if (app.got_subcommand(classes_cmd)) {
      body = classes_action(n, force, format);
    } else {
      std::ostringstream os;
      code = verify_action(n, force, os);
      body = os.str();
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << "\n";
      return 2;
    }
    file << body;
  } else {
    out << body;
  }
  return code;
}

}  // namespace legfill
