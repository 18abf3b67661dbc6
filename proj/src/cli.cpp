#include "rbd/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

#include "rbd/error.hpp"
#include "rbd/report.hpp"
#include "rbd/verify.hpp"

namespace rbd {

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::InvalidArgument, "'" + std::string(s) + "' is not an integer");
  }
  return v;
}

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::InvalidArgument, "expected a,b but got '" + s + "'");
  return {parse_int(std::string_view(s).substr(0, comma)), parse_int(std::string_view(s).substr(comma + 1))};
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& item : items) {
    std::string_view rest = item;
    while (true) {
      const auto comma = rest.find(',');
      out.push_back(Rational::parse(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants for rational blow-downs, class T singularities and quotient surfaces", "rbd"};
  app.fallthrough();
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--json", "emit JSON (default)");
  app.add_flag("--pretty", pretty, "indent the JSON output");

  std::int64_t i1 = 0, i2 = 0, i3 = 0;

  auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung continued fractions");
  hj->require_subcommand(1);
  auto* hj_expand_cmd = hj->add_subcommand("expand", "expand m/q");
  hj_expand_cmd->add_option("m", i1)->required();
  hj_expand_cmd->add_option("q", i2)->required();
  auto* hj_cpq_cmd = hj->add_subcommand("cpq", "string of the C_{p,q} configuration");
  hj_cpq_cmd->add_option("p", i1)->required();
  hj_cpq_cmd->add_option("q", i2)->required();

  auto* sing = app.add_subcommand("sing", "cyclic quotient singularities");
  sing->require_subcommand(1);
  auto* sing_classify = sing->add_subcommand("classify", "classify 1/r(a,b)");
  sing_classify->add_option("r", i1)->required();
  sing_classify->add_option("a", i2)->required();
  sing_classify->add_option("b", i3)->required();
  auto* sing_resolve = sing->add_subcommand("resolve", "minimal resolution of 1/r(1,q)");
  sing_resolve->add_option("r", i1)->required();
  sing_resolve->add_option("q", i2)->required();

  auto* plumb = app.add_subcommand("plumb", "plumbing graphs");
  plumb->require_subcommand(1);
  std::string plumb_file;
  auto* plumb_check = plumb->add_subcommand("check", "analyse a .plumb file");
  plumb_check->add_option("file", plumb_file)->required();

  auto* surface = app.add_subcommand("surface", "Hirzebruch surfaces and elliptic surfaces");
  surface->require_subcommand(1);
  std::string half_branch;
  auto* cover = surface->add_subcommand("double-cover", "double cover of Sigma_e branched in |2L|");
  cover->add_option("--e", i1, "Hirzebruch index")->required();
  cover->add_option("--L", half_branch, "L = a*C0 + b*f as a,b")->required();
  std::int64_t chi = 0, sigma = 0, b1 = 0;
  auto* en = surface->add_subcommand("en", "recognize E(n) numerics");
  en->add_option("--chi", chi)->required();
  en->add_option("--sigma", sigma)->required();
  en->add_option("--b1", b1);

  auto* blowdown = app.add_subcommand("blowdown", "rational blow-down of invariant records");
  std::vector<std::string> configs;
  blowdown->add_option("--chi", chi)->required();
  blowdown->add_option("--sigma", sigma)->required();
  blowdown->add_option("--b1", b1);
  blowdown->add_option("--config", configs, "p,q (repeatable)");

  auto* w4n_cmd = app.add_subcommand("w4n", "invariants of W_{4,n}");
  w4n_cmd->add_option("n", i1)->required();

  auto* quotient = app.add_subcommand("quotient", "Z4 quotients of curve products");
  quotient->require_subcommand(1);
  std::string demo_name;
  auto* demo = quotient->add_subcommand("demo", "paper-z4 | ck-cl <k> <l>");
  demo->add_option("name", demo_name)->required()->check(CLI::IsMember({"paper-z4", "ck-cl"}));
  demo->add_option("k", i1);
  demo->add_option("l", i2);

  auto* smooth = app.add_subcommand("smooth", "Q-Gorenstein smoothing family diagnostics");
  std::vector<std::string> t_values;
  smooth->add_option("--d", i1)->required();
  smooth->add_option("--n", i2)->required();
  smooth->add_option("--a", i3)->required();
  smooth->add_option("--t", t_values, "t_0 ... t_{d-1}, repeated or comma separated")->required();

  auto* verify = app.add_subcommand("verify-paper", "run every scenario and compare exactly");
  std::string fault_name = "none";
  bool serial = false;
  verify->add_option("--inject-fault", fault_name, "delta-k2-sign | hj-term");
  verify->add_flag("--serial", serial, "run scenarios one after another");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    // Help for the innermost subcommand that was reached.
    const CLI::App* deepest = &app;
    while (true) {
      auto subs = deepest->get_subcommands();
      if (subs.empty()) break;
      deepest = subs.front();
    }
    err << deepest->help();
    return 2;
  }

  auto emit = [&](const Json& j) { out << j.dump(pretty ? 2 : -1) << "\n"; };
  try {
    if (*hj_expand_cmd) {
      emit(hj_expand_report(i1, i2));
    } else if (*hj_cpq_cmd) {
      emit(hj_cpq_report(i1, i2));
    } else if (*sing_classify) {
      emit(sing_classify_report(i1, i2, i3));
    } else if (*sing_resolve) {
      emit(sing_resolve_report(i1, i2));
    } else if (*plumb_check) {
      emit(plumbing_report(parse_plumbing(read_file(plumb_file))));
    } else if (*cover) {
      const auto [a, b] = parse_pair(half_branch);
      emit(double_cover_report(i1, a, b));
    } else if (*en) {
      emit(en_report(FourManifoldInvariants(chi, sigma, b1)));
    } else if (*blowdown) {
      std::vector<std::pair<std::int64_t, std::int64_t>> plan;
      for (const auto& c : configs) plan.push_back(parse_pair(c));
      emit(blowdown_report(FourManifoldInvariants(chi, sigma, b1), BlowdownPlan(plan)));
    } else if (*w4n_cmd) {
      emit(w4n_report(i1));
    } else if (*demo) {
      if (demo_name == "paper-z4") {
        emit(to_json(paper_z4_pipeline()));
      } else {
        if (demo->count("k") == 0 || demo->count("l") == 0) {
          err << "error: ck-cl needs k and l\n" << demo->help();
          return 2;
        }
        Json j{{"k", i1}, {"l", i2}};
        const Json pipeline = to_json(ck_cl_pipeline(static_cast<int>(i1), static_cast<int>(i2)));
        for (const auto& [key, value] : pipeline.items()) j[key] = value;
        emit(j);
      }
    } else if (*smooth) {
      emit(smoothing_json(TFamilySpec(i1, i2, i3, parse_rationals(t_values))));
    } else if (*verify) {
      const auto fault = parse_fault(fault_name);
      if (!fault) {
        err << "error: unknown fault '" << fault_name << "'\n";
        return 2;
      }
      const auto results = run_scenarios(*fault, !serial);
      const Json report = verify_report(results, *fault);
      emit(report);
      for (const auto& r : results) {
        if (!r.pass) err << "FAIL " << r.name << (r.error ? ": " + *r.error : std::string()) << "\n";
      }
      return report["all_pass"].get<bool>() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace rbd
