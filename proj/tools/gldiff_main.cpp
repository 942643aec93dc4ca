// Command-line front end for the gldiff kernel.
//
// Exit codes: 0 success, 1 a verify run reported a failing check,
// 2 usage, parse, dimension or domain error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gldiff/algebra.hpp"
#include "gldiff/errors.hpp"
#include "gldiff/expression.hpp"
#include "gldiff/module.hpp"
#include "gldiff/suite.hpp"

namespace {

using namespace gldiff;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Common {
  int rank = 1;
  std::string format = "text";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--n", c.rank, "Matrix rank N")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

bool json_out(const Common& c) { return c.format == "json"; }

void emit(const Common& c, const AlgebraElement& a) {
  if (json_out(c))
    std::cout << to_json(a).dump() << "\n";
  else
    std::cout << print_element(a) << "\n";
}

void emit(const Common& c, const FallingElement& f) {
  if (json_out(c))
    std::cout << to_json(f).dump() << "\n";
  else
    std::cout << print_falling(f) << "\n";
}

void emit(const Common& c, const ModuleVector& v) {
  if (json_out(c))
    std::cout << to_json(v).dump() << "\n";
  else
    std::cout << print_vector(v) << "\n";
}

Poly parse_lambda(const std::string& text) {
  if (text == "formal") return Poly::indeterminate();
  if (text == "-formal") return -Poly::indeterminate();
  return parse_poly(text);
}

Family parse_family(const std::string& text) {
  return text == "V" ? Family::V : Family::Vbar;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for matrix differential operators on the "
               "circle, their central extension and intermediate-series "
               "modules"};
  app.require_subcommand(1);

  Common common;
  std::string x_text, y_text;
  std::function<int()> run;

  auto two_args = [&](CLI::App* cmd) {
    add_common(cmd, common);
    cmd->add_option("x", x_text, "First element")->required();
    cmd->add_option("y", y_text, "Second element")->required();
  };

  // bracket
  bool plain = false;
  auto* bracket = app.add_subcommand("bracket", "Bracket of two elements");
  two_args(bracket);
  bracket->add_flag("--plain", plain, "Omit the central term");
  bracket->callback([&] {
    run = [&] {
      auto x = parse_element(x_text, common.rank);
      auto y = parse_element(y_text, common.rank);
      emit(common, plain ? plain_bracket(x, y) : central_bracket(x, y));
      return kExitOk;
    };
  });

  auto* product = app.add_subcommand("product", "Associative product");
  two_args(product);
  product->callback([&] {
    run = [&] {
      emit(common, canonical_product(parse_element(x_text, common.rank),
                                     parse_element(y_text, common.rank)));
      return kExitOk;
    };
  });

  auto* cocycle = app.add_subcommand("cocycle", "Value of the 2-cocycle");
  two_args(cocycle);
  cocycle->callback([&] {
    run = [&] {
      Rational v = cocycle_psi(parse_element(x_text, common.rank),
                               parse_element(y_text, common.rank));
      if (json_out(common))
        std::cout << nlohmann::json{{"value", v.str()}}.dump() << "\n";
      else
        std::cout << v.str() << "\n";
      return kExitOk;
    };
  });

  auto* sig = app.add_subcommand("sigma", "Twist automorphism");
  add_common(sig, common);
  sig->add_option("x", x_text, "Element")->required();
  sig->callback([&] {
    run = [&] {
      emit(common, sigma(parse_element(x_text, common.rank)));
      return kExitOk;
    };
  });

  auto* deg = app.add_subcommand("degree", "Principal-gradation components");
  add_common(deg, common);
  deg->add_option("x", x_text, "Element")->required();
  deg->callback([&] {
    run = [&] {
      auto parts = homogeneous_components(parse_element(x_text, common.rank));
      if (json_out(common)) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [d, e] : parts)
          arr.push_back({{"degree", d}, {"element", to_json(e)}});
        std::cout << nlohmann::json{{"components", arr}}.dump() << "\n";
      } else if (parts.size() == 1) {
        std::cout << parts.begin()->first << "\n";
      } else {
        for (const auto& [d, e] : parts)
          std::cout << d << ": " << print_element(e) << "\n";
      }
      return kExitOk;
    };
  });

  std::string family = "V";
  int jordan = 1;
  std::string lambda = "formal";
  auto* actc = app.add_subcommand("act", "Act on a module vector");
  two_args(actc);
  actc->add_option("--family", family, "Module family")
      ->check(CLI::IsMember({"V", "Vbar"}))
      ->capture_default_str();
  actc->add_option("--m", jordan, "Jordan block size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  actc->add_option("--lambda", lambda,
                   "Eigenvalue: 'formal', '-formal', a rational or a poly in a")
      ->capture_default_str();
  actc->callback([&] {
    run = [&] {
      ModuleParams params{parse_family(family), common.rank, jordan,
                          parse_lambda(lambda)};
      params.validate();
      emit(common, act(parse_element(x_text, common.rank),
                       parse_vector(y_text, params)));
      return kExitOk;
    };
  });

  auto* pair = app.add_subcommand(
      "pair", "Pairing of w in Vbar(alpha) with v in V(-alpha)");
  two_args(pair);
  pair->add_option("--lambda", lambda, "alpha")->capture_default_str();
  pair->callback([&] {
    run = [&] {
      Poly alpha = parse_lambda(lambda);
      ModuleParams bar{Family::Vbar, common.rank, 1, alpha};
      ModuleParams plain_params{Family::V, common.rank, 1, -alpha};
      bar.validate();
      Poly v = pairing(parse_vector(x_text, bar),
                       parse_vector(y_text, plain_params));
      if (json_out(common))
        std::cout << nlohmann::json{{"value", to_json(v)}}.dump() << "\n";
      else
        std::cout << v.str() << "\n";
      return kExitOk;
    };
  });

  std::string target = "falling";
  auto* convert = app.add_subcommand("convert", "Change of D basis");
  add_common(convert, common);
  convert->add_option("x", x_text, "Element")->required();
  convert->add_option("--to", target, "Target basis")
      ->check(CLI::IsMember({"falling", "power"}))
      ->capture_default_str();
  convert->callback([&] {
    run = [&] {
      auto x = parse_element(x_text, common.rank);
      if (target == "falling")
        emit(common, to_falling(x));
      else
        emit(common, x);
      return kExitOk;
    };
  });

  SuiteConfig config;
  std::vector<std::string> checks{"all"};
  bool timing = false;
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  verify->add_option("--n", config.ranks, "Ranks, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_option("--i-bound", config.i_bound)->capture_default_str();
  verify->add_option("--j-bound", config.j_bound)->capture_default_str();
  verify->add_option("--m", config.m_values, "Jordan sizes, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--samples", config.samples)->capture_default_str();
  verify->add_option("--seed", config.seed)->capture_default_str();
  verify
      ->add_option("--checks", checks,
                   "Comma-separated check names, 'all' or 'none'")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_flag("--timing", timing, "Include elapsed times");
  verify->add_flag("--serial", serial, "Use the single-threaded runner");
  verify->callback([&] {
    run = [&] {
      if (checks.size() == 1 && checks[0] == "none")
        config.checks = std::vector<std::string>{};
      else if (!(checks.size() == 1 && checks[0] == "all"))
        config.checks = checks;
      Report report = serial ? run_suite_serial(config) : run_suite(config);
      if (json_out(common))
        std::cout << to_json(report, config, timing).dump(2) << "\n";
      else
        std::cout << to_text(report, timing);
      return report.all_passed() ? kExitOk : kExitCheckFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "parse error " << e.what() << "\n";
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  }
  return kExitUsage;
}
