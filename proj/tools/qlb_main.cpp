#include <CLI11.hpp>

#include <iostream>

#include "qlb/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Drinfeld doubles of quasitriangular Lie bialgebras over Q"};
  app.require_subcommand(1);

  std::string verify_path;
  CLI::App* verify = app.add_subcommand(
      "verify", "validate the Lie axioms, the Yang-Baxter equation and classify");
  verify->add_option("file", verify_path, "bialgebra JSON file")->required();

  std::string classify_path;
  CLI::App* classify = app.add_subcommand(
      "classify", "print triangular / factorizable / general");
  classify->add_option("file", classify_path, "bialgebra JSON file")->required();

  std::string double_path, model = "extension", out_path;
  CLI::App* dbl = app.add_subcommand(
      "double", "write the structure constants of the double");
  dbl->add_option("file", double_path, "bialgebra JSON file")->required();
  dbl->add_option("--model", model, "direct | extension (default extension)");
  dbl->add_option("--out", out_path, "output JSON file")->required();

  std::string check_path;
  CLI::App* check = app.add_subcommand(
      "check", "run every invariant of every module against the input");
  check->add_option("file", check_path, "bialgebra JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) return qlb::cmd_verify(verify_path, std::cout);
  if (classify->parsed()) return qlb::cmd_classify(classify_path, std::cout);
  if (dbl->parsed())
    return qlb::cmd_double(double_path, model, out_path, std::cout);
  if (check->parsed()) return qlb::cmd_check(check_path, std::cout);
  return qlb::kExitParseFailure;
}
