#include "qlb/commands.hpp"

#include <fstream>
#include <ostream>

#include "qlb/checks.hpp"
#include "qlb/io.hpp"

namespace qlb {

namespace {

void print_report(const Report& rep, std::ostream& out) {
  for (const auto& c : rep.checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.details.empty()) out << " (" << c.details << ")";
    out << "\n";
  }
}

// validate + CYBE as a report; nullopt bialgebra on failure.
Report verify_report(const BialgebraInput& in) {
  Report rep;
  rep.subject = in.g.name;
  const ValidationReport lie_rep = validate(in.g);
  rep.add("Lie axioms (antisymmetry + Jacobi)", lie_rep.ok(), lie_rep.summary());
  if (!lie_rep.ok()) return rep;
  const Tensor3 cybe = cybe_tensor(in.g, in.r);
  if (!cybe.is_zero()) {
    const auto w = cybe.first_nonzero();
    rep.add("Yang-Baxter equation", false,
            "nonzero entry (" + std::to_string(w[0]) + "," +
                std::to_string(w[1]) + "," + std::to_string(w[2]) + ") = " +
                to_string(cybe(w[0], w[1], w[2])));
    return rep;
  }
  rep.add("Yang-Baxter equation", true);
  try {
    const QuasitriangularBialgebra B =
        QuasitriangularBialgebra::create(in.g, in.r);
    rep.add("symmetric part of r is ad-invariant", true);
    rep.add("classification", true, to_string(classify(B)));
  } catch (const ConstructionError& e) {
    rep.add("symmetric part of r is ad-invariant", false, e.what());
  }
  return rep;
}

}  // namespace

int cmd_verify(const std::string& path, std::ostream& out) {
  BialgebraInput in{LieAlgebra{}, Tensor2{}};
  try {
    in = read_bialgebra_file(path);
  } catch (const ParseError& e) {
    out << "[PARSE ERROR] " << e.what() << "\n";
    return kExitParseFailure;
  }
  const Report rep = verify_report(in);
  print_report(rep, out);
  return rep.all_pass() ? kExitPass : kExitMathFailure;
}

int cmd_classify(const std::string& path, std::ostream& out) {
  try {
    const BialgebraInput in = read_bialgebra_file(path);
    const Report rep = verify_report(in);
    if (!rep.all_pass()) {
      print_report(rep, out);
      return kExitMathFailure;
    }
    const QuasitriangularBialgebra B =
        QuasitriangularBialgebra::create(in.g, in.r);
    out << to_string(classify(B)) << "\n";
    return kExitPass;
  } catch (const ParseError& e) {
    out << "[PARSE ERROR] " << e.what() << "\n";
    return kExitParseFailure;
  }
}

int cmd_double(const std::string& path, const std::string& model,
               const std::string& out_path, std::ostream& out) {
  if (model != "direct" && model != "extension") {
    out << "[ERROR] unknown model '" << model << "' (direct|extension)\n";
    return kExitParseFailure;
  }
  BialgebraInput in{LieAlgebra{}, Tensor2{}};
  try {
    in = read_bialgebra_file(path);
  } catch (const ParseError& e) {
    out << "[PARSE ERROR] " << e.what() << "\n";
    return kExitParseFailure;
  }
  const Report verify = verify_report(in);
  if (!verify.all_pass()) {
    print_report(verify, out);
    return kExitMathFailure;
  }
  const QuasitriangularBialgebra B =
      QuasitriangularBialgebra::create(in.g, in.r);
  const Index n = B.g().dim();

  LieAlgebra algebra{};
  DoubleCharts charts;
  charts.model = model;
  if (model == "direct") {
    const DirectDouble D = build_direct_double(B);
    algebra = D.d;
    for (Index i = 0; i < n; ++i) charts.g.push_back(i);
    for (Index i = 0; i < B.f().dim(); ++i) {
      std::vector<std::string> row;
      for (Index l = 0; l < 2 * n; ++l)
        row.push_back(to_string(l < n ? B.f().rows(i, l) : Rational(0)));
      charts.f_rows.push_back(std::move(row));
    }
    for (Index i = 0; i < B.f_perp().dim(); ++i) {
      std::vector<std::string> row;
      for (Index l = 0; l < 2 * n; ++l)
        row.push_back(to_string(l < n ? Rational(0) : B.f_perp().rows(i, l - n)));
      charts.f_perp_rows.push_back(std::move(row));
    }
    for (Index i = 0; i < n; ++i) {
      std::vector<std::string> row;
      for (Index l = 0; l < 2 * n; ++l)
        row.push_back(to_string(l == n + i ? Rational(1) : Rational(0)));
      charts.gstar_image_rows.push_back(std::move(row));
    }
  } else {
    const DoubleExtension E = build_double_as_extension(B);
    algebra = E.ext.total;
    const Index k = B.f().dim();
    for (Index i = 0; i < n; ++i) charts.g.push_back(i);
    for (Index i = 0; i < k; ++i) charts.f.push_back(n + i);
    for (Index i = 0; i < B.f_perp().dim(); ++i) charts.f_perp.push_back(n + k + i);
    const SubspaceBasis image = gstar_image(E);
    for (Index i = 0; i < image.dim(); ++i) {
      std::vector<std::string> row;
      for (Index l = 0; l < image.rows.cols(); ++l)
        row.push_back(to_string(image.rows(i, l)));
      charts.gstar_image_rows.push_back(std::move(row));
    }
  }

  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    out << "[ERROR] cannot write '" << out_path << "'\n";
    return kExitParseFailure;
  }
  file << serialize_algebra(algebra, nullptr, &charts);
  out << "wrote " << model << " double of '" << B.g().name << "' (dim "
      << algebra.dim() << ") to " << out_path << "\n";
  return kExitPass;
}

int cmd_check(const std::string& path, std::ostream& out) {
  BialgebraInput in{LieAlgebra{}, Tensor2{}};
  try {
    in = read_bialgebra_file(path);
  } catch (const ParseError& e) {
    out << "[PARSE ERROR] " << e.what() << "\n";
    return kExitParseFailure;
  }
  Report rep;
  try {
    rep = full_check(in.g, in.r);
  } catch (const Error& e) {
    out << "[FAIL] internal check aborted: " << e.what() << "\n";
    return kExitMathFailure;
  }
  print_report(rep, out);
  if (const CheckResult* f = rep.first_failure()) {
    out << "FAILED: " << f->name << "\n";
    return kExitMathFailure;
  }
  out << "all " << rep.checks.size() << " checks passed\n";
  return kExitPass;
}

}  // namespace qlb
