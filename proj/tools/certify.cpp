// certify: writes an R-infinity certificate for the pure braid group on a
// given number of strands.
//
//   certify --strands 6 --out cert.json
//   certify --strands 6 --check stembridge
//   certify --strands 9 --sample 200 --seed 7
//   certify --verify cert.json
//
// Exit status: 0 certified / out of scope / partial, 1 falsified, 2 usage.

#include <braidcert/braidcert.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

int emit(const braidcert::Certificate& cert, const std::string& format, const std::string& out) {
  const std::string body = format == "text" ? braidcert::to_text(cert) : braidcert::to_json(cert).dump(2) + "\n";
  if (out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "certify: cannot write " << out << "\n";
      return 2;
    }
    f << body;
    std::cerr << cert.verdict << "\n";
  }
  return cert.falsified() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify that automorphisms of the pure braid group have infinite Reidemeister number"};
  app.set_version_flag("--version", "certify 1.0");

  int strands = 0;
  std::string check = "all";
  int sample = -1;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  std::string verify;
  int levels = 5;

  auto* strands_opt = app.add_option("--strands,-s", strands, "Number of strands (3..14)")->check(CLI::Range(3, 14));
  app.add_option("--check", check, "Which checks to run")
      ->check(CLI::IsMember({"relations", "char", "irrep", "stembridge", "eigen", "all"}));
  app.add_option("--sample", sample,
                 "Random group elements to check (0 = all of S_s; default: all for s <= 7, else 500)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Seed for sampled checks");
  app.add_option("--levels", levels, "Number of even layers L for the P4 bound")->check(CLI::Range(2, 12));
  app.add_option("--out,-o", out, "Write the certificate to this file");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  auto* verify_opt = app.add_option("--verify", verify, "Re-run and re-validate a stored JSON certificate");
  verify_opt->excludes(strands_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (!verify.empty()) {
      std::ifstream f(verify);
      if (!f) {
        std::cerr << "certify: cannot read " << verify << "\n";
        return 2;
      }
      const auto stored = braidcert::Json::parse(f);
      return emit(braidcert::verify_certificate(stored), format, out);
    }
    if (!*strands_opt) {
      std::cerr << "certify: --strands is required\n" << app.help();
      return 2;
    }

    braidcert::CertifyOptions opt;
    opt.strands = strands;
    opt.checks = braidcert::parse_check(check);
    if (sample >= 0) opt.sample = sample;
    opt.seed = seed;
    opt.p4_levels = levels;
    return emit(braidcert::certify(opt), format, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "certify: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "certify: " << e.what() << "\n";
    return 1;
  }
}
