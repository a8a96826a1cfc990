// Command-line front end: constructs groups missing a prescribed subgroup
// order, runs the spectrum oracle, and approximates CLT-degree targets.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "clt/builtins.hpp"
#include "clt/constructions.hpp"
#include "clt/density.hpp"
#include "clt/json.hpp"
#include "clt/numtheory.hpp"
#include "clt/permgroup.hpp"
#include "clt/spectrum.hpp"
#include "clt/util.hpp"

namespace {

using nlohmann::json;

struct CommonFlags {
  bool as_json = false;
  unsigned workers = 1;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_flag("--json", flags.as_json, "emit a JSON report on stdout");
  cmd->add_option("--workers", flags.workers, "oracle worker threads")->default_val(1);
}

void print_spectrum_text(const clt::SpectrumReport& r) {
  std::cout << "group order " << r.group_order << ", degree " << clt::rational_to_string(r.degree)
            << " (D = " << r.D << ", tau = " << r.tau << ")\n";
  std::cout << "realized orders:";
  for (auto v : r.realized_orders) std::cout << " " << v;
  std::cout << "\nmissing orders:";
  if (r.missing_orders.empty()) std::cout << " none (CLT group)";
  for (auto v : r.missing_orders) std::cout << " " << v;
  std::cout << "\nsubgroups: " << r.subgroup_count << " in " << r.conjugacy_class_count
            << " conjugacy classes\n";
}

void print_cert_text(const clt::ConstructionCert& cert) {
  std::cout << "d = " << cert.d.value << " = " << cert.d.to_string() << "\n";
  std::cout << "witness (" << to_string(cert.style) << "): " << cert.description << "\n";
  std::cout << "order = " << cert.group_order.as_bigint().str() << " = "
            << cert.group_order.to_string() << "\n";
  std::cout << "trace:";
  for (const auto& step : cert.trace) {
    if (step.kind == clt::TraceStep::Kind::case2)
      std::cout << " [strip " << step.stripped_prime << "^" << step.stripped_exponent << "]";
    else
      std::cout << " [core p1=" << step.p1 << " n1=" << step.n1 << " p2=" << step.p2
                << " n2=" << step.n2 << " a=" << step.a << " r=" << step.r << "]";
  }
  std::cout << "\nstatus: " << to_string(cert.verified);
  if (cert.verified == clt::CertStatus::oracle_verified)
    std::cout << " (oracle confirms no subgroup of order " << cert.d.value << ")";
  std::cout << "\n";
}

clt::PermGroup resolve_group(const std::string& builtin, const std::string& file) {
  if (!builtin.empty() && !file.empty())
    throw clt::domain_error("pass either --builtin or --file, not both");
  if (!builtin.empty()) return clt::builtin_group(builtin);
  if (!file.empty()) {
    const clt::GroupFile gf = clt::read_group_file(std::filesystem::path(file));
    return clt::PermGroup(gf.degree, gf.generators);
  }
  throw clt::domain_error("a group source is required: --builtin NAME or --file PATH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CLT-degree toolkit: subgroup-order spectra, groups with no subgroup of a "
               "prescribed order, and constructive density of CLT-degrees"};
  app.require_subcommand(1);

  // construct
  std::uint64_t construct_d = 0;
  bool full_agl = false, no_verify = false;
  CommonFlags construct_flags;
  CLI::App* construct = app.add_subcommand(
      "construct", "build a solvable group with no subgroup of the given composite order");
  construct->add_option("d", construct_d, "target order, composite and not a prime power")
      ->required();
  construct->add_flag("--full-agl", full_agl, "also report the full AGL(1,q)-based witness");
  construct->add_flag("--no-verify", no_verify, "skip the oracle check");
  add_common(construct, construct_flags);

  // spectrum / degree
  std::string spectrum_builtin, spectrum_file;
  CommonFlags spectrum_flags;
  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "subgroup-order spectrum and CLT-degree of a group");
  spectrum_cmd->add_option("--builtin", spectrum_builtin, "builtin group name");
  spectrum_cmd->add_option("--file", spectrum_file, "group file path");
  add_common(spectrum_cmd, spectrum_flags);

  std::string degree_builtin, degree_file;
  CommonFlags degree_flags;
  CLI::App* degree_cmd = app.add_subcommand("degree", "print only the CLT-degree");
  degree_cmd->add_option("--builtin", degree_builtin, "builtin group name");
  degree_cmd->add_option("--file", degree_file, "group file path");
  add_common(degree_cmd, degree_flags);

  // approximate
  std::string approx_target_text, approx_eps_text = "1/1000";
  CommonFlags approx_flags;
  CLI::App* approximate =
      app.add_subcommand("approximate", "approximate a target in (0,1] by a CLT-degree");
  approximate->add_option("target", approx_target_text, "target value, e.g. 0.9 or 9/10")
      ->required();
  approximate->add_option("--eps", approx_eps_text, "approximation width (default 1/1000)");
  add_common(approximate, approx_flags);

  // sn
  unsigned sn_n = 0;
  bool allow_slow = false;
  CommonFlags sn_flags;
  CLI::App* sn = app.add_subcommand("sn", "spectrum of the symmetric group S_n");
  sn->add_option("n", sn_n, "symmetric group degree (<= 6; 7 with --allow-slow)")->required();
  sn->add_flag("--allow-slow", allow_slow, "permit the long S_7 run");
  add_common(sn, sn_flags);

  // gpqn
  std::uint64_t gp = 0, gq = 0;
  unsigned gn = 0;
  CommonFlags gpqn_flags;
  CLI::App* gpqn_cmd =
      app.add_subcommand("gpqn", "spectrum of (C_p^2 x| C_q) x C_q^n, q odd, q | p+1");
  gpqn_cmd->add_option("p", gp, "prime p")->required();
  gpqn_cmd->add_option("q", gq, "odd prime q with q | p+1")->required();
  gpqn_cmd->add_option("n", gn, "number of extra C_q factors")->required();
  add_common(gpqn_cmd, gpqn_flags);

  // verify
  std::string cert_path;
  CommonFlags verify_flags;
  CLI::App* verify = app.add_subcommand("verify", "re-check a saved certificate JSON");
  verify->add_option("certificate", cert_path, "path to a construct --json report")->required();
  add_common(verify, verify_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) {
      clt::OracleOptions opts;
      opts.workers = construct_flags.workers;
      const auto minimal = clt::construct_witness(construct_d, opts, clt::WitnessStyle::minimal,
                                                   !no_verify);
      if (full_agl) {
        const auto full = clt::construct_witness(construct_d, opts, clt::WitnessStyle::full_agl,
                                                  !no_verify);
        if (construct_flags.as_json) {
          std::cout << json{{"minimal", to_json(minimal)}, {"full_agl", to_json(full)}}.dump(2)
                    << "\n";
        } else {
          print_cert_text(minimal);
          std::cout << "\n";
          print_cert_text(full);
        }
      } else {
        if (construct_flags.as_json)
          std::cout << to_json(minimal).dump(2) << "\n";
        else
          print_cert_text(minimal);
      }
    } else if (spectrum_cmd->parsed()) {
      clt::OracleOptions opts;
      opts.workers = spectrum_flags.workers;
      const auto report = clt::spectrum(resolve_group(spectrum_builtin, spectrum_file), opts);
      if (spectrum_flags.as_json)
        std::cout << to_json(report).dump(2) << "\n";
      else
        print_spectrum_text(report);
    } else if (degree_cmd->parsed()) {
      clt::OracleOptions opts;
      opts.workers = degree_flags.workers;
      const auto report = clt::spectrum(resolve_group(degree_builtin, degree_file), opts);
      std::cout << clt::rational_to_string(report.degree) << "\n";
    } else if (approximate->parsed()) {
      const clt::Rational t = clt::parse_rational(approx_target_text);
      const clt::Rational eps = clt::parse_rational(approx_eps_text);
      const auto result = clt::approximate_target(t, eps);
      clt::OracleOptions opts;
      opts.workers = approx_flags.workers;
      const auto witness = clt::witness_description(result, opts);
      if (approx_flags.as_json) {
        std::cout << to_json(result, witness).dump(2) << "\n";
      } else {
        std::cout << "target " << clt::rational_to_string(result.target) << ", eps "
                  << clt::rational_to_string(result.epsilon) << "\n";
        std::cout << "product " << clt::rational_to_string(result.product) << " over indices";
        for (auto n : result.index_set) std::cout << " " << n;
        if (result.index_set.empty()) std::cout << " (empty set)";
        std::cout << "\npairs (p, q, n):";
        for (const auto& pr : result.pairs)
          std::cout << " (" << pr.p << "," << pr.q << "," << pr.n << ")";
        std::cout << "\nwitness " << witness.description << " of order "
                  << (result.witness_order.value != 0
                          ? std::to_string(result.witness_order.value)
                          : result.witness_order.to_string())
                  << "\n";
        std::cout << "verification: "
                  << (witness.oracle_verified ? "oracle_verified" : "certificate_only") << "\n";
      }
    } else if (sn->parsed()) {
      clt::OracleOptions opts;
      opts.workers = sn_flags.workers;
      const auto report = clt::sn_report(sn_n, allow_slow, opts);
      if (sn_flags.as_json)
        std::cout << to_json(report).dump(2) << "\n";
      else
        print_spectrum_text(report);
    } else if (gpqn_cmd->parsed()) {
      clt::OracleOptions opts;
      opts.workers = gpqn_flags.workers;
      const auto report = clt::spectrum(clt::g_pqn(gp, gq, gn), opts);
      if (gpqn_flags.as_json)
        std::cout << to_json(report).dump(2) << "\n";
      else
        print_spectrum_text(report);
    } else if (verify->parsed()) {
      std::ifstream in(cert_path);
      if (!in) throw clt::domain_error("cannot open certificate file: " + cert_path);
      json doc = json::parse(in);
      // A --full-agl report holds two certificates; re-check each.
      std::vector<clt::ConstructionCert> certs;
      if (doc.contains("minimal")) {
        certs.push_back(clt::construction_cert_from_json(doc.at("minimal")));
        certs.push_back(clt::construction_cert_from_json(doc.at("full_agl")));
      } else {
        certs.push_back(clt::construction_cert_from_json(doc));
      }
      clt::OracleOptions opts;
      opts.workers = verify_flags.workers;
      json results = json::array();
      for (const auto& cert : certs) {
        try {
          clt::recheck_certificate(cert, opts);
        } catch (const clt::internal_error& e) {
          // a broken invariant in a user-supplied certificate is user error
          throw clt::domain_error(e.what());
        }
        if (verify_flags.as_json)
          results.push_back(json{{"d", cert.d.value},
                                 {"style", to_string(cert.style)},
                                 {"status", "ok"},
                                 {"verified", to_string(cert.verified)}});
        else
          std::cout << "certificate for d = " << cert.d.value << " (" << to_string(cert.style)
                    << "): OK, " << to_string(cert.verified) << "\n";
      }
      if (verify_flags.as_json) std::cout << results.dump(2) << "\n";
    }
  } catch (const clt::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const clt::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
