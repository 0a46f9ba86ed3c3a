// tridiag: command-line front end for the A_n toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 argument error,
// 3 containment condition not met, 4 numerical non-convergence.

#include "tridiag.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr const char* kVersion = "tridiag 0.1.0";

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kBadArgs = 2,
  kNotContained = 3,
  kNonConvergence = 4,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to `path`, or to stdout when path is "-".
void write_output(const std::string& path, const std::function<void(std::ostream&)>& emit) {
  if (path == "-") {
    emit(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot open " + path + " for writing");
  emit(out);
}

mpfr_prec_t resolve_precision(const std::optional<long>& flag) {
  long bits = tridiag::kDefaultPrecisionBits;
  if (flag) {
    bits = *flag;
  } else if (const char* env = std::getenv("TRIDIAG_PRECISION_BITS"); env && *env) {
    char* end = nullptr;
    bits = std::strtol(env, &end, 10);
    if (*end != '\0') throw UsageError(std::string("TRIDIAG_PRECISION_BITS is not an integer: ") + env);
  }
  if (bits < 53) throw UsageError("precision must be >= 53 bits");
  return static_cast<mpfr_prec_t>(bits);
}

void add_precision_option(CLI::App* cmd, std::optional<long>& target) {
  cmd->add_option("--precision", target,
                  "Working precision in bits (default 256, or $TRIDIAG_PRECISION_BITS)");
}

void print_fit(std::ostream& os, const tridiag::EllipseFit& fit, double tol) {
  os << std::setprecision(17);
  os << "conic: A=" << fit.conic[0] << " B=" << fit.conic[1] << " C=" << fit.conic[2] << " D=" << fit.conic[3]
     << " E=" << fit.conic[4] << " F=" << fit.conic[5] << '\n';
  os << "discriminant: " << fit.discriminant << '\n';
  os << "rms_residual: " << fit.rms_residual << '\n';
  os << "ellipse_tol: " << tol << '\n';
  os << "classification: " << (fit.is_ellipse(tol) ? "ellipse" : "not ellipse") << " (conic type "
     << tridiag::to_string(fit.kind()) << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tridiag;

  CLI::App app{"Exact and numeric toolkit for the 0/1 tridiagonal family A_n"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::function<int()> action;
  const CLI::Range kAtLeastOne(std::uint64_t{1}, UINT64_MAX);

  // charpoly
  auto* c_charpoly = app.add_subcommand("charpoly", "Print f_n(x) = det(A_n - x I)");
  c_charpoly->set_version_flag("--version", kVersion);
  std::uint64_t cp_n = 0;
  CharPolyMethod cp_method = CharPolyMethod::Recurrence;
  bool cp_unicode = false;
  const std::map<std::string, CharPolyMethod> methods{{"recurrence", CharPolyMethod::Recurrence},
                                                      {"closed", CharPolyMethod::ClosedForm},
                                                      {"oracle", CharPolyMethod::DetOracle}};
  c_charpoly->add_option("n", cp_n, "Matrix size (>= 1)")->required()->check(kAtLeastOne);
  c_charpoly->add_option("--method", cp_method, "recurrence | closed | oracle (oracle: n <= 32)")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  c_charpoly->add_flag("--unicode", cp_unicode, "Use λ instead of x");
  c_charpoly->callback([&] {
    action = [&] {
      if (cp_method == CharPolyMethod::DetOracle && cp_n > 32) {
        throw UsageError("oracle method is limited to n <= 32");
      }
      std::cout << render_polynomial(charpoly(cp_n, cp_method).poly, cp_unicode) << '\n';
      return kOk;
    };
  });

  // verify
  auto* c_verify = app.add_subcommand("verify", "Cross-check recurrence, closed form, oracle, parity, Chebyshev");
  c_verify->set_version_flag("--version", kVersion);
  VerifyOptions vopt;
  std::string fault;
  c_verify->add_option("--max-n", vopt.max_n, "Largest n for exact comparisons")
      ->capture_default_str()
      ->check(kAtLeastOne);
  c_verify->add_option("--oracle-max", vopt.oracle_max, "Largest n for the determinant oracle (<= 32)")
      ->capture_default_str()
      ->check(CLI::Range(0, 32));
  c_verify->add_option("--inject-fault", fault, "Testing only: closed-sign")
      ->check(CLI::IsMember({"closed-sign"}))
      ->group("");
  c_verify->callback([&] {
    action = [&] {
      ClosedFormBuilder closed = default_closed_form;
      if (fault == "closed-sign") {
        closed = [](std::uint64_t n) {
          IntPoly f = charpoly_closed_form(n).poly;
          if (n < 2) return f;
          return f.with_coeff(n - 2, -f.coeff(n - 2));
        };
      }
      const VerifyReport rep = run_verification(vopt, closed);
      std::cout << "recurrence == closed form: " << rep.recurrence_checked << " checked\n"
                << "parity: " << rep.parity_checked << " checked\n"
                << "chebyshev chain: " << rep.chebyshev_checked << " checked\n"
                << "determinant oracle: " << rep.oracle_checked << " checked\n";
      if (!rep.ok()) {
        const auto& m = *rep.failure;
        std::cout << "FAIL " << m.check << ": n=" << m.n << " coefficient of x^" << m.index << " expected "
                  << m.expected << " got " << m.actual << '\n';
        return kVerifyFailed;
      }
      std::cout << "OK\n";
      return kOk;
    };
  });

  // eigs
  auto* c_eigs = app.add_subcommand("eigs", "Closed-form eigenvalues of A_n, descending");
  c_eigs->set_version_flag("--version", kVersion);
  std::uint64_t e_n = 0;
  int e_digits = 5;
  std::string e_csv;
  c_eigs->add_option("n", e_n, "Matrix size (>= 1)")->required()->check(kAtLeastOne);
  c_eigs->add_option("--digits", e_digits, "Decimal places")->capture_default_str()->check(CLI::Range(1, 17));
  c_eigs->add_option("--csv", e_csv, "Write s,angle_num,angle_den,value rows to PATH ('-' = stdout)");
  c_eigs->callback([&] {
    action = [&] {
      const auto set = eigenvalues_closed_form(e_n);
      if (!e_csv.empty()) {
        write_output(e_csv, [&](std::ostream& os) { write_eigs_csv(os, set); });
        if (e_csv == "-") return kOk;
      }
      std::cout << std::fixed << std::setprecision(e_digits);
      for (double v : set.values) std::cout << v << '\n';
      return kOk;
    };
  });

  // contain
  auto* c_contain = app.add_subcommand("contain", "Certify that every eigenvalue of A_m is one of A_n");
  c_contain->set_version_flag("--version", kVersion);
  std::uint64_t ct_m = 0, ct_n = 0;
  c_contain->add_option("m", ct_m, "Smaller size")->required()->check(kAtLeastOne);
  c_contain->add_option("n", ct_n, "Larger size")->required()->check(kAtLeastOne);
  c_contain->callback([&] {
    action = [&] {
      try {
        const auto cert = containment_certificate(ct_m, ct_n);
        std::cout << "k=" << cert.k << '\n' << "map";
        for (std::size_t r = 0; r < cert.index_map.size(); ++r) {
          std::cout << ' ' << r + 1 << "->" << cert.index_map[r];
        }
        std::cout << '\n';
        return kOk;
      } catch (const NotSufficient& e) {
        std::cout << "condition not met: (n-m) mod (m+1) = " << e.remainder();
        if (ct_m >= ct_n) std::cout << " (and m < n is required)";
        std::cout << '\n';
        return kNotContained;
      }
    };
  });

  // fib-roots
  auto* c_fib = app.add_subcommand("fib-roots", "Roots of f_n(x) = F_{n+1}");
  c_fib->set_version_flag("--version", kVersion);
  std::uint64_t fr_n = 0;
  std::optional<long> fr_prec;
  std::string fr_csv, fr_svg;
  bool fr_ellipse = false, fr_perturbed = false;
  double fr_tol = kDefaultEllipseTol;
  std::size_t fr_maxit = RootFinderOptions{}.max_iterations;
  c_fib->add_option("n", fr_n, "Degree (>= 1)")->required()->check(kAtLeastOne);
  add_precision_option(c_fib, fr_prec);
  c_fib->add_option("--csv", fr_csv, "Write re,im,residual rows to PATH ('-' = stdout)");
  c_fib->add_option("--svg", fr_svg, "Write a scatter plot to PATH");
  c_fib->add_flag("--ellipse", fr_ellipse, "Fit a conic and report the residual");
  c_fib->add_option("--ellipse-tol", fr_tol, "Sampson RMS tolerance for 'ellipse'")->capture_default_str();
  c_fib->add_flag("--perturbed", fr_perturbed, "Use f_29 with the x^25 coefficient -350 (n must be 29)");
  c_fib->add_option("--max-iterations", fr_maxit, "Root iteration cap")->capture_default_str();
  c_fib->callback([&] {
    action = [&] {
      const mpfr_prec_t bits = resolve_precision(fr_prec);
      if (fr_perturbed && fr_n != 29) throw UsageError("--perturbed is only defined for n = 29");
      const IntPoly p = fr_perturbed ? perturbed_f29() : fib_shift_poly(fr_n);
      const RootSet rs = find_roots(p, bits, {fr_maxit});
      const bool csv_to_stdout = fr_csv == "-";
      if (!fr_csv.empty()) write_output(fr_csv, [&](std::ostream& os) { write_roots_csv(os, rs); });
      if (!fr_svg.empty()) {
        const auto pts = to_points(rs);
        write_output(fr_svg, [&](std::ostream& os) {
          write_scatter_svg(os, pts, "roots of f_" + std::to_string(fr_n) + (fr_perturbed ? " (perturbed)" : "") +
                                         " = F_" + std::to_string(fr_n + 1));
        });
      }
      std::ostream& info = csv_to_stdout ? std::cerr : std::cout;
      if (fr_csv.empty()) {
        info << "n=" << rs.n << " precision=" << bits << " iterations=" << rs.iterations << '\n';
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
          const auto& z = rs.roots[i];
          info << std::setw(28) << z.re.to_fixed(20) << ' ' << std::setw(28) << z.im.to_fixed(20)
               << (is_real_root(z, bits) ? "  real" : "") << '\n';
        }
      }
      if (fr_ellipse) print_fit(info, ellipse_fit(rs), fr_tol);
      return kOk;
    };
  });

  // scan
  auto* c_scan = app.add_subcommand("scan", "Root-structure scan of f_n(x) = F_{n+1} over a range of n");
  c_scan->set_version_flag("--version", kVersion);
  std::uint64_t sc_from = 0, sc_to = 0;
  std::optional<long> sc_prec;
  std::string sc_csv;
  c_scan->add_option("--from", sc_from, "First n")->required()->check(kAtLeastOne);
  c_scan->add_option("--to", sc_to, "Last n")->required()->check(kAtLeastOne);
  add_precision_option(c_scan, sc_prec);
  c_scan->add_option("--csv", sc_csv, "Write per-n rows to PATH ('-' = stdout)");
  c_scan->callback([&] {
    action = [&] {
      const mpfr_prec_t bits = resolve_precision(sc_prec);
      if (sc_from > sc_to) throw UsageError("--from must be <= --to");
      ScanReport rep;
      for (std::uint64_t n = sc_from; n <= sc_to; ++n) {
        try {
          append_scan_row(rep, scan_one(n, bits));
        } catch (const NonConvergence&) {
          std::cerr << "non-convergence at n=" << n << '\n';
          throw;
        }
      }
      if (!sc_csv.empty()) write_output(sc_csv, [&](std::ostream& os) { write_scan_csv(os, rep); });
      if (sc_csv != "-") {
        std::cout << std::setw(5) << "n" << std::setw(6) << "real" << std::setw(24) << "min_real_root"
                  << std::setw(24) << "max_abs_imag" << "  flags\n";
        for (const auto& r : rep.rows) {
          std::cout << std::setw(5) << r.n << std::setw(6) << r.real_root_count << std::setw(24)
                    << (r.min_real_root ? r.min_real_root->to_fixed(15) : "-") << std::setw(24)
                    << r.max_abs_imag.to_fixed(15) << "  ";
          for (std::size_t i = 0; i < r.violations.size(); ++i) std::cout << (i ? "," : "") << r.violations[i];
          std::cout << '\n';
        }
      }
      (sc_csv == "-" ? std::cerr : std::cout)
          << "scanned " << rep.rows.size() << " values of n, violations: " << rep.violation_count() << '\n';
      return kOk;
    };
  });

  // extrema
  auto* c_ext = app.add_subcommand("extrema", "Real critical points of f_n and the values there");
  c_ext->set_version_flag("--version", kVersion);
  std::uint64_t ex_n = 0;
  std::optional<long> ex_prec;
  std::string ex_csv, ex_svg;
  c_ext->add_option("n", ex_n, "Degree (>= 2)")->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  add_precision_option(c_ext, ex_prec);
  c_ext->add_option("--csv", ex_csv, "Write lambda,f_value rows to PATH ('-' = stdout)");
  c_ext->add_option("--svg", ex_svg, "Write a scatter plot to PATH");
  c_ext->callback([&] {
    action = [&] {
      const mpfr_prec_t bits = resolve_precision(ex_prec);
      const auto pts = local_extrema(ex_n, bits);
      if (!ex_svg.empty()) {
        std::vector<Point2> xy;
        for (const auto& p : pts) xy.push_back({p.lambda.to_double(), p.value.to_double()});
        write_output(ex_svg, [&](std::ostream& os) {
          write_scatter_svg(os, xy, "critical points of f_" + std::to_string(ex_n));
        });
      }
      if (ex_csv.empty() || ex_csv == "-") {
        write_extrema_csv(std::cout, pts);
      } else {
        write_output(ex_csv, [&](std::ostream& os) { write_extrema_csv(os, pts); });
        std::cout << pts.size() << " critical points written to " << ex_csv << '\n';
      }
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArgs;
  }

  try {
    return action ? action() : kBadArgs;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNonConvergence;
  }
}
