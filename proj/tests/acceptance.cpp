// Acceptance suite: one self-contained check per criterion, one pass/fail
// line each, non-zero exit if any fails. Every tolerance is pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "symsector/symsector.hpp"

using namespace symsector;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& name, double time_limit_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= time_limit_seconds) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += "time limit exceeded";
    }
    std::printf("[%s] criterion %2d: %s (%.2f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL",
                id, name.c_str(), elapsed, time_limit_seconds, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

DensityMatrix random_separable(int n, int d, SplitMix64& rng, int max_terms = 4) {
    MixtureSpec spec;
    const int terms = 1 + static_cast<int>(rng.next_u64() % static_cast<unsigned>(max_terms));
    double total = 0.0;
    for (int t = 0; t < terms; ++t) {
        spec.weights.push_back(rng.uniform_open());
        total += spec.weights.back();
        spec.terms.push_back(random_product_state(n, d, rng));
    }
    for (double& w : spec.weights) w /= total;
    return mixture_density(spec);
}

const int kPi8Times6[8][8] = {
    {6, 0, 0, 0, 0, 0, 0, 0}, {0, 2, 2, 0, 2, 0, 0, 0}, {0, 2, 2, 0, 2, 0, 0, 0},
    {0, 0, 0, 2, 0, 2, 2, 0}, {0, 2, 2, 0, 2, 0, 0, 0}, {0, 0, 0, 2, 0, 2, 2, 0},
    {0, 0, 0, 2, 0, 2, 2, 0}, {0, 0, 0, 0, 0, 0, 0, 6}};

} // namespace

int main() {
    criterion(1, "projector cross-construction, d <= 3, n <= 4", 5.0, [](std::string& detail) {
        for (int d = 2; d <= 3; ++d)
            for (int n = 2; n <= 4; ++n) {
                const Projector a = projector_dicke(d, n);
                const Projector b = projector_permutation(d, n);
                const double cross = max_abs_diff(a.matrix, b.matrix);
                const double idem = max_abs_diff(a.matrix * a.matrix, a.matrix);
                const double trace_defect = std::abs(
                    a.matrix.trace().real() -
                    static_cast<double>(binomial_checked(n + d - 1, d - 1)));
                if (cross > 1e-12 || idem > 1e-10 || trace_defect > 1e-10) {
                    std::ostringstream os;
                    os << "d=" << d << " n=" << n << " cross=" << cross << " idem=" << idem
                       << " trace=" << trace_defect;
                    detail = os.str();
                    return false;
                }
            }
        return true;
    });

    criterion(2, "8x8 three-qubit projector reproduced entry-for-entry", 1.0,
              [](std::string& detail) {
                  const Projector pi = projector_dicke(2, 3);
                  for (int i = 0; i < 8; ++i)
                      for (int j = 0; j < 8; ++j) {
                          const double expected = static_cast<double>(kPi8Times6[i][j]) / 6.0;
                          if (pi.matrix(i, j).real() != expected ||
                              pi.matrix(i, j).imag() != 0.0) {
                              detail = "entry (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") differs";
                              return false;
                          }
                      }
                  return true;
              });

    criterion(3, "bound table: 1/2, 1/4, 1/6 at default optimizer settings", 60.0,
              [](std::string& detail) {
                  const std::vector<std::tuple<int, int, double>> cases{
                      {2, 2, 0.5}, {2, 3, 0.5}, {2, 4, 0.5}, {3, 2, 0.25}, {3, 3, 1.0 / 6.0}};
                  OptimizerConfig config; // 41-point grid, Nelder-Mead, 8 restarts
                  for (const auto& [n, d, expected] : cases) {
                      const BoundResult r = minimize(n, d, config);
                      if (std::abs(r.minimum - expected) > 1e-8 ||
                          std::abs(r.grid_minimum - expected) > 5e-3) {
                          std::ostringstream os;
                          os << "n=" << n << " d=" << d << " refined=" << r.minimum
                             << " grid=" << r.grid_minimum << " expected=" << expected;
                          detail = os.str();
                          return false;
                      }
                  }
                  return true;
              });

    criterion(4, "reduced four-qubit minimum ~= 1.3572/24", 120.0, [](std::string& detail) {
        const double reference = 1.3572 / 24.0;
        OptimizerConfig config; // default 41-point grid over the unit box
        const BoundResult r = minimize_n4d2(config, false);
        std::ostringstream os;
        os << "minimum=" << r.minimum << " reference=" << reference;
        if (r.minimum < reference - 5e-4) {
            detail = os.str() + " -- below the reference value, flagged";
            return false;
        }
        if (std::abs(r.minimum - reference) > 5e-4) {
            detail = os.str();
            return false;
        }
        return true;
    });

    criterion(5, "constrained sub-case minimum 7/27 at x=y=1/3", 5.0, [](std::string& detail) {
        const SubcaseResult r = constrained_subcase_check();
        if (std::abs(r.minimum - 7.0 / 27.0) > 1e-9 || std::abs(r.x - 1.0 / 3.0) > 1e-4 ||
            std::abs(r.y - 1.0 / 3.0) > 1e-4) {
            std::ostringstream os;
            os << "minimum=" << r.minimum << " at (" << r.x << "," << r.y << ")";
            detail = os.str();
            return false;
        }
        return true;
    });

    criterion(6, "10,000 random product states respect the bounds", 30.0,
              [](std::string& detail) {
                  const std::vector<std::pair<int, int>> dims{{2, 2}, {3, 2}, {3, 3}, {4, 2}};
                  SplitMix64 rng(0x5EC70Full);
                  for (const auto& [n, d] : dims) {
                      const SymmetricBasis basis(d, n);
                      const std::optional<double> bound = known_bound(n, d);
                      for (int trial = 0; trial < 2500; ++trial) {
                          const FMatrix f = random_product_state(n, d, rng);
                          const double v = basis.norm_squared(f);
                          if (v <= 1e-12 || (bound && v < *bound - 1e-9)) {
                              std::ostringstream os;
                              os << "n=" << n << " d=" << d << " trial=" << trial
                                 << " value=" << v;
                              detail = os.str();
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(7, "10,000 random matrices violate the orbit-sum conditions", 30.0,
              [](std::string& detail) {
                  const std::vector<std::pair<int, int>> dims{{2, 2}, {3, 2}, {3, 3}, {4, 3}};
                  for (const auto& [n, d] : dims) {
                      const LemmaFuzzReport r =
                          lemma_fuzz(n, d, 2500, 0xFA57ull + static_cast<unsigned>(n * 8 + d));
                      if (r.lemma_violations != 0 || r.min_max_abs_sum <= 1e-8) {
                          std::ostringstream os;
                          os << "n=" << n << " d=" << d
                             << " violations=" << r.lemma_violations
                             << " min_max_abs_sum=" << r.min_max_abs_sum;
                          detail = os.str();
                          return false;
                      }
                  }
                  // injected zero rows satisfy every condition exactly
                  SplitMix64 rng(0xDEAD5EEDull);
                  for (int trial = 0; trial < 100; ++trial) {
                      FMatrix f(4, 3);
                      for (int m = 0; m < 4; ++m)
                          for (int j = 0; j < 3; ++j) f(m, j) = rng.gaussian_complex();
                      const int dead = static_cast<int>(rng.next_u64() % 4);
                      for (int j = 0; j < 3; ++j) f(dead, j) = 0.0;
                      const PropertyAReport rep = property_a_check(f, 0.0);
                      if (!rep.holds || rep.max_abs_sum != 0.0) {
                          detail = "zero-row matrix failed exact check";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(8, "three overlap formulas agree on 200 random product states", 30.0,
              [](std::string& detail) {
                  SplitMix64 rng(0x0B57AC1Eull);
                  int done = 0;
                  for (int n = 2; n <= 5 && done < 200; ++n)
                      for (int d = 2; d <= 3 && done < 200; ++d) {
                          const Projector pi = projector_dicke(d, n);
                          const SymmetricBasis basis(d, n);
                          for (int trial = 0; trial < 25 && done < 200; ++trial, ++done) {
                              const FMatrix f = random_product_state(n, d, rng);
                              const double a = basis.norm_squared(f);
                              const double b = symmetric_norm_squared_cycles(f);
                              const PureState psi = product_state(f);
                              const double c =
                                  inner(psi.amplitudes, pi.matrix * psi.amplitudes).real();
                              const double dev = std::max(
                                  {std::abs(a - b), std::abs(a - c), std::abs(b - c)});
                              if (dev > 1e-10) {
                                  std::ostringstream os;
                                  os << "n=" << n << " d=" << d << " deviation=" << dev;
                                  detail = os.str();
                                  return false;
                              }
                          }
                      }
                  return done == 200;
              });

    criterion(9, "Werner case study: boundary 0.2, witness root 0.25, PPT-yet-detected",
              10.0, [](std::string& detail) {
                  const WernerThresholds t = werner_thresholds();
                  if (std::abs(t.ppt_boundary - 0.2) > 1e-6 ||
                      std::abs(t.witness_threshold - 0.25) > 1e-12) {
                      std::ostringstream os;
                      os << "ppt_boundary=" << t.ppt_boundary
                         << " witness_threshold=" << t.witness_threshold;
                      detail = os.str();
                      return false;
                  }
                  const DensityMatrix rho = werner_state(0.22, 2, 3);
                  const PptReport report = ppt_sweep(rho);
                  const double wv = witness_value(make_witness(2, 3), rho);
                  if (report.subsets_checked != 3 || !report.is_ppt || !(wv < 0.0)) {
                      std::ostringstream os;
                      os << "subsets=" << report.subsets_checked
                         << " is_ppt=" << report.is_ppt << " witness=" << wv;
                      detail = os.str();
                      return false;
                  }
                  return true;
              });

    criterion(10, "partial-transpose algebra on 100 random densities", 10.0,
              [](std::string& detail) {
                  SplitMix64 rng(0x7A6Bull);
                  for (int trial = 0; trial < 100; ++trial) {
                      const int n = 2 + static_cast<int>(rng.next_u64() % 3); // 2..4
                      const DensityMatrix rho = random_separable(n, 2, rng);
                      const SubsetMask full = (1u << n) - 1u;
                      for (SubsetMask mask = 0; mask <= full; ++mask) {
                          const CMatrix pt = partial_transpose(rho, mask);
                          if (max_abs_diff(partial_transpose(pt, mask, 2, n), rho.matrix) >
                              1e-14) {
                              detail = "involution failed";
                              return false;
                          }
                          if (std::abs(pt.trace() - rho.matrix.trace()) > 1e-14) {
                              detail = "trace not preserved";
                              return false;
                          }
                          if (max_abs_diff(pt.transpose(),
                                           partial_transpose(rho, full & ~mask)) > 1e-14) {
                              detail = "transpose-complement identity failed";
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(11, "witness soundness on 500 separable mixtures per size", 60.0,
              [](std::string& detail) {
                  const std::vector<std::pair<int, int>> dims{{2, 2}, {2, 3}, {3, 2}, {3, 3}};
                  SplitMix64 rng(0x5E9A4AB1Eull);
                  for (const auto& [n, d] : dims) {
                      const Witness w = make_witness(d, n);
                      for (int trial = 0; trial < 500; ++trial) {
                          const DensityMatrix rho = random_separable(n, d, rng);
                          const double value = witness_value(w, rho);
                          if (value < -1e-9) {
                              std::ostringstream os;
                              os << "n=" << n << " d=" << d << " trial=" << trial
                                 << " value=" << value;
                              detail = os.str();
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(12, "collective-unitary invariance of the projector", 10.0,
              [](std::string& detail) {
                  SplitMix64 rng(0xC0117ull);
                  for (int d = 2; d <= 3; ++d)
                      for (int n = 2; n <= 3; ++n) {
                          const Projector pi = projector_dicke(d, n);
                          for (int trial = 0; trial < 20; ++trial) {
                              const CMatrix x = random_unitary(d, rng);
                              const CMatrix y = kron_power(x, n);
                              const double dev =
                                  max_abs_diff(y.adjoint() * pi.matrix * y, pi.matrix);
                              if (dev > 1e-10) {
                                  std::ostringstream os;
                                  os << "d=" << d << " n=" << n << " deviation=" << dev;
                                  detail = os.str();
                                  return false;
                              }
                          }
                      }
                  return true;
              });

    if (g_failures == 0) {
        std::printf("all 12 criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
