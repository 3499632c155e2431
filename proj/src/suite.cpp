#include "ckhopf/suite.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ckhopf/bicross.hpp"
#include "ckhopf/physkit.hpp"

namespace ckhopf {

namespace {

HopfPtr deformed(const KVector& k, const std::string& basis) {
  if (basis == "new") return build_deformed_new(k);
  if (basis == "old") return build_deformed_old(k);
  throw std::invalid_argument("check needs the old or new basis, not " + basis);
}

AlgebraPtr selected_algebra(const KVector& k, const std::string& basis) {
  if (basis == "classical") return build_affine(k);
  return deformed(k, basis)->algebra();
}

// every κ_l (l >= 2) is its own symbol
bool fully_symbolic(const KVector& k) {
  for (int l = 2; l <= k.n(); ++l)
    if (!(k.kappa(l) == Coefficient::symbol(k.table(), "k" + std::to_string(l)))) return false;
  return true;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"jacobi",     "hopf",  "bicross", "casimir", "rmatrix",    "dimension",
                                                 "confluence", "dual2", "galilei", "basis",   "contraction"};
  return names;
}

std::vector<std::string> all_checks(const KVector& k, bool include_galilei) {
  std::vector<std::string> out;
  for (const auto& n : check_names()) {
    if (n == "dual2" && k.n() != 2) continue;
    if (n == "galilei" && !include_galilei) continue;
    out.push_back(n);
  }
  return out;
}

bool is_numeric(const KVector& k) {
  for (int l = 1; l <= k.n(); ++l)
    if (!k.kappa(l).is_constant()) return false;
  return true;
}

VerificationReport run_check(const std::string& name, const KVector& k, const SuiteConfig& cfg) {
  if (cfg.basis != "classical" && cfg.basis != "old" && cfg.basis != "new")
    throw std::invalid_argument("unknown basis " + cfg.basis);
  VerificationReport rep(cfg.seed);
  if (name == "jacobi") {
    rep.merge(check_jacobi(build_classical_ck(k)));
    rep.merge(check_jacobi(selected_algebra(k, cfg.basis)));
    if (is_numeric(k)) rep.merge(check_matrix_oracle(build_classical_ck(k), k));
  } else if (name == "hopf") {
    rep.merge(check_hopf(*deformed(k, cfg.basis)));
  } else if (name == "bicross") {
    BicrossData d = make_bicross_data(k);
    rep.merge(check_module_algebra(d));
    rep.merge(check_comodule_coalgebra(d));
    rep.merge(compare_with_direct(k));
  } else if (name == "casimir") {
    rep.merge(check_casimir(build_affine(k), k, Flavor::Classical));
    rep.merge(check_casimir(build_deformed_old(k)->algebra(), k, Flavor::Old));
    rep.merge(check_casimir(build_deformed_new(k)->algebra(), k, Flavor::New));
  } else if (name == "rmatrix") {
    HopfPtr h = build_deformed_new(k);
    rep.merge(check_rmatrix(*h, k));
    rep.merge(check_classical_limit(*h, k));
  } else if (name == "dimension") {
    DimScheme scheme = fully_symbolic(k) ? DimScheme::Uniform : DimScheme::PerAlgebra;
    if (cfg.basis == "classical") {
      AlgebraPtr a = build_affine(k);
      rep.merge(dimension_check(a, dimension_assignment(a, k, scheme)));
    } else {
      HopfPtr h = deformed(k, cfg.basis);
      rep.merge(dimension_check(*h, dimension_assignment(h->algebra(), k, scheme)));
    }
  } else if (name == "confluence") {
    rep.merge(check_confluence_sample(selected_algebra(k, cfg.basis), cfg.samples, cfg.max_degree, cfg.seed));
  } else if (name == "dual2") {
    if (k.n() != 2) throw std::invalid_argument("dual2 needs N = 2");
    DualN2 d = build_dual_n2(k);
    rep.merge(d.report);
    rep.merge(check_dual_presentation(d).filter("dual2.presentation"));
    rep.merge(pairing_check(build_deformed_new(k), d.product, static_cast<int>(std::min<std::size_t>(cfg.max_degree, 3))));
  } else if (name == "galilei") {
    rep.merge(galilei_limit_check());
  } else if (name == "basis") {
    rep.merge(check_basis_change(make_basis_change(k), k));
  } else if (name == "contraction") {
    for (int m = 2; m <= k.n(); ++m) rep.merge(check_contraction_commutes(k, m));
  } else {
    throw std::invalid_argument("unknown check " + name);
  }
  return rep;
}

std::vector<KVector> affine_specializations(int n) {
  if (n < 2) throw std::invalid_argument("N >= 2");
  std::vector<KVector> out;
  std::vector<int> v(static_cast<std::size_t>(n - 1), -1);
  while (true) {
    std::vector<Coefficient> k{Coefficient(0)};
    for (int x : v) k.emplace_back(x);
    out.emplace_back(n, std::move(k));
    std::size_t i = 0;
    while (i < v.size() && v[i] == 1) v[i++] = -1;
    if (i == v.size()) break;
    ++v[i];
  }
  return out;
}

VerificationReport sweep(int n, const std::vector<std::string>& checks, const SuiteConfig& cfg, unsigned threads) {
  std::vector<KVector> ks = affine_specializations(n);
  std::vector<VerificationReport> parts(ks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  auto work = [&] {
    for (std::size_t i = next++; i < ks.size(); i = next++) {
      try {
        VerificationReport r(cfg.seed);
        for (const auto& c : checks) {
          if (c == "all") {
            for (const auto& a : all_checks(ks[i], false)) r.merge(run_check(a, ks[i], cfg));
          } else {
            r.merge(run_check(c, ks[i], cfg));
          }
        }
        parts[i] = std::move(r);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(ks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < t; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  VerificationReport out(cfg.seed);
  for (const auto& p : parts) out.merge(p);
  return out;
}

}  // namespace ckhopf
