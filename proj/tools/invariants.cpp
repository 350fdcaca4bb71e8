#include "invariants.hpp"

#include <functional>

#include "cochar/closed_forms.hpp"
#include "cochar/hilbert.hpp"
#include "cochar/hook.hpp"
#include "cochar/operators.hpp"
#include "cochar/parallel.hpp"

namespace cochar::cli {

namespace {

using Check = std::function<std::string()>;  // empty string on success

std::string first_mismatch(const PartitionMap& a, const PartitionMap& b) {
  for (const auto& [lam, c] : a) {
    auto it = b.find(lam);
    if (it == b.end() || it->second != c) return "differs at " + lam.str();
  }
  for (const auto& [lam, c] : b)
    if (!a.count(lam)) return "differs at " + lam.str();
  return {};
}

std::string conjugate_involution() {
  for (int w = 0; w <= 10; ++w)
    for (const auto& lam : partitions_of(w)) {
      Partition c = conjugate(lam);
      if (conjugate(c) != lam || c.weight() != w) return "fails at " + lam.str();
    }
  return {};
}

std::string degree_square_sum() {
  for (int n = 0; n <= 9; ++n) {
    mpz_class s = 0, fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (const auto& lam : partitions_of(n)) s += char_degree(lam) * char_degree(lam);
    if (s != fact) return "fails at n = " + std::to_string(n);
  }
  return {};
}

std::string hook_split_roundtrip() {
  for (int w = 0; w <= 9; ++w)
    for (const auto& lam : partitions_of(w))
      for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
          if (k + l == 0 || !in_hook(lam, k, l)) continue;
          HookSplit s = split_hook(lam, k, l);
          if (s.reassemble() != lam) return "fails at " + lam.str();
        }
  return {};
}

std::string schur_roundtrip() {
  for (int w = 0; w <= 6; ++w)
    for (const auto& lam : partitions_of(w, 3))
      if (!(schur_decompose(schur_poly(lam, 3, 8), 3) == SchurExpansion::single(3, 8, lam)))
        return "fails at " + lam.str();
  return {};
}

std::string hook_schur_roundtrip() {
  for (int w = 0; w <= 5; ++w)
    for (const auto& lam : partitions_of(w))
      if (in_hook(lam, 2, 1) &&
          !(hs_decompose(hs_poly(lam, 2, 1, 6), 2, 1) == HookExpansion::single(2, 1, 6, lam)))
        return "fails at " + lam.str();
  return {};
}

std::string series_inverse() {
  VarSet v = VarSet::indexed("x", 3);
  Series a = 1 + Series::variable(v, 10, 0) - Rational(2) * Series::variable(v, 10, 1) *
                                                   Series::variable(v, 10, 2);
  if (!(a * inverse(a) == Series::constant(v, 10, 1))) return "a * a^-1 != 1";
  return {};
}

std::string y_dual_route() {
  auto e = mult_expansion_UTnE(2, 3, 10);
  if (!(op_Y(e) == op_Y_substitution(e))) return "Pieri and substitution disagree";
  return {};
}

std::string y_yhat_commute() {
  auto e = mult_expansion_UTnE(2, 3, 10);
  if (!(op_Y(op_Yhat(e)) == op_Yhat(op_Y(e)))) return "Y Yhat != Yhat Y";
  return {};
}

std::string yhat_two_vars() {
  const int N = 10;
  auto e = mult_expansion_UTnE(2, 2, N);
  VarSet t = VarSet::indexed("t", 2);
  Series f = 1 + Series::variable(t, N, 0) * Series::variable(t, N, 1);
  Series lhs = to_mult_series(op_Yhat(e), MultForm::T).series;
  Series rhs = to_mult_series(e, MultForm::T).series * f;
  if (!(lhs == rhs)) return "Yhat differs from multiplication by 1 + t1 t2";
  return {};
}

std::string g_commute() {
  auto e = hook_mult_expansion_UTnE(2, 2, 3, 8);
  if (!(op_G1(op_G2(e)) == op_G2(op_G1(e)))) return "G1 G2 != G2 G1";
  return {};
}

std::string pipelines_vs_decomposition() {
  for (int n = 1; n <= 3; ++n) {
    auto p = mult_expansion_UTnE(n, 2, 12);
    auto d = schur_decompose(hilbert_UTnE(n, 2, 12), 2);
    if (auto m = first_mismatch(p.coeffs(), d.coeffs()); !m.empty())
      return "UT" + std::to_string(n) + "E, 2 vars: " + m;
  }
  auto hp = hook_mult_expansion_UTnE(2, 2, 3, 8);
  auto hd = hs_decompose(double_hilbert_UTnE(2, 2, 3, 8), 2, 3);
  if (auto m = first_mismatch(hp.coeffs(), hd.coeffs()); !m.empty()) return "hook (2,3): " + m;
  return {};
}

std::string verify_pipeline_series() {
  for (int n = 1; n <= 3; ++n) {
    const int N = 9;
    MultSeries h = mult_series_UTnE(n, 3, N);
    if (!verify_mult_series(hilbert_UTnE(n, 3, N), h))
      return "UT" + std::to_string(n) + "E, 3 vars";
  }
  return {};
}

std::string closed_forms_vs_pipeline() {
  struct Case {
    ClosedForm f;
    int n, d;
  };
  for (auto [f, n, d] : {Case{ClosedForm::E, 1, 3}, Case{ClosedForm::UT2E_parts2, 2, 2},
                         Case{ClosedForm::UT3E_parts2, 3, 2}, Case{ClosedForm::UT2E, 2, 4}}) {
    auto p = mult_expansion_UTnE(n, d, 12);
    for (int w = 0; w <= 12; ++w)
      for (const auto& lam : partitions_of(w, d)) {
        auto m = closed_multiplicity(f, lam);
        if (Rational(m ? *m : 0) != p.coeff(lam))
          return closed_form_name(f) + " at " + lam.str();
      }
  }
  auto h = hook_mult_expansion_UTnE(3, 1, 1, 12);
  for (int w = 0; w <= 12; ++w)
    for (const auto& lam : partitions_of(w))
      if (in_hook(lam, 1, 1)) {
        auto m = closed_multiplicity(ClosedForm::UT3E_hook11, lam);
        if (Rational(m ? *m : 0) != h.coeff(lam)) return "UT3E_hook11 at " + lam.str();
      }
  return {};
}

std::string reference_series_vs_pipeline() {
  const int N = 8;
  for (int n = 1; n <= 3; ++n) {
    const std::string name = n == 1 ? "M'_E_2vars" : "M'_UT" + std::to_string(n) + "_2vars";
    auto e = from_mult_series(MultSeries{MultForm::V, 2, N, reference_series(name, N)});
    if (!(e == mult_expansion_UTnE(n, 2, N))) return name;
  }
  if (!(encode_hook(hook_mult_expansion_UTnE(1, 1, 1, N)).series ==
        reference_series("Mhat_E_11", N)))
    return "Mhat_E_11";
  if (!(encode_hook(hook_mult_expansion_UTnE(3, 1, 1, N)).series ==
        reference_series("Mhat_UT3_11", N)))
    return "Mhat_UT3_11";
  if (!(hook_mult_UTnE(2, 2, 3, N).series == reference_series("Mhat_UT2_23", N)))
    return "Mhat_UT2_23";
  return {};
}

std::string support_theorems() {
  for (int n = 1; n <= 3; ++n) {
    auto e = hook_mult_expansion_UTnE(n, n, 2 * n, 9);
    for (const auto& [lam, c] : e.coeffs()) {
      if (lam[n] > 2 * n - 1) return "row bound fails at " + lam.str();
      if (!in_hook_star_q2(lam, n) || q2_overlap(lam, n) > n - 1)
        return "Q2 bound fails at " + lam.str();
    }
  }
  return {};
}

std::string integrality() {
  for (int n = 1; n <= 4; ++n) check_multiplicities(mult_expansion_UTnE(n, 3, 10).coeffs(), "pipeline");
  check_multiplicities(hook_mult_expansion_UTnE(3, 2, 2, 8).coeffs(), "hook pipeline");
  return {};
}

std::string thread_determinism() {
  const int saved = thread_count();
  set_thread_count(1);
  auto a = to_json(hook_mult_UTnE(2, 2, 3, 8));
  set_thread_count(4);
  auto b = to_json(hook_mult_UTnE(2, 2, 3, 8));
  set_thread_count(saved);
  if (a != b) return "output depends on the thread count";
  return {};
}

}  // namespace

std::vector<InvariantResult> run_invariant_suite() {
  const std::vector<std::pair<std::string, Check>> checks = {
      {"conjugate_involution", conjugate_involution},
      {"degree_square_sum", degree_square_sum},
      {"hook_split_roundtrip", hook_split_roundtrip},
      {"schur_roundtrip", schur_roundtrip},
      {"hook_schur_roundtrip", hook_schur_roundtrip},
      {"series_inverse", series_inverse},
      {"y_dual_route", y_dual_route},
      {"y_yhat_commute", y_yhat_commute},
      {"yhat_two_vars", yhat_two_vars},
      {"g1_g2_commute", g_commute},
      {"pipelines_vs_decomposition", pipelines_vs_decomposition},
      {"verify_pipeline_series", verify_pipeline_series},
      {"closed_forms_vs_pipeline", closed_forms_vs_pipeline},
      {"reference_series_vs_pipeline", reference_series_vs_pipeline},
      {"support_theorems", support_theorems},
      {"integrality", integrality},
      {"thread_determinism", thread_determinism},
  };
  std::vector<InvariantResult> out;
  for (const auto& [name, check] : checks) {
    InvariantResult r{name, false, {}};
    try {
      r.detail = check();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cochar::cli
