#include "cochar/closed_forms.hpp"

#include <stdexcept>

namespace cochar {

ClosedForm parse_closed_form(std::string_view tag) {
  if (tag == "E") return ClosedForm::E;
  if (tag == "UT2E") return ClosedForm::UT2E;
  if (tag == "UT3E_hook11") return ClosedForm::UT3E_hook11;
  if (tag == "UT2E_parts2") return ClosedForm::UT2E_parts2;
  if (tag == "UT3E_parts2") return ClosedForm::UT3E_parts2;
  throw std::invalid_argument("unknown closed-form algebra tag: " + std::string(tag));
}

std::string closed_form_name(ClosedForm f) {
  switch (f) {
    case ClosedForm::E: return "E";
    case ClosedForm::UT2E: return "UT2E";
    case ClosedForm::UT3E_hook11: return "UT3E_hook11";
    case ClosedForm::UT2E_parts2: return "UT2E_parts2";
    case ClosedForm::UT3E_parts2: return "UT3E_parts2";
  }
  return "?";
}

bool closed_form_covers(ClosedForm f, const Partition& lam) {
  switch (f) {
    case ClosedForm::UT3E_hook11: return in_hook(lam, 1, 1);
    case ClosedForm::UT2E_parts2:
    case ClosedForm::UT3E_parts2: return lam.length() <= 2;
    default: return true;
  }
}

namespace {

// Parts from index `from` on are all 2 or 1: counts of each.
bool twos_then_ones(const Partition& lam, int from, int& twos, int& ones) {
  twos = ones = 0;
  for (int i = from; i < lam.length(); ++i) {
    if (lam[i] == 2) ++twos;
    else if (lam[i] == 1) ++ones;
    else return false;
  }
  return true;
}

mpz_class exact_div(const mpz_class& num, long den) {
  if (num % den != 0) throw std::logic_error("closed form is not integral");
  return num / den;
}

std::optional<mpz_class> olsson_regev(const Partition& lam) {
  if (lam[1] <= 1) return mpz_class(1);
  return std::nullopt;
}

std::optional<mpz_class> ut2e_table(const Partition& lam) {
  const int len = lam.length();
  int s = 0, m = 0;
  if (len <= 1) return mpz_class(1);                                    // (n)
  if (lam[0] == 1) return mpz_class(1);                                 // (1^m), m > 1
  if (lam[0] == 2 && lam[1] == 1) return mpz_class(len);                // (2,1^m): m + 1
  if (lam[0] == 2 && lam[1] == 2 && twos_then_ones(lam, 2, s, m)) {
    if (s == 0) return mpz_class(3 * m + 2);                            // (2,2,1^m)
    return mpz_class(4 * (m + 1));                                      // (2,2,2^s,1^m)
  }
  const mpz_class n = lam[0];
  if (lam[0] >= 3 && lam[1] == 1) {                                     // (n,1^m)
    const mpz_class mm = len - 1;
    return mpz_class(2 * n * mm - 3 * mm - n + 3);
  }
  if (lam[0] >= 3 && lam[1] == 2 && twos_then_ones(lam, 2, s, m)) {
    const mpz_class mm = m;
    if (s == 0) return mpz_class(6 * mm * (n - 3) + 9 * mm + 3 * (n - 3) + 5);  // (n,2,1^m)
    return mpz_class((8 * (n - 3) + 12) * (mm + 1));                    // (n,2,2^s,1^m)
  }
  if (lam[1] >= 3) {
    const mpz_class diff = lam[0] - lam[1] + 1;
    if (twos_then_ones(lam, 2, s, m)) {
      if (s == 0) return mpz_class(4 * diff * (2 * m + 1));             // (n1,n2,1^m)
      return mpz_class(12 * diff * (m + 1));                            // (n1,n2,2^s,1^m)
    }
    if (lam[2] == 3 && twos_then_ones(lam, 3, s, m))
      return mpz_class(4 * diff * (m + 1));                             // (n1,n2,3,2^s,1^m)
  }
  return std::nullopt;
}

std::optional<mpz_class> ut3e_hook11(const Partition& lam) {
  const int len = lam.length();
  if (len <= 1) return mpz_class(1);                          // (n)
  if (lam[0] == 1) return mpz_class(1);                       // (1^m), m > 1
  if (len == 2) return mpz_class(lam[0]);                     // (n,1), n >= 2
  if (lam[0] == 2) return mpz_class(len);                     // (2,1^m), m >= 2: m + 1
  const mpz_class n = lam[0], m = len - 1;                    // (n,1^m), n >= 3, m >= 2
  return exact_div(76 - 90 * m + 26 * m * m - 54 * n + 68 * m * n - 20 * m * m * n +
                       10 * n * n - 12 * m * n * n + 4 * m * m * n * n,
                   4);
}

std::optional<mpz_class> ut2e_parts2(const Partition& lam) {
  const mpz_class a = lam[0], b = lam[1];
  if (b == 0) return mpz_class(1);
  if (b == 1) return a;
  if (b == 2) return mpz_class(3 * a - 4);
  return mpz_class(4 * (a - b + 1));
}

std::optional<mpz_class> ut3e_parts2(const Partition& lam) {
  const mpz_class a = lam[0], b = lam[1];
  if (b == 0) return mpz_class(1);
  if (b == 1) return a;
  if (b == 2) return exact_div((a + 2) * (a - 1), 2);
  if (b == 3) return exact_div(16 - 17 * a + 5 * a * a, 2);
  const mpz_class d = a - b;
  return mpz_class(14 - 16 * b + 4 * b * b + 2 * d * (2 - 5 * d) + 4 * b * d * (-3 + b + d));
}

}  // namespace

std::optional<mpz_class> closed_multiplicity(ClosedForm f, const Partition& lam) {
  if (!closed_form_covers(f, lam))
    throw std::domain_error(lam.str() + " is outside the domain of the " + closed_form_name(f) +
                            " table");
  switch (f) {
    case ClosedForm::E: return olsson_regev(lam);
    case ClosedForm::UT2E: return ut2e_table(lam);
    case ClosedForm::UT3E_hook11: return ut3e_hook11(lam);
    case ClosedForm::UT2E_parts2: return ut2e_parts2(lam);
    case ClosedForm::UT3E_parts2: return ut3e_parts2(lam);
  }
  return std::nullopt;
}

namespace {

// Builds displays from variables, polynomials and geometric factors.
struct Displays {
  VarSet vars;
  int bound;

  Series one() const { return Series::constant(vars, bound, 1); }
  Series x(const char* name) const { return Series::variable(vars, bound, name); }
  // (1 + sign*m)^power for a monomial series m; negative powers are geometric.
  Series binom(const Series& m, int sign, int power) const {
    const Monomial& mono = m.terms().at(0).first;
    const int deg = mono.degree();
    std::vector<Series::Term> terms;
    mpz_class c = 1;
    Monomial cur;
    for (int j = 0; j * deg <= bound; ++j) {
      if (j > 0) {
        c = c * (power - (j - 1));
        c /= j;
        cur = cur * mono;
      }
      if (c == 0) break;
      terms.emplace_back(cur, Rational(sign < 0 && j % 2 ? mpz_class(-c) : c));
    }
    return Series::from_terms(vars, bound, std::move(terms));
  }
  // 1 / (1 - m)^p
  Series geo(const Series& m, int p = 1) const { return binom(m, -1, -p); }
};

Series m_e_2vars(const Displays& D) {
  auto v1 = D.x("v1"), v2 = D.x("v2");
  return (1 + v2) * D.geo(v1);
}

Series m_ut2_2vars(const Displays& D) {
  auto v1 = D.x("v1"), v2 = D.x("v2");
  auto w = 1 + v2;
  return Rational(2) * w * D.geo(v1) +
         w * w * (v1 + Rational(2) * v2 - v1 * v2 - 1) * D.geo(v1, 2) * D.geo(v2);
}

Series m_ut3_2vars(const Displays& D, Transcription t) {
  auto v1 = D.x("v1"), v2 = D.x("v2");
  auto w = 1 + v2;
  auto w2 = w * w;
  // The printed inner term lacks the factor v2 carried by the Z^2(t1) display.
  auto inner = t == Transcription::Corrected ? Rational(2) * v2 * w2 : Rational(2) * w2;
  Series p = 1 - Rational(2) * v1 + v1 * v1 - Rational(2) * v2 + Rational(2) * v1 * v2 -
             Rational(4) * pow(v2, 2) + Rational(8) * v1 * pow(v2, 2) -
             Rational(3) * pow(v1, 2) * pow(v2, 2) + Rational(7) * pow(v2, 3) -
             Rational(5) * v1 * pow(v2, 3) + Rational(10) * pow(v2, 4) -
             Rational(13) * v1 * pow(v2, 4) + Rational(3) * pow(v1, 2) * pow(v2, 4) - pow(v2, 5) -
             v1 * pow(v2, 5) - Rational(3) * pow(v2, 6) + Rational(3) * v1 * pow(v2, 6) -
             pow(v1, 2) * pow(v2, 6);
  return Rational(3) * w * D.geo(v1) - Rational(3) * w2 * D.geo(v1, 2) * D.geo(v2) +
         Rational(3) * (inner * D.geo(v1, 2) * D.geo(v2) + v1 * w2 * D.geo(v1, 2)) +
         p * D.geo(v1, 3) * D.geo(v2, 3);
}

Series mhat_e_11(const Displays& D) {
  auto v = D.x("v1"), t = D.x("t1"), y = D.x("y1");
  return 1 + v * D.geo(t) * D.geo(y);
}

Series mhat_ut3_11(const Displays& D) {
  auto v = D.x("v1"), t = D.x("t1"), y = D.x("y1");
  auto ty = t * y;
  Series tail = t + y - 1 - Rational(4) * ty - Rational(5) * pow(ty, 2) - Rational(2) * pow(ty, 3) +
                Rational(3) * pow(t, 2) * y + Rational(3) * pow(t, 3) * pow(y, 2) +
                pow(t, 4) * pow(y, 3) + Rational(3) * t * pow(y, 2) +
                Rational(3) * pow(t, 2) * pow(y, 3) + pow(t, 3) * pow(y, 4);
  return 1 + v * D.geo(t) * D.geo(y) +
         v * (1 + Rational(4) * ty + Rational(3) * pow(ty, 2)) * D.geo(t, 2) * D.geo(y, 2) +
         v * D.geo(t, 3) * D.geo(y, 3) * tail;
}

// Shared pieces of the H(2,3) displays.
struct H23 {
  const Displays& D;
  Series v1, v2, t1, t2, y1, y2, y3;
  Series T1, T1sq, Y1, Y1sq, Q, R, A, B;
  Series C;

  explicit H23(const Displays& d)
      : D(d), v1(d.x("v1")), v2(d.x("v2")), t1(d.x("t1")), t2(d.x("t2")), y1(d.x("y1")),
        y2(d.x("y2")), y3(d.x("y3")) {
    T1 = D.geo(t1);
    T1sq = D.geo(t1, 2);
    Y1 = D.geo(y1);
    Y1sq = D.geo(y1, 2);
    Q = D.geo(y1 * y2);
    R = D.geo(t1 * t2);
    A = 1 + t1 + t1 * t2 - pow(t1, 2) * t2;
    C = 1 - pow(y1, 2) * y2 + Rational(3) * y1 * y2 + y1;
    B = C + Rational(2) * y1 * y2 * y3;
  }
  Series v(int a, int b) const { return pow(v1, a) * pow(v2, b); }
};

Series g_of_1(const H23& h) {
  return 1 + h.v1 + pow(h.v1, 2) + h.v(1, 1) * h.Y1 + h.v(2, 1) * h.Y1 + pow(h.v1, 3) * h.T1 +
         h.v(3, 1) * h.T1 * h.Y1;
}

Series g2_of_1(const H23& h, Transcription t) {
  const auto& [D, v1, v2, t1, t2, y1, y2, y3, T1, T1sq, Y1, Y1sq, Q, R, A, B, C] = h;
  auto yy = y1 * y2;
  // Printed: (1+y1)/((1-y1)^2 (1+t1)); the factor must be 1/(1-t1).
  Series odd = t == Transcription::Corrected ? (1 + y1) * Y1sq * T1
                                             : (1 + y1) * Y1sq * D.binom(t1, 1, -1);
  return 1 + Rational(2) * v1 + Rational(3) * pow(v1, 2) +
         h.v(1, 1) * (Rational(2) * Y1 + Y1sq) +
         h.v(2, 1) * (Rational(4) * Y1 + (1 + y1) * Y1sq + Y1sq) +
         h.v(3, 0) * (Rational(3) * T1 + T1sq) +
         h.v(3, 1) * (Rational(5) * T1 * Y1 + Rational(2) * (1 + y1) * T1 * Y1sq +
                      (1 + t1) * T1sq * Y1 + (1 + t1 * y1) * T1sq * Y1sq) +
         h.v(2, 2) * (Rational(2) * Y1 + Rational(2) * (1 + y1) * Y1sq +
                      Rational(4) * yy * Y1sq * Q) +
         h.v(3, 2) * (Rational(3) * T1 * Y1 + Rational(3) * (1 + y1) * T1 * Y1sq +
                      Rational(6) * yy * T1 * Y1sq * Q + (1 + t1) * T1sq * Y1 +
                      (1 + t1) * (1 + y1) * T1sq * Y1sq +
                      Rational(2) * (1 + t1) * yy * T1sq * Y1sq * Q) +
         h.v(3, 3) * (T1 * Y1 + odd + Rational(2) * yy * T1 * Y1sq * Q + A * T1sq * R * Y1 +
                      A * (1 + y1) * T1sq * R * Y1sq + Rational(2) * A * yy * T1sq * R * Y1sq * Q);
}

Series g2_of_v1(const H23& h, Transcription t) {
  const auto& [D, v1, v2, t1, t2, y1, y2, y3, T1, T1sq, Y1, Y1sq, Q, R, A, B, C] = h;
  auto yy = y1 * y2;
  const bool fixed = t == Transcription::Corrected;
  // Printed: 1/(1-t1^2) where 1/(1-t1)^2 is required.
  Series v3 = Rational(2) * T1 + (fixed ? T1sq : D.geo(pow(t1, 2)));
  Series v32 = Rational(3) * T1 * Y1 + Rational(5) * (1 + y1) * T1 * Y1sq +
               Rational(10) * yy * T1 * Y1sq * Q + Rational(2) * (1 + t1) * (1 + y1) * T1sq * Y1sq +
               Rational(4) * (1 + t1) * yy * T1sq * Y1sq * Q +
               (1 + yy + Rational(2) * t1 * yy + t1 * y1 - t1 * y1 * yy) * T1sq * Y1sq * Q +
               C * T1 * Y1sq * Q;
  // The printed display omits this term, which is G applied to v1^3/(1-t1).
  if (fixed) v32 += (1 + t1) * T1sq * Y1;
  return v1 + Rational(2) * pow(v1, 2) + h.v(1, 1) * (Y1 + Y1sq) +
         h.v(2, 1) * (Rational(3) * Y1 + (1 + y1) * Y1sq + Rational(2) * Y1sq) +
         h.v(3, 1) * (Rational(4) * T1 * Y1 + Rational(3) * (1 + y1) * T1 * Y1sq +
                      Rational(2) * (1 + t1 * y1) * T1sq * Y1sq + (1 + t1) * T1sq * Y1) +
         h.v(3, 0) * v3 +
         h.v(2, 2) * (Rational(2) * Y1 + Rational(3) * (1 + y1) * Y1sq +
                      Rational(6) * yy * Y1sq * Q + (1 + yy) * Y1sq * Q) +
         h.v(3, 2) * v32 +
         h.v(3, 3) * (T1 * Y1 + Rational(2) * (1 + y1) * T1 * Y1sq +
                      Rational(4) * yy * T1 * Y1sq * Q + A * T1sq * R * Y1 +
                      Rational(2) * A * (1 + y1) * T1sq * R * Y1sq +
                      Rational(4) * A * yy * T1sq * R * Y1sq * Q + A * B * T1sq * R * Y1sq * Q +
                      B * T1 * Y1sq * Q);
}

Series mhat_ut2_23(const H23& h) {
  const auto& [D, v1, v2, t1, t2, y1, y2, y3, T1, T1sq, Y1, Y1sq, Q, R, A, B, C] = h;
  auto yy = y1 * y2;
  return 1 + v1 + pow(v1, 2) + h.v(1, 1) * Y1 + h.v(3, 0) * T1 + h.v(2, 1) * (2 - y1) * Y1sq +
         h.v(3, 1) * (T1 * Y1 + (1 + y1) * T1 * Y1sq + (1 + t1 * y1) * T1sq * Y1sq) +
         h.v(2, 2) * ((2 + y1) * Y1sq + Rational(4) * yy * Y1sq * Q) +
         h.v(3, 2) * (Rational(2) * (1 + y1) * T1 * Y1sq + Rational(4) * yy * T1 * Y1sq * Q +
                      (1 + t1) * (1 + y1) * T1sq * Y1sq +
                      Rational(2) * (1 + t1) * yy * T1sq * Y1sq * Q +
                      (1 + yy + Rational(2) * t1 * yy + t1 * y1 - t1 * y1 * yy) * T1sq * Y1sq * Q +
                      C * T1 * Y1sq * Q) +
         h.v(3, 3) * ((1 + y1) * T1 * Y1sq + Rational(2) * yy * T1 * Y1sq * Q +
                      A * (1 + y1) * T1sq * R * Y1sq + Rational(2) * A * yy * T1sq * R * Y1sq * Q +
                      A * B * T1sq * R * Y1sq * Q + B * T1 * Y1sq * Q);
}

}  // namespace

std::vector<std::string> reference_series_names() {
  return {"M'_E_2vars",    "M'_UT2_2vars",  "M'_UT3_2vars",   "Mhat_E_11",  "G1_of_1_H23",
          "G2sq_of_1_H23", "G2sq_of_v1_H23", "Mhat_UT2_23",   "Mhat_UT3_11"};
}

Series reference_series(std::string_view name, int bound, Transcription t) {
  if (name == "M'_E_2vars" || name == "M'_UT2_2vars" || name == "M'_UT3_2vars") {
    Displays D{VarSet::indexed("v", 2), bound};
    if (name == "M'_E_2vars") return m_e_2vars(D);
    if (name == "M'_UT2_2vars") return m_ut2_2vars(D);
    return m_ut3_2vars(D, t);
  }
  if (name == "Mhat_E_11" || name == "Mhat_UT3_11") {
    Displays D{VarSet::hook_mult(1, 1), bound};
    return name == "Mhat_E_11" ? mhat_e_11(D) : mhat_ut3_11(D);
  }
  if (name == "G1_of_1_H23" || name == "G2sq_of_1_H23" || name == "G2sq_of_v1_H23" ||
      name == "Mhat_UT2_23") {
    Displays D{VarSet::hook_mult(2, 3), bound};
    H23 h(D);
    if (name == "G1_of_1_H23") return g_of_1(h);
    if (name == "G2sq_of_1_H23") return g2_of_1(h, t);
    if (name == "G2sq_of_v1_H23") return g2_of_v1(h, t);
    return mhat_ut2_23(h);
  }
  throw std::invalid_argument("unknown reference series: " + std::string(name));
}

}  // namespace cochar
