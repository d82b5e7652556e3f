#include <doctest.h>

#include <random>

#include "crlc/substitute.hpp"

using namespace crlc;

namespace {

Poly pv(const char* v) { return Poly::var(alpha_h3(), v, Scalar(1)); }
Poly pc(Scalar s) { return Poly(alpha_h3(), std::move(s)); }

std::mt19937 rng(20210611);

Scalar random_scalar() {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  return Scalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

Poly random_poly(int max_terms = 6, int max_exp = 3) {
  std::uniform_int_distribution<int> e(0, max_exp), nt(1, max_terms);
  Poly out(alpha_h3());
  int terms = nt(rng);
  for (int t = 0; t < terms; ++t) {
    Poly mono = pc(random_scalar());
    const char* vars[] = {"z", "w", "zb", "wb"};
    for (const char* v : vars) {
      int k = e(rng);
      if (k) mono = mono * pv(v).pow(k);
    }
    out += mono;
  }
  return out;
}

}  // namespace

TEST_CASE("scalar arithmetic and canonical text form") {
  Scalar a = Scalar::ratio(3, 6);
  CHECK(a.str() == "1/2");
  Scalar b(mpq_class(0), mpq_class(-1));
  CHECK(b.str() == "-i");
  Scalar c(mpq_class(2), mpq_class(3, 4));
  CHECK(c.str() == "2+3/4*i");
  CHECK(Scalar::parse("2+3/4*i") == c);
  CHECK(Scalar::parse("-i") == b);
  CHECK(Scalar::parse("1/2") == a);
  CHECK(Scalar::parse("3i") == Scalar(mpq_class(0), mpq_class(3)));
  CHECK((c * c.inverse()).is_one());
  CHECK((Scalar::i() * Scalar::i()) == Scalar(-1));
  CHECK(c.conj().conj() == c);
  CHECK(c.norm() == mpq_class(73, 16));
}

TEST_CASE("exact square roots of rationals") {
  CHECK(*sqrt_exact(mpq_class(9, 4)) == mpq_class(3, 2));
  CHECK(!sqrt_exact(mpq_class(2)));
  CHECK(!sqrt_exact(mpq_class(-4)));
  CHECK(*abs_exact(Scalar(mpq_class(3, 5), mpq_class(4, 5))) == 1);
  CHECK(!abs_exact(Scalar(mpq_class(1), mpq_class(1))));
}

TEST_CASE("ring axioms on random polynomials") {
  for (int k = 0; k < 200; ++k) {
    Poly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("conjugation is a ring homomorphism and an involution") {
  for (int k = 0; k < 200; ++k) {
    Poly a = random_poly(), b = random_poly();
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK(a.conj().conj() == a);
  }
  // sqrt2 is fixed by conjugation
  Poly r2 = Poly::sqrt2(alpha_h3(), Scalar::i());
  CHECK(r2.conj() == Poly::sqrt2(alpha_h3(), Scalar::imag_ratio(-1, 1)));
}

TEST_CASE("derivatives commute and drop weights") {
  int z = alpha_h3()->index_of("z"), w = alpha_h3()->index_of("w");
  for (int k = 0; k < 50; ++k) {
    Poly a = random_poly();
    CHECK(a.derivative(z).derivative(w) == a.derivative(w).derivative(z));
  }
  CHECK(pv("z").pow(3).derivative(z, 3) == pc(Scalar(6)));
  // derivative(w + w^2 r, w, 1) at w = 0 is 1
  Poly p = pv("w") + pv("w") * pv("w") * random_poly();
  Poly dp = p.derivative(w);
  std::map<std::string, Poly> at0{{"w", Poly(alpha_h3())}};
  CHECK(substitute(dp, at0).truncated(1) == pc(Scalar(1)));
}

TEST_CASE("substitution basics") {
  for (int k = 0; k < 20; ++k) {
    Poly a = random_poly();
    std::map<std::string, Poly> id{{"z", pv("z")}, {"w", pv("w")}};
    CHECK(substitute(a, id) == a);
  }
  Poly z2 = pv("z") * pv("z");
  std::map<std::string, Poly> shift{{"z", pv("z") + pc(Scalar(1))}};
  CHECK(substitute(z2, shift) == z2 + pv("z").scaled_long(2) + pc(Scalar(1)));
  // the Segre substitution annihilates the complexified defining polynomial
  Poly m = pv("w") - pv("wb") - (pv("z") * pv("zb")).scaled(Scalar::imag_ratio(2, 1));
  std::map<std::string, Poly> segre{
      {"w", pv("wb") + (pv("z") * pv("zb")).scaled(Scalar::imag_ratio(2, 1))}};
  CHECK(substitute(m, segre).is_zero());
}

TEST_CASE("rational substitution reports the cleared factor") {
  // zb -> w/(2iz) on z^2 zb^2: the factor times the exact value equals the result
  Poly p = pv("z") * pv("z") * pv("zb") * pv("zb");
  std::map<std::string, RationalBinding<Scalar>> bind{
      {"zb", {pv("w"), pv("z").scaled(Scalar::imag_ratio(2, 1))}}};
  auto res = substitute_rational(p, bind);
  // cleared = (2iz)^2 = -4 z^2; cleared * (exact substitution -w^2/4) = z^2 w^2
  CHECK(res.cleared == (pv("z") * pv("z")).scaled_long(-4));
  CHECK(res.value == pv("z") * pv("z") * pv("w") * pv("w"));
}

TEST_CASE("series inverse") {
  int n = 12;
  Poly one = pc(Scalar(1));
  Series den(one - pv("w") * pv("w"), n);
  Series inv = series_inverse(den);
  CHECK((den * inv - Series(one, n)).is_zero());
  Poly expect(alpha_h3());
  for (int k = 0; 2 * k < n; ++k) expect += pv("w").pow(2 * k);
  CHECK(inv == Series(expect, n));
  CHECK(series_inverse(Series(one, n)) == Series(one, n));
  CHECK(series_inverse(Series(pc(Scalar(2)), n)) == Series(pc(Scalar::ratio(1, 2)), n));
  CHECK_THROWS(series_inverse(Series(pv("w"), n)));
  // constants with a sqrt2 part invert exactly
  Series c(pc(Scalar(3)) + Poly::sqrt2(alpha_h3(), Scalar(1)), n);
  CHECK((c * series_inverse(c) - Series(one, n)).is_zero());
}

TEST_CASE("series sqrt matches the displayed expansions") {
  int n = 6;
  Poly one = pc(Scalar(1));
  Poly z = pv("z"), w = pv("w");
  CHECK(series_sqrt(Series(one, n)) == Series(one, n));

  // sqrt(1 - 4i z^2) = 1 - 2i z^2 + 2 z^4 + O(6), and
  // 2z/(1 + .) = z + i z^3 - 2 z^5 + O(z^6)
  Series s(one - (z * z).scaled(Scalar::imag_ratio(4, 1)), n);
  Series root = series_sqrt(s);
  Poly expect_root = one - (z * z).scaled(Scalar::imag_ratio(2, 1)) + (z.pow(4)).scaled_long(2);
  CHECK(root == Series(expect_root, n));
  Series f = Series(z.scaled_long(2), n) * series_inverse(Series(one, n) + root);
  Poly expect_f = z + z.pow(3).scaled(Scalar::i()) + z.pow(5).scaled_long(-2);
  CHECK(f == Series(expect_f, n));

  // sqrt(1 - 4w^2 - 4i z^2) = 1 - 2w^2 - 2i z^2 - 2w^4 - 4i z^2 w^2 + 2 z^4 + O(6)
  Series s2(one - (w * w).scaled_long(4) - (z * z).scaled(Scalar::imag_ratio(4, 1)), n);
  Poly expect2 = one - (w * w).scaled_long(2) - (z * z).scaled(Scalar::imag_ratio(2, 1)) -
                 w.pow(4).scaled_long(2) - (z * z * w * w).scaled(Scalar::imag_ratio(4, 1)) +
                 z.pow(4).scaled_long(2);
  CHECK(series_sqrt(s2) == Series(expect2, n));
  CHECK_THROWS(series_sqrt(Series(pc(Scalar(2)), n)));
}

TEST_CASE("series sqrt squares back for random series") {
  for (int k = 0; k < 100; ++k) {
    // random tail of positive weight, sqrt2-free constant 1
    Poly tail = random_poly(4, 2);
    tail -= Poly(alpha_h3(), tail.constant_term(Scalar(0)));
    Scalar r2part = tail.sqrt2_term(Scalar(0));
    if (!r2part.is_zero()) tail += Poly::sqrt2(alpha_h3(), -r2part);
    Series s(pc(Scalar(1)) + tail, 10);
    Series r = series_sqrt(s);
    CHECK((r * r - s).is_zero());
  }
}

TEST_CASE("series truncation bookkeeping") {
  Series a(pv("z"), 10);
  Series b(pv("w"), 6);
  CHECK((a * b).order() == 6);
  CHECK((a + b).order() == 6);
  CHECK(a.derivative(alpha_h3()->index_of("w")).order() == 8);
  CHECK(a.conj().order() == 10);
}

TEST_CASE("diagonal values of real polynomials are real numerically") {
  for (int k = 0; k < 20; ++k) {
    Poly p = random_poly();
    Poly real = p + p.conj();
    NumPoly np = to_numeric(real, 128);
    NumComplex zv(Scalar(mpq_class(1, 3), mpq_class(1, 7)), 128);
    NumComplex wv(Scalar(mpq_class(2, 5), mpq_class(-1, 9)), 128);
    NumComplex acc = NumComplex::from_long(0, 128);
    for (const auto& [m, c] : np.terms()) {
      NumComplex term = c;
      auto powmul = [&](const NumComplex& base, int reps) {
        for (int j = 0; j < reps; ++j) term = term * base;
      };
      powmul(zv, m.e[0]);
      powmul(wv, m.e[1]);
      powmul(zv.conj(), m.e[2]);
      powmul(wv.conj(), m.e[3]);
      acc = acc + term;
    }
    CHECK(acc.im().below_pow10(25));
  }
}
