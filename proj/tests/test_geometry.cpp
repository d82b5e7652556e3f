#include <doctest.h>

#include <random>

#include "crlc/hypersurface.hpp"

using namespace crlc;

TEST_CASE("defining functions are real") {
  for (Surface tag : {Surface::H3, Surface::X, Surface::S3, Surface::D4}) {
    const auto& s = surface(tag);
    CHECK(s.defining_num.conj() == s.defining_num);
    CHECK(s.defining_den.conj() == s.defining_den);
    CHECK(s.normalized_num.conj() == s.normalized_num);
    CHECK(s.normalized_den.conj() == s.normalized_den);
  }
}

TEST_CASE("defining function values at points") {
  CHECK(eval_defining(surface(Surface::H3), {Scalar(0), Scalar(0)}).is_zero());
  // (1, 0, i) on X: Im(i) * 1 - 1 - 0 = 0
  CHECK(eval_defining(surface(Surface::X),
                      {Scalar(1), Scalar(0), Scalar(mpq_class(0), mpq_class(1))})
            .is_zero());
  CHECK(eval_defining(surface(Surface::S3), {Scalar::ratio(3, 5), Scalar::ratio(4, 5)})
            .is_zero());
  CHECK(!on_surface(surface(Surface::S3), {Scalar(1), Scalar(1)}));
  CHECK(on_surface(surface(Surface::H3), {Scalar(1), Scalar(mpq_class(5), mpq_class(1))}));
}

TEST_CASE("segre substitution annihilates each defining numerator") {
  for (Surface tag : {Surface::H3, Surface::X, Surface::S3}) {
    const auto& s = surface(tag);
    CHECK(segre_complexify(s.defining_num, s).is_zero());
  }
  // sphere fallback rule (clear w instead of z)
  const auto& s3 = surface(Surface::S3);
  CHECK(segre_complexify(s3.defining_num, s3, /*fallback=*/true).is_zero());
}

TEST_CASE("CR fields annihilate their defining functions") {
  const auto& h3 = surface(Surface::H3);
  const auto& s3 = surface(Surface::S3);
  CHECK(apply_field(field_L_H3(), h3.defining_num).is_zero());
  CHECK(apply_field(field_Z1_S3(), s3.defining_num).is_zero());
  // L(z) = 1, L(w) = 2i zb
  Poly z = Poly::var(h3.alpha, "z", Scalar(1));
  Poly w = Poly::var(h3.alpha, "w", Scalar(1));
  CHECK(apply_field(field_L_H3(), z) == Poly(h3.alpha, Scalar(1)));
  CHECK(apply_field(field_L_H3(), w) ==
        Poly::var(h3.alpha, "zb", Scalar::imag_ratio(2, 1)));
}

TEST_CASE("complexified multiples of the defining polynomial vanish") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(0, 2), c(-4, 4);
  const auto& h3 = surface(Surface::H3);
  for (int k = 0; k < 30; ++k) {
    Poly m(h3.alpha);
    for (int t = 0; t < 3; ++t) {
      Poly mono(h3.alpha, Scalar(mpq_class(c(rng)), mpq_class(c(rng))));
      for (const auto& v : h3.alpha->vars) {
        int ex = e(rng);
        if (ex) mono = mono * Poly::var(h3.alpha, v, Scalar(1)).pow(ex);
      }
      m += mono;
    }
    Poly multiple = m * h3.defining_num;
    CHECK(segre_complexify(multiple, h3).is_zero());
    CHECK(segre_complexify(apply_field(field_L_H3(), multiple), h3).is_zero());
  }
}

TEST_CASE("normalized X defining function has the |w+2i|^2 denominator") {
  const auto& x = surface(Surface::X);
  Poly w = Poly::var(x.alpha, "w", Scalar(1));
  Poly wb = Poly::var(x.alpha, "wb", Scalar(1));
  Scalar i2 = Scalar::imag_ratio(2, 1);
  CHECK(x.normalized_den == (w + Poly(x.alpha, i2)) * (wb - Poly(x.alpha, i2)));
  CHECK(x.normalized_num == x.defining_num);
}
