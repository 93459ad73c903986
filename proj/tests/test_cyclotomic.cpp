#include "boxcalc/cyclotomic.hpp"

#include "boxcalc/errors.hpp"

#include <doctest.h>

using namespace boxcalc;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclo_context(1)->modulus == Poly1D({Rat(-1), Rat(1)}));
    CHECK(cyclo_context(2)->modulus == Poly1D({Rat(1), Rat(1)}));
    CHECK(cyclo_context(3)->modulus == Poly1D({Rat(1), Rat(1), Rat(1)}));
    CHECK(cyclo_context(4)->modulus == Poly1D({Rat(1), Rat(0), Rat(1)}));
    CHECK(cyclo_context(6)->modulus == Poly1D({Rat(1), Rat(-1), Rat(1)}));
    CHECK(cyclo_context(12)->degree == 4);
}

TEST_CASE("zeta powers and field arithmetic") {
    auto c2 = cyclo_context(2);
    CHECK(Cyclo::zeta_pow(c2, 1) == Cyclo(Rat(-1)));
    CHECK(Cyclo::zeta_pow(c2, 2) == Cyclo(Rat(1)));

    auto c3 = cyclo_context(3);
    Cyclo z = Cyclo::zeta_pow(c3, 1);
    CHECK(z * z * z == Cyclo(Rat(1)));
    CHECK(z * z == Cyclo::zeta_pow(c3, -1));
    CHECK((z + z * z) == Cyclo(Rat(-1)));  // 1 + z + z^2 = 0

    auto c6 = cyclo_context(6);
    Cyclo w = Cyclo::zeta_pow(c6, 1);
    Cyclo acc(Rat(1));
    for (int i = 0; i < 6; ++i) acc = acc * w;
    CHECK(acc == Cyclo(Rat(1)));
}

TEST_CASE("inverses are exact") {
    auto c3 = cyclo_context(3);
    Cyclo z = Cyclo::zeta_pow(c3, 1);
    Cyclo a = Cyclo(Rat(1)) - z;  // 1 - zeta_3
    CHECK(a * a.inverse() == Cyclo(Rat(1)));
    CHECK((a / a) == Cyclo(Rat(1)));
    CHECK_THROWS_AS(Cyclo(Rat(0)).inverse(), BoxcalcError);
    // norm check: (1 - z)(1 - z^2) = 3
    CHECK(a * (Cyclo(Rat(1)) - z * z) == Cyclo(Rat(3)));
}

TEST_CASE("rational detection and promotion") {
    auto c4 = cyclo_context(4);
    Cyclo i = Cyclo::zeta_pow(c4, 1);
    CHECK((i * i).is_rational());
    CHECK((i * i).to_rat() == -1);
    CHECK_FALSE(i.is_rational());
    CHECK((i + Cyclo(Rat(1, 2)) - i) == Cyclo(Rat(1, 2)));
    CHECK_THROWS_AS((void)(i + Cyclo::zeta_pow(cyclo_context(3), 1)), BoxcalcError);
}

TEST_CASE("numeric embedding sanity") {
    auto c6 = cyclo_context(6);
    auto z = Cyclo::zeta_pow(c6, 1).to_complex();
    CHECK(std::abs(z - std::polar(1.0, 2.0 * 3.14159265358979 / 6.0)) < 1e-9);
    CHECK(std::abs(Cyclo(Rat(3, 4)).to_complex() - std::complex<double>(0.75, 0)) < 1e-12);
}

TEST_CASE("canonical strings") {
    auto c3 = cyclo_context(3);
    CHECK(Cyclo(Rat(5, 2)).to_string() == "5/2");
    CHECK(Cyclo::zeta_pow(c3, 1).to_string() == "z");
    CHECK((Cyclo(Rat(1)) - Cyclo::zeta_pow(c3, 1) * Rat(2)).to_string() == "1 - 2*z");
}
