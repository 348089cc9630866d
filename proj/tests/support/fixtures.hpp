#pragma once

#include <kfin/curve_algebra.hpp>
#include <kfin/multigraded.hpp>

#include <string>
#include <vector>

namespace kfin::fixtures {

inline BinaryForm mono(std::size_t s_exp, std::size_t t_exp, long c = 1) {
  return BinaryForm::monomial(s_exp, t_exp, c);
}

/// <s^3, s^2 t, t^3>
inline CurveAlgebra cuspidal_cubic() { return new_curve(3, {mono(3, 0), mono(2, 1), mono(0, 3)}); }

/// <s^2 t, s t^2, s^3 + t^3>
inline CurveAlgebra root_cubic() {
  return new_curve(3, {mono(2, 1), mono(1, 2), mono(3, 0) + mono(0, 3)});
}

/// <s^3 t, s^2 t^2, s^4 + t^4>
inline CurveAlgebra plane_quartic() {
  return new_curve(4, {mono(3, 1), mono(2, 2), mono(4, 0) + mono(0, 4)});
}

/// <s^4, s^3 t, t^4>
inline CurveAlgebra toric_quartic() { return new_curve(4, {mono(4, 0), mono(3, 1), mono(0, 4)}); }

/// <s^4 t, s^3 t^2, s^2 t^3, s^5 + t^5>
inline CurveAlgebra quintic_family() {
  return new_curve(5, {mono(4, 1), mono(3, 2), mono(2, 3), mono(5, 0) + mono(0, 5)});
}

/// <s^4 t, s^3 t^2, s^5 + t^5>
inline CurveAlgebra planar_quintic() {
  return new_curve(5, {mono(4, 1), mono(3, 2), mono(5, 0) + mono(0, 5)});
}

/// <s, t>
inline CurveAlgebra line() { return new_curve(1, {mono(1, 0), mono(0, 1)}); }

struct Named {
  std::string name;
  CurveAlgebra curve;
};

inline std::vector<Named> all_curves() {
  return {{"cuspidal cubic", cuspidal_cubic()}, {"root cubic", root_cubic()},
          {"plane quartic", plane_quartic()},   {"toric quartic", toric_quartic()},
          {"quintic family", quintic_family()}, {"planar quintic", planar_quintic()},
          {"line", line()}};
}

inline Poly poly(std::vector<long> c) { return Poly(Vector(c.begin(), c.end())); }

/// K[x, (t-1)x, (t-1)^3 x, t y, t^2 y, (1+t^3) y]
inline MultigradedAlgebra example_algebra() {
  return MultigradedAlgebra(2, {{poly({1}), {1, 0}},
                                {poly({-1, 1}), {1, 0}},
                                {poly({-1, 3, -3, 1}), {1, 0}},
                                {poly({0, 1}), {0, 1}},
                                {poly({0, 0, 1}), {0, 1}},
                                {poly({1, 0, 0, 1}), {0, 1}}});
}

}  // namespace kfin::fixtures
