#include "bundles/predicates.hpp"

#include <gmpxx.h>

#include <cmath>
#include <limits>

namespace bundles {
namespace {

// Unit roundoff (half of numeric_limits::epsilon). The filter constants are
// Shewchuk's stage-A bounds for the straightforward double evaluation.
constexpr double kMacheps = std::numeric_limits<double>::epsilon() / 2.0;
constexpr double kCcwErrBound = (3.0 + 16.0 * kMacheps) * kMacheps;
constexpr double kIccErrBound = (10.0 + 96.0 * kMacheps) * kMacheps;

int sign_of(const mpq_class& q) { return sgn(q); }

int orient2d_exact(const Point& a, const Point& b, const Point& c) {
  // Doubles convert to rationals exactly, so this is the true sign.
  const mpq_class ax(a[0]), ay(a[1]), bx(b[0]), by(b[1]), cx(c[0]), cy(c[1]);
  const mpq_class det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
  return sign_of(det);
}

int incircle_exact(const Point& a, const Point& b, const Point& c,
                   const Point& d) {
  const mpq_class adx = mpq_class(a[0]) - mpq_class(d[0]);
  const mpq_class ady = mpq_class(a[1]) - mpq_class(d[1]);
  const mpq_class bdx = mpq_class(b[0]) - mpq_class(d[0]);
  const mpq_class bdy = mpq_class(b[1]) - mpq_class(d[1]);
  const mpq_class cdx = mpq_class(c[0]) - mpq_class(d[0]);
  const mpq_class cdy = mpq_class(c[1]) - mpq_class(d[1]);

  const mpq_class alift = adx * adx + ady * ady;
  const mpq_class blift = bdx * bdx + bdy * bdy;
  const mpq_class clift = cdx * cdx + cdy * cdy;

  const mpq_class det = alift * (bdx * cdy - cdx * bdy) +
                        blift * (cdx * ady - adx * cdy) +
                        clift * (adx * bdy - bdx * ady);
  return sign_of(det);
}

}  // namespace

int orient2d(const Point& a, const Point& b, const Point& c) {
  const double detleft = (a[0] - c[0]) * (b[1] - c[1]);
  const double detright = (a[1] - c[1]) * (b[0] - c[0]);
  const double det = detleft - detright;

  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
    detsum = -detleft - detright;
  } else {
    return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
  }

  const double errbound = kCcwErrBound * detsum;
  if (det > errbound) return 1;
  if (-det > errbound) return -1;
  return orient2d_exact(a, b, c);
}

int incircle(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double adx = a[0] - d[0];
  const double bdx = b[0] - d[0];
  const double cdx = c[0] - d[0];
  const double ady = a[1] - d[1];
  const double bdy = b[1] - d[1];
  const double cdy = c[1] - d[1];

  const double bdxcdy = bdx * cdy;
  const double cdxbdy = cdx * bdy;
  const double alift = adx * adx + ady * ady;

  const double cdxady = cdx * ady;
  const double adxcdy = adx * cdy;
  const double blift = bdx * bdx + bdy * bdy;

  const double adxbdy = adx * bdy;
  const double bdxady = bdx * ady;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                     clift * (adxbdy - bdxady);

  const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                           (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                           (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
  const double errbound = kIccErrBound * permanent;
  if (det > errbound) return 1;
  if (-det > errbound) return -1;
  return incircle_exact(a, b, c, d);
}

}  // namespace bundles
