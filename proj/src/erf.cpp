#include "dcov/erf.hpp"

#include <cmath>
#include <limits>

namespace dcov {

namespace {

// Coefficients from SPECFUN's CALERF (netlib.org/specfun/erf).
constexpr double kA[5] = {3.1611237438705656, 113.864154151050156, 377.485237685302021,
                          3209.37758913846947, .185777706184603153};
constexpr double kB[4] = {23.6012909523441209, 244.024637934444173, 1282.61652607737228,
                          2844.23683343917062};
constexpr double kC[9] = {.564188496988670089, 8.88314979438837594, 66.1191906371416295,
                          298.635138197400131, 881.95222124176909,  1712.04761263407058,
                          2051.07837782607147, 1230.33935479799725, 2.15311535474403846e-8};
constexpr double kD[8] = {15.7449261107098347, 117.693950891312499, 537.181101862009858,
                          1621.38957456669019, 3290.79923573345963, 4362.61909014324716,
                          3439.36767414372164, 1230.33935480374942};
constexpr double kP[6] = {.305326634961232344, .360344899949804439, .125781726111229246,
                          .0160837851487422766, 6.58749161529837803e-4, .0163153871373020978};
constexpr double kQ[5] = {2.56852019228982242, 1.87295284992346047, .527905102951428412,
                          .0605183413124413191, .00233520497626869185};

constexpr double kSqrtPiInv = 0.56418958354775628695;  // 1/sqrt(pi)
constexpr double kThresh = 0.46875;
constexpr double kXNeg = -26.628;
constexpr double kXSmall = 1.11e-16;
constexpr double kXBig = 26.543;
constexpr double kXHuge = 6.71e7;
constexpr double kXMax = 2.53e307;

enum Mode { kErf = 0, kErfc = 1, kErfcx = 2 };

double trunc16(double v) {
    return std::trunc(v * 16.0) / 16.0;
}

double calerf(double x, Mode mode) {
    const double y = std::fabs(x);
    double result;

    if (y <= kThresh) {
        double ysq = y > kXSmall ? y * y : 0.0;
        double xnum = kA[4] * ysq;
        double xden = ysq;
        for (int i = 0; i < 3; ++i) {
            xnum = (xnum + kA[i]) * ysq;
            xden = (xden + kB[i]) * ysq;
        }
        result = x * (xnum + kA[3]) / (xden + kB[3]);
        if (mode != kErf) result = 1.0 - result;
        if (mode == kErfcx) result = std::exp(ysq) * result;
        return result;
    }

    if (y <= 4.0) {
        double xnum = kC[8] * y;
        double xden = y;
        for (int i = 0; i < 7; ++i) {
            xnum = (xnum + kC[i]) * y;
            xden = (xden + kD[i]) * y;
        }
        result = (xnum + kC[7]) / (xden + kD[7]);
        if (mode != kErfcx) {
            const double ysq = trunc16(y);
            const double del = (y - ysq) * (y + ysq);
            result = std::exp(-ysq * ysq) * std::exp(-del) * result;
        }
    } else {
        result = 0.0;
        bool skip_rational = false;
        if (y >= kXBig) {
            if (mode != kErfcx || y >= kXMax) {
                skip_rational = true;
            } else if (y >= kXHuge) {
                result = kSqrtPiInv / y;
                skip_rational = true;
            }
        }
        if (!skip_rational) {
            const double ysq = 1.0 / (y * y);
            double xnum = kP[5] * ysq;
            double xden = ysq;
            for (int i = 0; i < 4; ++i) {
                xnum = (xnum + kP[i]) * ysq;
                xden = (xden + kQ[i]) * ysq;
            }
            result = ysq * (xnum + kP[4]) / (xden + kQ[4]);
            result = (kSqrtPiInv - result) / y;
            if (mode != kErfcx) {
                const double t16 = trunc16(y);
                const double del = (y - t16) * (y + t16);
                result = std::exp(-t16 * t16) * std::exp(-del) * result;
            }
        }
    }

    if (mode == kErf) {
        result = (0.5 - result) + 0.5;
        if (x < 0.0) result = -result;
    } else if (mode == kErfc) {
        if (x < 0.0) result = 2.0 - result;
    } else {
        if (x < 0.0) {
            if (x < kXNeg) {
                result = std::numeric_limits<double>::infinity();
            } else {
                const double t16 = trunc16(x);
                const double del = (x - t16) * (x + t16);
                const double e = std::exp(t16 * t16) * std::exp(del);
                result = (e + e) - result;
            }
        }
    }
    return result;
}

}  // namespace

double erf_cody(double x) { return calerf(x, kErf); }
double erfc_cody(double x) { return calerf(x, kErfc); }
double erfcx_cody(double x) { return calerf(x, kErfcx); }

double normal_cdf(double x) { return 0.5 * erfc_cody(-x * 0.7071067811865475244); }

}  // namespace dcov
