#include "integrate.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "errors.h"

namespace zerocross {

namespace {

constexpr double kMachEps = 2.220446049250313e-16;

// Dormand-Prince 8(5,3) embedded pair with 7th-order dense output
// (Hairer, Norsett & Wanner, "Solving Ordinary Differential Equations I").
constexpr double c2 = 0.526001519587677318785587544488e-01;
constexpr double c3 = 0.789002279381515978178381316732e-01;
constexpr double c4 = 0.118350341907227396726757197510e+00;
constexpr double c5 = 0.281649658092772603273242802490e+00;
constexpr double c6 = 0.333333333333333333333333333333e+00;
constexpr double c7 = 0.25e+00;
constexpr double c8 = 0.307692307692307692307692307692e+00;
constexpr double c9 = 0.651282051282051282051282051282e+00;
constexpr double c10 = 0.6e+00;
constexpr double c11 = 0.857142857142857142857142857142e+00;
constexpr double c14 = 0.1e+00;
constexpr double c15 = 0.2e+00;
constexpr double c16 = 0.777777777777777777777777777778e+00;

constexpr double a21 = 5.26001519587677318785587544488e-2;
constexpr double a31 = 1.97250569845378994544595329183e-2;
constexpr double a32 = 5.91751709536136983633785987549e-2;
constexpr double a41 = 2.95875854768068491816892993775e-2;
constexpr double a43 = 8.87627564304205475450678981324e-2;
constexpr double a51 = 2.41365134159266685502369798665e-1;
constexpr double a53 = -8.84549479328286085344864962717e-1;
constexpr double a54 = 9.24834003261792003115737966543e-1;
constexpr double a61 = 3.7037037037037037037037037037e-2;
constexpr double a64 = 1.70828608729473871279604482173e-1;
constexpr double a65 = 1.25467687566822425016691814123e-1;
constexpr double a71 = 3.7109375e-2;
constexpr double a74 = 1.70252211019544039314978060272e-1;
constexpr double a75 = 6.02165389804559606850219397283e-2;
constexpr double a76 = -1.7578125e-2;
constexpr double a81 = 3.70920001185047927108779319836e-2;
constexpr double a84 = 1.70383925712239993810214054705e-1;
constexpr double a85 = 1.07262030446373284651809199168e-1;
constexpr double a86 = -1.53194377486244017527936158236e-2;
constexpr double a87 = 8.27378916381402288758473766002e-3;
constexpr double a91 = 6.24110958716075717114429577812e-1;
constexpr double a94 = -3.36089262944694129406857109825e0;
constexpr double a95 = -8.68219346841726006818189891453e-1;
constexpr double a96 = 2.75920996994467083049415600797e1;
constexpr double a97 = 2.01540675504778934086186788979e1;
constexpr double a98 = -4.34898841810699588477366255144e1;
constexpr double a101 = 4.77662536438264365890433908527e-1;
constexpr double a104 = -2.48811461997166764192642586468e0;
constexpr double a105 = -5.90290826836842996371446475743e-1;
constexpr double a106 = 2.12300514481811942347288949897e1;
constexpr double a107 = 1.52792336328824235832596922938e1;
constexpr double a108 = -3.32882109689848629194453265587e1;
constexpr double a109 = -2.03312017085086261358222928593e-2;
constexpr double a111 = -9.3714243008598732571704021658e-1;
constexpr double a114 = 5.18637242884406370830023853209e0;
constexpr double a115 = 1.09143734899672957818500254654e0;
constexpr double a116 = -8.14978701074692612513997267357e0;
constexpr double a117 = -1.85200656599969598641566180701e1;
constexpr double a118 = 2.27394870993505042818970056734e1;
constexpr double a119 = 2.49360555267965238987089396762e0;
constexpr double a1110 = -3.0467644718982195003823669022e0;
constexpr double a121 = 2.27331014751653820792359768449e0;
constexpr double a124 = -1.05344954667372501984066689879e1;
constexpr double a125 = -2.00087205822486249909675718444e0;
constexpr double a126 = -1.79589318631187989172765950534e1;
constexpr double a127 = 2.79488845294199600508499808837e1;
constexpr double a128 = -2.85899827713502369474065508674e0;
constexpr double a129 = -8.87285693353062954433549289258e0;
constexpr double a1210 = 1.23605671757943030647266201528e1;
constexpr double a1211 = 6.43392746015763530355970484046e-1;

constexpr double a141 = 5.61675022830479523392909219681e-2;
constexpr double a147 = 2.53500210216624811088794765333e-1;
constexpr double a148 = -2.46239037470802489917441475441e-1;
constexpr double a149 = -1.24191423263816360469010140626e-1;
constexpr double a1410 = 1.5329179827876569731206322685e-1;
constexpr double a1411 = 8.20105229563468988491666602057e-3;
constexpr double a1412 = 7.56789766054569976138603589584e-3;
constexpr double a1413 = -8.298e-3;
constexpr double a151 = 3.18346481635021405060768473261e-2;
constexpr double a156 = 2.83009096723667755288322961402e-2;
constexpr double a157 = 5.35419883074385676223797384372e-2;
constexpr double a158 = -5.49237485713909884646569340306e-2;
constexpr double a1511 = -1.08347328697249322858509316994e-4;
constexpr double a1512 = 3.82571090835658412954920192323e-4;
constexpr double a1513 = -3.40465008687404560802977114492e-4;
constexpr double a1514 = 1.41312443674632500278074618366e-1;
constexpr double a161 = -4.28896301583791923408573538692e-1;
constexpr double a166 = -4.69762141536116384314449447206e0;
constexpr double a167 = 7.68342119606259904184240953878e0;
constexpr double a168 = 4.06898981839711007970213554331e0;
constexpr double a169 = 3.56727187455281109270669543021e-1;
constexpr double a1613 = -1.39902416515901462129418009734e-3;
constexpr double a1614 = 2.9475147891527723389556272149e0;
constexpr double a1615 = -9.15095847217987001081870187138e0;

constexpr double b1 = 5.42937341165687622380535766363e-2;
constexpr double b6 = 4.45031289275240888144113950566e0;
constexpr double b7 = 1.89151789931450038304281599044e0;
constexpr double b8 = -5.8012039600105847814672114227e0;
constexpr double b9 = 3.1116436695781989440891606237e-1;
constexpr double b10 = -1.52160949662516078556178806805e-1;
constexpr double b11 = 2.01365400804030348374776537501e-1;
constexpr double b12 = 4.47106157277725905176885569043e-2;

constexpr double e31 = 0.244094488188976377952755905512e+00;
constexpr double e32 = 0.733846688281611857341361741547e+00;
constexpr double e33 = 0.220588235294117647058823529412e-01;

constexpr double e51 = 0.1312004499419488073250102996e-01;
constexpr double e56 = -0.1225156446376204440720569753e+01;
constexpr double e57 = -0.4957589496572501915214079952e+00;
constexpr double e58 = 0.1664377182454986536961530415e+01;
constexpr double e59 = -0.3503288487499736816886487290e+00;
constexpr double e510 = 0.3341791187130174790297318841e+00;
constexpr double e511 = 0.8192320648511571246570742613e-01;
constexpr double e512 = -0.2235530786388629525884427845e-01;

constexpr double d41 = -0.84289382761090128651353491142e+01;
constexpr double d46 = 0.56671495351937776962531783590e+00;
constexpr double d47 = -0.30689499459498916912797304727e+01;
constexpr double d48 = 0.23846676565120698287728149680e+01;
constexpr double d49 = 0.21170345824450282767155149946e+01;
constexpr double d410 = -0.87139158377797299206789907490e+00;
constexpr double d411 = 0.22404374302607882758541771650e+01;
constexpr double d412 = 0.63157877876946881815570249290e+00;
constexpr double d413 = -0.88990336451333310820698117400e-01;
constexpr double d414 = 0.18148505520854727256656404962e+02;
constexpr double d415 = -0.91946323924783554000451984436e+01;
constexpr double d416 = -0.44360363875948939664310572000e+01;
constexpr double d51 = 0.10427508642579134603413151009e+02;
constexpr double d56 = 0.24228349177525818288430175319e+03;
constexpr double d57 = 0.16520045171727028198505394887e+03;
constexpr double d58 = -0.37454675472269020279518312152e+03;
constexpr double d59 = -0.22113666853125306036270938578e+02;
constexpr double d510 = 0.77334326684722638389603898808e+01;
constexpr double d511 = -0.30674084731089398182061213626e+02;
constexpr double d512 = -0.93321305264302278729567221706e+01;
constexpr double d513 = 0.15697238121770843886131091075e+02;
constexpr double d514 = -0.31139403219565177677282850411e+02;
constexpr double d515 = -0.93529243588444783865713862664e+01;
constexpr double d516 = 0.35816841486394083752465898540e+02;
constexpr double d61 = 0.19985053242002433820987653617e+02;
constexpr double d66 = -0.38703730874935176555105901742e+03;
constexpr double d67 = -0.18917813819516756882830838328e+03;
constexpr double d68 = 0.52780815920542364900561016686e+03;
constexpr double d69 = -0.11573902539959630126141871134e+02;
constexpr double d610 = 0.68812326946963000169666922661e+01;
constexpr double d611 = -0.10006050966910838403183860980e+01;
constexpr double d612 = 0.77771377980534432092869265740e+00;
constexpr double d613 = -0.27782057523535084065932004339e+01;
constexpr double d614 = -0.60196695231264120758267380846e+02;
constexpr double d615 = 0.84320405506677161018159903784e+02;
constexpr double d616 = 0.11992291136182789328035130030e+02;
constexpr double d71 = -0.25693933462703749003312586129e+02;
constexpr double d76 = -0.15418974869023643374053993627e+03;
constexpr double d77 = -0.23152937917604549567536039109e+03;
constexpr double d78 = 0.35763911791061412378285349910e+03;
constexpr double d79 = 0.93405324183624310003907691704e+02;
constexpr double d710 = -0.37458323136451633156875139351e+02;
constexpr double d711 = 0.10409964950896230045147246184e+03;
constexpr double d712 = 0.29840293426660503123344363579e+02;
constexpr double d713 = -0.43533456590011143754432175058e+02;
constexpr double d714 = 0.96324553959188282948394950600e+02;
constexpr double d715 = -0.39177261675615439165231486172e+02;
constexpr double d716 = -0.14972683625798562581422125276e+03;

constexpr double kAlpha = 0.125;
constexpr double kSafe = 0.9;
constexpr double kMinScale = 0.333;
constexpr double kMaxScale = 6.0;
constexpr long kMaxStepsPerSegment = 20'000'000;

template <int N>
using Vec = std::array<double, N>;

void validate_tolerances(const Tolerances& tol) {
    if (!(tol.rel >= 1e-13 && tol.rel <= 1e-6))
        throw std::domain_error("integrate: rel tolerance must lie in [1e-13, 1e-6]");
    if (!(tol.abs > 0.0) || !std::isfinite(tol.abs))
        throw std::domain_error("integrate: abs tolerance must be positive");
}

[[noreturn]] void throw_at(const char* what, double t) {
    std::ostringstream os;
    os << what << " at T = " << t;
    throw numerical_error(os.str());
}

// One forced-mesh segment [t0, t1]; the right-hand side must be smooth on it.
// Emits each leading entry of samples that falls in (t0, t1], consuming it;
// interior sample values come from the dense interpolant, t1 from the step
// endpoint itself. On return y holds the state at t1.
template <int N, class Rhs, class Emit>
void dop853_segment(const Rhs& rhs, double t0, double t1, Vec<N>& y,
                    std::span<const double>& samples, double rel_tol, double abs_tol,
                    const Emit& emit) {
    Vec<N> yp;
    rhs(t0, y, yp);

    double h;
    {
        double s = 0.0;
        for (int i = 0; i < N; ++i) {
            double sc = abs_tol + rel_tol * std::fabs(y[i]);
            s += (yp[i] / sc) * (yp[i] / sc);
        }
        h = s > 0.0 ? std::pow(s / N, -0.0625) : 0.5 * (t1 - t0);
        h = std::min(h, t1 - t0);
    }

    double t = t0;
    bool was_rejected = false;
    long nsteps = 0;
    Vec<N> k2, k3, k4, k5, k6, k7, k8, k9, k10, ynew, ypnew, ya;
    Vec<N> r1, r2, r3, r4, r5, r6, r7, r8;

    while (t < t1) {
        if (++nsteps > kMaxStepsPerSegment) throw_at("integrate: step budget exhausted", t);
        if (h <= 4.0 * kMachEps * std::max({std::fabs(t), std::fabs(t1), 1e-6}))
            throw_at("integrate: step size underflow", t);

        // stretch instead of leaving a sliver smaller than 1% of a step
        bool last = t + 1.01 * h >= t1;
        if (last) h = t1 - t;

        for (int i = 0; i < N; ++i) ya[i] = y[i] + h * (a21 * yp[i]);
        rhs(t + c2 * h, ya, k2);
        for (int i = 0; i < N; ++i) ya[i] = y[i] + h * (a31 * yp[i] + a32 * k2[i]);
        rhs(t + c3 * h, ya, k3);
        for (int i = 0; i < N; ++i) ya[i] = y[i] + h * (a41 * yp[i] + a43 * k3[i]);
        rhs(t + c4 * h, ya, k4);
        for (int i = 0; i < N; ++i) ya[i] = y[i] + h * (a51 * yp[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, ya, k5);
        for (int i = 0; i < N; ++i) ya[i] = y[i] + h * (a61 * yp[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(t + c6 * h, ya, k6);
        for (int i = 0; i < N; ++i)
            ya[i] = y[i] + h * (a71 * yp[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
        rhs(t + c7 * h, ya, k7);
        for (int i = 0; i < N; ++i)
            ya[i] = y[i] + h * (a81 * yp[i] + a84 * k4[i] + a85 * k5[i] + a86 * k6[i] + a87 * k7[i]);
        rhs(t + c8 * h, ya, k8);
        for (int i = 0; i < N; ++i)
            ya[i] = y[i] + h * (a91 * yp[i] + a94 * k4[i] + a95 * k5[i] + a96 * k6[i] +
                                a97 * k7[i] + a98 * k8[i]);
        rhs(t + c9 * h, ya, k9);
        for (int i = 0; i < N; ++i)
            ya[i] = y[i] + h * (a101 * yp[i] + a104 * k4[i] + a105 * k5[i] + a106 * k6[i] +
                                a107 * k7[i] + a108 * k8[i] + a109 * k9[i]);
        rhs(t + c10 * h, ya, k10);
        // stages 11 and 12 reuse the k2/k3 slots, matching the classic layout
        for (int i = 0; i < N; ++i)
            ya[i] = y[i] + h * (a111 * yp[i] + a114 * k4[i] + a115 * k5[i] + a116 * k6[i] +
                                a117 * k7[i] + a118 * k8[i] + a119 * k9[i] + a1110 * k10[i]);
        rhs(t + c11 * h, ya, k2);
        for (int i = 0; i < N; ++i)
            ya[i] = y[i] + h * (a121 * yp[i] + a124 * k4[i] + a125 * k5[i] + a126 * k6[i] +
                                a127 * k7[i] + a128 * k8[i] + a129 * k9[i] + a1210 * k10[i] +
                                a1211 * k2[i]);
        rhs(t + h, ya, k3);
        for (int i = 0; i < N; ++i) {
            k4[i] = b1 * yp[i] + b6 * k6[i] + b7 * k7[i] + b8 * k8[i] + b9 * k9[i] +
                    b10 * k10[i] + b11 * k2[i] + b12 * k3[i];
            ynew[i] = y[i] + h * k4[i];
        }

        double err3 = 0.0, err5 = 0.0;
        for (int i = 0; i < N; ++i) {
            double sc = abs_tol + rel_tol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
            double e3 = k4[i] - e31 * yp[i] - e32 * k9[i] - e33 * k3[i];
            double e5 = e51 * yp[i] + e56 * k6[i] + e57 * k7[i] + e58 * k8[i] + e59 * k9[i] +
                        e510 * k10[i] + e511 * k2[i] + e512 * k3[i];
            err3 += (e3 / sc) * (e3 / sc);
            err5 += (e5 / sc) * (e5 / sc);
        }
        double deno = err5 + 0.01 * err3;
        if (deno <= 0.0) deno = 1.0;
        double err = h * err5 * std::sqrt(1.0 / (N * deno));

        if (!(err < 1.0)) {
            h *= std::isfinite(err) ? std::max(kSafe * std::pow(err, -kAlpha), kMinScale)
                                    : kMinScale;
            was_rejected = true;
            continue;
        }

        double tnew = last ? t1 : t + h;
        rhs(tnew, ynew, ypnew);

        bool dense_ready = false;
        while (!samples.empty() && samples.front() <= tnew) {
            double ts = samples.front();
            samples = samples.subspan(1);
            if (ts == tnew) {
                emit(tnew, ynew);
                continue;
            }
            if (!dense_ready) {
                for (int i = 0; i < N; ++i) {
                    r1[i] = y[i];
                    r2[i] = ynew[i] - y[i];
                    r3[i] = h * yp[i] - r2[i];
                    r4[i] = r2[i] - h * ypnew[i] - r3[i];
                    r5[i] = d41 * yp[i] + d46 * k6[i] + d47 * k7[i] + d48 * k8[i] +
                            d49 * k9[i] + d410 * k10[i] + d411 * k2[i] + d412 * k3[i];
                    r6[i] = d51 * yp[i] + d56 * k6[i] + d57 * k7[i] + d58 * k8[i] +
                            d59 * k9[i] + d510 * k10[i] + d511 * k2[i] + d512 * k3[i];
                    r7[i] = d61 * yp[i] + d66 * k6[i] + d67 * k7[i] + d68 * k8[i] +
                            d69 * k9[i] + d610 * k10[i] + d611 * k2[i] + d612 * k3[i];
                    r8[i] = d71 * yp[i] + d76 * k6[i] + d77 * k7[i] + d78 * k8[i] +
                            d79 * k9[i] + d710 * k10[i] + d711 * k2[i] + d712 * k3[i];
                }
                for (int i = 0; i < N; ++i)
                    ya[i] = y[i] + h * (a141 * yp[i] + a147 * k7[i] + a148 * k8[i] +
                                        a149 * k9[i] + a1410 * k10[i] + a1411 * k2[i] +
                                        a1412 * k3[i] + a1413 * ypnew[i]);
                rhs(t + c14 * h, ya, k10);
                for (int i = 0; i < N; ++i)
                    ya[i] = y[i] + h * (a151 * yp[i] + a156 * k6[i] + a157 * k7[i] +
                                        a158 * k8[i] + a1511 * k2[i] + a1512 * k3[i] +
                                        a1513 * ypnew[i] + a1514 * k10[i]);
                rhs(t + c15 * h, ya, k2);
                for (int i = 0; i < N; ++i)
                    ya[i] = y[i] + h * (a161 * yp[i] + a166 * k6[i] + a167 * k7[i] +
                                        a168 * k8[i] + a169 * k9[i] + a1613 * ypnew[i] +
                                        a1614 * k10[i] + a1615 * k2[i]);
                rhs(t + c16 * h, ya, k3);
                for (int i = 0; i < N; ++i) {
                    r5[i] = h * (r5[i] + d413 * ypnew[i] + d414 * k10[i] + d415 * k2[i] +
                                 d416 * k3[i]);
                    r6[i] = h * (r6[i] + d513 * ypnew[i] + d514 * k10[i] + d515 * k2[i] +
                                 d516 * k3[i]);
                    r7[i] = h * (r7[i] + d613 * ypnew[i] + d614 * k10[i] + d615 * k2[i] +
                                 d616 * k3[i]);
                    r8[i] = h * (r8[i] + d713 * ypnew[i] + d714 * k10[i] + d715 * k2[i] +
                                 d716 * k3[i]);
                }
                dense_ready = true;
            }
            double s = (ts - t) / h;
            double s1 = 1.0 - s;
            for (int i = 0; i < N; ++i) {
                double q6 = r7[i] + s * r8[i];
                double q5 = r6[i] + q6 * s1;
                double q4 = r5[i] + q5 * s;
                double q3 = r4[i] + q4 * s1;
                double q2 = r3[i] + q3 * s;
                double q1 = r2[i] + q2 * s1;
                ya[i] = r1[i] + s * q1;
            }
            emit(ts, ya);
        }

        double scale = std::clamp(kSafe * std::pow(err, -kAlpha), kMinScale, kMaxScale);
        if (was_rejected) scale = std::min(scale, 1.0);
        was_rejected = false;
        h *= scale;
        t = tnew;
        y = ynew;
        yp = ypnew;
    }
}

// Splits [start, T_end] at the profile's zeros, restarting the stepper at
// each so the kink of f never sits inside a step.
template <int N, class Rhs, class Emit>
void integrate_piecewise(const FrequencyProfile& profile, const Rhs& rhs,
                         std::span<const double> samples, Vec<N> y, const Tolerances& tol,
                         const Emit& emit) {
    validate_tolerances(tol);
    if (samples.empty()) throw std::invalid_argument("integrate: no sample times given");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i]))
            throw std::invalid_argument("integrate: nonfinite sample time");
        if (i > 0 && !(samples[i] > samples[i - 1]))
            throw std::invalid_argument("integrate: sample times must strictly increase");
    }
    const double start = profile.start_time();
    if (samples.front() < start)
        throw std::domain_error("integrate: sample time before the profile start");
    if (!(samples.back() > start))
        throw std::domain_error("integrate: end time must exceed the profile start");

    if (samples.front() == start) {
        emit(start, y);
        samples = samples.subspan(1);
    }
    const double t_end = samples.back();

    std::vector<double> cuts{start};
    if (t_end > -1.0) {
        for (const auto& zc : zero_crossings(profile, t_end))
            if (zc.time > start && zc.time < t_end) cuts.push_back(zc.time);
    }
    cuts.push_back(t_end);

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        dop853_segment<N>(rhs, cuts[i], cuts[i + 1], y, samples, tol.rel, tol.abs, emit);
}

void validate_G(double G, const char* who) {
    if (!(G > 0.0) || !std::isfinite(G))
        throw std::domain_error(std::string(who) + ": G must be positive");
}

}  // namespace

std::vector<ClassicalState> integrate_classical(const FrequencyProfile& profile, double G,
                                                double phi0, std::span<const double> sample_times,
                                                const Tolerances& tol) {
    validate_G(G, "integrate_classical");
    if (!std::isfinite(phi0)) throw std::domain_error("integrate_classical: nonfinite phase");
    auto rhs = [&profile, G](double t, const Vec<2>& y, Vec<2>& dy) {
        dy[0] = y[1];
        dy[1] = -G * G * f_value(profile, t) * y[0];
    };
    std::vector<ClassicalState> out;
    out.reserve(sample_times.size());
    Vec<2> y{std::cos(phi0), G * std::sin(phi0)};
    integrate_piecewise<2>(profile, rhs, sample_times, y, tol,
                           [&out](double t, const Vec<2>& s) { out.push_back({t, s[0], s[1]}); });
    return out;
}

std::vector<ModeState> integrate_mode(const FrequencyProfile& profile, double G,
                                      std::span<const double> sample_times,
                                      const Tolerances& tol) {
    validate_G(G, "integrate_mode");
    auto rhs = [&profile, G](double t, const Vec<4>& y, Vec<4>& dy) {
        double fv = f_value(profile, t);
        dy[0] = G * y[2];
        dy[1] = G * y[3];
        dy[2] = -G * fv * y[0];
        dy[3] = -G * fv * y[1];
    };
    std::vector<ModeState> out;
    out.reserve(sample_times.size());
    Vec<4> y{1.0, 0.0, 0.0, 1.0};
    integrate_piecewise<4>(profile, rhs, sample_times, y, tol, [&out](double t, const Vec<4>& s) {
        ModeState m{t, {s[0], s[1]}, {s[2], s[3]}};
        if (wronskian_residual(m) > 1e-6)
            throw_at("integrate_mode: Wronskian drift beyond 1e-6, run untrustworthy", t);
        out.push_back(m);
    });
    return out;
}

double wronskian_residual(const ModeState& state) {
    return std::fabs(2.0 * std::imag(state.deps * std::conj(state.eps)) - 2.0);
}

double energy_ratio(const FrequencyProfile& profile, double G, const ClassicalState& state) {
    double v = state.dXdT / G;
    return f_value(profile, state.T) * state.X * state.X + v * v;
}

double mode_energy_ratio(const FrequencyProfile& profile, double /*G*/, const ModeState& state) {
    return 0.5 * (f_value(profile, state.T) * std::norm(state.eps) + std::norm(state.deps));
}

PhaseEnsemble phase_ensemble(const FrequencyProfile& profile, double G, double T, int K,
                             const Tolerances& tol, int jobs) {
    if (K < 8) throw std::domain_error("phase_ensemble: K must be at least 8");
    validate_G(G, "phase_ensemble");
    validate_tolerances(tol);
    const double start = profile.start_time();
    if (!(T >= start) || !std::isfinite(T))
        throw std::domain_error("phase_ensemble: T before the profile start");

    PhaseEnsemble out;
    out.samples.assign(static_cast<std::size_t>(K), 0.0);
    std::vector<std::string> failure(static_cast<std::size_t>(K));
    std::vector<char> failed(static_cast<std::size_t>(K), 0);

    auto work = [&](int k) {
        double phi = 2.0 * M_PI * k / K;
        try {
            if (T == start) {
                // The ratio of the starting energy to itself; evaluating the
                // R formula here would only add one ulp of phase-grid noise.
                out.samples[k] = 1.0;
            } else {
                auto states = integrate_classical(profile, G, phi, std::span(&T, 1), tol);
                out.samples[k] = energy_ratio(profile, G, states.front());
            }
        } catch (const std::exception& e) {
            failed[k] = 1;
            failure[k] = e.what();
        }
    };

    int nthreads = std::clamp(jobs, 1, K);
    if (nthreads <= 1) {
        for (int k = 0; k < K; ++k) work(k);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int w = 0; w < nthreads; ++w)
            pool.emplace_back([&] {
                for (int k = next.fetch_add(1); k < K; k = next.fetch_add(1)) work(k);
            });
        for (auto& th : pool) th.join();
    }

    for (int k = 0; k < K; ++k) {
        if (failed[k]) {
            std::ostringstream os;
            os << "phase_ensemble: sample " << k << " (phi = " << 2.0 * M_PI * k / K
               << ") failed: " << failure[k];
            throw numerical_error(os.str());
        }
    }

    double sum = 0.0;
    out.min = out.samples[0];
    out.max = out.samples[0];
    for (double r : out.samples) {
        sum += r;
        out.min = std::min(out.min, r);
        out.max = std::max(out.max, r);
    }
    out.mean = sum / K;
    return out;
}

BogoliubovPair extract_bogoliubov(const ModeState& mode, double omega, double phi) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::domain_error("extract_bogoliubov: omega must be positive");
    if (!std::isfinite(phi)) throw std::domain_error("extract_bogoliubov: nonfinite phase");
    double root = std::sqrt(omega);
    std::complex<double> a = root * mode.eps;
    std::complex<double> b = mode.deps / root;
    std::complex<double> ib(-b.imag(), b.real());
    std::complex<double> rot = std::polar(1.0, -phi);
    return {0.5 * rot * (a - ib), 0.5 * std::conj(rot) * (a + ib)};
}

double ermakov_residual(std::span<const ModeState> series, const FrequencyProfile& profile,
                        double G) {
    validate_G(G, "ermakov_residual");
    if (series.size() < 3)
        throw std::invalid_argument("ermakov_residual: need at least three points");
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < series.size(); ++i) {
        double hm = series[i].T - series[i - 1].T;
        double hp = series[i + 1].T - series[i].T;
        if (!(hm > 0.0) || !(hp > 0.0))
            throw std::invalid_argument("ermakov_residual: times must strictly increase");
        double rm = std::abs(series[i - 1].eps);
        double r0 = std::abs(series[i].eps);
        double rp = std::abs(series[i + 1].eps);
        double dd = 2.0 * (rm / (hm * (hm + hp)) - r0 / (hm * hp) + rp / (hp * (hm + hp)));
        double res = dd / (G * G) + f_value(profile, series[i].T) * r0 - 1.0 / (r0 * r0 * r0);
        worst = std::max(worst, std::fabs(res));
    }
    return worst;
}

std::vector<double> linspace(double a, double b, int count) {
    if (count < 2) throw std::invalid_argument("linspace: count must be at least 2");
    if (!std::isfinite(a) || !std::isfinite(b) || !(b > a))
        throw std::invalid_argument("linspace: need finite a < b");
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out[i] = a + (b - a) * i / (count - 1);
    out.back() = b;
    return out;
}

}  // namespace zerocross
