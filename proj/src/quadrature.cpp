#include "quadrature.h"

#include <array>
#include <cfloat>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "errors.h"

namespace zerocross {

namespace {

constexpr int kFineN = 16;  // 17 nodes; the 9-node coarse rule uses the even ones
constexpr double kPi = 3.141592653589793238462643383279;

struct CCRules {
    std::array<double, kFineN + 1> node;
    std::array<double, kFineN + 1> fine_w;
    std::array<double, kFineN / 2 + 1> coarse_w;
};

// Clenshaw-Curtis weights on [-1, 1] for even n:
//   w_k = (c_k/n) [1 - sum_{j=1}^{n/2} b_j cos(2 j theta_k) / (4 j^2 - 1)]
// with c_k = 1 at the endpoints and 2 inside, b_j = 1 at j = n/2 and 2 below.
template <int N>
std::array<double, N + 1> cc_weights() {
    std::array<double, N + 1> w{};
    for (int k = 0; k <= N; ++k) {
        double theta = kPi * k / N;
        double s = 1.0;
        for (int j = 1; j <= N / 2; ++j) {
            double bj = (j == N / 2) ? 1.0 : 2.0;
            s -= bj * std::cos(2.0 * j * theta) / (4.0 * j * j - 1.0);
        }
        double ck = (k == 0 || k == N) ? 1.0 : 2.0;
        w[k] = ck * s / N;
    }
    return w;
}

const CCRules& rules() {
    static const CCRules r = [] {
        CCRules cc;
        for (int k = 0; k <= kFineN; ++k) cc.node[k] = std::cos(kPi * k / kFineN);
        cc.fine_w = cc_weights<kFineN>();
        cc.coarse_w = cc_weights<kFineN / 2>();
        return cc;
    }();
    return r;
}

struct Piece {
    double a;
    double b;
    double value;
    double err;
};

Piece evaluate_piece(const std::function<double(double)>& f, double a, double b) {
    const CCRules& r = rules();
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double fine = 0.0;
    double coarse = 0.0;
    for (int k = 0; k <= kFineN; ++k) {
        double v = f(mid + half * r.node[k]);
        fine += r.fine_w[k] * v;
        if (k % 2 == 0) coarse += r.coarse_w[k / 2] * v;
    }
    fine *= half;
    coarse *= half;
    return {a, b, fine, std::fabs(fine - coarse)};
}

struct WorstFirst {
    bool operator()(const Piece& p, const Piece& q) const {
        if (p.err != q.err) return p.err < q.err;
        return p.a > q.a;  // deterministic tie-break
    }
};

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol) {
    if (a == b) return 0.0;

    constexpr int kMaxPieces = 20000;
    std::priority_queue<Piece, std::vector<Piece>, WorstFirst> queue;
    queue.push(evaluate_piece(f, a, b));
    double total_value = queue.top().value;
    double total_err = queue.top().err;
    int pieces = 1;

    while (total_err > rel_tol * std::fabs(total_value) + DBL_MIN) {
        if (pieces >= kMaxPieces) {
            std::ostringstream msg;
            msg << "integrate_adaptive: subdivision budget exhausted, achieved error estimate "
                << total_err << " on integral " << total_value;
            throw numerical_error(msg.str());
        }
        Piece worst = queue.top();
        queue.pop();
        double mid = 0.5 * (worst.a + worst.b);
        Piece left = evaluate_piece(f, worst.a, mid);
        Piece right = evaluate_piece(f, mid, worst.b);
        total_value += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        queue.push(left);
        queue.push(right);
        ++pieces;
    }
    return total_value;
}

}  // namespace zerocross
