#include "transitions.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace zerocross {
namespace {

// |u+|^2 - |u-|^2 = 1, allowed to drift at the scale of the norms so long
// compositions are not rejected for honest roundoff.
void require_pair(const BogoliubovPair& pair, const char* fn) {
    const double np = std::norm(pair.u_plus);
    const double nm = std::norm(pair.u_minus);
    if (!std::isfinite(np) || !std::isfinite(nm) ||
        std::fabs(np - nm - 1.0) > 1e-8 * std::max(1.0, np))
        throw std::domain_error(std::string(fn) + ": pair violates the Bogoliubov constraint");
}

std::complex<double> json_complex(const nlohmann::json& node, const char* field,
                                  std::size_t index) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number())
        throw std::domain_error("parse_plan: crossing " + std::to_string(index) + " field " +
                                field + " must be [re, im]");
    const double re = node[0].get<double>();
    const double im = node[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
        throw std::domain_error("parse_plan: crossing " + std::to_string(index) + " field " +
                                field + " must be finite");
    return {re, im};
}

}  // namespace

BogoliubovPair identity_pair() { return {{1.0, 0.0}, {0.0, 0.0}}; }

BogoliubovPair compose_two(const BogoliubovPair& u, const BogoliubovPair& w, double Phi) {
    require_pair(u, "compose_two");
    require_pair(w, "compose_two");
    if (!std::isfinite(Phi)) throw std::domain_error("compose_two: Phi must be finite");
    const std::complex<double> fwd = std::polar(1.0, Phi);
    const std::complex<double> bwd = std::conj(fwd);
    BogoliubovPair out;
    out.u_plus = w.u_plus * u.u_plus * fwd + std::conj(w.u_minus) * u.u_minus * bwd;
    out.u_minus = w.u_minus * u.u_plus * fwd + std::conj(w.u_plus) * u.u_minus * bwd;
    return out;
}

double beta_of(const BogoliubovPair& pair) {
    require_pair(pair, "beta_of");
    return 1.0 + 2.0 * std::norm(pair.u_minus);
}

BetaExtremes beta_extremes(const BogoliubovPair& u, const BogoliubovPair& w) {
    require_pair(u, "beta_extremes");
    require_pair(w, "beta_extremes");
    const double cross_a = std::abs(w.u_plus) * std::abs(u.u_minus);
    const double cross_b = std::abs(w.u_minus) * std::abs(u.u_plus);
    const double lo = cross_a - cross_b;
    const double hi = cross_a + cross_b;
    return {1.0 + 2.0 * lo * lo, 1.0 + 2.0 * hi * hi};
}

BogoliubovPair compose_plan(const CrossingPlan& plan) {
    for (const auto& crossing : plan.crossings) {
        require_pair(crossing.pair, "compose_plan");
        if (!(crossing.Phi_before >= 0.0) || !std::isfinite(crossing.Phi_before))
            throw std::domain_error("compose_plan: Phi_before must be nonnegative");
    }
    if (plan.crossings.empty()) return identity_pair();
    BogoliubovPair acc = plan.crossings.front().pair;
    for (std::size_t i = 1; i < plan.crossings.size(); ++i)
        acc = compose_two(acc, plan.crossings[i].pair, plan.crossings[i].Phi_before);
    return acc;
}

double beta_general(const BogoliubovPair& pair, const MomentState& moments, double omega0) {
    require_pair(pair, "beta_general");
    if (!(omega0 > 0.0) || !std::isfinite(omega0))
        throw std::domain_error("beta_general: omega0 must be positive");
    if (!std::isfinite(moments.xx) || !std::isfinite(moments.pp) ||
        !std::isfinite(moments.xp_sym))
        throw std::domain_error("beta_general: moments must be finite");
    const double energy = 0.5 * (moments.pp + omega0 * omega0 * moments.xx);
    if (!(energy > 0.0)) throw std::domain_error("beta_general: mean energy must be positive");
    const std::complex<double> uu = pair.u_plus * pair.u_minus;
    const double correction = ((omega0 * omega0 * moments.xx - moments.pp) * uu.real() +
                               omega0 * moments.xp_sym * uu.imag()) /
                              energy;
    return beta_of(pair) + correction;
}

CrossingPlan parse_plan(std::string_view text) {
    const nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw std::domain_error("parse_plan: malformed JSON");
    if (!doc.is_object() || !doc.contains("crossings") || !doc["crossings"].is_array())
        throw std::domain_error("parse_plan: expected {\"crossings\": [...]}");
    for (const auto& item : doc.items())
        if (item.key() != "crossings")
            throw std::domain_error("parse_plan: unknown key \"" + item.key() + "\"");

    CrossingPlan plan;
    std::size_t index = 0;
    for (const auto& entry : doc["crossings"]) {
        if (!entry.is_object())
            throw std::domain_error("parse_plan: crossing " + std::to_string(index) +
                                    " must be an object");
        for (const auto& item : entry.items())
            if (item.key() != "u_plus" && item.key() != "u_minus" && item.key() != "phi_before")
                throw std::domain_error("parse_plan: crossing " + std::to_string(index) +
                                        " has unknown key \"" + item.key() + "\"");
        if (!entry.contains("u_plus") || !entry.contains("u_minus") ||
            !entry.contains("phi_before"))
            throw std::domain_error("parse_plan: crossing " + std::to_string(index) +
                                    " needs u_plus, u_minus, phi_before");
        Crossing crossing;
        crossing.pair.u_plus = json_complex(entry["u_plus"], "u_plus", index);
        crossing.pair.u_minus = json_complex(entry["u_minus"], "u_minus", index);
        if (!entry["phi_before"].is_number())
            throw std::domain_error("parse_plan: crossing " + std::to_string(index) +
                                    " phi_before must be a number");
        crossing.Phi_before = entry["phi_before"].get<double>();
        if (!(crossing.Phi_before >= 0.0) || !std::isfinite(crossing.Phi_before))
            throw std::domain_error("parse_plan: crossing " + std::to_string(index) +
                                    " phi_before must be nonnegative");
        require_pair(crossing.pair, "parse_plan");
        plan.crossings.push_back(crossing);
        ++index;
    }
    return plan;
}

}
