// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/baire.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "lpbaire/errors.hpp"

namespace lpbaire {

long cantor_pair(long a, long b) {
    if (a < 0 || b < 0) throw Error("cantor_pair: negative argument");
    unsigned long long s = static_cast<unsigned long long>(a) + static_cast<unsigned long long>(b);
    if (s > 3037000498ULL) throw Error("cantor_pair: overflow");
    unsigned long long z = s * (s + 1) / 2 + static_cast<unsigned long long>(b);
    if (z > static_cast<unsigned long long>(std::numeric_limits<long>::max()))
        throw Error("cantor_pair: overflow");
    return static_cast<long>(z);
}

std::pair<long, long> cantor_unpair(long z) {
    if (z < 0) throw Error("cantor_unpair: negative argument");
    // s = floor((sqrt(8z+1)-1)/2), then b = z - s(s+1)/2, a = s - b.
    unsigned long long uz = static_cast<unsigned long long>(z);
    unsigned long long s = 0;
    {
        long double approx = (sqrtl(8.0L * static_cast<long double>(uz) + 1.0L) - 1.0L) / 2.0L;
        s = static_cast<unsigned long long>(approx);
        while (s * (s + 1) / 2 > uz) --s;
        while ((s + 1) * (s + 2) / 2 <= uz) ++s;
    }
    unsigned long long b = uz - s * (s + 1) / 2;
    unsigned long long a = s - b;
    return {static_cast<long>(a), static_cast<long>(b)};
}

namespace {
std::mutex g_root_mutex;
std::map<unsigned, std::pair<Rational, Rational>> g_root_cache;

std::pair<Rational, Rational> two_pi_root_bounds(unsigned p) {
    if (p < 1) throw Error("two_pi_root: p must be >= 1");
    {
        std::lock_guard<std::mutex> lock(g_root_mutex);
        auto it = g_root_cache.find(p);
        if (it != g_root_cache.end()) return it->second;
    }
    IntervalReal two_pi = IntervalReal::pi(128).mul_rational(Rational(2));
    IntervalReal root = two_pi.rootn(p);
    // (2*pi)^(1/p) > 1 for every p, so clamping the lower bound at 1 is safe
    // and keeps theta = O(2^-n) bounded.
    Rational lb = max(Rational(1), root.lo_rational());
    Rational ub = root.hi_rational();
    std::pair<Rational, Rational> out{lb, ub};
    std::lock_guard<std::mutex> lock(g_root_mutex);
    g_root_cache.emplace(p, out);
    return out;
}
}  // namespace

Rational two_pi_root_lb(unsigned p) { return two_pi_root_bounds(p).first; }
Rational two_pi_root_ub(unsigned p) { return two_pi_root_bounds(p).second; }

RationalBall avoid_singleton(const RationalBall& ball, const ApproximationScheme& target) {
    ball.validate();
    if (ball.p != target.p()) throw MixedP("avoid_singleton: ball and scheme disagree on p");
    const unsigned p = ball.p;

    Rational eps_lb = ball.radius.lower_bound_rational();
    if (eps_lb.sign() <= 0) throw Error("avoid_singleton: degenerate radius bound");
    // Smallest n with 2^-n < eps_lb/8, i.e. 2^n > 8/eps_lb.
    long n = exp2_exceeding(Rational(8) / eps_lb);
    if (n < 0) n = 0;
    Rational u = Rational::pow2(-n);

    RationalStepFunction phi = target.at(n);
    Rational theta = Rational(4) * u / two_pi_root_lb(p);

    // Push every piece of the center away from phi by theta; ties move up.
    RefinedPair r = common_refinement(ball.center, phi);
    std::vector<Rational> vals(r.f_values.size());
    for (size_t i = 0; i < vals.size(); ++i) {
        int side = (r.f_values[i] - r.g_values[i]).sign();
        vals[i] = r.f_values[i] + (side >= 0 ? theta : -theta);
    }
    RationalBall out{RationalStepFunction(std::move(r.breakpoints), std::move(vals)),
                     PiLinear::from_rational(u), p};

    // Exact post-verification.  d(center', phi) = (theta + |c - phi|)-mix
    // >= theta * (2 pi)^(1/p) >= 4u, so d(limit, center') >= 3u > u = radius;
    // certified below by d(phi, center') > 2u.  Containment has slack
    // d(c, center') + u <= theta * ub + u <~ 5.01 u < 8u <= eps_lb.
    if (!ball_subset(out, ball))
        throw Error("avoid_singleton: containment postcondition failed");
    if (norm_compare(phi, out.center, p, PiLinear::from_rational(Rational(2) * u)) != Cmp::Greater)
        throw Error("avoid_singleton: exclusion postcondition failed");
    return out;
}

MeagerWitness singleton_witness(const ApproximationScheme& target, std::string desc) {
    MeagerWitness w;
    w.avoider = [target](const RationalBall& ball, long) {
        return avoid_singleton(ball, target);
    };
    w.piece_desc = [desc = std::move(desc)](long) { return std::string("{") + desc + "}"; };
    return w;
}

MeagerWitness union_witness(std::vector<MeagerWitness> members) {
    if (members.empty()) throw Error("union_witness: empty member list");
    auto shared = std::make_shared<std::vector<MeagerWitness>>(std::move(members));
    MeagerWitness w;
    w.avoider = [shared](const RationalBall& ball, long i) {
        auto [a, b] = cantor_unpair(i);
        return (*shared)[static_cast<size_t>(a) % shared->size()].avoider(ball, b);
    };
    w.piece_desc = [shared](long i) {
        auto [a, b] = cantor_unpair(i);
        return (*shared)[static_cast<size_t>(a) % shared->size()].piece_desc(b);
    };
    return w;
}

MeagerWitness union_witness(std::function<MeagerWitness(long)> member, std::string family_desc) {
    MeagerWitness w;
    w.avoider = [member](const RationalBall& ball, long i) {
        auto [a, b] = cantor_unpair(i);
        return member(a).avoider(ball, b);
    };
    w.piece_desc = [member, family_desc = std::move(family_desc)](long i) {
        auto [a, b] = cantor_unpair(i);
        return family_desc + "[" + std::to_string(a) + "]: " + member(a).piece_desc(b);
    };
    return w;
}

void validate_move(const RationalBall& in, const RationalBall& out, bool require_halving,
                   long round, const std::string& offender) {
    const unsigned r = static_cast<unsigned>(round);
    if (out.p != in.p) throw StrategyContractViolation("changed p", r, offender);
    if (out.radius.sign() <= 0)
        throw StrategyContractViolation("nonpositive radius", r, offender);
    if (!ball_subset(out, in))
        throw StrategyContractViolation("response not contained in input ball", r, offender);
    if (require_halving) {
        PiLinear half = in.radius.scaled(Rational(1, 2));
        if (out.radius.compare(half) != Cmp::Less)
            throw StrategyContractViolation("response radius not halved", r, offender);
    }
}

}  // namespace lpbaire
