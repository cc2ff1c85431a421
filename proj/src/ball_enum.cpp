// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/ball_enum.hpp"

#include "lpbaire/baire.hpp"
#include "lpbaire/errors.hpp"

namespace lpbaire {

mpz_class stern_fusc(unsigned long n) {
    // Gibbons' bit-scan form of Stern's diatomic sequence.
    if (n == 0) return 0;
    int top = 63;
    while (top > 0 && !((n >> top) & 1UL)) --top;
    mpz_class a = 1, b = 0;
    for (int i = top; i >= 0; --i) {
        if ((n >> i) & 1UL)
            b += a;
        else
            a += b;
    }
    return b;
}

Rational enum_positive_rational(long k) {
    if (k < 1) throw Error("enum_positive_rational: index must be >= 1");
    mpz_class num = stern_fusc(static_cast<unsigned long>(k));
    mpz_class den = stern_fusc(static_cast<unsigned long>(k) + 1);
    return Rational(num, den);
}

Rational enum_rational(long i) {
    if (i < 0) throw Error("enum_rational: negative index");
    if (i == 0) return Rational(0);
    long k = (i + 1) / 2;
    Rational q = enum_positive_rational(k);
    return (i % 2 == 1) ? q : -q;
}

namespace {
// Decode index -> list of `count` sub-indices by iterated unpairing:
// the last element is taken whole, the rest split off from the left.
std::vector<long> unpair_list(long payload, size_t count) {
    std::vector<long> out;
    out.reserve(count);
    long rest = payload;
    for (size_t i = 0; i + 1 < count; ++i) {
        auto [head, tail] = cantor_unpair(rest);
        out.push_back(head);
        rest = tail;
    }
    out.push_back(rest);
    return out;
}
}  // namespace

RationalStepFunction enum_step_function(long i) {
    if (i < 0) throw Error("enum_step_function: negative index");
    auto [pieces_minus_1, payload] = cantor_unpair(i);
    size_t k = static_cast<size_t>(pieces_minus_1) + 1;  // piece count >= 1
    auto [gap_payload, value_payload] = cantor_unpair(payload);
    std::vector<long> gap_idx = unpair_list(gap_payload, k);
    std::vector<long> val_idx = unpair_list(value_payload, k);

    std::vector<Rational> gaps(k);
    Rational total(0);
    for (size_t j = 0; j < k; ++j) {
        gaps[j] = enum_positive_rational(gap_idx[j] + 1);
        total += gaps[j];
    }
    std::vector<Rational> bp;
    bp.reserve(k + 1);
    bp.push_back(Rational(0));
    Rational acc(0);
    for (size_t j = 0; j + 1 < k; ++j) {
        acc += gaps[j];
        bp.push_back(Rational(2) * acc / total);
    }
    bp.push_back(Rational(2));

    std::vector<Rational> vals(k);
    for (size_t j = 0; j < k; ++j) vals[j] = enum_rational(val_idx[j]);
    return RationalStepFunction(std::move(bp), std::move(vals));
}

PiLinear enum_radius(long i) {
    if (i < 0) throw Error("enum_radius: negative index");
    Rational q = enum_positive_rational(i / 2 + 1);
    return (i % 2 == 0) ? PiLinear::from_rational(q) : PiLinear::from_pi_multiple(q);
}

RationalBall enum_ball(long i, unsigned p) {
    if (i < 0) throw Error("enum_ball: negative index");
    auto [center_idx, radius_idx] = cantor_unpair(i);
    RationalBall b{enum_step_function(center_idx), enum_radius(radius_idx), p};
    b.validate();
    return b;
}

}  // namespace lpbaire
