#pragma once

#include "intalg/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace intalg {

struct CheckFailure {
    int sample;  // -1 for deterministic preliminary checks
    std::string detail;
};

// Outcome of sampling one identity over a structure: which identity, how
// many samples, the seed (so a failure is reproducible) and the list of
// violations with both sides printed.
struct CheckReport {
    std::string axiom;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<CheckFailure> failures;

    bool pass() const { return failures.empty(); }
};

// The structures below are duck-typed: Elem, weight(), zero(), one(),
// add, sub, mul, scalar(Rational, e), D(e), P(e), equal(a, b),
// random(rng), show(e). Equality is exact, or precision-bounded when the
// structure declares truncation semantics.

namespace detail {

template <typename S, typename Pred>
CheckReport run_pair_check(const S& s, const std::string& axiom, int n, std::uint64_t seed, Pred&& pred) {
    CheckReport rep{axiom, n, seed, {}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n; ++i) {
        auto x = s.random(rng);
        auto y = s.random(rng);
        if (auto fail = pred(x, y))
            rep.failures.push_back({i, "x = " + s.show(x) + ", y = " + s.show(y) + "; " + *fail});
    }
    return rep;
}

template <typename S>
std::optional<std::string> expect_equal(const S& s, const typename S::Elem& lhs, const typename S::Elem& rhs,
                                        const char* what) {
    if (s.equal(lhs, rhs)) return std::nullopt;
    return std::string(what) + ": lhs = " + s.show(lhs) + ", rhs = " + s.show(rhs);
}

template <typename S>
typename S::Elem j_of(const S& s, const typename S::Elem& x) {
    return s.P(s.D(x));
}

template <typename S>
typename S::Elem e_of(const S& s, const typename S::Elem& x) {
    return s.sub(x, s.P(s.D(x)));
}

}  // namespace detail

// D(xy) = D(x)y + xD(y) + weight*D(x)D(y), and D(1) = 0.
template <typename S>
CheckReport check_derivation(const S& s, int n, std::uint64_t seed) {
    CheckReport rep = detail::run_pair_check(s, "derivation", n, seed, [&](const auto& x, const auto& y) {
        auto lhs = s.D(s.mul(x, y));
        auto rhs = s.add(s.add(s.mul(s.D(x), y), s.mul(x, s.D(y))),
                         s.scalar(s.weight(), s.mul(s.D(x), s.D(y))));
        return detail::expect_equal(s, lhs, rhs, "weighted Leibniz rule");
    });
    if (auto fail = detail::expect_equal(s, s.D(s.one()), s.zero(), "D(1) = 0"))
        rep.failures.push_back({-1, *fail});
    return rep;
}

// P(x)P(y) = P(xP(y)) + P(P(x)y) + weight*P(xy)
template <typename S>
CheckReport check_rota_baxter(const S& s, int n, std::uint64_t seed) {
    return detail::run_pair_check(s, "rota_baxter", n, seed, [&](const auto& x, const auto& y) {
        auto lhs = s.mul(s.P(x), s.P(y));
        auto rhs = s.add(s.add(s.P(s.mul(x, s.P(y))), s.P(s.mul(s.P(x), y))),
                         s.scalar(s.weight(), s.P(s.mul(x, y))));
        return detail::expect_equal(s, lhs, rhs, "Rota-Baxter identity");
    });
}

// D(P(x)) = x
template <typename S>
CheckReport check_section(const S& s, int n, std::uint64_t seed) {
    return detail::run_pair_check(s, "section", n, seed, [&](const auto& x, const auto&) {
        return detail::expect_equal(s, s.D(s.P(x)), x, "section identity");
    });
}

// P(D(x))P(D(y)) = P(D(x))y + xP(D(y)) - P(D(xy)); note no weight term
template <typename S>
CheckReport check_hybrid(const S& s, int n, std::uint64_t seed) {
    return detail::run_pair_check(s, "hybrid", n, seed, [&](const auto& x, const auto& y) {
        auto jx = detail::j_of(s, x);
        auto jy = detail::j_of(s, y);
        auto lhs = s.mul(jx, jy);
        auto rhs = s.sub(s.add(s.mul(jx, y), s.mul(x, jy)), s.P(s.D(s.mul(x, y))));
        return detail::expect_equal(s, lhs, rhs, "hybrid Rota-Baxter identity");
    });
}

// RHS - LHS of the hybrid identity at specific inputs
template <typename S>
typename S::Elem hybrid_gap(const S& s, const typename S::Elem& x, const typename S::Elem& y) {
    auto jx = detail::j_of(s, x);
    auto jy = detail::j_of(s, y);
    auto rhs = s.sub(s.add(s.mul(jx, y), s.mul(x, jy)), s.P(s.D(s.mul(x, y))));
    return s.sub(rhs, s.mul(jx, jy));
}

// The equivalent characterizations of the integro-differential property
// for a structure that satisfies the section axiom, with J = PD and
// E = id - J:
//   b: E(xy) = E(x)E(y)
//   c: im J is an ideal, sampled as E(J(x) y) = 0
//   d: J(xJ(y)) = xJ(y) and J(J(x)y) = J(x)y
//   e: J(xP(y)) = xP(y) and J(P(x)y) = P(x)y
//   f: xP(y) = P(D(x)P(y)) + P(xy) + weight*P(D(x)y), and mirrored
//   g: P(E(x)y) = E(x)P(y), and mirrored
//   h: J(E(x)J(y)) = E(x)J(y), and mirrored
template <typename S>
CheckReport check_characterization(const S& s, char item, int n, std::uint64_t seed) {
    auto both = [&](std::optional<std::string> a, std::optional<std::string> b) {
        return a ? a : b;
    };
    switch (item) {
        case 'b':
            return detail::run_pair_check(s, "char_b", n, seed, [&](const auto& x, const auto& y) {
                return detail::expect_equal(s, detail::e_of(s, s.mul(x, y)),
                                            s.mul(detail::e_of(s, x), detail::e_of(s, y)),
                                            "evaluation multiplicative");
            });
        case 'c':
            return detail::run_pair_check(s, "char_c", n, seed, [&](const auto& x, const auto& y) {
                return detail::expect_equal(s, detail::e_of(s, s.mul(detail::j_of(s, x), y)), s.zero(),
                                            "im J an ideal");
            });
        case 'd':
            return detail::run_pair_check(s, "char_d", n, seed, [&](const auto& x, const auto& y) {
                auto jy = detail::j_of(s, y);
                auto jx = detail::j_of(s, x);
                return both(detail::expect_equal(s, detail::j_of(s, s.mul(x, jy)), s.mul(x, jy),
                                                 "J-invariance (right)"),
                            detail::expect_equal(s, detail::j_of(s, s.mul(jx, y)), s.mul(jx, y),
                                                 "J-invariance (left)"));
            });
        case 'e':
            return detail::run_pair_check(s, "char_e", n, seed, [&](const auto& x, const auto& y) {
                auto py = s.P(y);
                auto px = s.P(x);
                return both(detail::expect_equal(s, detail::j_of(s, s.mul(x, py)), s.mul(x, py),
                                                 "P-invariance (right)"),
                            detail::expect_equal(s, detail::j_of(s, s.mul(px, y)), s.mul(px, y),
                                                 "P-invariance (left)"));
            });
        case 'f':
            return detail::run_pair_check(s, "char_f", n, seed, [&](const auto& x, const auto& y) {
                auto lhs1 = s.mul(x, s.P(y));
                auto rhs1 = s.add(s.add(s.P(s.mul(s.D(x), s.P(y))), s.P(s.mul(x, y))),
                                  s.scalar(s.weight(), s.P(s.mul(s.D(x), y))));
                auto lhs2 = s.mul(s.P(x), y);
                auto rhs2 = s.add(s.add(s.P(s.mul(s.P(x), s.D(y))), s.P(s.mul(x, y))),
                                  s.scalar(s.weight(), s.P(s.mul(x, s.D(y)))));
                return both(detail::expect_equal(s, lhs1, rhs1, "integration by parts (right)"),
                            detail::expect_equal(s, lhs2, rhs2, "integration by parts (left)"));
            });
        case 'g':
            return detail::run_pair_check(s, "char_g", n, seed, [&](const auto& x, const auto& y) {
                auto ex = detail::e_of(s, x);
                auto ey = detail::e_of(s, y);
                return both(detail::expect_equal(s, s.P(s.mul(ex, y)), s.mul(ex, s.P(y)),
                                                 "P linear over evaluations (left)"),
                            detail::expect_equal(s, s.P(s.mul(x, ey)), s.mul(s.P(x), ey),
                                                 "P linear over evaluations (right)"));
            });
        case 'h':
            return detail::run_pair_check(s, "char_h", n, seed, [&](const auto& x, const auto& y) {
                auto ex = detail::e_of(s, x);
                auto ey = detail::e_of(s, y);
                auto jy = detail::j_of(s, y);
                auto jx = detail::j_of(s, x);
                return both(detail::expect_equal(s, detail::j_of(s, s.mul(ex, jy)), s.mul(ex, jy),
                                                 "J linear over evaluations (left)"),
                            detail::expect_equal(s, detail::j_of(s, s.mul(jx, ey)), s.mul(jx, ey),
                                                 "J linear over evaluations (right)"));
            });
        default:
            throw std::invalid_argument(std::string("check_characterization: unknown item '") + item + "'");
    }
}

// Named identities:
//   rba_IJ:       P(x)P(y) = J(P(x)P(y))
//   rba_J:        J(x)J(y) = J(J(x)J(y))
//   proj_lemma:   per sample, E multiplicative at (x, y) iff J satisfies
//                 the weight -1 Leibniz rule at (x, y)
//   subalg_lemma: S(xy) = S(S(x)y + xS(y) - S(x)S(y)) for S = DP
template <typename S>
CheckReport check_lemma_identity(const S& s, const std::string& which, int n, std::uint64_t seed) {
    if (which == "rba_IJ") {
        return detail::run_pair_check(s, "rba_IJ", n, seed, [&](const auto& x, const auto& y) {
            auto pp = s.mul(s.P(x), s.P(y));
            return detail::expect_equal(s, pp, detail::j_of(s, pp), "products of integrals initialized");
        });
    }
    if (which == "rba_J") {
        return detail::run_pair_check(s, "rba_J", n, seed, [&](const auto& x, const auto& y) {
            auto jj = s.mul(detail::j_of(s, x), detail::j_of(s, y));
            return detail::expect_equal(s, jj, detail::j_of(s, jj), "products of initializations initialized");
        });
    }
    if (which == "proj_lemma") {
        return detail::run_pair_check(s, "proj_lemma", n, seed, [&](const auto& x, const auto& y) -> std::optional<std::string> {
            bool e_mult = s.equal(detail::e_of(s, s.mul(x, y)), s.mul(detail::e_of(s, x), detail::e_of(s, y)));
            auto jx = detail::j_of(s, x);
            auto jy = detail::j_of(s, y);
            auto leibniz = s.sub(s.add(s.mul(jx, y), s.mul(x, jy)), s.mul(jx, jy));
            bool j_der = s.equal(detail::j_of(s, s.mul(x, y)), leibniz);
            if (e_mult == j_der) return std::nullopt;
            return std::string("projector lemma: E multiplicative = ") + (e_mult ? "yes" : "no") +
                   " but J weight -1 derivation = " + (j_der ? "yes" : "no");
        });
    }
    if (which == "subalg_lemma") {
        return detail::run_pair_check(s, "subalg_lemma", n, seed, [&](const auto& x, const auto& y) {
            auto s_op = [&](const auto& e) { return s.D(s.P(e)); };
            auto lhs = s_op(s.mul(x, y));
            auto inner = s.sub(s.add(s.mul(s_op(x), y), s.mul(x, s_op(y))), s.mul(s_op(x), s_op(y)));
            return detail::expect_equal(s, lhs, s_op(inner), "transcendental part a subalgebra");
        });
    }
    throw std::invalid_argument("check_lemma_identity: unknown identity '" + which + "'");
}

}  // namespace intalg
