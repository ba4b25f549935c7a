#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "fockcat/diagrams.hpp"
#include "fockcat/error.hpp"
#include "fockcat/stuff_type.hpp"
#include "fockcat/weyl.hpp"

namespace fockcat {

/// The free propagator acting on stuff types: each energy quantum picks up
/// the same phase per unit of time. The exponent sign is explicit: -1 gives
/// e^{-iTN}, which is the convention every numeric oracle here uses; +1
/// gives its inverse.
struct FreeEvolution {
    Angle per_quantum = Angle::zero();
    int exponent_sign = -1;

    static FreeEvolution for_time(double t, int sign = -1) {
        return {Angle::radians(t), sign};
    }
    static FreeEvolution for_turns(Rational turns, int sign = -1) {
        return {Angle::turns(std::move(turns)), sign};
    }

    Angle effective_angle() const {
        return exponent_sign >= 0 ? per_quantum : per_quantum.negated();
    }
    StuffType apply(const StuffType& psi) const { return free_evolve(psi, effective_angle()); }
    FreeEvolution inverse() const { return {per_quantum, -exponent_sign}; }
};

/// Perturbed-oscillator problem description: H = N + V with
/// V = sum_m g_m phi^m / m!.
struct PerturbationSpec {
    std::vector<std::pair<std::uint32_t, double>> potential;
    double total_time = 0.0;
    std::uint32_t dyson_order = 2;
    std::size_t fock_cutoff = 16;
    std::size_t quadrature_nodes = 32;
    bool allow_low_degree = false; // tests exercise quadratic toy potentials

    std::uint32_t max_degree() const {
        std::uint32_t m = 0;
        for (const auto& [deg, g] : potential)
            if (g != 0.0) m = std::max(m, deg);
        return m;
    }

    void validate() const {
        for (const auto& [deg, g] : potential)
            if (g != 0.0 && deg < 3 && !allow_low_degree)
                throw Error(ErrorCode::Input,
                            "potential degree below 3 double-counts the free oscillator energy");
        if (dyson_order > 4)
            throw Error(ErrorCode::Size, "dyson order above 4 is not supported");
        if (quadrature_nodes < 2)
            throw Error(ErrorCode::Input, "need at least two quadrature nodes");
        if (total_time < 0.0)
            throw Error(ErrorCode::Input,
                        "negative time: evolve the conjugate state forward instead");
    }

    void require_cutoff(std::uint32_t k, std::uint32_t l) const {
        std::size_t needed = k + l + static_cast<std::size_t>(dyson_order) * max_degree();
        if (fock_cutoff < needed)
            throw Error(ErrorCode::Cutoff, "fock cutoff too small for the requested amplitude");
    }
};

namespace detail {

inline FockMatrix potential_matrix(const PerturbationSpec& spec, std::size_t cutoff) {
    FockMatrix v(cutoff + 1);
    if (spec.potential.empty()) return v;
    FockMatrix phi = to_matrix(WeylElement::field(), cutoff);
    FockMatrix power = FockMatrix::identity(cutoff + 1);
    std::uint32_t done = 0;
    std::vector<std::pair<std::uint32_t, double>> sorted = spec.potential;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [deg, g] : sorted) {
        while (done < deg) {
            power = power * phi;
            ++done;
        }
        if (g != 0.0) v = v + power.scaled({g / factorial(deg).to_double(), 0.0});
    }
    return v;
}

inline FockMatrix hamiltonian_matrix(const PerturbationSpec& spec, std::size_t cutoff) {
    FockMatrix h = potential_matrix(spec, cutoff);
    for (std::size_t n = 0; n <= cutoff; ++n) h.at(n, n) += static_cast<double>(n);
    return h;
}

/// Gauss-Legendre nodes and weights on [-1,1], by Newton iteration on the
/// Legendre recurrence.
inline void gauss_legendre(std::size_t n, std::vector<double>& nodes,
                           std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(3.14159265358979323846 * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (std::size_t j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

using CVector = std::vector<std::complex<double>>;

/// row (bra) times the interaction-picture potential at time t:
/// out = bra . D(-t) V D(t) with D(t) = diag e^{-i t n}.
inline CVector bra_interaction_step(const CVector& bra, const FockMatrix& v, double t) {
    std::size_t dim = v.dimension();
    CVector tmp(dim), out(dim);
    for (std::size_t n = 0; n < dim; ++n)
        tmp[n] = bra[n] * std::exp(std::complex<double>(0.0, t * static_cast<double>(n)));
    for (std::size_t j = 0; j < dim; ++j) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = 0; i < dim; ++i) acc += tmp[i] * v.at(i, j);
        out[j] = acc * std::exp(std::complex<double>(0.0, -t * static_cast<double>(j)));
    }
    return out;
}

}  // namespace detail

/// <e_k, exp(-iT(N+V)) e_l> by dense matrix exponential, with a
/// cutoff-sensitivity check: the value must be stable under cutoff+4.
inline std::complex<double> exact_amplitude(std::uint32_t k, std::uint32_t l,
                                            const PerturbationSpec& spec) {
    spec.validate();
    spec.require_cutoff(k, l);
    auto amplitude_at = [&](std::size_t cutoff) {
        FockMatrix h = detail::hamiltonian_matrix(spec, cutoff);
        FockMatrix u = matrix_exp(h.scaled({0.0, -1.0}), spec.total_time);
        // H is Hermitian so U must be unitary; columns losing norm signal a
        // broken exponential.
        double norm = 0;
        for (std::size_t r = 0; r <= cutoff; ++r) norm += std::norm(u.at(r, l));
        if (std::abs(norm - 1.0) > 1e-8)
            throw Error(ErrorCode::Cutoff, "matrix exponential lost unitarity");
        return u.at(k, l);
    };
    std::complex<double> base = amplitude_at(spec.fock_cutoff);
    std::complex<double> refined = amplitude_at(spec.fock_cutoff + 4);
    if (std::abs(base - refined) > 1e-6)
        throw Error(ErrorCode::Cutoff, "amplitude is cutoff-sensitive; raise fock_cutoff");
    return base;
}

/// Per-order contributions of the truncated Dyson series
///   sum_n (-i)^n int_{0<=t_1<=...<=t_n<=T} <e_k| e^{-i(T-t_n)N} V ... V e^{-i t_1 N} |e_l>,
/// evaluated with iterated Gauss-Legendre over the ordered simplex.
inline std::vector<std::complex<double>> dyson_order_terms(std::uint32_t k, std::uint32_t l,
                                                           const PerturbationSpec& spec) {
    spec.validate();
    spec.require_cutoff(k, l);
    std::size_t cutoff = spec.fock_cutoff;
    FockMatrix v = detail::potential_matrix(spec, cutoff);
    std::vector<double> nodes, weights;
    detail::gauss_legendre(spec.quadrature_nodes, nodes, weights);

    std::complex<double> free_phase =
        std::exp(std::complex<double>(0.0, -spec.total_time * static_cast<double>(k)));
    std::vector<std::complex<double>> terms;
    terms.push_back(k == l ? free_phase : std::complex<double>{0.0, 0.0});

    detail::CVector bra0(cutoff + 1, {0.0, 0.0});
    bra0[k] = 1.0;
    for (std::uint32_t order = 1; order <= spec.dyson_order; ++order) {
        // S = int over the simplex of <e_k| Vt(t_order) ... Vt(t_1) |e_l>,
        // peeled outermost first so partial bras are shared across subtrees.
        auto rec = [&](auto&& self, std::uint32_t level, double upper,
                       const detail::CVector& bra) -> std::complex<double> {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t q = 0; q < nodes.size(); ++q) {
                double t = 0.5 * upper * (nodes[q] + 1.0);
                double w = 0.5 * upper * weights[q];
                detail::CVector next = detail::bra_interaction_step(bra, v, t);
                if (level == 1)
                    acc += w * next[l];
                else
                    acc += w * self(self, level - 1, t, next);
            }
            return acc;
        };
        std::complex<double> simplex = rec(rec, order, spec.total_time, bra0);
        std::complex<double> prefactor = free_phase;
        for (std::uint32_t r = 0; r < order; ++r) prefactor *= std::complex<double>(0.0, -1.0);
        terms.push_back(prefactor * simplex);
    }
    return terms;
}

inline std::complex<double> dyson_amplitude(std::uint32_t k, std::uint32_t l,
                                            const PerturbationSpec& spec) {
    std::complex<double> total{0.0, 0.0};
    for (const auto& t : dyson_order_terms(k, l, spec)) total += t;
    return total;
}

/// One intermediate-energy channel of a Dyson term compared against the
/// diagram enumeration: the time-independent weight extracted from the
/// operator content must equal the class-sum 1/aut weight.
struct DiagramWeightCheck {
    std::vector<std::uint32_t> intermediate; // energies between vertices
    Rational diagram_weight;
    std::complex<double> matrix_coefficient;
    double delta = 0.0;
};

struct PerturbationOrderReport {
    std::uint32_t order = 0;
    std::complex<double> dyson_term;
    std::vector<DiagramWeightCheck> channels;
    DiagramGroupoid diagrams;
};

struct PerturbationReport {
    std::uint32_t k = 0, l = 0;
    std::uint32_t valence = 0;
    double coupling = 0.0;
    std::vector<PerturbationOrderReport> orders;
    std::complex<double> dyson_total;
    std::complex<double> exact;
    double oracle_delta = 0.0;
};

/// Cross-tabulates the Dyson integrand of a monomial potential g phi^m / m!
/// against diagram enumerations with one vertex per order. Orders 0..2.
inline PerturbationReport perturbation_diagram_expansion(std::uint32_t k, std::uint32_t l,
                                                         const PerturbationSpec& spec) {
    spec.validate();
    if (spec.dyson_order > 2)
        throw Error(ErrorCode::Size, "diagram expansion reports cover dyson order <= 2");
    std::vector<std::pair<std::uint32_t, double>> monomials;
    for (const auto& [deg, g] : spec.potential)
        if (g != 0.0) monomials.push_back({deg, g});
    if (monomials.size() != 1)
        throw Error(ErrorCode::Input,
                    "diagram expansion needs a monomial potential; run it per monomial");
    auto [m, g] = monomials.front();
    spec.require_cutoff(k, l);

    PerturbationReport report;
    report.k = k;
    report.l = l;
    report.valence = m;
    report.coupling = g;

    double sqrt_kl = std::sqrt(factorial(k).to_double() * factorial(l).to_double());
    FockMatrix v = detail::potential_matrix(spec, spec.fock_cutoff);
    auto terms = dyson_order_terms(k, l, spec);

    for (std::uint32_t order = 0; order <= spec.dyson_order; ++order) {
        PerturbationOrderReport rep;
        rep.order = order;
        rep.dyson_term = terms[order];
        if (order == 0) {
            DiagramWeightCheck c;
            c.diagram_weight = k == l ? Rational(1) : Rational(0); // bare strands only
            c.matrix_coefficient = k == l ? 1.0 : 0.0;
            c.delta = std::abs(c.matrix_coefficient -
                               std::complex<double>(c.diagram_weight.to_double(), 0.0));
            rep.channels.push_back(std::move(c));
            rep.diagrams = enumerate_diagrams(k, l, {});
            Rational bare = rep.diagrams.cardinality *
                            Rational(Integer(1), factorial(k)); // strip the k! of <Z^k,Z^k>
            if (k == l && bare != Rational(1))
                throw Error(ErrorCode::Size, "bare diagram weight mismatch");
        } else if (order == 1) {
            DiagramWeightCheck c;
            c.intermediate = {};
            c.diagram_weight = vev(k, l, {m});
            c.matrix_coefficient = v.at(k, l) * sqrt_kl / g;
            c.delta =
                std::abs(c.matrix_coefficient -
                         std::complex<double>(c.diagram_weight.to_double(), 0.0));
            rep.channels.push_back(std::move(c));
            rep.diagrams = enumerate_diagrams(k, l, {m});
        } else {
            rep.diagrams = enumerate_diagrams(k, l, {m, m});
            for (std::uint32_t j = 0; j <= std::min<std::size_t>(spec.fock_cutoff, l + m); ++j) {
                Rational weight = vev(k, j, {m}) * vev(j, l, {m}) *
                                  Rational(Integer(1), factorial(j));
                std::complex<double> coeff =
                    v.at(k, j) * v.at(j, l) * sqrt_kl / (g * g);
                if (weight.is_zero() && std::abs(coeff) < 1e-12) continue;
                DiagramWeightCheck c;
                c.intermediate = {j};
                c.diagram_weight = weight;
                c.matrix_coefficient = coeff;
                c.delta = std::abs(coeff - std::complex<double>(weight.to_double(), 0.0));
                rep.channels.push_back(std::move(c));
            }
        }
        report.orders.push_back(std::move(rep));
    }

    report.dyson_total = {0.0, 0.0};
    for (const auto& t : terms) report.dyson_total += t;
    report.exact = exact_amplitude(k, l, spec);
    report.oracle_delta = std::abs(report.dyson_total - report.exact);
    return report;
}

}  // namespace fockcat
