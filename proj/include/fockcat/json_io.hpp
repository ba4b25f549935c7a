#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "fockcat/diagrams.hpp"
#include "fockcat/evolution.hpp"
#include "fockcat/groupoid.hpp"
#include "fockcat/phased.hpp"
#include "fockcat/series.hpp"
#include "fockcat/species.hpp"
#include "fockcat/stuff_type.hpp"
#include "fockcat/weyl.hpp"

namespace fockcat {

using Json = nlohmann::json;

inline constexpr std::size_t kJsonPointExpansionCap = 10000;

inline Json to_json(const Rational& r) { return r.to_string(); }

inline Json to_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const PhasedScalar& x) {
    Json terms = Json::array();
    for (const auto& t : x.terms()) {
        Json term;
        term["mag"] = t.magnitude.to_string();
        if (t.angle.is_exact())
            term["turns"] = t.angle.exact_turns().to_string();
        else
            term["radians"] = t.angle.to_radians();
        terms.push_back(std::move(term));
    }
    return terms;
}

/// Scalars in series coefficients: plain rationals render as "p/q" strings,
/// genuinely phased values as term arrays.
inline Json scalar_to_json(const PhasedScalar& x) {
    if (x.is_rational()) return x.to_rational().to_string();
    return to_json(x);
}

inline Json to_json(const PowerSeries<Rational>& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.to_string());
    return Json{{"truncation", s.truncation()}, {"coeffs", std::move(coeffs)}};
}

inline Json to_json(const PowerSeries<PhasedScalar>& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(scalar_to_json(c));
    return Json{{"truncation", s.truncation()}, {"coeffs", std::move(coeffs)}};
}

inline Json to_json(const SkeletalGroupoid& g) {
    Json points = Json::array();
    std::size_t expanded = 0;
    for (const auto& p : g.points()) {
        if (!p.multiplicity.fits_u64() ||
            (expanded += p.multiplicity.to_u64()) > kJsonPointExpansionCap)
            throw Error(ErrorCode::Size, "groupoid too large to serialize point by point");
        Json point;
        point["mass"] = p.mass.to_string();
        if (p.phase.is_zero())
            point["phase_turns"] = nullptr;
        else if (p.phase.is_exact())
            point["phase_turns"] = p.phase.exact_turns().to_string();
        else {
            point["phase_turns"] = nullptr;
            point["phase_radians"] = p.phase.to_radians();
        }
        point["tag"] = p.tag.empty() ? Json(nullptr) : Json(p.tag);
        for (std::uint64_t i = 0; i < p.multiplicity.to_u64(); ++i) points.push_back(point);
    }
    return Json{{"points", std::move(points)}};
}

/// Debug form of a truncated Fock matrix: row-major [re, im] pairs.
inline Json to_json(const FockMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dimension(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"dimension", m.dimension()}, {"entries", std::move(rows)}};
}

inline Json to_json(const Species& s) {
    Json counts = Json::array();
    for (const auto& c : s.counts()) counts.push_back(c.to_decimal());
    return Json{{"truncation", s.truncation()}, {"counts", std::move(counts)}};
}

inline Json to_json(const StuffType& t) {
    Json fibers = Json::array();
    for (std::size_t n = 0; n <= t.truncation(); ++n) {
        Json fiber = to_json(t.fiber(n));
        fibers.push_back(Json{{"n", n}, {"points", std::move(fiber["points"])}});
    }
    return Json{{"truncation", t.truncation()}, {"fibers", std::move(fibers)}};
}

/// Endpoint encoding for diagram dumps: ["in",i] | ["out",i] | ["v",vi,leg].
inline Json endpoint_to_json(const DiagramShape& shape, std::uint8_t id) {
    int v = shape.vertex_of(id);
    if (v == -1) return Json::array({"in", id});
    if (v == -2) return Json::array({"out", id - shape.out_base()});
    return Json::array({"v", v, id - shape.vertex_base(static_cast<std::size_t>(v))});
}

inline Json to_json(const DiagramGroupoid& g) {
    DiagramShape shape(g.out_points, g.in_points, g.valences);
    Json classes = Json::array();
    for (const auto& c : g.classes) {
        Json edges = Json::array();
        for (auto [a, b] : c.representative.edges())
            edges.push_back(Json::array({endpoint_to_json(shape, a), endpoint_to_json(shape, b)}));
        classes.push_back(Json{{"edges", std::move(edges)},
                               {"aut", c.aut_order.to_decimal()},
                               {"orbit", c.orbit_size.to_decimal()}});
    }
    return Json{{"k", g.out_points},
                {"l", g.in_points},
                {"valences", g.valences},
                {"classes", std::move(classes)},
                {"labelled_count", g.labelled_count.to_decimal()},
                {"cardinality", g.cardinality.to_string()}};
}

inline Json to_json(const PerturbationReport& r) {
    Json orders = Json::array();
    for (const auto& o : r.orders) {
        Json channels = Json::array();
        for (const auto& c : o.channels)
            channels.push_back(Json{{"intermediate", c.intermediate},
                                    {"diagram_weight", c.diagram_weight.to_string()},
                                    {"matrix_coefficient", to_json(c.matrix_coefficient)},
                                    {"delta", c.delta}});
        orders.push_back(Json{{"order", o.order},
                              {"dyson_term", to_json(o.dyson_term)},
                              {"channels", std::move(channels)},
                              {"diagrams", to_json(o.diagrams)}});
    }
    return Json{{"k", r.k},
                {"l", r.l},
                {"valence", r.valence},
                {"coupling", r.coupling},
                {"orders", std::move(orders)},
                {"dyson_total", to_json(r.dyson_total)},
                {"exact", to_json(r.exact)},
                {"oracle_delta", r.oracle_delta}};
}

inline Json error_to_json(const Error& e) {
    Json j{{"error", Json{{"code", e.code_name()}, {"message", e.what()}}}};
    if (e.position()) j["error"]["position"] = *e.position();
    return j;
}

}  // namespace fockcat
