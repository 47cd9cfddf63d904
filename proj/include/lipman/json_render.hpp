#pragma once

// JSON rendering of reports.  Keys are emitted in nlohmann's default
// (alphabetical) order, so equal reports serialize to identical bytes and
// parse/re-dump round-trips are stable.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lipman/divisor_model.hpp"
#include "lipman/int_matrix.hpp"
#include "lipman/lipman_api.hpp"

namespace lipman {

namespace detail {

// Report integers are emitted as JSON numbers; anything beyond int64 would
// lose precision silently, so refuse instead (unreachable at sane sizes).
inline std::int64_t json_int(const Int& v) {
    if (!v.fits_slong_p())
        throw Error("integer too large for JSON number output: " + v.get_str());
    return static_cast<std::int64_t>(v.get_si());
}

inline nlohmann::json json_vector(const IntVector& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& x : v) arr.push_back(json_int(x));
    return arr;
}

inline nlohmann::json json_matrix(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// exact rationals as {"den": "...", "num": "..."} decimal-digit strings
inline nlohmann::json json_rational(const Rational& r) {
    nlohmann::json obj;
    obj["num"] = r.get_num().get_str();
    obj["den"] = r.get_den().get_str();
    return obj;
}

// rays as a list of columns: rays[i] = F_i
inline nlohmann::json json_rays(const RaySystem& rs) {
    nlohmann::json cols = nlohmann::json::array();
    for (std::size_t i = 0; i < rs.rays.cols(); ++i) {
        nlohmann::json col = nlohmann::json::array();
        for (std::size_t j = 0; j < rs.rays.rows(); ++j)
            col.push_back(json_rational(rs.rays(j, i)));
        cols.push_back(std::move(col));
    }
    return cols;
}

inline nlohmann::json json_multipliers(const RaySystem& rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& g : rs.multipliers) arr.push_back(json_int(g));
    return arr;
}

}  // namespace detail

// Full report.  wall_time_ms is attached only on request (timed output is
// inherently non-reproducible; default output stays byte-deterministic).
inline nlohmann::json report_to_json(const LipmanReport& report,
                                     bool include_wall_time = false,
                                     std::int64_t wall_time_ms = 0) {
    nlohmann::json j;
    j["n"] = static_cast<std::int64_t>(report.matrix.n());
    j["matrix"] = detail::json_matrix(report.matrix.matrix());
    nlohmann::json gens = nlohmann::json::array();
    for (const Divisor& g : report.generators)
        gens.push_back(detail::json_vector(g.coeffs));
    j["generators"] = std::move(gens);
    nlohmann::json vals = nlohmann::json::array();
    for (const ValueVector& d : report.value_parts)
        vals.push_back(detail::json_vector(d.values));
    j["value_parts"] = std::move(vals);
    j["rays"] = detail::json_rays(report.rays);
    j["multipliers"] = detail::json_multipliers(report.rays);
    j["fundamental_cycle"] = detail::json_vector(report.fundamental_cycle.coeffs);
    nlohmann::json par = nlohmann::json::array();
    for (const IntVector& e : report.parametrization.exponent_vectors)
        par.push_back(detail::json_vector(e));
    j["parametrization"] = std::move(par);
    nlohmann::json stats;
    stats["node_expansions"] =
        static_cast<std::int64_t>(report.stats.node_expansions);
    if (include_wall_time) stats["wall_time_ms"] = wall_time_ms;
    j["stats"] = std::move(stats);
    return j;
}

inline std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace lipman
