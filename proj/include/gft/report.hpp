#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "boundary.hpp"
#include "io.hpp"
#include "jack.hpp"
#include "theorems.hpp"

// JSON and CSV forms of reports. Complex numbers are [re, im] arrays,
// absent optionals are null, field names follow the struct members.

namespace gft {

using Json = nlohmann::ordered_json;

inline Json to_json_complex(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw ConfigError("complex value must be a two-element array");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

template <class T>
Json optional_json(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const Json& j)
{
    if (j.is_null())
        return std::nullopt;
    return j.get<T>();
}

inline Json to_json(const SupEstimate& s)
{
    return Json{{"value", s.value},
                {"argmax", to_json_complex(s.argmax)},
                {"radius", s.radius},
                {"samples_used", s.samples_used}};
}

inline SupEstimate sup_from_json(const Json& j)
{
    return {j.at("value").get<double>(), complex_from_json(j.at("argmax")), j.at("radius").get<double>(),
            j.at("samples_used").get<std::size_t>()};
}

inline Json to_json(const SamplingConfig& c)
{
    return Json{{"angular_samples", c.angular_samples},
                {"refine_iters", c.refine_iters},
                {"radius_schedule", c.radius_schedule},
                {"epsilon", c.epsilon},
                {"inner_cutoff", c.inner_cutoff}};
}

inline SamplingConfig sampling_from_json(const Json& j)
{
    SamplingConfig c;
    c.angular_samples = j.at("angular_samples").get<std::size_t>();
    c.refine_iters = j.at("refine_iters").get<std::size_t>();
    c.radius_schedule = j.at("radius_schedule").get<std::vector<double>>();
    c.epsilon = j.at("epsilon").get<double>();
    c.inner_cutoff = j.at("inner_cutoff").get<double>();
    return c;
}

inline Json to_json(const TheoremReport& r)
{
    Json pts = Json::array();
    for (auto z : r.points)
        pts.push_back(to_json_complex(z));
    return Json{{"theorem_id", r.theorem_id},
                {"n", r.n},
                {"alpha", to_json_complex(r.alpha)},
                {"rho", r.rho},
                {"points", pts},
                {"hypothesis_bound", r.hypothesis_bound},
                {"hypothesis_sup", to_json(r.hypothesis_sup)},
                {"hypothesis_ok", r.hypothesis_ok},
                {"hypothesis_margin", r.hypothesis_margin},
                {"conclusion_bound", r.conclusion_bound},
                {"conclusion_sup", to_json(r.conclusion_sup)},
                {"conclusion_ok", r.conclusion_ok},
                {"m_alpha", optional_json(r.m_alpha)},
                {"corollary1_bound", optional_json(r.corollary1_bound)},
                {"univalent_implied", r.univalent_implied},
                {"limits_at_zero", optional_json(r.limits_at_zero)},
                {"ray_tol", optional_json(r.ray_tol)},
                {"ray_min_distance", optional_json(r.ray_min_distance)},
                {"alpha_in_image_checked", r.alpha_in_image_checked},
                {"counterexample", r.counterexample},
                {"example_id", optional_json(r.example_id)},
                {"example_chain", r.example_chain},
                {"example_expr_bound", optional_json(r.example_expr_bound)},
                {"chain_ok", optional_json(r.chain_ok)},
                {"config_echo", to_json(r.config_echo)}};
}

inline TheoremReport report_from_json(const Json& j)
{
    TheoremReport r;
    r.theorem_id = j.at("theorem_id").get<int>();
    r.n = j.at("n").get<int>();
    r.alpha = complex_from_json(j.at("alpha"));
    r.rho = j.at("rho").get<double>();
    for (const auto& p : j.at("points"))
        r.points.push_back(complex_from_json(p));
    r.hypothesis_bound = j.at("hypothesis_bound").get<double>();
    r.hypothesis_sup = sup_from_json(j.at("hypothesis_sup"));
    r.hypothesis_ok = j.at("hypothesis_ok").get<bool>();
    r.hypothesis_margin = j.at("hypothesis_margin").get<double>();
    r.conclusion_bound = j.at("conclusion_bound").get<double>();
    r.conclusion_sup = sup_from_json(j.at("conclusion_sup"));
    r.conclusion_ok = j.at("conclusion_ok").get<bool>();
    r.m_alpha = optional_from_json<double>(j.at("m_alpha"));
    r.corollary1_bound = optional_from_json<double>(j.at("corollary1_bound"));
    r.univalent_implied = j.at("univalent_implied").get<bool>();
    r.limits_at_zero = optional_from_json<double>(j.at("limits_at_zero"));
    r.ray_tol = optional_from_json<double>(j.at("ray_tol"));
    r.ray_min_distance = optional_from_json<double>(j.at("ray_min_distance"));
    r.alpha_in_image_checked = j.at("alpha_in_image_checked").get<bool>();
    r.counterexample = j.at("counterexample").get<bool>();
    r.example_id = optional_from_json<int>(j.at("example_id"));
    r.example_chain = j.at("example_chain").get<std::vector<double>>();
    r.example_expr_bound = optional_from_json<double>(j.at("example_expr_bound"));
    r.chain_ok = optional_from_json<bool>(j.at("chain_ok"));
    r.config_echo = sampling_from_json(j.at("config_echo"));
    return r;
}

namespace detail {

// Flattens nested objects with dotted keys and complex/array values with
// [i] suffixes, preserving field order.
inline void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else if (j.is_null()) {
        out.emplace_back(prefix, "");
    } else if (j.is_number_float()) {
        out.emplace_back(prefix, io::format_real(j.get<double>()));
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

} // namespace detail

/// Header line plus one data row.
inline std::string to_csv(const Json& record)
{
    std::vector<std::pair<std::string, std::string>> cells;
    detail::flatten(record, "", cells);
    std::string header;
    std::string row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) {
            header += ',';
            row += ',';
        }
        header += cells[i].first;
        row += cells[i].second;
    }
    return header + "\n" + row + "\n";
}

inline Json to_json(const ProbeResult& p)
{
    return Json{{"z0", to_json_complex(p.z0)},
                {"k", to_json_complex(p.k)},
                {"second", p.second},
                {"k_real_ok", p.k_real_ok},
                {"k_lower_ok", p.k_lower_ok},
                {"second_ok", p.second_ok},
                {"argmax_valid", p.argmax_valid},
                {"r", p.r},
                {"n", p.n}};
}

inline Json to_json(const ProbeSummary& s, const ProbeSuiteConfig& cfg)
{
    Json fails = Json::array();
    for (const auto& f : s.fail_details) {
        Json coeffs = Json::array();
        for (auto c : f.coeffs)
            coeffs.push_back(to_json_complex(c));
        fails.push_back(Json{{"seed", f.seed},
                             {"trial", f.trial},
                             {"n", f.n},
                             {"r", f.r},
                             {"coeffs", coeffs},
                             {"result", to_json(f.result)}});
    }
    return Json{{"seed", cfg.seed},
                {"trials", cfg.trials},
                {"n_range", {cfg.n_min, cfg.n_max}},
                {"extra_degree_range", {cfg.extra_min, cfg.extra_max}},
                {"radii", cfg.radii},
                {"tol", cfg.tol},
                {"probes", s.probes},
                {"pass_count", s.pass_count},
                {"reruns", s.reruns},
                {"unvalidated", s.unvalidated},
                {"failures", s.fail_details.size()},
                {"fail_details", fails},
                {"config_echo", to_json(cfg.sampling)}};
}

} // namespace gft
