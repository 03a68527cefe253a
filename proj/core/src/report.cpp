#include "nichols/report.hpp"

#include <chrono>

#include "nichols/catalog.hpp"
#include "nichols/diagram_io.hpp"

namespace nichols {

namespace {

nlohmann::ordered_json root_json(const Root& r) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (int v : r) a.push_back(v);
    return a;
}

nlohmann::ordered_json point_json(const GroupoidBundle& b, int x) {
    const auto& p = b.points[x];
    nlohmann::ordered_json j;
    j["index"] = x;
    j["diagram"] = diagram_to_json(p.rep);
    nlohmann::ordered_json cm = nlohmann::ordered_json::array();
    for (int i = 0; i < b.theta; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int k = 0; k < b.theta; ++k) row.push_back(p.cartan.at(i, k));
        cm.push_back(std::move(row));
    }
    j["cartan_matrix"] = std::move(cm);
    nlohmann::ordered_json roots = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < p.positive.size(); ++i) {
        nlohmann::ordered_json r;
        r["root"] = format_root(p.positive[i]);
        r["vector"] = root_json(p.positive[i]);
        if (p.heights[i])
            r["height"] = *p.heights[i];
        else
            r["height"] = "inf";
        r["cartan"] = static_cast<bool>(p.cartan_flag[i]);
        roots.push_back(std::move(r));
    }
    j["positive_roots"] = std::move(roots);
    auto d = dimension_report(b, x);
    if (d.dim) {
        j["dimension"] = d.dim->str();
        j["gk_dimension"] = 0;
        j["integral_degree"] = root_json(integral_degree(b, x));
    } else {
        j["dimension"] = "inf";
        j["gk_dimension"] = d.gk;
        j["integral_degree"] = nullptr;
    }
    return j;
}

}  // namespace

nlohmann::ordered_json roots_report(const GroupoidBundle& b) {
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (std::size_t x = 0; x < b.points.size(); ++x)
        points.push_back(point_json(b, static_cast<int>(x)));
    return points;
}

nlohmann::ordered_json analyze_report(const BraidingMatrix& q, const AnalyzeOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    nlohmann::ordered_json j;
    j["input"] = diagram_to_json(q);
    j["theta"] = q.theta();
    j["connected"] = is_connected(q);
    try {
        GroupoidBundle b = enumerate_groupoid(q.twist_class(), opts.caps);
        j["status"] = "arithmetic";
        j["n_points"] = b.points.size();
        j["points"] = roots_report(b);
        j["isotropy_order"] = isotropy_order(b, 0).str();
        if (opts.recognize) {
            nlohmann::ordered_json hits = nlohmann::ordered_json::array();
            for (const auto& h : Catalog::instance().recognize(q, opts.caps)) {
                nlohmann::ordered_json hit;
                hit["label"] = h.label;
                hit["params"] = h.params;
                hit["point"] = h.point;
                hits.push_back(std::move(hit));
            }
            j["recognized"] = std::move(hits);
        }
    } catch (const cap_exceeded_error& e) {
        j["status"] = e.what();
    } catch (const not_admissible_error& e) {
        j["status"] = std::string("not admissible: ") + e.what();
    }
    if (opts.include_timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        j["timing_ms"] = ms;
    }
    return j;
}

}  // namespace nichols
