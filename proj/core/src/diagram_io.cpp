#include "nichols/diagram_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace nichols {

namespace {

ScalarContext context_from_json(const nlohmann::json& j) {
    if (!j.contains("zeta_order")) throw diagram_io_error("missing zeta_order");
    std::int64_t M = j.at("zeta_order").get<std::int64_t>();
    std::optional<std::int64_t> N;
    bool inf = false;
    if (j.contains("q_order")) {
        const auto& qo = j.at("q_order");
        if (qo.is_string()) {
            if (qo.get<std::string>() != "inf") throw diagram_io_error("q_order must be an integer or \"inf\"");
            inf = true;
        } else {
            N = qo.get<std::int64_t>();
        }
    }
    return ScalarContext::make(M, N, inf);
}

}  // namespace

BraidingMatrix parse_diagram_json(const nlohmann::json& j) {
    ScalarContext ctx = context_from_json(j);
    if (!j.contains("theta")) throw diagram_io_error("missing theta");
    int theta = j.at("theta").get<int>();
    if (theta < 1) throw diagram_io_error("theta must be >= 1");

    std::vector<Scalar> entries(static_cast<std::size_t>(theta) * theta, scalar_one());
    if (j.contains("matrix")) {
        const auto& m = j.at("matrix");
        if (static_cast<int>(m.size()) != theta) throw diagram_io_error("matrix row count != theta");
        for (int i = 0; i < theta; ++i) {
            if (static_cast<int>(m[i].size()) != theta) throw diagram_io_error("matrix column count != theta");
            for (int k = 0; k < theta; ++k)
                entries[static_cast<std::size_t>(i) * theta + k] =
                    parse_scalar(m[i][k].get<std::string>(), ctx);
        }
    } else if (j.contains("diagonal")) {
        const auto& diag = j.at("diagonal");
        if (static_cast<int>(diag.size()) != theta) throw diagram_io_error("diagonal length != theta");
        for (int i = 0; i < theta; ++i)
            entries[static_cast<std::size_t>(i) * theta + i] = parse_scalar(diag[i].get<std::string>(), ctx);
        if (j.contains("edges")) {
            for (const auto& e : j.at("edges")) {
                int a = e.at("i").get<int>(), b = e.at("j").get<int>();
                if (a < 1 || b < 1 || a > theta || b > theta || a == b)
                    throw diagram_io_error("bad edge endpoints");
                int lo = std::min(a, b) - 1, hi = std::max(a, b) - 1;
                entries[static_cast<std::size_t>(lo) * theta + hi] =
                    parse_scalar(e.at("label").get<std::string>(), ctx);
            }
        }
    } else {
        throw diagram_io_error("diagram needs either \"matrix\" or \"diagonal\"");
    }
    try {
        return BraidingMatrix(ctx, theta, std::move(entries));
    } catch (const braiding_error& e) {
        throw diagram_io_error(e.what());
    }
}

BraidingMatrix parse_diagram_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw diagram_io_error(std::string("JSON parse error: ") + e.what());
    }
    return parse_diagram_json(j);
}

BraidingMatrix parse_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw diagram_io_error("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_diagram_text(text);
}

nlohmann::ordered_json diagram_to_json(const BraidingMatrix& q) {
    nlohmann::ordered_json j;
    const auto& ctx = q.ctx();
    j["zeta_order"] = ctx.declared_torsion;
    if (ctx.parameter_infinite)
        j["q_order"] = "inf";
    else if (ctx.has_parameter)
        j["q_order"] = ctx.parameter_order;
    j["theta"] = q.theta();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < q.theta(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int k = 0; k < q.theta(); ++k) row.push_back(print_scalar(ctx, q.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    return j;
}

}  // namespace nichols
