#include "levyopt/model_io.hpp"

#include <fstream>

#include <json.hpp>

namespace levyopt {

namespace {

using nlohmann::ordered_json;

JumpLaw parse_law(const ordered_json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "point") return PointMass{j.at("size").get<double>()};
    if (type == "exp_up") return ExponentialUp{j.at("alpha").get<double>()};
    if (type == "exp_down") return ExponentialDown{j.at("alpha").get<double>()};
    throw InvalidArgument("model json: unknown jump law type '" + type + "'");
}

} // namespace

KilledSpec parse_spec_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("model json: ") + e.what());
    }
    try {
        LevyModel model;
        model.drift = doc.at("drift").get<double>();
        model.gaussian_var = doc.at("gaussian_var").get<double>();
        if (doc.contains("jumps"))
            for (const auto& j : doc.at("jumps"))
                model.jumps.push_back(
                    JumpComponent{j.at("rate").get<double>(), parse_law(j.at("law"))});
        return KilledSpec(std::move(model), doc.at("discount").get<double>());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("model json: ") + e.what());
    }
}

KilledSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open model file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse_spec_json(text);
}

std::string spec_to_json(const KilledSpec& spec) {
    ordered_json doc;
    doc["drift"] = spec.model.drift;
    doc["gaussian_var"] = spec.model.gaussian_var;
    doc["jumps"] = ordered_json::array();
    for (const auto& j : spec.model.jumps) {
        ordered_json law;
        std::visit(
            [&law](const auto& l) {
                using L = std::decay_t<decltype(l)>;
                if constexpr (std::is_same_v<L, PointMass>) {
                    law["type"] = "point";
                    law["size"] = l.size;
                } else if constexpr (std::is_same_v<L, ExponentialUp>) {
                    law["type"] = "exp_up";
                    law["alpha"] = l.alpha;
                } else {
                    law["type"] = "exp_down";
                    law["alpha"] = l.alpha;
                }
            },
            j.law);
        doc["jumps"].push_back(ordered_json{{"rate", j.rate}, {"law", law}});
    }
    doc["discount"] = spec.r;
    return doc.dump(2);
}

} // namespace levyopt
