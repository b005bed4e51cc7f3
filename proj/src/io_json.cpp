#include "io_json.hpp"

#include "errors.hpp"

namespace boxhelly {

namespace {

Rational rational_from_json(const nlohmann::json& j, const char* what) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw ParseError(std::string(what) + " must be a rational string or integer, got " + j.dump());
}

}  // namespace

nlohmann::ordered_json family_to_json(const BoxFamily& f) {
    nlohmann::ordered_json j;
    j["dim"] = f.dim();
    if (!f.label().empty()) j["label"] = f.label();
    nlohmann::ordered_json boxes = nlohmann::ordered_json::array();
    for (const Box& b : f.boxes()) {
        nlohmann::ordered_json box = nlohmann::ordered_json::array();
        for (const Interval& iv : b.intervals()) {
            nlohmann::ordered_json rec;
            rec["lo"] = iv.lo().value.str();
            rec["hi"] = iv.hi().value.str();
            rec["lo_open"] = iv.lo().open;
            rec["hi_open"] = iv.hi().open;
            box.push_back(std::move(rec));
        }
        boxes.push_back(std::move(box));
    }
    j["boxes"] = std::move(boxes);
    return j;
}

BoxFamily family_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("family file must be a JSON object");
    if (!j.contains("dim") || !j.at("dim").is_number_integer()) {
        throw ParseError("family file needs an integer \"dim\"");
    }
    const auto dim = j.at("dim").get<std::int64_t>();
    if (dim < 1 || dim > 64) throw ParseError("family dim out of range: " + std::to_string(dim));

    std::string label;
    if (j.contains("label")) {
        if (!j.at("label").is_string()) throw ParseError("family \"label\" must be a string");
        label = j.at("label").get<std::string>();
    }

    if (!j.contains("boxes") || !j.at("boxes").is_array()) {
        throw ParseError("family file needs a \"boxes\" array");
    }

    try {
        BoxFamily family(static_cast<int>(dim), {}, std::move(label));
        std::size_t index = 0;
        for (const auto& jbox : j.at("boxes")) {
            if (!jbox.is_array() || jbox.size() != static_cast<std::size_t>(dim)) {
                throw ParseError("box " + std::to_string(index) + " must list exactly " +
                                 std::to_string(dim) + " intervals");
            }
            std::vector<Interval> intervals;
            intervals.reserve(static_cast<std::size_t>(dim));
            for (const auto& jiv : jbox) {
                if (!jiv.is_object() || !jiv.contains("lo") || !jiv.contains("hi")) {
                    throw ParseError("box " + std::to_string(index) +
                                     ": interval records need \"lo\" and \"hi\"");
                }
                Endpoint lo{rational_from_json(jiv.at("lo"), "lo"),
                            jiv.value("lo_open", false)};
                Endpoint hi{rational_from_json(jiv.at("hi"), "hi"),
                            jiv.value("hi_open", false)};
                intervals.emplace_back(std::move(lo), std::move(hi));
            }
            family.add(Box(std::move(intervals)));
            ++index;
        }
        return family;
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        // Invalid interval/box values are parse failures from the caller's
        // point of view.
        throw ParseError(std::string("invalid family file: ") + e.what());
    }
}

std::string family_to_text(const BoxFamily& f) {
    return family_to_json(f).dump(2) + "\n";
}

BoxFamily family_from_text(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("family file is not valid JSON: ") + e.what());
    }
    return family_from_json(j);
}

}  // namespace boxhelly
