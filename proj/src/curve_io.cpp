#include "ect/curve_io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ect {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json rationals_to_json(const std::vector<Rational>& xs) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : xs) arr.push_back(to_string(x));
    return arr;
}

std::vector<Rational> rationals_from_json(const json& arr) {
    std::vector<Rational> out;
    for (const auto& x : arr) out.push_back(parse_rational(x.get<std::string>()));
    return out;
}

ordered_json curve_object(const AnyCurve& curve, const std::optional<Rational>& window) {
    ordered_json obj;
    if (const auto* step = std::get_if<StepCurve>(&curve)) {
        obj["kind"] = "step";
        obj["convention"] = step->continuity() == Continuity::Right ? "right" : "left";
        obj["breakpoints"] = rationals_to_json(step->breakpoints());
        obj["values"] = rationals_to_json(step->values());
    } else {
        const auto& pl = std::get<PiecewiseLinearCurve>(curve);
        obj["kind"] = "pl";
        obj["convention"] = "right";
        obj["breakpoints"] = rationals_to_json(pl.knots());
        obj["values"] = rationals_to_json(pl.values());
    }
    if (window) obj["window"] = to_string(*window);
    return obj;
}

AnyCurve curve_from_object(const json& obj, std::optional<Rational>* window_out = nullptr) {
    std::string kind = obj.at("kind").get<std::string>();
    auto breakpoints = rationals_from_json(obj.at("breakpoints"));
    auto values = rationals_from_json(obj.at("values"));
    if (window_out && obj.contains("window"))
        *window_out = parse_rational(obj.at("window").get<std::string>());
    if (kind == "step") {
        std::string conv = obj.value("convention", "right");
        if (conv != "right" && conv != "left")
            throw std::runtime_error("unknown curve convention '" + conv + "'");
        return StepCurve(std::move(breakpoints), std::move(values),
                         conv == "right" ? Continuity::Right : Continuity::Left);
    }
    if (kind == "pl") return PiecewiseLinearCurve(std::move(breakpoints), std::move(values));
    throw std::runtime_error("unknown curve kind '" + kind + "'");
}

}  // namespace

std::string curve_to_json(const AnyCurve& curve, const std::optional<Rational>& window) {
    return curve_object(curve, window).dump(2) + "\n";
}

AnyCurve curve_from_json(const std::string& text) {
    return curve_from_object(json::parse(text));
}

std::string bundle_to_json(const TransformBundle& bundle) {
    ordered_json obj;
    ordered_json dirs = ordered_json::array();
    for (const auto& v : bundle.directions) dirs.push_back(rationals_to_json(v));
    obj["directions"] = std::move(dirs);
    ordered_json curves = ordered_json::array();
    for (const auto& c : bundle.curves) curves.push_back(curve_object(c, bundle.window));
    obj["curves"] = std::move(curves);
    if (bundle.window) obj["window"] = to_string(*bundle.window);
    obj["source"] = bundle.source;
    obj["convention"] = bundle.convention;
    return obj.dump(2) + "\n";
}

TransformBundle bundle_from_json(const std::string& text) {
    json obj = json::parse(text);
    TransformBundle bundle;
    for (const auto& d : obj.at("directions")) bundle.directions.push_back(rationals_from_json(d));
    for (const auto& c : obj.at("curves")) bundle.curves.push_back(curve_from_object(c));
    if (obj.contains("window"))
        bundle.window = parse_rational(obj.at("window").get<std::string>());
    bundle.source = obj.value("source", "");
    bundle.convention = obj.value("convention", "");
    if (bundle.directions.size() != bundle.curves.size())
        throw std::runtime_error("bundle direction/curve count mismatch");
    return bundle;
}

std::string bundle_to_csv(const TransformBundle& bundle) {
    std::ostringstream out;
    out << "direction,kind,breakpoint,value\n";
    for (std::size_t i = 0; i < bundle.curves.size(); ++i) {
        if (const auto* step = std::get_if<StepCurve>(&bundle.curves[i])) {
            out << i << ",step,-inf," << to_string(step->values().front()) << "\n";
            for (std::size_t j = 0; j < step->breakpoints().size(); ++j)
                out << i << ",step," << to_string(step->breakpoints()[j]) << ","
                    << to_string(step->values()[j + 1]) << "\n";
        } else {
            const auto& pl = std::get<PiecewiseLinearCurve>(bundle.curves[i]);
            for (std::size_t j = 0; j < pl.knots().size(); ++j)
                out << i << ",pl," << to_string(pl.knots()[j]) << ","
                    << to_string(pl.values()[j]) << "\n";
        }
    }
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace ect
