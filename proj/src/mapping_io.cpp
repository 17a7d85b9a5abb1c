#include "qcharm/mapping_io.hpp"

#include <fstream>
#include <stdexcept>

namespace qcharm {

namespace {

nlohmann::json coeffs_to_json(const ComplexSeries& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Complex& c : s.coeffs()) arr.push_back({c.real(), c.imag()});
    return arr;
}

ComplexSeries coeffs_from_json(const nlohmann::json& arr, int order, const char* key) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != order + 1)
        throw std::invalid_argument(std::string("mapping_from_json: '") + key +
                                    "' must hold order+1 [re, im] pairs");
    std::vector<Complex> c;
    c.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2)
            throw std::invalid_argument("mapping_from_json: coefficient entries are [re, im]");
        c.emplace_back(item[0].get<double>(), item[1].get<double>());
    }
    return ComplexSeries(std::move(c));
}

}  // namespace

nlohmann::json mapping_to_json(const HarmonicMapping& f) {
    nlohmann::json j{{"order", f.h.order()},
                     {"h", coeffs_to_json(f.h)},
                     {"g", coeffs_to_json(f.g)}};
    if (f.params) {
        j["alpha"] = f.params->alpha;
        j["lambda"] = {f.params->lambda.real(), f.params->lambda.imag()};
        j["n"] = f.params->n;
    }
    return j;
}

HarmonicMapping mapping_from_json(const nlohmann::json& j, bool strict) {
    const int order = j.at("order").get<int>();
    if (order < 0) throw std::invalid_argument("mapping_from_json: negative order");
    ComplexSeries h = coeffs_from_json(j.at("h"), order, "h");
    ComplexSeries g = coeffs_from_json(j.at("g"), order, "g");
    std::optional<ClassParams> params;
    if (j.contains("alpha") || j.contains("lambda") || j.contains("n")) {
        const auto& lam = j.at("lambda");
        params.emplace(j.at("alpha").get<double>(),
                       Complex(lam.at(0).get<double>(), lam.at(1).get<double>()),
                       j.at("n").get<int>());
    }
    HarmonicMapping f{std::move(h), std::move(g), params};
    if (strict) validate_mapping(f);
    return f;
}

void save_mapping(const HarmonicMapping& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_mapping: cannot open '" + path + "' for writing");
    out << mapping_to_json(f).dump(2) << '\n';
    if (!out) throw std::runtime_error("save_mapping: write to '" + path + "' failed");
}

HarmonicMapping load_mapping(const std::string& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_mapping: cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;
    return mapping_from_json(j, strict);
}

}  // namespace qcharm
