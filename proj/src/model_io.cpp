#include "qcf/model_io.hpp"

#include <fstream>
#include <sstream>

#include "qcf/errors.hpp"

namespace qcf {

namespace {

std::size_t positive_field(const nlohmann::json& j, const char* name) {
    if (!j.contains(name)) throw ValidationError(std::string("model is missing \"") + name + "\"");
    const auto& v = j.at(name);
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw ValidationError(std::string("\"") + name + "\" must be a positive integer");
    }
    return v.get<std::size_t>();
}

Rational weight_value(const nlohmann::json& v, const std::string& key) {
    if (!v.is_string()) throw ValidationError("weight for \"" + key + "\" must be a \"p/q\" string");
    return parse_rational(v.get<std::string>());
}

}  // namespace

nlohmann::json weights_to_json(const FunctionDistribution& pF) {
    nlohmann::json out = nlohmann::json::object();
    for (auto i : pF.support()) out[pF.table(i).key()] = to_string(pF.weight(i));
    return out;
}

nlohmann::json to_json(const FunctionDistribution& pF) {
    return {{"n_x", pF.n_x()}, {"n_y", pF.n_y()}, {"pF", weights_to_json(pF)}};
}

nlohmann::json to_json(const ConfoundedModel& m) {
    nlohmann::json joint = nlohmann::json::object();
    for (std::size_t r = 0; r < m.n_x(); ++r) {
        for (std::uint64_t f = 0; f < m.table_count(); ++f) {
            const auto& w = m.weight(r, f);
            if (w == 0) continue;
            joint[std::to_string(r) + "|" + FunctionTable::from_index(m.n_x(), m.n_y(), f).key()] = to_string(w);
        }
    }
    return {{"n_x", m.n_x()}, {"n_y", m.n_y()}, {"joint", std::move(joint)}};
}

Model model_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ValidationError("model must be a JSON object");
    const auto n_x = positive_field(j, "n_x");
    const auto n_y = positive_field(j, "n_y");
    const auto count = table_count(n_x, n_y);
    const bool has_pf = j.contains("pF");
    const bool has_joint = j.contains("joint");
    if (has_pf == has_joint) throw ValidationError("model needs exactly one of \"pF\" or \"joint\"");

    if (has_pf) {
        const auto& entries = j.at("pF");
        if (!entries.is_object()) throw ValidationError("\"pF\" must be an object");
        std::vector<Rational> weights(count);
        for (const auto& [key, value] : entries.items()) {
            weights[FunctionTable::from_key(n_x, n_y, key).index()] += weight_value(value, key);
        }
        return FunctionDistribution(n_x, n_y, std::move(weights));
    }

    const auto& entries = j.at("joint");
    if (!entries.is_object()) throw ValidationError("\"joint\" must be an object");
    std::vector<Rational> weights(n_x * count);
    for (const auto& [key, value] : entries.items()) {
        const auto bar = key.find('|');
        if (bar == std::string::npos || bar == 0) throw ValidationError("joint key \"" + key + "\" is not r_x|outputs");
        std::size_t r = 0;
        try {
            std::size_t used = 0;
            r = std::stoul(key.substr(0, bar), &used);
            if (used != bar) throw std::invalid_argument(key);
        } catch (const std::logic_error&) {
            throw ValidationError("joint key \"" + key + "\" has a malformed r_x");
        }
        if (r >= n_x) throw ValidationError("joint key \"" + key + "\" has r_x outside [0, n_x)");
        const auto f = FunctionTable::from_key(n_x, n_y, key.substr(bar + 1));
        weights[r * count + f.index()] += weight_value(value, key);
    }
    return ConfoundedModel(n_x, n_y, std::move(weights));
}

Model parse_model(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("malformed model JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what());
    }
    return model_from_json(j);
}

Model load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_model(buffer.str());
}

FunctionDistribution response_distribution(const Model& m) {
    if (const auto* pF = std::get_if<FunctionDistribution>(&m)) return *pF;
    return std::get<ConfoundedModel>(m).response_marginal();
}

}  // namespace qcf
