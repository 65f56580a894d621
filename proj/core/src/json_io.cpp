#include "cremona/json_io.hpp"

namespace cremona {

void to_json(nlohmann::json& j, const HomaloidalType& t) {
    j = nlohmann::json{{"degree", t.degree()}, {"mults", std::vector<Int>(t.mults().begin(), t.mults().end())}};
}

HomaloidalType homaloidal_type_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("mults"))
        throw ParseError("type object needs 'degree' and 'mults'");
    const auto& d = j.at("degree");
    const auto& m = j.at("mults");
    if (!d.is_number_integer() || !m.is_array()) throw ParseError("type object has the wrong field types");
    std::vector<Int> mults;
    for (const auto& x : m) {
        if (!x.is_number_integer()) throw ParseError("multiplicities must be integers");
        mults.push_back(x.get<Int>());
    }
    try {
        return HomaloidalType::make(d.get<Int>(), std::move(mults));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

void from_json(const nlohmann::json& j, HomaloidalType& t) { t = homaloidal_type_from_json(j); }

void to_json(nlohmann::json& j, const LatticeVector& v) {
    j = nlohmann::json{{"degree", v.degree()}, {"mults", v.mults()}};
}

void to_json(nlohmann::json& j, const IntegerMatrix& m) {
    j = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t k = 0; k < m.dimension(); ++k) row.push_back(m(i, k));
        j.push_back(std::move(row));
    }
}

}  // namespace cremona
