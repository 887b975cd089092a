#include "rsos/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rsos {

Json poly_to_json(const QuarterPoly& p)
{
    Json out = Json::object();
    for (const auto& [k, c] : p.integer_terms()) out[std::to_string(k)] = c.get_str();
    return out;
}

QuarterPoly poly_from_json(const Json& j)
{
    if (!j.is_object()) throw std::invalid_argument("polynomial JSON must be an object");
    QuarterPoly out;
    for (const auto& [k, v] : j.items()) {
        if (!v.is_string()) throw std::invalid_argument("polynomial coefficients must be strings");
        std::size_t used = 0;
        long e = std::stol(k, &used);
        if (used != k.size()) throw std::invalid_argument("bad exponent '" + k + "'");
        out.add_term(4 * e, Int(v.get<std::string>()));
    }
    return out;
}

Json path_to_json(const Path& h)
{
    Json out;
    out["p"] = h.model.p;
    out["pp"] = h.model.pp;
    out["heights"] = h.heights;
    Json bd;
    if (h.has_wings()) {
        bd["e"] = h.e();
        bd["f"] = h.f();
    } else {
        bd["c"] = h.c();
    }
    out["boundary"] = bd;
    return out;
}

namespace {

int get_int(const Json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("schema: missing integer field '") + key + "'");
    return j.at(key).get<int>();
}

}  // namespace

Path path_from_json(const Json& j)
{
    if (!j.is_object()) throw std::invalid_argument("schema: path JSON must be an object");
    const int p = get_int(j, "p"), pp = get_int(j, "pp");
    if (!j.contains("heights") || !j.at("heights").is_array() || j.at("heights").empty())
        throw std::invalid_argument("schema: 'heights' must be a non-empty array");
    std::vector<int> hs;
    for (const auto& x : j.at("heights")) {
        if (!x.is_number_integer()) throw std::invalid_argument("schema: heights must be integers");
        hs.push_back(x.get<int>());
    }
    if (!j.contains("boundary") || !j.at("boundary").is_object())
        throw std::invalid_argument("schema: missing 'boundary' object");
    const Json& bj = j.at("boundary");
    Boundary bd;
    if (bj.contains("c")) {
        bd = PostSeg{get_int(bj, "c")};
    } else if (bj.contains("e") || bj.contains("f")) {
        Wings w{get_int(bj, "e"), get_int(bj, "f")};
        if ((w.e != 0 && w.e != 1) || (w.f != 0 && w.f != 1)) throw std::invalid_argument("parity: e and f must be 0 or 1");
        bd = w;
    } else {
        throw std::invalid_argument("schema: boundary needs 'c' or both 'e' and 'f'");
    }
    return make_path(ModelShape(p, pp), std::move(hs), bd);
}

Path load_path(const std::string& file)
{
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open '" + file + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    return path_from_json(j);
}

std::string emit_path(const Path& h) { return path_to_json(h).dump(); }

}  // namespace rsos
