#include "weylforge/json_io.hpp"

#include "weylforge/parser.hpp"

namespace weylforge {

Json to_json(const NCPoly& f) { return format_canonical(f); }

Json to_json(const NCMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_canonical(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const UnknownCatalog& catalog, const EqSystem& sys) {
    Json j;
    j["unknowns"] = catalog.names;
    Json eqs = Json::array();
    for (const CPoly& eq : sys.equations) eqs.push_back(eq.str());
    j["equations"] = std::move(eqs);
    return j;
}

Json to_json(const SolveResult& result) {
    Json j;
    if (result.is_assignment()) {
        j["outcome"] = "assignment";
        Json values;
        for (const auto& [name, value] : result.assignment().values) values[name] = value.str();
        j["values"] = std::move(values);
    } else if (result.is_inconsistent()) {
        j["outcome"] = "inconsistent";
    } else {
        j["outcome"] = "unknown";
    }
    Json assum = Json::array();
    for (const CPoly& a : result.assumptions) assum.push_back(a.str());
    j["assumptions"] = std::move(assum);
    Json freev = Json::array();
    for (const std::string& f : result.free) freev.push_back(f);
    j["free"] = std::move(freev);
    return j;
}

Json to_json(const IdentityBattery& battery) {
    Json j;
    Json res = Json::array();
    for (const CPoly& r : battery.residuals) res.push_back(r.str());
    j["residuals"] = std::move(res);
    j["all_zero"] = battery.all_zero();
    return j;
}

Json to_json(const SkewLinearSystem& sys) {
    Json j;
    Json m = Json::array();
    for (const auto& row : sys.M) {
        Json r = Json::array();
        for (const auto& entry : row) r.push_back(entry.str());
        m.push_back(std::move(r));
    }
    j["M"] = std::move(m);
    Json b = Json::array();
    for (const auto& entry : sys.b) b.push_back(entry.str());
    j["b"] = std::move(b);
    return j;
}

Json to_json(const Endomorphism& e) {
    Json images = Json::array();
    for (const NCPoly& im : e.images) images.push_back(format_canonical(im));
    Json j;
    j["images"] = std::move(images);
    return j;
}

}  // namespace weylforge
