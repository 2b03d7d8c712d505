#include "g2cyl/jsonio.hpp"

namespace g2 {

namespace {
Json intToJson(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}
Int intFromJson(const Json& j) {
    if (j.is_number_integer()) return Int((long)j.get<long long>());
    return Int(j.get<std::string>());
}
}  // namespace

Json feToJson(const FE& x) {
    Json j;
    j["a"] = intToJson(x.a());
    j["b"] = intToJson(x.b());
    j["den"] = intToJson(x.den());
    j["disc"] = x.disc();
    return j;
}

FE feFromJson(const Json& j) {
    return FE::make(intFromJson(j.at("a")), intFromJson(j.at("b")), intFromJson(j.at("den")),
                    j.at("disc").get<long>());
}

Json surfaceToJson(const Surface& s) {
    Json j;
    j["schema"] = 1;
    j["disc"] = s.disc;
    Json polys = Json::array();
    for (const auto& poly : s.polys) {
        Json pj = Json::array();
        for (const auto& v : poly) pj.push_back(Json::array({feToJson(v.x), feToJson(v.y)}));
        polys.push_back(pj);
    }
    j["polygons"] = polys;
    Json glues = Json::array();
    for (int p = 0; p < s.np(); ++p)
        for (int e = 0; e < s.nv(p); ++e) {
            EdgeRef pr = s.glue[p][e];
            if (std::tie(p, e) < std::tie(pr.poly, pr.edge))
                glues.push_back(Json::array({p, e, pr.poly, pr.edge}));
        }
    j["gluings"] = glues;
    Json marked = Json::array();
    for (int k = 0; k < s.nClasses; ++k)
        if (s.isSingularClass[k] && s.turns[k] == 1) {
            const Corner& c = s.fans[k][0];
            marked.push_back(Json::array({c.poly, c.vtx}));
        }
    j["marked"] = marked;
    return j;
}

SurfacePtr surfaceFromJson(const Json& j) {
    long disc = j.at("disc").get<long>();
    std::vector<std::vector<Vec2>> polys;
    for (const auto& pj : j.at("polygons")) {
        std::vector<Vec2> poly;
        for (const auto& vj : pj) poly.push_back(Vec2(feFromJson(vj.at(0)), feFromJson(vj.at(1))));
        polys.push_back(std::move(poly));
    }
    std::vector<std::vector<EdgeRef>> glue(polys.size());
    for (size_t p = 0; p < polys.size(); ++p) glue[p].assign(polys[p].size(), {});
    for (const auto& gj : j.at("gluings")) {
        int p = gj.at(0).get<int>(), e = gj.at(1).get<int>();
        int q = gj.at(2).get<int>(), f = gj.at(3).get<int>();
        glue[p][e] = EdgeRef{q, f};
        glue[q][f] = EdgeRef{p, e};
    }
    BuildOptions opt;
    opt.allowTorus = true;
    if (j.contains("marked"))
        for (const auto& mj : j.at("marked"))
            opt.marked.push_back(Corner{mj.at(0).get<int>(), mj.at(1).get<int>()});
    return buildFromPolygons(disc, std::move(polys), std::move(glue), opt);
}

std::string lengthString(const FE& sq) {
    if (auto r = sq.fieldSqrt()) return r->str();
    return "sqrt(" + sq.str() + ")";
}

Json decompositionToJson(const Surface& s, const Decomposition& d) {
    Json j;
    j["schema"] = 1;
    j["direction"] = d.dir.str();
    j["status"] = d.status == Decomposition::Status::Periodic ? "periodic" : "budget-exceeded";
    Json cyls = Json::array();
    for (const auto& c : d.cylinders) {
        Json cj;
        cj["kind"] = "cylinder";
        cj["circumference"] = lengthString(c.circSq);
        cj["circumferenceSq"] = feToJson(c.circSq);
        cj["heightSq"] = feToJson(c.heightSq);
        cj["area"] = feToJson(c.area);
        cj["simple"] = c.simple;
        Json bd = Json::array();
        for (int i : c.bottom) bd.push_back(d.saddles[i].key);
        cj["bottom"] = bd;
        Json td = Json::array();
        for (int i : c.top) td.push_back(d.saddles[i].key);
        cj["top"] = td;
        cyls.push_back(cj);
    }
    j["cylinders"] = cyls;
    Json degs = Json::array();
    for (const auto& c : d.degenerates) {
        Json cj;
        cj["kind"] = "degenerate";
        cj["circumference"] = lengthString(c.circSq);
        cj["saddles"] = Json::array({d.saddles[c.sad1].key, d.saddles[c.sad2].key});
        degs.push_back(cj);
    }
    j["degenerates"] = degs;
    Json sads = Json::array();
    for (const auto& sc : d.saddles) {
        Json sj;
        sj["key"] = sc.key;
        sj["holonomy"] = Json::array({feToJson(sc.holPlus.x), feToJson(sc.holPlus.y)});
        sj["invariant"] = sc.invariant;
        sads.push_back(sj);
    }
    j["saddles"] = sads;
    return j;
}

}  // namespace g2
