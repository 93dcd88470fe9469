#include "tambara/serialize.hpp"

#include <sstream>

namespace tambara {

namespace {

Json edges(const std::vector<Edge>& v) {
    Json out = Json::array();
    for (auto [K, H] : v) out.push_back({K, H});
    return out;
}

Json vec_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

Json to_json(const TransferSystem& ts) {
    Json j;
    j["name"] = system_name(ts).value_or(ts.str());
    j["pairs"] = edges(ts.nontrivial_pairs());
    return j;
}

Json to_json(const CompatiblePair& pr) {
    return {{"name", pair_name(pr)}, {"mult", to_json(pr.mult)}, {"add", to_json(pr.add)}};
}

Json to_json(const Algebra& a) {
    Json j;
    j["name"] = a.name;
    j["basis"] = a.basis_names;
    Json chars = Json::array();
    for (const auto& c : a.characters) chars.push_back({{"name", c.name}, {"values", vec_json(c.values)}, {"modulus", c.modulus.str()}});
    j["characters"] = chars;
    return j;
}

Json to_json(const Submodule& s) {
    Json rows = Json::array();
    for (const auto& r : s.basis()) rows.push_back(vec_json(r));
    return {{"ideal", s.describe()}, {"hnf", rows}};
}

Json to_json(const TambaraIdeal& I) {
    Json levels = Json::array();
    for (auto it = I.levels.rbegin(); it != I.levels.rend(); ++it) {
        Json l = to_json(it->second);
        l["level"] = it->first;
        levels.push_back(l);
    }
    return levels;
}

Json to_json(const LewisDiagram& T) {
    Json j;
    j["construction"] = T.construction;
    j["group"] = "cyclic:" + std::to_string(T.lattice.n);
    j["pair"] = to_json(T.pair);
    j["levels"] = T.levels;
    Json algs = Json::array();
    for (int d : T.levels) {
        Json a = to_json(T.alg(d));
        a["level"] = d;
        algs.push_back(a);
    }
    j["algebras"] = algs;
    j["transfers"] = edges(T.visible_transfers());
    j["norms"] = edges(T.visible_norms());
    return j;
}

Json to_json(const SpectrumTable& t) {
    Json j;
    j["construction"] = t.diagram->construction;
    j["group"] = "cyclic:" + std::to_string(t.diagram->lattice.n);
    j["pair"] = to_json(t.diagram->pair);
    j["route"] = t.route;
    j["special_primes"] = t.special;
    Json fams = Json::array();
    for (const auto& f : t.families)
        fams.push_back({{"name", f.name}, {"levels", f.levels}, {"stratum", f.stratum}, {"provenance", f.provenance}});
    j["families"] = fams;
    Json ids = Json::array();
    for (const auto& i : t.identifications) ids.push_back({{"prime", i.prime}, {"names", i.names}});
    j["identifications"] = ids;
    Json inc = Json::array();
    for (const auto& i : t.inclusions) inc.push_back({{"sub", i.sub}, {"sup", i.sup}, {"stratum", i.stratum}});
    j["inclusions"] = inc;
    Json samples = Json::array();
    for (size_t s = 0; s < t.samples.size(); ++s) {
        Json pts = Json::array();
        for (size_t i = 0; i < t.points[s].size(); ++i) {
            const auto& p = t.points[s][i];
            Json names = t.point_names.size() > s ? Json(t.point_names[s][i]) : Json::array();
            pts.push_back({{"names", names}, {"levels", to_json(p.ideal)}, {"lineage", p.lineage}, {"provenance", p.provenance}});
        }
        samples.push_back({{"q", t.samples[s].q.str()}, {"stratum", t.samples[s].stratum}, {"points", pts}});
    }
    j["samples"] = samples;
    j["assumptions"] = {"families are compared at q = 0, the special primes and the smallest other primes"};
    return j;
}

std::string to_dot(const SpectrumTable& t) {
    std::ostringstream os;
    os << "digraph spectrum {\n  rankdir=BT;\n  label=\"" << dot_escape(pair_name(t.diagram->pair)) << "\";\n";
    for (const auto& f : t.families) {
        std::string label = f.name;
        for (const auto& l : f.levels) label += "\\n" + dot_escape(l);
        os << "  \"" << dot_escape(f.name) << "\" [shape=box,label=\"" << label << "\",tooltip=\"" << f.stratum << "\"];\n";
    }
    for (const auto& i : t.inclusions)
        os << "  \"" << dot_escape(i.sub) << "\" -> \"" << dot_escape(i.sup) << "\" [label=\"" << i.stratum << "\""
           << (i.stratum == "q" ? "" : ",color=red") << "];\n";
    for (const auto& id : t.identifications)
        for (size_t k = 1; k < id.names.size(); ++k)
            os << "  \"" << dot_escape(id.names[0]) << "\" -> \"" << dot_escape(id.names[k]) << "\" [dir=none,style=dashed,label=\"="
               << id.prime << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace tambara
