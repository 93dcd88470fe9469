#include "tambara/construct.hpp"
#include "tambara/serialize.hpp"
#include "tambara/spectra.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>

using namespace tambara;

namespace {

DiagramPtr at_pair(const LewisDiagram& full, const std::string& om, const std::string& oa) {
    auto pr = make_compatible_pair(parse_system(full.lattice, om), parse_system(full.lattice, oa));
    return std::make_shared<LewisDiagram>(forget_pair(full, pr));
}

Submodule span(AlgebraPtr a, const std::vector<std::vector<long long>>& rows) {
    return ideal_from_generators(std::move(a), to_mat(rows));
}

// draft-07 subset: type, required, properties, items, $ref into definitions
bool conforms(const Json& v, const Json& s, const Json& root, std::string& why, const std::string& at = "$") {
    if (s.contains("$ref")) {
        std::string ref = s["$ref"];
        return conforms(v, root["definitions"][ref.substr(ref.rfind('/') + 1)], root, why, at);
    }
    if (s.contains("type")) {
        std::string t = s["type"];
        bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array()) || (t == "string" && v.is_string()) ||
                  (t == "integer" && v.is_number_integer()) || (t == "boolean" && v.is_boolean());
        if (!ok) {
            why = at + " is not " + t;
            return false;
        }
    }
    if (s.contains("required"))
        for (const auto& k : s["required"])
            if (!v.contains(k.get<std::string>())) {
                why = at + " lacks " + k.get<std::string>();
                return false;
            }
    if (s.contains("properties") && v.is_object())
        for (const auto& [k, sub] : s["properties"].items())
            if (v.contains(k) && !conforms(v[k], sub, root, why, at + "." + k)) return false;
    if (s.contains("items") && v.is_array())
        for (size_t i = 0; i < v.size(); ++i)
            if (!conforms(v[i], s["items"], root, why, at + "[" + std::to_string(i) + "]")) return false;
    return true;
}

Json load_schema() {
    std::ifstream in(TAMBARA_SOURCE_DIR "/docs/schema/spectrum.schema.json");
    REQUIRE(in);
    return Json::parse(in);
}

} // namespace

TEST_CASE("ring primes") {
    auto Z = integers();
    auto z3 = ring_primes(Z, Int(3));
    REQUIRE(z3.size() == 1);
    CHECK(z3[0].ideal == span(Z, {{3}}));
    CHECK(ring_primes(Z, Int(0))[0].ideal.rank() == 0);

    auto A = burnside_cp(2).alg_ptr(2); // Z[t]/(t^2 - 2t)
    auto at3 = ring_primes(A, Int(3));
    CHECK(at3.size() == 2);
    auto at2 = ring_primes(A, Int(2));
    REQUIRE(at2.size() == 1);
    CHECK(at2[0].ideal == span(A, {{2, 0}, {0, 1}}));
    auto at0 = ring_primes(A, Int(0));
    CHECK(at0.size() == 2);
    for (const auto& p : at0) CHECK_FALSE(p.ideal.is_unit_ideal());

    // a swap action glues the two characters of Z x Z
    auto ZZ = product_algebra(integers(), integers());
    Mat swap = to_mat({{0, 1}, {1, 0}});
    CHECK(ring_primes(ZZ, Int(5)).size() == 2);
    auto g = ring_primes(ZZ, Int(5), &swap);
    REQUIRE(g.size() == 1);
    CHECK(g[0].ideal == span(ZZ, {{5, 0}, {0, 5}}));
}

TEST_CASE("ghost primes pull back to the expected top ideals") {
    auto R = std::make_shared<LewisDiagram>(restrict_levels(*at_pair(burnside_cp2(2), "O2", "O2"), {2, 4}));
    auto G = ghost(*R);
    auto top = R->alg_ptr(4);
    std::vector<Submodule> tops;
    for (const auto& gp : ghost_primes(G, Int(3))) tops.push_back(gp.pullback.at(4));
    auto has = [&](const Submodule& s) { return std::find(tops.begin(), tops.end(), s) != tops.end(); };
    CHECK(has(span(top, {{3, 0, 0}, {-2, 1, 0}, {0, 0, 1}})));
    CHECK(has(span(top, {{3, 0, 0}, {-2, 1, 0}, {-4, 0, 1}})));
    CHECK(has(span(top, {{3, 0, 0}, {0, 0, 1}})));
    for (const auto& pt : ghost_spectrum(G, Int(3))) CHECK_FALSE(is_ideal(pt.ideal));
}

TEST_CASE("every emitted point is an ideal, levelwise radical, with a G-prime bottom") {
    auto full = burnside_cp2(2);
    for (const auto& pr : enumerate_compatible_pairs(full.lattice)) {
        auto T = std::make_shared<LewisDiagram>(forget_pair(full, pr));
        for (long q : {0L, 2L, 3L}) {
            for (const auto& pt : prime_points(T, Int(q))) {
                CAPTURE(pair_name(pr));
                CAPTURE(pt.ideal.str());
                CHECK_FALSE(is_ideal(pt.ideal));
                CHECK_FALSE(radical_audit(pt.ideal, 2));
                const auto& bottom = pt.ideal.at(T->bottom());
                if (!bottom.is_unit_ideal())
                    CHECK_FALSE(find_g_prime_witness(T->alg(T->bottom()), T->weyl.at(T->bottom()), bottom, 2));
            }
        }
    }
}

TEST_CASE("adding transfers and hull transport") {
    auto full = burnside_cp(3);
    auto coeff = spectrum(*at_pair(full, "Otriv", "Otriv"));
    auto same = add_transfers(coeff, coeff.diagram->pair.add);
    CHECK(same.family_names() == coeff.family_names());
    auto more = add_transfers(coeff, complete_system(full.lattice));
    CHECK(more.family_names().size() < coeff.family_names().size());
    CHECK(more.family("B1") == nullptr);

    CHECK_THROWS_AS(hull_transport(*at_pair(burnside_cp2(2), "O3", "Ocomp")), HullRefused);
    auto zt = hull_transport(*at_pair(constant_Z(4), "O3", "Ocomp"));
    auto zc = spectrum(*at_pair(constant_Z(4), "Ocomp", "Ocomp"));
    CHECK(zt.family_names() == zc.family_names());
    auto sat = spectrum(*at_pair(constant_Z(4), "O1", "O1"));
    CHECK(hull_transport(*sat.diagram).family_names() == sat.family_names());
}

TEST_CASE("components and samples") {
    auto T = at_pair(burnside_cp2(2), "O2", "O2");
    auto comps = level_components(*T);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{1});
    CHECK(comps[1] == std::vector<int>{2, 4});
    CHECK(level_saturated(*T));
    CHECK_FALSE(level_saturated(*at_pair(burnside_cp2(2), "O3", "Ocomp")));
    auto s = default_samples({2}, 3);
    REQUIRE(s.size() == 5);
    CHECK(s[0].q == Int(0));
    CHECK(s[1].stratum == "p=2");
    CHECK(s[2].q == Int(3));
    CHECK(s[4].q == Int(7));
    CHECK_FALSE(s[4].special());
}

TEST_CASE("shapes") {
    auto a = spectrum(*at_pair(constant_Z(4), "O1", "O1"));
    auto b = spectrum(*at_pair(constant_Z(4), "O2", "O2"));
    auto c = spectrum(*at_pair(constant_Z(4), "Otriv", "Otriv"));
    CHECK(homeomorphic(shape_graph(a), shape_graph(a)));
    CHECK(homeomorphic(shape_graph(a), shape_graph(b)));
    CHECK_FALSE(homeomorphic(shape_graph(a), shape_graph(c)));
}

TEST_CASE("serialized tables follow the schema") {
    Json schema = load_schema();
    auto t = spectrum(*at_pair(burnside_cp2(2), "Ocomp", "Ocomp"));
    Json j = to_json(t);
    std::string why;
    CHECK_MESSAGE(conforms(j, schema, schema, why), why);
    CHECK(j["pair"]["name"] == "(Ocomp,Ocomp)");
    CHECK(j["families"].size() == 3);
    Json broken = j;
    broken.erase("families");
    CHECK_FALSE(conforms(broken, schema, schema, why));
    CHECK(Json::parse(j.dump()) == j);

    std::string dot = to_dot(t);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("\"C3\"") != std::string::npos);
    CHECK(dot == to_dot(spectrum(*at_pair(burnside_cp2(2), "Ocomp", "Ocomp"))));
}
