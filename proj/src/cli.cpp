#include "tambara/cli.hpp"

#include "tambara/acceptance.hpp"
#include "tambara/construct.hpp"
#include "tambara/serialize.hpp"
#include "tambara/spectra.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tambara::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Selectors {
    std::string group;
    std::string construction;
    std::string pair;
    std::string prime;
    std::string format = "text";
    std::string seed;
    int bound = 3;
    std::string out;
};

std::vector<long> parse_primes(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stol(tok));
    return out;
}

// construction text completed from --group / --prime when it names no prime
ConstructionSpec resolve_construction(const Selectors& s) {
    if (s.construction.empty()) throw UsageError("--construction is required");
    std::string text = s.construction;
    bool has_prime = text.find("p=") != std::string::npos || text.find("pq=") != std::string::npos;
    if (!has_prime && s.prime.empty() && !s.group.empty()) {
        int n = parse_group(s.group);
        auto f = prime_factors(n);
        std::string sep = text.find(':') == std::string::npos ? ":" : ",";
        if (f.size() == 1) {
            int e = 0;
            for (long m = 1; m < n; m *= f[0]) ++e;
            text += sep + "p=" + std::to_string(f[0]) + ",n=" + std::to_string(e);
        } else if (f.size() == 2 && static_cast<long>(n) == f[0] * f[1]) {
            text += sep + "pq=" + std::to_string(f[0]) + "," + std::to_string(f[1]);
        } else {
            throw UsageError("group " + s.group + " is not C_{p^n} or C_{pq}");
        }
    }
    ConstructionSpec spec;
    try {
        spec = parse_construction(text, parse_primes(s.prime));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!s.group.empty() && parse_group(s.group) != spec.order())
        throw UsageError("construction " + spec.str() + " is not over " + s.group);
    return spec;
}

std::optional<CompatiblePair> resolve_pair(const Selectors& s, const SubgroupLattice& lat) {
    if (s.pair.empty()) return std::nullopt;
    auto [m, a] = split_pair(s.pair);
    try {
        auto Om = parse_system(lat, m), Oa = parse_system(lat, a);
        if (auto v = check_compatible_pair(Om, Oa))
            throw UsageError("(" + m + "," + a + ") is not compatible: witness B=" + std::to_string(v->B) + " C=" + std::to_string(v->C) +
                             " A=" + std::to_string(v->A));
        return CompatiblePair{Om, Oa};
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void require_format(const Selectors& s, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (s.format == f) return;
    throw UsageError("format '" + s.format + "' is not available here");
}

// writes to --out when given, else to out
void emit(const Selectors& s, std::ostream& out, const std::string& text) {
    if (s.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(s.out);
    if (!f) throw std::runtime_error("cannot write " + s.out);
    f << text;
}

std::string text_table(const SpectrumTable& t) {
    std::ostringstream os;
    os << t.diagram->construction << " " << pair_name(t.diagram->pair) << "  route " << t.route << "\n";
    os << "families:\n";
    for (const auto& f : t.families) {
        std::string lv;
        for (const auto& l : f.levels) lv += (lv.empty() ? "" : " ; ") + l;
        os << "  " << f.name << "  [" << lv << "]  " << f.stratum << "  " << f.provenance << "\n";
    }
    if (!t.identifications.empty()) {
        os << "identifications:\n";
        for (const auto& id : t.identifications) {
            os << "  q=" << id.prime << ":";
            for (size_t k = 0; k < id.names.size(); ++k) os << (k ? " = " : " ") << id.names[k];
            os << "\n";
        }
    }
    if (!t.inclusions.empty()) {
        os << "inclusions:\n";
        for (const auto& i : t.inclusions) os << "  " << i.sub << " < " << i.sup << "  (" << i.stratum << ")\n";
    }
    return os.str();
}

SpectrumTable compute_spectrum(const Selectors& s) {
    auto spec = resolve_construction(s);
    auto lat = cyclic_lattice(spec.order());
    auto T = build(spec, resolve_pair(s, lat));
    SpectrumOptions opt;
    opt.bound = s.bound;
    opt.seed = resolve_seed(s.seed);
    return spectrum(T, opt);
}

void add_selectors(CLI::App* cmd, Selectors& s, bool construction) {
    cmd->add_option("--group", s.group, "cyclic:n");
    if (construction) {
        cmd->add_option("--construction", s.construction, "burnside | constantZ | initial, e.g. burnside:p=2,n=2");
        cmd->add_option("--pair", s.pair, "Om,Oa, e.g. Ocomp,Ocomp or {(1,2)},{(1,2),(1,3)}");
        cmd->add_option("--prime", s.prime, "p or p,q");
        cmd->add_option("--bound", s.bound, "refutation box");
    }
    cmd->add_option("--format", s.format, "text | json | dot");
    cmd->add_option("--seed", s.seed, "sampling seed");
    cmd->add_option("--out", s.out, "output file");
}

} // namespace

int parse_group(const std::string& text) {
    const std::string prefix = "cyclic:";
    if (text.rfind(prefix, 0) != 0) throw UsageError("group must look like cyclic:n, got '" + text + "'");
    int n = 0;
    try {
        n = std::stoi(text.substr(prefix.size()));
    } catch (const std::exception&) {
        throw UsageError("bad group order in '" + text + "'");
    }
    if (n < 1 || n > 4096) throw UsageError("group order out of range in '" + text + "'");
    return n;
}

std::pair<std::string, std::string> split_pair(const std::string& text) {
    auto bar = text.find('|');
    if (bar != std::string::npos) return {text.substr(0, bar), text.substr(bar + 1)};
    int depth = 0;
    std::vector<size_t> cuts;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(' || c == '{' || c == '[') ++depth;
        if (c == ')' || c == '}' || c == ']') --depth;
        if (c == ',' && depth == 0) cuts.push_back(i);
    }
    if (cuts.size() != 1) throw UsageError("pair must be 'Om,Oa' with one top-level comma; brace raw lists or use '|'");
    return {text.substr(0, cuts[0]), text.substr(cuts[0] + 1)};
}

uint64_t resolve_seed(const std::string& flag) {
    std::string v = flag;
    if (v.empty())
        if (const char* env = std::getenv("TAMBARA_SEED")) v = env;
    if (v.empty()) return SpectrumOptions{}.seed;
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        throw UsageError("seed must be a non-negative integer, got '" + v + "'");
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Prime spectra of bi-incomplete Tambara functors over cyclic groups", "tambara"};
    app.require_subcommand(1);
    Selectors s;
    std::string what, system;

    auto* en = app.add_subcommand("enumerate", "list transfer systems or compatible pairs");
    en->add_option("what", what, "systems | pairs")->required()->check(CLI::IsMember({"systems", "pairs"}));
    add_selectors(en, s, false);

    auto* hu = app.add_subcommand("hull", "saturated hull of a transfer system");
    hu->add_option("system", system, "name or list, e.g. O3 or (1,2),(1,4)")->required();
    add_selectors(hu, s, false);

    auto* ch = app.add_subcommand("check", "axioms, compatibility and cohomological predicates of a construction");
    add_selectors(ch, s, true);

    auto* sp = app.add_subcommand("spectrum", "prime spectrum table");
    add_selectors(sp, s, true);

    auto* ve = app.add_subcommand("verify", "run the acceptance suite");
    ve->add_option("what", what, "paper")->required()->check(CLI::IsMember({"paper"}));
    add_selectors(ve, s, false);

    auto* ex = app.add_subcommand("export", "write a diagram or spectrum as JSON or DOT");
    ex->add_option("what", what, "spectrum | diagram")->check(CLI::IsMember({"spectrum", "diagram"}));
    add_selectors(ex, s, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        if (*en) {
            require_format(s, {"text", "json"});
            if (s.group.empty()) throw UsageError("--group is required");
            auto lat = cyclic_lattice(parse_group(s.group));
            std::ostringstream os;
            if (what == "systems") {
                auto all = enumerate_transfer_systems(lat);
                if (s.format == "json") {
                    Json j = Json::array();
                    for (const auto& ts : all) j.push_back(to_json(ts));
                    os << j.dump(2) << "\n";
                } else {
                    os << all.size() << " transfer systems\n";
                    for (const auto& ts : all)
                        os << "  " << system_name(ts).value_or(ts.str()) << (is_saturated(ts) ? "  saturated" : "") << "\n";
                }
            } else {
                auto all = enumerate_compatible_pairs(lat);
                if (s.format == "json") {
                    Json j = Json::array();
                    for (const auto& pr : all) j.push_back(to_json(pr));
                    os << j.dump(2) << "\n";
                } else {
                    os << all.size() << " compatible pairs\n";
                    for (const auto& pr : all) os << "  " << pair_name(pr) << (pr.mult == pr.add ? "  self-compatible" : "") << "\n";
                }
            }
            emit(s, out, os.str());
            return exit_ok;
        }
        if (*hu) {
            require_format(s, {"text", "json"});
            if (s.group.empty()) throw UsageError("--group is required");
            auto lat = cyclic_lattice(parse_group(s.group));
            TransferSystem ts;
            try {
                ts = parse_system(lat, system);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            auto h = saturated_hull(ts);
            if (s.format == "json") {
                emit(s, out, Json{{"system", to_json(ts)}, {"saturated", is_saturated(ts)}, {"hull", to_json(h)}}.dump(2) + "\n");
            } else {
                auto nm = [](const TransferSystem& t) { return system_name(t).value_or(t.str()); };
                emit(s, out, "Hull(" + nm(ts) + ") = " + nm(h) + (is_saturated(ts) ? "  (already saturated)\n" : "\n"));
            }
            return exit_ok;
        }
        if (*ch) {
            require_format(s, {"text", "json"});
            auto spec = resolve_construction(s);
            auto T = build(spec, resolve_pair(s, cyclic_lattice(spec.order())));
            SampleOptions so;
            so.seed = resolve_seed(s.seed);
            auto ax = check_axioms(T, so);
            auto coh = cohomological(T);
            if (s.format == "json") {
                Json j{{"construction", T.construction}, {"pair", pair_name(T.pair)}, {"axioms", ax ? ax->check + ": " + ax->detail : "ok"}};
                j["additively_cohomological"] = coh.additive();
                j["multiplicatively_cohomological"] = coh.multiplicative();
                emit(s, out, j.dump(2) + "\n");
            } else {
                std::ostringstream os;
                os << T.construction << " " << pair_name(T.pair) << "\n";
                os << "  axioms: " << (ax ? "FAIL " + ax->check + ": " + ax->detail : "ok (" + std::to_string(so.samples) + " samples)") << "\n";
                os << "  additively cohomological: " << (coh.additive() ? "yes" : "no, " + coh.additive_failure->detail) << "\n";
                os << "  multiplicatively cohomological: " << (coh.multiplicative() ? "yes" : "no, " + coh.multiplicative_failure->detail)
                   << "\n";
                emit(s, out, os.str());
            }
            return ax ? exit_failed : exit_ok;
        }
        if (*sp) {
            require_format(s, {"text", "json", "dot"});
            auto t = compute_spectrum(s);
            if (s.format == "json")
                emit(s, out, to_json(t).dump(2) + "\n");
            else if (s.format == "dot")
                emit(s, out, to_dot(t));
            else
                emit(s, out, text_table(t));
            return exit_ok;
        }
        if (*ve) {
            AcceptanceOptions opt;
            opt.seed = resolve_seed(s.seed);
            std::ostringstream os;
            int passed = 0;
            auto results = run_acceptance(opt);
            for (const auto& r : results) {
                os << format_result(r) << "\n";
                passed += r.pass;
            }
            os << passed << "/" << results.size() << " criteria passed\n";
            emit(s, out, os.str());
            return passed == static_cast<int>(results.size()) ? exit_ok : exit_failed;
        }
        if (*ex) {
            if (s.format == "text") s.format = "json";
            require_format(s, {"json", "dot"});
            if (what == "diagram") {
                if (s.format != "json") throw UsageError("diagrams export as json only");
                auto spec = resolve_construction(s);
                auto T = build(spec, resolve_pair(s, cyclic_lattice(spec.order())));
                emit(s, out, to_json(T).dump(2) + "\n");
            } else {
                auto t = compute_spectrum(s);
                emit(s, out, s.format == "json" ? to_json(t).dump(2) + "\n" : to_dot(t));
            }
            return exit_ok;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const HullRefused& e) {
        err << "refused: " << e.what() << "\n";
        return exit_failed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failed;
    }
    return exit_usage;
}

} // namespace tambara::cli
