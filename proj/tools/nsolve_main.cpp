#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsolve/classify.hpp"
#include "nsolve/oracle.hpp"
#include "nsolve/solvability.hpp"

using namespace nsolve;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* schema = "ns/1";

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json integer(Int v) {
    constexpr Int safe = (Int{1} << 53) - 1;
    if (v > safe || v < -safe) return std::to_string(v);
    return v;
}

json integer(const BigInt& v) {
    if (v <= BigInt((Int{1} << 53) - 1)) return static_cast<Int>(v);
    return v.str();
}

json vec(const IntVector& v) {
    json a = json::array();
    for (Int x : v) a.push_back(integer(x));
    return a;
}

json points(const LatticeSet& s) {
    json a = json::array();
    for (const auto& p : s) a.push_back(vec(p));
    return a;
}

json tuple_doc(const std::vector<LatticeSet>& t, std::size_t n) {
    json sup = json::array();
    for (const auto& s : t) sup.push_back(points(s));
    return {{"n", n}, {"supports", sup}};
}

json matrix(const IntMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer(m(i, j)));
        a.push_back(row);
    }
    return a;
}

json index_set(const IndexSet& s) { return json(std::vector<std::size_t>(s.begin(), s.end())); }

json cycle_type(const CycleType& c) {
    json parts = json::array();
    for (auto it = c.counts.rbegin(); it != c.counts.rend(); ++it) parts.push_back({integer(it->first), integer(it->second)});
    return {{"text", c.to_string()}, {"parts", parts}};
}

json zeta(const ZetaFunction& z) {
    json f = json::array();
    for (const auto& [h, e] : z.factors) f.push_back({integer(h), integer(e)});
    return {{"text", z.to_string()}, {"factors", f}};
}

json complex_value(Complex z) { return {z.real(), z.imag()}; }

// ---- input ----

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_input(const std::string& doc, const std::string& file) {
    if (!doc.empty() && doc != "-") return doc;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw ParseError("cannot read " + file);
        return {std::istreambuf_iterator<char>(in), {}};
    }
    return {std::istreambuf_iterator<char>(std::cin), {}};
}

Int get_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
    return v.get<Int>();
}

SupportTuple parse_tuple(const json& d) {
    if (!d.is_object() || !d.contains("n") || !d.contains("supports")) throw ParseError("expected {\"n\": ..., \"supports\": [...]}");
    const Int n = get_int(d["n"], "n");
    if (n < 0) throw ParseError("n must be non-negative");
    if (!d["supports"].is_array()) throw ParseError("supports must be an array");
    SupportTuple t;
    for (std::size_t j = 0; j < d["supports"].size(); ++j) {
        const json& s = d["supports"][j];
        const std::string where = "supports[" + std::to_string(j) + "]";
        if (!s.is_array()) throw ParseError(where + " must be an array of points");
        std::vector<Point> pts;
        for (const auto& p : s) {
            if (!p.is_array() || p.size() != static_cast<std::size_t>(n)) throw ParseError(where + ": every point needs " + std::to_string(n) + " coordinates");
            Point q;
            for (const auto& c : p) q.push_back(get_int(c, where));
            pts.push_back(q);
        }
        try {
            t.push_back(LatticeSet::from_unique(static_cast<std::size_t>(n), pts));
        } catch (const std::invalid_argument&) {
            throw ParseError(where + ": duplicate point");
        }
    }
    return t;
}

Point parse_point(const std::string& text, std::size_t n) {
    json p = parse_json(text);
    if (!p.is_array() || p.size() != n) throw ParseError("point needs " + std::to_string(n) + " coordinates");
    Point q;
    for (const auto& c : p) q.push_back(get_int(c, "point"));
    return q;
}

std::vector<Permutation> parse_perms(const json& a, std::size_t degree, const std::string& key) {
    if (!a.is_array()) throw ParseError(key + " must be an array of cycle strings");
    std::vector<Permutation> out;
    for (const auto& g : a) {
        if (!g.is_string()) throw ParseError(key + " entries must be strings like \"(1 2 3)\"");
        try {
            out.push_back(Permutation::parse(g.get<std::string>(), degree));
        } catch (const std::invalid_argument& e) {
            throw ParseError(key + ": " + e.what());
        }
    }
    return out;
}

std::size_t parse_degree(const json& d) {
    if (!d.is_object() || !d.contains("degree")) throw ParseError("expected {\"degree\": ..., ...}");
    Int n = get_int(d["degree"], "degree");
    if (n < 1) throw ParseError("degree must be positive");
    return static_cast<std::size_t>(n);
}

Complex parse_complex(const json& v, const std::string& where) {
    if (v.is_number()) return v.get<double>();
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) return {v[0].get<double>(), v[1].get<double>()};
    throw ParseError(where + ": expected a number or [re, im]");
}

UnivariateFamily parse_family(const json& d) {
    if (!d.is_object()) throw ParseError("expected a family object");
    for (const char* k : {"exponents", "coefficients", "moving", "radius"})
        if (!d.contains(k)) throw ParseError(std::string("missing key ") + k);
    UnivariateFamily f;
    if (!d["exponents"].is_array() || !d["coefficients"].is_array()) throw ParseError("exponents and coefficients must be arrays");
    for (const auto& e : d["exponents"]) f.exponents.push_back(get_int(e, "exponents"));
    for (const auto& c : d["coefficients"]) f.coefficients.push_back(parse_complex(c, "coefficients"));
    f.moving = static_cast<std::size_t>(get_int(d["moving"], "moving"));
    if (!d["radius"].is_number()) throw ParseError("radius must be a number");
    f.radius = d["radius"].get<double>();
    if (d.contains("center")) f.center = parse_complex(d["center"], "center");
    if (d.contains("samples")) f.samples = static_cast<std::size_t>(get_int(d["samples"], "samples"));
    return f;
}

std::optional<CycleType> parse_prediction(const json& d) {
    if (!d.contains("predict")) return std::nullopt;
    if (!d["predict"].is_array()) throw ParseError("predict must be an array of [length, count] pairs");
    CycleType c;
    for (const auto& p : d["predict"]) {
        if (!p.is_array() || p.size() != 2) throw ParseError("predict entries are [length, count]");
        c.add(get_int(p[0], "predict"), get_int(p[1], "predict"));
    }
    return c;
}

// ---- commands ----

json verdict_json(const SolvabilityVerdict& v) {
    json out = {{"outcome", to_string(v.outcome)},
                {"mixed_volume", integer(v.mixed_volume)},
                {"reason", v.reason},
                {"normalization", to_string(v.normalization.kind)}};
    if (v.outcome == SolvabilityVerdict::Outcome::NotSolvableByNMinus1Radicals) out["N"] = integer(v.radicals);
    if (v.first_support) out["first_support"] = *v.first_support;
    if (v.segment) out["segment"] = {vec(v.segment->first), vec(v.segment->second)};
    if (v.lucky_point) out["lucky_point"] = vec(*v.lucky_point);
    if (v.shrunk_support) out["shrunk_support"] = points(*v.shrunk_support);
    if (!v.stages.empty()) {
        json st = json::array();
        for (const auto& s : v.stages) st.push_back(verdict_json(s));
        out["stages"] = st;
    }
    return out;
}

json normalize_json(const NormalizationReport& r) {
    json out = {{"kind", to_string(r.kind)}};
    if (r.kind == NormalizationReport::Kind::Inconsistent) return out;
    out["tuple"] = tuple_doc(r.tuple, ambient_dim(r.tuple));
    json shifts = json::array();
    for (const auto& s : r.shifts) shifts.push_back(vec(s));
    out["shifts"] = shifts;
    out["phi"] = matrix(r.phi);
    if (r.kind == NormalizationReport::Kind::ReducedCascade) {
        out["witness"] = index_set(r.witness);
        json st = json::array();
        for (const auto& s : r.stages)
            st.push_back({{"original_indices", index_set(s.original_indices)}, {"tuple", tuple_doc(s.tuple, ambient_dim(s.tuple))}});
        out["stages"] = st;
        out["covering_degree"] = integer(r.covering_degree);
    }
    return out;
}

json facing_json(const EssentialFacing& e) {
    json parts = json::array();
    for (const auto& p : e.parts) parts.push_back(points(p));
    return {{"id", facing_id(e.indices, e.parts)}, {"indices", index_set(e.indices)}, {"parts", parts}};
}

json class_json(const CanonicalClass& c) {
    json d = tuple_doc({c.representative}, c.dim);
    d["volume"] = integer(c.volume);
    return d;
}

json group_json(const std::string& what, const json& d) {
    const std::size_t n = parse_degree(d);
    if (what == "disjoint") {
        DisjointSystem sys{n, parse_perms(d.value("attractions", json::array()), n, "attractions"),
                           parse_perms(d.value("transpositions", json::array()), n, "transpositions")};
        DisjointResult r = disjoint_generators_test(sys);
        json out = {{"full_symmetric", r.full_symmetric}, {"order", integer(r.order)}};
        if (!r.full_symmetric) out["failed_hypothesis"] = r.failed_hypothesis;
        return out;
    }
    if (!d.contains("generators")) throw ParseError("missing key generators");
    PermGroup g(n, parse_perms(d["generators"], n, "generators"));
    if (what == "order") return {{"order", integer(group_order(g))}, {"degree", n}};
    if (what == "solvable") return {{"solvable", is_solvable(g)}, {"order", integer(group_order(g))}};
    JordanResult r = jordan_test(g);
    json out = {{"verdict", r.verdict == JordanVerdict::ForcedAnOrSn ? "ForcedAnOrSn" : "Inapplicable"}, {"reason", r.reason}};
    if (r.witness) out["witness"] = r.witness->to_string();
    if (r.verdict == JordanVerdict::ForcedAnOrSn) out["order"] = integer(group_order(g));
    return out;
}

json oracle_json(const json& d) {
    UnivariateFamily f = parse_family(d);
    auto prediction = parse_prediction(d);
    LoopTrack t = track_loop(f);
    json start = json::array();
    for (auto z : t.start) start.push_back(complex_value(z));
    json out = {{"permutation", t.permutation.to_string()},
                {"observed", cycle_type(cycle_type_of(t.permutation))},
                {"start_roots", start},
                {"samples", t.samples},
                {"max_residual", t.max_residual}};
    try {
        PredictionReport r = compare_prediction(f, prediction);
        out["prediction"] = {{"source", r.source}, {"predicted", cycle_type(r.predicted)}, {"match", r.match}};
    } catch (const std::invalid_argument&) {
        out["prediction"] = nullptr;
    }
    return out;
}

void print_table(const json& v, std::ostream& os, const std::string& indent = "") {
    for (const auto& [k, x] : v.items()) {
        if (x.is_object()) {
            os << indent << k << ":\n";
            print_table(x, os, indent + "  ");
        } else if (x.is_array() && !x.empty() && x.front().is_object()) {
            os << indent << k << ": " << x.size() << " entries\n";
            for (std::size_t i = 0; i < x.size(); ++i) {
                os << indent << "  [" << i << "]\n";
                print_table(x[i], os, indent + "    ");
            }
        } else {
            os << indent << k << "  " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvability toolkit for sparse polynomial systems"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json", out_file, doc, input_file, point;
    std::uint64_t seed = 0;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", out_file, "Write the result to FILE");
    app.add_option("--seed", seed, "Seed for randomized operations");
    app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    auto with_doc = [&](CLI::App* c) {
        c->add_option("document", doc, "JSON input; stdin when omitted or -");
        c->add_option("-i,--input", input_file, "Read the JSON input from FILE");
        return c;
    };
    std::map<std::string, CLI::App*> tuple_cmds;
    for (const char* name : {"solvable", "mixed-volume", "normalize", "monodromy", "zeta", "facings", "lucky"})
        tuple_cmds[name] = with_doc(app.add_subcommand(name));
    tuple_cmds["lucky"]->add_option("--point", point, "Test one point, as a JSON array");

    CLI::App* classify = app.add_subcommand("classify", "Enumerate classifications");
    classify->require_subcommand(1);
    Int max_vol = 4;
    bool count_only = false, no_swap = false, orientation = false;
    for (const char* name : {"circuits", "sets", "pairs"}) {
        CLI::App* c = classify->add_subcommand(name);
        c->add_option("--max-vol", max_vol, "Volume bound");
        c->add_flag("--count-only", count_only, "Print only the number of classes");
        if (std::string(name) == "pairs") {
            c->add_flag("--no-swap", no_swap, "Do not identify (A,B) with (B,A)");
            c->add_flag("--orientation-preserving", orientation, "Use SL(2,Z) instead of GL(2,Z)");
        }
    }
    CLI::App* group = app.add_subcommand("group", "Permutation group tests");
    group->require_subcommand(1);
    for (const char* name : {"order", "solvable", "jordan", "disjoint"}) with_doc(group->add_subcommand(name));
    CLI::App* oracle = app.add_subcommand("oracle", "Numeric monodromy cross-check");
    oracle->require_subcommand(1);
    with_doc(oracle->add_subcommand("track"));

    auto fail = [](int code, const std::string& kind, const std::string& msg) {
        json e = {{"schema", schema}, {"error", kind}, {"message", msg}};
        std::cerr << e.dump() << "\n";
        return code;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(2, "usage", e.what());
    }

    json result = {{"schema", schema}};
    try {
        if (classify->parsed()) {
            CLI::App* c = classify->get_subcommands().front();
            const std::string what = c->get_name();
            result["command"] = "classify " + what;
            json list = json::array();
            if (what == "circuits") {
                if (max_vol < 1 || max_vol > 4) throw std::invalid_argument("circuit enumeration needs 1 <= max-vol <= 4");
                for (const auto& k : enumerate_circuits(max_vol)) list.push_back(class_json(k));
            } else if (what == "sets") {
                if (max_vol != 4) throw std::invalid_argument("maximal sets are enumerated for max-vol 4 only");
                for (const auto& k : enumerate_maximal_sets_vol4()) list.push_back(class_json(k));
            } else {
                if (max_vol != 4) throw std::invalid_argument("maximal pairs are enumerated for max-vol 4 only");
                PairConvention conv{!no_swap, orientation};
                for (const auto& p : enumerate_maximal_pairs_2d(conv)) {
                    json d = tuple_doc({p.first, p.second}, 2);
                    d["mixed_volume"] = integer(p.mixed_volume);
                    list.push_back(d);
                }
                result["convention"] = {{"swap", !no_swap}, {"group", orientation ? "SL(2,Z)" : "GL(2,Z)"}};
            }
            result["count"] = list.size();
            if (!count_only) result["classes"] = list;
        } else if (group->parsed()) {
            const std::string what = group->get_subcommands().front()->get_name();
            result["command"] = "group " + what;
            result["result"] = group_json(what, parse_json(read_input(doc, input_file)));
        } else if (oracle->parsed()) {
            result["command"] = "oracle track";
            result["result"] = oracle_json(parse_json(read_input(doc, input_file)));
        } else {
            std::string name = app.get_subcommands().front()->get_name();
            result["command"] = name;
            SupportTuple t = parse_tuple(parse_json(read_input(doc, input_file)));
            if (name == "solvable") {
                result["result"] = verdict_json(verdict(t));
            } else if (name == "mixed-volume") {
                result["result"] = {{"mixed_volume", integer(mixed_volume(t))}};
            } else if (name == "normalize") {
                result["result"] = normalize_json(normalize_irreducible(t));
            } else if (name == "monodromy") {
                json comps = json::array();
                for (const auto& [id, c] : monodromy_summary(t)) comps.push_back({{"component", id}, {"cycle_type", cycle_type(c)}});
                result["result"] = {{"mixed_volume", integer(mixed_volume(t))}, {"components", comps}};
            } else if (name == "zeta") {
                json fs = json::array();
                for (const auto& e : essential_facings(t)) {
                    json f = facing_json(e);
                    Subtuple b{e.indices, e.parts};
                    f["important"] = is_important(t, b);
                    if (f["important"]) f["zeta"] = zeta(zeta_facing(t, b));
                    fs.push_back(f);
                }
                result["result"] = {{"discriminant", zeta(zeta_discriminant(t))}, {"facings", fs}};
            } else if (name == "facings") {
                json fs = json::array();
                for (const auto& e : essential_facings(t)) {
                    json f = facing_json(e);
                    f["cycle_type"] = cycle_type(facing_cycle_type(t, e));
                    fs.push_back(f);
                }
                result["result"] = {{"facings", fs}};
            } else if (name == "lucky") {
                if (!point.empty()) {
                    Point a = parse_point(point, ambient_dim(t));
                    result["result"] = {{"point", vec(a)}, {"lucky", is_lucky(t, a)}};
                } else {
                    json pts = json::array();
                    for (const auto& p : lucky_points(t)) pts.push_back(vec(p));
                    result["result"] = {{"lucky_points", pts}};
                }
            }
        }
    } catch (const ParseError& e) {
        return fail(2, "parse", e.what());
    } catch (const std::exception& e) {
        return fail(3, "precondition", e.what());
    }

    std::ostringstream os;
    if (format == "table") print_table(result, os);
    else os << result.dump(2) << "\n";
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) return fail(3, "precondition", "cannot write " + out_file);
        f << os.str();
    } else {
        std::cout << os.str();
    }
    return 0;
}
