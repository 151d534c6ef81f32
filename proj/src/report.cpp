#include "cgl/report.hpp"

#include <sstream>

#include "cgl/catalog.hpp"
#include "cgl/errors.hpp"

namespace cgl {

namespace {
constexpr const char* kVersion = "0.1.0";

nlohmann::ordered_json json_mpz(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

const char* kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::Clique: return "clique";
        case ComponentKind::Friendship: return "friendship";
        case ComponentKind::GraphD: return "graph-D";
        case ComponentKind::Other: return "other";
    }
    return "?";
}

nlohmann::ordered_json energy_value_json(const EnergyValue& v) {
    nlohmann::ordered_json j;
    j["decimal"] = v.decimal();
    j["exact"] = v.exact ? nlohmann::ordered_json(mpq_string(v.value)) : nlohmann::ordered_json(nullptr);
    j["interval"] = {v.lo.get_d(), v.hi.get_d()};
    return j;
}

}  // namespace

GraphKind graph_kind_from_string(const std::string& s) {
    if (s == "c" || s == "commuting") return GraphKind::Commuting;
    if (s == "nc" || s == "noncommuting") return GraphKind::NonCommuting;
    if (s == "raw") return GraphKind::Raw;
    throw Error("unknown graph kind: " + s);
}

std::string to_string(GraphKind k) {
    switch (k) {
        case GraphKind::Commuting: return "commuting";
        case GraphKind::NonCommuting: return "noncommuting";
        case GraphKind::Raw: return "raw";
    }
    return "?";
}

std::string mpq_string(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

SimpleGraph resolve_target(const std::string& target, GraphKind kind, const AnalysisOptions& opts,
                           std::optional<std::string>* group_name) {
    if (is_catalog_name(target)) {
        const auto& entry = catalog_entry(target);
        if (group_name) *group_name = entry.name;
        if (kind == GraphKind::Raw)
            throw Error("graph kind 'raw' needs a shape expression, not a group (" + entry.name + ")");
        auto g = build_group(entry.name, opts.cap);
        SimpleGraph gc = commuting_graph(*g);
        return kind == GraphKind::Commuting ? gc : gc.complement();
    }
    if (group_name) group_name->reset();
    SimpleGraph g = build_shape(target);
    return kind == GraphKind::NonCommuting ? g.complement() : g;
}

AnalysisRecord analyze(const std::string& target, GraphKind kind, const AnalysisOptions& opts) {
    AnalysisRecord r;
    r.target = target;
    r.kind = kind;
    r.graph = resolve_target(target, kind, opts, &r.group);
    r.shape = recognize_shape(r.graph);
    r.zagreb = zagreb_indices(r.graph);
    r.complement_hv = zagreb_indices(r.graph.complement());
    // Theorem-transfer consistency: complement indices from (n, m, M1, M2)
    // must match the directly computed complement values.
    const auto transfer = complement_zagreb(r.zagreb.n, r.zagreb.m, r.zagreb.M1, r.zagreb.M2);
    if (transfer.M1 != r.complement_hv.M1 ||
        transfer.M2 != mpq_class(r.complement_hv.M2))
        throw Error("internal inconsistency: complement Zagreb transfer mismatch");
    r.genus = genus_classify(r.shape);
    r.energy = energies(r.graph, &r.spectra);
    return r;
}

nlohmann::ordered_json spectrum_json(const SpectrumMultiset& s) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& e : s.entries) {
        nlohmann::ordered_json item;
        if (e.v.rational) {
            item["value"] = mpq_string(e.v.value);
        } else {
            nlohmann::ordered_json alg;
            alg["interval"] = {e.v.iv.lo.get_d(), e.v.iv.hi.get_d()};
            nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
            for (const auto& c : e.v.factor.coeffs()) coeffs.push_back(c.get_str());
            alg["factor"] = coeffs;  // ascending coefficients
            item["value"] = alg;
        }
        item["mult"] = e.mult;
        out.push_back(item);
    }
    return out;
}

nlohmann::ordered_json zagreb_json(const ZagrebReport& z) {
    nlohmann::ordered_json j;
    j["n"] = z.n;
    j["m"] = z.m;
    j["M1"] = json_mpz(z.M1);
    j["M2"] = json_mpz(z.M2);
    if (z.has_hv) {
        nlohmann::ordered_json hv;
        hv["lhs"] = mpq_string(z.hv_lhs);
        hv["rhs"] = mpq_string(z.hv_rhs);
        hv["holds"] = z.hv_holds;
        hv["equality"] = z.hv_equality;
        j["hv"] = hv;
    } else {
        j["hv"] = nullptr;
    }
    return j;
}

nlohmann::ordered_json genus_json(const GenusReport& g) {
    nlohmann::ordered_json j;
    j["exact"] = g.exact ? nlohmann::ordered_json(*g.exact) : nlohmann::ordered_json(nullptr);
    j["euler_lower_bound"] = g.euler_lower_bound;
    j["class"] = g.label;
    return j;
}

nlohmann::ordered_json energy_json(const EnergyReport& e) {
    nlohmann::ordered_json j;
    j["E"] = energy_value_json(e.E);
    j["LE"] = energy_value_json(e.LE);
    j["LE+"] = energy_value_json(e.LEplus);
    j["ECN"] = energy_value_json(e.ECN);
    nlohmann::ordered_json flags;
    flags["hypoenergetic"] = e.hypoenergetic;
    flags["hyperenergetic"] = e.hyperenergetic;
    flags["L-hyperenergetic"] = e.l_hyper;
    flags["Q-hyperenergetic"] = e.q_hyper;
    flags["CN-hyperenergetic"] = e.cn_hyper;
    j["flags"] = flags;
    j["ordering"] = e.ordering;
    return j;
}

nlohmann::ordered_json to_json(const AnalysisRecord& r) {
    nlohmann::ordered_json j;
    j["tool"] = "cgl";
    j["version"] = kVersion;
    j["target"] = r.target;
    j["group"] = r.group ? nlohmann::ordered_json(*r.group) : nlohmann::ordered_json(nullptr);
    j["graph_kind"] = to_string(r.kind);
    j["n"] = r.graph.n();
    j["m"] = r.graph.m();
    j["shape"] = r.shape.to_string();
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (const auto& c : r.shape.components()) {
        nlohmann::ordered_json cj;
        cj["kind"] = kind_name(c.kind);
        cj["param"] = c.param;
        cj["n"] = c.n;
        cj["m"] = c.m;
        cj["count"] = c.count;
        if (!c.cert.empty()) cj["certificate"] = c.cert;
        comps.push_back(cj);
    }
    j["components"] = comps;
    j["zagreb"] = zagreb_json(r.zagreb);
    j["complement_zagreb"] = zagreb_json(r.complement_hv);
    j["genus"] = genus_json(r.genus);
    nlohmann::ordered_json spectra;
    for (const auto& [k, s] : r.spectra) spectra[to_string(k)] = spectrum_json(s);
    j["spectra"] = spectra;
    j["energies"] = energy_json(r.energy);
    return j;
}

std::string render_json(const AnalysisRecord& r) {
    return to_json(r).dump(2) + "\n";
}

std::string render_csv(const AnalysisRecord& r) {
    std::ostringstream os;
    os << "target,graph_kind,n,m,M1,M2,hv_holds,hv_equality,hv_holds_complement,"
          "genus_exact,genus_class,E,LE,LEplus,ECN,hypoenergetic,hyperenergetic,"
          "L_hyperenergetic,Q_hyperenergetic,CN_hyperenergetic,ordering,shape\n";
    auto b = [](bool v) { return v ? "true" : "false"; };
    os << '"' << r.target << "\"," << to_string(r.kind) << ',' << r.graph.n() << ',' << r.graph.m()
       << ',' << r.zagreb.M1.get_str() << ',' << r.zagreb.M2.get_str() << ','
       << (r.zagreb.has_hv ? b(r.zagreb.hv_holds) : "") << ','
       << (r.zagreb.has_hv ? b(r.zagreb.hv_equality) : "") << ','
       << (r.complement_hv.has_hv ? b(r.complement_hv.hv_holds) : "") << ','
       << (r.genus.exact ? std::to_string(*r.genus.exact) : "") << ',' << r.genus.label << ','
       << r.energy.E.decimal() << ',' << r.energy.LE.decimal() << ',' << r.energy.LEplus.decimal()
       << ',' << r.energy.ECN.decimal() << ',' << b(r.energy.hypoenergetic) << ','
       << b(r.energy.hyperenergetic) << ',' << b(r.energy.l_hyper) << ',' << b(r.energy.q_hyper)
       << ',' << b(r.energy.cn_hyper) << ',' << r.energy.ordering << ",\"" << r.shape.to_string()
       << "\"\n";
    return os.str();
}

std::string render_markdown(const AnalysisRecord& r) {
    std::ostringstream os;
    os << "# Analysis: " << r.target << " (" << to_string(r.kind) << ")\n\n";
    if (r.group) os << "Catalog group: `" << *r.group << "`\n\n";
    os << "- vertices: " << r.graph.n() << ", edges: " << r.graph.m() << "\n";
    os << "- shape: `" << r.shape.to_string() << "`\n";
    os << "- genus: " << (r.genus.exact ? std::to_string(*r.genus.exact) : "unknown") << " ("
       << r.genus.label << "), Euler lower bound " << r.genus.euler_lower_bound << "\n\n";
    os << "## Zagreb indices\n\n";
    os << "| quantity | value |\n|---|---|\n";
    os << "| M1 | " << r.zagreb.M1.get_str() << " |\n";
    os << "| M2 | " << r.zagreb.M2.get_str() << " |\n";
    if (r.zagreb.has_hv) {
        os << "| M2/m | " << mpq_string(r.zagreb.hv_lhs) << " |\n";
        os << "| M1/n | " << mpq_string(r.zagreb.hv_rhs) << " |\n";
        os << "| Hansen-Vukicevic | " << (r.zagreb.hv_holds ? "holds" : "fails")
           << (r.zagreb.hv_equality ? " (equality)" : "") << " |\n";
    }
    os << "\n## Energies\n\n";
    os << "| energy | decimal | exact |\n|---|---|---|\n";
    auto row = [&](const char* name, const EnergyValue& v) {
        os << "| " << name << " | " << v.decimal() << " | "
           << (v.exact ? mpq_string(v.value) : std::string("-")) << " |\n";
    };
    row("E", r.energy.E);
    row("LE", r.energy.LE);
    row("LE+", r.energy.LEplus);
    row("E_CN", r.energy.ECN);
    os << "\nordering: `" << r.energy.ordering << "`\n";
    os << "\nflags: hypoenergetic=" << r.energy.hypoenergetic
       << ", hyperenergetic=" << r.energy.hyperenergetic << ", L-hyper=" << r.energy.l_hyper
       << ", Q-hyper=" << r.energy.q_hyper << ", CN-hyper=" << r.energy.cn_hyper << "\n";
    os << "\n## Spectra\n\n";
    for (const auto& [k, s] : r.spectra) {
        os << "- " << to_string(k) << ": `" << spectrum_json(s).dump() << "`\n";
    }
    return os.str();
}

nlohmann::ordered_json catalog_listing() {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& e : catalog()) {
        nlohmann::ordered_json j;
        j["name"] = e.name;
        j["order"] = e.expected_order;
        j["genus_class"] = e.genus_class;
        j["expected_shape"] =
            e.expected_shape.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(e.expected_shape);
        out.push_back(j);
    }
    return out;
}

}  // namespace cgl
