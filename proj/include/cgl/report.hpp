#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "cgl/energy.hpp"
#include "cgl/genus.hpp"
#include "cgl/graph.hpp"
#include "cgl/shape.hpp"
#include "cgl/spectrum.hpp"
#include "cgl/zagreb.hpp"

namespace cgl {

enum class GraphKind { Commuting, NonCommuting, Raw };

GraphKind graph_kind_from_string(const std::string& s);
std::string to_string(GraphKind k);

struct AnalysisOptions {
    long cap = 10000;
    int jobs = 1;
    double display_tolerance = 5e-3;  // for paper-rounded decimal comparisons only
};

/// Everything the CLI reports for one target graph.
struct AnalysisRecord {
    std::string target;                   // group name or shape expression as given
    std::optional<std::string> group;     // canonical catalog name when resolved
    GraphKind kind = GraphKind::Raw;
    SimpleGraph graph;
    ShapeDescriptor shape;
    ZagrebReport zagreb;
    ZagrebReport complement_hv;           // HV verdict of the complement
    GenusReport genus;
    std::map<MatrixKind, SpectrumMultiset> spectra;
    EnergyReport energy;
};

/// Resolve the target graph: catalog name -> commuting/non-commuting graph,
/// otherwise shape expression (Raw = the built shape, NonCommuting = its
/// complement).
SimpleGraph resolve_target(const std::string& target, GraphKind kind, const AnalysisOptions& opts,
                           std::optional<std::string>* group_name = nullptr);

AnalysisRecord analyze(const std::string& target, GraphKind kind, const AnalysisOptions& opts = {});

nlohmann::ordered_json to_json(const AnalysisRecord& r);
std::string render_json(const AnalysisRecord& r);
std::string render_csv(const AnalysisRecord& r);
std::string render_markdown(const AnalysisRecord& r);

std::string mpq_string(const mpq_class& q);        // "p/q"
nlohmann::ordered_json spectrum_json(const SpectrumMultiset& s);
nlohmann::ordered_json zagreb_json(const ZagrebReport& z);
nlohmann::ordered_json genus_json(const GenusReport& g);
nlohmann::ordered_json energy_json(const EnergyReport& e);

/// Catalog listing (name, order, genus class, expected shape).
nlohmann::ordered_json catalog_listing();

}  // namespace cgl
