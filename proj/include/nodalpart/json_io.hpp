#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "nodalpart/cover.hpp"
#include "nodalpart/explore.hpp"
#include "nodalpart/nodal.hpp"
#include "nodalpart/partition.hpp"
#include "nodalpart/surgery.hpp"

namespace nodalpart {

using nlohmann::json;

// All readers throw InvalidInput on malformed documents.

json to_json(const SurfaceSpec& s);
// {"surface": "<preset>", "width": W, "height": H}, or explicit
// {"x_gluing": ..., "y_gluing": ..., "width": W, "height": H}.
SurfaceSpec surface_from_json(const json& j);

// {"surface": {...}, "labels": [row-major domain ids], "walls": [[edge ids]]}
json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const InvariantReport& r);
json to_json(const Verdict& v);
json to_json(const DomainReport& d);
json to_json(const ChiSigmaReport& r);
json to_json(const CoverReport& r);
json to_json(const CutPath& path);
json to_json(const ComplementClass& c);
json to_json(const TransitionEstimate& t);
json to_json(const BatchStats& s);
json to_json(const SweepRow& row, SurfaceKind surface);

json singular_json(const CellComplex& c, const BoundaryGraph& g);

// Invariants, singular vertices, domain classifications, the chi-sigma
// identity and normality in one object.
json partition_report(const Partition& p);

// {"terms": [{"c", "fx": {"k", "m", "p"}, "fy": {...}}]} or
// {"family": "phi", "beta": b, "theta": t} / {"family": "bands", "m": m}.
json to_json(const Eigenfunction& f);
Eigenfunction eigenfunction_from_json(const json& j);

// {"edges": [ids]} or {"points": [[i, j], ...]} in chart coordinates.
std::vector<int> edge_list_from_json(const CellComplex& c, const json& j);

json read_json_file(const std::filesystem::path& path);

}  // namespace nodalpart
