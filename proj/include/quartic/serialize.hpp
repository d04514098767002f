// Structured documents (schema "quartic-conics/1"): tower elements,
// conic records and the report envelopes emitted by the command line tool.
#pragma once

#include "quartic/conics.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace quartic {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "quartic-conics/1";

// {generators: [d1, ...], coords: {"mask": "num/den", ...}}
json tower_to_json(const TowerElement& x);

// Rebuilds towers from their generator lists, sharing one descriptor per list.
class TowerCache {
 public:
  Tower get(const std::vector<Integer>& generators);

 private:
  std::map<std::vector<Integer>, Tower> towers_;
};
TowerElement tower_from_json(const json& j, TowerCache& cache);

std::string monomial_name(const Monomial& m, unsigned arity);  // "x^2", "x*w", "1"
Monomial parse_monomial(const std::string& s);                 // inverse, arity 4

json point_to_json(const SurfaceParams& p);  // ["1", "87", ...]
SurfaceParams point_from_json(const json& j);

struct ConicDocument {
  SurfaceParams point{1, 0, 0, 0, 0};
  int node = 0;
  int branch = 1;
  unsigned gamma = 0;
  Plane plane;
  TPoly quad{4};
  std::optional<bool> verified;
};
ConicDocument to_document(const SurfaceParams& p, const ConicRecord& r, std::optional<bool> verified = {});
json conic_to_json(const ConicDocument& c);
ConicDocument conic_from_json(const json& j, TowerCache& cache);
bool operator==(const ConicDocument& a, const ConicDocument& b);

// Order within a listing: node, then branch (+ before -), then canonical plane.
std::vector<std::size_t> output_order(const ConicSet& set);

// {"schema": ..., "command": ..., "seed": ...}
json envelope(const std::string& command, std::uint64_t seed);

}  // namespace quartic
