#ifndef SYMINEQ_JSON_IO_HPP
#define SYMINEQ_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "symineq/multipoly.hpp"
#include "symineq/paperlab.hpp"
#include "symineq/partition.hpp"
#include "symineq/positivity.hpp"
#include "symineq/unipoly.hpp"

namespace symineq {

using json = nlohmann::json;

// Partitions are JSON arrays of integers, [3,1,1].
json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j); // rejects unsorted input

// {"vars":[...], "terms":[{"e":[...], "c":"p/q"}...]}, leading term first.
json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j);
json poly_to_json(const UniPoly& p); // via the shared schema, vars = [var]

// {"status","certificate","witness"?,"budget"}
json verdict_to_json(const Verdict& v);

// {"lemma","overall","checks":[{"name","status","detail"(,"ms")}...]}
json report_to_json(const LemmaReport& r, bool with_timings = false);

std::vector<Rational> rationals_from_json(const json& j);

} // namespace symineq

#endif
