#ifndef SKEWLAB_IO_HPP
#define SKEWLAB_IO_HPP

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "skewlab/partial_action.hpp"
#include "skewlab/simplicity.hpp"
#include "skewlab/suite.hpp"

namespace skewlab {

using ojson = nlohmann::ordered_json;

// Reads and parses a JSON document; unreadable files and parse errors become
// MalformedInstance.
ojson load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// field: {"type":"gfp","p":2} or {"type":"rational"}
ojson field_to_json(const FieldSpec& field);
FieldSpec field_from_json(const ojson& j);

// group: {"free_rank":1,"torsion":[]}
ojson group_to_json(const GroupSpec& group);
GroupSpec group_from_json(const ojson& j);

// instance: {"group":..., "set":[...], "domains":{t:[labels]}, "maps":{t:{from:to}}}
// Emission is canonical: domains lists every nonzero slice in group order,
// maps stores each pair {t,-t} once under min(t,-t), entries in domain
// order.  The identity slice is implicit.
ojson instance_to_json(const PartialAction& action);
PartialAction instance_from_json(const ojson& j);

// element: {"terms":{"<t>":{"<label>":coefficient}}}; GF(p) coefficients are
// integers, rational ones "num/den" strings
ojson element_to_json(const PartialAction& action, const SkewRingElement& a);
SkewRingElement element_from_json(const PartialAction& action, const FieldSpec& field,
                                  const ojson& j);

// sigma-notation rendering, e.g. "χ{2}δ(1) + χ{1}δ(0)"
std::string pretty(const PartialAction& action, const SkewRingElement& a);

ojson guards_to_json(const Guards& guards);

ojson validation_report_json(const ValidationReport& report);
ojson check_report_json(const PartialAction& action, const FieldSpec& field,
                        const Guards& guards);
ojson simplicity_report_json(const PartialAction& action, const FieldSpec& field,
                             const SimplicityDecision& decision, const Guards& guards,
                             const std::optional<ojson>& timings = std::nullopt);
ojson suite_report_json(const std::vector<CorpusInstance>& corpus, const SuiteReport& report,
                        const SuiteOptions& options, const std::string& mode,
                        std::optional<std::uint64_t> seed,
                        const std::optional<ojson>& timings = std::nullopt);

} // namespace skewlab

#endif
