#pragma once

#include "weylforge/json_io.hpp"

#include <string>
#include <vector>

namespace weylforge {

/// One table/example fixture transcribed from the source families. Kinds:
///   pair  — p/q texts must pass the Dixmier pair check; optional 2x2
///           matrix/inverse texts are multiplied both ways against identity
///   tuple — polys texts must pass the skew tuple check
///   word  — elementary word text must evaluate to the (p, q) target
/// Texts may use symbolic parameters; each record carries the rational
/// instantiations to run, and "symbolic": true additionally runs the
/// uninstantiated form.
struct FixtureRecord {
    std::string id;
    Json raw;
};

struct FixtureOutcome {
    std::string id;
    bool passed = false;
    std::string detail;
};

std::vector<FixtureRecord> load_fixture_file(const std::string& path);
std::vector<FixtureRecord> load_fixture_dir(const std::string& dir);
FixtureOutcome run_fixture(const FixtureRecord& record);

/// Parse "Phi(1,1) Psi(2,-1/2) ..." (space or ';' separated letters; lambdas
/// are constant expressions over the listed parameters).
ElementaryWord parse_word(const std::string& text);

/// Signature from {"n": k, "d": ["…", ...]} with rational or symbolic entries.
SignaturePtr signature_from_json(const Json& desc);

}  // namespace weylforge
