#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mahonian {

// One verification cell: a named identity instantiated at concrete
// parameters. lhs/rhs hold rendered values when a mismatch (or a missing
// existence witness) needs to be shown; they are also filled for a found
// witness so the diverging pair is visible on success.
struct VerifyReport {
    std::string identity;
    std::vector<std::pair<std::string, long long>> params;
    bool passed = false;
    std::string lhs;
    std::string rhs;
    long long elapsed_ms = 0;
};

struct VerifyOptions {
    int n_max = 1;
    std::optional<int> m_max;  // required by the root-of-unity identities
    int deg_cap = 20;          // truncation bound for the series identity
};

const std::vector<std::string>& identity_names();
bool identity_needs_m(const std::string& name);
bool identity_uses_deg_cap(const std::string& name);

// Runs every cell of the named identity up to the requested bounds and
// returns one report per cell, in deterministic order. Unknown names,
// missing/forbidden parameters and exceeded enumeration caps throw
// std::domain_error; any other exception inside a cell marks that cell
// failed instead of propagating.
std::vector<VerifyReport> run_identity(const std::string& name, const VerifyOptions& opt);

} // namespace mahonian
