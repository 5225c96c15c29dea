#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctk::acceptance {

/// One top-level acceptance criterion. `quick` shrinks sweep sizes for the
/// fast selftest; the full run uses the released parameters.
struct Criterion {
    std::string name;
    bool (*run)(std::ostream& log, bool quick);
};

const std::vector<Criterion>& criteria();

/// Runs every criterion, printing one "[PASS]"/"[FAIL]" line per criterion
/// plus a summary line. Returns true iff everything passed.
bool run_all(std::ostream& out, bool quick);

}  // namespace ctk::acceptance
