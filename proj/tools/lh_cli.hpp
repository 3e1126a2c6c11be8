#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lhcli {

/// Runs one `lh` invocation; args exclude the program name. Returns 0 on
/// success, 1 if a requested check fails, 2 on bad flags or parameters.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct IdentityInfo {
    std::string name;
    std::string statement;
};

/// The `verify` sub-verbs, one identity each, in canonical order.
const std::vector<IdentityInfo>& identities();

}  // namespace lhcli
