#ifndef CLT_BUILTINS_HPP
#define CLT_BUILTINS_HPP

#include <string>
#include <vector>

#include "clt/permgroup.hpp"

namespace clt {

// Named groups: A4, S3, S4, S5, S6, SL23, V4, Q8. Parametric forms:
// agl:p:m, cyclic:n, gpqn:p:q:n, sym:n.
PermGroup builtin_group(const std::string& name);

std::vector<std::string> builtin_names();

}  // namespace clt

#endif
