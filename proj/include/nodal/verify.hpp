#pragma once

#include <ostream>
#include <string>

namespace nodal {

// runs the ten acceptance checks, printing one [PASS]/[FAIL] line each;
// returns true iff all pass; data_dir holds the reference csv fixtures
bool run_acceptance(std::ostream& out, const std::string& data_dir);

}  // namespace nodal
