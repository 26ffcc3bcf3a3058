#pragma once

#include <string>
#include <vector>

#include "nodal/bounds.hpp"
#include "nodal/classify.hpp"
#include "nodal/nodal.hpp"
#include "nodal/spectrum.hpp"

namespace nodal {

std::string to_json(const EigenvalueEntry& e);
std::string to_json(const std::vector<EigenvalueEntry>& es);
std::string to_json(const NodalReport& r);
std::string to_json(const BoundReport& r);
std::string to_json(const Verdict& v);
std::string to_json(const std::vector<Verdict>& table);
std::string to_json(const SweepResult& s, int p, int q);

std::vector<Verdict> table_from_json(const std::string& text);

std::string spectrum_csv(const std::vector<EigenvalueEntry>& es);

}  // namespace nodal
