#pragma once

#include <map>
#include <string>
#include <vector>

namespace plexus {

struct RelationCheck {
  std::string relation;
  std::string lhs;
  std::string rhs;
  bool ok = false;
  double max_deviation = 0.0;
};

struct CheckReport {
  std::string name;
  std::map<std::string, std::string> meta;
  std::vector<RelationCheck> relations;

  bool passed() const {
    for (const auto& r : relations)
      if (!r.ok) return false;
    return true;
  }

  long failures() const {
    long n = 0;
    for (const auto& r : relations)
      if (!r.ok) ++n;
    return n;
  }

  void check(const std::string& relation, bool ok, double deviation = 0.0,
             const std::string& lhs = "", const std::string& rhs = "") {
    relations.push_back({relation, lhs, rhs, ok, deviation});
  }
};

}  // namespace plexus
