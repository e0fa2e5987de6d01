#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "acm/model.hpp"

namespace acm::fixtures {

enum class Category { violation, well_formed, other };

struct Fixture {
  std::string name;      // file stem: <name>.acm.json
  Category category;
  std::string rule;      // the single rule a violation fixture triggers
  Model model;
};

/// The whole corpus, in a fixed order.
std::vector<Fixture> all();
const Fixture& get(const std::string& name);

std::filesystem::path directory();  // tests/fixtures in the source tree

// Individual builders, reused by tests that tweak a fixture.
Model inference();
Model context();
Model evidence();
Model artifact_support();
Model reasoning();
Model multilingual();
Model r1();
Model r2();
Model etcs();
Model etcs_gsn();
Model safety_pattern();
Model gsn_pattern();
Model declarations_gsn();
Model declarations_sacm();
Model evaluation_tree();

}  // namespace acm::fixtures
