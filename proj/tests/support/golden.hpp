#pragma once

#include <string>
#include <vector>

namespace golden {

/// One CLI invocation with its frozen stdout and exit code. Arguments come
/// from `<name>.args`, one per line, with @FIXTURES@ replaced by the fixture dir.
struct Case {
  std::string name;
  std::vector<std::string> args;
  std::string expected_out;
  int expected_code = 0;
};

std::vector<Case> load(const std::string& golden_dir, const std::string& fixture_dir);

struct Outcome {
  std::string out;
  int code = 0;
};

Outcome run(const Case& c);

}  // namespace golden
