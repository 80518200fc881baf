#include "golden.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tropval_cli/cli.hpp"

namespace golden {
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("missing golden file " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::vector<Case> load(const std::string& golden_dir, const std::string& fixture_dir) {
  std::vector<fs::path> arg_files;
  for (const auto& entry : fs::directory_iterator(golden_dir))
    if (entry.path().extension() == ".args") arg_files.push_back(entry.path());
  std::sort(arg_files.begin(), arg_files.end());

  std::vector<Case> cases;
  for (const auto& path : arg_files) {
    Case c;
    c.name = path.stem().string();
    std::istringstream lines(slurp(path));
    for (std::string line; std::getline(lines, line);) {
      if (line.empty()) continue;
      for (auto pos = line.find("@FIXTURES@"); pos != std::string::npos;
           pos = line.find("@FIXTURES@"))
        line.replace(pos, 10, fixture_dir);
      c.args.push_back(line);
    }
    fs::path base = path;
    c.expected_out = slurp(base.replace_extension(".out"));
    c.expected_code = std::stoi(slurp(base.replace_extension(".code")));
    cases.push_back(std::move(c));
  }
  return cases;
}

Outcome run(const Case& c) {
  std::ostringstream out, err;
  Outcome o;
  o.code = tropval::cli::run(c.args, out, err);
  o.out = out.str();
  return o;
}

}  // namespace golden
