#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jetorder/families.hpp"
#include "jetorder/jets.hpp"

namespace jetorder {

struct CheckRow {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
  Source source = Source::Oracle;
};

struct VerifyReport {
  std::string family;
  std::vector<CheckRow> rows;
  std::vector<std::string> notes;

  bool passed() const;
  const CheckRow* find(const std::string& name) const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int sample_points = 10;
  RankOptions rank;
  MinorOptions minors;
};

VerifyReport verify_veronese(int n, int m, const VerifyOptions& options = {});
VerifyReport verify_hirzebruch(int r, int k, int l, const VerifyOptions& options = {});

}  // namespace jetorder
