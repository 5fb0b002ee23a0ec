#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weld {

/// Finite group given by its multiplication table; element 0 is the identity.
class FiniteGroupTable {
 public:
  /// Verifies closure, identity, inverses and associativity.
  FiniteGroupTable(std::string name, std::vector<std::vector<int>> table);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

class GroupTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text format: first line n, then n lines of n element indices.
FiniteGroupTable parse_group_table(std::string name, std::string_view text);
FiniteGroupTable load_group_table(const std::filesystem::path& path);

/// Directory of the bundled tables (s3, s4, a4, d4).
std::filesystem::path bundled_group_dir();

/// Loads bundled tables by name, e.g. {"s3", "s4"}.
std::vector<FiniteGroupTable> load_group_panel(const std::vector<std::string>& names);

/// The default panel: S3, S4, A4, D4.
const std::vector<FiniteGroupTable>& default_group_panel();

}  // namespace weld
