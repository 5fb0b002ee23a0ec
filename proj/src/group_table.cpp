#include "weldkit/group_table.hpp"

#include <fstream>
#include <sstream>

namespace weld {

FiniteGroupTable::FiniteGroupTable(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw GroupTableError(name_ + ": empty table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw GroupTableError(name_ + ": table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw GroupTableError(name_ + ": entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a)
      throw GroupTableError(name_ + ": element 0 is not the identity");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0 && table_[b][a] == 0) inverse_[a] = b;
    if (inverse_[a] < 0) throw GroupTableError(name_ + ": element without inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw GroupTableError(name_ + ": multiplication is not associative");
}

FiniteGroupTable parse_group_table(std::string name, std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0;
  if (!(in >> n) || n <= 0) throw GroupTableError(name + ": missing element count");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (auto& row : table)
    for (int& x : row)
      if (!(in >> x)) throw GroupTableError(name + ": truncated table");
  std::string extra;
  if (in >> extra) throw GroupTableError(name + ": trailing data");
  return FiniteGroupTable(std::move(name), std::move(table));
}

FiniteGroupTable load_group_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GroupTableError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_table(path.stem().string(), buf.str());
}

std::filesystem::path bundled_group_dir() {
  return std::filesystem::path(WELDKIT_DATA_DIR) / "groups";
}

std::vector<FiniteGroupTable> load_group_panel(const std::vector<std::string>& names) {
  std::vector<FiniteGroupTable> out;
  for (const auto& n : names) out.push_back(load_group_table(bundled_group_dir() / (n + ".txt")));
  return out;
}

const std::vector<FiniteGroupTable>& default_group_panel() {
  static const std::vector<FiniteGroupTable> panel = load_group_panel({"s3", "s4", "a4", "d4"});
  return panel;
}

}  // namespace weld
