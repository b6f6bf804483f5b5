#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace prolong {

// An ordered, immutable list of distinct variable names. Copies share storage.
class VarSet {
 public:
  VarSet();
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const noexcept { return data_->names.size(); }
  bool empty() const noexcept { return data_->names.empty(); }
  const std::string& name(std::size_t i) const { return data_->names.at(i); }
  const std::vector<std::string>& names() const noexcept { return data_->names; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VarSet& a, const VarSet& b);

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

// Variable identifiers match [A-Za-z][A-Za-z0-9_]*.
bool is_valid_variable_name(std::string_view name);

// x1, ..., xn
VarSet numbered_vars(std::string_view prefix, std::size_t n);

}  // namespace prolong
