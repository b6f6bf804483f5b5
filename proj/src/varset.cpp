#include "prolong/varset.hpp"

#include <cctype>
#include <stdexcept>

namespace prolong {

bool is_valid_variable_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

VarSet::VarSet() : data_(std::make_shared<const Data>()) {}

VarSet::VarSet(std::vector<std::string> names) {
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!is_valid_variable_name(names[i]))
      throw std::invalid_argument("invalid variable name '" + names[i] + "'");
    if (!data->index.emplace(names[i], i).second)
      throw std::invalid_argument("duplicate variable name '" + names[i] + "'");
  }
  data->names = std::move(names);
  data_ = std::move(data);
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

bool operator==(const VarSet& a, const VarSet& b) {
  return a.data_ == b.data_ || a.data_->names == b.data_->names;
}

VarSet numbered_vars(std::string_view prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return VarSet(std::move(names));
}

}  // namespace prolong
