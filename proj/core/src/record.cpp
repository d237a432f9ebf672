#include "moonlight/record.hpp"

#include <algorithm>
#include <cmath>

#include "moonlight/error.hpp"

namespace moonlight {

std::string_view to_string(ValueType type) noexcept {
  return type == ValueType::Int ? "int" : "real";
}

RecordSchema::RecordSchema(std::vector<FieldDecl> fields) : fields_(std::move(fields)) {
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (fields_[i].name == fields_[j].name) {
        throw ModelError("duplicate field name '" + fields_[i].name + "'");
      }
    }
  }
}

std::optional<std::size_t> RecordSchema::index_of(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (fields_[i].name == name) return i;
  }
  return std::nullopt;
}

bool RecordSchema::same_fields(const RecordSchema& other) const noexcept {
  if (size() != other.size()) return false;
  return std::all_of(fields_.begin(), fields_.end(), [&](const FieldDecl& f) {
    auto j = other.index_of(f.name);
    return j && other[*j].type == f.type;
  });
}

void check_field_value(const FieldDecl& field, double value) {
  if (!std::isfinite(value)) {
    throw ModelError("field '" + field.name + "' holds a non-finite value");
  }
  if (field.type == ValueType::Int && std::trunc(value) != value) {
    throw ModelError("int field '" + field.name + "' holds non-integral value");
  }
}

}  // namespace moonlight
