#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace moonlight {

enum class ValueType { Int, Real };

std::string_view to_string(ValueType type) noexcept;

struct FieldDecl {
  std::string name;
  ValueType type = ValueType::Real;

  friend bool operator==(const FieldDecl&, const FieldDecl&) = default;
};

/// Ordered list of named, typed fields. Used for node signals and edge labels.
class RecordSchema {
 public:
  RecordSchema() = default;
  /// Throws ModelError on duplicate field names.
  explicit RecordSchema(std::vector<FieldDecl> fields);

  std::size_t size() const noexcept { return fields_.size(); }
  bool empty() const noexcept { return fields_.empty(); }
  const FieldDecl& operator[](std::size_t i) const noexcept { return fields_[i]; }
  const std::vector<FieldDecl>& fields() const noexcept { return fields_; }
  std::optional<std::size_t> index_of(std::string_view name) const noexcept;

  /// Same field set with the same types, in any order.
  bool same_fields(const RecordSchema& other) const noexcept;

  friend bool operator==(const RecordSchema&, const RecordSchema&) = default;

 private:
  std::vector<FieldDecl> fields_;
};

/// Throws ModelError unless `value` is finite and, for Int fields, integral.
void check_field_value(const FieldDecl& field, double value);

}  // namespace moonlight
