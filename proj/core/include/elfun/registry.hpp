#pragma once

// Function registry and element-wise evaluation over arrays.
//
// Every scalar function is registered under its low-level name with the
// array-style name (and any historical spellings) as aliases.  Names are
// matched case-insensitively; a name may carry several arities (melE(m) and
// melE(x, m)).

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "elfun/numeric.hpp"

namespace elfun {

enum class ArgRole {
  argument,
  amplitude,
  characteristic,
  parameter,
  modulus,
  nome,
  coefficient
};

std::string_view to_string(ArgRole role);

struct FunctionDescriptor {
  std::string name;
  std::vector<std::string> aliases;
  int arity = 0;
  std::vector<ArgRole> arg_roles;
  std::string domain_note;
  std::string table;  // catalogue section, e.g. "A7", or "k" for modulus forms
  std::function<double(std::span<const double>)> scalar;

  double operator()(std::span<const double> args) const { return scalar(args); }
};

/// Row-major n-dimensional array; an empty shape is a scalar.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  static Tensor scalar(double v) { return {{}, {v}}; }
  static Tensor vector(std::vector<double> v) {
    const std::size_t n = v.size();
    return {{n}, std::move(v)};
  }
  bool is_scalar() const { return shape.empty(); }
  std::size_t size() const { return data.size(); }
};

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ArityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotFoundError : std::out_of_range {
  NotFoundError(const std::string& what, std::vector<std::string> near)
      : std::out_of_range(what), near_matches(std::move(near)) {}
  std::vector<std::string> near_matches;
};

/// All registered functions, in catalogue order.
const std::vector<FunctionDescriptor>& registry();

/// Case-insensitive lookup over names and aliases.  Without an arity the
/// lowest-arity overload is returned.  Throws NotFoundError.
const FunctionDescriptor& lookup(std::string_view name,
                                 std::optional<int> arity = std::nullopt);

/// Up to `limit` registered names closest to `name` by edit distance.
std::vector<std::string> near_matches(std::string_view name, std::size_t limit = 5);

/// Applies f element-wise.  Non-scalar arguments must share one shape.
/// Throws ArityError or ShapeError; every other failure is a NaN element.
Tensor broadcast_apply(const FunctionDescriptor& f, std::span<const Tensor> args);

/// CSV of name, aliases, arity, roles, table, domain note; one row per
/// descriptor with a header row.
std::string registry_manifest_csv();

}  // namespace elfun
