#ifndef APERYKIT_CLI_HPP
#define APERYKIT_CLI_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "aperykit/apery_engine.hpp"
#include "aperykit/binomial_groebner.hpp"

namespace aperykit::cli {

/// Parsed form of `lex`, `grevlex`, `apery:j=<i>[,inner=<perm>][,lex|revlex]`
/// or `block:lambda=<indices>`. Indices in the text are 1-based; stored
/// 0-based.
struct OrderDescriptor {
  enum class Kind { Lex, Grevlex, Apery, Block };
  Kind kind = Kind::Lex;
  std::size_t j = 0;
  std::optional<InnerOrder> inner;
  std::vector<std::size_t> lambda;
};

/// Throws InvalidOrder on malformed text.
OrderDescriptor parse_order(const std::string& text);

/// Inner ordering named by an apery descriptor on k generators; missing
/// parts fall back to lex on the remaining indices in ascending order.
InnerOrder inner_for(const OrderDescriptor& d, std::size_t k);

/// Materialize a lex, grevlex or apery descriptor on (x, y_1, .., y_k).
/// Block descriptors need an affine monoid and are rejected here.
OrderSpec order_for(const OrderDescriptor& d, std::span<const std::int64_t> generators);

/// Comma-separated 1-based indices, e.g. "1,3".
std::vector<std::size_t> parse_indices(const std::string& text);

/// Variable names: x, y1, .., yk (k = num_vars - 1).
std::string variable_name(std::size_t index);
std::size_t variable_index(const std::string& name, std::size_t num_vars);

/// 2-D slice of the staircase: `#` where the point lies in E (divisible by a
/// corner), `o` otherwise. `fixed` assigns every non-axis variable (missing
/// ones are 0); each axis runs over 0..extent-1.
std::string render_staircase(const GroebnerBasis& basis,
                             const std::map<std::size_t, std::int64_t>& fixed,
                             std::pair<std::size_t, std::size_t> axes,
                             std::int64_t extent);

/// `{"order": label, "elements": [{"lead":[...], "trail":[...]}, ...]}` as
/// compact JSON text.
std::string basis_json(const GroebnerBasis& basis);

/// Entry point behind the executable. `args` excludes the program name.
/// Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aperykit::cli

#endif  // APERYKIT_CLI_HPP
