#include <charconv>
#include <sstream>

#include "aperykit/cli.hpp"
#include "aperykit/errors.hpp"

namespace aperykit::cli {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(s);
  while (std::getline(in, piece, sep)) out.push_back(piece);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::optional<std::size_t> to_index(const std::string& s) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end || s.empty() || v == 0) return std::nullopt;
  return v - 1;
}

}  // namespace

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& piece : split(text, ',')) {
    const auto i = to_index(piece);
    if (!i) throw InvalidArgument("expected 1-based indices, got '" + text + "'");
    out.push_back(*i);
  }
  if (out.empty()) throw InvalidArgument("empty index list");
  return out;
}

OrderDescriptor parse_order(const std::string& text) {
  OrderDescriptor d;
  if (text == "lex") return d;
  if (text == "grevlex") {
    d.kind = OrderDescriptor::Kind::Grevlex;
    return d;
  }
  const auto bad = [&text](const std::string& why) {
    return InvalidOrder("order descriptor '" + text + "': " + why);
  };
  if (text.rfind("block:lambda=", 0) == 0) {
    d.kind = OrderDescriptor::Kind::Block;
    try {
      d.lambda = parse_indices(text.substr(13));
    } catch (const InvalidArgument&) {
      throw bad("lambda must be 1-based indices");
    }
    return d;
  }
  if (text.rfind("apery:", 0) != 0) {
    throw bad("expected lex, grevlex, apery:... or block:lambda=...");
  }
  d.kind = OrderDescriptor::Kind::Apery;
  bool have_j = false;
  bool in_perm = false;
  std::optional<InnerFlavor> flavor;
  std::vector<std::size_t> perm;
  for (const auto& tok : split(text.substr(6), ',')) {
    if (tok.rfind("j=", 0) == 0) {
      const auto j = to_index(tok.substr(2));
      if (!j || have_j) throw bad("j must appear once as a 1-based index");
      d.j = *j;
      have_j = true;
      in_perm = false;
    } else if (tok.rfind("inner=", 0) == 0) {
      if (!perm.empty()) throw bad("inner given twice");
      const auto v = to_index(tok.substr(6));
      if (!v) throw bad("inner must list 1-based indices");
      perm.push_back(*v);
      in_perm = true;
    } else if (tok == "lex" || tok == "revlex") {
      if (flavor) throw bad("flavor given twice");
      flavor = tok == "lex" ? InnerFlavor::Lex : InnerFlavor::Revlex;
      in_perm = false;
    } else if (in_perm && to_index(tok)) {
      perm.push_back(*to_index(tok));
    } else {
      throw bad("unexpected token '" + tok + "'");
    }
  }
  if (!have_j) throw bad("missing j=<index>");
  if (!perm.empty() || flavor) {
    InnerOrder inner;
    inner.sequence = std::move(perm);
    inner.flavor = flavor.value_or(InnerFlavor::Lex);
    d.inner = std::move(inner);
  }
  return d;
}

InnerOrder inner_for(const OrderDescriptor& d, std::size_t k) {
  InnerOrder inner = InnerOrder::default_for(k, d.j);
  if (d.inner) {
    if (!d.inner->sequence.empty()) inner.sequence = d.inner->sequence;
    inner.flavor = d.inner->flavor;
  }
  return inner;
}

OrderSpec order_for(const OrderDescriptor& d, std::span<const std::int64_t> generators) {
  const std::size_t k = generators.size();
  switch (d.kind) {
    case OrderDescriptor::Kind::Lex:
      return OrderSpec::lex(k + 1);
    case OrderDescriptor::Kind::Grevlex:
      return OrderSpec::grevlex(k + 1);
    case OrderDescriptor::Kind::Apery: {
      if (d.j >= k) {
        throw InvalidOrder("apery ordering names generator " + std::to_string(d.j + 1) +
                           " of " + std::to_string(k));
      }
      return apery_order(generators, d.j, inner_for(d, k));
    }
    case OrderDescriptor::Kind::Block:
      break;
  }
  throw InvalidOrder("block orderings apply to affine monoids only");
}

std::string variable_name(std::size_t index) {
  return index == 0 ? std::string("x") : "y" + std::to_string(index);
}

std::size_t variable_index(const std::string& name, std::size_t num_vars) {
  if (name == "x") return 0;
  if (name.size() > 1 && name[0] == 'y') {
    const auto i = to_index(name.substr(1));
    if (i && *i + 1 < num_vars) return *i + 1;
  }
  throw BadAxes("unknown variable '" + name + "'");
}

}  // namespace aperykit::cli
