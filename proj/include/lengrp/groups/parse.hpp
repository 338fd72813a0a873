#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lengrp/core/errors.hpp"
#include "lengrp/core/numbers.hpp"
#include "lengrp/groups/heisenberg.hpp"
#include "lengrp/groups/sdp.hpp"

namespace lengrp {

namespace detail {

inline Int parse_integer(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  std::string t(s);
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  const std::size_t digits = !t.empty() && t.front() == '-' ? 1 : 0;
  if (t.size() == digits) throw ParseError("expected an integer, got '" + std::string(s) + "'");
  for (std::size_t i = digits; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') throw ParseError("expected an integer, got '" + std::string(s) + "'");
  return Int(t);
}

inline std::vector<Int> parse_integer_list(std::string_view s) {
  std::vector<Int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    out.push_back(parse_integer(s.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

/// "x,y,z"
inline HeisElem parse_heis(std::string_view s) {
  const auto v = detail::parse_integer_list(s);
  if (v.size() != 3) throw ParseError("Heisenberg element needs three coordinates 'x,y,z'");
  return {v[0], v[1], v[2]};
}

/// "v1,...,vn;t"
inline SdpElem parse_sdp(std::string_view s, const TwistPtr& twist) {
  const std::size_t semi = s.find(';');
  if (semi == std::string_view::npos) throw ParseError("semidirect product element needs the form 'v1,...,vn;t'");
  auto v = detail::parse_integer_list(s.substr(0, semi));
  const Int t = detail::parse_integer(s.substr(semi + 1));
  if (v.size() != twist->dimension())
    throw ParseError("lattice part has " + std::to_string(v.size()) + " entries, expected " +
                     std::to_string(twist->dimension()));
  return {std::move(v), t, twist};
}

}  // namespace lengrp
