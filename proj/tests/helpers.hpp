#pragma once

#include <string>
#include <utility>

#include "constrict/rational.hpp"

namespace test_helpers {

/// Runs fn, expecting it to throw Ex; returns the message, or "" if nothing
/// (or something else) was thrown so the caller's substring check fails.
template <typename Ex, typename Fn>
std::string message_of(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const Ex& e) {
    return e.what();
  } catch (...) {
  }
  return "";
}

inline bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

inline constrict::Rational R(const std::string& text) {
  return constrict::parse_rational(text);
}

}  // namespace test_helpers
