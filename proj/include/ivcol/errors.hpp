#pragma once

#include <stdexcept>
#include <string>

namespace ivcol {

// Malformed graph or coloring data, whether it came from a stream or was
// built in memory. The kind distinguishes the failure for callers.
enum class ParseErrorKind {
  bad_header,
  bad_edge,
  self_loop,
  duplicate_edge,
  id_out_of_range,
  wrong_edge_count,
  bad_document,
};

struct ParseError : std::runtime_error {
  ParseErrorKind kind;
  ParseError(ParseErrorKind k, const std::string& msg)
      : std::runtime_error(msg), kind(k) {}
};

// A violated operation precondition, identified by a stable name.
struct PreconditionError : std::runtime_error {
  std::string name;
  PreconditionError(const std::string& n, const std::string& msg)
      : std::runtime_error(msg), name(n) {}
};

// A requested color count outside the feasible range [w, W].
struct SpectrumError : std::runtime_error {
  int t;
  int w;
  int W;
  SpectrumError(int t_, int w_, int W_, const std::string& msg)
      : std::runtime_error(msg), t(t_), w(w_), W(W_) {}
};

}  // namespace ivcol
