#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace aflab {

/// Arithmetic expressions in one variable t: literals, pi, + - * / ^ with
/// the usual precedence (^ right-associative, binding tighter than unary
/// minus), and sin cos tan exp log sqrt abs. Parsed by recursive descent;
/// parse errors carry the byte offset.
class Expression {
  public:
    struct Node;

    double eval(double t) const;

    /// Fully parenthesized round-trippable form.
    std::string to_string() const;

    std::shared_ptr<const Node> root;
};

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

Expression parse_expression(const std::string& source);

}  // namespace aflab
