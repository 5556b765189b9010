#pragma once

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fockvar/error.hpp"

namespace fockvar {

// A closed-grammar real expression in z, compiled to a postfix program.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := unary ('^' factor)?
//   unary  := '-'? atom
//   atom   := number | abs(z) | re(z) | im(z)
//           | func '(' expr (',' expr)? ')' | '(' expr ')'
//   func   := log | exp | sin | min | max
//
// A bare z is rejected; z only appears through abs/re/im.
class ExponentExpression {
 public:
  enum class Op : std::uint8_t {
    push, abs_z, re_z, im_z, add, sub, mul, div, pow, neg, log, exp, sin, min, max
  };
  struct Instruction {
    Op op;
    double value = 0.0;
  };

  static constexpr std::size_t max_stack = 64;

  static ExponentExpression parse(std::string_view source) {
    Parser parser{source, 0, {}};
    parser.parse_expr();
    parser.skip_space();
    if (parser.pos != source.size()) parser.fail("unexpected trailing input");
    ExponentExpression e;
    e.source_ = std::string(source);
    e.program_ = std::move(parser.out);
    e.check_static();
    return e;
  }

  // Throws EvaluationError on division by zero, log of a non-positive
  // argument, or any non-finite intermediate.
  double operator()(std::complex<double> z) const {
    std::array<double, max_stack> stack{};
    std::size_t top = 0;
    for (const auto& ins : program_) {
      switch (ins.op) {
        case Op::push: stack[top++] = ins.value; break;
        case Op::abs_z: stack[top++] = std::abs(z); break;
        case Op::re_z: stack[top++] = z.real(); break;
        case Op::im_z: stack[top++] = z.imag(); break;
        case Op::neg: stack[top - 1] = -stack[top - 1]; break;
        case Op::log:
          if (!(stack[top - 1] > 0.0)) throw EvaluationError("log of non-positive value in '" + source_ + "'");
          stack[top - 1] = std::log(stack[top - 1]);
          break;
        case Op::exp: stack[top - 1] = std::exp(stack[top - 1]); break;
        case Op::sin: stack[top - 1] = std::sin(stack[top - 1]); break;
        default: {
          const double rhs = stack[--top];
          double& lhs = stack[top - 1];
          switch (ins.op) {
            case Op::add: lhs += rhs; break;
            case Op::sub: lhs -= rhs; break;
            case Op::mul: lhs *= rhs; break;
            case Op::div:
              if (rhs == 0.0) throw EvaluationError("division by zero in '" + source_ + "'");
              lhs /= rhs;
              break;
            case Op::pow: lhs = std::pow(lhs, rhs); break;
            case Op::min: lhs = std::min(lhs, rhs); break;
            case Op::max: lhs = std::max(lhs, rhs); break;
            default: break;
          }
        }
      }
    }
    const double result = stack[0];
    if (!std::isfinite(result)) throw EvaluationError("non-finite value from '" + source_ + "'");
    return result;
  }

  const std::string& source() const { return source_; }
  const std::vector<Instruction>& program() const { return program_; }

 private:
  struct Parser {
    std::string_view src;
    std::size_t pos;
    std::vector<Instruction> out;

    [[noreturn]] void fail(const std::string& what) const {
      throw InputError("exponent expression: " + what + " at offset " + std::to_string(pos) + " in '" +
                       std::string(src) + "'");
    }
    void skip_space() {
      while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool accept(char c) {
      skip_space();
      if (pos < src.size() && src[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    void expect(char c) {
      if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::string_view identifier() {
      skip_space();
      const std::size_t start = pos;
      while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
      return src.substr(start, pos - start);
    }

    void parse_expr() {
      parse_term();
      for (;;) {
        if (accept('+')) {
          parse_term();
          out.push_back({Op::add});
        } else if (accept('-')) {
          parse_term();
          out.push_back({Op::sub});
        } else {
          return;
        }
      }
    }
    void parse_term() {
      parse_factor();
      for (;;) {
        if (accept('*')) {
          parse_factor();
          out.push_back({Op::mul});
        } else if (accept('/')) {
          parse_factor();
          out.push_back({Op::div});
        } else {
          return;
        }
      }
    }
    // A single leading minus belongs to the base, so -2^2 = (-2)^2 = 4.
    void parse_factor() {
      if (accept('-')) {
        parse_atom();
        out.push_back({Op::neg});
      } else {
        parse_atom();
      }
      if (accept('^')) {
        parse_factor();
        out.push_back({Op::pow});
      }
    }
    void parse_atom() {
      skip_space();
      if (pos >= src.size()) fail("unexpected end of input");
      const char c = src[pos];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        double v = 0.0;
        const auto [end, ec] = std::from_chars(src.data() + pos, src.data() + src.size(), v);
        if (ec != std::errc{}) fail("malformed number");
        pos = static_cast<std::size_t>(end - src.data());
        out.push_back({Op::push, v});
        return;
      }
      if (accept('(')) {
        parse_expr();
        expect(')');
        return;
      }
      const std::size_t at = pos;
      const std::string_view name = identifier();
      if (name.empty()) fail("unexpected character");
      if (name == "z") {
        pos = at;
        fail("bare z is not allowed; use abs(z), re(z) or im(z)");
      }
      if (name == "abs" || name == "re" || name == "im") {
        expect('(');
        if (identifier() != "z") fail(std::string(name) + "() takes exactly z");
        expect(')');
        out.push_back({name == "abs" ? Op::abs_z : name == "re" ? Op::re_z : Op::im_z});
        return;
      }
      Op op{};
      int arity = 1;
      if (name == "log") op = Op::log;
      else if (name == "exp") op = Op::exp;
      else if (name == "sin") op = Op::sin;
      else if (name == "min") op = Op::min, arity = 2;
      else if (name == "max") op = Op::max, arity = 2;
      else {
        pos = at;
        fail("unknown function '" + std::string(name) + "'");
      }
      expect('(');
      parse_expr();
      if (arity == 2) {
        expect(',');
        parse_expr();
      }
      expect(')');
      out.push_back({op});
    }
  };

  // Stack-depth check plus constant folding: a divisor or log argument that
  // is z-independent and invalid is rejected here rather than at runtime.
  void check_static() const {
    std::vector<std::optional<double>> stack;
    std::size_t depth = 0;
    for (const auto& ins : program_) {
      switch (ins.op) {
        case Op::push: stack.emplace_back(ins.value); break;
        case Op::abs_z:
        case Op::re_z:
        case Op::im_z: stack.emplace_back(std::nullopt); break;
        case Op::neg:
        case Op::log:
        case Op::exp:
        case Op::sin: {
          auto& v = stack.back();
          if (v) {
            if (ins.op == Op::log && !(*v > 0.0))
              throw InputError("exponent expression takes log of non-positive constant: '" + source_ + "'");
            v = ins.op == Op::neg ? -*v : ins.op == Op::log ? std::log(*v) : ins.op == Op::exp ? std::exp(*v) : std::sin(*v);
          }
          break;
        }
        default: {
          const auto rhs = stack.back();
          stack.pop_back();
          auto& lhs = stack.back();
          if (ins.op == Op::div && rhs && *rhs == 0.0)
            throw InputError("exponent expression divides by zero: '" + source_ + "'");
          if (lhs && rhs) {
            const double a = *lhs, b = *rhs;
            switch (ins.op) {
              case Op::add: lhs = a + b; break;
              case Op::sub: lhs = a - b; break;
              case Op::mul: lhs = a * b; break;
              case Op::div: lhs = a / b; break;
              case Op::pow: lhs = std::pow(a, b); break;
              case Op::min: lhs = std::min(a, b); break;
              case Op::max: lhs = std::max(a, b); break;
              default: break;
            }
          } else {
            lhs = std::nullopt;
          }
        }
      }
      depth = std::max(depth, stack.size());
    }
    if (depth > max_stack) throw InputError("exponent expression nests too deeply: '" + source_ + "'");
  }

  std::string source_;
  std::vector<Instruction> program_;
};

}  // namespace fockvar
