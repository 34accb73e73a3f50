#include "aflab/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "aflab/numerics.hpp"

namespace aflab {

struct Expression::Node {
    enum class Kind { Num, Var, Pi, Neg, Add, Sub, Mul, Div, Pow, Call } kind;
    double num = 0.0;
    std::string func;
    std::shared_ptr<const Node> a, b;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Kind kind, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

double call_fn(const std::string& f, double x) {
    if (f == "sin") return std::sin(x);
    if (f == "cos") return std::cos(x);
    if (f == "tan") return std::tan(x);
    if (f == "exp") return std::exp(x);
    if (f == "log") return std::log(x);
    if (f == "sqrt") return std::sqrt(x);
    return std::abs(x);  // "abs"
}

bool known_fn(const std::string& f) {
    return f == "sin" || f == "cos" || f == "tan" || f == "exp" || f == "log" || f == "sqrt" ||
           f == "abs";
}

class Parser {
  public:
    explicit Parser(const std::string& src) : src_(src) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

  private:
    const std::string& src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    // expr := term (('+' | '-') term)*
    NodePtr expr() {
        NodePtr e = term();
        for (;;) {
            if (eat('+'))
                e = make(Node::Kind::Add, e, term());
            else if (eat('-'))
                e = make(Node::Kind::Sub, e, term());
            else
                return e;
        }
    }

    // term := unary (('*' | '/') unary)*
    NodePtr term() {
        NodePtr e = unary();
        for (;;) {
            if (eat('*'))
                e = make(Node::Kind::Mul, e, unary());
            else if (eat('/'))
                e = make(Node::Kind::Div, e, unary());
            else
                return e;
        }
    }

    // unary := '-' unary | power     (so -x^2 parses as -(x^2))
    NodePtr unary() {
        if (eat('-')) return make(Node::Kind::Neg, unary());
        return power();
    }

    // power := atom ('^' unary)?     (right associative, 2^-3 works)
    NodePtr power() {
        NodePtr base = atom();
        if (eat('^')) return make(Node::Kind::Pow, base, unary());
        return base;
    }

    NodePtr atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("expected expression", pos_);
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        throw ParseError("expected expression", pos_);
    }

    NodePtr number() {
        const char* begin = src_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) throw ParseError("bad number", pos_);
        pos_ += static_cast<std::size_t>(end - begin);
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Num;
        n->num = v;
        return n;
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string name = src_.substr(start, pos_ - start);
        if (name == "t") return make(Node::Kind::Var);
        if (name == "pi") return make(Node::Kind::Pi);
        if (known_fn(name)) {
            if (!eat('(')) throw ParseError("expected '(' after " + name, pos_);
            if (peek() == ')') throw ParseError("expected expression", pos_);
            NodePtr arg = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Call;
            n->func = name;
            n->a = arg;
            return n;
        }
        throw ParseError("unknown identifier '" + name + "'", start);
    }
};

double eval_node(const Node& n, double t) {
    switch (n.kind) {
        case Node::Kind::Num: return n.num;
        case Node::Kind::Var: return t;
        case Node::Kind::Pi: return kPi;
        case Node::Kind::Neg: return -eval_node(*n.a, t);
        case Node::Kind::Add: return eval_node(*n.a, t) + eval_node(*n.b, t);
        case Node::Kind::Sub: return eval_node(*n.a, t) - eval_node(*n.b, t);
        case Node::Kind::Mul: return eval_node(*n.a, t) * eval_node(*n.b, t);
        case Node::Kind::Div: return eval_node(*n.a, t) / eval_node(*n.b, t);
        case Node::Kind::Pow: return std::pow(eval_node(*n.a, t), eval_node(*n.b, t));
        case Node::Kind::Call: return call_fn(n.func, eval_node(*n.a, t));
    }
    return 0.0;
}

std::string print_node(const Node& n) {
    switch (n.kind) {
        case Node::Kind::Num: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", n.num);
            return buf;
        }
        case Node::Kind::Var: return "t";
        case Node::Kind::Pi: return "pi";
        case Node::Kind::Neg: return "(-" + print_node(*n.a) + ")";
        case Node::Kind::Add: return "(" + print_node(*n.a) + "+" + print_node(*n.b) + ")";
        case Node::Kind::Sub: return "(" + print_node(*n.a) + "-" + print_node(*n.b) + ")";
        case Node::Kind::Mul: return "(" + print_node(*n.a) + "*" + print_node(*n.b) + ")";
        case Node::Kind::Div: return "(" + print_node(*n.a) + "/" + print_node(*n.b) + ")";
        case Node::Kind::Pow: return "(" + print_node(*n.a) + "^" + print_node(*n.b) + ")";
        case Node::Kind::Call: return n.func + "(" + print_node(*n.a) + ")";
    }
    return "";
}

}  // namespace

double Expression::eval(double t) const { return eval_node(*root, t); }

std::string Expression::to_string() const { return print_node(*root); }

Expression parse_expression(const std::string& source) {
    Parser p(source);
    return Expression{p.parse()};
}

}  // namespace aflab
