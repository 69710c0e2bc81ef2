#include <cctype>
#include <optional>

#include "hopfkit/ast.hpp"
#include "hopfkit/errors.hpp"

namespace hopfkit {

namespace {

struct Token {
    enum class Kind { Name, Int, Punct, End };
    Kind kind;
    std::string text;
    int line, column;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space_and_comments();
            if (pos_ >= src_.size()) break;
            const int line = line_, col = col_;
            char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    name += advance();
                out.push_back({Token::Kind::Name, name, line, col});
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string digits;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    digits += advance();
                out.push_back({Token::Kind::Int, digits, line, col});
            } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                advance();
                advance();
                out.push_back({Token::Kind::Punct, "->", line, col});
            } else if (std::string("+-*/^(){}[]<>,;~=:").find(c) != std::string::npos) {
                out.push_back({Token::Kind::Punct, std::string(1, advance()), line, col});
            } else {
                throw ParseError(line, col, std::string("unexpected character '") + c + "'");
            }
        }
        out.push_back({Token::Kind::End, "", line_, col_});
        return out;
    }

  private:
    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    PresentationFile parse_file() {
        PresentationFile file;
        file.first = parse_algebra();
        file.second = parse_algebra();
        file.pairing = parse_pairing();
        expect_end();
        return file;
    }

    ExprPtr parse_single_expression() {
        ExprPtr e = parse_expr();
        expect_end();
        return e;
    }

  private:
    const Token& peek(size_t ahead = 0) const {
        size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool at_punct(const std::string& p, size_t ahead = 0) const {
        return peek(ahead).kind == Token::Kind::Punct && peek(ahead).text == p;
    }
    bool accept_punct(const std::string& p) {
        if (!at_punct(p)) return false;
        advance();
        return true;
    }
    void expect_punct(const std::string& p) {
        if (!accept_punct(p))
            throw ParseError(peek().line, peek().column,
                             "expected '" + p + "', found '" + describe(peek()) + "'");
    }
    std::string expect_name() {
        if (peek().kind != Token::Kind::Name)
            throw ParseError(peek().line, peek().column,
                             "expected a name, found '" + describe(peek()) + "'");
        return advance().text;
    }
    void expect_keyword(const std::string& kw) {
        if (peek().kind != Token::Kind::Name || peek().text != kw)
            throw ParseError(peek().line, peek().column,
                             "expected '" + kw + "', found '" + describe(peek()) + "'");
        advance();
    }
    void expect_end() {
        if (peek().kind != Token::Kind::End)
            throw ParseError(peek().line, peek().column,
                             "trailing input at '" + describe(peek()) + "'");
    }
    static std::string describe(const Token& t) {
        return t.kind == Token::Kind::End ? "end of input" : t.text;
    }

    AlgebraBlock parse_algebra() {
        AlgebraBlock block;
        block.line = peek().line;
        block.column = peek().column;
        expect_keyword("algebra");
        block.name = expect_name();
        expect_punct("{");
        expect_keyword("params");
        expect_punct(":");
        block.param = expect_name();
        expect_punct(";");
        expect_keyword("generators");
        expect_punct(":");
        block.generators.push_back(expect_name());
        while (accept_punct("<")) {
            std::string g = expect_name();
            for (const auto& seen : block.generators)
                if (seen == g)
                    throw ParseError(peek().line, peek().column, "duplicate generator '" + g + "'");
            block.generators.push_back(g);
        }
        expect_punct(";");
        expect_keyword("relations");
        expect_punct(":");
        while (at_punct("[")) {
            RelationRule rule;
            rule.line = peek().line;
            rule.column = peek().column;
            expect_punct("[");
            rule.lhs_a = expect_name();
            expect_punct(",");
            rule.lhs_b = expect_name();
            expect_punct("]");
            expect_punct("=");
            rule.rhs = parse_expr();
            expect_punct(";");
            block.relations.push_back(std::move(rule));
        }
        expect_keyword("coproduct");
        expect_punct(":");
        do {
            std::string g = expect_name();
            expect_punct("->");
            TExprPtr t = parse_texpr();
            expect_punct(";");
            block.coproduct_rules.emplace_back(g, t);
        } while (peek().kind == Token::Kind::Name && peek().text != "counit");
        expect_keyword("counit");
        expect_punct(":");
        do {
            std::string g = expect_name();
            expect_punct("->");
            ExprPtr e = parse_expr();
            expect_punct(";");
            block.counit_rules.emplace_back(g, e);
        } while (peek().kind == Token::Kind::Name && peek().text != "antipode");
        expect_keyword("antipode");
        expect_punct(":");
        do {
            std::string g = expect_name();
            expect_punct("->");
            ExprPtr e = parse_expr();
            expect_punct(";");
            block.antipode_rules.emplace_back(g, e);
        } while (peek().kind == Token::Kind::Name);
        expect_punct("}");
        return block;
    }

    PairingBlock parse_pairing() {
        PairingBlock block;
        block.line = peek().line;
        block.column = peek().column;
        expect_keyword("pairing");
        block.first_name = expect_name();
        block.second_name = expect_name();
        expect_punct("{");
        do {
            std::string a = expect_name();
            expect_punct("~");
            std::string b = expect_name();
            block.pairs.emplace_back(a, b);
        } while (accept_punct(","));
        expect_punct("}");
        return block;
    }

    // The "(x)" marker in operator position.
    bool at_tensor_marker() const {
        return at_punct("(") && peek(1).kind == Token::Kind::Name && peek(1).text == "x" &&
               at_punct(")", 2);
    }
    void consume_tensor_marker() {
        advance();
        advance();
        advance();
    }

    TExprPtr parse_texpr() {
        TExprPtr t = parse_texpr_term();
        while (at_punct("+") || at_punct("-")) {
            bool plus = advance().text == "+";
            TExprPtr rhs = parse_texpr_term();
            auto node = std::make_shared<TExpr>();
            node->kind = plus ? TExpr::Kind::Add : TExpr::Kind::Sub;
            node->ta = t;
            node->tb = rhs;
            t = node;
        }
        return t;
    }

    // term := expr_mul "(x)" expr_mul | "(" texpr ")" | expr_mul "*" term
    TExprPtr parse_texpr_term() {
        const size_t save = pos_;
        const int line = peek().line, col = peek().column;
        try {
            ExprPtr leg = parse_mul();
            if (at_tensor_marker()) {
                consume_tensor_marker();
                ExprPtr right = parse_mul();
                auto node = std::make_shared<TExpr>();
                node->kind = TExpr::Kind::Pair;
                node->left = leg;
                node->right = right;
                node->line = line;
                node->column = col;
                return node;
            }
        } catch (const ParseError&) {
            // fall through to the alternatives below
        }
        pos_ = save;
        if (at_punct("(")) {
            const size_t save2 = pos_;
            try {
                advance();
                TExprPtr inner = parse_texpr();
                expect_punct(")");
                return inner;
            } catch (const ParseError&) {
                pos_ = save2;
            }
        }
        // scalar multiplier: factor '*' term
        ExprPtr factor = parse_unary();
        expect_punct("*");
        TExprPtr rest = parse_texpr_term();
        auto node = std::make_shared<TExpr>();
        node->kind = TExpr::Kind::ScalarMul;
        node->left = factor;
        node->ta = rest;
        node->line = line;
        node->column = col;
        return node;
    }

    ExprPtr make(Expr::Kind kind, int line, int col) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->line = line;
        e->column = col;
        return e;
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_mul();
        while ((at_punct("+") || at_punct("-")) ) {
            const Token& op = advance();
            ExprPtr rhs = parse_mul();
            ExprPtr node = make(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op.line, op.column);
            node->a = e;
            node->b = rhs;
            e = node;
        }
        return e;
    }

    ExprPtr parse_mul() {
        ExprPtr e = parse_unary();
        while (at_punct("*") || at_punct("/")) {
            // A '*' that introduces a tensor term belongs to the texpr level.
            if (at_punct("*") && at_punct("(", 1) && !at_tensor_marker_at(pos_ + 1)) {
                // '(' after '*' may open a texpr; only consume when it parses
                // as an expression.
                const size_t save = pos_;
                const Token& op = advance();
                try {
                    ExprPtr rhs = parse_unary();
                    ExprPtr node = make(Expr::Kind::Mul, op.line, op.column);
                    node->a = e;
                    node->b = rhs;
                    e = node;
                    continue;
                } catch (const ParseError&) {
                    pos_ = save;
                    break;
                }
            }
            const Token& op = advance();
            ExprPtr rhs = parse_unary();
            ExprPtr node = make(op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, op.line, op.column);
            node->a = e;
            node->b = rhs;
            e = node;
        }
        return e;
    }

    bool at_tensor_marker_at(size_t i) const {
        auto tok = [&](size_t k) -> const Token& {
            return k < toks_.size() ? toks_[k] : toks_.back();
        };
        return tok(i).kind == Token::Kind::Punct && tok(i).text == "(" &&
               tok(i + 1).kind == Token::Kind::Name && tok(i + 1).text == "x" &&
               tok(i + 2).kind == Token::Kind::Punct && tok(i + 2).text == ")";
    }

    ExprPtr parse_unary() {
        if (at_punct("-")) {
            const Token& op = advance();
            ExprPtr node = make(Expr::Kind::Neg, op.line, op.column);
            node->a = parse_unary();
            return node;
        }
        return parse_pow();
    }

    ExprPtr parse_pow() {
        ExprPtr base = parse_primary();
        if (at_punct("^")) {
            const Token& op = advance();
            int sign = 1;
            if (accept_punct("-")) sign = -1;
            if (peek().kind != Token::Kind::Int)
                throw ParseError(peek().line, peek().column, "expected an integer exponent");
            int e = std::stoi(advance().text);
            ExprPtr node = make(Expr::Kind::Pow, op.line, op.column);
            node->a = base;
            node->exponent = sign * e;
            return node;
        }
        return base;
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Int) {
            advance();
            ExprPtr node = make(Expr::Kind::Number, t.line, t.column);
            node->number = Rational::parse(t.text);
            return node;
        }
        if (t.kind == Token::Kind::Name) {
            if ((t.text == "exp" || t.text == "log1p") && at_punct("(", 1)) {
                advance();
                advance();
                ExprPtr node = make(t.text == "exp" ? Expr::Kind::Exp : Expr::Kind::Log1p, t.line,
                                    t.column);
                node->a = parse_expr();
                expect_punct(")");
                return node;
            }
            advance();
            ExprPtr node = make(Expr::Kind::Name, t.line, t.column);
            node->name = t.text;
            return node;
        }
        if (at_punct("(")) {
            advance();
            ExprPtr inner = parse_expr();
            expect_punct(")");
            return inner;
        }
        throw ParseError(t.line, t.column, "expected an expression, found '" + describe(t) + "'");
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace

PresentationFile parse_presentation(const std::string& source) {
    Parser parser(Lexer(source).run());
    return parser.parse_file();
}

ExprPtr parse_expression_text(const std::string& source) {
    Parser parser(Lexer(source).run());
    return parser.parse_single_expression();
}

}  // namespace hopfkit
