#include "grlie/expr.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grlie/errors.hpp"

namespace grlie {

namespace {

enum class TokKind { kInt, kGen, kPlus, kMinus, kStar, kLBracket, kRBracket, kComma, kEnd };

struct Token {
    TokKind kind;
    std::size_t offset;
    Int value;         // kInt
    std::string name;  // kGen, canonical form without spaces
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = std::move(current_);
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ == text_.size()) {
            current_ = {TokKind::kEnd, start, 0, {}};
            return;
        }
        const char c = text_[pos_];
        switch (c) {
            case '+': ++pos_; current_ = {TokKind::kPlus, start, 0, {}}; return;
            case '-': ++pos_; current_ = {TokKind::kMinus, start, 0, {}}; return;
            case '*': ++pos_; current_ = {TokKind::kStar, start, 0, {}}; return;
            case '[': ++pos_; current_ = {TokKind::kLBracket, start, 0, {}}; return;
            case ']': ++pos_; current_ = {TokKind::kRBracket, start, 0, {}}; return;
            case ',': ++pos_; current_ = {TokKind::kComma, start, 0, {}}; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
            current_ = {TokKind::kInt, start, Int(std::string(text_.substr(pos_, end - pos_))), {}};
            pos_ = end;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
                ++end;
            std::string name(text_.substr(pos_, end - pos_));
            // a '[' immediately after an identifier is a subscript when it
            // holds an integer list; otherwise it starts a Lie bracket
            if (end < text_.size() && text_[end] == '[') {
                if (auto sub = scan_subscript(end)) {
                    name += sub->first;
                    end = sub->second;
                }
            }
            current_ = {TokKind::kGen, start, 0, std::move(name)};
            pos_ = end;
            return;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
    }

    /// Returns the canonical "[i,j,...]" text and the position one past ']'
    /// when text_[open..] is an integer-subscript list.
    std::optional<std::pair<std::string, std::size_t>> scan_subscript(std::size_t open) const {
        std::string canon = "[";
        std::size_t i = open + 1;
        bool expect_number = true;
        while (i < text_.size()) {
            const char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (expect_number) {
                if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
                std::size_t end = i;
                while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
                    ++end;
                canon += std::string(text_.substr(i, end - i));
                i = end;
                expect_number = false;
                continue;
            }
            if (c == ',') {
                canon += ',';
                ++i;
                expect_number = true;
                continue;
            }
            if (c == ']') {
                canon += ']';
                return std::make_pair(canon, i + 1);
            }
            return std::nullopt;
        }
        return std::nullopt;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

/// Either an integer scalar or a homogeneous Lie element.
struct Value {
    std::optional<Int> scalar;
    std::optional<LieElement> elem;
    std::size_t offset = 0;

    bool is_scalar() const { return scalar.has_value(); }
};

class Parser {
public:
    Parser(std::string_view text, const FreeLieAlgebra& algebra)
        : lexer_(text), algebra_(algebra) {}

    LieElement run() {
        Value v = parse_expr();
        if (lexer_.peek().kind != TokKind::kEnd)
            throw ParseError("trailing input after expression", lexer_.peek().offset);
        if (v.is_scalar())
            throw ParseError("expression is a scalar, not a Lie element", v.offset);
        return std::move(*v.elem);
    }

private:
    Value parse_expr() {
        Value acc = parse_term();
        while (true) {
            TokKind k = lexer_.peek().kind;
            if (k != TokKind::kPlus && k != TokKind::kMinus) return acc;
            Token op = lexer_.take();
            Value rhs = parse_term();
            if (acc.is_scalar() != rhs.is_scalar())
                throw ParseError("cannot add a scalar and a Lie element", op.offset);
            if (acc.is_scalar()) {
                *acc.scalar += (k == TokKind::kPlus ? *rhs.scalar : -*rhs.scalar);
            } else {
                if (acc.elem->degree() != rhs.elem->degree())
                    throw InhomogeneousExpressionError(
                        "inhomogeneous sum: degrees " + std::to_string(acc.elem->degree()) +
                        " and " + std::to_string(rhs.elem->degree()) + " (at byte " +
                        std::to_string(op.offset) + ")");
                if (k == TokKind::kPlus)
                    *acc.elem += *rhs.elem;
                else
                    *acc.elem -= *rhs.elem;
            }
        }
    }

    Value parse_term() {
        Value acc = parse_unary();
        while (lexer_.peek().kind == TokKind::kStar) {
            Token op = lexer_.take();
            Value rhs = parse_unary();
            if (acc.is_scalar() && rhs.is_scalar()) {
                *acc.scalar *= *rhs.scalar;
            } else if (acc.is_scalar()) {
                *rhs.elem *= *acc.scalar;
                rhs.offset = acc.offset;
                acc = std::move(rhs);
            } else if (rhs.is_scalar()) {
                *acc.elem *= *rhs.scalar;
            } else {
                throw ParseError("'*' multiplies by integer scalars only; use [ , ] for brackets",
                                 op.offset);
            }
        }
        return acc;
    }

    Value parse_unary() {
        if (lexer_.peek().kind == TokKind::kMinus) {
            Token op = lexer_.take();
            Value v = parse_unary();
            if (v.is_scalar())
                *v.scalar = -*v.scalar;
            else
                *v.elem *= Int(-1);
            v.offset = op.offset;
            return v;
        }
        return parse_atom();
    }

    Value parse_atom() {
        Token t = lexer_.take();
        switch (t.kind) {
            case TokKind::kInt: {
                Value v;
                v.scalar = t.value;
                v.offset = t.offset;
                return v;
            }
            case TokKind::kGen: {
                auto idx = algebra_.alphabet().index_of(t.name);
                if (!idx)
                    throw UnknownGeneratorError("unknown generator '" + t.name + "'", t.offset);
                Value v;
                v.elem = algebra_.generator(*idx);
                v.offset = t.offset;
                return v;
            }
            case TokKind::kLBracket: {
                Value lhs = parse_expr();
                if (lexer_.peek().kind != TokKind::kComma)
                    throw ParseError("expected ',' in bracket", lexer_.peek().offset);
                lexer_.take();
                Value rhs = parse_expr();
                if (lexer_.peek().kind != TokKind::kRBracket)
                    throw ParseError("expected ']' closing bracket", lexer_.peek().offset);
                lexer_.take();
                if (lhs.is_scalar() || rhs.is_scalar())
                    throw ParseError("bracket arguments must be Lie elements", t.offset);
                Value v;
                v.elem = algebra_.bracket(*lhs.elem, *rhs.elem);
                v.offset = t.offset;
                return v;
            }
            case TokKind::kEnd:
                throw ParseError("unexpected end of input", t.offset);
            default:
                throw ParseError("unexpected token", t.offset);
        }
    }

    Lexer lexer_;
    const FreeLieAlgebra& algebra_;
};

}  // namespace

LieElement parse_lie_expr(std::string_view text, const FreeLieAlgebra& algebra) {
    return Parser(text, algebra).run();
}

LieElement parse_lie_expr(std::string_view text, const GradedPresentation& presentation) {
    FreeLieAlgebra fla(presentation.alphabet());
    return parse_lie_expr(text, fla);
}

}  // namespace grlie
