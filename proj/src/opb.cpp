// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbenc/opb.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace pbenc {

namespace {

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  enum class Kind { Int, Var, Rel, Semi, End };
  struct Token {
    Kind kind;
    std::string text;
    std::size_t line, column;
  };

  std::vector<std::pair<std::size_t, std::string>> comments;

  Token next() {
    skip_blank();
    Token t{Kind::End, "", line_, col_};
    if (pos_ >= text_.size())
      return t;
    char c = text_[pos_];
    if (c == ';') {
      advance();
      t.kind = Kind::Semi;
      t.text = ";";
    } else if (c == '>' || c == '<' || c == '=') {
      t.kind = Kind::Rel;
      t.text = take_while([](char ch) { return ch == '>' || ch == '<' || ch == '='; });
    } else if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Kind::Int;
      t.text.push_back(c);
      advance();
      t.text += take_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
      if (t.text == "+" || t.text == "-")
        throw OpbParseError(t.line, t.column, "sign without digits");
    } else if (c == 'x' || c == '~') {
      t.kind = Kind::Var;
      t.text = take_while([](char ch) {
        return ch == '~' || ch == 'x' || std::isdigit(static_cast<unsigned char>(ch)) != 0;
      });
    } else {
      std::string word = take_while([](char ch) { return !std::isspace(static_cast<unsigned char>(ch)); });
      if (word.rfind("min:", 0) == 0 || word.rfind("max:", 0) == 0)
        throw OpbParseError(t.line, t.column,
                            "objective functions are not supported");
      throw OpbParseError(t.line, t.column, "unexpected '" + word + "'");
    }
    return t;
  }

private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
      at_line_start_ = true;
    } else {
      ++col_;
      if (!std::isspace(static_cast<unsigned char>(text_[pos_])))
        at_line_start_ = false;
    }
    ++pos_;
  }

  template <class Pred> std::string take_while(Pred pred) {
    std::string out;
    while (pos_ < text_.size() && pred(text_[pos_])) {
      out.push_back(text_[pos_]);
      advance();
    }
    return out;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '*' && at_line_start_) {
        std::size_t line = line_;
        std::string body = take_while([](char ch) { return ch != '\n'; });
        comments.emplace_back(line, body);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  bool at_line_start_ = true;
};

BigInt parse_int(const Lexer::Token &t) {
  std::string digits = t.text;
  bool negative = false;
  if (digits[0] == '+' || digits[0] == '-') {
    negative = digits[0] == '-';
    digits.erase(0, 1);
  }
  BigInt v(digits);
  return negative ? BigInt(-v) : v;
}

} // namespace

std::uint32_t OpbDocument::variable_count() const {
  std::uint32_t n = declared_variables.value_or(0);
  for (const auto &c : constraints)
    for (const auto &t : c.terms)
      n = std::max(n, t.var);
  return n;
}

OpbDocument parse_opb(std::string_view text) {
  Lexer lex(text);
  OpbDocument doc;
  std::size_t header_line = 1;
  static const std::regex var_re(R"(#variable=\s*(\d+))");
  static const std::regex con_re(R"(#constraint=\s*(\d+))");
  auto read_header = [&] {
    if (doc.declared_variables || doc.declared_constraints)
      return;
    for (const auto &[line, body] : lex.comments) {
      std::smatch m;
      if (std::regex_search(body, m, var_re)) {
        doc.declared_variables = static_cast<std::uint32_t>(std::stoul(m[1]));
        header_line = line;
      }
      if (std::regex_search(body, m, con_re)) {
        doc.declared_constraints = std::stoul(m[1]);
        header_line = line;
      }
      if (doc.declared_variables || doc.declared_constraints)
        return;
    }
  };

  while (true) {
    auto tok = lex.next();
    read_header();
    if (tok.kind == Lexer::Kind::End)
      break;
    OpbConstraint c;
    c.line = tok.line;
    while (tok.kind == Lexer::Kind::Int) {
      OpbTerm term;
      term.coeff = parse_int(tok);
      auto var = lex.next();
      if (var.kind != Lexer::Kind::Var)
        throw OpbParseError(var.line, var.column,
                            "expected a variable after coefficient " + tok.text);
      std::string name = var.text;
      if (name[0] == '~') {
        term.negated = true;
        name.erase(0, 1);
      }
      if (name.size() < 2 || name[0] != 'x' ||
          !std::all_of(name.begin() + 1, name.end(),
                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw OpbParseError(var.line, var.column,
                            "malformed variable '" + var.text + "'");
      unsigned long id = std::stoul(name.substr(1));
      if (id == 0)
        throw OpbParseError(var.line, var.column, "variable id 0");
      if (doc.declared_variables && id > *doc.declared_variables)
        throw OpbParseError(var.line, var.column,
                            "variable x" + std::to_string(id) +
                                " exceeds declared #variable= " +
                                std::to_string(*doc.declared_variables));
      term.var = static_cast<std::uint32_t>(id);
      c.terms.push_back(std::move(term));
      tok = lex.next();
    }
    if (c.terms.empty())
      throw OpbParseError(tok.line, tok.column,
                          "expected a term, found '" + tok.text + "'");
    if (tok.kind != Lexer::Kind::Rel)
      throw OpbParseError(tok.line, tok.column,
                          "expected >=, = or <=, found '" + tok.text + "'");
    if (tok.text == ">=")
      c.relation = Relation::Geq;
    else if (tok.text == "=")
      c.relation = Relation::Eq;
    else if (tok.text == "<=")
      c.relation = Relation::Leq;
    else
      throw OpbParseError(tok.line, tok.column,
                          "unknown relation '" + tok.text + "'");
    auto rhs = lex.next();
    if (rhs.kind != Lexer::Kind::Int)
      throw OpbParseError(rhs.line, rhs.column, "expected an integer bound");
    c.bound = parse_int(rhs);
    auto semi = lex.next();
    if (semi.kind != Lexer::Kind::Semi)
      throw OpbParseError(semi.line, semi.column, "expected ';'");
    doc.constraints.push_back(std::move(c));
  }

  if (doc.declared_constraints &&
      *doc.declared_constraints != doc.constraints.size())
    throw OpbParseError(header_line, 1,
                        "header declares " +
                            std::to_string(*doc.declared_constraints) +
                            " constraints, found " +
                            std::to_string(doc.constraints.size()));
  return doc;
}

OpbModel build_model(const OpbDocument &doc, TagMode mode) {
  OpbModel out;
  std::uint32_t n = doc.variable_count();
  for (std::uint32_t k = 0; k < n; ++k)
    out.variables.push_back(out.model.new_variable());

  TagContext ctx;
  for (std::size_t i = 0; i < doc.constraints.size(); ++i) {
    const auto &c = doc.constraints[i];
    ctx.set_tags(mode == TagMode::Uniform ? Tag{1} : static_cast<Tag>(i + 1));

    // sum c.l (rel) k, rewritten as sum |c|.l' (rel) k' with positive
    // coefficients; a >= relation is negated into <= first.
    bool geq = c.relation == Relation::Geq;
    std::vector<BigInt> coeffs;
    std::vector<Literal> lits;
    BigInt bound = geq ? BigInt(-c.bound) : c.bound;
    for (const auto &t : c.terms) {
      BigInt a = geq ? BigInt(-t.coeff) : t.coeff;
      if (a == 0)
        continue;
      Literal l = out.variables[t.var - 1].lit(!t.negated);
      if (a > 0) {
        coeffs.push_back(a);
        lits.push_back(l);
      } else {
        // a.l == a - a.~l
        coeffs.push_back(-a);
        lits.push_back(~l);
        bound -= a;
      }
    }

    if (lits.empty()) {
      bool holds = c.relation == Relation::Eq ? bound == 0 : bound >= 0;
      if (!holds)
        throw Error("line " + std::to_string(c.line) +
                    ": constraint has no nonzero term and cannot hold");
      continue;
    }

    if (c.relation != Relation::Eq) {
      out.model.add_constraint(make_leq(coeffs, lits, bound, ctx));
      continue;
    }
    BigInt total = 0;
    for (const auto &a : coeffs)
      total += a;
    if (bound >= 0 && bound <= total) {
      auto [le, ge] = make_eq(coeffs, lits, bound, ctx);
      out.model.add_constraint(std::move(le));
      out.model.add_constraint(std::move(ge));
    } else {
      // Same pair make_eq would build; normalization reports it unsatisfiable.
      out.impossible_equalities.push_back(i);
      std::vector<Literal> negated;
      for (const auto &l : lits)
        negated.push_back(~l);
      out.model.add_constraint(make_leq(coeffs, lits, bound, ctx));
      out.model.add_constraint(make_leq(coeffs, negated, total - bound, ctx));
    }
  }
  return out;
}

std::string model_to_opb(const InputModel &m) {
  std::ostringstream os;
  os << "* #variable= " << m.variable_count()
     << " #constraint= " << m.constraints().size() << '\n';
  for (const auto &q : m.constraints()) {
    BigInt bound = q.bound;
    for (std::size_t i = 0; i < q.lits.size(); ++i) {
      const BigInt &a = q.coeffs[i];
      if (q.lits[i].positive()) {
        os << '+' << a;
      } else {
        // a.~x == a - a.x
        os << '-' << a;
        bound -= a;
      }
      os << " x" << q.lits[i].variable().id() << ' ';
    }
    os << "<= " << bound << " ;\n";
  }
  return os.str();
}

} // namespace pbenc
