#include "btl/formula.hpp"

#include <cctype>
#include <optional>
#include <memory>

namespace btl {

// ============================================================================
// Concrete grammar
// ============================================================================
//
//   propositions  [a-z][a-zA-Z0-9_]*   (leading '_' reserved for generated
//                                       auxiliaries, accepted on re-parse)
//   unary         ! X F G Finf Ginf Y P H N,  quantifiers E and A
//   infix         U S (right assoc) > & > | > ->
//   constants     true false, parentheses
//
// The parser builds a surface tree, then lowers it with a state/path context.
// Temporal operators take state-formula arguments; anything else is outside
// the logic and reported as such.

namespace {

enum class Tok { Ident, LParen, RParen, Amp, Bar, Arrow, Iff, Bang, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view s) : src_(s) { advance(); }
  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    cur_.pos = i_;
    if (i_ >= src_.size()) {
      set_tok(Tok::End, "");
      return;
    }
    char c = src_[i_];
    if (c == '(') { ++i_; set_tok(Tok::LParen, "("); return; }
    if (c == ')') { ++i_; set_tok(Tok::RParen, ")"); return; }
    if (c == '&') { ++i_; set_tok(Tok::Amp, "&"); return; }
    if (c == '|') { ++i_; set_tok(Tok::Bar, "|"); return; }
    if (c == '!') { ++i_; set_tok(Tok::Bang, "!"); return; }
    if (c == '-' && i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
      i_ += 2;
      set_tok(Tok::Arrow, "->");
      return;
    }
    if (c == '<' && i_ + 2 < src_.size() && src_[i_ + 1] == '-' && src_[i_ + 2] == '>') {
      i_ += 3;
      set_tok(Tok::Iff, "<->");
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
        ++j;
      set_tok(Tok::Ident, std::string(src_.substr(i_, j - i_)));
      i_ = j;
      return;
    }
    throw parse_error("unexpected character '" + std::string(1, c) + "'", i_);
  }
  void set_tok(Tok k, std::string t) {
    cur_.kind = k;
    cur_.text = std::move(t);
  }

  std::string_view src_;
  std::size_t i_ = 0;
  Token cur_;
};

// surface tree
enum class SK {
  Prop, True, False, And, Or, Implies, Iff, Not,
  Next, F, G, Finf, Ginf, Y, P, H, Until, Since, E, A, N
};

struct SNode {
  SK kind;
  std::string name;  // Prop
  std::size_t pos = 0;
  std::unique_ptr<SNode> l, r;
};
using SPtr = std::unique_ptr<SNode>;

SPtr snode(SK k, std::size_t pos, SPtr l = nullptr, SPtr r = nullptr) {
  auto n = std::make_unique<SNode>();
  n->kind = k;
  n->pos = pos;
  n->l = std::move(l);
  n->r = std::move(r);
  return n;
}

class Parser {
public:
  explicit Parser(std::string_view s) : lex_(s) {}

  SPtr parse() {
    SPtr f = implies();
    if (lex_.peek().kind != Tok::End)
      throw parse_error("trailing input after formula", lex_.peek().pos);
    return f;
  }

private:
  SPtr implies() {
    SPtr l = orexpr();
    if (lex_.peek().kind == Tok::Arrow) {
      std::size_t pos = lex_.take().pos;
      SPtr r = implies();
      return snode(SK::Implies, pos, std::move(l), std::move(r));
    }
    if (lex_.peek().kind == Tok::Iff) {
      std::size_t pos = lex_.take().pos;
      SPtr r = implies();
      return snode(SK::Iff, pos, std::move(l), std::move(r));
    }
    return l;
  }

  SPtr orexpr() {
    SPtr l = andexpr();
    while (lex_.peek().kind == Tok::Bar) {
      std::size_t pos = lex_.take().pos;
      SPtr r = andexpr();
      l = snode(SK::Or, pos, std::move(l), std::move(r));
    }
    return l;
  }

  SPtr andexpr() {
    SPtr l = untilexpr();
    while (lex_.peek().kind == Tok::Amp) {
      std::size_t pos = lex_.take().pos;
      SPtr r = untilexpr();
      l = snode(SK::And, pos, std::move(l), std::move(r));
    }
    return l;
  }

  SPtr untilexpr() {
    SPtr l = unary();
    const Token& t = lex_.peek();
    if (t.kind == Tok::Ident && (t.text == "U" || t.text == "S")) {
      Token op = lex_.take();
      SPtr r = untilexpr();  // right associative
      return snode(op.text == "U" ? SK::Until : SK::Since, op.pos, std::move(l), std::move(r));
    }
    return l;
  }

  SPtr unary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Bang) {
      std::size_t pos = lex_.take().pos;
      return snode(SK::Not, pos, unary());
    }
    if (t.kind == Tok::LParen) {
      lex_.take();
      SPtr inner = implies();
      if (lex_.peek().kind != Tok::RParen)
        throw parse_error("expected ')'", lex_.peek().pos);
      lex_.take();
      return inner;
    }
    if (t.kind == Tok::Ident) {
      Token id = lex_.take();
      const std::string& s = id.text;
      auto un = [&](SK k) { return snode(k, id.pos, unary()); };
      if (s == "true") return snode(SK::True, id.pos);
      if (s == "false") return snode(SK::False, id.pos);
      if (s == "X") return un(SK::Next);
      if (s == "F") return un(SK::F);
      if (s == "G") return un(SK::G);
      if (s == "Finf") return un(SK::Finf);
      if (s == "Ginf") return un(SK::Ginf);
      if (s == "Y") return un(SK::Y);
      if (s == "P") return un(SK::P);
      if (s == "H") return un(SK::H);
      if (s == "N") return un(SK::N);
      if (s == "E") return un(SK::E);
      if (s == "A") return un(SK::A);
      if (s == "U" || s == "S")
        throw parse_error("'" + s + "' is an infix operator", id.pos);
      if (!std::islower(static_cast<unsigned char>(s[0])) && s[0] != '_')
        throw parse_error("unknown operator '" + s + "'", id.pos);
      auto n = snode(SK::Prop, id.pos);
      n->name = s;
      return n;
    }
    throw parse_error("expected a formula", t.pos);
  }

  Lexer lex_;
};

// ----------------------------------------------------------------------------
// Lowering.  lower_state yields a state formula or throws; try_state probes
// whether a surface term is state-lowerable (past operators over state
// arguments are, via the implicit path quantifier).
// ----------------------------------------------------------------------------

class Lowerer {
public:
  Lowerer(FormulaArena& a, const std::vector<std::string>& alphabet) : a_(a) {
    for (const auto& p : alphabet) alpha_.push_back(p);
  }

  StateId lower_state(const SNode* n) {
    switch (n->kind) {
      case SK::Prop:
        return prop(n);
      case SK::True:
        return a_.mk_true();
      case SK::False:
        return a_.mk_false();
      case SK::And:
        return a_.mk_and(lower_state(n->l.get()), lower_state(n->r.get()));
      case SK::Or:
        return a_.mk_or(lower_state(n->l.get()), lower_state(n->r.get()));
      case SK::Implies:
        return a_.mk_implies(lower_state(n->l.get()), lower_state(n->r.get()));
      case SK::Iff:
        return a_.mk_iff(lower_state(n->l.get()), lower_state(n->r.get()));
      case SK::Not:
        return a_.mk_not(lower_state(n->l.get()));
      case SK::E:
        return a_.mk_exists(lower_path(n->l.get()));
      case SK::A:
        return a_.mk_not(a_.mk_exists(a_.mk_pnot(lower_path(n->l.get()))));
      case SK::N:
        return a_.mk_now(lower_state(n->l.get()));
      // past operators are path independent: implicitly quantified
      case SK::Y:
        return a_.mk_Y(lower_state(n->l.get()));
      case SK::P:
        return a_.mk_P(lower_state(n->l.get()));
      case SK::H:
        return a_.mk_H(lower_state(n->l.get()));
      case SK::Since:
        return a_.mk_exists(a_.mk_since(lower_state(n->l.get()), lower_state(n->r.get())));
      case SK::Next:
      case SK::F:
      case SK::G:
      case SK::Finf:
      case SK::Ginf:
      case SK::Until:
        throw parse_error(
            "future path operator used where a state formula is required "
            "(outside PECTL+N; put it under E or A)",
            n->pos);
    }
    throw parse_error("unreachable", n->pos);
  }

  PathId lower_path(const SNode* n) {
    switch (n->kind) {
      case SK::And:
        return a_.mk_pand(lower_path(n->l.get()), lower_path(n->r.get()));
      case SK::Or:
        return a_.mk_por(lower_path(n->l.get()), lower_path(n->r.get()));
      case SK::Implies:
        return a_.mk_por(a_.mk_pnot(lower_path(n->l.get())), lower_path(n->r.get()));
      case SK::Iff: {
        PathId l = lower_path(n->l.get());
        PathId r = lower_path(n->r.get());
        return a_.mk_pand(a_.mk_por(a_.mk_pnot(l), r), a_.mk_por(a_.mk_pnot(r), l));
      }
      case SK::Not:
        return a_.mk_pnot(lower_path(n->l.get()));
      case SK::Next:
        return a_.mk_next(lower_state(n->l.get()));
      case SK::F:
        return a_.mk_F(lower_state(n->l.get()));
      case SK::G:
        return a_.mk_G(lower_state(n->l.get()));
      case SK::Finf:
        return a_.mk_infoften(lower_state(n->l.get()));
      case SK::Ginf:
        return a_.mk_Ginf(lower_state(n->l.get()));
      case SK::Y:
        return a_.mk_yesterday(lower_state(n->l.get()));
      case SK::P:
        return a_.mk_Ppath(lower_state(n->l.get()));
      case SK::H:
        return a_.mk_Hpath(lower_state(n->l.get()));
      case SK::Until:
        return a_.mk_until(lower_state(n->l.get()), lower_state(n->r.get()));
      case SK::Since:
        return a_.mk_since(lower_state(n->l.get()), lower_state(n->r.get()));
      default:
        return a_.mk_embed(lower_state(n));
    }
  }

private:
  StateId prop(const SNode* n) {
    for (const auto& p : alpha_)
      if (p == n->name) return a_.mk_prop(n->name);
    throw parse_error("undeclared proposition '" + n->name + "'", n->pos);
  }

  FormulaArena& a_;
  std::vector<std::string> alpha_;
};

}  // namespace

StateId parse_formula(FormulaArena& arena, std::string_view text,
                      const std::vector<std::string>& alphabet) {
  Parser p(text);
  SPtr surface = p.parse();
  Lowerer lo(arena, alphabet);
  return lo.lower_state(surface.get());
}

FormulaFile parse_formula_file(FormulaArena& arena, std::string_view content) {
  std::size_t nl = content.find('\n');
  std::string_view first = content.substr(0, nl == std::string_view::npos ? content.size() : nl);
  std::string_view rest = nl == std::string_view::npos ? std::string_view{} : content.substr(nl + 1);

  constexpr std::string_view kHeader = "props:";
  std::size_t h = first.find(kHeader);
  if (h == std::string_view::npos)
    throw parse_error("formula file must start with a 'props:' line", 0);

  FormulaFile ff;
  std::string_view names = first.substr(h + kHeader.size());
  std::size_t i = 0;
  while (i < names.size()) {
    while (i < names.size() && std::isspace(static_cast<unsigned char>(names[i]))) ++i;
    std::size_t j = i;
    while (j < names.size() && !std::isspace(static_cast<unsigned char>(names[j]))) ++j;
    if (j > i) ff.props.emplace_back(names.substr(i, j - i));
    i = j;
  }
  for (const auto& p : ff.props) {
    bool ok = !p.empty() && (std::islower(static_cast<unsigned char>(p[0])) || p[0] == '_');
    for (char c : p)
      ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw parse_error("invalid proposition name '" + p + "'", 0);
  }
  ff.formula = parse_formula(arena, rest, ff.props);
  return ff;
}

}  // namespace btl
