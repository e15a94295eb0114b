#include "scott/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace scott {

TermPtr Term::var(std::string n) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::var;
  t->name = std::move(n);
  return t;
}

TermPtr Term::constant(std::string n) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::constant;
  t->name = std::move(n);
  return t;
}

TermPtr Term::lam(std::string binder, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::lam;
  t->name = std::move(binder);
  t->body = std::move(body);
  return t;
}

TermPtr Term::app(TermPtr fn, TermPtr arg) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::app;
  t->fn = std::move(fn);
  t->arg = std::move(arg);
  return t;
}

TermPtr Term::num(Nat n) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::num;
  t->number = std::move(n);
  return t;
}

TermPtr Term::set(FinSet s) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::set;
  t->lits = std::move(s);
  return t;
}

TermPtr Term::tuple(std::vector<TermPtr> parts) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::tuple;
  t->parts = std::move(parts);
  return t;
}

bool is_std_combinator_name(const std::string& name) {
  static const std::set<std::string> names = {"p",   "p0",   "p1",    "t", "f",
                                              "q",   "k",    "i",     "len",
                                              "proj", "concat"};
  return names.count(name) > 0;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  TermPtr run() {
    TermPtr t = term();
    skip_ws();
    if (pos_ != src_.size()) fail("end of input", describe_here());
    return t;
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& expected, const std::string& found) {
    throw SyntaxError(pos_, expected, found);
  }

  std::string describe_here() {
    if (pos_ >= src_.size()) return "end of input";
    return std::string("'") + src_[pos_] + "'";
  }

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

  void expect(char c) {
    if (!eat(c)) fail(std::string("'") + c + "'", describe_here());
  }

  bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string ident() {
    skip_ws();
    if (pos_ >= src_.size() || !ident_start(src_[pos_])) fail("identifier", describe_here());
    std::size_t start = pos_;
    while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  Nat natural() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("number", describe_here());
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return Nat(src_.substr(start, pos_ - start));
  }

  TermPtr term() {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '\\') {
      ++pos_;
      std::vector<std::string> binders;
      binders.push_back(ident());
      skip_ws();
      while (pos_ < src_.size() && ident_start(src_[pos_])) {
        binders.push_back(ident());
        skip_ws();
      }
      expect('.');
      TermPtr body = term();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        body = Term::lam(*it, std::move(body));
      return body;
    }
    return application();
  }

  TermPtr application() {
    TermPtr acc = atom();
    while (true) {
      skip_ws();
      if (pos_ >= src_.size()) break;
      const char c = src_[pos_];
      if (c == ')' || c == ']' || c == ',' ) break;
      if (c == '(' || c == '{' || c == '[' || c == '#' || ident_start(c)) {
        acc = Term::app(std::move(acc), atom());
        continue;
      }
      break;
    }
    return acc;
  }

  TermPtr atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("term", "end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      TermPtr t = term();
      expect(')');
      return t;
    }
    if (c == '{') {
      ++pos_;
      std::vector<Nat> elems;
      skip_ws();
      if (!eat('}')) {
        elems.push_back(natural());
        while (eat(',')) elems.push_back(natural());
        expect('}');
      }
      return Term::set(FinSet::from_any(std::move(elems)));
    }
    if (c == '[') {
      ++pos_;
      std::vector<TermPtr> parts;
      parts.push_back(term());
      while (eat(',')) parts.push_back(term());
      expect(']');
      return Term::tuple(std::move(parts));
    }
    if (c == '#') {
      ++pos_;
      return Term::num(natural());
    }
    if (ident_start(c)) {
      std::string name = ident();
      if (is_std_combinator_name(name)) return Term::constant(name);
      return Term::var(name);
    }
    fail("term", describe_here());
  }
};

void print_rec(const Term& t, std::ostream& os, bool fn_pos, bool arg_pos) {
  switch (t.kind) {
    case Term::Kind::var:
    case Term::Kind::constant:
      os << t.name;
      return;
    case Term::Kind::num:
      os << '#' << t.number;
      return;
    case Term::Kind::set: {
      os << '{';
      bool first = true;
      for (const Nat& x : t.lits) {
        if (!first) os << ',';
        first = false;
        os << x;
      }
      os << '}';
      return;
    }
    case Term::Kind::tuple: {
      os << '[';
      for (std::size_t i = 0; i < t.parts.size(); ++i) {
        if (i) os << ", ";
        print_rec(*t.parts[i], os, false, false);
      }
      os << ']';
      return;
    }
    case Term::Kind::lam: {
      const bool parens = fn_pos || arg_pos;
      if (parens) os << '(';
      os << '\\' << t.name << ". ";
      print_rec(*t.body, os, false, false);
      if (parens) os << ')';
      return;
    }
    case Term::Kind::app: {
      const bool parens = arg_pos;
      if (parens) os << '(';
      print_rec(*t.fn, os, true, false);
      os << ' ';
      print_rec(*t.arg, os, false, true);
      if (parens) os << ')';
      return;
    }
  }
}

void collect_free(const TermPtr& t, std::vector<std::string>& bound,
                  std::vector<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::var:
      if (std::find(bound.begin(), bound.end(), t->name) == bound.end() &&
          std::find(out.begin(), out.end(), t->name) == out.end())
        out.push_back(t->name);
      return;
    case Term::Kind::lam:
      bound.push_back(t->name);
      collect_free(t->body, bound, out);
      bound.pop_back();
      return;
    case Term::Kind::app:
      collect_free(t->fn, bound, out);
      collect_free(t->arg, bound, out);
      return;
    case Term::Kind::tuple:
      for (const TermPtr& p : t->parts) collect_free(p, bound, out);
      return;
    default:
      return;
  }
}

}  // namespace

TermPtr parse_term(const std::string& src) { return Parser(src).run(); }

std::string print_term(const Term& t) {
  std::ostringstream os;
  print_rec(t, os, false, false);
  return os.str();
}

std::vector<std::string> free_vars(const TermPtr& t) {
  std::vector<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

namespace {

std::string fresh_name(const std::string& base, const std::vector<std::string>& avoid) {
  std::string cand = base;
  while (std::find(avoid.begin(), avoid.end(), cand) != avoid.end()) cand += '\'';
  return cand;
}

}  // namespace

TermPtr substitute(const TermPtr& t, const std::string& var, const TermPtr& replacement) {
  switch (t->kind) {
    case Term::Kind::var:
      return t->name == var ? replacement : t;
    case Term::Kind::constant:
    case Term::Kind::num:
    case Term::Kind::set:
      return t;
    case Term::Kind::app:
      return Term::app(substitute(t->fn, var, replacement), substitute(t->arg, var, replacement));
    case Term::Kind::tuple: {
      std::vector<TermPtr> parts;
      parts.reserve(t->parts.size());
      for (const TermPtr& p : t->parts) parts.push_back(substitute(p, var, replacement));
      return Term::tuple(std::move(parts));
    }
    case Term::Kind::lam: {
      if (t->name == var) return t;  // binder shadows
      std::vector<std::string> fv = free_vars(replacement);
      if (std::find(fv.begin(), fv.end(), t->name) != fv.end()) {
        // Rename the binder away from the replacement's free variables.
        std::vector<std::string> avoid = fv;
        for (const std::string& v : free_vars(t->body)) avoid.push_back(v);
        avoid.push_back(var);
        const std::string renamed = fresh_name(t->name, avoid);
        TermPtr body = substitute(t->body, t->name, Term::var(renamed));
        return Term::lam(renamed, substitute(body, var, replacement));
      }
      return Term::lam(t->name, substitute(t->body, var, replacement));
    }
  }
  throw std::logic_error("substitute: unhandled term kind");
}

}  // namespace scott
