#include "treehopf/parse.hpp"

#include <algorithm>
#include <cctype>

namespace treehopf {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  TreeSeries<Rational> series(int dim) {
    skip_ws();
    std::vector<std::pair<Rational, RawTree>> items;
    items.push_back(term());
    skip_ws();
    while (!eof() && (peek() == '+' || peek() == '-')) {
      bool negate = peek() == '-';
      ++pos_;
      skip_ws();
      auto [c, t] = term();
      if (negate) c = -c;
      items.emplace_back(std::move(c), std::move(t));
      skip_ws();
    }
    if (!eof()) throw ParseError("unexpected trailing input", pos_);
    check_labels(dim);
    const int d = dim > 0 ? dim : std::max(1, max_label_);
    TreeSeries<Rational> out(d);
    for (auto& [c, t] : items) out.add_term(LabelledTree::from_raw(t, d), c);
    return out;
  }

  RawTree single_tree() {
    skip_ws();
    RawTree t = tree();
    skip_ws();
    if (!eof()) throw ParseError("unexpected trailing input", pos_);
    return t;
  }

  int max_label() const { return max_label_; }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!eof() && peek() == ' ') ++pos_;
  }

  std::pair<Rational, RawTree> term() {
    if (eof()) throw ParseError("expected term", pos_);
    if (peek() == 'o') return {Rational(1), tree()};
    Rational c = rational();
    skip_ws();
    if (eof() || peek() != '*') throw ParseError("expected '*' after coefficient", pos_);
    ++pos_;
    skip_ws();
    return {std::move(c), tree()};
  }

  Rational rational() {
    auto num = integer();
    if (!eof() && peek() == '/') {
      ++pos_;
      auto den = integer();
      if (den == 0) throw ParseError("zero denominator", pos_);
      return Rational(num) / Rational(den);
    }
    return Rational(num);
  }

  long long integer() {
    std::size_t start = pos_;
    bool neg = false;
    if (!eof() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected integer", start);
    long long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  RawTree tree() {
    if (eof() || peek() != 'o') throw ParseError("expected 'o'", pos_);
    ++pos_;
    RawTree t;
    if (!eof() && peek() == '(') t.children = children();
    return t;
  }

  std::vector<RawTree> children() {
    ++pos_;  // '('
    std::vector<RawTree> kids;
    skip_ws();
    kids.push_back(node());
    skip_ws();
    while (!eof() && peek() != ')') {
      kids.push_back(node());
      skip_ws();
    }
    if (eof()) throw ParseError("unterminated '('", pos_);
    ++pos_;  // ')'
    return kids;
  }

  RawTree node() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected label", pos_);
    int label = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      label = label * 10 + (peek() - '0');
      ++pos_;
    }
    if (label < 1) throw ParseError("labels start at 1", pos_);
    if (label > max_label_) {
      max_label_ = label;
      max_label_pos_ = pos_;
    }
    RawTree t;
    t.label = label;
    if (!eof() && peek() == '(') t.children = children();
    return t;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int max_label_ = 0;
  std::size_t max_label_pos_ = 0;

 public:
  void check_labels(int dim) const {
    if (dim > 0 && max_label_ > dim)
      throw ParseError("label " + std::to_string(max_label_) + " out of range 1.." +
                           std::to_string(dim),
                       max_label_pos_);
  }
};

std::string psi_node(const detail::Node& n, bool root) {
  const int arity = static_cast<int>(n.children.size());
  std::string head = root ? "f" : "V_" + std::to_string(n.label);
  if (arity > 0 && arity <= 3)
    head += std::string(static_cast<std::size_t>(arity), '\'');
  else if (arity > 3)
    head += "^(" + std::to_string(arity) + ")";
  head += "(y)";
  if (arity == 0) return head;
  head += '[';
  for (int i = 0; i < arity; ++i) {
    if (i) head += ',';
    head += psi_node(n.children[static_cast<std::size_t>(i)], false);
  }
  head += ']';
  return head;
}

}  // namespace

TreeSeries<Rational> parse_series(const std::string& text, int dim) {
  return Parser(text).series(dim);
}

LabelledTree parse_tree(const std::string& text, int dim) {
  Parser p(text);
  RawTree raw = p.single_tree();
  p.check_labels(dim);
  const int d = dim > 0 ? dim : std::max(1, p.max_label());
  return LabelledTree::from_raw(raw, d);
}

std::string psi_expression(const LabelledTree& t) { return psi_node(t.node(), true); }

}  // namespace treehopf
