#include <cctype>
#include <set>

#include "jetnash/errors.hpp"
#include "jetnash/nash.hpp"
#include "jetnash/parse.hpp"

namespace jetnash {

// sum     := product ('+' product)*
// product := power ('*' power)*
// power   := primary ('^' INT)?
// primary := NAME | '(' polynomial (',' polynomial)* ')'
class IdealExprParser {
 public:
  IdealExprParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  IdealExpr parse() {
    if (peek() == '\0') throw ParseError("empty ideal expression", pos_);
    IdealExpr e = sum();
    if (peek() != '\0') throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    e.text_ = std::string(text_);
    return e;
  }

 private:
  char peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  IdealExpr combine(IdealExpr::Kind kind, IdealExpr first, char op, IdealExpr (IdealExprParser::*next)()) {
    if (peek() != op) return first;
    IdealExpr node(kind, ring_);
    node.children_.push_back(std::move(first));
    while (peek() == op) {
      ++pos_;
      node.children_.push_back((this->*next)());
    }
    return node;
  }

  IdealExpr sum() { return combine(IdealExpr::Kind::Sum, product(), '+', &IdealExprParser::product); }
  IdealExpr product() { return combine(IdealExpr::Kind::Product, power(), '*', &IdealExprParser::power); }

  IdealExpr power() {
    IdealExpr base = primary();
    if (peek() != '^') return base;
    ++pos_;
    peek();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 4) throw ParseError("expected exponent", start);
    const auto k = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    if (k == 0) throw ParseError("ideal exponent must be positive", start);
    IdealExpr node(IdealExpr::Kind::Power, ring_);
    node.exponent_ = k;
    node.children_.push_back(std::move(base));
    return node;
  }

  IdealExpr primary() {
    const char c = peek();
    if (c == '(') return generatorList();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      IdealExpr node(IdealExpr::Kind::Atom, ring_);
      node.atom_ = std::string(text_.substr(start, pos_ - start));
      return node;
    }
    if (c == '\0') throw ParseError("unexpected end of ideal expression", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  IdealExpr generatorList() {
    const std::size_t open = pos_++;
    IdealExpr node(IdealExpr::Kind::Generators, ring_);
    int depth = 0;
    std::size_t itemStart = pos_;
    for (; pos_ < text_.size(); ++pos_) {
      const char c = text_[pos_];
      if (c == '(') {
        ++depth;
      } else if (c == ')' && depth > 0) {
        --depth;
      } else if ((c == ',' || c == ')') && depth == 0) {
        addGenerator(node, itemStart, pos_);
        itemStart = pos_ + 1;
        if (c == ')') {
          ++pos_;
          return node;
        }
      }
    }
    throw ParseError("unterminated generator list", open);
  }

  void addGenerator(IdealExpr& node, std::size_t begin, std::size_t end) {
    try {
      node.generators_.push_back(parsePolynomial(text_.substr(begin, end - begin), ring_));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in generator list: ") + e.what(), begin + e.position());
    }
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

IdealExpr IdealExpr::parse(std::string_view text, const RingPtr& ring) {
  return IdealExprParser(text, ring).parse();
}

Ideal IdealExpr::evaluate(const std::map<std::string, Ideal>& atoms) const {
  switch (kind_) {
    case Kind::Atom: {
      auto it = atoms.find(atom_);
      if (it == atoms.end()) throw DomainError("ideal expression references undefined atom '" + atom_ + "'");
      return it->second.mapInto(ring_);
    }
    case Kind::Generators:
      return Ideal(ring_, generators_);
    case Kind::Sum: {
      Ideal acc = children_.front().evaluate(atoms);
      for (std::size_t i = 1; i < children_.size(); ++i) acc = idealSum(acc, children_[i].evaluate(atoms));
      return acc;
    }
    case Kind::Product: {
      Ideal acc = children_.front().evaluate(atoms);
      for (std::size_t i = 1; i < children_.size(); ++i)
        acc = idealProduct(acc, children_[i].evaluate(atoms));
      return acc;
    }
    case Kind::Power:
      return idealPower(children_.front().evaluate(atoms), exponent_);
  }
  throw DomainError("malformed ideal expression");
}

std::vector<std::string> IdealExpr::atoms() const {
  std::set<std::string> names;
  std::vector<const IdealExpr*> stack{this};
  while (!stack.empty()) {
    const IdealExpr* e = stack.back();
    stack.pop_back();
    if (e->kind_ == Kind::Atom) names.insert(e->atom_);
    for (const auto& c : e->children_) stack.push_back(&c);
  }
  return {names.begin(), names.end()};
}

}  // namespace jetnash
