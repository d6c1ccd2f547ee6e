#include "tamari/text_io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace tamari {

namespace {

using nlohmann::json;

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
  bool eat(char c) {
    if (!done() && peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_utf8(std::string_view token) {
    if (s.substr(pos, token.size()) == token) {
      pos += token.size();
      return true;
    }
    return false;
  }
};

constexpr std::string_view kBullet = "\xe2\x80\xa2";  // filled bullet, a leaf
constexpr std::string_view kRing = "\xe2\x97\xa6";    // ring, a node letter

Tree parse_tree_rec(Cursor& c) {
  c.skip_ws();
  if (c.eat('x') || c.eat_utf8(kBullet)) return Tree::leaf();
  if (c.eat('(')) {
    Tree left = parse_tree_rec(c);
    Tree right = parse_tree_rec(c);
    c.skip_ws();
    if (!c.eat(')')) throw ParseError("expected ')' in tree");
    return Tree::node(left, right);
  }
  throw ParseError("expected 'x' or '(' in tree");
}

void tree_to_string_rec(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    out.push_back('x');
    return;
  }
  out.push_back('(');
  tree_to_string_rec(t.left(), out);
  tree_to_string_rec(t.right(), out);
  out.push_back(')');
}

}  // namespace

Tree parse_tree(std::string_view s) {
  Cursor c{s};
  Tree t = parse_tree_rec(c);
  c.skip_ws();
  if (!c.done()) throw ParseError("trailing input after tree");
  return t;
}

std::string tree_to_string(const Tree& t) {
  std::string out;
  tree_to_string_rec(t, out);
  return out;
}

PolishWord parse_polish(std::string_view s) {
  PolishWord w;
  Cursor c{s};
  while (!c.done()) {
    c.skip_ws();
    if (c.done()) break;
    if (c.eat('x') || c.eat_utf8(kBullet)) {
      w.text.push_back('x');
    } else if (c.eat('o') || c.eat_utf8(kRing)) {
      w.text.push_back('o');
    } else {
      throw MalformedPolishError("polish words use letters x and o");
    }
  }
  if (!polish_valid(w)) throw MalformedPolishError("malformed polish word: " + w.text);
  return w;
}

Tree tree_from_polish_text(std::string_view s) { return polish_decode(parse_polish(s)); }

Address parse_address(std::string_view s) {
  if (s == "e" || s.empty()) return Address();
  Address a;
  for (char ch : s) {
    if (ch == '0')
      a = a.append(0);
    else if (ch == '1')
      a = a.append(1);
    else
      throw ParseError("addresses are 0/1 strings, or e for empty");
  }
  return a;
}

std::string address_to_string(Address a) {
  if (a.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a.bit(i) ? '1' : '0');
  return out;
}

namespace {

HatLetter parse_token(std::string_view tok) {
  bool inv = false;
  if (!tok.empty() && tok.back() == '\'') {
    inv = true;
    tok.remove_suffix(1);
  }
  HatLetter l;
  if (tok.size() >= 2 && tok[0] == 'x') {
    std::size_t i = 1;
    int idx = 0;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
      idx = idx * 10 + (tok[i] - '0');
      ++i;
    }
    if (i != tok.size() || i == 1) throw ParseError("bad x token: " + std::string(tok));
    l.addr = Address::ones(static_cast<std::size_t>(idx));
    l.r = 1;
  } else if (tok.size() >= 3 && tok[0] == 'a' && tok[1] == '[' && tok.back() == ']') {
    std::string_view body = tok.substr(2, tok.size() - 3);
    std::string_view bits = body;
    l.r = 1;
    if (auto comma = body.find(','); comma != std::string_view::npos) {
      bits = body.substr(0, comma);
      std::string_view rs = body.substr(comma + 1);
      if (rs.empty()) throw ParseError("bad hat width in: " + std::string(tok));
      int r = 0;
      for (char ch : rs) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw ParseError("bad hat width in: " + std::string(tok));
        r = r * 10 + (ch - '0');
      }
      if (r < 1) throw ParseError("hat width must be at least 1");
      l.r = r;
    }
    for (char ch : bits) {
      if (ch == '0')
        l.addr = l.addr.append(0);
      else if (ch == '1')
        l.addr = l.addr.append(1);
      else
        throw ParseError("bad address in: " + std::string(tok));
    }
  } else {
    throw ParseError("bad word token: " + std::string(tok));
  }
  if (inv) l.sign = -1;
  return l;
}

}  // namespace

SignedWord parse_word(std::string_view s) {
  SignedWord w;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) w.push_back(parse_token(s.substr(i, j - i)));
    i = j;
  }
  return w;
}

std::string word_to_string(const SignedWord& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out.push_back(' ');
    out.push_back('a');
    out.push_back('[');
    if (!l.addr.empty()) {
      for (std::size_t i = 0; i < l.addr.size(); ++i)
        out.push_back(l.addr.bit(i) ? '1' : '0');
    }
    if (l.r != 1) {
      out.push_back(',');
      out += std::to_string(l.r);
    }
    out.push_back(']');
    if (l.sign < 0) out.push_back('\'');
  }
  return out;
}

XWord parse_xword(std::string_view s) {
  XWord w;
  for (const HatLetter& l : parse_word(s)) {
    if (l.r != 1 || !l.addr.all(1))
      throw ParseError("x words use only x<i> tokens");
    w.push_back(XLetter{static_cast<int>(l.addr.size()), l.sign});
  }
  return w;
}

std::string xword_to_string(const XWord& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out.push_back(' ');
    out.push_back('x');
    out += std::to_string(l.index);
    if (l.sign < 0) out.push_back('\'');
  }
  return out;
}

std::string tree_to_json(const Tree& t) {
  json j;
  j["polish"] = polish_encode(t).text;
  return j.dump();
}

Tree tree_from_json(std::string_view json_text) {
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded() || !j.contains("polish") || !j["polish"].is_string())
    throw ParseError("expected {\"polish\": \"...\"}");
  PolishWord w;
  w.text = j["polish"].get<std::string>();
  return polish_decode(w);
}

std::string word_to_json(const SignedWord& w) {
  json arr = json::array();
  for (const auto& l : w) {
    json item;
    item["addr"] = address_to_string(l.addr);
    item["r"] = l.r;
    item["sign"] = l.sign;
    arr.push_back(item);
  }
  return arr.dump();
}

SignedWord word_from_json(std::string_view json_text) {
  json arr = json::parse(json_text, nullptr, false);
  if (arr.is_discarded() || !arr.is_array())
    throw ParseError("expected a JSON array of letters");
  SignedWord w;
  for (const auto& item : arr) {
    HatLetter l;
    l.addr = parse_address(item.at("addr").get<std::string>());
    l.r = item.at("r").get<int>();
    l.sign = item.at("sign").get<int>();
    if (l.r < 1 || (l.sign != 1 && l.sign != -1))
      throw ParseError("bad letter in JSON word");
    w.push_back(l);
  }
  return w;
}

std::string pl_map_to_json(const DyadicPLMap& m) {
  json arr = json::array();
  for (const auto& [x, y] : m.breakpoints) arr.push_back({x.str(), y.str()});
  return arr.dump();
}

std::string tree_to_dot(const Tree& t) {
  std::ostringstream out;
  out << "digraph tree {\n  node [shape=point];\n";
  for (Address a : skeleton(t)) {
    std::string name = a.empty() ? "root" : "n" + address_to_string(a);
    bool leaf = subtree_at(t, a).is_leaf();
    out << "  " << name << " [shape=" << (leaf ? "circle" : "point")
        << ", label=\"\"];\n";
    if (!a.empty()) {
      Address parent = a.prefix(a.size() - 1);
      std::string pname = parent.empty() ? "root" : "n" + address_to_string(parent);
      out << "  " << pname << " -> " << name << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace tamari
