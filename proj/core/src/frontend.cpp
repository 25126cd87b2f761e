#include "gpc/frontend.hpp"

#include <cctype>
#include <set>
#include <vector>

namespace gpc {

  namespace {
    bool label_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    bool label_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
    }

    struct Token {
      std::string_view text;
      std::size_t      column;
    };

    std::vector<Token> split_fields(std::string_view line) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        if (i == line.size()) {
          break;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        out.push_back({line.substr(start, i - start), start + 1});
      }
      return out;
    }

    Exponent parse_unsigned(std::string_view digits) {
      Exponent n = 0;
      for (char c : digits) {
        n = n * 10 + (c - '0');
      }
      return n;
    }

    bool all_digits(std::string_view s) {
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          return false;
        }
      }
      return true;
    }

    class WordParser {
     public:
      WordParser(Presentation const& p, std::string_view text)
          : p_(p), text_(text) {}

      Word parse() {
        Word w = expr();
        skip_space();
        if (pos_ != text_.size()) {
          fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return w;
      }

     private:
      static constexpr long max_repeat = 100000;

      [[noreturn]] void fail(std::string const& message) const {
        throw ParseError(1, pos_ + 1, message);
      }

      void skip_space() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
          ++pos_;
          return true;
        }
        return false;
      }

      void expect(char c, std::string const& what) {
        if (!accept(c)) {
          fail("expected " + what);
        }
      }

      Word expr() {
        Word w = term();
        while (accept('*')) {
          Word t = term();
          w.insert(w.end(), t.begin(), t.end());
        }
        return w;
      }

      Word term() {
        skip_space();
        std::optional<vertex_type> single;
        Word                       base = factor(single);
        if (!accept('^')) {
          return base;
        }
        skip_space();
        std::size_t const start    = pos_;
        bool              negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
          negative = true;
          ++pos_;
        }
        std::size_t const digits = pos_;
        while (pos_ < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
        if (pos_ == digits) {
          pos_ = start;
          fail("malformed exponent");
        }
        Exponent k = parse_unsigned(text_.substr(digits, pos_ - digits));
        if (negative) {
          k = -k;
        }
        if (k == 0) {
          return {};
        }
        if (single) {
          return Word{Syllable(*single, k)};
        }
        if (abs(k) > max_repeat) {
          pos_ = start;
          fail("exponent too large for a compound power");
        }
        Word const unit = k < 0 ? inverse_word(base) : base;
        long const n    = abs(k).convert_to<long>();
        Word       out;
        for (long i = 0; i < n; ++i) {
          out.insert(out.end(), unit.begin(), unit.end());
        }
        return out;
      }

      Word factor(std::optional<vertex_type>& single) {
        skip_space();
        if (pos_ == text_.size()) {
          fail("unexpected end of input");
        }
        char const c = text_[pos_];
        if (c == '(') {
          ++pos_;
          Word w = expr();
          expect(')', "')'");
          return w;
        }
        if (c == '[') {
          ++pos_;
          Word x = expr();
          expect(',', "','");
          Word y = expr();
          expect(']', "']'");
          Word w = inverse_word(x);
          Word yi = inverse_word(y);
          w.insert(w.end(), yi.begin(), yi.end());
          w.insert(w.end(), x.begin(), x.end());
          w.insert(w.end(), y.begin(), y.end());
          return w;
        }
        if (c == '1'
            && (pos_ + 1 == text_.size() || !label_char(text_[pos_ + 1]))) {
          ++pos_;
          return {};
        }
        if (label_start(c)) {
          std::size_t const start = pos_;
          while (pos_ < text_.size() && label_char(text_[pos_])) {
            ++pos_;
          }
          auto label = text_.substr(start, pos_ - start);
          auto v     = p_.find(label);
          if (!v) {
            pos_ = start;
            fail("unknown generator '" + std::string(label) + "'");
          }
          single = *v;
          return Word{Syllable(*v, 1)};
        }
        fail("unexpected '" + std::string(1, c) + "'");
      }

      Presentation const& p_;
      std::string_view    text_;
      std::size_t         pos_ = 0;
    };
  }  // namespace

  bool is_valid_label(std::string_view label) {
    if (label.empty() || !label_start(label.front())) {
      return false;
    }
    for (char c : label) {
      if (!label_char(c)) {
        return false;
      }
    }
    return true;
  }

  Presentation parse_spec(std::string_view text) {
    Presentation                                    p;
    std::set<std::pair<vertex_type, vertex_type>>   edges;
    std::size_t                                     line_no = 0;
    while (!text.empty() || line_no == 0) {
      ++line_no;
      auto const nl   = text.find('\n');
      auto       line = text.substr(0, nl);
      text            = nl == std::string_view::npos ? std::string_view()
                                                     : text.substr(nl + 1);
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      auto fields = split_fields(line);
      if (fields.empty()) {
        if (text.empty()) {
          break;
        }
        continue;
      }
      auto const& head = fields[0];
      auto        err  = [&](Token const& t, std::string const& message) {
        throw ParseError(line_no, t.column, message);
      };
      if (head.text == "vertex") {
        if (fields.size() != 3) {
          err(head, "expected 'vertex <label> Z' or 'vertex <label> Z/<n>'");
        }
        auto const& label = fields[1];
        auto const& group = fields[2];
        if (!is_valid_label(label.text)) {
          err(label, "invalid label '" + std::string(label.text) + "'");
        }
        if (p.find(label.text)) {
          err(label, "duplicate vertex '" + std::string(label.text) + "'");
        }
        if (p.size() == max_vertices) {
          err(label, "too many vertices (limit " + std::to_string(max_vertices)
                         + ")");
        }
        CyclicOrder order = CyclicOrder::infinite();
        if (group.text != "Z") {
          if (group.text.substr(0, 2) != "Z/" || !all_digits(group.text.substr(2))) {
            err(group, "expected 'Z' or 'Z/<n>'");
          }
          Exponent n = parse_unsigned(group.text.substr(2));
          if (n < 2) {
            err(group, "order below 2");
          }
          order = CyclicOrder::finite(n);
        }
        p.add_vertex(std::string(label.text), order);
      } else if (head.text == "edge") {
        if (fields.size() != 3) {
          err(head, "expected 'edge <label> <label>'");
        }
        auto u = p.find(fields[1].text);
        if (!u) {
          err(fields[1], "unknown label '" + std::string(fields[1].text) + "'");
        }
        auto v = p.find(fields[2].text);
        if (!v) {
          err(fields[2], "unknown label '" + std::string(fields[2].text) + "'");
        }
        if (*u == *v) {
          err(fields[2], "self-edge at '" + std::string(fields[1].text) + "'");
        }
        if (!edges.emplace(std::min(*u, *v), std::max(*u, *v)).second) {
          err(head, "duplicate edge");
        }
        p.add_edge(*u, *v);
      } else {
        err(head, "unknown directive '" + std::string(head.text) + "'");
      }
    }
    return p;
  }

  Word parse_word(Presentation const& p, std::string_view text) {
    return WordParser(p, text).parse();
  }

  VertexSet parse_vertex_set(Presentation const& p, std::string_view text) {
    VertexSet   result;
    std::size_t pos = 0;
    while (pos < text.size()) {
      auto comma = text.find(',', pos);
      auto end   = comma == std::string_view::npos ? text.size() : comma;
      auto item  = text.substr(pos, end - pos);
      auto first = item.find_first_not_of(" \t");
      auto last  = item.find_last_not_of(" \t");
      if (first == std::string_view::npos) {
        throw ParseError(1, pos + 1, "empty label in vertex set");
      }
      auto label = item.substr(first, last - first + 1);
      auto v     = p.find(label);
      if (!v) {
        throw ParseError(1, pos + first + 1,
                         "unknown label '" + std::string(label) + "'");
      }
      result.insert(*v);
      if (comma == std::string_view::npos) {
        break;
      }
      pos = comma + 1;
      if (pos == text.size()) {
        throw ParseError(1, pos + 1, "empty label in vertex set");
      }
    }
    return result;
  }

  ParabolicSubgroup parse_parabolic(Presentation const& p, std::string_view text) {
    auto at = text.rfind('@');
    if (at == std::string_view::npos) {
      throw ParseError(1, text.size() + 1, "expected 'WORD@labels'");
    }
    auto g = parse_element(p, text.substr(0, at));
    try {
      auto S = parse_vertex_set(p, text.substr(at + 1));
      return canonicalize(p, g, S);
    } catch (ParseError const& e) {
      throw ParseError(1, e.column() + at + 1, e.message());
    }
  }

  std::string format(Presentation const& p, Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& s : w) {
      if (!out.empty()) {
        out += '*';
      }
      out += p.label(s.vertex);
      if (s.exponent != 1) {
        out += '^';
        out += s.exponent.str();
      }
    }
    return out;
  }

  std::string format(Presentation const& p, VertexSet S) {
    std::string out = "{";
    bool        first = true;
    for (auto v : S) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += p.label(v);
    }
    return out + "}";
  }

  std::string format(Presentation const& p, ParabolicSubgroup const& P) {
    std::string out = format(p, P.conjugator()) + "@";
    bool        first = true;
    for (auto v : P.base()) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += p.label(v);
    }
    return out;
  }

  std::string format_spec(Presentation const& p) {
    std::string out;
    for (vertex_type v = 0; v < p.size(); ++v) {
      out += "vertex " + p.label(v) + " ";
      auto const& o = p.order(v);
      out += o.is_finite() ? "Z/" + o.order().str() : std::string("Z");
      out += '\n';
    }
    for (auto [u, v] : p.graph().edges()) {
      out += "edge " + p.label(u) + " " + p.label(v) + "\n";
    }
    return out;
  }

}  // namespace gpc
