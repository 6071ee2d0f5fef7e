#include "hermlie/salamon.hpp"

#include "hermlie/error.hpp"
#include "hermlie/forms.hpp"

#include <algorithm>
#include <cctype>
#include <utility>
#include <vector>

namespace hermlie {

namespace {

const std::vector<std::pair<std::string, std::string>> kTransliterations = {
    {"−", "-"},      {"α", "alpha"}, {"β", "beta"}, {"γ", "gamma"},
    {"δ", "delta"},  {"λ", "lambda"}, {"μ", "mu"},
};

struct Normalized {
  std::string text;
  std::vector<std::size_t> origin;  // byte offset in the input of each char
};

Normalized normalize(const std::string& in) {
  Normalized out;
  std::size_t i = 0;
  while (i < in.size()) {
    bool replaced = false;
    for (const auto& [from, to] : kTransliterations)
      if (in.compare(i, from.size(), from) == 0) {
        out.text += to;
        out.origin.insert(out.origin.end(), to.size(), i);
        i += from.size();
        replaced = true;
        break;
      }
    if (replaced) continue;
    if (!std::isspace(static_cast<unsigned char>(in[i]))) {
      out.text += in[i];
      out.origin.push_back(i);
    }
    ++i;
  }
  out.origin.push_back(in.size());
  return out;
}

class Parser {
 public:
  Parser(const std::string& original, const Bindings& bindings)
      : src_(normalize(original)), bindings_(bindings) {}

  LieAlgebra parse() {
    expect('(');
    std::vector<std::vector<std::tuple<int, int, Scalar, std::size_t>>> entries;
    for (;;) {
      entries.push_back(entry());
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    if (pos_ != src_.text.size()) fail("unexpected trailing input");
    const int dim = static_cast<int>(entries.size());
    if (dim > 9) fail("at most nine entries are supported");
    std::vector<StructureConstant> cs;
    for (int i = 0; i < dim; ++i)
      for (const auto& [a, b, c, at] : entries[i]) {
        if (a > dim || b > dim) fail_at(at, "index exceeds the dimension");
        // coefficient c of e^{ab} in de^i means c^i_{ab} = -c
        cs.push_back({a, b, i + 1, -c});
      }
    // merge repeated pairs before building
    std::vector<StructureConstant> merged;
    for (const auto& s : cs) {
      StructureConstant t = s;
      if (t.i > t.j) {
        std::swap(t.i, t.j);
        t.value = -t.value;
      }
      bool found = false;
      for (auto& m : merged)
        if (m.i == t.i && m.j == t.j && m.k == t.k) {
          m.value += t.value;
          found = true;
        }
      if (!found) merged.push_back(t);
    }
    std::erase_if(merged, [](const StructureConstant& s) { return s.value == 0; });
    return make_lie_algebra(static_cast<std::size_t>(dim), merged);
  }

 private:
  using Term = std::tuple<int, int, Scalar, std::size_t>;

  char peek() const { return pos_ < src_.text.size() ? src_.text[pos_] : '\0'; }

  [[noreturn]] void fail_at(std::size_t normalized_pos, const std::string& what) const {
    const std::size_t at = src_.origin[std::min(normalized_pos, src_.origin.size() - 1)];
    throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(at), at);
  }
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::vector<Term> entry() {
    std::vector<Term> terms;
    if (peek() == '0' && (pos_ + 1 >= src_.text.size() || src_.text[pos_ + 1] == ',' || src_.text[pos_ + 1] == ')')) {
      ++pos_;
      return terms;
    }
    Scalar sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    term(sign, terms);
    while (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      term(sign, terms);
    }
    return terms;
  }

  void term(const Scalar& sign, std::vector<Term>& out) {
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string digits = read_digits();
      if (peek() == '.' || peek() == '/') {
        Scalar c = Scalar(digits);
        if (peek() == '/') {
          ++pos_;
          std::string den = read_digits();
          if (den.empty() || den.find_first_not_of('0') == std::string::npos) fail("expected a non-zero denominator");
          c /= Scalar(den);
        }
        expect('.');
        scaled_pairs(sign * c, out);
        return;
      }
      if (digits.size() != 2) fail_at(start, "expected a pair of indices");
      out.push_back(make_pair_term(digits, sign, start));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += src_.text[pos_++];
      auto it = bindings_.find(name);
      if (it == bindings_.end())
        throw Error(ErrorCode::UnboundParameter, "parameter '" + name + "' has no value", src_.origin[start]);
      expect('.');
      scaled_pairs(sign * it->second, out);
      return;
    }
    fail("expected a term");
  }

  /// After "coeff.": either a pair or a parenthesised signed sum of pairs.
  void scaled_pairs(const Scalar& c, std::vector<Term>& out) {
    if (peek() != '(') {
      const std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.size() != 2) fail_at(start, "expected a pair of indices");
      out.push_back(make_pair_term(digits, c, start));
      return;
    }
    ++pos_;
    Scalar sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    for (;;) {
      const std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.size() != 2) fail_at(start, "expected a pair of indices");
      out.push_back(make_pair_term(digits, sign * c, start));
      if (peek() == ')') {
        ++pos_;
        return;
      }
      if (peek() != '+' && peek() != '-') fail("expected '+', '-' or ')'");
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
  }

  std::string read_digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += src_.text[pos_++];
    return d;
  }

  Term make_pair_term(const std::string& digits, const Scalar& c, std::size_t at) const {
    int a = digits[0] - '0', b = digits[1] - '0';
    if (a == 0 || b == 0) fail_at(at, "indices start at 1");
    if (a == b) fail_at(at, "repeated index in a pair");
    return {a, b, c, at};
  }

  Normalized src_;
  const Bindings& bindings_;
  std::size_t pos_ = 0;
};

std::string coefficient_prefix(const Scalar& c) {
  return c == 1 ? std::string() : to_string(c) + ".";
}

}  // namespace

std::string ascii_transliterate(const std::string& text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    bool replaced = false;
    for (const auto& [from, to] : kTransliterations)
      if (text.compare(i, from.size(), from) == 0) {
        out += to;
        i += from.size();
        replaced = true;
        break;
      }
    if (!replaced) out += text[i++];
  }
  return out;
}

LieAlgebra parse_salamon(const std::string& text, const Bindings& bindings) {
  Bindings ascii;
  for (const auto& [k, v] : bindings) ascii[ascii_transliterate(k)] = v;
  return Parser(text, ascii).parse();
}

std::string render_salamon(const LieAlgebra& lie) {
  std::string out = "(";
  for (std::size_t i = 0; i < lie.dim(); ++i) {
    if (i > 0) out += ",";
    KForm d = differential_of_dual(lie, i);
    // ascending (j,k) order; masks order by the highest bit, so sort explicitly
    std::vector<std::pair<std::vector<int>, Scalar>> terms;
    for (const auto& [mask, c] : d.terms()) terms.emplace_back(mask_indices(mask), c);
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    if (terms.empty()) {
      out += "0";
      continue;
    }
    if (terms.size() == 1 && terms[0].second < 0) {
      const auto& [idx, c] = terms[0];
      out += coefficient_prefix(-c) + std::to_string(idx[1]) + std::to_string(idx[0]);
      continue;
    }
    bool first = true;
    for (const auto& [idx, c] : terms) {
      if (c < 0)
        out += "-";
      else if (!first)
        out += "+";
      out += coefficient_prefix(abs_value(c)) + std::to_string(idx[0]) + std::to_string(idx[1]);
      first = false;
    }
  }
  return out + ")";
}

}  // namespace hermlie
