#include "ogs/notation.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <string>

#include "ogs/error.hpp"

namespace ogs {

namespace {

class Cursor
{
public:
  explicit Cursor(std::string_view text)
  : text_(text)
  {}

  void skip_space()
  {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end()
  {
    skip_space();
    return pos_ == text_.size();
  }

  bool peek(char c)
  {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c)
  {
    if (!peek(c))
      return false;
    ++pos_;
    return true;
  }

  void expect(char c)
  {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  long long integer(bool allow_sign)
  {
    skip_space();
    std::size_t start = pos_;
    if (allow_sign && pos_ < text_.size() &&
        (text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;

    auto digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+')
      digits.remove_prefix(1);

    long long value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      pos_ = start;
      fail("expected an integer");
    }
    return value;
  }

  Point point()
  {
    auto value = integer(false);
    if (value < 1 || value > 1'000'000)
      fail("point out of range");
    return static_cast<Point>(value);
  }

  std::optional<char> letter()
  {
    skip_space();
    if (pos_ == text_.size())
      return std::nullopt;
    return text_[pos_++];
  }

  [[noreturn]] void fail(std::string const &what) const
  {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Permutation parse_one_line(std::string_view text)
{
  Cursor in(text);
  std::vector<Point> images;

  in.expect('[');
  images.push_back(in.point());
  while (in.accept(';'))
    images.push_back(in.point());
  in.expect(']');
  if (!in.at_end())
    in.fail("trailing input");

  return Permutation(std::move(images));
}

std::string print_one_line(Permutation const &p)
{
  std::string out = "[";
  for (Point x = 1u; x <= p.degree(); ++x) {
    if (x > 1u)
      out += ';';
    out += std::to_string(p(x));
  }
  return out + "]";
}

Permutation parse_cycles(std::string_view text, unsigned degree)
{
  Cursor in(text);
  CycleDecomposition c{degree, {}};

  in.expect('(');
  if (in.accept(')')) {
    if (!in.at_end())
      in.fail("\"()\" must stand alone");
    return from_cycles(c);
  }

  for (;;) {
    std::vector<Point> cycle{in.point()};
    while (in.accept(','))
      cycle.push_back(in.point());
    in.expect(')');
    c.cycles.push_back(std::move(cycle));

    if (in.at_end())
      break;
    in.expect('(');
  }

  return from_cycles(c);
}

std::string print_cycles(Permutation const &p)
{
  auto c = cycles_of(p);
  if (c.cycles.empty())
    return "()";

  std::string out;
  for (auto const &cycle : c.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0u)
        out += ',';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

GeneratorWord parse_word(std::string_view text, unsigned degree)
{
  Cursor in(text);
  GeneratorWord w(degree);

  if (in.accept('e')) {
    if (!in.at_end())
      in.fail("trailing input after identity");
    return w;
  }

  do {
    auto c = in.letter();
    if (!c || (*c != 's' && *c != 't' && *c != 'u' && *c != 'v'))
      in.fail("expected one of s, t, u, v");

    auto index = in.integer(false);
    long long exponent = 1;
    if (in.accept('^'))
      exponent = in.integer(true);

    if (index > 1'000'000)
      in.fail("subscript out of range");
    w.append(static_cast<Gen>(*c), static_cast<int>(index), exponent);
  } while (in.accept('*'));

  if (!in.at_end())
    in.fail("trailing input");
  return w;
}

std::string print_word(GeneratorWord const &w)
{
  if (w.empty())
    return "e";

  std::string out;
  for (auto const &l : w.letters()) {
    if (!out.empty())
      out += " * ";
    out += static_cast<char>(l.symbol);
    out += std::to_string(l.index);
    out += '^';
    out += std::to_string(l.exponent);
  }
  return out;
}

Permutation parse_permutation(std::string_view text, unsigned degree)
{
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') {
    auto p = parse_one_line(text);
    if (p.degree() != degree)
      throw RangeError("one-line form has degree " + std::to_string(p.degree()) +
                       ", expected " + std::to_string(degree));
    return p;
  }
  return parse_cycles(text, degree);
}

} // namespace ogs
