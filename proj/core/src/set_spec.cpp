#include "bwd/set_spec.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <vector>

#include "bwd/error.hpp"
#include "bwd/ratfunc.hpp"
#include "bwd/sets.hpp"

namespace bwd {

namespace {

class SpecParser {
 public:
  SpecParser(const Field& field, const std::string& text) : field_(field), text_(text) {}

  FSubset parse() {
    FSubset out = parse_spec();
    if (pos_ != text_.size()) fail("trailing characters");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("set spec '" + text_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  bool consume(const std::string& token) {
    if (text_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool at_number() const {
    return pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-');
  }

  std::int64_t integer() {
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > (std::int64_t{1} << 40)) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return negative ? -value : value;
  }

  std::uint32_t count() {
    const std::int64_t v = integer();
    if (v < 0 || v > std::int64_t{kMaxFieldSize}) fail("count out of range");
    return static_cast<std::uint32_t>(v);
  }

  Element element() {
    const std::int64_t v = integer();
    if (v < 0) return field_.neg(field_.element(static_cast<std::uint64_t>(-v)));
    if (static_cast<std::uint64_t>(v) >= field_.q()) fail("element out of range");
    return Element{static_cast<std::uint32_t>(v)};
  }

  // Coefficient list; stops before a ',' that is not followed by a number.
  std::string coefficient_list() {
    const std::size_t start = pos_;
    integer();
    while (pos_ + 1 < text_.size() && text_[pos_] == ',') {
      const char next = text_[pos_ + 1];
      if (!std::isdigit(static_cast<unsigned char>(next)) && next != '-') break;
      ++pos_;
      integer();
    }
    return text_.substr(start, pos_ - start);
  }

  RationalFunction rational() {
    std::string num = coefficient_list();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      num += "/" + coefficient_list();
    }
    return parse_rational(field_, num);
  }

  FSubset parse_spec() {
    if (consume("interval:")) {
      const std::int64_t start = integer();
      expect(',');
      return interval(field_, start, count());
    }
    if (consume("gp:")) {
      const Element base = element();
      expect(',');
      return geometric_progression(field_, base, count());
    }
    if (consume("msub:")) return mult_subgroup(field_, count());
    if (consume("asub:")) {
      std::vector<Element> basis;
      if (at_number()) {
        basis.push_back(element());
        while (pos_ < text_.size() && text_[pos_] == ';') {
          ++pos_;
          basis.push_back(element());
        }
      }
      return add_subspace(field_, basis);
    }
    if (consume("rand:")) {
      const std::uint32_t size = count();
      expect(',');
      const std::int64_t seed = integer();
      if (seed < 0) fail("seed must be nonnegative");
      return random_subset(field_, size, static_cast<std::uint64_t>(seed));
    }
    if (consume("garaev:")) return garaev_set(field_, count());
    if (consume("all")) return FSubset::whole(field_);
    if (consume("inv(")) {
      FSubset inner = parse_spec();
      expect(')');
      return inverse_set(field_, inner);
    }
    if (consume("union(")) {
      FSubset a = parse_spec();
      expect(',');
      FSubset b = parse_spec();
      expect(')');
      return set_union(a, b);
    }
    if (consume("image(")) {
      const RationalFunction f = rational();
      expect(',');
      FSubset inner = parse_spec();
      expect(')');
      return apply_to_set(field_, f, inner).image;
    }
    fail("unknown set form");
  }

  const Field& field_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

FSubset parse_set_spec(const Field& field, const std::string& spec) {
  return SpecParser(field, spec).parse();
}

}  // namespace bwd
