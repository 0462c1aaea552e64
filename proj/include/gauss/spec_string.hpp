#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gauss/group.hpp"

namespace gauss {

// Grammar:
//   spec    := family ':' args | 'product:' '(' spec ')' ( 'x' '(' spec ')' )*
//   family  := cyclic | abelian | dihedral | quaternion | semidihedral | modular | heisenberg | sdp
//   args    := uint ( ',' uint )*
// quaternion and semidihedral take the group order; modular takes (p, n) for M(p^n).

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse_all() {
    GroupSpec spec = parse_spec();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(1, pos_ + 1, what + " in spec '" + std::string(text_) + "'"); }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string_view word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::uint64_t number() {
    std::uint64_t v = 0;
    const auto* first = text_.data() + pos_;
    const auto* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr == first) fail("expected an unsigned integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  std::vector<std::uint64_t> numbers() {
    std::vector<std::uint64_t> out;
    if (pos_ == text_.size() || text_[pos_] == ')') return out;
    out.push_back(number());
    while (eat(',')) out.push_back(number());
    return out;
  }

  std::vector<std::uint64_t> exactly(std::size_t count, std::string_view family) {
    auto v = numbers();
    if (v.size() != count) fail(std::string(family) + " takes " + std::to_string(count) + " argument(s)");
    return v;
  }

  GroupSpec parse_spec() {
    const auto family = word();
    expect(':');
    if (family == "product") {
      DirectProduct dp;
      do {
        expect('(');
        dp.factors.push_back(parse_spec());
        expect(')');
      } while (eat('x'));
      return GroupSpec{std::move(dp)};
    }
    if (family == "cyclic") return GroupSpec{Cyclic{exactly(1, family)[0]}};
    if (family == "abelian") return GroupSpec{AbelianOfType{numbers()}};
    if (family == "dihedral") return GroupSpec{Dihedral{exactly(1, family)[0]}};
    if (family == "quaternion") return GroupSpec{GeneralizedQuaternion{exactly(1, family)[0]}};
    if (family == "semidihedral") return GroupSpec{Semidihedral{exactly(1, family)[0]}};
    if (family == "heisenberg") return GroupSpec{HeisenbergP3{exactly(1, family)[0]}};
    if (family == "modular") {
      auto v = exactly(2, family);
      return GroupSpec{ModularMaximalCyclic{v[0], v[1]}};
    }
    if (family == "sdp") {
      auto v = exactly(3, family);
      return GroupSpec{SemidirectCyclic{v[0], v[1], v[2]}};
    }
    fail("unknown family '" + std::string(family) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace detail

inline GroupSpec parse_spec(std::string_view text) { return detail::SpecParser(text).parse_all(); }

inline std::string format_spec(const GroupSpec& spec) {
  struct Formatter {
    std::string operator()(const Cyclic& c) const { return "cyclic:" + std::to_string(c.n); }
    std::string operator()(const AbelianOfType& a) const { return "abelian:" + detail::join(a.parts); }
    std::string operator()(const Dihedral& d) const { return "dihedral:" + std::to_string(d.n); }
    std::string operator()(const GeneralizedQuaternion& q) const { return "quaternion:" + std::to_string(q.order); }
    std::string operator()(const Semidihedral& s) const { return "semidihedral:" + std::to_string(s.order); }
    std::string operator()(const ModularMaximalCyclic& m) const {
      return "modular:" + std::to_string(m.p) + "," + std::to_string(m.n);
    }
    std::string operator()(const HeisenbergP3& h) const { return "heisenberg:" + std::to_string(h.p); }
    std::string operator()(const SemidirectCyclic& s) const {
      return "sdp:" + std::to_string(s.n) + "," + std::to_string(s.p) + "," + std::to_string(s.t);
    }
    std::string operator()(const DirectProduct& dp) const {
      std::string s = "product:";
      for (std::size_t i = 0; i < dp.factors.size(); ++i) {
        if (i) s += 'x';
        s += "(" + format_spec(dp.factors[i]) + ")";
      }
      return s;
    }
  };
  return std::visit(Formatter{}, spec.variant);
}

}  // namespace gauss
