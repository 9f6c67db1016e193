#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

#include "curvedetect/error.hpp"

namespace cdt::detail {

/// Minimal cursor over DSL text; columns in errors are 1-based and include `base`.
class Scanner {
 public:
  explicit Scanner(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a twist name");
    }
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
    if (digits == pos_ || ec != std::errc()) {
      pos_ = start;
      fail("expected an integer exponent");
    }
    return negative ? -value : value;
  }

  std::size_t column() const { return base_ + pos_ + 1; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, column()); }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace cdt::detail
