#include "motzkin/oracle.hpp"

#include <stdexcept>
#include <string>

#include "motzkin/errors.hpp"

namespace motzkin::oracle {

namespace {

const char kAlphabet[3] = {'0', '(', ')'};  // digit order equals word order

bool is_valid(const std::string& s) {
  int height = 0;
  for (char c : s) {
    if (c == '(') ++height;
    if (c == ')') --height;
    if (height < 0) return false;
  }
  return height == 0;
}

bool is_unique_word(const std::string& s) {
  return s == "0" || s.front() == '(';
}

// Calls fn for each string over the alphabet, in base-3 counting order with
// the leftmost character most significant; that order coincides with the
// word order on equal lengths.
template <typename Fn>
void for_each_candidate(int n, Fn&& fn) {
  std::string s(n, '0');
  std::vector<int> digits(n, 0);
  while (true) {
    fn(s);
    int i = n - 1;
    while (i >= 0 && digits[i] == 2) {
      digits[i] = 0;
      s[i] = kAlphabet[0];
      --i;
    }
    if (i < 0) return;
    ++digits[i];
    s[i] = kAlphabet[digits[i]];
  }
}

}  // namespace

WordUniverse brute_enumerate(int n) {
  if (n < 1) throw std::invalid_argument("brute_enumerate: n >= 1");
  if (n > max_enumerate_length) throw LengthTooLarge(n, max_enumerate_length);
  WordUniverse words;
  for_each_candidate(n, [&](const std::string& s) {
    if (is_valid(s)) words.push_back(MotzkinWord::parse(s));
  });
  return words;
}

BigInt brute_rank(const MotzkinWord& w) {
  const int n = w.length();
  if (n > max_rank_length) throw LengthTooLarge(n, max_rank_length);
  if (!is_unique_word(w.text())) {
    throw std::invalid_argument("brute_rank: not a unique word");
  }
  BigInt position = 0;
  for (int len = 1; len < n; ++len) {
    for_each_candidate(len, [&](const std::string& s) {
      if (is_valid(s) && is_unique_word(s)) ++position;
    });
  }
  bool found = false;
  for_each_candidate(n, [&](const std::string& s) {
    if (found || !is_valid(s) || !is_unique_word(s)) return;
    if (s == w.text()) {
      found = true;
      return;
    }
    ++position;
  });
  return position;
}

BigInt brute_count_pairs(int n, int k) {
  if (n < 1 || k < 0) {
    throw std::invalid_argument("brute_count_pairs: n >= 1, k >= 0");
  }
  if (n > max_count_length) throw LengthTooLarge(n, max_count_length);
  BigInt count = 0;
  for_each_candidate(n, [&](const std::string& s) {
    if (!is_valid(s) || !is_unique_word(s)) return;
    int opens = 0;
    for (char c : s) opens += c == '(';
    if (opens == k) ++count;
  });
  return count;
}

}  // namespace motzkin::oracle
