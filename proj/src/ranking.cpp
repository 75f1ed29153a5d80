#include "motzkin/ranking.hpp"

#include <stdexcept>
#include <string>

#include "motzkin/errors.hpp"
#include "motzkin/numbers.hpp"

namespace motzkin {

BigInt CompletionTable::at(int length, int height) {
  if (length < 0 || height < 0) {
    throw std::invalid_argument("completion_count: arguments must be >= 0");
  }
  if (height > length) return 0;  // cannot descend further than one per symbol
  std::scoped_lock lock(mu_);
  if (rows_.empty()) rows_.push_back({BigInt(1)});
  while (static_cast<int>(rows_.size()) <= length) {
    const int l = static_cast<int>(rows_.size());
    const auto& prev = rows_[l - 1];
    auto prev_at = [&](int h) {
      return h < static_cast<int>(prev.size()) ? prev[h] : BigInt(0);
    };
    std::vector<BigInt> row(l + 1);
    for (int h = 0; h <= l; ++h) {
      row[h] = prev_at(h) + prev_at(h + 1);
      if (h > 0) row[h] += prev_at(h - 1);
    }
    rows_.push_back(std::move(row));
  }
  return rows_[length][height];
}

namespace {

CompletionTable& global_table() {
  static CompletionTable table;
  return table;
}

int symbol_delta(Symbol s) {
  switch (s) {
    case Symbol::Open:
      return 1;
    case Symbol::Close:
      return -1;
    default:
      return 0;
  }
}

}  // namespace

BigInt completion_count(int length, int height) {
  return global_table().at(length, height);
}

Weight rank(const MotzkinWord& w) {
  if (w.text() == "0") return 0;
  std::string_view stripped = w.text();
  stripped.remove_prefix(
      std::min(stripped.find_first_not_of('0'), stripped.size()));
  if (stripped.empty()) throw NotInRow();

  const int n = static_cast<int>(stripped.size());
  Weight weight = motzkin(n - 1);  // everything in shorter ranges
  int height = 1;                  // stripped[0] is '('
  for (int i = 1; i < n; ++i) {
    const Symbol actual = *symbol_from_char(stripped[i]);
    const int remaining = n - 1 - i;
    // Count continuations through each smaller symbol that keeps the prefix
    // valid; Zero and Open always do, so no height guard is needed here.
    if (actual != Symbol::Zero) {
      weight += completion_count(remaining, height);  // Zero in place of actual
    }
    if (actual == Symbol::Close) {
      weight += completion_count(remaining, height + 1);  // Open instead
    }
    height += symbol_delta(actual);
  }
  return weight;
}

MotzkinWord unrank(const Weight& index) {
  if (index < 0) throw std::invalid_argument("unrank: index must be >= 0");
  if (index == 0) return MotzkinWord::parse("0");

  int n = 1;
  while (motzkin(n) <= index) ++n;  // now M_{n-1} <= index < M_n, n >= 2
  Weight offset = index - motzkin(n - 1);

  std::string text = "(";
  int height = 1;
  for (int i = 1; i < n; ++i) {
    const int remaining = n - 1 - i;
    for (auto s : {Symbol::Zero, Symbol::Open, Symbol::Close}) {
      if (s == Symbol::Close && height == 0) continue;
      const int next_height = height + symbol_delta(s);
      const BigInt count = completion_count(remaining, next_height);
      if (offset < count) {
        text += to_char(s);
        height = next_height;
        break;
      }
      offset -= count;
    }
  }
  return MotzkinWord::parse(text);
}

}  // namespace motzkin
