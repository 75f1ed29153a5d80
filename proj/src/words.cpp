#include "motzkin/words.hpp"

#include <algorithm>
#include <stdexcept>

#include "motzkin/errors.hpp"

namespace motzkin {

char to_char(Symbol s) {
  switch (s) {
    case Symbol::Zero:
      return '0';
    case Symbol::Open:
      return '(';
    case Symbol::Close:
      return ')';
  }
  return '?';
}

std::optional<Symbol> symbol_from_char(char c) {
  switch (c) {
    case '0':
      return Symbol::Zero;
    case '(':
      return Symbol::Open;
    case ')':
      return Symbol::Close;
    default:
      return std::nullopt;
  }
}

MotzkinWord MotzkinWord::parse(std::string_view text) {
  if (text.empty()) throw EmptyInput();
  int height = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto sym = symbol_from_char(text[i]);
    if (!sym) throw IllegalCharacter(i + 1);
    if (*sym == Symbol::Open) ++height;
    if (*sym == Symbol::Close) --height;
    if (height < 0) throw UnbalancedWord(i + 1);
  }
  if (height != 0) throw UnbalancedWord(text.size());
  return MotzkinWord(std::string(text));
}

Symbol MotzkinWord::symbol_at(int pos_from_right) const {
  return *symbol_from_char(text_[text_.size() - pos_from_right]);
}

bool MotzkinWord::all_zeros() const {
  return text_.find_first_not_of('0') == std::string::npos;
}

int MotzkinWord::open_count() const {
  return static_cast<int>(std::count(text_.begin(), text_.end(), '('));
}

std::strong_ordering compare(const MotzkinWord& a, const MotzkinWord& b) {
  if (a.length() != b.length()) return a.length() <=> b.length();
  const std::string& ta = a.text();
  const std::string& tb = b.text();
  for (std::size_t i = 0; i < ta.size(); ++i) {
    const auto sa = static_cast<unsigned char>(*symbol_from_char(ta[i]));
    const auto sb = static_cast<unsigned char>(*symbol_from_char(tb[i]));
    if (sa != sb) return sa <=> sb;
  }
  return std::strong_ordering::equal;
}

bool is_unique(const MotzkinWord& w) {
  return w.text() == "0" || w.text().front() == '(';
}

RowMembership membership(const MotzkinWord& w) {
  return is_unique(w) ? RowMembership::Unique : RowMembership::Inherited;
}

MotzkinWord range_min(int n) {
  if (n < 2) throw std::invalid_argument("range_min: requires n >= 2");
  return MotzkinWord::parse("(" + std::string(n - 2, '0') + ")");
}

MotzkinWord range_max(int n) {
  if (n < 1) throw std::invalid_argument("range_max: requires n >= 1");
  std::string text;
  for (int i = 0; i < n / 2; ++i) text += "()";
  if (n % 2 == 1) text += '0';
  return MotzkinWord::parse(text);
}

RangeEnumerator::RangeEnumerator(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("RangeEnumerator: requires n >= 1");
  current_ = (n == 1) ? "0" : range_min(n).text();
}

std::optional<MotzkinWord> RangeEnumerator::next() {
  if (done_) return std::nullopt;
  MotzkinWord out = MotzkinWord::parse(current_);
  done_ = !advance();
  return out;
}

// In-place lexicographic successor among the unique n-words: find the
// rightmost position whose symbol can grow while the prefix stays valid and
// the suffix stays completable (a completion of length l exists iff l >= h),
// then append the minimal completion 0^{l-h} )^h.
bool RangeEnumerator::advance() {
  if (n_ == 1) return false;
  // prefix_height[i] = nesting height after the first i symbols.
  std::vector<int> prefix_height(n_ + 1, 0);
  for (int i = 0; i < n_; ++i) {
    int d = current_[i] == '(' ? 1 : current_[i] == ')' ? -1 : 0;
    prefix_height[i + 1] = prefix_height[i] + d;
  }
  for (int i = n_ - 1; i >= 1; --i) {  // position 0 is pinned to '('
    const auto sym = *symbol_from_char(current_[i]);
    const int before = prefix_height[i];
    const int remaining = n_ - i - 1;
    for (auto next : {Symbol::Open, Symbol::Close}) {
      if (static_cast<unsigned char>(next) <= static_cast<unsigned char>(sym)) {
        continue;
      }
      const int after = before + (next == Symbol::Open ? 1 : -1);
      if (after < 0 || after > remaining) continue;
      current_[i] = to_char(next);
      std::fill(current_.begin() + i + 1, current_.end(), '0');
      std::fill(current_.end() - after, current_.end(), ')');
      return true;
    }
  }
  return false;
}

std::vector<MotzkinWord> enumerate_range(int n) {
  std::vector<MotzkinWord> out;
  RangeEnumerator stream(n);
  while (auto w = stream.next()) out.push_back(*w);
  return out;
}

std::vector<PrimePair> decompose(const MotzkinWord& w) {
  const std::string& text = w.text();
  const int n = w.length();
  std::vector<PrimePair> pairs;
  std::vector<int> open_stack;
  for (int i = 0; i < n; ++i) {
    if (text[i] == '(') {
      open_stack.push_back(i);
    } else if (text[i] == ')') {
      const int j = open_stack.back();
      open_stack.pop_back();
      pairs.push_back(PrimePair{n - j, n - i});
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const PrimePair& a, const PrimePair& b) { return a.n > b.n; });
  return pairs;
}

int count_pairs(const MotzkinWord& w) { return w.open_count(); }

std::vector<Block> simple_blocks(const MotzkinWord& w) {
  const std::string& text = w.text();
  const int n = w.length();
  std::vector<Block> blocks;
  int depth = 0;
  int open_index = -1;
  for (int i = 0; i < n; ++i) {
    if (text[i] == '(') {
      if (depth == 0) open_index = i;
      ++depth;
    } else if (text[i] == ')') {
      --depth;
      if (depth == 0) blocks.push_back(Block{n - open_index, n - i});
    }
  }
  return blocks;
}

Extraction extract_block(const MotzkinWord& w, const Block& b) {
  const std::string& text = w.text();
  const int n = w.length();
  const int i = n - b.open_pos;
  const int j = n - b.close_pos;
  if (i < 0 || j >= n || i >= j || text[i] != '(' || text[j] != ')') {
    throw std::invalid_argument("extract_block: not a block of this word");
  }
  int depth = 0;
  for (int k = 0; k < i; ++k) {
    if (text[k] == '(') ++depth;
    if (text[k] == ')') --depth;
  }
  if (depth != 0) throw NotASimpleBlock();
  // The named close must be the one that matches the named open.
  int inner = 0;
  for (int k = i; k <= j; ++k) {
    if (text[k] == '(') ++inner;
    if (text[k] == ')') --inner;
    if (inner == 0 && k != j) {
      throw std::invalid_argument("extract_block: not a block of this word");
    }
  }
  if (inner != 0) {
    throw std::invalid_argument("extract_block: not a block of this word");
  }

  std::string extracted = text.substr(i, j - i + 1);
  extracted.append(n - 1 - j, '0');
  std::string remainder = text;
  std::fill(remainder.begin() + i, remainder.begin() + j + 1, '0');
  return Extraction{MotzkinWord::parse(remainder),
                    MotzkinWord::parse(extracted)};
}

MotzkinWord superimpose(const MotzkinWord& base, const MotzkinWord& block) {
  const int len = std::max(base.length(), block.length());
  std::string result(len, '0');
  auto place = [&](const MotzkinWord& w) {
    const std::string& text = w.text();
    const int offset = len - w.length();
    for (int i = 0; i < w.length(); ++i) {
      if (text[i] == '0') continue;
      if (result[offset + i] != '0') throw PositionConflict();
      result[offset + i] = text[i];
    }
  };
  place(base);
  place(block);
  int height = 0;
  for (char c : result) {
    if (c == '(') ++height;
    if (c == ')') --height;
    if (height < 0) throw InvalidResult();
  }
  if (height != 0) throw InvalidResult();
  return MotzkinWord::parse(result);
}

std::string compact_render(const MotzkinWord& w) {
  const std::string& text = w.text();
  std::string out;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] != '0') {
      out += text[i++];
      continue;
    }
    std::size_t run = 0;
    while (i + run < text.size() && text[i + run] == '0') ++run;
    if (run == 1) {
      out += '0';
    } else {
      out += "0{" + std::to_string(run) + "}";
    }
    i += run;
  }
  return out;
}

}  // namespace motzkin
