#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motzkin/prime_pair.hpp"

namespace motzkin {

// Alphabet order is 0 < ( < ); raw character codes order differently, so all
// comparisons go through this mapping.
enum class Symbol : unsigned char { Zero = 0, Open = 1, Close = 2 };

char to_char(Symbol s);
std::optional<Symbol> symbol_from_char(char c);

enum class RowMembership { Unique, Inherited };

/// A validated word over {0, (, )}: equal numbers of '(' and ')', and no
/// prefix with more ')' than '('. Immutable value type.
class MotzkinWord {
 public:
  /// Single left-to-right pass tracking nesting height. Throws EmptyInput,
  /// IllegalCharacter, or UnbalancedWord (with the 1-based position of the
  /// first offending prefix).
  static MotzkinWord parse(std::string_view text);

  const std::string& text() const { return text_; }
  int length() const { return static_cast<int>(text_.size()); }

  /// Symbol at 1-based position counted from the right end.
  Symbol symbol_at(int pos_from_right) const;

  bool all_zeros() const;
  int open_count() const;

  friend bool operator==(const MotzkinWord&, const MotzkinWord&) = default;

 private:
  explicit MotzkinWord(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

/// Total order of the row: shorter words first, equal lengths compared
/// left-to-right with Zero < Open < Close.
std::strong_ordering compare(const MotzkinWord& a, const MotzkinWord& b);

inline bool operator<(const MotzkinWord& a, const MotzkinWord& b) {
  return compare(a, b) == std::strong_ordering::less;
}

/// True for "0" and for every word starting with '('.
bool is_unique(const MotzkinWord& w);

RowMembership membership(const MotzkinWord& w);

/// Smallest unique n-word, (0^{n-2}); requires n >= 2 (the n = 1 range is
/// just {"0"}).
MotzkinWord range_min(int n);

/// Largest unique n-word, "()" repeated floor(n/2) times, plus a final '0'
/// when n is odd; requires n >= 1.
MotzkinWord range_max(int n);

/// Streams the unique n-words in compare order by direct lexicographic
/// successor generation; yields exactly motzkin_increment(n) words.
class RangeEnumerator {
 public:
  explicit RangeEnumerator(int n);
  std::optional<MotzkinWord> next();

 private:
  bool advance();

  int n_;
  std::string current_;
  bool done_ = false;
};

std::vector<MotzkinWord> enumerate_range(int n);

/// All matched pairs of w, ordered by descending '(' position (leftmost pair
/// first); empty iff w has no brackets.
std::vector<PrimePair> decompose(const MotzkinWord& w);

int count_pairs(const MotzkinWord& w);

// A matched pair plus everything inside, addressed by the delimiting bracket
// positions counted from the right end (1-based).
struct Block {
  int open_pos;
  int close_pos;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Blocks of w at nesting level zero, left to right.
std::vector<Block> simple_blocks(const MotzkinWord& w);

struct Extraction {
  MotzkinWord remainder;  // host with the block's symbols zeroed, full length
  MotzkinWord extracted;  // block plus one trailing zero per symbol right of it
};

/// Removes a simple block while keeping every untouched bracket at its
/// position from the right end. Throws NotASimpleBlock for nested blocks.
Extraction extract_block(const MotzkinWord& w, const Block& b);

/// Right-aligns both operands and overwrites zeros of the longer with the
/// brackets of the shorter. Throws PositionConflict when brackets collide and
/// InvalidResult if the combination is not a valid word.
MotzkinWord superimpose(const MotzkinWord& base, const MotzkinWord& block);

/// Display form with runs of two or more zeros shortened to 0{k}.
std::string compact_render(const MotzkinWord& w);

}  // namespace motzkin
