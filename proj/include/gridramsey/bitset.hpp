#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gridramsey {

// Fixed-length dynamic bitset with word-parallel intersection counts.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size);

  std::size_t size() const { return size_; }

  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }

  std::size_t count() const;
  std::vector<std::size_t> members() const;

  // Smallest set index >= from, if any.
  std::optional<std::size_t> find_from(std::size_t from) const;

  std::span<const Word> words() const { return words_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

// |a & b| without materialising the intersection.
std::size_t intersection_count(const Bitset& a, const Bitset& b);

// Smallest index >= from set in both a and b.
std::optional<std::size_t> first_common_from(const Bitset& a, const Bitset& b, std::size_t from);

}  // namespace gridramsey
