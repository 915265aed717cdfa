#include "gridramsey/bitset.hpp"

#include <bit>

namespace gridramsey {

Bitset::Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

std::size_t Bitset::count() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<std::size_t> Bitset::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::optional<std::size_t> Bitset::find_from(std::size_t from) const {
  return first_common_from(*this, *this, from);
}

std::size_t intersection_count(const Bitset& a, const Bitset& b) {
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t total = 0;
  for (std::size_t w = 0; w < wa.size(); ++w) total += static_cast<std::size_t>(std::popcount(wa[w] & wb[w]));
  return total;
}

std::optional<std::size_t> first_common_from(const Bitset& a, const Bitset& b, std::size_t from) {
  if (from >= a.size()) return std::nullopt;
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t w = from / Bitset::kWordBits;
  Bitset::Word bits = wa[w] & wb[w] & (~Bitset::Word{0} << (from % Bitset::kWordBits));
  while (true) {
    if (bits != 0) return w * Bitset::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == wa.size()) return std::nullopt;
    bits = wa[w] & wb[w];
  }
}

}  // namespace gridramsey
