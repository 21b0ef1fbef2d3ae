#ifndef GLINV_PERM_HPP
#define GLINV_PERM_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace glinv {

/// Largest degree accepted by enumerate_symmetric_group (8! = 40320).
inline constexpr int kMaxEnumerationDegree = 8;

/// A cycle of slots, rotated so the smallest slot comes first.
struct Cycle {
  std::vector<int> slots;
  std::size_t length() const { return slots.size(); }
  bool operator==(const Cycle&) const = default;
};

/// Element of S_r in one-line notation with 1-based slots: image(k) = rho(k).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection of {1..r}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int r);
  static Permutation from_cycles(int r, const std::vector<Cycle>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const { return images_; }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// All r! permutations in lexicographic order of their one-line notation.
/// Throws CapError when r is outside [0, kMaxEnumerationDegree].
std::vector<Permutation> enumerate_symmetric_group(int r);

/// Cycles (fixed points included) ordered by their minimum slot.
std::vector<Cycle> cycle_decomposition(const Permutation& rho);

/// (rho * sigma)(k) = rho(sigma(k)). Throws SizeMismatch on degree mismatch.
Permutation compose(const Permutation& rho, const Permutation& sigma);
Permutation inverse(const Permutation& rho);
/// +1 for even, -1 for odd permutations.
int parity(const Permutation& rho);

/// Sign of the permutation that sorts a sequence of distinct integers.
int sorting_sign(std::vector<int> values);

/// "2 3 1" or "2,3,1".
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& rho);

}  // namespace glinv

#endif  // GLINV_PERM_HPP
