#include "glinv/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "glinv/errors.hpp"

namespace glinv {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(degree()));
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int r) {
  std::vector<int> images(static_cast<std::size_t>(r));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int r, const std::vector<Cycle>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(r));
  std::iota(images.begin(), images.end(), 1);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.slots.size(); ++i) {
      int from = c.slots[i];
      int to = c.slots[(i + 1) % c.slots.size()];
      if (from < 1 || from > r) throw std::invalid_argument("cycle slot out of range");
      images[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> enumerate_symmetric_group(int r) {
  if (r < 0 || r > kMaxEnumerationDegree)
    throw CapError("permutation degree " + std::to_string(r) + " outside 0.." +
                   std::to_string(kMaxEnumerationDegree));
  std::vector<int> images(static_cast<std::size_t>(r));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Cycle> cycle_decomposition(const Permutation& rho) {
  std::vector<Cycle> cycles;
  std::vector<bool> visited(static_cast<std::size_t>(rho.degree()), false);
  for (int start = 1; start <= rho.degree(); ++start) {
    if (visited[static_cast<std::size_t>(start - 1)]) continue;
    Cycle c;
    for (int k = start; !visited[static_cast<std::size_t>(k - 1)]; k = rho(k)) {
      visited[static_cast<std::size_t>(k - 1)] = true;
      c.slots.push_back(k);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

Permutation compose(const Permutation& rho, const Permutation& sigma) {
  if (rho.degree() != sigma.degree())
    throw SizeMismatch("composing permutations of degree " + std::to_string(rho.degree()) +
                       " and " + std::to_string(sigma.degree()));
  std::vector<int> images(static_cast<std::size_t>(rho.degree()));
  for (int k = 1; k <= rho.degree(); ++k) images[static_cast<std::size_t>(k - 1)] = rho(sigma(k));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& rho) {
  std::vector<int> images(static_cast<std::size_t>(rho.degree()));
  for (int k = 1; k <= rho.degree(); ++k) images[static_cast<std::size_t>(rho(k) - 1)] = k;
  return Permutation(std::move(images));
}

int parity(const Permutation& rho) {
  // Each cycle of length c is a product of c - 1 transpositions.
  int transpositions = 0;
  for (const auto& c : cycle_decomposition(rho))
    transpositions += static_cast<int>(c.length()) - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

int sorting_sign(std::vector<int> values) {
  int sign = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto it = std::min_element(values.begin() + static_cast<std::ptrdiff_t>(i), values.end());
    auto j = static_cast<std::size_t>(it - values.begin());
    if (j != i) {
      std::swap(values[i], values[j]);
      sign = -sign;
    }
  }
  return sign;
}

Permutation parse_permutation(std::string_view text) {
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<int> images;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed permutation entry '" + token + "'");
    }
    if (used != token.size()) throw ParseError("malformed permutation entry '" + token + "'");
    images.push_back(v);
  }
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed permutation '") + std::string(text) + "': " + e.what());
  }
}

std::string to_string(const Permutation& rho) {
  std::string out;
  for (int v : rho.images()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace glinv
