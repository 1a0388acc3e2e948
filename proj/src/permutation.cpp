#include "coxlehmer/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxlehmer {

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)), inverse_(values_.size(), 0) {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    int v = values_[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || inverse_[static_cast<std::size_t>(v) - 1] != 0)
      throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]: " + to_string());
    inverse_[static_cast<std::size_t>(v) - 1] = i + 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  bool separated = text.find(',') != std::string_view::npos || text.find(' ') != std::string_view::npos;
  if (separated) {
    std::string s(text);
    for (char& c : s)
      if (c == ',') c = ' ';
    std::istringstream is(s);
    int x = 0;
    while (is >> x) v.push_back(x);
    if (!is.eof()) throw std::invalid_argument("cannot parse permutation '" + std::string(text) + "'");
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("cannot parse permutation '" + std::string(text) + "' at position " +
                                    std::to_string(i));
      v.push_back(text[i] - '0');
    }
  }
  return Permutation(std::move(v));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> v(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) v[static_cast<std::size_t>(i) - 1] = a(b(i));
  return Permutation(std::move(v));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    for (std::size_t j = i + 1; j < values_.size(); ++j)
      if (values_[i] > values_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  bool wide = values_.size() > 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (wide && i > 0) os << ',';
    os << values_[i];
  }
  return os.str();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool avoids(const Permutation& w, const Permutation& pattern) {
  const int n = w.size();
  const int k = pattern.size();
  if (k == 0) return false;
  if (k > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  const auto& p = pattern.one_line();
  const auto& v = w.one_line();
  while (true) {
    bool match = true;
    for (int a = 0; a < k && match; ++a)
      for (int b = a + 1; b < k && match; ++b)
        if ((p[static_cast<std::size_t>(a)] < p[static_cast<std::size_t>(b)]) !=
            (v[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])] <
             v[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])]))
          match = false;
    if (match) return false;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
  }
}

}  // namespace coxlehmer
