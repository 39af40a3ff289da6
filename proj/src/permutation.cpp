#include "nearunitary/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace nearunitary {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace {

void check_bijection(const std::vector<int>& image) {
  std::vector<char> seen(image.size(), 0);
  for (int v : image) {
    if (v < 0 || v >= static_cast<int>(image.size()) || seen[v])
      throw domain_error("image is not a bijection on {1..N}");
    seen[v] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> image_zero_based)
    : image_(std::move(image_zero_based)) {
  if (image_.empty()) throw domain_error("empty permutation");
  check_bijection(image_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw domain_error("transposition index out of range");
  auto p = identity(n);
  std::swap(p.image_[a], p.image_[b]);
  return p;
}

Permutation Permutation::from_cycles(const std::string& text, int n) {
  if (n < 1 || n > 9) throw domain_error("cycle notation supports 1 <= N <= 9");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::vector<char> used(n, 0);

  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    std::ostringstream os;
    os << "cycle parse error at position " << i << ": " << msg;
    throw domain_error(os.str());
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  if (i == text.size()) fail("empty input");
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      char c = text[i];
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected digit or ')'");
      int sym = c - '0';
      if (sym < 1 || sym > n) fail("symbol out of range 1..N");
      if (used[sym - 1]) fail("repeated symbol");
      used[sym - 1] = 1;
      cycle.push_back(sym - 1);
      ++i;
      skip_ws();
    }
    if (i == text.size()) fail("unclosed '('");
    ++i;  // ')'
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) im[cycle[k]] = cycle[k + 1];
    if (cycle.size() > 1) im[cycle.back()] = cycle.front();
    skip_ws();
  }
  return Permutation(std::move(im));
}

std::vector<int> Permutation::image_one_based() const {
  std::vector<int> out(image_.size());
  std::transform(image_.begin(), image_.end(), out.begin(),
                 [](int v) { return v + 1; });
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (size() != q.size()) throw domain_error("permutation size mismatch");
  std::vector<int> im(image_.size());
  for (int i = 0; i < size(); ++i) im[i] = image_[q.image_[i]];
  return Permutation(std::move(im));
}

int Permutation::sign() const {
  int s = 1;
  for (int len : cycle_type())
    if (len % 2 == 0) s = -s;
  return s;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<char> seen(image_.size(), 0);
  std::vector<int> lengths;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = image_[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string Permutation::to_cycles() const {
  std::vector<char> seen(image_.size(), 0);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < size(); ++i) {
    if (seen[i] || image_[i] == i) {
      seen[i] = 1;
      continue;
    }
    os << '(';
    for (int j = i; !seen[j]; j = image_[j]) {
      seen[j] = 1;
      os << (j + 1);
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "()";
}

Ordering::Ordering(std::vector<int> seq_zero_based) : seq_(std::move(seq_zero_based)) {
  if (seq_.size() < 2) throw domain_error("ordering needs at least 2 particles");
  check_bijection(seq_);
}

std::vector<int> Ordering::seq_one_based() const {
  std::vector<int> out(seq_.size());
  std::transform(seq_.begin(), seq_.end(), out.begin(), [](int v) { return v + 1; });
  return out;
}

std::int64_t Ordering::lex_index() const {
  // Factorial number system rank.
  const int n = size();
  std::int64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (seq_[j] < seq_[i]) ++smaller;
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

Ordering Ordering::from_lex_index(int n, std::int64_t index) {
  if (index < 0 || index >= factorial(n)) throw domain_error("lex index out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> seq;
  seq.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    std::int64_t f = factorial(i);
    auto d = index / f;
    index %= f;
    seq.push_back(pool[d]);
    pool.erase(pool.begin() + d);
  }
  return Ordering(std::move(seq));
}

std::string Ordering::to_string() const {
  std::ostringstream os;
  os << '<';
  for (int v : seq_) os << (v + 1);
  os << '>';
  return os.str();
}

std::vector<Ordering> all_orderings(int n) {
  if (n < 2 || n > kMaxParticles)
    throw domain_error("N must satisfy 2 <= N <= " + std::to_string(kMaxParticles));
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  std::vector<Ordering> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

Ordering particle_action(const Permutation& p, const Ordering& w) {
  if (p.size() != w.size()) throw domain_error("particle_action: size mismatch");
  std::vector<int> seq(w.size());
  for (int k = 0; k < w.size(); ++k) seq[k] = p(w.seq()[k]);
  return Ordering(std::move(seq));
}

Ordering ordering_action(const Permutation& q, const Ordering& w) {
  if (q.size() != w.size()) throw domain_error("ordering_action: size mismatch");
  std::vector<int> seq(w.size());
  for (int k = 0; k < w.size(); ++k) seq[q(k)] = w.seq()[k];
  return Ordering(std::move(seq));
}

WellPermutation::WellPermutation(std::vector<std::int64_t> image)
    : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (auto v : image_) {
    if (v < 0 || v >= dim() || seen[v])
      throw domain_error("well map is not a bijection");
    seen[v] = 1;
  }
}

WellPermutation WellPermutation::from_ordering_map(
    int n, const std::function<Ordering(const Ordering&)>& f) {
  const auto wells = all_orderings(n);
  std::vector<std::int64_t> image(wells.size());
  for (std::size_t i = 0; i < wells.size(); ++i) image[i] = f(wells[i]).lex_index();
  return WellPermutation(std::move(image));
}

WellPermutation WellPermutation::from_particle_action(int n, const Permutation& p) {
  return from_ordering_map(n, [&](const Ordering& w) { return particle_action(p, w); });
}

WellPermutation WellPermutation::from_ordering_action(int n, const Permutation& q) {
  return from_ordering_map(n, [&](const Ordering& w) { return ordering_action(q, w); });
}

WellPermutation WellPermutation::reversal(int n) {
  return from_ordering_map(n, [](const Ordering& w) {
    auto seq = w.seq();
    std::reverse(seq.begin(), seq.end());
    return Ordering(std::move(seq));
  });
}

WellPermutation WellPermutation::transposition(std::int64_t dim, std::int64_t a,
                                               std::int64_t b) {
  if (a < 0 || b < 0 || a >= dim || b >= dim)
    throw domain_error("well transposition index out of range");
  std::vector<std::int64_t> image(dim);
  std::iota(image.begin(), image.end(), std::int64_t{0});
  std::swap(image[a], image[b]);
  return WellPermutation(std::move(image));
}

WellPermutation WellPermutation::operator*(const WellPermutation& other) const {
  if (dim() != other.dim()) throw domain_error("well permutation dim mismatch");
  std::vector<std::int64_t> image(image_.size());
  for (std::int64_t i = 0; i < dim(); ++i) image[i] = image_[other.image_[i]];
  return WellPermutation(std::move(image));
}

Eigen::MatrixXd WellPermutation::matrix() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim(), dim());
  for (std::int64_t i = 0; i < dim(); ++i) m(image_[i], i) = 1.0;
  return m;
}

namespace {
// Paper letter assignment: A-><123>, B-><132>, C-><312>, D-><321>,
// E-><231>, F-><213>; lex order is <123>,<132>,<213>,<231>,<312>,<321>.
constexpr char kLetters3[6] = {'A', 'B', 'F', 'E', 'C', 'D'};
}  // namespace

char well_letter3(std::int64_t lex_index) {
  if (lex_index < 0 || lex_index >= 6) throw domain_error("N=3 well index out of range");
  return kLetters3[lex_index];
}

std::int64_t well_index3(char letter) {
  for (std::int64_t i = 0; i < 6; ++i)
    if (kLetters3[i] == letter) return i;
  throw domain_error("unknown well letter");
}

}  // namespace nearunitary
