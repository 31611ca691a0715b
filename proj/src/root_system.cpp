#include "liegrade/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace liegrade {

std::string LieType::name() const { return std::string(1, family) + std::to_string(rank); }

void LieType::validate() const {
  const std::string n = name();
  switch (family) {
    case 'A':
      if (rank >= 1) return;
      break;
    case 'B':
    case 'C':
      if (rank >= 2) return;
      break;
    case 'D':
      if (rank >= 3) return;
      break;
    case 'E':
      if (rank >= 6 && rank <= 8) return;
      break;
    case 'F':
      if (rank == 4) return;
      break;
    case 'G':
      if (rank == 2) return;
      break;
    default:
      throw InvalidInput("unknown Lie family '" + std::string(1, family) + "'");
  }
  throw InvalidInput("invalid rank for family " + std::string(1, family) + ": " + std::to_string(rank));
}

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidInput("Lie type must look like A2, E6, ...: '" + std::string(text) + "'");
  LieType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const std::string digits(text.substr(1));
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InvalidInput("Lie type must look like A2, E6, ...: '" + std::string(text) + "'");
  t.rank = std::stoi(digits);
  t.validate();
  return t;
}

int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

Root negated(const Root& r) {
  Root n(r.size());
  std::transform(r.begin(), r.end(), n.begin(), [](int x) { return -x; });
  return n;
}

Root operator+(const Root& a, const Root& b) {
  Root s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

Root operator-(const Root& a, const Root& b) {
  Root s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] - b[i];
  return s;
}

std::vector<std::vector<int>> cartan_matrix_of(const LieType& t) {
  t.validate();
  const int r = t.rank;
  std::vector<std::vector<int>> c(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based simple edge
    c[i - 1][j - 1] = -1;
    c[j - 1][i - 1] = -1;
  };
  switch (t.family) {
    case 'A':
      for (int i = 1; i < r; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < r - 1; ++i) link(i, i + 1);
      c[r - 2][r - 1] = -1;  // alpha_r short
      c[r - 1][r - 2] = -2;
      break;
    case 'C':
      for (int i = 1; i < r - 1; ++i) link(i, i + 1);
      c[r - 2][r - 1] = -2;  // alpha_r long
      c[r - 1][r - 2] = -1;
      break;
    case 'D':
      for (int i = 1; i < r - 1; ++i) link(i, i + 1);
      link(r - 2, r);
      break;
    case 'E':
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < r; ++i) link(i, i + 1);
      break;
    case 'F':
      link(1, 2);
      link(3, 4);
      c[1][2] = -1;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      c[2][1] = -2;
      break;
    case 'G':
      c[0][1] = -3;  // alpha_1 short, alpha_2 long
      c[1][0] = -1;
      break;
  }
  return c;
}

std::size_t classical_root_count(const LieType& t) {
  t.validate();
  const std::size_t r = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case 'A': return r * (r + 1);
    case 'B':
    case 'C': return 2 * r * r;
    case 'D': return 2 * r * (r - 1);
    case 'E': return r == 6 ? 72 : (r == 7 ? 126 : 240);
    case 'F': return 48;
    case 'G': return 12;
  }
  return 0;
}

RootSystem RootSystem::build(const LieType& t) {
  RootSystem rs;
  rs.type_ = t;
  rs.cartan_ = cartan_matrix_of(t);
  const int r = t.rank;
  const auto& c = rs.cartan_;

  // Relative squared lengths from the symmetrizability of the Cartan matrix:
  // l_i c[i][j] = l_j c[j][i].
  std::vector<Rational> len(r, 0);
  len[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < r; ++j) {
      if (i == j || c[i][j] == 0 || sgn(len[j]) != 0) continue;
      len[j] = len[i] * c[i][j] / c[j][i];
      queue.push_back(j);
    }
  }

  // Reflection closure of the simple roots.
  std::set<Root> found;
  std::deque<Root> work;
  for (int i = 0; i < r; ++i) {
    Root a(r, 0);
    a[i] = 1;
    found.insert(a);
    work.push_back(a);
  }
  while (!work.empty()) {
    Root b = work.front();
    work.pop_front();
    for (int i = 0; i < r; ++i) {
      int p = 0;
      for (int j = 0; j < r; ++j) p += b[j] * c[i][j];
      Root s = b;
      s[i] -= p;
      if (found.insert(s).second) work.push_back(s);
    }
  }

  std::vector<Root> positive;
  for (const auto& a : found)
    if (height(a) > 0) positive.push_back(a);
  std::sort(positive.begin(), positive.end(), [](const Root& a, const Root& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  rs.roots_ = positive;
  for (const auto& a : positive) rs.roots_.push_back(negated(a));
  if (rs.roots_.size() != found.size())
    throw InternalError("root closure produced an unbalanced root set");
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) rs.lookup_[rs.roots_[k]] = k;

  // Highest root: the positive root dominating every other root.
  std::optional<std::size_t> top;
  for (std::size_t k = 0; k < positive.size(); ++k) {
    bool dominates = true;
    for (const auto& other : positive) {
      const Root d = positive[k] - other;
      if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; })) {
        dominates = false;
        break;
      }
    }
    if (dominates) {
      if (top) throw InternalError("more than one maximal root");
      top = k;
    }
  }
  if (!top) throw InternalError("no root dominates all others");
  rs.highest_ = *top;

  // Unnormalized Gram matrix (alpha_i, alpha_j) = c[i][j] l_i / 2, then rescale.
  Matrix gram(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram(i, j) = Rational(c[i][j]) * len[i] / 2;
  const Root& hr = rs.roots_[rs.highest_];
  Rational theta_norm = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) theta_norm += gram(i, j) * hr[i] * hr[j];
  rs.form_star_ = gram * (Rational(2) / theta_norm);
  return rs;
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  auto it = lookup_.find(r);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::negative_index(std::size_t i) const {
  const std::size_t np = num_positive();
  return i < np ? i + np : i - np;
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
  Rational s = 0;
  const int r = rank();
  for (int i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < r; ++j)
      if (b[j] != 0) s += form_star_(i, j) * (a[i] * b[j]);
  }
  return s;
}

int RootSystem::pairing(const Root& a, int i) const {
  int p = 0;
  for (int j = 0; j < rank(); ++j) p += a[j] * cartan_[i][j];
  return p;
}

std::vector<int> RootSystem::affine_marks() const {
  std::vector<int> marks{1};
  const Root& hr = highest_root();
  marks.insert(marks.end(), hr.begin(), hr.end());
  return marks;
}

Vector RootSystem::coroot(const Root& a) const {
  if (!is_root(a)) throw InvalidInput("coroot: not a root");
  const Rational na = norm(a);
  Vector h(rank());
  for (int i = 0; i < rank(); ++i) h[i] = Rational(a[i]) * form_star_(i, i) / na;
  return h;
}

Rational RootSystem::max_norm() const {
  Rational m = 0;
  for (std::size_t k = 0; k < num_positive(); ++k) m = std::max(m, norm(roots_[k]));
  return m;
}

}  // namespace liegrade
