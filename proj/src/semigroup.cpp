#include "gtsg/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

#include <boost/integer/common_factor.hpp>

namespace gtsg {

std::optional<Nat> parse_nat(std::string_view text) {
  if (text.empty()) return std::nullopt;
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  return Nat(std::string(text));
}

std::optional<std::uint64_t> to_u64(const Nat& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return v.convert_to<std::uint64_t>();
}

namespace {

// Residue tables are held in memory, one slot per residue.
constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

struct Edge {
  std::uint64_t step;  // g mod x
  std::size_t gen;     // index into the generator list
};

// Keeps the lightest generator per nonzero residue; a zero step is a self loop.
std::vector<Edge> residue_edges(std::span<const Nat> gens, std::uint64_t x) {
  std::vector<std::pair<std::uint64_t, std::size_t>> seen;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto step = static_cast<std::uint64_t>(gens[i] % x);
    if (step == 0) continue;
    seen.emplace_back(step, i);
  }
  std::stable_sort(seen.begin(), seen.end(), [&](auto& a, auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return gens[a.second] < gens[b.second];
  });
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (i == 0 || seen[i].first != seen[i - 1].first)
      edges.push_back({seen[i].first, seen[i].second});
  return edges;
}

template <typename W>
std::vector<std::optional<W>> dijkstra(std::span<const W> weight,
                                       std::span<const Edge> edges,
                                       std::uint64_t x) {
  std::vector<std::optional<W>> dist(x);
  using Item = std::pair<W, std::uint64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[0] = W(0);
  pq.emplace(W(0), 0);
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (*dist[r] != d) continue;
    for (const Edge& e : edges) {
      std::uint64_t next = r + e.step;
      if (next >= x) next -= x;
      W cand = d + weight[e.gen];
      if (!dist[next] || cand < *dist[next]) {
        dist[next] = cand;
        pq.emplace(cand, next);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<Nat> residue_distances(std::span<const Nat> gens,
                                   std::uint64_t modulus) {
  if (modulus == 0) throw ZeroModulus();
  if (modulus > kMaxModulus) throw ModulusTooLarge(Nat(modulus));
  auto edges = residue_edges(gens, modulus);

  // A shortest path uses at most modulus-1 edges, so every tentative distance
  // is below modulus * max(gen). Use machine words when that fits.
  Nat max_gen = 0;
  for (const Nat& g : gens) max_gen = std::max(max_gen, g);
  std::vector<Nat> out(modulus, Nat(-1));
  if (Nat(modulus) * max_gen < (Nat(1) << 63)) {
    std::vector<std::uint64_t> w;
    w.reserve(gens.size());
    for (const Nat& g : gens) w.push_back(g.convert_to<std::uint64_t>());
    auto dist = dijkstra<std::uint64_t>(w, edges, modulus);
    for (std::uint64_t r = 0; r < modulus; ++r)
      if (dist[r]) out[r] = *dist[r];
  } else {
    auto dist = dijkstra<Nat>(gens, edges, modulus);
    for (std::uint64_t r = 0; r < modulus; ++r)
      if (dist[r]) out[r] = std::move(*dist[r]);
  }
  return out;
}

GeneratorSet make_semigroup(std::vector<Nat> gens) {
  std::erase_if(gens, [](const Nat& g) { return g <= 0; });
  if (gens.empty()) throw EmptyInput();
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Nat g = 0;
  for (const Nat& v : gens) g = boost::integer::gcd(g, v);
  if (g != 1) throw GcdNotOne(g);
  return GeneratorSet(std::move(gens));
}

std::vector<Nat> AperyTable::sorted() const {
  std::vector<Nat> v = w_;
  std::sort(v.begin(), v.end());
  return v;
}

const Nat& AperyTable::max() const {
  return *std::max_element(w_.begin(), w_.end());
}

Nat AperyTable::sum() const {
  Nat total = 0;
  for (const Nat& v : w_) total += v;
  return total;
}

bool AperyTable::contains(const Nat& v) const {
  if (v < 0) return false;
  auto r = static_cast<std::size_t>(v % modulus_);
  return v >= w_[r];
}

AperyTable::AperyTable(Nat modulus, std::vector<Nat> w)
    : modulus_(std::move(modulus)), w_(std::move(w)) {
  if (std::all_of(w_.begin(), w_.end(),
                  [](const Nat& x) { return x <= std::numeric_limits<std::uint64_t>::max(); })) {
    w64_.reserve(w_.size());
    for (const Nat& x : w_) w64_.push_back(x.convert_to<std::uint64_t>());
  }
}

bool AperyTable::contains(std::uint64_t v) const {
  auto r = static_cast<std::size_t>(v % w_.size());
  if (!w64_.empty()) return w64_[r] <= v;
  return w_[r] <= v;
}

AperyTable apery_set(const GeneratorSet& s, const Nat& x) {
  if (x == 0) throw ZeroModulus();
  if (x < 0 || !is_member(s, x)) throw NotMember(x);
  if (x > kMaxModulus) throw ModulusTooLarge(x);
  // gcd(S) = 1, so every residue class mod x is reached.
  return AperyTable(x, residue_distances(s.gens(), x.convert_to<std::uint64_t>()));
}

AperyTable apery_set(const GeneratorSet& s) {
  const Nat& m = s.smallest();
  if (m > kMaxModulus) throw ModulusTooLarge(m);
  return AperyTable(m, residue_distances(s.gens(), m.convert_to<std::uint64_t>()));
}

Nat frobenius(const AperyTable& ap) { return ap.max() - ap.modulus(); }

Nat frobenius(const GeneratorSet& s) { return frobenius(apery_set(s)); }

Nat genus(const AperyTable& ap) {
  const Nat& x = ap.modulus();
  Nat num = 2 * ap.sum() - x * (x - 1);
  Nat den = 2 * x;
  if (num % den != 0)
    throw std::logic_error("genus formula: sum of Apery set is not consistent");
  return num / den;
}

Nat genus(const GeneratorSet& s) { return genus(apery_set(s)); }

bool is_member(const GeneratorSet& s, const Nat& x) {
  if (x < 0) return false;
  if (x == 0) return true;
  if (x < s.smallest()) return false;
  return apery_set(s).contains(x);
}

GeneratorSet minimal_generators(const GeneratorSet& s) {
  // With m the smallest generator, g > m is decomposable iff g - m is in S
  // (g not in Ap(S,m)) or g = a + b with a, b nonzero Apery elements.
  const Nat& m = s.smallest();
  AperyTable ap = apery_set(s);
  const std::size_t size = ap.size();
  std::vector<Nat> kept{m};
  for (const Nat& g : s.gens().subspan(1)) {
    auto r = static_cast<std::size_t>(g % m);
    if (ap[r] != g) continue;
    bool split = false;
    for (std::size_t i = 1; i < size && !split; ++i) {
      if (i == r) continue;
      const Nat& a = ap[i];
      if (a >= g) continue;
      std::size_t j = (r + size - i) % size;
      split = (a + ap[j] == g);
    }
    if (!split) kept.push_back(g);
  }
  return make_semigroup(std::move(kept));
}

}  // namespace gtsg
