#include "dlv/twist.hpp"

#include <algorithm>
#include <numeric>

#include "dlv/coxeter_detail.hpp"

namespace dlv {

namespace {

int order_of(const std::vector<int>& pi) {
  int r = static_cast<int>(pi.size());
  std::vector<int> cur(r);
  std::iota(cur.begin(), cur.end(), 1);
  for (int d = 1;; ++d) {
    for (int i = 0; i < r; ++i) cur[i] = pi[cur[i] - 1];
    bool ident = true;
    for (int i = 0; i < r && ident; ++i) ident = (cur[i] == i + 1);
    if (ident) return d;
    if (d > r + 2) throw DefectError("permutation order runaway");
  }
}

}  // namespace

Twist::Twist(CoxeterSystem W, std::vector<int> pi, std::string spec)
    : W_(std::move(W)), pi_(std::move(pi)), spec_(std::move(spec)) {
  int r = W_.rank();
  std::vector<bool> seen(r, false);
  for (int s = 1; s <= r; ++s) {
    int t = pi_[s - 1];
    if (t < 1 || t > r || seen[t - 1])
      throw std::invalid_argument("twist is not a permutation of S");
    seen[t - 1] = true;
  }
  for (int s = 1; s <= r; ++s)
    for (int t = 1; t <= r; ++t)
      if (W_.coxeter_m(apply(s), apply(t)) != W_.coxeter_m(s, t))
        throw std::invalid_argument(
            "twist does not preserve the Coxeter matrix at (" +
            std::to_string(s) + "," + std::to_string(t) + ")");
  delta_ = order_of(pi_);
  bool identity = true;
  for (int s = 1; s <= r && identity; ++s) identity = (apply(s) == s);
  if (identity) {
    kind_ = Kind::Untwisted;
    return;
  }
  // graph twists preserve the Cartan pairing; the Suzuki-Ree twists do not
  const auto& cartan = W_.data()->cartan;
  bool cartan_preserved = true;
  for (int s = 1; s <= r && cartan_preserved; ++s)
    for (int t = 1; t <= r && cartan_preserved; ++t)
      if (cartan[apply(s) - 1][apply(t) - 1] != cartan[s - 1][t - 1])
        cartan_preserved = false;
  kind_ = cartan_preserved ? Kind::Graph : Kind::Exotic;
}

Twist Twist::untwisted(const CoxeterSystem& W) {
  std::vector<int> pi(W.rank());
  std::iota(pi.begin(), pi.end(), 1);
  return Twist(W, std::move(pi), "id");
}

GenSet Twist::apply(GenSet I) const {
  GenSet out;
  for (int s : I.to_vector()) out.add(apply(s));
  return out;
}

GroupElement Twist::apply(const GroupElement& w) const {
  if (w.data() != W_.data())
    throw std::invalid_argument("element does not belong to the twist's group");
  Word word = w.reduced_word();
  for (int& s : word) s = apply(s);
  return W_.from_word(word);
}

std::string Twist::q_semantics() const {
  if (kind_ == Kind::Exotic)
    return "q denotes p^((2m+1)/2); q^2 is an odd power of p";
  return "q denotes the Frobenius field size";
}

std::vector<GenSet> Twist::orbits() const {
  std::vector<GenSet> out;
  std::vector<bool> seen(W_.rank(), false);
  for (int s = 1; s <= W_.rank(); ++s) {
    if (seen[s - 1]) continue;
    GenSet orbit;
    int t = s;
    do {
      orbit.add(t);
      seen[t - 1] = true;
      t = apply(t);
    } while (t != s);
    out.push_back(orbit);
  }
  return out;
}

Twist Twist::parse(const CoxeterSystem& W, const std::string& spec) {
  auto strip = [](std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    return s;
  };
  std::string text = strip(spec);
  if (text.empty() || text == "id") return untwisted(W);

  int r = W.rank();
  std::vector<int> pi(r);
  std::iota(pi.begin(), pi.end(), 1);

  auto require_type = [&](const std::string& name) {
    if (W.type_name() != name)
      throw std::invalid_argument("twist '" + text + "' requires type " + name +
                                  ", group is " + W.type_name());
  };

  if (text[0] == '2' || text[0] == '3') {
    std::string name = text.substr(1);
    if (text == "3D4") {
      require_type("D4");
      pi = {3, 2, 4, 1};  // triality 1 -> 3 -> 4 -> 1, center node 2 fixed
    } else if (text == "2E6") {
      require_type("E6");
      pi = {6, 2, 5, 4, 3, 1};
    } else if (text == "2B2") {
      require_type("B2");
      pi = {2, 1};
    } else if (text == "2G2") {
      require_type("G2");
      pi = {2, 1};
    } else if (text == "2F4") {
      require_type("F4");
      pi = {4, 3, 2, 1};
    } else if (text.size() >= 3 && text[1] == 'A') {
      int n = std::stoi(name.substr(1));
      require_type("A" + std::to_string(n));
      if (n < 2) throw std::invalid_argument("2A_n requires n >= 2");
      for (int s = 1; s <= n; ++s) pi[s - 1] = n + 1 - s;
    } else if (text.size() >= 3 && text[1] == 'D') {
      int n = std::stoi(name.substr(1));
      require_type("D" + std::to_string(n));
      std::swap(pi[n - 2], pi[n - 1]);
    } else {
      throw ParseError("unknown twist '" + text + "'", 0);
    }
    return Twist(W, std::move(pi), text);
  }

  // product of swap(a,b) terms
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    if (text[i] == ',') {
      ++i;
      continue;
    }
    if (text.compare(i, 5, "swap(") != 0)
      throw ParseError("expected swap(a,b) in twist", i);
    i += 5;
    std::size_t comma = text.find(',', i);
    std::size_t close = text.find(')', i);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw ParseError("malformed swap(a,b)", i);
    int a = std::stoi(text.substr(i, comma - i));
    int b = std::stoi(text.substr(comma + 1, close - comma - 1));
    if (a < 1 || a > r || b < 1 || b > r || a == b)
      throw std::invalid_argument("swap labels out of range");
    std::swap(pi[a - 1], pi[b - 1]);
    any = true;
    i = close + 1;
  }
  if (!any) throw ParseError("empty twist specification", 0);
  return Twist(W, std::move(pi), text);
}

}  // namespace dlv
