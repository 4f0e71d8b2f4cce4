#include "dlv/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "dlv/coxeter_detail.hpp"

// Construction works in three stages: classify the input into irreducible
// finite components, build per-component signed permutation tables for the
// simple reflections, and glue them into one global root indexing.  The
// classification doubles as the finiteness check: a diagram matching no
// finite type is rejected.

namespace dlv {

using detail::Component;
using detail::CoxData;

namespace {

//------------------------------------------------------------------------
// Cartan matrices in Bourbaki numbering, 0-based nodes.

std::vector<std::vector<int>> cartan_matrix(char family, int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j, int aij, int aji) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      if (n >= 2) bond(n - 2, n - 1, -1, -2);
      break;
    case 'C':  // alpha_n long; same Weyl group as B_n
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      if (n >= 2) bond(n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 3 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 3, n - 2, -1, -1);
      bond(n - 3, n - 1, -1, -1);
      break;
    case 'E':
      // chain 1-3-4-5-...-n, node 2 hangs off node 4
      bond(0, 2, -1, -1);
      bond(1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case 'F':  // alpha_1, alpha_2 long
      bond(0, 1, -1, -1);
      bond(1, 2, -1, -2);
      bond(2, 3, -1, -1);
      break;
    case 'G':  // alpha_1 short
      bond(0, 1, -3, -1);
      break;
  }
  return a;
}

int bond_order(int aij, int aji) {
  switch (aij * aji) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  return -1;
}

std::vector<std::vector<int>> coxeter_of_cartan(
    const std::vector<std::vector<int>>& a) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 1;
    for (int j = 0; j < n; ++j)
      if (i != j) m[i][j] = bond_order(a[i][j], a[j][i]);
  }
  return m;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

struct TypeInfo {
  std::uint64_t order;
  int nroots;
};

TypeInfo type_info(char family, int n) {
  switch (family) {
    case 'A': return {factorial(n + 1), n * (n + 1) / 2};
    case 'B':
    case 'C': return {(std::uint64_t{1} << n) * factorial(n), n * n};
    case 'D': return {(std::uint64_t{1} << (n - 1)) * factorial(n), n * (n - 1)};
    case 'E':
      if (n == 6) return {51840, 36};
      if (n == 7) return {2903040, 63};
      return {696729600, 120};
    case 'F': return {1152, 24};
    case 'G': return {12, 6};
  }
  return {0, 0};
}

bool family_rank_ok(char family, int n) {
  switch (family) {
    case 'A': return n >= 1 && n <= 8;
    case 'B':
    case 'C': return n >= 2 && n <= 8;
    case 'D': return n >= 3 && n <= 8;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
  }
  return false;
}

//------------------------------------------------------------------------
// Per-component table construction.

struct ComponentTables {
  // local positive roots; index 0..k-1 are the simple roots
  int nroots = 0;
  std::vector<std::vector<int>> coords;             // local coords, may be empty
  std::vector<std::vector<int>> tables;             // tables[s][root] signed 1-based
};

// Enumerate the positive roots of a crystallographic Cartan matrix by
// closing the simple roots under the simple reflections, and record the
// signed action of each generator.
ComponentTables build_crystallographic(const std::vector<std::vector<int>>& a) {
  int k = static_cast<int>(a.size());
  ComponentTables t;
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < k; ++i) {
    std::vector<int> e(k, 0);
    e[i] = 1;
    index[e] = i;
    t.coords.push_back(e);
  }
  auto reflect = [&](int s, std::vector<int> c) {
    int pairing = 0;
    for (int j = 0; j < k; ++j) pairing += a[s][j] * c[j];
    c[s] -= pairing;
    return c;
  };
  // breadth-first closure; ordering is deterministic (by discovery)
  for (std::size_t i = 0; i < t.coords.size(); ++i) {
    for (int s = 0; s < k; ++s) {
      std::vector<int> c = reflect(s, t.coords[i]);
      bool positive = std::any_of(c.begin(), c.end(), [](int x) { return x > 0; });
      if (!positive) continue;
      if (index.emplace(c, static_cast<int>(t.coords.size())).second)
        t.coords.push_back(std::move(c));
    }
  }
  t.nroots = static_cast<int>(t.coords.size());
  t.tables.assign(k, std::vector<int>(t.nroots));
  for (int s = 0; s < k; ++s)
    for (int i = 0; i < t.nroots; ++i) {
      if (i == s) {
        t.tables[s][i] = -(i + 1);  // s(alpha_s) = -alpha_s
        continue;
      }
      std::vector<int> c = reflect(s, t.coords[i]);
      t.tables[s][i] = index.at(c) + 1;
    }
  return t;
}

// I2(m): m abstract positive roots on a cycle of 2m half-roots; the two
// reflections act by o -> m-o and o -> 3m-2-o (mod 2m), with o in [0,m)
// positive and o+m its negative.
ComponentTables build_dihedral(int m) {
  ComponentTables t;
  t.nroots = m;
  // local indexing: root 0 = alpha_s (o=0), root 1 = alpha_t (o=m-1),
  // roots 2..m-1 = o = 1..m-2
  std::vector<int> o_of_idx(m), idx_of_o(m);
  o_of_idx[0] = 0;
  o_of_idx[1] = m - 1;
  for (int i = 2; i < m; ++i) o_of_idx[i] = i - 1;
  for (int i = 0; i < m; ++i) idx_of_o[o_of_idx[i]] = i;
  t.tables.assign(2, std::vector<int>(m));
  auto signed_index = [&](int o) {
    o = ((o % (2 * m)) + 2 * m) % (2 * m);
    return o < m ? idx_of_o[o] + 1 : -(idx_of_o[o - m] + 1);
  };
  for (int i = 0; i < m; ++i) {
    int o = o_of_idx[i];
    t.tables[0][i] = signed_index(m - o);
    t.tables[1][i] = signed_index(3 * m - 2 - o);
  }
  t.coords.assign(m, {});  // no crystallographic coordinates
  return t;
}

//------------------------------------------------------------------------
// Classification of an explicit Coxeter matrix component against the
// finite types, by trying all node bijections (rank <= 8).

struct Classified {
  char family;             // 'A'..'G', or 'I' for dihedral fallback
  int n;                   // rank, or m for 'I'
  std::vector<int> perm;   // candidate node -> component position
};

std::string submatrix_string(const std::vector<std::vector<int>>& m,
                             const std::vector<int>& nodes) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < nodes.size(); ++j)
      os << (j ? "," : "") << m[nodes[i]][nodes[j]];
    os << "]";
  }
  os << "]";
  return os.str();
}

bool matches(const std::vector<std::vector<int>>& want,
             const std::vector<std::vector<int>>& have,
             std::vector<int>& perm_out) {
  int k = static_cast<int>(want.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j)
        if (want[i][j] != have[perm[i]][perm[j]]) ok = false;
    if (ok) {
      perm_out = perm;
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Classified classify_component(const std::vector<std::vector<int>>& m,
                              const std::vector<int>& nodes) {
  int k = static_cast<int>(nodes.size());
  std::vector<std::vector<int>> sub(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub[i][j] = m[nodes[i]][nodes[j]];

  if (k == 1) return {'A', 1, {0}};
  if (k == 2) {
    int b = sub[0][1];
    if (b == 3) return {'A', 2, {0, 1}};
    if (b == 4) return {'B', 2, {0, 1}};
    if (b == 6) return {'G', 2, {0, 1}};
    if (b >= 5) return {'I', b, {0, 1}};  // I2(5), I2(7), ...
    throw std::invalid_argument("infinite Coxeter type: sub-matrix " +
                                submatrix_string(m, nodes));
  }
  if (k > 8)
    throw std::invalid_argument("rank > 8 component unsupported: sub-matrix " +
                                submatrix_string(m, nodes));

  // H3/H4 get a dedicated message: finite but non-crystallographic of
  // rank >= 3, which this engine does not model.
  for (char fam : {'A', 'B', 'D', 'E', 'F', 'G'}) {
    if (!family_rank_ok(fam, k)) continue;
    auto want = coxeter_of_cartan(cartan_matrix(fam, k));
    std::vector<int> perm;
    if (matches(want, sub, perm)) return {fam, k, perm};
  }
  if (k == 3 || k == 4) {
    std::vector<std::vector<int>> h(k, std::vector<int>(k, 2));
    for (int i = 0; i < k; ++i) h[i][i] = 1;
    h[0][1] = h[1][0] = 5;
    for (int i = 1; i + 1 < k; ++i) h[i][i + 1] = h[i + 1][i] = 3;
    std::vector<int> perm;
    if (matches(h, sub, perm))
      throw std::invalid_argument(
          "H" + std::to_string(k) +
          " is finite but non-crystallographic of rank >= 3; unsupported: "
          "sub-matrix " +
          submatrix_string(m, nodes));
  }
  throw std::invalid_argument("infinite or unknown Coxeter type: sub-matrix " +
                              submatrix_string(m, nodes));
}

//------------------------------------------------------------------------
// Assembly.

std::shared_ptr<const CoxData> assemble(
    const std::vector<std::vector<int>>& cox,
    const std::vector<Classified>& comps,
    const std::vector<std::vector<int>>& comp_nodes) {
  auto d = std::make_shared<CoxData>();
  d->rank = static_cast<int>(cox.size());
  d->cox_m = cox;
  d->cartan.assign(d->rank, std::vector<int>(d->rank, 0));
  for (int i = 0; i < d->rank; ++i) d->cartan[i][i] = 2;
  d->nroots = d->rank;
  d->root_coords.assign(d->rank, {});
  d->gen_tables.assign(d->rank, {});

  // simple roots of crystallographic components carry full-rank coordinate
  // vectors (nonzero only inside the component)
  std::string name;
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const Classified& c = comps[ci];
    // global nodes in candidate order: candidate node i sits at
    // comp_nodes[ci][c.perm[i]]
    std::vector<int> nodes(comp_nodes[ci].size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
      nodes[i] = comp_nodes[ci][c.perm[i]];

    Component comp;
    comp.nodes = nodes;
    ComponentTables tabs;
    if (c.family == 'I') {
      comp.kind = Component::Kind::Dihedral;
      comp.m = c.n;
      comp.label = "I2(" + std::to_string(c.n) + ")";
      tabs = build_dihedral(c.n);
      d->order *= 2 * static_cast<std::uint64_t>(c.n);
      d->crystallographic = false;
    } else {
      comp.kind = Component::Kind::Crystallographic;
      comp.label = std::string(1, c.family) + std::to_string(c.n);
      auto cart = cartan_matrix(c.family, c.n);
      for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j)
          d->cartan[nodes[i]][nodes[j]] = cart[i][j];
      tabs = build_crystallographic(cart);
      TypeInfo info = type_info(c.family, c.n);
      d->order *= info.order;
      if (tabs.nroots != info.nroots)
        throw DefectError("root enumeration of " + comp.label +
                          " found " + std::to_string(tabs.nroots) +
                          " positive roots, expected " +
                          std::to_string(info.nroots));
    }
    name += (name.empty() ? "" : "x") + comp.label;

    // map local root index -> global root index
    int k = static_cast<int>(nodes.size());
    std::vector<int> global(tabs.nroots);
    for (int i = 0; i < k; ++i) global[i] = nodes[i];
    for (int i = k; i < tabs.nroots; ++i) {
      global[i] = d->nroots++;
      d->root_coords.emplace_back();
    }
    for (int i = 0; i < tabs.nroots; ++i) {
      if (tabs.coords[i].empty()) continue;
      std::vector<int> full(d->rank, 0);
      for (int j = 0; j < k; ++j) full[nodes[j]] = tabs.coords[i][j];
      d->root_coords[global[i]] = std::move(full);
    }
    for (int s = 0; s < k; ++s) {
      auto& table = d->gen_tables[nodes[s]];
      table.resize(d->nroots);
      for (int i = 0; i < tabs.nroots; ++i) {
        int v = tabs.tables[s][i];
        int g = global[std::abs(v) - 1] + 1;
        table[global[i]] = static_cast<std::int16_t>(v > 0 ? g : -g);
      }
    }
    d->components.push_back(std::move(comp));
  }

  // pad generator tables to the final root count; a generator fixes every
  // root of the other components
  for (int s = 0; s < d->rank; ++s) {
    auto& table = d->gen_tables[s];
    table.resize(d->nroots);
    for (int i = 0; i < d->nroots; ++i)
      if (table[i] == 0) table[i] = static_cast<std::int16_t>(i + 1);
  }

  if (d->nroots > 30000)
    throw std::invalid_argument("total number of positive roots too large");
  d->type_name = name.empty() ? "rank0" : name;
  return d;
}

//------------------------------------------------------------------------
// Spec-string parsing.

void skip_spaces(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int parse_int(const std::string& s, std::size_t& i) {
  skip_spaces(s, i);
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw ParseError("expected an integer", start);
  return std::stoi(s.substr(start, i - start));
}

std::vector<std::vector<int>> parse_matrix_literal(const std::string& s,
                                                   std::size_t& i) {
  std::vector<std::vector<int>> rows;
  skip_spaces(s, i);
  if (i >= s.size() || s[i] != '[') throw ParseError("expected '['", i);
  ++i;
  skip_spaces(s, i);
  if (i < s.size() && s[i] == ']') {  // "matrix:[]" = rank 0
    ++i;
    return rows;
  }
  while (true) {
    skip_spaces(s, i);
    if (i >= s.size() || s[i] != '[') throw ParseError("expected '['", i);
    ++i;
    std::vector<int> row;
    while (true) {
      row.push_back(parse_int(s, i));
      skip_spaces(s, i);
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    if (i >= s.size() || s[i] != ']') throw ParseError("expected ']'", i);
    ++i;
    rows.push_back(std::move(row));
    skip_spaces(s, i);
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  if (i >= s.size() || s[i] != ']') throw ParseError("expected ']'", i);
  ++i;
  return rows;
}

std::shared_ptr<const CoxData> build_from_matrix(
    const std::vector<std::vector<int>>& rows) {
  int r = static_cast<int>(rows.size());
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != r)
      throw std::invalid_argument("Coxeter matrix is not square");
  for (int i = 0; i < r; ++i) {
    if (rows[i][i] != 1)
      throw std::invalid_argument("Coxeter matrix diagonal must be 1");
    for (int j = i + 1; j < r; ++j) {
      if (rows[i][j] != rows[j][i])
        throw std::invalid_argument("Coxeter matrix must be symmetric");
      if (rows[i][j] < 2)
        throw std::invalid_argument("off-diagonal entries must be >= 2");
    }
  }
  if (r > 30) throw std::invalid_argument("total rank capped at 30");

  // connected components under bonds m >= 3
  std::vector<int> comp_of(r, -1);
  std::vector<std::vector<int>> comp_nodes;
  for (int i = 0; i < r; ++i) {
    if (comp_of[i] >= 0) continue;
    int id = static_cast<int>(comp_nodes.size());
    comp_nodes.emplace_back();
    std::vector<int> stack{i};
    comp_of[i] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp_nodes[id].push_back(v);
      for (int u = 0; u < r; ++u)
        if (comp_of[u] < 0 && rows[v][u] >= 3) {
          comp_of[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(comp_nodes[id].begin(), comp_nodes[id].end());
  }

  std::vector<Classified> comps;
  comps.reserve(comp_nodes.size());
  for (const auto& nodes : comp_nodes)
    comps.push_back(classify_component(rows, nodes));
  return assemble(rows, comps, comp_nodes);
}

}  // namespace

//------------------------------------------------------------------------
// CoxeterSystem

CoxeterSystem CoxeterSystem::parse(const std::string& spec) {
  std::size_t i = 0;
  skip_spaces(spec, i);
  if (spec.compare(i, 7, "matrix:") == 0) {
    i += 7;
    auto rows = parse_matrix_literal(spec, i);
    skip_spaces(spec, i);
    if (i != spec.size()) throw ParseError("trailing input after matrix", i);
    return CoxeterSystem(build_from_matrix(rows));
  }

  // component list "A3xB2x..." / "I2(7)"
  struct Part {
    char family;
    int n;
  };
  std::vector<Part> parts;
  while (true) {
    skip_spaces(spec, i);
    if (i >= spec.size()) throw ParseError("expected a type letter", i);
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[i])));
    std::size_t fam_pos = i;
    ++i;
    if (fam == 'I') {
      if (spec.compare(i, 2, "2(") != 0)
        throw ParseError("dihedral type must be written I2(m)", i);
      i += 2;
      int m = parse_int(spec, i);
      if (i >= spec.size() || spec[i] != ')') throw ParseError("expected ')'", i);
      ++i;
      if (m < 2 || m > 1000)
        throw std::invalid_argument("I2(m) requires 2 <= m <= 1000");
      // crystallographic bonds route through their standard tags
      if (m == 2)
        parts.insert(parts.end(), {{'A', 1}, {'A', 1}});
      else if (m == 3)
        parts.push_back({'A', 2});
      else if (m == 4)
        parts.push_back({'B', 2});
      else if (m == 6)
        parts.push_back({'G', 2});
      else
        parts.push_back({'I', m});
    } else {
      if (std::string("ABCDEFG").find(fam) == std::string::npos)
        throw ParseError(std::string("unknown type letter '") + fam + "'", fam_pos);
      int n = parse_int(spec, i);
      if (!family_rank_ok(fam, n))
        throw std::invalid_argument(std::string(1, fam) + std::to_string(n) +
                                    " is not a supported finite type "
                                    "(rank capped at 8 per component)");
      parts.push_back({fam, n});
    }
    skip_spaces(spec, i);
    if (i < spec.size() && (spec[i] == 'x' || spec[i] == 'X')) {
      ++i;
      continue;
    }
    break;
  }
  if (i != spec.size()) throw ParseError("trailing input after type list", i);

  // build the block-diagonal Coxeter matrix, then reuse the matrix path
  // (skipping reclassification: components are already known)
  int r = 0;
  for (const Part& p : parts) r += (p.family == 'I') ? 2 : p.n;
  if (r > 30) throw std::invalid_argument("total rank capped at 30");
  std::vector<std::vector<int>> cox(r, std::vector<int>(r, 2));
  for (int a = 0; a < r; ++a) cox[a][a] = 1;
  std::vector<Classified> comps;
  std::vector<std::vector<int>> comp_nodes;
  int base = 0;
  for (const Part& p : parts) {
    int k = (p.family == 'I') ? 2 : p.n;
    std::vector<int> nodes(k);
    std::iota(nodes.begin(), nodes.end(), base);
    std::vector<std::vector<int>> local =
        (p.family == 'I')
            ? std::vector<std::vector<int>>{{1, p.n}, {p.n, 1}}
            : coxeter_of_cartan(cartan_matrix(p.family, p.n));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) cox[base + a][base + b] = local[a][b];
    std::vector<int> id_perm(k);
    std::iota(id_perm.begin(), id_perm.end(), 0);
    comps.push_back({p.family, p.n, id_perm});
    comp_nodes.push_back(std::move(nodes));
    base += k;
  }
  return CoxeterSystem(assemble(cox, comps, comp_nodes));
}

int CoxeterSystem::rank() const { return d_->rank; }

int CoxeterSystem::coxeter_m(int s, int t) const {
  return d_->cox_m[s - 1][t - 1];
}

const std::string& CoxeterSystem::type_name() const { return d_->type_name; }

std::uint64_t CoxeterSystem::order() const { return d_->order; }

int CoxeterSystem::num_positive_roots() const { return d_->nroots; }

bool CoxeterSystem::crystallographic() const { return d_->crystallographic; }

const std::vector<int>& CoxeterSystem::positive_root(int i) const {
  return d_->root_coords[i];
}

GroupElement CoxeterSystem::identity() const {
  std::vector<std::int16_t> img(d_->nroots);
  for (int i = 0; i < d_->nroots; ++i) img[i] = static_cast<std::int16_t>(i + 1);
  return GroupElement(d_, std::move(img));
}

GroupElement CoxeterSystem::generator(int s) const {
  if (s < 1 || s > d_->rank)
    throw std::invalid_argument("generator label out of range: " +
                                std::to_string(s));
  return GroupElement(d_, d_->gen_tables[s - 1]);
}

GroupElement CoxeterSystem::from_word(std::span<const int> word) const {
  GroupElement w = identity();
  for (int s : word) w = w.mul_gen_right(s);
  return w;
}

GroupElement CoxeterSystem::from_word(const Word& word) const {
  return from_word(std::span<const int>(word));
}

GroupElement CoxeterSystem::longest_element(GenSet I) const {
  // ascend greedily inside W_I; terminates at w0(I), the unique maximum
  GroupElement w = identity();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s = 1; s <= d_->rank; ++s) {
      if (!I.contains(s)) continue;
      if (!w.right_descent(s)) {
        w = w.mul_gen_right(s);
        moved = true;
      }
    }
  }
  return w;
}

GroupElement CoxeterSystem::longest_element() const {
  return longest_element(GenSet::full(d_->rank));
}

bool CoxeterSystem::same_group(const CoxeterSystem& o) const {
  return d_ == o.d_;
}

//------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(std::shared_ptr<const detail::CoxData> d,
                           std::vector<std::int16_t> img)
    : d_(std::move(d)), img_(std::move(img)) {
  len_ = static_cast<int>(
      std::count_if(img_.begin(), img_.end(), [](std::int16_t v) { return v < 0; }));
}

void GroupElement::require_same_group(const GroupElement& o) const {
  if (d_ != o.d_)
    throw std::invalid_argument("operands belong to different Coxeter systems");
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  require_same_group(o);
  std::vector<std::int16_t> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    std::int16_t v = o.img_[i];  // (uv)(rho) = u(v(rho))
    std::int16_t u = img_[std::abs(v) - 1];
    img[i] = v > 0 ? u : static_cast<std::int16_t>(-u);
  }
  return GroupElement(d_, std::move(img));
}

GroupElement GroupElement::inverse() const {
  std::vector<std::int16_t> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    std::int16_t v = img_[i];
    if (v > 0)
      img[v - 1] = static_cast<std::int16_t>(i + 1);
    else
      img[-v - 1] = static_cast<std::int16_t>(-(i + 1));
  }
  return GroupElement(d_, std::move(img));
}

GroupElement GroupElement::mul_gen_right(int s) const {
  // (w s)(rho) = w(s(rho))
  const auto& t = d_->gen_tables[s - 1];
  std::vector<std::int16_t> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    std::int16_t v = t[i];
    std::int16_t u = img_[std::abs(v) - 1];
    img[i] = v > 0 ? u : static_cast<std::int16_t>(-u);
  }
  return GroupElement(d_, std::move(img));
}

GroupElement GroupElement::mul_gen_left(int s) const {
  const auto& t = d_->gen_tables[s - 1];
  std::vector<std::int16_t> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    std::int16_t v = img_[i];
    std::int16_t u = t[std::abs(v) - 1];
    img[i] = v > 0 ? u : static_cast<std::int16_t>(-u);
  }
  return GroupElement(d_, std::move(img));
}

bool GroupElement::right_descent(int s) const {
  // ell(ws) < ell(w)  iff  w(alpha_s) < 0
  return img_[s - 1] < 0;
}

bool GroupElement::left_descent(int s) const {
  // ell(sw) < ell(w)  iff  w^{-1}(alpha_s) < 0, i.e. alpha_s occurs
  // negatively among the images
  std::int16_t target = static_cast<std::int16_t>(-s);
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] == target) return true;
  // alpha_s may also appear as a positive image of a negative root; the
  // direct test is whether some positive root maps to -alpha_s
  return false;
}

int GroupElement::first_right_descent() const {
  for (int s = 1; s <= d_->rank; ++s)
    if (img_[s - 1] < 0) return s;
  return 0;
}

int GroupElement::first_left_descent() const {
  if (len_ == 0) return 0;
  std::int16_t best = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    std::int16_t v = img_[i];
    if (v < 0 && -v <= d_->rank && (best == 0 || -v < best)) best = static_cast<std::int16_t>(-v);
  }
  return best;
}

Word GroupElement::reduced_word() const {
  // strip the smallest-label left descent of w, i.e. the smallest-label
  // right descent of w^{-1}, updating both views by one generator at a time
  Word word;
  word.reserve(len_);
  GroupElement v = *this;
  GroupElement u = inverse();
  while (v.len_ > 0) {
    int s = u.first_right_descent();
    word.push_back(s);
    v = v.mul_gen_left(s);
    u = u.mul_gen_right(s);
  }
  return word;
}

GenSet GroupElement::support() const {
  GenSet sup;
  for (int s : reduced_word()) sup.add(s);
  return sup;
}

bool GroupElement::operator==(const GroupElement& o) const {
  return d_ == o.d_ && img_ == o.img_;
}

std::size_t GroupElement::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::int16_t v : img_) {
    h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(v));
    h *= 1099511628211ull;
  }
  return h;
}

//------------------------------------------------------------------------
// Bruhat order

bool bruhat_leq(const GroupElement& u, const GroupElement& v) {
  if (u.data() != v.data())
    throw std::invalid_argument("operands belong to different Coxeter systems");
  GroupElement a = u, b = v;
  // lifting property: for s a left descent of v,
  //   u <= v  iff  min(u, su) <= sv
  while (b.length() > 0) {
    if (a.length() > b.length()) return false;
    if (a.length() == 0) return true;
    int s = b.first_left_descent();
    GroupElement sa = a.mul_gen_left(s);
    if (sa.length() < a.length()) a = std::move(sa);
    b = b.mul_gen_left(s);
  }
  return a.length() == 0;
}

bool element_order_less(const GroupElement& a, const GroupElement& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.reduced_word() < b.reduced_word();
}

}  // namespace dlv
