#include "veronese/bracket.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace veronese {

namespace {

std::size_t rank_of(const std::vector<int>& members, int n) {
  const int k = static_cast<int>(members.size());
  std::size_t r = 0;
  int prev = 0;
  for (int j = 0; j < k; ++j) {
    for (int v = prev + 1; v < members[j]; ++v) r += static_cast<std::size_t>(binomial(n - v, k - j - 1));
    prev = members[j];
  }
  return r;
}

// Sorts `v` in place and returns the sign of the sorting permutation; 0 on a repeat.
int sort_with_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1]) return 0;
  return sign;
}

}  // namespace

BracketPolynomial::BracketPolynomial(int ground, int width, std::vector<BracketTerm> terms)
    : ground_(ground), width_(width), terms_(std::move(terms)) {
  if (width < 0 || width > ground) throw ShapeError("bracket width must lie in [0, ground]");
  for (const auto& t : terms_) {
    for (const auto& f : t.factors) {
      if (static_cast<int>(f.size()) != width_) throw ShapeError("bracket factor " + f.to_string() + " has wrong width");
      if (f.ground() != ground_) throw ShapeError("bracket factor " + f.to_string() + " on wrong ground set");
    }
  }
  canonicalize();
}

void BracketPolynomial::canonicalize() {
  for (auto& t : terms_) std::sort(t.factors.begin(), t.factors.end());
  std::map<std::vector<IndexSet>, long long> merged;
  for (auto& t : terms_) merged[t.factors] += t.coefficient;
  terms_.clear();
  for (auto& [factors, coeff] : merged) {
    if (coeff != 0) terms_.push_back({coeff, factors});
  }
}

std::string BracketPolynomial::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i) out += ' ';
    out += t.coefficient < 0 ? '-' : '+';
    const long long mag = t.coefficient < 0 ? -t.coefficient : t.coefficient;
    if (mag != 1) out += std::to_string(mag);
    for (const auto& f : t.factors) {
      out += '|';
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (j) out += ' ';
        out += std::to_string(f[j]);
      }
      out += '|';
    }
  }
  return out.empty() ? "0" : out;
}

BracketPolynomial parse_bracket_text(std::string_view text, int ground) {
  std::vector<BracketTerm> terms;
  int width = -1;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw Error("bracket text, offset " + std::to_string(pos) + ": " + what);
  };
  skip_ws();
  if (text.substr(pos) == "0") return BracketPolynomial(ground, 0);
  while (pos < text.size()) {
    long long sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!terms.empty()) {
      fail("expected '+' or '-' between terms");
    }
    long long mult = 0;
    bool has_mult = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      mult = mult * 10 + (text[pos++] - '0');
      has_mult = true;
    }
    BracketTerm term{sign * (has_mult ? mult : 1), {}};
    skip_ws();
    while (pos < text.size() && text[pos] == '|') {
      ++pos;
      const std::size_t close = text.find('|', pos);
      if (close == std::string_view::npos) fail("unterminated bracket");
      const std::string_view body = text.substr(pos, close - pos);
      std::vector<int> idx;
      const bool spaced = body.find_first_of(" \t,") != std::string_view::npos;
      if (spaced) {
        int cur = -1;
        for (char ch : body) {
          if (std::isdigit(static_cast<unsigned char>(ch))) {
            cur = (cur < 0 ? 0 : cur * 10) + (ch - '0');
          } else if (ch == ' ' || ch == '\t' || ch == ',') {
            if (cur >= 0) idx.push_back(cur);
            cur = -1;
          } else {
            fail(std::string("unexpected character '") + ch + "' in bracket");
          }
        }
        if (cur >= 0) idx.push_back(cur);
      } else {
        for (char ch : body) {
          if (!std::isdigit(static_cast<unsigned char>(ch))) fail(std::string("unexpected character '") + ch + "'");
          idx.push_back(ch - '0');
        }
      }
      const int s = sort_with_sign(idx);
      if (s == 0) fail("repeated index in bracket");
      term.coefficient *= s;
      if (width < 0) width = static_cast<int>(idx.size());
      if (static_cast<int>(idx.size()) != width) fail("brackets of different widths");
      term.factors.emplace_back(ground, std::move(idx));
      pos = close + 1;
    }
    if (term.factors.empty()) fail("term without brackets");
    terms.push_back(std::move(term));
    skip_ws();
  }
  return BracketPolynomial(ground, std::max(width, 0), std::move(terms));
}

BracketPolynomial relabel(const BracketPolynomial& p, const std::vector<int>& image, int new_ground) {
  if (static_cast<int>(image.size()) != p.ground()) {
    throw ShapeError("relabel map has " + std::to_string(image.size()) + " entries, ground is " +
                     std::to_string(p.ground()));
  }
  std::vector<int> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ShapeError("relabel map not injective");
  if (!sorted.empty() && (sorted.front() < 1 || sorted.back() > new_ground)) throw ShapeError("relabel image outside new ground");

  std::vector<BracketTerm> terms;
  for (const auto& t : p.terms()) {
    BracketTerm nt{t.coefficient, {}};
    for (const auto& f : t.factors) {
      std::vector<int> m;
      for (int k : f) m.push_back(image[static_cast<std::size_t>(k - 1)]);
      nt.coefficient *= sort_with_sign(m);
      nt.factors.emplace_back(new_ground, std::move(m));
    }
    terms.push_back(std::move(nt));
  }
  return BracketPolynomial(new_ground, p.width(), std::move(terms));
}

BracketPolynomial relabel(const BracketPolynomial& p, const IndexSet& along) {
  return relabel(p, along.members(), along.ground());
}

BracketPolynomial dualize(const BracketPolynomial& p) {
  const long long shift = p.ground() - p.width();
  std::vector<BracketTerm> terms;
  for (const auto& t : p.terms()) {
    BracketTerm nt{t.coefficient, {}};
    for (const auto& f : t.factors) {
      if ((s_index(f) + shift) % 2 != 0) nt.coefficient = -nt.coefficient;
      nt.factors.push_back(f.complement());
    }
    terms.push_back(std::move(nt));
  }
  return BracketPolynomial(p.ground(), p.ground() - p.width(), std::move(terms));
}

MinorTable::MinorTable(const MatrixK& coords)
    : coords_(coords), cache_(static_cast<std::size_t>(binomial(static_cast<int>(coords.cols()), static_cast<int>(coords.rows())))) {}

const Scalar& MinorTable::get(const std::vector<int>& cols) const {
  if (cols.size() != coords_.rows()) throw ShapeError("maximal minor needs exactly d+1 columns");
  auto& slot = cache_.at(rank_of(cols, static_cast<int>(coords_.cols())));
  if (!slot) {
    std::vector<std::size_t> zb(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) zb[i] = static_cast<std::size_t>(cols[i] - 1);
    slot = det(coords_.select_columns(zb));
  }
  return *slot;
}

const Scalar& MinorTable::get(const IndexSet& cols) const {
  if (cols.ground() != static_cast<int>(coords_.cols())) throw ShapeError("minor index set on wrong ground");
  return get(cols.members());
}

Scalar eval_bracket_poly(const BracketPolynomial& p, const MinorTable& minors, const IndexSet* along) {
  const Field& f = minors.coords().field();
  const int n = along ? static_cast<int>(along->size()) : static_cast<int>(minors.coords().cols());
  if (p.ground() != n) throw ShapeError("bracket polynomial ground does not match the configuration");
  if (p.width() != static_cast<int>(minors.coords().rows())) throw ShapeError("bracket width must equal d+1");
  Scalar total = f.zero();
  std::vector<int> global(static_cast<std::size_t>(p.width()));
  for (const auto& t : p.terms()) {
    Scalar prod = f.from_int(t.coefficient);
    for (const auto& factor : t.factors) {
      for (std::size_t j = 0; j < factor.size(); ++j) global[j] = along ? (*along)[static_cast<std::size_t>(factor[j] - 1)] : factor[j];
      prod *= minors.get(global);
      if (prod.is_zero()) break;
    }
    total += prod;
  }
  return total;
}

Scalar eval_bracket_poly(const BracketPolynomial& p, const PointConfiguration& config) {
  if (p.width() != config.d() + 1) throw ShapeError("bracket width must equal d+1");
  if (p.ground() != config.n()) throw ShapeError("bracket ground must equal n");
  return eval_bracket_poly(p, MinorTable(config.coords()));
}

}  // namespace veronese
