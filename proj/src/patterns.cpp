// Copyright 2026 The gtc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gtc/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "gtc/error.hpp"
#include "json_util.hpp"

namespace gtc {

namespace {

using Rel = LinearClause::Rel;

int mod(std::int64_t a, int n) {
  const auto r = static_cast<int>(a % n);
  return r < 0 ? r + n : r;
}

// n == a_k * k + c
LinearClause n_is(int a_k, int c) { return {1, -a_k, -c, Rel::Eq}; }
// 3n == a_k * k
LinearClause three_n_is(int a_k) { return {3, -a_k, 0, Rel::Eq}; }
LinearClause k_is(int c) { return {0, 1, -c, Rel::Eq}; }
LinearClause k_not(int c) { return {0, 1, -c, Rel::Ne}; }
LinearClause n_not(int c) { return {1, 0, -c, Rel::Ne}; }
LinearClause n_at_least(int c) { return {1, 0, -c, Rel::Ge}; }
LinearClause k_at_least(int c) { return {0, 1, -c, Rel::Ge}; }

Condition all_of(std::string text, std::vector<LinearClause> clauses) {
  return Condition(std::move(text), {std::move(clauses)});
}

CycleProfile prof(int ov, int mv, int iv, int oe, int s1e, int me, int s2e,
                  int ie) {
  return {ov, mv, iv, oe, s1e, me, s2e, ie};
}

std::vector<PatternSpec> build_catalog() {
  std::vector<PatternSpec> out;
  const Condition not_k2 = all_of("k≠2", {k_not(2)});
  const Condition k2 = all_of("k=2", {k_is(2)});
  auto t1 = [&](std::string label, Condition cond, std::string_view tmpl,
                DeclaredCount count, CycleProfile p) {
    out.push_back(make_pattern({PatternTable::T1, std::move(label)},
                               cond && not_k2, tmpl, count, p));
  };
  auto t3 = [&](std::string label, Condition cond, std::string_view tmpl,
                DeclaredCount count, CycleProfile p) {
    out.push_back(make_pattern({PatternTable::T3, std::move(label)},
                               cond && k2, tmpl, count, p));
  };
  auto pf = [&](std::string label, Condition cond, std::string_view tmpl,
                DeclaredCount count, CycleProfile p) {
    out.push_back(make_pattern({PatternTable::ProofFamily, std::move(label)},
                               std::move(cond), tmpl, count, p));
  };
  using DC = DeclaredCount;

  // 8-cycles, k != 2. "-" variants are the mirror images (every index
  // negated) of the matching "+" variants.
  t1("1", all_of("k=1", {k_is(1)}),
     "a:i a:i+1 a:i+2 b:i+2 c:i+2 c:i+1 c:i b:i", DC::N,
     prof(3, 2, 3, 2, 2, 0, 2, 2));
  t1("2",
     Condition("k=3 or n-k=3", {{k_is(3)}, {{1, -1, -3, Rel::Eq}}}),
     "a:i a:i+1 a:i+2 a:i+3 b:i+3 c:i+3 c:i b:i", DC::N,
     prof(4, 2, 2, 3, 2, 0, 2, 1));
  t1("3", all_of("n=3k+1", {n_is(3, 1)}),
     "a:i a:i+1 b:i+1 c:i+1 c:i+1+k c:i+1+2k c:i b:i", DC::N,
     prof(2, 2, 4, 1, 2, 0, 2, 3));
  t1("3'", all_of("n=3k-1", {n_is(3, -1)}),
     "a:i+1 a:i b:i c:i c:i+k c:i+2k c:i+1 b:i+1", DC::N,
     prof(2, 2, 4, 1, 2, 0, 2, 3));
  t1("4", all_of("n=2k+2", {n_is(2, 2)}),
     "a:i a:i+1 a:i+2 b:i+2 c:i+2 c:i+2+k c:i b:i", DC::N,
     prof(3, 2, 3, 2, 2, 0, 2, 2));
  t1("5", all_of("n=8", {n_is(0, 8)}),
     "a:i a:i+1 a:i+2 a:i+3 a:i+4 a:i+5 a:i+6 a:i+7", DC::One,
     prof(8, 0, 0, 8, 0, 0, 0, 0));
  t1("6", all_of("n=8k", {n_is(8, 0)}),
     "c:i c:i+k c:i+2k c:i+3k c:i+4k c:i+5k c:i+6k c:i+7k", DC::K,
     prof(0, 0, 8, 0, 0, 0, 0, 8));
  t1("6'", all_of("3n=8k", {three_n_is(8)}),
     "c:i c:i+k c:i+2k c:i+3k c:i+4k c:i+5k c:i+6k c:i+7k", DC::NOver8,
     prof(0, 0, 8, 0, 0, 0, 0, 8));
  t1("7", all_of("n=10", {n_is(0, 10)}),
     "a:i a:i+1 a:i+2 a:i+3 a:i+4 a:i+5 b:i+5 b:i", DC::N,
     prof(6, 2, 0, 5, 2, 1, 0, 0));
  t1("8", all_of("n=10k", {n_is(10, 0)}),
     "b:i c:i c:i+k c:i+2k c:i+3k c:i+4k c:i+5k b:i+h", DC::N,
     prof(0, 2, 6, 0, 0, 1, 2, 5));
  t1("8'", all_of("3n=10k", {three_n_is(10)}),
     "b:i c:i c:i+k c:i+2k c:i+3k c:i+4k c:i+5k b:i+h", DC::N,
     prof(0, 2, 6, 0, 0, 1, 2, 5));
  t1("9+", all_of("n=2k+4", {n_is(2, 4)}),
     "a:i a:i+1 a:i+2 b:i+2 c:i+2 c:i+2+k b:i+h b:i", DC::N,
     prof(3, 3, 2, 2, 2, 1, 2, 1));
  t1("9-", all_of("n=2k+4", {n_is(2, 4)}),
     "a:-i a:-i-1 a:-i-2 b:-i-2 c:-i-2 c:-i-2-k b:-i-h b:-i", DC::N,
     prof(3, 3, 2, 2, 2, 1, 2, 1));
  t1("10+", all_of("n=4k+2", {n_is(4, 2)}),
     "a:i a:i+1 b:i+1 c:i+1 c:i+1+k c:i+1+2k b:i+h b:i", DC::N,
     prof(2, 3, 3, 1, 2, 1, 2, 2));
  t1("10-", all_of("n=4k+2", {n_is(4, 2)}),
     "a:-i a:-i-1 b:-i-1 c:-i-1 c:-i-1-k c:-i-1-2k b:-i-h b:-i", DC::N,
     prof(2, 3, 3, 1, 2, 1, 2, 2));
  t1("10'+", all_of("n=4k-2", {n_is(4, -2)}),
     "a:i a:i+1 b:i+1 c:i+1 c:i+1-k c:i+1-2k b:i+h b:i", DC::N,
     prof(2, 3, 3, 1, 2, 1, 2, 2));
  t1("10'-", all_of("n=4k-2", {n_is(4, -2)}),
     "a:-i a:-i-1 b:-i-1 c:-i-1 c:-i-1+k c:-i-1+2k b:-i-h b:-i", DC::N,
     prof(2, 3, 3, 1, 2, 1, 2, 2));
  t1("11", all_of("n≥4", {n_at_least(4)}),
     "a:i a:i+1 b:i+1 b:i+1+h a:i+1+h a:i+h b:i+h b:i", DC::HalfN,
     prof(4, 4, 0, 2, 4, 2, 0, 0));
  t1("12", all_of("n≥4", {n_at_least(4)}),
     "b:i c:i c:i+k b:i+k b:i+k+h c:i+k+h c:i+h b:i+h", DC::HalfN,
     prof(0, 4, 4, 0, 0, 2, 4, 2));

  // 7-cycles, k = 2.
  t3("1",
     Condition("n=6,8,14 or 16",
               {{n_is(0, 6)}, {n_is(0, 8)}, {n_is(0, 14)}, {n_is(0, 16)}}),
     "a:i a:i+1 a:i+2 b:i+2 c:i+2 c:i b:i", DC::N,
     prof(3, 2, 2, 2, 2, 0, 2, 1));
  t3("2", all_of("n=6", {n_is(0, 6)}), "a:i a:i+1 b:i+1 c:i+1 c:i+3 b:i+3 b:i",
     DC::N, prof(2, 3, 2, 1, 2, 1, 2, 1));
  t3("2'", all_of("n=6", {n_is(0, 6)}),
     "a:-i a:-i-1 b:-i-1 c:-i-1 c:-i-3 b:-i-3 b:-i", DC::N,
     prof(2, 3, 2, 1, 2, 1, 2, 1));
  t3("3", all_of("n=8", {n_is(0, 8)}), "a:i a:i+1 a:i+2 a:i+3 a:i+4 b:i+4 b:i",
     DC::N, prof(5, 2, 0, 4, 2, 1, 0, 0));
  t3("4", all_of("n=14", {n_is(0, 14)}),
     "c:i c:i+2 c:i+4 c:i+6 c:i+8 c:i+10 c:i+12", DC::NOver7,
     prof(0, 0, 7, 0, 0, 0, 0, 7));
  t3("5", all_of("n=14", {n_is(0, 14)}),
     "c:i+1 c:i+3 c:i+5 c:i+7 c:i+9 c:i+11 c:i+13", DC::NOver7,
     prof(0, 0, 7, 0, 0, 0, 0, 7));
  t3("6", all_of("n=16", {n_is(0, 16)}),
     "b:i c:i c:i+2 c:i+4 c:i+6 c:i+8 b:i+8", DC::N,
     prof(0, 2, 5, 0, 0, 1, 2, 4));

  // Families named only in the transitivity arguments.
  pf("K1-six-cycle", all_of("k=1", {k_is(1)}), "a:i a:i+1 b:i+1 c:i+1 c:i b:i",
     DC::N, prof(2, 2, 2, 1, 2, 0, 2, 1));
  pf("K1-seven-a", all_of("k=1; n=8", {k_is(1), n_is(0, 8)}),
     "a:i a:i+1 a:i+2 a:i+3 a:i+4 b:i+h b:i", DC::N,
     prof(5, 2, 0, 4, 2, 1, 0, 0));
  pf("K1-seven-c", all_of("k=1; n=8", {k_is(1), n_is(0, 8)}),
     "c:i c:i+1 c:i+2 c:i+3 c:i+4 b:i+h b:i", DC::N,
     prof(0, 2, 5, 0, 0, 1, 2, 4));
  pf("K2-seven-generic",
     all_of("k=2; n≠6,8,14,16",
            {k_is(2), n_not(6), n_not(8), n_not(14), n_not(16)}),
     "a:i a:i+1 a:i+2 b:i+2 c:i+2 c:i b:i", DC::N,
     prof(3, 2, 2, 2, 2, 0, 2, 1));
  return out;
}

std::vector<AggregateRow> build_aggregate_rows() {
  const Condition k_ge3 = all_of("k≠1,2", {k_at_least(3)});
  std::vector<AggregateRow> out;
  auto row = [&](std::string id, Condition cond, std::vector<std::string> types,
                 std::array<int, 8> per_n) {
    out.push_back({std::move(id), cond && k_ge3, std::move(types), per_n});
  };
  row("n=3k+1; k≠3", all_of("n=3k+1; k≠3", {n_is(3, 1), k_not(3)}),
      {"3", "11", "12"}, {4, 6, 6, 2, 4, 2, 4, 4});
  row("n=3k-1; k≠3,5", all_of("n=3k-1; k≠3,5", {n_is(3, -1), k_not(3), k_not(5)}),
      {"3'", "11", "12"}, {4, 6, 6, 2, 4, 2, 4, 4});
  row("n=2k+2; k≠3", all_of("n=2k+2; k≠3", {n_is(2, 2), k_not(3)}),
      {"4", "11", "12"}, {5, 6, 5, 3, 4, 2, 4, 3});
  row("n=8; k=3", all_of("n=8; k=3", {n_is(0, 8), k_is(3)}),
      {"2", "3'", "4", "5", "6'", "11", "12"}, {12, 10, 12, 8, 8, 2, 8, 8});
  row("n=8k; k≠3", all_of("n=8k; k≠3", {n_is(8, 0), k_not(3)}),
      {"6", "11", "12"}, {2, 4, 3, 1, 2, 2, 2, 2});
  row("n=8k; k=3", all_of("n=8k; k=3", {n_is(8, 0), k_is(3)}),
      {"2", "6", "11", "12"}, {6, 6, 5, 4, 4, 2, 4, 3});
  row("3n=8k; k≠3,6", all_of("3n=8k; k≠3,6", {three_n_is(8), k_not(3), k_not(6)}),
      {"6'", "11", "12"}, {2, 4, 3, 1, 2, 2, 2, 2});
  row("n=10; k=4", all_of("n=10; k=4", {n_is(0, 10), k_is(4)}),
      {"4", "7", "11", "12"}, {11, 8, 5, 8, 6, 3, 4, 3});
  row("n=10k; k≠3", all_of("n=10k; k≠3", {n_is(10, 0), k_not(3)}),
      {"8", "11", "12"}, {2, 6, 8, 1, 2, 3, 4, 6});
  row("n=10k; k=3", all_of("n=10k; k=3", {n_is(10, 0), k_is(3)}),
      {"2", "8", "11", "12"}, {6, 8, 10, 4, 4, 3, 6, 7});
  row("3n=10k; k≠3", all_of("3n=10k; k≠3", {three_n_is(10), k_not(3)}),
      {"8'", "11", "12"}, {2, 6, 8, 1, 2, 3, 4, 6});
  row("n=2k+4; k≠3,5,6",
      all_of("n=2k+4; k≠3,5,6", {n_is(2, 4), k_not(3), k_not(5), k_not(6)}),
      {"9-", "9+", "11", "12"}, {8, 10, 6, 5, 6, 4, 6, 3});
  row("n=14; k=5", all_of("n=14; k=5", {n_is(0, 14), k_is(5)}),
      {"3'", "9-", "9+", "11", "12"}, {10, 12, 10, 6, 8, 4, 8, 6});
  row("n=16; k=6", all_of("n=16; k=6", {n_is(0, 16), k_is(6)}),
      {"6'", "9-", "9+", "11", "12"}, {8, 10, 7, 5, 6, 4, 6, 4});
  row("n=4k+2; k≠3", all_of("n=4k+2; k≠3", {n_is(4, 2), k_not(3)}),
      {"10-", "10+", "11", "12"}, {6, 10, 8, 3, 6, 4, 6, 5});
  row("n=4k+2; k=3", all_of("n=4k+2; k=3", {n_is(4, 2), k_is(3)}),
      {"2", "10-", "10+", "11", "12"}, {10, 12, 10, 6, 8, 4, 8, 6});
  row("n=4k-2; k≠3", all_of("n=4k-2; k≠3", {n_is(4, -2), k_not(3)}),
      {"10'-", "10'+", "11", "12"}, {6, 10, 8, 3, 6, 4, 6, 5});
  return out;
}

std::vector<std::string> walk_labels(const LabeledGraph& g,
                                     const std::vector<VertexRef>& walk) {
  std::vector<std::string> out;
  for (const VertexRef& ref : walk) out.push_back(g.label(g.id(ref)));
  return out;
}

std::vector<std::string> cycle_labels(const LabeledGraph& g, const Cycle& c) {
  std::vector<std::string> out;
  for (VertexId v : c.vertices) out.push_back(g.label(v));
  return out;
}

Instantiation instantiate_on(const PatternSpec& spec, const LabeledGraph& g) {
  Instantiation out;
  const int n = g.n();
  const int k = g.k();
  for (int i = 0; i < n; ++i) {
    std::vector<VertexRef> refs;
    std::vector<VertexId> walk;
    for (const TemplateVertex& tv : spec.vertices) {
      refs.push_back({tv.layer, tv.index.eval(i, n, k)});
      walk.push_back(g.id(refs.back()));
    }
    try {
      check_cycle(g, walk);
      out.cycles.push_back(canonical_cycle(walk));
    } catch (const ValidationError& e) {
      out.defects.push_back({i, std::move(refs), e.what()});
    }
  }
  std::sort(out.cycles.begin(), out.cycles.end());
  out.cycles.erase(std::unique(out.cycles.begin(), out.cycles.end()),
                   out.cycles.end());
  return out;
}

}  // namespace

std::string_view to_string(PatternTable table) {
  switch (table) {
    case PatternTable::T1: return "T1";
    case PatternTable::T2Derived: return "T2";
    case PatternTable::T3: return "T3";
    case PatternTable::ProofFamily: return "PF";
  }
  return "?";
}

std::string PatternId::str() const {
  return std::string(to_string(table)) + ":" + label;
}

std::optional<PatternId> PatternId::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto prefix = text.substr(0, colon);
  for (auto t : {PatternTable::T1, PatternTable::T2Derived, PatternTable::T3,
                 PatternTable::ProofFamily}) {
    if (to_string(t) == prefix) {
      return PatternId{t, std::string(text.substr(colon + 1))};
    }
  }
  return std::nullopt;
}

bool LinearClause::holds(int n, int k) const {
  const long long value = static_cast<long long>(a_n) * n +
                          static_cast<long long>(a_k) * k + constant;
  switch (rel) {
    case Rel::Eq: return value == 0;
    case Rel::Ne: return value != 0;
    case Rel::Ge: return value >= 0;
  }
  return false;
}

Condition::Condition(std::string text,
                     std::vector<std::vector<LinearClause>> any_of)
    : text_(std::move(text)), any_of_(std::move(any_of)) {}

bool Condition::holds(int n, int k) const {
  return std::any_of(any_of_.begin(), any_of_.end(), [&](const auto& conj) {
    return std::all_of(conj.begin(), conj.end(),
                       [&](const LinearClause& c) { return c.holds(n, k); });
  });
}

Condition Condition::operator&&(const Condition& other) const {
  std::vector<std::vector<LinearClause>> product;
  for (const auto& a : any_of_) {
    for (const auto& b : other.any_of_) {
      auto conj = a;
      conj.insert(conj.end(), b.begin(), b.end());
      product.push_back(std::move(conj));
    }
  }
  return Condition(text_ + "; " + other.text_, std::move(product));
}

int IndexExpr::eval(int i, int n, int k) const {
  const std::int64_t value = static_cast<std::int64_t>(sign) * i + offset +
                             static_cast<std::int64_t>(k_mult) * k +
                             static_cast<std::int64_t>(half_mult) * (n / 2);
  return mod(value, n);
}

IndexExpr IndexExpr::parse(std::string_view text) {
  auto fail = [&]() {
    return ParamError("bad index expression '" + std::string(text) + "'");
  };
  IndexExpr out;
  bool has_i = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    int term_sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      term_sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw fail();
    }
    int coef = 0;
    bool has_digits = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coef = coef * 10 + (text[pos] - '0');
      has_digits = true;
      ++pos;
    }
    const char symbol = pos < text.size() ? text[pos] : '\0';
    if (symbol == 'i' || symbol == 'k' || symbol == 'h') {
      ++pos;
      if (!has_digits) coef = 1;
    } else if (!has_digits) {
      throw fail();
    }
    const int term = term_sign * coef;
    switch (symbol) {
      case 'i':
        if (has_i || (term != 1 && term != -1)) throw fail();
        has_i = true;
        out.sign = term;
        break;
      case 'k': out.k_mult += term; break;
      case 'h': out.half_mult += term; break;
      default: out.offset += term; break;
    }
  }
  if (!has_i) throw fail();
  return out;
}

std::int64_t evaluate(DeclaredCount count, int n, int k) {
  switch (count) {
    case DeclaredCount::N: return n;
    case DeclaredCount::HalfN: return n / 2;
    case DeclaredCount::K: return k;
    case DeclaredCount::NOver8: return n / 8;
    case DeclaredCount::NOver7: return n / 7;
    case DeclaredCount::One: return 1;
  }
  return 0;
}

std::string_view to_string(DeclaredCount count) {
  switch (count) {
    case DeclaredCount::N: return "n";
    case DeclaredCount::HalfN: return "n/2";
    case DeclaredCount::K: return "k";
    case DeclaredCount::NOver8: return "n/8";
    case DeclaredCount::NOver7: return "n/7";
    case DeclaredCount::One: return "1";
  }
  return "?";
}

PatternSpec make_pattern(PatternId id, Condition condition,
                         std::string_view template_text, DeclaredCount count,
                         CycleProfile profile) {
  PatternSpec spec{std::move(id), std::move(condition),
                   std::string(template_text), {}, count, profile};
  std::istringstream in{std::string(template_text)};
  std::string token;
  while (in >> token) {
    const auto colon = token.find(':');
    if (colon != 1) {
      throw ParamError("bad template vertex '" + token + "'");
    }
    Layer layer;
    switch (token[0]) {
      case 'a': layer = Layer::Outer; break;
      case 'b': layer = Layer::Middle; break;
      case 'c': layer = Layer::Inner; break;
      default: throw ParamError("bad template layer in '" + token + "'");
    }
    spec.vertices.push_back({layer, IndexExpr::parse(token.substr(2))});
  }
  if (spec.vertices.size() < 3) throw ParamError("template shorter than 3");
  return spec;
}

const std::vector<PatternSpec>& pattern_catalog() {
  static const std::vector<PatternSpec> catalog = build_catalog();
  return catalog;
}

const PatternSpec& pattern(const PatternId& id) {
  for (const PatternSpec& spec : pattern_catalog()) {
    if (spec.id == id) return spec;
  }
  throw ParamError("unknown pattern " + id.str());
}

std::vector<PatternId> applicable(int n, int k, int l) {
  std::vector<PatternId> out;
  for (const PatternSpec& spec : pattern_catalog()) {
    if (spec.length() == l && spec.condition.holds(n, k)) out.push_back(spec.id);
  }
  return out;
}

Instantiation instantiate(const PatternSpec& spec, const GtcParams& params) {
  return instantiate_on(spec, build_tc(params));
}

std::vector<Cycle> instantiate(const PatternId& id, int n, int k) {
  const GtcParams params(n, k);
  const PatternSpec& spec = pattern(id);
  if (!spec.condition.holds(n, k)) {
    throw ParamError("pattern " + id.str() + " does not apply at (" +
                     std::to_string(n) + "," + std::to_string(k) + ")");
  }
  Instantiation inst = instantiate(spec, params);
  if (!inst.defects.empty()) {
    const TemplateDefect& d = inst.defects.front();
    throw ValidationError("pattern " + id.str() + " at i=" +
                          std::to_string(d.i) + ": " + d.reason);
  }
  return std::move(inst.cycles);
}

CensusTable predicted_census(int n, int k, int l) {
  const GtcParams params(n, k);
  CensusTable t{Family::TutteCoxeter, n, k, l, l, {}};
  CensusRow row;
  row.l = l;
  for (const PatternId& id : applicable(n, k, l)) {
    const PatternSpec& spec = pattern(id);
    row.add(spec.profile, evaluate(spec.count, n, k));
  }
  t.rows.push_back(row);
  return t;
}

CensusRow AggregateRow::expected(int n) const {
  CensusRow r;
  r.l = 8;
  r.OV = static_cast<std::int64_t>(per_n[0]) * n;
  r.MV = static_cast<std::int64_t>(per_n[1]) * n;
  r.IV = static_cast<std::int64_t>(per_n[2]) * n;
  r.OE = static_cast<std::int64_t>(per_n[3]) * n;
  r.S1E = static_cast<std::int64_t>(per_n[4]) * n;
  r.ME = static_cast<std::int64_t>(per_n[5]) * n;
  r.S2E = static_cast<std::int64_t>(per_n[6]) * n;
  r.IE = static_cast<std::int64_t>(per_n[7]) * n;
  // The printed row carries no cycle count; every 8-cycle contributes 8 to
  // the vertex total.
  r.count = (r.OV + r.MV + r.IV) / 8;
  return r;
}

const std::vector<AggregateRow>& aggregate_rows() {
  static const std::vector<AggregateRow> rows = build_aggregate_rows();
  return rows;
}

std::vector<const AggregateRow*> matching_aggregate_rows(int n, int k) {
  std::vector<const AggregateRow*> out;
  for (const AggregateRow& row : aggregate_rows()) {
    if (row.condition.holds(n, k)) out.push_back(&row);
  }
  return out;
}

CensusRow DiscrepancyReport::delta() const {
  CensusRow d;
  d.l = l;
  d.count = predicted.count - observed.count;
  d.OV = predicted.OV - observed.OV;
  d.MV = predicted.MV - observed.MV;
  d.IV = predicted.IV - observed.IV;
  d.OE = predicted.OE - observed.OE;
  d.S1E = predicted.S1E - observed.S1E;
  d.ME = predicted.ME - observed.ME;
  d.S2E = predicted.S2E - observed.S2E;
  d.IE = predicted.IE - observed.IE;
  return d;
}

std::int64_t DiscrepancyReport::matched_total() const {
  std::int64_t total = 0;
  for (const PatternTally& t : patterns) total += t.matched;
  return total;
}

bool DiscrepancyReport::has_discrepancy() const {
  if (!unmatched.empty() || predicted != observed) return true;
  return std::any_of(patterns.begin(), patterns.end(), [](const PatternTally& t) {
    return !t.defects.empty() || !t.overlaps.empty() ||
           t.declared != t.instantiated;
  });
}

DiscrepancyReport classify(const LabeledGraph& g, int l) {
  if (l < 3) throw ParamError("cycle length must be at least 3");
  return classify(g, enumerate_cycles(g, l), l);
}

DiscrepancyReport classify(const LabeledGraph& g, const CyclesByLength& cycles,
                           int l) {
  if (g.family() != Family::TutteCoxeter) {
    throw ParamError("cycle patterns are defined for TC graphs only");
  }
  const auto observed_it = cycles.find(l);
  if (observed_it == cycles.end()) {
    throw ParamError("no enumeration available at length " + std::to_string(l));
  }
  const auto& observed = observed_it->second;
  const int n = g.n();
  const int k = g.k();

  DiscrepancyReport report;
  report.n = n;
  report.k = k;
  report.l = l;
  report.observed_count = static_cast<std::int64_t>(observed.size());
  report.predicted = predicted_census(n, k, l).rows.front();
  report.observed = census_from_cycles(g, cycles, l, l).rows.front();

  std::map<Cycle, std::size_t> owner;
  for (const PatternId& id : applicable(n, k, l)) {
    const PatternSpec& spec = pattern(id);
    Instantiation inst = instantiate_on(spec, g);
    PatternTally tally;
    tally.id = id;
    tally.declared = evaluate(spec.count, n, k);
    tally.instantiated = static_cast<std::int64_t>(inst.cycles.size());
    tally.defects = std::move(inst.defects);
    const std::size_t self = report.patterns.size();
    for (Cycle& c : inst.cycles) {
      auto [it, inserted] = owner.emplace(std::move(c), self);
      if (!inserted) {
        const PatternId& earlier = report.patterns[it->second].id;
        if (std::find(tally.overlaps.begin(), tally.overlaps.end(), earlier) ==
            tally.overlaps.end()) {
          tally.overlaps.push_back(earlier);
        }
      }
    }
    report.patterns.push_back(std::move(tally));
  }
  for (const Cycle& c : observed) {
    if (auto it = owner.find(c); it != owner.end()) {
      ++report.patterns[it->second].matched;
    } else {
      report.unmatched.push_back(c);
    }
  }
  return report;
}

std::string report_json(const LabeledGraph& g, const DiscrepancyReport& r) {
  using nlohmann::json;
  json matched = json::object();
  json patterns = json::array();
  for (const PatternTally& t : r.patterns) {
    matched[t.id.str()] = t.matched;
    json defects = json::array();
    for (const TemplateDefect& d : t.defects) {
      defects.push_back(
          {{"i", d.i}, {"walk", walk_labels(g, d.walk)}, {"reason", d.reason}});
    }
    json overlaps = json::array();
    for (const PatternId& id : t.overlaps) overlaps.push_back(id.str());
    const PatternSpec& spec = pattern(t.id);
    patterns.push_back({{"id", t.id.str()},
                        {"condition", spec.condition.text()},
                        {"template", spec.template_text},
                        {"declared", t.declared},
                        {"instantiated", t.instantiated},
                        {"matched", t.matched},
                        {"defects", std::move(defects)},
                        {"overlaps", std::move(overlaps)}});
  }
  json unmatched = json::array();
  for (const Cycle& c : r.unmatched) unmatched.push_back(cycle_labels(g, c));
  json doc = {{"n", r.n},
              {"k", r.k},
              {"l", r.l},
              {"observed_count", r.observed_count},
              {"matched", std::move(matched)},
              {"patterns", std::move(patterns)},
              {"unmatched", std::move(unmatched)},
              {"predicted", detail::row_json(r.predicted)},
              {"observed", detail::row_json(r.observed)},
              {"delta", detail::row_json(r.delta())},
              {"discrepancy", r.has_discrepancy()}};
  return doc.dump(2) + "\n";
}

std::string report_markdown(const LabeledGraph& g, const DiscrepancyReport& r) {
  std::ostringstream out;
  out << "## " << g.name() << ", " << r.l << "-cycles\n\n"
      << "Observed cycles: " << r.observed_count
      << ", matched: " << r.matched_total()
      << ", unmatched: " << r.unmatched.size() << "\n\n"
      << "| pattern | condition | declared | instantiated | matched | notes |\n"
      << "|---|---|---|---|---|---|\n";
  for (const PatternTally& t : r.patterns) {
    std::string notes;
    if (!t.defects.empty()) {
      notes += std::to_string(t.defects.size()) + " defective walks";
    }
    for (const PatternId& id : t.overlaps) {
      if (!notes.empty()) notes += "; ";
      notes += "overlaps " + id.str();
    }
    out << "| " << t.id.str() << " | " << pattern(t.id).condition.text()
        << " | " << t.declared << " | " << t.instantiated << " | " << t.matched
        << " | " << notes << " |\n";
  }
  out << "\n| quantity | predicted | observed |\n|---|---|---|\n";
  const auto row = [&](const char* name, std::int64_t p, std::int64_t o) {
    out << "| " << name << " | " << p << " | " << o << " |\n";
  };
  const CensusRow& p = r.predicted;
  const CensusRow& o = r.observed;
  row("count", p.count, o.count);
  row("OV", p.OV, o.OV);
  row("MV", p.MV, o.MV);
  row("IV", p.IV, o.IV);
  row("OE", p.OE, o.OE);
  row("S1E", p.S1E, o.S1E);
  row("ME", p.ME, o.ME);
  row("S2E", p.S2E, o.S2E);
  row("IE", p.IE, o.IE);
  if (!r.unmatched.empty()) {
    out << "\nUnmatched cycles:\n\n";
    for (const Cycle& c : r.unmatched) {
      out << "-";
      for (const auto& label : cycle_labels(g, c)) out << ' ' << label;
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace gtc
