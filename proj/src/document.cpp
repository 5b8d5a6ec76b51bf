#include "penner/document.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "penner/error.hpp"

namespace penner {

namespace {

[[noreturn]] void bad(int line, const std::string& what) {
  fail(ErrorCode::invalid_document, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

long long parse_int(std::string_view tok, int line) {
  long long v = 0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || end != tok.data() + tok.size()) bad(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

// "a3" → (alpha, 2); no sign allowed
std::pair<Side, int> parse_curve(std::string_view tok, int line) {
  const Letter l = [&] {
    try {
      return parse_letter(tok);
    } catch (const Error& e) {
      bad(line, e.what());
    }
  }();
  if (tok.back() == '+' || tok.back() == '-') bad(line, "curve names carry no sign: '" + std::string(tok) + "'");
  return {l.side, l.index};
}

}  // namespace

Letter parse_letter(std::string_view tok) {
  auto reject = [&] { fail(ErrorCode::invalid_document, "bad twist '" + std::string(tok) + "'"); };
  if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'b')) reject();
  Letter l = tok[0] == 'a' ? Letter::alpha(0) : Letter::beta(0);
  std::string_view digits = tok.substr(1);
  if (digits.back() == '+' || digits.back() == '-') {
    l.sign = digits.back() == '+' ? 1 : -1;
    digits.remove_suffix(1);
  }
  int index = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size() || index < 1) reject();
  l.index = index - 1;
  return l;
}

TwistWord parse_word(std::string_view text) {
  TwistWord w;
  for (const auto& tok : split(text)) w.push_back(parse_letter(tok));
  return w;
}

PatternDocument parse_document(std::string_view text) {
  PatternDocument d;
  bool have_format = false;
  std::vector<std::pair<int, std::pair<long long, long long>>> edges;
  int signs_line = 0, reflections_line = 0;
  std::optional<long long> vertex_count;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  auto next_tokens = [&](std::vector<std::string>& tokens) {
    while (std::getline(in, raw)) {
      ++line;
      if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
      tokens = split(raw);
      if (!tokens.empty()) return true;
    }
    return false;
  };

  std::vector<std::string> t;
  while (next_tokens(t)) {
    const std::string& key = t[0];
    if (key == "format") {
      if (t.size() != 2 || parse_int(t[1], line) != 1) bad(line, "only 'format 1' is supported");
      have_format = true;
    } else if (key == "pattern") {
      if (d.pattern) bad(line, "duplicate pattern");
      if (t.size() != 3) bad(line, "expected 'pattern n m'");
      const long long n = parse_int(t[1], line), m = parse_int(t[2], line);
      if (n < 1 || m < 1 || n > 10000 || m > 10000) bad(line, "pattern dimensions must be positive");
      Matrix<std::int64_t> x(n, m);
      for (long long i = 0; i < n; ++i) {
        std::vector<std::string> row;
        if (!next_tokens(row)) bad(line, "pattern ends after " + std::to_string(i) + " rows");
        if (static_cast<long long>(row.size()) != m)
          bad(line, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(m));
        for (long long j = 0; j < m; ++j) {
          x(i, j) = parse_int(row[static_cast<std::size_t>(j)], line);
          if (x(i, j) < 0) bad(line, "intersection numbers must be nonnegative");
        }
      }
      d.pattern = IntersectionPattern(std::move(x));
    } else if (key == "word") {
      if (d.word) bad(line, "duplicate word");
      TwistWord w;
      for (std::size_t k = 1; k < t.size(); ++k) {
        try {
          w.push_back(parse_letter(t[k]));
        } catch (const Error& e) {
          bad(line, e.what());
        }
      }
      d.word = std::move(w);
    } else if (key == "order") {
      if (t.size() < 2) bad(line, "expected 'order <curve> <partners...>'");
      const auto [side, index] = parse_curve(t[1], line);
      auto& orders = side == Side::alpha ? d.alpha_orders : d.beta_orders;
      if (orders.count(index)) bad(line, "duplicate order for " + t[1]);
      std::vector<int> partners;
      for (std::size_t k = 2; k < t.size(); ++k) {
        const auto [other, j] = parse_curve(t[k], line);
        if (other == side) bad(line, "an order lists curves of the other multicurve");
        partners.push_back(j);
      }
      orders[index] = std::move(partners);
    } else if (key == "crossing") {
      if (t.size() != 4 || (t[3] != "+" && t[3] != "-")) bad(line, "expected 'crossing a<i> b<j> +|-'");
      const auto [s1, i] = parse_curve(t[1], line);
      const auto [s2, j] = parse_curve(t[2], line);
      if (s1 != Side::alpha || s2 != Side::beta) bad(line, "a crossing names an α curve then a β curve");
      if (!d.crossings.emplace(std::pair{i, j}, t[3] == "+" ? 1 : -1).second) bad(line, "duplicate crossing");
    } else if (key == "graph") {
      if (vertex_count) bad(line, "duplicate graph");
      if (t.size() != 2) bad(line, "expected 'graph n'");
      vertex_count = parse_int(t[1], line);
      if (*vertex_count < 1 || *vertex_count > 10000) bad(line, "a graph needs at least one vertex");
    } else if (key == "edge") {
      if (t.size() != 3) bad(line, "expected 'edge i j'");
      edges.push_back({line, {parse_int(t[1], line), parse_int(t[2], line)}});
    } else if (key == "signs") {
      if (d.signs) bad(line, "duplicate signs");
      std::vector<int> signs;
      for (std::size_t k = 1; k < t.size(); ++k) {
        if (t[k] != "+" && t[k] != "-") bad(line, "signs are '+' or '-'");
        signs.push_back(t[k] == "+" ? 1 : -1);
      }
      d.signs = std::move(signs);
      signs_line = line;
    } else if (key == "reflections") {
      if (d.reflections) bad(line, "duplicate reflections");
      std::vector<int> order;
      for (std::size_t k = 1; k < t.size(); ++k) order.push_back(static_cast<int>(parse_int(t[k], line)) - 1);
      d.reflections = std::move(order);
      reflections_line = line;
    } else {
      bad(line, "unknown key '" + key + "'");
    }
  }
  if (!have_format) bad(line, "missing 'format 1'");

  if (!vertex_count) {
    if (!edges.empty()) bad(edges.front().first, "edge without a graph");
    if (d.signs) bad(signs_line, "signs without a graph");
    if (d.reflections) bad(reflections_line, "reflections without a graph");
    return d;
  }
  Graph g(static_cast<int>(*vertex_count));
  for (const auto& [at, e] : edges) {
    if (e.first < 1 || e.second < 1 || e.first > *vertex_count || e.second > *vertex_count)
      bad(at, "edge endpoint out of range");
    try {
      g.add_edge(static_cast<int>(e.first) - 1, static_cast<int>(e.second) - 1);
    } catch (const Error& err) {
      bad(at, err.what());
    }
  }
  if (d.signs && static_cast<long long>(d.signs->size()) != *vertex_count)
    bad(signs_line, "expected one sign per vertex");
  if (d.reflections) {
    std::vector<int> sorted = *d.reflections;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
      if (sorted[k] != static_cast<int>(k) || static_cast<long long>(sorted.size()) != *vertex_count)
        bad(reflections_line, "reflections must list every vertex once");
  }
  d.graph = std::move(g);
  return d;
}

PatternDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::invalid_document, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string to_text(const PatternDocument& d) {
  std::ostringstream out;
  out << "format " << d.format << '\n';
  if (d.pattern) {
    const auto& x = d.pattern->x();
    out << "pattern " << x.rows() << ' ' << x.cols() << '\n';
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      for (Eigen::Index j = 0; j < x.cols(); ++j) out << (j ? " " : "") << x(i, j);
      out << '\n';
    }
  }
  if (d.word) out << "word" << (d.word->empty() ? "" : " ") << to_string(*d.word) << '\n';
  for (const auto& [i, partners] : d.alpha_orders) {
    out << "order a" << i + 1;
    for (int j : partners) out << " b" << j + 1;
    out << '\n';
  }
  for (const auto& [j, partners] : d.beta_orders) {
    out << "order b" << j + 1;
    for (int i : partners) out << " a" << i + 1;
    out << '\n';
  }
  for (const auto& [ij, s] : d.crossings)
    out << "crossing a" << ij.first + 1 << " b" << ij.second + 1 << ' ' << (s > 0 ? '+' : '-') << '\n';
  if (d.graph) {
    out << "graph " << d.graph->vertex_count() << '\n';
    for (const auto& [u, v] : d.graph->edges()) out << "edge " << u + 1 << ' ' << v + 1 << '\n';
  }
  if (d.signs) {
    out << "signs";
    for (int s : *d.signs) out << ' ' << (s > 0 ? '+' : '-');
    out << '\n';
  }
  if (d.reflections) {
    out << "reflections";
    for (int v : *d.reflections) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

FramedPattern framing_of(const PatternDocument& d) {
  if (!d.pattern) fail(ErrorCode::invalid_document, "a framing needs a pattern");
  const FramedPattern base = FramedPattern::standard(*d.pattern);
  auto alpha = base.alpha_orders();
  auto beta = base.beta_orders();
  Matrix<int> orientation = base.orientation();
  for (const auto& [i, order] : d.alpha_orders) {
    if (i >= static_cast<int>(alpha.size())) fail(ErrorCode::invalid_map, "order for a curve outside the pattern");
    alpha[static_cast<std::size_t>(i)] = order;
  }
  for (const auto& [j, order] : d.beta_orders) {
    if (j >= static_cast<int>(beta.size())) fail(ErrorCode::invalid_map, "order for a curve outside the pattern");
    beta[static_cast<std::size_t>(j)] = order;
  }
  for (const auto& [ij, s] : d.crossings) {
    const auto [i, j] = ij;
    if (i >= orientation.rows() || j >= orientation.cols() || d.pattern->x(i, j) == 0)
      fail(ErrorCode::invalid_map, "crossing a" + std::to_string(i + 1) + " b" + std::to_string(j + 1) + " does not exist");
    orientation(i, j) = s;
  }
  return {*d.pattern, std::move(alpha), std::move(beta), std::move(orientation)};
}

}  // namespace penner
