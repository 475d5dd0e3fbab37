#include "coxeter/system.hpp"

#include <charconv>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace cox {

CoxeterSystem::CoxeterSystem(int rank, std::vector<int> m, std::string name)
    : rank_(rank), m_(std::move(m)), name_(std::move(name)) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (static_cast<int>(m_.size()) != rank * rank)
    throw std::invalid_argument("Coxeter matrix must be rank x rank");
  std::vector<int> finite;
  for (int i = 0; i < rank; ++i) {
    if (label(i, i) != 1)
      throw std::invalid_argument("diagonal entry m(" + std::to_string(i + 1) + "," +
                                  std::to_string(i + 1) + ") must be 1");
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      int m = label(i, j);
      if (m != label(j, i))
        throw std::invalid_argument("Coxeter matrix is not symmetric at (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      if (m != kInf && m < 2)
        throw std::invalid_argument("off-diagonal entry at (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") must be >= 2 or 0 (infinity)");
      if (m != kInf && i < j) finite.push_back(m);
    }
  }
  field_ = Field::for_labels(finite);
  gram_.reserve(m_.size());
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      int m = label(i, j);
      gram_.push_back(m == kInf ? field_.from_rational(-1) : -field_.cos_pi_over(m));
    }
  for (const auto& g : gram_) gram2_.push_back(g * Rational(2));
}

CoxeterSystem build_system(const std::vector<std::vector<int>>& matrix, std::string name) {
  int r = static_cast<int>(matrix.size());
  std::vector<int> flat;
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != r)
      throw std::invalid_argument("Coxeter matrix must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return CoxeterSystem(r, std::move(flat), std::move(name));
}

namespace {

std::vector<int> parse_int_list(std::string_view s, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    std::string_view tok = s.substr(pos, comma - pos);
    if (tok == "inf" || tok == "oo" || tok == "infinity") {
      out.push_back(kInf);
    } else {
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw std::invalid_argument("bad integer '" + std::string(tok) + "' in " + std::string(what));
      out.push_back(v);
    }
    pos = comma + 1;
  }
  return out;
}

CoxeterSystem from_edges(int rank, const std::vector<std::tuple<int, int, int>>& edges,
                         std::string name, int fill = 2) {
  std::vector<int> m(rank * rank, fill);
  for (int i = 0; i < rank; ++i) m[i * rank + i] = 1;
  for (auto [i, j, v] : edges) m[i * rank + j] = m[j * rank + i] = v;
  return CoxeterSystem(rank, std::move(m), std::move(name));
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"A2", "B2", "H3", "Dinf", "Atilde2", "Gtilde2", "universal:k",
          "rank3:m,n", "triangle:p,q,r", "A<n>", "B<n>"};
}

CoxeterSystem preset(std::string_view name) {
  std::string n(name);
  if (n == "A2") return from_edges(2, {{0, 1, 3}}, n);
  if (n == "B2") return from_edges(2, {{0, 1, 4}}, n);
  if (n == "H3") return from_edges(3, {{0, 1, 5}, {1, 2, 3}}, n);
  if (n == "Dinf") return from_edges(2, {{0, 1, kInf}}, n);
  if (n == "Atilde2") return from_edges(3, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}}, n);
  // generators alpha, beta, gamma
  if (n == "Gtilde2") return from_edges(3, {{0, 1, 6}, {1, 2, 3}, {0, 2, 2}}, n);
  if (n.rfind("universal:", 0) == 0) {
    auto v = parse_int_list(name.substr(10), "universal:k");
    if (v.size() != 1 || v[0] < 1) throw std::invalid_argument("universal:k needs k >= 1");
    return from_edges(v[0], {}, n, kInf);
  }
  if (n.rfind("rank3:", 0) == 0) {
    auto v = parse_int_list(name.substr(6), "rank3:m,n");
    if (v.size() != 2) throw std::invalid_argument("rank3:m,n needs two labels");
    return from_edges(3, {{0, 1, v[0]}, {1, 2, v[1]}}, n);
  }
  if (n.rfind("triangle:", 0) == 0) {
    auto v = parse_int_list(name.substr(9), "triangle:p,q,r");
    if (v.size() != 3) throw std::invalid_argument("triangle:p,q,r needs three labels");
    return from_edges(3, {{0, 1, v[0]}, {1, 2, v[1]}, {0, 2, v[2]}}, n);
  }
  if (n.size() >= 2 && (n[0] == 'A' || n[0] == 'B') && n.find_first_not_of("0123456789", 1) == std::string::npos) {
    int r = std::stoi(n.substr(1));
    if (r < 1 || r > 64) throw std::invalid_argument("rank out of range in " + n);
    std::vector<std::tuple<int, int, int>> e;
    for (int i = 0; i + 1 < r; ++i) e.emplace_back(i, i + 1, 3);
    if (n[0] == 'B') {
      if (r < 2) throw std::invalid_argument("B<n> needs n >= 2");
      std::get<2>(e[0]) = 4;
    }
    return from_edges(r, e, n);
  }
  throw std::invalid_argument("unknown preset '" + n + "'");
}

CoxeterSystem system_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (!j.contains("m")) throw std::invalid_argument("JSON group needs key 'm'");
  auto rows = j.at("m").get<std::vector<std::vector<int>>>();
  if (j.contains("rank") && j.at("rank").get<int>() != static_cast<int>(rows.size()))
    throw std::invalid_argument("'rank' does not match the size of 'm'");
  return build_system(rows, j.value("name", std::string("custom")));
}

std::string system_to_json(const CoxeterSystem& W) {
  nlohmann::json j;
  j["rank"] = W.rank();
  std::vector<std::vector<int>> rows(W.rank());
  for (int i = 0; i < W.rank(); ++i)
    for (int k = 0; k < W.rank(); ++k) rows[i].push_back(W.label(i, k));
  j["m"] = rows;
  if (!W.name().empty()) j["name"] = W.name();
  return j.dump();
}

}  // namespace cox
