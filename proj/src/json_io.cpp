#include "antibch/json_io.hpp"

#include <sstream>

namespace antibch {

Json to_json(const Poly& f) {
  const Field& F = *f.field();
  Json coeffs = Json::array();
  for (Elt c : f.coeffs()) coeffs.push_back(F.coeffs(c));
  return {{"p", F.p()}, {"k", F.k()}, {"coeffs", coeffs}};
}

Json to_json(const CosetReport& r) {
  Json sizes = Json::object();
  for (auto [leader, size] : r.sizes) sizes[std::to_string(leader)] = size;
  return {{"q", r.q}, {"m", r.m}, {"n", r.n}, {"leaders", r.leaders}, {"sizes", sizes}};
}

Json to_json(const BchCode& c) {
  return {{"q", c.q},
          {"m", c.m},
          {"n", c.n},
          {"delta", c.delta},
          {"b", c.b},
          {"dimension", c.dimension},
          {"defining_set", c.defining_set},
          {"generator", to_json(c.generator)},
          {"lcd", c.lcd}};
}

Json to_json(const Witness& w) {
  return {{"support", w.support}, {"coeffs", w.coeffs}, {"recipe", w.recipe}, {"weight", w.weight()}};
}

Json to_json(const DistanceCertificate& c) {
  Json out;
  out["code"] = {{"q", c.q}, {"m", c.m}, {"n", c.n}, {"delta", c.delta}, {"b", c.b}, {"dimension", c.dimension}};
  out["lower"] = {{"value", c.lower}, {"rules", c.lower_rules}};
  if (c.upper) {
    out["upper"] = {{"value", *c.upper}, {"witness", c.witness ? to_json(*c.witness) : Json()}};
  } else {
    out["upper"] = nullptr;
  }
  out["exact"] = c.exact;
  out["budget"] = {{"codewords", c.budgets.codewords},
                   {"support_leaves", c.budgets.support_leaves},
                   {"subcode_codewords", c.budgets.subcode_codewords},
                   {"codewords_enumerated", c.codewords_enumerated},
                   {"support_leaves_used", c.support_leaves},
                   {"support_exhausted_through", c.support_exhausted_through}};
  return out;
}

Json to_json(const BlockSet& b) {
  return {{"q", b.q}, {"k", b.k}, {"l", b.l}, {"cardinality", b.blocks.size()}, {"blocks", b.blocks},
          {"subsets_checked", b.subsets_checked}};
}

Json to_json(const ZetterbergCounts& z) {
  return {{"p", z.p}, {"m", z.m}, {"n", z.n}, {"counts", z.counts}};
}

std::string blocks_csv(const BlockSet& b) {
  std::ostringstream os;
  for (const auto& blk : b.blocks) {
    for (std::size_t i = 0; i < blk.size(); ++i) os << (i ? "," : "") << blk[i];
    os << '\n';
  }
  return os.str();
}

namespace {

bool scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (scalar_array(j)) {
    std::string s;
    for (const auto& x : j) s += (s.empty() ? "" : " ") + scalar(x);
    return s;
  }
  return j.dump();
}

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && !scalar_array(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(path, scalar(j));
  }
}

}  // namespace

std::string render_table(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (auto& [k, v] : rows) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

std::string render_csv(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::ostringstream os;
  os << "field,value\n";
  for (auto& [k, v] : rows) {
    const bool quote = v.find_first_of(",\"\n") != std::string::npos;
    if (quote) {
      std::string e;
      for (char c : v) e += c == '"' ? std::string("\"\"") : std::string(1, c);
      os << k << ",\"" << e << "\"\n";
    } else {
      os << k << ',' << v << '\n';
    }
  }
  return os.str();
}

}  // namespace antibch
