#include "wgalg/certificate.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>

#include "wgalg/error.hpp"
#include "wgalg/expr.hpp"
#include "wgalg/quiver.hpp"

namespace wgalg {

std::size_t Certificate::index(const std::string& label) const {
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] == label) return k;
  }
  throw ValidationError("unknown certificate label " + label);
}

std::vector<std::vector<bool>> Certificate::closure() const {
  const std::size_t n = labels.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t k = 0; k < n; ++k) le[k][k] = true;
  for (const auto& [a, b] : order) le[index(a)][index(b)] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!le[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (le[k][j]) le[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (le[i][j] && le[j][i]) {
        throw ValidationError("order has a cycle through " + labels[i] + " and " + labels[j]);
      }
    }
  }
  return le;
}

int Certificate::height() const {
  const auto le = closure();
  const std::size_t n = labels.size();
  // Longest chain by memoized depth over the strict order.
  std::vector<int> depth(n, 0);
  std::vector<std::size_t> by_size(n);
  for (std::size_t k = 0; k < n; ++k) by_size[k] = k;
  std::vector<std::size_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && le[j][i]) ++below[i];
    }
  }
  std::sort(by_size.begin(), by_size.end(),
            [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  int best = 0;
  for (std::size_t i : by_size) {
    depth[i] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && le[j][i]) depth[i] = std::max(depth[i], depth[j] + 1);
    }
    best = std::max(best, depth[i]);
  }
  return best;
}

void check_certificate_shape(const Certificate& c, std::size_t group_order) {
  std::set<std::string> seen;
  for (const auto& l : c.labels) {
    if (l.empty()) throw ValidationError("empty certificate label");
    if (!seen.insert(l).second) throw ValidationError("duplicate certificate label " + l);
    auto d = c.degrees.find(l);
    if (d == c.degrees.end()) throw ValidationError("no degree for " + l);
    if (d->second < 1) throw ValidationError("degree of " + l + " must be positive");
    if (!c.elements.count(l)) throw ValidationError("no element for " + l);
  }
  for (const auto& [l, d] : c.degrees) {
    if (!seen.count(l)) throw ValidationError("degree for unknown label " + l);
  }
  for (const auto& [l, e] : c.elements) {
    if (!seen.count(l)) throw ValidationError("element for unknown label " + l);
  }
  c.closure();
  std::size_t total = 0;
  for (const auto& [l, d] : c.degrees) total += std::size_t(d) * std::size_t(d);
  if (total != group_order) {
    throw ValidationError("sum of squared degrees is " + std::to_string(total) +
                          ", the group has order " + std::to_string(group_order));
  }
}

std::vector<std::pair<std::string, std::string>> transitive_reduction(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  Certificate tmp;
  tmp.labels = labels;
  tmp.order = pairs;
  const auto le = tmp.closure();
  const std::size_t n = labels.size();
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !le[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) {
        if (k != i && k != j && le[i][k] && le[k][j]) covered = false;
      }
      if (covered) out.emplace_back(labels[i], labels[j]);
    }
  }
  return out;
}

Certificate certificate_from_json_text(std::string_view text, CoxeterPtr W) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid certificate JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw ParseError("certificate JSON must be an object");
  if (doc.contains("coxeter")) {
    const auto& c = doc["coxeter"];
    CoxeterSystem parsed = c.is_string() ? parse_coxeter(c.get<std::string>())
                                         : coxeter_from_json_text(c.dump());
    if (W && !(parsed == *W)) {
      throw ValidationError("certificate belongs to a different Coxeter system");
    }
    if (!W) W = std::make_shared<const CoxeterSystem>(std::move(parsed));
  }
  if (!W) throw ValidationError("certificate JSON needs a \"coxeter\" entry");
  Certificate cert;
  cert.system = W;
  try {
    for (const auto& l : doc.at("labels")) cert.labels.push_back(l.get<std::string>());
    const auto& deg = doc.at("degrees");
    if (deg.is_object()) {
      for (const auto& [k, v] : deg.items()) cert.degrees[k] = v.get<int>();
    } else {
      // A list in label order is accepted too.
      std::size_t k = 0;
      for (const auto& v : deg) {
        if (k >= cert.labels.size()) throw ValidationError("more degrees than labels");
        cert.degrees[cert.labels[k++]] = v.get<int>();
      }
    }
    if (doc.contains("order")) {
      for (const auto& p : doc["order"]) {
        if (!p.is_array() || p.size() != 2) {
          throw ValidationError("order entries must be pairs of labels");
        }
        cert.order.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
      }
    }
    Quiver Q(W);
    ExprContext ctx;
    ctx.quiver = &Q;
    for (const auto& [k, v] : doc.at("elements").items()) {
      cert.elements[k] = parse_omega(v.get<std::string>(), ctx);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed certificate: ") + e.what());
  }
  for (const auto& [a, b] : cert.order) {
    cert.index(a);
    cert.index(b);
  }
  return cert;
}

std::string certificate_to_json_text(const Certificate& c) {
  nlohmann::ordered_json doc;
  const std::string name = c.system->name();
  if (!name.empty() && parse_coxeter(name) == *c.system) {
    doc["coxeter"] = name;
  } else {
    doc["coxeter"] = nlohmann::ordered_json::parse(coxeter_to_json_text(*c.system));
  }
  doc["labels"] = c.labels;
  nlohmann::ordered_json deg = nlohmann::ordered_json::object();
  for (const auto& l : c.labels) deg[l] = c.degrees.at(l);
  doc["degrees"] = deg;
  doc["order"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : c.order) doc["order"].push_back(nlohmann::ordered_json::array({a, b}));
  nlohmann::ordered_json el = nlohmann::ordered_json::object();
  for (const auto& l : c.labels) el[l] = c.elements.at(l).to_string(*c.system);
  doc["elements"] = el;
  return doc.dump(2) + "\n";
}

Certificate relabel(const Certificate& c, const std::map<std::string, std::string>& names) {
  auto rename = [&](const std::string& l) {
    auto it = names.find(l);
    return it == names.end() ? l : it->second;
  };
  Certificate out;
  out.system = c.system;
  for (const auto& l : c.labels) out.labels.push_back(rename(l));
  for (const auto& [l, d] : c.degrees) out.degrees[rename(l)] = d;
  for (const auto& [a, b] : c.order) out.order.emplace_back(rename(a), rename(b));
  for (const auto& [l, e] : c.elements) out.elements[rename(l)] = e;
  return out;
}

Certificate builtin_certificate(const CoxeterPtr& W) {
  Certificate c;
  c.system = W;
  if (W->rank() == 0) {
    c.labels = {"triv"};
    c.degrees["triv"] = 1;
    c.elements["triv"] = OmegaElement::vertex(0);
    return c;
  }
  if (W->rank() == 1) {
    c.labels = {"sign", "triv"};
    c.degrees = {{"sign", 1}, {"triv", 1}};
    c.order = {{"sign", "triv"}};
    c.elements["sign"] = OmegaElement::vertex(1);
    c.elements["triv"] = OmegaElement::vertex(0);
    return c;
  }
  throw ValidationError("no builtin certificate for a system of rank " +
                        std::to_string(W->rank()));
}

}  // namespace wgalg
