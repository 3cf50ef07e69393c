#include "tempdual/catalog.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tempdual/base_change.hpp"
#include "tempdual/ktheory.hpp"
#include "tempdual/levi.hpp"
#include "tempdual/param_space.hpp"

namespace tempdual {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<DocumentKind, const char*>, 7> kKindNames{{
    {DocumentKind::Partitions, "partitions"},
    {DocumentKind::RealComponents, "real_components"},
    {DocumentKind::ComplexComponents, "complex_components"},
    {DocumentKind::KReal, "k_real"},
    {DocumentKind::KComplex, "k_complex"},
    {DocumentKind::BaseChange, "bc"},
    {DocumentKind::KMap, "kmap"},
}};

json ranks_json(const KRanks& k) {
  return {{"deg0", k.deg0}, {"deg1", k.deg1}};
}

json chart_json(const ConeChart& c) {
  return {{"num_lines", c.num_lines}, {"num_rays", c.num_rays}};
}

json component_json(const Component& c) {
  json j = {
      {"key", c.key()},
      {"shape", {{"q", c.shape().q}, {"r", c.shape().r}}},
      {"gl2", c.orbit().gl2_labels()},
      {"gl1", c.orbit().gl1_labels()},
      {"dimension", c.dimension()},
      {"kind", to_string(c.kind())},
      {"isotropy", c.isotropy().multiplicities},
      {"k_ranks", ranks_json(k_of_component(c))},
  };
  if (!c.is_free())
    j["chart"] = chart_json(cone_chart(c));
  return j;
}

json component_json(const ComplexComponent& c) {
  json j = {
      {"key", c.key()},
      {"labels", c.labels()},
      {"dimension", c.dimension()},
      {"kind", to_string(c.kind())},
      {"isotropy", c.isotropy().multiplicities},
      {"k_ranks", ranks_json(k_of_component(c))},
  };
  if (!c.is_free())
    j["chart"] = chart_json(cone_chart(c));
  return j;
}

template <class Catalog>
json catalog_payload(const Catalog& catalog) {
  json items = json::array();
  std::size_t free = 0;
  for (const auto& c : catalog) {
    items.push_back(component_json(c));
    free += c.is_free() ? 1 : 0;
  }
  return {{"components", std::move(items)},
          {"count", catalog.size()},
          {"free_count", free},
          {"cone_count", catalog.size() - free}};
}

json partitions_payload(int n, int cutoff) {
  json shapes = json::array();
  for (const auto& s : enumerate_levi_shapes(n)) {
    auto w = weyl_group(s);
    shapes.push_back({
        {"q", s.q},
        {"r", s.r},
        {"partition", s.to_string()},
        {"weyl_group", w.to_string()},
        {"weyl_order", w.order()},
        {"parameter_dimension", s.q + s.r},
        {"orbit_count", enumerate_orbits(s, cutoff).size()},
    });
  }
  auto count = shapes.size();
  return {{"shapes", std::move(shapes)}, {"count", count}};
}

json k_payload(const KGroups& groups, Field field) {
  json degrees = json::array();
  for (int d : {0, 1}) {
    const auto& g = groups[d];
    degrees.push_back({
        {"degree", d},
        {"rank", g.rank()},
        {"closed_form", g.closed_form.describe()},
        {"closed_form_count", g.closed_form.count_at(g.id.cutoff)},
        {"generators", g.generators},
    });
  }
  return {{"field", to_string(field)}, {"groups", std::move(degrees)}};
}

json bc_payload(int n, int cutoff) {
  json maps = json::array();
  bool all_proper = true;
  for (const auto& c : real_components(n, cutoff)) {
    auto m = bc_component(c);
    bool proper = is_proper(m);
    all_proper = all_proper && proper;
    maps.push_back({
        {"source", c.key()},
        {"source_kind", to_string(c.kind())},
        {"target", m.target.key()},
        {"target_kind", to_string(m.target.kind())},
        {"row_labels", m.row_labels},
        {"matrix", m.matrix},
        {"proper", proper},
    });
  }
  auto count = maps.size();
  return {{"maps", std::move(maps)}, {"count", count}, {"all_proper", all_proper}};
}

json kmap_payload(int n, int cutoff) {
  auto m = induced_k_map(n, cutoff);
  json assignments = json::array();
  for (const auto& [generator, image] : m.assignments) {
    json coeffs = json::object();
    for (const auto& [key, c] : image.coefficients())
      coeffs[key] = c;
    assignments.push_back({{"generator", generator}, {"image", std::move(coeffs)}});
  }
  auto nonzero = assignments.size();
  return {
      {"degree", m.source.degree},
      {"source", m.source.to_string()},
      {"target", m.target.to_string()},
      {"source_rank", m.source_generators.size()},
      {"target_rank", k_real_truncated(n, cutoff)[m.target.degree].rank()},
      {"assignments", std::move(assignments)},
      {"nonzero_assignments", nonzero},
      {"summary", m.is_zero() ? "zero map" : "nonzero map"},
  };
}

// Fixed-width text table: each column is as wide as its widest cell.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : rows_{std::move(header)} {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void render(std::ostream& out) const {
    std::vector<std::size_t> widths;
    for (const auto& row : rows_) {
      widths.resize(std::max(widths.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i)
        widths[i] = std::max(widths[i], row[i].size());
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::string line;
      for (std::size_t i = 0; i < rows_[r].size(); ++i) {
        if (i)
          line += "  ";
        line += rows_[r][i];
        if (i + 1 < rows_[r].size())
          line.append(widths[i] - rows_[r][i].size(), ' ');
      }
      out << line << '\n';
      if (r == 0) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < widths.size(); ++i)
          total += widths[i] + (i ? 2 : 0);
        out << std::string(total, '-') << '\n';
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string str(const json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string list(const json& arr) {
  std::string s = "{";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i)
      s += ",";
    s += str(arr[i]);
  }
  return s + "}";
}

void table_components(const json& payload, bool real, std::ostream& out) {
  std::vector<std::string> header = real ? std::vector<std::string>{"shape", "gl2", "gl1", "dim", "kind", "isotropy", "chart", "K0", "K1"}
                                         : std::vector<std::string>{"labels", "dim", "kind", "isotropy", "chart", "K0", "K1"};
  TextTable t(header);
  for (const auto& c : payload["components"]) {
    std::string chart = c.contains("chart")
                            ? "R^" + str(c["chart"]["num_lines"]) + " x [0,inf)^" + str(c["chart"]["num_rays"])
                            : "-";
    std::vector<std::string> row;
    if (real) {
      row = {str(c["shape"]["q"]) + "," + str(c["shape"]["r"]), list(c["gl2"]), list(c["gl1"])};
    } else {
      row = {list(c["labels"])};
    }
    for (auto v : {str(c["dimension"]), str(c["kind"]), list(c["isotropy"]), chart, str(c["k_ranks"]["deg0"]),
                   str(c["k_ranks"]["deg1"])})
      row.push_back(std::move(v));
    t.add(std::move(row));
  }
  t.render(out);
  out << "components: " << str(payload["count"]) << " (free " << str(payload["free_count"]) << ", cone "
      << str(payload["cone_count"]) << ")\n";
}

}  // namespace

const char* to_string(DocumentKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind)
      return name;
  return "unknown";
}

std::optional<DocumentKind> document_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (name == n)
      return k;
  return std::nullopt;
}

json build_document(DocumentKind kind, int n, int cutoff) {
  if (n < 1)
    throw std::domain_error("n must be >= 1, got " + std::to_string(n));
  if (cutoff < 1)
    throw std::domain_error("cutoff must be >= 1, got " + std::to_string(cutoff));

  json payload;
  switch (kind) {
    case DocumentKind::Partitions:
      payload = partitions_payload(n, cutoff);
      break;
    case DocumentKind::RealComponents:
      payload = catalog_payload(real_components(n, cutoff));
      break;
    case DocumentKind::ComplexComponents:
      payload = catalog_payload(complex_components(n, cutoff));
      break;
    case DocumentKind::KReal:
      payload = k_payload(k_real(n, cutoff), Field::Real);
      break;
    case DocumentKind::KComplex:
      payload = k_payload(k_complex(n, cutoff), Field::Complex);
      break;
    case DocumentKind::BaseChange:
      payload = bc_payload(n, cutoff);
      break;
    case DocumentKind::KMap:
      payload = kmap_payload(n, cutoff);
      break;
  }
  return {
      {"tool_version", kToolVersion},
      {"kind", to_string(kind)},
      {"n", n},
      {"cutoff", cutoff},
      {"payload", std::move(payload)},
  };
}

std::string to_json_text(const json& doc) {
  return doc.dump(2) + "\n";
}

std::string render_table(const json& doc) {
  std::ostringstream out;
  auto kind = document_kind_from_string(doc.at("kind").get<std::string>());
  if (!kind)
    throw std::invalid_argument("unknown document kind");
  const auto& p = doc.at("payload");
  int n = doc.at("n").get<int>();
  out << "# " << to_string(*kind) << "  n=" << n << "  cutoff=" << str(doc.at("cutoff")) << "  (tool "
      << str(doc.at("tool_version")) << ")\n";

  switch (*kind) {
    case DocumentKind::Partitions: {
      TextTable t({"partition", "q", "r", "W(M)", "|W(M)|", "dim X(M)", "orbits"});
      for (const auto& s : p["shapes"])
        t.add({str(s["partition"]), str(s["q"]), str(s["r"]), str(s["weyl_group"]), str(s["weyl_order"]),
               str(s["parameter_dimension"]), str(s["orbit_count"])});
      t.render(out);
      out << "partitions: " << str(p["count"]) << "\n";
      break;
    }
    case DocumentKind::RealComponents:
    case DocumentKind::ComplexComponents:
      table_components(p, *kind == DocumentKind::RealComponents, out);
      break;
    case DocumentKind::KReal:
    case DocumentKind::KComplex: {
      TextTable t({"group", "rank", "closed form", "closed-form count"});
      for (const auto& g : p["groups"])
        t.add({"K" + str(g["degree"]), str(g["rank"]), str(g["closed_form"]), str(g["closed_form_count"])});
      t.render(out);
      for (const auto& g : p["groups"]) {
        out << "K" << str(g["degree"]) << " generators (" << str(g["rank"]) << "):\n";
        for (const auto& key : g["generators"])
          out << "  " << str(key) << "\n";
      }
      break;
    }
    case DocumentKind::BaseChange: {
      TextTable t({"source", "kind", "target", "kind", "matrix", "proper"});
      for (const auto& m : p["maps"]) {
        std::string mat;
        for (const auto& row : m["matrix"])
          mat += row.dump();
        t.add({str(m["source"]), str(m["source_kind"]), str(m["target"]), str(m["target_kind"]), mat,
               m["proper"].get<bool>() ? "yes" : "no"});
      }
      t.render(out);
      out << "maps: " << str(p["count"]) << ", all proper: " << (p["all_proper"].get<bool>() ? "yes" : "no") << "\n";
      break;
    }
    case DocumentKind::KMap: {
      out << str(p["source"]) << " -> " << str(p["target"]) << "\n";
      out << "source rank " << str(p["source_rank"]) << ", target rank " << str(p["target_rank"]) << "\n";
      TextTable t({"generator", "image"});
      for (const auto& a : p["assignments"]) {
        std::string img;
        for (const auto& [key, c] : a["image"].items())
          img += (img.empty() ? "" : " + ") + c.dump() + "*[" + key + "]";
        t.add({str(a["generator"]), img});
      }
      if (!p["assignments"].empty())
        t.render(out);
      out << str(p["summary"]) << ": " << str(p["nonzero_assignments"]) << " nonzero assignments\n";
      break;
    }
  }
  return out.str();
}

}  // namespace tempdual
