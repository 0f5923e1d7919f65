#include "qbgc/io.hpp"

#include <limits>
#include <sstream>

namespace qbgc {

namespace {

std::string root_coords_string(const RootVector& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(r.coords[i]);
  }
  return s + ")";
}

}  // namespace

Json root_system_json(const WeylGroup& W) {
  const CartanDatum& cartan = W.cartan();
  Json j;
  j["type"] = cartan.type_name();
  j["rank"] = cartan.rank();
  j["cartan_matrix"] = Json::array();
  for (int i = 0; i < cartan.rank(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < cartan.rank(); ++k) row.push_back(cartan.cartan(i, k));
    j["cartan_matrix"].push_back(std::move(row));
  }
  j["simple_roots"] = Json::array();
  for (int i = 0; i < cartan.rank(); ++i) j["simple_roots"].push_back(cartan.positive_root(i).coords);
  j["positive_roots"] = Json::array();
  for (int i = 0; i < cartan.num_positive_roots(); ++i)
    j["positive_roots"].push_back(cartan.positive_root(i).coords);
  j["num_positive_roots"] = cartan.num_positive_roots();
  j["weyl_order"] = W.size();
  j["longest_length"] = W.length(W.longest());
  j["highest_short_root"] = cartan.phi().coords;
  j["highest_root"] = cartan.theta().coords;
  return j;
}

std::string qbg_dot(const QuantumBruhatGraph& g) {
  const WeylGroup& W = g.group();
  std::ostringstream out;
  out << "digraph qbg {\n";
  for (int v = 0; v < g.num_vertices(); ++v)
    out << "  n" << v << " [label=\"" << W.word_name(g.vertex_element(v)) << "\"];\n";
  for (const QbgEdge& e : g.edges()) {
    out << "  n" << e.source << " -> n" << e.target << " [label=\""
        << root_coords_string(W.cartan().positive_root(e.label)) << "\"";
    if (e.kind == EdgeKind::quantum) out << " style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json qbg_json(const QuantumBruhatGraph& g) {
  const WeylGroup& W = g.group();
  Json j;
  j["type"] = W.cartan().type_name();
  j["parabolic"] = g.parabolic().members;
  j["vertices"] = Json::array();
  for (int v = 0; v < g.num_vertices(); ++v) {
    Json vj;
    vj["id"] = v;
    vj["word"] = W.word_name(g.vertex_element(v));
    vj["length"] = W.length(g.vertex_element(v));
    j["vertices"].push_back(std::move(vj));
  }
  j["edges"] = Json::array();
  for (const QbgEdge& e : g.edges()) {
    Json ej;
    ej["source"] = e.source;
    ej["target"] = e.target;
    ej["label"] = W.cartan().positive_root(e.label).coords;
    ej["kind"] = e.kind == EdgeKind::quantum ? "quantum" : "bruhat";
    j["edges"].push_back(std::move(ej));
  }
  return j;
}

Json inversion_table_json(const InversionTable& table) {
  Json j;
  j["lambda"] = table.lambda().coords;
  j["length"] = table.size();
  j["entries"] = Json::array();
  for (int k = 0; k < table.size(); ++k) {
    const InversionEntry& e = table.entry(k);
    Json ej;
    ej["index"] = k + 1;
    ej["finite_part"] = e.beta_tilde.finite.coords;
    ej["a"] = e.a;
    ej["d"] = to_string(e.d);
    j["entries"].push_back(std::move(ej));
  }
  return j;
}

Json alcove_path_json(const AlcoveModel& model, const AlcovePath& p) {
  const CartanDatum& cartan = model.group().cartan();
  Json j;
  Json indices = Json::array();
  for (int idx : p.J) indices.push_back(idx + 1);
  j["J"] = std::move(indices);
  j["steps"] = Json::array();
  for (const AlcoveStep& s : p.steps) {
    Json sj;
    sj["label"] = cartan.positive_root(s.label).coords;
    sj["kind"] = s.kind == EdgeKind::quantum ? "quantum" : "bruhat";
    j["steps"].push_back(std::move(sj));
  }
  j["end_weight"] = AlcoveModel::end_weight(p).coords;
  j["deg_qwt"] = model.qwt_deg(p);
  return j;
}

Json qls_path_json(const QlsModel& model, const QlsPath& p, int w) {
  const WeylGroup& W = model.group();
  Json j;
  j["vertices"] = Json::array();
  for (int v : p.vertices) j["vertices"].push_back(W.word_name(v));
  j["breaks"] = Json::array();
  for (const Rat& b : p.breaks) j["breaks"].push_back(to_string(b));
  j["wt"] = model.weight(p).coords;
  DegStats deg = model.deg_stats(p, w);
  j["deg"] = Json{{"w", W.word_name(w)},
                  {"deg_star_up", deg.deg_star_up},
                  {"deg_star_down", deg.deg_star_down},
                  {"deg_up", deg.deg_up},
                  {"deg_down", deg.deg_down}};
  return j;
}

Json character_json(const GradedCharacter& c) {
  Json terms = Json::array();
  for (const auto& [key, coeff] : c.terms()) {
    Json t;
    t["weight"] = key.first;
    t["q"] = key.second;
    if (coeff >= std::numeric_limits<long long>::min() &&
        coeff <= std::numeric_limits<long long>::max())
      t["coeff"] = static_cast<long long>(coeff);
    else
      t["coeff"] = coeff.str();
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

GradedCharacter character_from_json(const Json& j) {
  GradedCharacter c;
  for (const Json& t : j.at("terms")) {
    Weight mu(t.at("weight").get<std::vector<int>>());
    Coeff coeff;
    if (t.at("coeff").is_string())
      coeff = Coeff(t.at("coeff").get<std::string>());
    else
      coeff = Coeff(t.at("coeff").get<long long>());
    c.add_term(mu, t.at("q").get<int>(), coeff);
  }
  return c;
}

}  // namespace qbgc
