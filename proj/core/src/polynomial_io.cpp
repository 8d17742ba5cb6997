#include "bohrlab/polynomial_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bohrlab {

using nlohmann::json;

namespace {

json exponent_json(Exponent p) {
  if (p.is_infinite()) return "inf";
  return p.value();
}

Exponent exponent_from(const json& j) {
  if (j.is_string()) return Exponent::parse(j.get<std::string>());
  if (j.is_number()) return Exponent(j.get<double>());
  throw std::invalid_argument("exponent must be a number or \"inf\"");
}

json to_json_value(const VectorPolynomial& P) {
  json terms = json::array();
  for (const auto& t : P.terms()) {
    json re = json::array();
    json im = json::array();
    for (const auto& c : t.coeff) {
      re.push_back(c.real());
      im.push_back(c.imag());
    }
    terms.push_back({{"alpha", t.alpha.vector()}, {"re", re}, {"im", im}});
  }
  return {{"domain", {{"p", exponent_json(P.domain().p)}, {"n", P.n()}}},
          {"codomain", {{"q", exponent_json(P.codomain().p)}, {"d", P.d()}}},
          {"terms", terms}};
}

VectorPolynomial from_json_fields(const json& j) {
  const auto& dom = j.at("domain");
  const auto& cod = j.at("codomain");
  const SpaceSpec domain(exponent_from(dom.at("p")), dom.at("n").get<int>());
  const SpaceSpec codomain(exponent_from(cod.at("q")), cod.at("d").get<int>(), SpaceRole::coefficient);
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    const auto re = t.at("re").get<std::vector<double>>();
    std::vector<double> im(re.size(), 0.0);
    if (t.contains("im")) im = t.at("im").get<std::vector<double>>();
    if (im.size() != re.size()) throw std::invalid_argument("re/im length mismatch");
    CVector c(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) c[i] = {re[i], im[i]};
    terms.push_back({MultiIndex(t.at("alpha").get<std::vector<int>>()), std::move(c)});
  }
  return VectorPolynomial(domain, codomain, std::move(terms));
}

VectorPolynomial from_json_value(const json& j) {
  try {
    return from_json_fields(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial: ") + e.what());
  }
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string polynomial_to_json(const VectorPolynomial& P, int indent) {
  return to_json_value(P).dump(indent);
}

VectorPolynomial polynomial_from_json(const std::string& text) {
  return from_json_value(parse(text));
}

std::string corpus_to_json(const std::vector<NamedPolynomial>& corpus, int indent) {
  json arr = json::array();
  for (const auto& [id, P] : corpus) {
    json j = to_json_value(P);
    j["id"] = id;
    arr.push_back(std::move(j));
  }
  return json{{"polynomials", arr}}.dump(indent);
}

std::vector<NamedPolynomial> corpus_from_json(const std::string& text) {
  const json doc = parse(text);
  const json* arr = &doc;
  if (doc.is_object() && doc.contains("polynomials")) arr = &doc.at("polynomials");
  std::vector<NamedPolynomial> out;
  if (arr->is_object()) {
    out.push_back({"p0", from_json_value(*arr)});
    return out;
  }
  for (std::size_t i = 0; i < arr->size(); ++i) {
    const auto& j = (*arr)[i];
    std::string id = j.contains("id") ? j.at("id").get<std::string>() : "p" + std::to_string(i);
    out.push_back({std::move(id), from_json_value(j)});
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<NamedPolynomial> read_corpus_file(const std::string& path) {
  return corpus_from_json(read_text_file(path));
}

void write_corpus_file(const std::string& path, const std::vector<NamedPolynomial>& corpus) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << corpus_to_json(corpus) << '\n';
}

}  // namespace bohrlab
