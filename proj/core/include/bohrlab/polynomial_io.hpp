#pragma once

// Corpus files:
//   {"domain": {"p": 2, "n": 2}, "codomain": {"q": "inf", "d": 1},
//    "terms": [{"alpha": [1, 1], "re": [1.0], "im": [0.0]}]}
// A corpus document is either one such object, an array of them, or
// {"polynomials": [...]} with optional "id" fields. Doubles are written in
// shortest round-trip form.

#include <string>
#include <vector>

#include "bohrlab/polynomial.hpp"

namespace bohrlab {

struct NamedPolynomial {
  std::string id;
  VectorPolynomial polynomial;
};

std::string polynomial_to_json(const VectorPolynomial& P, int indent = -1);
VectorPolynomial polynomial_from_json(const std::string& text);

std::string corpus_to_json(const std::vector<NamedPolynomial>& corpus, int indent = 1);
std::vector<NamedPolynomial> corpus_from_json(const std::string& text);

std::vector<NamedPolynomial> read_corpus_file(const std::string& path);
void write_corpus_file(const std::string& path, const std::vector<NamedPolynomial>& corpus);

/// Text of a whole file; throws std::runtime_error if it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace bohrlab
