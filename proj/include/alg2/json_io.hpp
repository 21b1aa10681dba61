#ifndef ALG2_JSON_IO_HPP
#define ALG2_JSON_IO_HPP

#include <string>

#include "alg2/degeneration.hpp"

namespace alg2 {

/// A parsed algebra input document: one backend-tagged structure-constant
/// tensor. Exact values are integers or "p/q" strings; numeric values are
/// numbers or [re, im] pairs with a document-level tolerance.
struct InputDocument {
    bool numeric = false;
    double tolerance = Numeric::kDefaultEps;
    Tensor<Rational> exact = Tensor<Rational>::zero();
    Tensor<Numeric> num = Tensor<Numeric>::zero();
};

InputDocument parse_input_document(const std::string& json_text);

/// Parses "FAMILY(p1,...,pn)" with exact rational parameters. Hard domain
/// violations are rejected; non-representative parameter forms are folded to
/// the canonical label through the classifier.
ExactLabel parse_label(const std::string& text);

std::string label_to_json(const ExactLabel& label);
std::string classification_to_json(const Classification<Rational>& c);
std::string classification_to_json(const Classification<Numeric>& c);

}  // namespace alg2

#endif
