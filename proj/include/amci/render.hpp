#pragma once

#include "amci/kernel_bases.hpp"
#include "amci/multiplicities.hpp"
#include "amci/sl2_engine.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace amci {

// insertion order is kept, so dumps are byte-stable
using Json = nlohmann::ordered_json;

// "x1^4 - x2^4 - 1/2*x1*x3" style; "0" for the zero polynomial
std::string poly_to_text(const QuotientPolynomial& p);
// "x_1^{4} - x_2^{4} - \frac{1}{2}x_1x_3" style
std::string poly_to_latex(const QuotientPolynomial& p);

// {"terms":[{"monomial":[a,b,c],"coeff":"p/q"}, ...]} in descending order
Json poly_to_json(const QuotientPolynomial& p);
QuotientPolynomial poly_from_json(const Json& node, AlgebraParams params);

std::string rep_name(RepType rep);
RepType rep_from_name(const std::string& name);

// {"d","j","rep","multiplicity","polynomials","certified"}; a standard basis
// flattens each pair into two consecutive polynomials
Json basis_to_json(const BasisReport& b);
BasisReport basis_from_json(const Json& node);
std::string basis_to_text(const BasisReport& b);
std::string basis_to_latex(const BasisReport& b);

// {"d","rows":[{"j","mult","triv","sign","st","agree"}, ...]}
Json table_to_json(const MultiplicityTable& t);
std::string table_to_text(const MultiplicityTable& t);
std::string table_to_latex(const MultiplicityTable& t);

std::string hilbert_to_text(const std::vector<long long>& h);
std::string weights_to_text(const std::vector<int>& w);
std::string decompose_to_text(const Sl2Decomposition& dec);

}  // namespace amci
