#include "amci/render.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace amci {

namespace {

enum class Style { Text, Latex };

std::string variable(int index, int exponent, Style style) {
  std::ostringstream oss;
  if (style == Style::Text) {
    oss << 'x' << index + 1;
    if (exponent > 1) oss << '^' << exponent;
  } else {
    oss << "x_" << index + 1;
    if (exponent > 1) oss << "^{" << exponent << '}';
  }
  return oss.str();
}

std::string magnitude(const Rat& c, Style style) {
  Rat a = abs(c);
  if (style == Style::Latex && a.get_den() != 1) {
    std::ostringstream oss;
    oss << "\\frac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << '}';
    return oss.str();
  }
  return a.get_str();
}

std::string render_poly(const QuotientPolynomial& p, Style style) {
  if (p.is_zero()) return "0";
  std::ostringstream oss;
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    bool negative = c < 0;
    if (first)
      oss << (negative ? "-" : "");
    else
      oss << (negative ? " - " : " + ");
    first = false;

    std::string factors;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty() && style == Style::Text) factors += '*';
      factors += variable(static_cast<int>(i), m[i], style);
    }

    Rat a = abs(c);
    if (factors.empty()) {
      oss << magnitude(c, style);
    } else if (a == 1) {
      oss << factors;
    } else {
      oss << magnitude(c, style) << (style == Style::Text ? "*" : "") << factors;
    }
  }
  return oss.str();
}

}  // namespace

std::string poly_to_text(const QuotientPolynomial& p) { return render_poly(p, Style::Text); }

std::string poly_to_latex(const QuotientPolynomial& p) { return render_poly(p, Style::Latex); }

Json poly_to_json(const QuotientPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms) {
    Json term;
    term["monomial"] = m;
    term["coeff"] = rat_to_string(c);
    terms.push_back(std::move(term));
  }
  Json out;
  out["terms"] = std::move(terms);
  return out;
}

QuotientPolynomial poly_from_json(const Json& node, AlgebraParams params) {
  if (!node.is_object() || !node.contains("terms") || !node["terms"].is_array())
    throw std::invalid_argument("polynomial node needs a \"terms\" array");
  QuotientPolynomial p(params);
  for (const auto& term : node["terms"]) {
    Monomial m = term.at("monomial").get<Monomial>();
    p.add_term(m, rat_from_string(term.at("coeff").get<std::string>()));
  }
  return p;
}

std::string rep_name(RepType rep) {
  switch (rep) {
    case RepType::Trivial: return "trivial";
    case RepType::Sign: return "sign";
    case RepType::Standard: return "standard";
  }
  throw std::invalid_argument("unknown representation tag");
}

RepType rep_from_name(const std::string& name) {
  if (name == "trivial") return RepType::Trivial;
  if (name == "sign") return RepType::Sign;
  if (name == "standard") return RepType::Standard;
  throw std::invalid_argument("representation must be trivial, sign or standard");
}

Json basis_to_json(const BasisReport& b) {
  Json out;
  out["d"] = b.d;
  out["j"] = b.j;
  out["rep"] = rep_name(b.rep);
  out["multiplicity"] = b.multiplicity();
  Json polys = Json::array();
  if (b.rep == RepType::Standard) {
    for (const auto& pr : b.pairs) {
      polys.push_back(poly_to_json(pr.p1));
      polys.push_back(poly_to_json(pr.p2));
    }
  } else {
    for (const auto& p : b.polys) polys.push_back(poly_to_json(p));
  }
  out["polynomials"] = std::move(polys);
  out["certified"] = b.certified();
  return out;
}

BasisReport basis_from_json(const Json& node) {
  BasisReport b;
  b.d = node.at("d").get<int>();
  b.j = node.at("j").get<int>();
  b.rep = rep_from_name(node.at("rep").get<std::string>());
  AlgebraParams params{3, b.d};

  const Json& polys = node.at("polynomials");
  long long mult = node.at("multiplicity").get<long long>();
  if (b.rep == RepType::Standard) {
    if (polys.size() != static_cast<size_t>(2 * mult))
      throw std::invalid_argument("a standard basis carries two polynomials per member");
    for (size_t i = 0; i + 1 < polys.size(); i += 2)
      b.pairs.push_back(StandardPair{poly_from_json(polys[i], params),
                                     poly_from_json(polys[i + 1], params)});
  } else {
    if (polys.size() != static_cast<size_t>(mult))
      throw std::invalid_argument("multiplicity does not match the polynomial count");
    for (const auto& p : polys) b.polys.push_back(poly_from_json(p, params));
  }

  // the file format only keeps the aggregate flag
  bool certified = node.at("certified").get<bool>();
  b.certs.assign(static_cast<size_t>(mult), BasisElementCert{certified, certified});
  b.independent = certified;
  return b;
}

std::string basis_to_text(const BasisReport& b) {
  std::ostringstream oss;
  oss << rep_name(b.rep) << " component of Ker E in degree " << b.j << " for d = " << b.d
      << '\n';
  oss << "multiplicity " << b.multiplicity() << (b.certified() ? ", certified" : ", NOT certified")
      << '\n';
  if (b.multiplicity() == 0) {
    oss << "no basis elements (multiplicity 0)\n";
    return oss.str();
  }
  if (b.rep == RepType::Standard) {
    for (size_t i = 0; i < b.pairs.size(); ++i) {
      oss << '[' << i + 1 << "] P1 = " << poly_to_text(b.pairs[i].p1) << '\n';
      oss << "    P2 = " << poly_to_text(b.pairs[i].p2) << '\n';
    }
  } else {
    for (size_t i = 0; i < b.polys.size(); ++i)
      oss << '[' << i + 1 << "] " << poly_to_text(b.polys[i]) << '\n';
  }
  return oss.str();
}

std::string basis_to_latex(const BasisReport& b) {
  std::ostringstream oss;
  oss << "% " << rep_name(b.rep) << " component, d = " << b.d << ", j = " << b.j
      << ", multiplicity " << b.multiplicity() << '\n';
  oss << "\\begin{align*}\n";
  if (b.rep == RepType::Standard) {
    for (size_t i = 0; i < b.pairs.size(); ++i) {
      oss << "P_1^{(" << i + 1 << ")} &= " << poly_to_latex(b.pairs[i].p1) << " \\\\\n";
      oss << "P_2^{(" << i + 1 << ")} &= " << poly_to_latex(b.pairs[i].p2) << " \\\\\n";
    }
  } else {
    for (size_t i = 0; i < b.polys.size(); ++i)
      oss << "P^{(" << i + 1 << ")} &= " << poly_to_latex(b.polys[i]) << " \\\\\n";
  }
  oss << "\\end{align*}\n";
  return oss.str();
}

Json table_to_json(const MultiplicityTable& t) {
  Json out;
  out["d"] = t.d;
  Json rows = Json::array();
  for (const auto& cell : t.cells) {
    Json row;
    row["j"] = cell.j;
    row["mult"] = cell.mult;
    row["triv"] = cell.partitions.triv;
    row["sign"] = cell.partitions.sign;
    row["st"] = cell.partitions.st;
    row["agree"] = cell.agree;
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  return out;
}

std::string table_to_text(const MultiplicityTable& t) {
  std::ostringstream oss;
  oss << "d = " << t.d << '\n';
  oss << std::setw(3) << 'j' << std::setw(6) << "mult" << std::setw(6) << "triv"
      << std::setw(6) << "sign" << std::setw(6) << "st" << "  agree" << '\n';
  for (const auto& cell : t.cells) {
    oss << std::setw(3) << cell.j << std::setw(6) << cell.mult << std::setw(6)
        << cell.partitions.triv << std::setw(6) << cell.partitions.sign << std::setw(6)
        << cell.partitions.st << "  " << (cell.agree ? "yes" : "no") << '\n';
  }
  return oss.str();
}

std::string table_to_latex(const MultiplicityTable& t) {
  std::ostringstream oss;
  oss << "% multiplicities for d = " << t.d << '\n';
  oss << "\\begin{tabular}{rrrrrl}\n";
  oss << "$j$ & $\\dim$ & triv & sign & std & agree \\\\\n\\hline\n";
  for (const auto& cell : t.cells) {
    oss << cell.j << " & " << cell.mult << " & " << cell.partitions.triv << " & "
        << cell.partitions.sign << " & " << cell.partitions.st << " & "
        << (cell.agree ? "yes" : "no") << " \\\\\n";
  }
  oss << "\\end{tabular}\n";
  return oss.str();
}

std::string hilbert_to_text(const std::vector<long long>& h) {
  std::ostringstream oss;
  for (size_t i = 0; i < h.size(); ++i) {
    if (i) oss << ' ';
    oss << h[i];
  }
  return oss.str();
}

std::string weights_to_text(const std::vector<int>& w) {
  std::ostringstream oss;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) oss << ' ';
    oss << w[i];
  }
  return oss.str();
}

std::string decompose_to_text(const Sl2Decomposition& dec) {
  std::ostringstream oss;
  bool first = true;
  int m = dec.socle_degree();
  for (size_t j = 0; j < dec.mults.size(); ++j) {
    if (dec.mults[j] == 0) continue;
    if (!first) oss << " + ";
    first = false;
    oss << "V(" << m - 2 * static_cast<int>(j) << ')';
    if (dec.mults[j] > 1) oss << '^' << dec.mults[j];
  }
  if (first) oss << '0';
  return oss.str();
}

}  // namespace amci
