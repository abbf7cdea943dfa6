#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "stanley/ideal.hpp"
#include "stanley/monomial.hpp"

namespace stanley {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Monomials are written `x1^2*x3`; the exponent 1 is implicit and the
// monomial 1 is written `1`.
Monomial parse_monomial(const Ring& ring, std::string_view text);
std::string format_monomial(const Ring& ring, const Monomial& m);
std::string format_monomial(const Monomial& m);

// Text ideal files: an `n=<count>` header line followed by one monomial per
// line. Blank lines and `#` comments are ignored. Without a header the ring
// size is the largest `x<i>` index that occurs.
MonomialIdeal parse_ideal_text(std::string_view text);
std::string format_ideal_text(const MonomialIdeal& ideal);

// JSON ideals: {"n": 3, "generators": [[2,0,1], ...]}.
MonomialIdeal ideal_from_json(const nlohmann::json& j);
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal parse_ideal_json(std::string_view text);
std::string format_ideal_json(const MonomialIdeal& ideal);

Monomial monomial_from_json(const nlohmann::json& j, std::size_t n);
nlohmann::json monomial_to_json(const Monomial& m);

// Chooses the JSON or text parser by the first non-blank character.
MonomialIdeal parse_ideal(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace stanley
