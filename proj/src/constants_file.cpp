#include "psibound/constants_file.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "proof_polynomials_data.hpp"

namespace psibound {

namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back(w);
  }
  return tokens;
}

}  // namespace

const ProofConstants& ProofConstants::builtin() {
  static const ProofConstants instance = parse(detail::kProofPolynomialsText);
  return instance;
}

ProofConstants ProofConstants::parse(std::string_view text) {
  ProofConstants out;
  const auto tokens = tokenize(text);
  std::size_t i = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (i >= tokens.size()) throw DomainError(std::string("constants file: unexpected end, expected ") + what);
    return tokens[i++];
  };
  while (i < tokens.size()) {
    const std::string& keyword = next("'poly'");
    if (keyword != "poly") throw DomainError("constants file: expected 'poly', got '" + keyword + "'");
    ProofPolynomial entry;
    entry.name = next("name");
    entry.source = next("source");
    const std::string& degree_text = next("degree");
    int degree = 0;
    try {
      std::size_t used = 0;
      degree = std::stoi(degree_text, &used);
      if (used != degree_text.size() || degree < 0) throw std::invalid_argument(degree_text);
    } catch (const std::exception&) {
      throw DomainError("constants file: bad degree '" + degree_text + "' for " + entry.name);
    }
    std::vector<BigRational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k <= degree; ++k) {
      const std::string& tok = next("coefficient");
      if (tok == "poly") throw DomainError("constants file: too few coefficients for " + entry.name);
      coeffs.push_back(parse_rational(tok));
    }
    if (i < tokens.size() && tokens[i] != "poly") {
      throw DomainError("constants file: too many coefficients for " + entry.name);
    }
    if (coeffs.back() == 0) throw DomainError("constants file: zero leading coefficient for " + entry.name);
    entry.poly = RationalPolynomial(std::move(coeffs));
    if (out.entries_.count(entry.name)) throw DomainError("constants file: duplicate entry " + entry.name);
    std::string key = entry.name;
    out.entries_.emplace(std::move(key), std::move(entry));
  }
  return out;
}

ProofConstants ProofConstants::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open constants file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const ProofPolynomial& ProofConstants::at(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw DomainError("constants file has no polynomial named " + name);
  return it->second;
}

}  // namespace psibound
