#include "qmf/io.hpp"

#include <numeric>

#include <json.hpp>

#include "qmf/errors.hpp"

namespace qmf {

std::string to_json(const QSeries& s) {
  // written by hand so the byte layout is fixed
  std::string out = "{\"d\": " + std::to_string(s.d()) + ", \"k0\": " + std::to_string(s.k0()) +
                    ", \"N\": " + std::to_string(s.N()) + ", \"coeffs\": [";
  const auto& c = s.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + c[i].str() + "\"";
  }
  return out + "]}";
}

QSeries series_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("series json: ") + e.what());
  }
  auto integer = [&](const char* key) -> long {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) throw ParseError(std::string("series json: missing integer \"") + key + "\"");
    return j[key].get<long>();
  };
  const long d = integer("d"), k0 = integer("k0"), N = integer("N");
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw ParseError("series json: missing \"coeffs\" array");
  const auto& arr = j["coeffs"];
  if (N < k0 || static_cast<long>(arr.size()) != N - k0 + 1) throw ParseError("series json: coeffs length does not match k0..N");
  std::vector<Rational> c;
  c.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_string()) throw ParseError("series json: coefficients must be strings");
    c.push_back(Rational::parse(v.get<std::string>()));
  }
  if (d <= 0 || d > 72) throw ParseError("series json: bad lattice " + std::to_string(d));
  return QSeries(static_cast<int>(d), k0, N, std::move(c));
}

namespace {

std::string monomial(long k, int d) {
  const long g = std::gcd(k < 0 ? -k : k, static_cast<long>(d));
  const long p = k / g, r = d / g;
  if (p == 0) return "";
  if (r == 1) {
    if (p == 1) return "q";
    if (p > 0) return "q^" + std::to_string(p);
    return "q^(" + std::to_string(p) + ")";
  }
  return "q^(" + std::to_string(p) + "/" + std::to_string(r) + ")";
}

}  // namespace

std::string pretty(const QSeries& s) {
  std::string out;
  const auto& c = s.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Rational& v = c[i];
    if (v.is_zero()) continue;
    const std::string m = monomial(s.k0() + static_cast<long>(i), s.d());
    const bool neg = v.sign() < 0;
    const Rational a = v.abs();
    std::string body;
    if (m.empty()) body = a.str();
    else if (a == Rational(1)) body = m;
    else body = a.str() + "*" + m;
    if (out.empty()) out = (neg ? "-" : "") + body;
    else out += (neg ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace qmf
