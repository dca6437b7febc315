#include "swelling/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace swelling {

namespace {

[[noreturn]] void carrier_mismatch(const char* who) {
  throw std::invalid_argument(std::string(who) + ": element does not belong to the group's carrier");
}

const std::array<std::pair<const char*, std::array<std::uint8_t, 3>>, 6> kPerm3Table = {{
    {"e", {0, 1, 2}},
    {"(1 2)", {1, 0, 2}},
    {"(1 3)", {2, 1, 0}},
    {"(2 3)", {0, 2, 1}},
    {"(1 2 3)", {1, 2, 0}},
    {"(1 3 2)", {2, 0, 1}},
}};

}  // namespace

std::size_t GroupDescriptor::order() const {
  switch (carrier) {
    case Carrier::CyclicMod: return mod;
    case Carrier::Perm3: return 6;
    default: throw std::domain_error("GroupDescriptor::order: infinite carrier");
  }
}

GroupDescriptor parse_group_spec(std::string_view text) {
  if (text == "S3") return {Carrier::Perm3};
  if (text == "Q") return {Carrier::RationalAdd};
  if (text == "QSqrt2") return {Carrier::QuadAdd};
  auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    std::string_view head = text.substr(0, colon);
    std::string tail(text.substr(colon + 1));
    try {
      unsigned long v = std::stoul(tail);
      if (head == "Zmod" && v >= 1)
        return {Carrier::CyclicMod, static_cast<std::uint32_t>(v), 0};
      if (head == "Zn" && v >= 1 && v <= 4)
        return {Carrier::IntVector, 0, static_cast<std::uint32_t>(v)};
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("parse_group_spec: bad group spec '" + std::string(text) + "'");
}

std::string format_group_spec(const GroupDescriptor& g) {
  switch (g.carrier) {
    case Carrier::CyclicMod: return "Zmod:" + std::to_string(g.mod);
    case Carrier::IntVector: return "Zn:" + std::to_string(g.dim);
    case Carrier::Perm3: return "S3";
    case Carrier::RationalAdd: return "Q";
    case Carrier::QuadAdd: return "QSqrt2";
  }
  throw std::logic_error("format_group_spec: bad carrier");
}

int compare_elements(const GroupElement& a, const GroupElement& b) {
  if (a.index() != b.index())
    throw std::invalid_argument("compare_elements: mixed carriers");
  return std::visit(
      [&](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, CyclicElem>) {
          return x.r < y.r ? -1 : (x.r == y.r ? 0 : 1);
        } else if constexpr (std::is_same_v<T, VecElem>) {
          if (x.c.size() != y.c.size())
            throw std::invalid_argument("compare_elements: mixed vector dimensions");
          for (std::size_t i = 0; i < x.c.size(); ++i) {
            if (x.c[i] != y.c[i]) return x.c[i] < y.c[i] ? -1 : 1;
          }
          return 0;
        } else if constexpr (std::is_same_v<T, PermElem>) {
          return x.img < y.img ? -1 : (x.img == y.img ? 0 : 1);
        } else if constexpr (std::is_same_v<T, Rational>) {
          return x < y ? -1 : (x == y ? 0 : 1);
        } else {
          return qs_cmp(x, y);
        }
      },
      a);
}

bool element_less(const GroupElement& a, const GroupElement& b) {
  return compare_elements(a, b) < 0;
}

bool element_eq(const GroupElement& a, const GroupElement& b) {
  return compare_elements(a, b) == 0;
}

bool element_in_carrier(const GroupDescriptor& g_desc, const GroupElement& g) {
  switch (g_desc.carrier) {
    case Carrier::CyclicMod: {
      auto* e = std::get_if<CyclicElem>(&g);
      return e && e->r < g_desc.mod;
    }
    case Carrier::IntVector: {
      auto* e = std::get_if<VecElem>(&g);
      return e && e->c.size() == g_desc.dim;
    }
    case Carrier::Perm3: {
      auto* e = std::get_if<PermElem>(&g);
      if (!e) return false;
      std::array<bool, 3> seen{};
      for (auto v : e->img) {
        if (v > 2 || seen[v]) return false;
        seen[v] = true;
      }
      return true;
    }
    case Carrier::RationalAdd: return std::holds_alternative<Rational>(g);
    case Carrier::QuadAdd: return std::holds_alternative<QuadScalar>(g);
  }
  return false;
}

GroupElement group_id(const GroupDescriptor& g) {
  switch (g.carrier) {
    case Carrier::CyclicMod: return CyclicElem{0};
    case Carrier::IntVector: return VecElem{std::vector<BigInt>(g.dim, BigInt(0))};
    case Carrier::Perm3: return PermElem{};
    case Carrier::RationalAdd: return Rational(0);
    case Carrier::QuadAdd: return QuadScalar{};
  }
  throw std::logic_error("group_id: bad carrier");
}

GroupElement group_op(const GroupDescriptor& g, const GroupElement& x, const GroupElement& y) {
  if (!element_in_carrier(g, x) || !element_in_carrier(g, y)) carrier_mismatch("group_op");
  switch (g.carrier) {
    case Carrier::CyclicMod: {
      auto a = std::get<CyclicElem>(x).r, b = std::get<CyclicElem>(y).r;
      return CyclicElem{(a + b) % g.mod};
    }
    case Carrier::IntVector: {
      const auto& a = std::get<VecElem>(x).c;
      const auto& b = std::get<VecElem>(y).c;
      VecElem out;
      out.c.reserve(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) out.c.push_back(a[i] + b[i]);
      return out;
    }
    case Carrier::Perm3: {
      const auto& f = std::get<PermElem>(x).img;
      const auto& h = std::get<PermElem>(y).img;
      PermElem out;  // composition: apply y first, then x
      for (int i = 0; i < 3; ++i) out.img[i] = f[h[i]];
      return out;
    }
    case Carrier::RationalAdd:
      return Rational(std::get<Rational>(x) + std::get<Rational>(y));
    case Carrier::QuadAdd:
      return std::get<QuadScalar>(x) + std::get<QuadScalar>(y);
  }
  throw std::logic_error("group_op: bad carrier");
}

GroupElement group_inv(const GroupDescriptor& g, const GroupElement& x) {
  if (!element_in_carrier(g, x)) carrier_mismatch("group_inv");
  switch (g.carrier) {
    case Carrier::CyclicMod: {
      auto a = std::get<CyclicElem>(x).r;
      return CyclicElem{a == 0 ? 0u : g.mod - a};
    }
    case Carrier::IntVector: {
      VecElem out;
      for (const auto& v : std::get<VecElem>(x).c) out.c.push_back(-v);
      return out;
    }
    case Carrier::Perm3: {
      const auto& f = std::get<PermElem>(x).img;
      PermElem out;
      for (int i = 0; i < 3; ++i) out.img[f[i]] = static_cast<std::uint8_t>(i);
      return out;
    }
    case Carrier::RationalAdd: return Rational(-std::get<Rational>(x));
    case Carrier::QuadAdd: return -std::get<QuadScalar>(x);
  }
  throw std::logic_error("group_inv: bad carrier");
}

std::vector<GroupElement> all_elements(const GroupDescriptor& g) {
  std::vector<GroupElement> out;
  switch (g.carrier) {
    case Carrier::CyclicMod:
      for (std::uint32_t r = 0; r < g.mod; ++r) out.push_back(CyclicElem{r});
      break;
    case Carrier::Perm3:
      for (const auto& [name, img] : kPerm3Table) out.push_back(PermElem{img});
      std::sort(out.begin(), out.end(), element_less);
      break;
    default:
      throw std::domain_error("all_elements: infinite carrier");
  }
  return out;
}

GroupElement parse_element(const GroupDescriptor& g, std::string_view text) {
  // Trim outer whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("parse_element: empty element");
  switch (g.carrier) {
    case Carrier::CyclicMod: {
      Rational v = parse_rational(text);
      if (denominator(v) != 1)
        throw std::invalid_argument("parse_element: Zmod element must be an integer");
      const BigInt r = numerator(v);
      if (r < 0 || r >= g.mod)
        throw std::invalid_argument("parse_element: Zmod residue out of range: " +
                                    std::string(text));
      return CyclicElem{static_cast<std::uint32_t>(r)};
    }
    case Carrier::IntVector: {
      std::string_view body = text;
      if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
      VecElem out;
      std::size_t start = 0;
      std::string s(body);
      while (start <= s.size()) {
        auto comma = s.find(',', start);
        std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        Rational v = parse_rational(part);
        if (denominator(v) != 1)
          throw std::invalid_argument("parse_element: Zn coordinates must be integers");
        out.c.push_back(numerator(v));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (out.c.size() != g.dim)
        throw std::invalid_argument("parse_element: expected " + std::to_string(g.dim) + " coordinates");
      return out;
    }
    case Carrier::Perm3: {
      std::string norm;
      for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) norm.push_back(c);
      for (const auto& [name, img] : kPerm3Table) {
        std::string n;
        for (const char* p = name; *p; ++p)
          if (*p != ' ') n.push_back(*p);
        if (n == norm) return PermElem{img};
      }
      throw std::invalid_argument("parse_element: bad S3 element '" + std::string(text) + "'");
    }
    case Carrier::RationalAdd: return parse_rational(text);
    case Carrier::QuadAdd: return parse_quad(text);
  }
  throw std::logic_error("parse_element: bad carrier");
}

std::string format_element(const GroupDescriptor& g, const GroupElement& e) {
  if (!element_in_carrier(g, e)) carrier_mismatch("format_element");
  switch (g.carrier) {
    case Carrier::CyclicMod: return std::to_string(std::get<CyclicElem>(e).r);
    case Carrier::IntVector: {
      std::string out = "(";
      const auto& c = std::get<VecElem>(e).c;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += c[i].str();
      }
      return out + ")";
    }
    case Carrier::Perm3: {
      const auto& img = std::get<PermElem>(e).img;
      for (const auto& [name, tbl] : kPerm3Table)
        if (tbl == img) return name;
      throw std::logic_error("format_element: invalid permutation");
    }
    case Carrier::RationalAdd: return format_rational(std::get<Rational>(e));
    case Carrier::QuadAdd: return format_quad(std::get<QuadScalar>(e));
  }
  throw std::logic_error("format_element: bad carrier");
}

std::vector<GroupElement> parse_element_list(const GroupDescriptor& g, std::string_view text) {
  std::vector<GroupElement> out;
  // Allow an empty list.
  bool all_space = true;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) all_space = false;
  if (all_space) return out;

  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parse_element(g, text.substr(start, i - start)));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

}  // namespace swelling
