#include <minorb/names.hpp>

#include <minorb/descriptors.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace minorb {

namespace {

[[noreturn]] void fail(const std::string& token, const std::string& hint = {}) {
  std::string msg = "cannot parse algebra name '" + token + "'";
  if (!hint.empty()) msg += "; " + hint;
  throw std::invalid_argument(msg);
}

std::string normalize(const std::string& in) {
  std::string out;
  for (char c : in) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  // Documented alias: a spelled-out star ("su-star-4" for su*_4).  Only the
  // dashed form is an alias; bare '-' stays (signature minus, "e6(-14)").
  for (size_t i; (i = out.find("-star-")) != std::string::npos;)
    out.replace(i, 6, "*");
  return out;
}

// Splits "base[*][_]((args))" into base, star flag and integer args, after a
// possible "(r)"/"(c)" suffix has been removed by the caller.
struct ParsedName {
  std::string base;
  bool star = false;
  std::vector<long long> args;
};

ParsedName split_name(const std::string& t, const std::string& orig) {
  ParsedName p;
  size_t i = 0;
  while (i < t.size() && std::isalpha(static_cast<unsigned char>(t[i]))) p.base += t[i++];
  if (i < t.size() && t[i] == '*') {
    p.star = true;
    ++i;
  }
  if (i < t.size() && t[i] == '_') ++i;
  bool parens = false;
  if (i < t.size() && t[i] == '(') {
    parens = true;
    ++i;
  }
  while (i < t.size()) {
    bool neg = false;
    if (t[i] == '-') {
      neg = true;
      ++i;
    }
    if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i]))) fail(orig);
    long long v = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
      v = 10 * v + (t[i++] - '0');
    p.args.push_back(neg ? -v : v);
    if (i < t.size() && t[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  if (parens) {
    if (i >= t.size() || t[i] != ')') fail(orig);
    ++i;
  }
  if (i != t.size()) fail(orig);
  return p;
}

RealReductiveType parse_token(const std::string& token) {
  const std::string orig = token;
  std::string t = token;
  RealReductiveType r;
  if (t.empty()) fail(orig);
  if (t == "0") return r;
  if (t == "r") return r.add_center_split(1);
  if (t == "c") return r.add_center_complex(1);
  if (t == "u_1" || t == "u(1)" || t == "u1") return r.add_center_compact(1);

  // Exceptional families.
  for (const char* base : {"e6", "e7", "e8", "f4", "g2"}) {
    if (t.rfind(base, 0) != 0) continue;
    const Family fam = base[0] == 'e' ? Family::E : base[0] == 'f' ? Family::F : Family::G;
    const int rank = base[1] - '0';
    std::string rest = t.substr(2);
    if (rest.empty()) return r.add_compact_exceptional(fam, rank);
    if (rest == "(c)") return r.add(RealForm::complex_simple(CartanType(fam, rank)));
    if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')')
      rest = rest.substr(1, rest.size() - 2);
    else if (rest.front() == '_')
      rest = rest.substr(1);
    bool neg = false;
    size_t i = 0;
    if (i < rest.size() && rest[i] == '-') {
      neg = true;
      ++i;
    }
    if (i >= rest.size() ||
        !std::all_of(rest.begin() + static_cast<long>(i), rest.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(orig, "exceptional forms look like 'e6(2)', 'e6(-14)', 'f4(-20)'");
    int sig = std::stoi(rest.substr(i));
    return r.add(RealForm::exceptional(fam, rank, neg ? -sig : sig));
  }

  char field = 0;
  if (t.size() >= 3 && t.compare(t.size() - 3, 3, "(r)") == 0) {
    field = 'R';
    t = t.substr(0, t.size() - 3);
  } else if (t.size() >= 3 && t.compare(t.size() - 3, 3, "(c)") == 0) {
    field = 'C';
    t = t.substr(0, t.size() - 3);
  }

  ParsedName p = split_name(t, orig);
  const long long a0 = p.args.empty() ? 0 : p.args[0];
  const long long a1 = p.args.size() > 1 ? p.args[1] : 0;
  for (long long v : p.args)
    if (v < 0) fail(orig);

  if (p.base == "sl" && !p.star && p.args.size() == 1) {
    if (field == 'R') return rt::sl_R(a0);
    if (field == 'C') return rt::sl_C(a0);
    fail(orig, "write 'sl_" + std::to_string(a0) + "(R)' or 'sl_" + std::to_string(a0) + "(C)'");
  }
  if (p.base == "gl" && !p.star && p.args.size() == 1 && field != 0) {
    if (field == 'R') return rt::sl_R(a0) + rt::center_R();
    return rt::sl_C(a0) + rt::center_C();
  }
  if (p.base == "su" && p.star && p.args.size() == 1 && field == 0) {
    if (a0 % 2) fail(orig, "su*_n needs even n");
    return rt::su_star(a0);
  }
  if (p.base == "su" && !p.star && field == 0) {
    if (p.args.size() == 1) return rt::su(a0, 0);
    if (p.args.size() == 2) return rt::su(a0, a1);
  }
  if (p.base == "so" && p.star && p.args.size() == 1 && field == 0) {
    if (a0 % 2) fail(orig, "so*_n needs even n");
    return rt::so_star(a0);
  }
  if (p.base == "so" && !p.star) {
    if (p.args.size() == 1 && field == 'C') return rt::so_C(a0);
    if (p.args.size() == 1 && field == 0) return rt::so(a0, 0);
    if (p.args.size() == 2 && field == 0) return rt::so(a0, a1);
  }
  if (p.base == "sp" && !p.star && p.args.size() == 1) {
    if (field == 'R') return rt::sp_R(a0);
    if (field == 'C') return rt::sp_C(a0);
    return rt::sp(a0, 0);
  }
  if (p.base == "sp" && !p.star && p.args.size() == 2 && field == 0) return rt::sp(a0, a1);
  fail(orig,
       "expected names like 'sl_3(R)', 'su*_6', 'su_{4,2}', 'so_{5,4}', 'sp_3(R)', "
       "'sp_{2,1}', 'so*_{10}', 'e6(-14)', 'sl_2(C)', compact 'su_2'/'so_9', or 'R'/'C'");
}

}  // namespace

RealForm parse_real_form(const std::string& s) {
  RealReductiveType r = parse_token(normalize(s));
  const Int centers = r.center_compact() + r.center_split() + r.center_complex();
  if (r.noncompact().size() == 1 && r.compact().empty() && centers == 0)
    return r.noncompact()[0];
  if (r.noncompact().empty() && r.compact().empty())
    throw std::invalid_argument("'" + s +
                                "' is abelian or zero; expected a non-compact simple "
                                "real form");
  if (r.noncompact().empty())
    throw std::invalid_argument("'" + s +
                                "' is compact; expected a non-compact simple real form");
  throw std::invalid_argument("'" + s + "' is not simple (it is " + r.name() + ")");
}

RealReductiveType parse_real_reductive(const std::string& s) {
  const std::string t = normalize(s);
  if (t.empty()) throw std::invalid_argument("empty algebra descriptor");
  RealReductiveType out;
  size_t start = 0;
  while (start <= t.size()) {
    size_t plus = t.find('+', start);
    // '+' inside parentheses does not occur in this grammar.
    std::string token = t.substr(start, plus == std::string::npos ? plus : plus - start);
    if (token.empty()) throw std::invalid_argument("empty summand in '" + s + "'");
    out.add(parse_token(token));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

}  // namespace minorb
