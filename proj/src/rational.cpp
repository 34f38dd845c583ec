#include "lieder/rational.hpp"

#include "lieder/error.hpp"

#include <cctype>
#include <sstream>

namespace lieder {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

Rat parse_rat(const std::string& raw) {
    std::string s = strip(raw);
    std::string num = s, den = "1";
    if (size_t slash = s.find('/'); slash != std::string::npos) {
        num = strip(s.substr(0, slash));
        den = strip(s.substr(slash + 1));
    }
    if (!valid_integer_token(num) || !valid_integer_token(den))
        fail(ErrorKind::ParseError, "bad rational literal '" + raw + "'");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        fail(ErrorKind::ParseError, "bad rational literal '" + raw + "'");
    if (r.get_den() == 0)
        fail(ErrorKind::ParseError, "zero denominator in '" + raw + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& x) {
    std::ostringstream os;
    os << x; // gmpxx prints canonical "p" or "p/q"
    return os.str();
}

bool is_zero_vec(const Vec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

Vec zero_vec(int n) { return Vec(size_t(n)); }

Vec unit_vec(int n, int i) {
    Vec v(size_t(n), Rat(0));
    v[size_t(i)] = 1;
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    Vec out(a);
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec out(a);
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vec scale(const Rat& s, const Vec& v) {
    Vec out(v);
    for (Rat& x : out) x *= s;
    return out;
}

std::string vec_str(const Vec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_str(v[i]);
    }
    return out + ")";
}

} // namespace lieder
