#include "macq/algebra.hpp"

#include "macq/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace macq {

MPoly::MPoly(long c) {
    if (c != 0) terms_.emplace(Exponent{}, mpz_class(c));
}

MPoly::MPoly(const mpz_class& c) {
    if (c != 0) terms_.emplace(Exponent{}, c);
}

MPoly MPoly::monomial(const mpz_class& c, Exponent e) {
    MPoly p;
    p.add_term(c, e);
    return p;
}

MPoly MPoly::var(Var v, int power) {
    Exponent e;
    e[v] = power;
    return monomial(1, e);
}

mpz_class MPoly::coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int MPoly::degree(Var v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
}

int MPoly::min_degree(Var v) const {
    if (terms_.empty()) return 0;
    int d = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_) d = std::min(d, e[v]);
    return d;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

bool MPoly::has_nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

void MPoly::add_term(const mpz_class& c, Exponent e) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(-c, e);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ca * cb, ea + eb);
    return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly result(1);
    MPoly base = *this;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

namespace {

std::string monomial_body(const Exponent& e, const char* joiner, bool latex) {
    std::string out;
    auto factor = [&](const char* name, int k) {
        if (k == 0) return;
        if (!out.empty()) out += joiner;
        out += name;
        if (k != 1) {
            out += '^';
            if (latex && k > 9) out += '{' + std::to_string(k) + '}';
            else out += std::to_string(k);
        }
    };
    factor("t", e.t);
    factor("q", e.q);
    factor("u", e.u);
    return out;
}

std::string render(const MPoly::TermMap& terms, bool latex) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string body = monomial_body(e, latex ? "" : "*", latex);
        if (body.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += body;
        } else {
            out += mag.get_str() + (latex ? "" : "*") + body;
        }
    }
    return out;
}

} // namespace

std::string MPoly::to_string() const { return render(terms_, false); }
std::string MPoly::to_latex() const { return render(terms_, true); }

MPoly MPoly::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Error(ErrorKind::InvalidInput, "empty polynomial string");

    MPoly result;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::InvalidInput, "cannot parse polynomial '" + std::string(text) + "': " + why);
    };
    auto read_int = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    };

    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            fail("expected '+' or '-'");
        }
        mpz_class coeff(1);
        Exponent e;
        bool have_factor = false;
        bool expect_vars = true;
        std::string digits = read_int();
        if (!digits.empty()) {
            coeff = mpz_class(digits);
            have_factor = true;
            if (pos < s.size() && s[pos] == '*') ++pos;
            else if (pos < s.size() && s[pos] != '+' && s[pos] != '-') fail("expected '*'");
            else expect_vars = false;
        }
        while (expect_vars && pos < s.size() && (s[pos] == 'q' || s[pos] == 't' || s[pos] == 'u')) {
            Var v = s[pos] == 'q' ? Var::q : (s[pos] == 't' ? Var::t : Var::u);
            ++pos;
            int k = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::string kd = read_int();
                if (kd.empty()) fail("missing exponent");
                k = std::stoi(kd);
            }
            e[v] += k;
            have_factor = true;
            if (pos < s.size() && s[pos] == '*') ++pos;
            else break;
        }
        if (!have_factor) fail("empty term");
        result.add_term(coeff * sign, e);
    }
    return result;
}

MPoly qint(int n) {
    if (n < 0) throw Error(ErrorKind::InvalidInput, "qint of a negative integer");
    MPoly r;
    for (int k = 0; k < n; ++k) r.add_term(1, Exponent{k, 0, 0});
    return r;
}

std::optional<MPoly> try_exact_divide(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) return std::nullopt;
    // Repeated cancellation of the leading term; the term order is lex on
    // (t, q, u), a monomial order, so the leading monomial strictly decreases.
    const auto& [lead_e, lead_c] = *b.terms().rbegin();
    MPoly rem = a;
    MPoly quot;
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms().rbegin();
        Exponent d{re.q - lead_e.q, re.t - lead_e.t, re.u - lead_e.u};
        if (d.q < 0 || d.t < 0 || d.u < 0) return std::nullopt;
        if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
        mpz_class c = rc / lead_c;
        MPoly step = MPoly::monomial(c, d);
        quot += step;
        rem -= step * b;
    }
    return quot;
}

MPoly exact_divide(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "division by the zero polynomial");
    auto r = try_exact_divide(a, b);
    if (!r) throw Error(ErrorKind::NonDivisible, "(" + a.to_string() + ") / (" + b.to_string() + ")");
    return *std::move(r);
}

MPoly evaluate(const MPoly& p, const Assignment& at) {
    // Powers of the substituted values are cached per exponent.
    std::map<std::pair<int, int>, MPoly> cache;
    auto power = [&](Var v, int k) -> const MPoly& {
        auto key = std::make_pair(static_cast<int>(v), k);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const MPoly& base = v == Var::q ? *at.q : (v == Var::t ? *at.t : *at.u);
        return cache.emplace(key, base.pow(static_cast<unsigned>(k))).first->second;
    };
    MPoly result;
    for (const auto& [e, c] : p.terms()) {
        Exponent kept = e;
        MPoly factor(1);
        for (Var v : {Var::q, Var::t, Var::u}) {
            const auto& slot = v == Var::q ? at.q : (v == Var::t ? at.t : at.u);
            if (slot && e[v] > 0) {
                factor *= power(v, e[v]);
                kept[v] = 0;
            }
        }
        result += factor * MPoly::monomial(c, kept);
    }
    return result;
}

RatMPoly::RatMPoly(const MPoly& p) {
    for (const auto& [e, c] : p.terms()) terms_.emplace(e, mpq_class(c));
}

void RatMPoly::add_term(const mpq_class& c, Exponent e) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RatMPoly& RatMPoly::operator+=(const RatMPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
}

RatMPoly& RatMPoly::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

RatMPoly operator*(const RatMPoly& a, const MPoly& b) {
    RatMPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms()) r.add_term(ca * mpq_class(cb), ea + eb);
    return r;
}

std::optional<MPoly> RatMPoly::to_integral() const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
        if (c.get_den() != 1) return std::nullopt;
        r.add_term(c.get_num(), e);
    }
    return r;
}

std::string RatMPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.get_str() << ")";
        std::string body = monomial_body(e, "*", false);
        if (!body.empty()) out << "*" << body;
    }
    return out.str();
}

} // namespace macq
