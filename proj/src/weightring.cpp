#include "cjt/weightring.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace cjt {

std::string Letter::str() const {
    return std::to_string(index) + (barred ? "b" : "");
}

std::string Letter::json_str() const {
    return std::to_string(index) + (barred ? "bar" : "");
}

Letter Letter::parse(std::string_view s) {
    bool barred = false;
    if (s.size() > 3 && s.substr(s.size() - 3) == "bar") {
        barred = true;
        s.remove_suffix(3);
    } else if (s.size() > 1 && (s.back() == 'b' || s.back() == 'B')) {
        barred = true;
        s.remove_suffix(1);
    }
    size_t pos = 0;
    int idx = std::stoi(std::string(s), &pos);
    if (pos != s.size() || idx < 1) throw std::invalid_argument("bad letter: " + std::string(s));
    return Letter{idx, barred};
}

std::string Variable::str() const {
    std::ostringstream os;
    os << "z[" << letter.str() << "," << shift << "]";
    return os.str();
}

Monomial& Monomial::operator*=(const Monomial& other) {
    std::vector<std::pair<Variable, int>> merged;
    merged.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), ae = factors_.end();
    auto b = other.factors_.begin(), be = other.factors_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            merged.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    factors_ = std::move(merged);
    return *this;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, p] : factors_) d += p;
    return d;
}

Monomial Monomial::shifted(int d) const {
    Monomial out;
    out.factors_ = factors_;
    for (auto& [v, p] : out.factors_) v.shift += d;
    return out;  // order is preserved: shifting is monotone in the shift component
}

bool operator<(const Monomial& a, const Monomial& b) {
    return a.factors_ < b.factors_;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, p] : factors_) {
        if (!first) os << " ";
        first = false;
        os << v.str();
        if (p != 1) os << "^" << p;
    }
    return os.str();
}

Polynomial Polynomial::constant(Int c) {
    Polynomial p;
    p.add_term(Monomial::one(), c);
    return p;
}

Polynomial Polynomial::monomial(Monomial m, Int c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::shifted(int d) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.add_term(m.shifted(d), c);
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int ac = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (ac != 1 || m.is_one()) {
            os << ac;
            if (!m.is_one()) os << " ";
        }
        if (!m.is_one()) os << m.str();
    }
    return os.str();
}

FreeLaurent FreeLaurent::constant(Int c) {
    FreeLaurent f;
    f.add_term({}, c);
    return f;
}

bool FreeLaurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

void FreeLaurent::add_term(const Key& k, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FreeLaurent& FreeLaurent::operator+=(const FreeLaurent& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
}

FreeLaurent& FreeLaurent::operator-=(const FreeLaurent& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
}

namespace {

FreeLaurent::Key key_mul(const FreeLaurent::Key& a, const FreeLaurent::Key& b) {
    FreeLaurent::Key out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), ie = a.end();
    auto j = b.begin(), je = b.end();
    while (i != ie || j != je) {
        if (j == je || (i != ie && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == ie || j->first < i->first) {
            out.push_back(*j++);
        } else {
            int e = i->second + j->second;
            if (e != 0) out.emplace_back(i->first, e);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

FreeLaurent operator*(const FreeLaurent& a, const FreeLaurent& b) {
    FreeLaurent out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add_term(key_mul(ka, kb), ca * cb);
    return out;
}

std::string FreeLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Int ac = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (ac != 1 || k.empty()) os << ac;
        for (const auto& [vk, e] : k) {
            os << " z[" << vk.first << "," << vk.second << "]";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

FreeLaurent eliminate_barred(const Variable& v, int n) {
    if (v.letter.index < 1 || v.letter.index > n)
        throw std::out_of_range("letter index out of range 1..n");
    std::map<std::pair<int, int>, int> exps;
    if (!v.letter.barred) {
        exps[{v.letter.index, v.shift}] += 1;
    } else {
        // z_{ibar,b} = prod_{j=1..i} z_{j-1, b+2n-2j+4} / z_{j, b+2n-2j+4}, z_0 = 1
        const int b = v.shift;
        for (int j = v.letter.index; j >= 1; --j) {
            const int delta = 2 * n - 2 * j + 4;
            if (j - 1 >= 1) exps[{j - 1, b + delta}] += 1;
            exps[{j, b + delta}] -= 1;
        }
    }
    FreeLaurent::Key key;
    for (const auto& [vk, e] : exps)
        if (e != 0) key.emplace_back(vk, e);
    FreeLaurent out;
    out.add_term(key, 1);
    return out;
}

FreeLaurent psi(const Polynomial& p, int n) {
    FreeLaurent out;
    for (const auto& [m, c] : p.terms()) {
        std::map<std::pair<int, int>, int> exps;
        for (const auto& [var, pow] : m.factors()) {
            FreeLaurent f = eliminate_barred(var, n);
            const auto& key = f.terms().begin()->first;
            for (const auto& [vk, e] : key) exps[vk] += e * pow;
        }
        FreeLaurent::Key key;
        for (const auto& [vk, e] : exps)
            if (e != 0) key.emplace_back(vk, e);
        out.add_term(key, c);
    }
    return out;
}

bool check_relations(int n, int shift_lo, int shift_hi) {
    for (int i = 1; i <= n; ++i) {
        for (int d = shift_lo; d <= shift_hi; ++d) {
            if ((d % 2 + 2) % 2 != 0) continue;
            const int d2 = d - 2 * n + 2 * i - 4;
            Polynomial lhs = Polynomial::var({{i, false}, d}) * Polynomial::var({{i, true}, d2});
            Polynomial rhs = (i == 1) ? Polynomial::one()
                                      : Polynomial::var({{i - 1, false}, d}) *
                                            Polynomial::var({{i - 1, true}, d2});
            if (!(psi(lhs, n) == psi(rhs, n))) return false;
        }
    }
    return true;
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json vars = nlohmann::json::array();
        for (const auto& [v, pow] : m.factors()) {
            vars.push_back({{"letter", v.letter.json_str()},
                            {"shift", v.shift},
                            {"power", pow}});
        }
        nlohmann::json term;
        // keep coefficients numeric when exactly representable, else decimal string
        if (c >= std::numeric_limits<std::int64_t>::min() &&
            c <= std::numeric_limits<std::int64_t>::max()) {
            term["coeff"] = static_cast<std::int64_t>(c);
        } else {
            term["coeff"] = c.str();
        }
        term["vars"] = vars;
        terms.push_back(term);
    }
    return nlohmann::json{{"terms", terms}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    Polynomial p;
    for (const auto& term : j.at("terms")) {
        Int c;
        const auto& cj = term.at("coeff");
        if (cj.is_string()) {
            c = Int(cj.get<std::string>());
        } else {
            c = Int(cj.get<std::int64_t>());
        }
        Monomial m = Monomial::one();
        for (const auto& var : term.at("vars")) {
            Letter letter = Letter::parse(var.at("letter").get<std::string>());
            int shift = var.at("shift").get<int>();
            int power = var.at("power").get<int>();
            for (int k = 0; k < power; ++k) m *= Monomial::var({letter, shift});
        }
        p.add_term(m, c);
    }
    return p;
}

}  // namespace cjt
