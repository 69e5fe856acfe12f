#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace cjt {

using Int = boost::multiprecision::cpp_int;

/// A letter of the alphabet I = {1, ..., n, nbar, ..., 1bar} with the total
/// order 1 < 2 < ... < n < nbar < ... < 2bar < 1bar.
struct Letter {
    int index = 1;  // 1..n
    bool barred = false;

    std::pair<int, int> order_key() const {
        return barred ? std::pair<int, int>{1, -index} : std::pair<int, int>{0, index};
    }
    friend bool operator==(const Letter&, const Letter&) = default;
    friend bool operator<(const Letter& a, const Letter& b) {
        return a.order_key() < b.order_key();
    }
    friend bool operator<=(const Letter& a, const Letter& b) { return !(b < a); }

    std::string str() const;       // "2" or "2b"
    std::string json_str() const;  // "2" or "2bar"
    static Letter parse(std::string_view s);  // accepts both forms
};

/// z_{letter, a+shift}; the base point a stays symbolic.
struct Variable {
    Letter letter;
    int shift = 0;

    auto key() const { return std::pair(letter.order_key(), shift); }
    friend bool operator==(const Variable&, const Variable&) = default;
    friend bool operator<(const Variable& a, const Variable& b) { return a.key() < b.key(); }

    std::string str() const;
};

/// Product of variables in canonical sorted order (positive powers only).
class Monomial {
public:
    static Monomial one() { return Monomial(); }
    static Monomial var(Variable v) {
        Monomial m;
        m.factors_.emplace_back(v, 1);
        return m;
    }

    Monomial& operator*=(const Monomial& other);
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    bool is_one() const { return factors_.empty(); }
    int total_degree() const;
    const std::vector<std::pair<Variable, int>>& factors() const { return factors_; }

    /// Adds d to every variable's spectral offset.
    Monomial shifted(int d) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b);

    std::string str() const;

private:
    std::vector<std::pair<Variable, int>> factors_;
};

/// Element of the ring generated by the z variables, as a formal integer
/// combination of monomials. Identification under the ring relations is
/// decided through psi (see below), not here.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return constant(1); }
    static Polynomial constant(Int c);
    static Polynomial var(Variable v) { return monomial(Monomial::var(v), 1); }
    static Polynomial monomial(Monomial m, Int c);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Int& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
    Polynomial operator-() const;

    /// Adds d to every spectral offset in every term.
    Polynomial shifted(int d) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string str() const;

private:
    std::map<Monomial, Int> terms_;  // no zero coefficients stored
};

/// Integer Laurent polynomial in unbarred variables z_{k,d} only; the
/// canonical comparison form for equality in the quotient ring.
class FreeLaurent {
public:
    // exponent vector: sorted ((index, shift) -> nonzero exponent)
    using Key = std::vector<std::pair<std::pair<int, int>, int>>;

    FreeLaurent() = default;
    static FreeLaurent one() { return constant(1); }
    static FreeLaurent constant(Int c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    size_t term_count() const { return terms_.size(); }
    const std::map<Key, Int>& terms() const { return terms_; }

    void add_term(const Key& k, const Int& c);

    FreeLaurent& operator+=(const FreeLaurent& other);
    FreeLaurent& operator-=(const FreeLaurent& other);
    friend FreeLaurent operator+(FreeLaurent a, const FreeLaurent& b) { return a += b; }
    friend FreeLaurent operator-(FreeLaurent a, const FreeLaurent& b) { return a -= b; }
    friend FreeLaurent operator*(const FreeLaurent& a, const FreeLaurent& b);

    friend bool operator==(const FreeLaurent&, const FreeLaurent&) = default;
    friend bool operator<(const FreeLaurent& a, const FreeLaurent& b) {
        return a.terms_ < b.terms_;
    }

    std::string str() const;

private:
    std::map<Key, Int> terms_;
};

/// Resolves a variable into unbarred Laurent form. Unbarred variables map to
/// themselves; z_{ibar,b} unfolds through the ring relations, grounded at
/// z_{0bar,b} = 1.
FreeLaurent eliminate_barred(const Variable& v, int n);

/// Ring homomorphism extending eliminate_barred. Equality of psi images is
/// the artifact's equality oracle for the quotient ring.
FreeLaurent psi(const Polynomial& p, int n);

/// Checks psi respects every generating relation for i in 1..n and even
/// shifts d in [shift_lo, shift_hi].
bool check_relations(int n, int shift_lo, int shift_hi);

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace cjt
