#ifndef QALG_RING_HPP
#define QALG_RING_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qalg/rational.hpp"

namespace qalg {

/* One graded variable. Degrees are cohomological, so >= 1. */
struct VarSpec {
    std::string name;
    int degree = 0;
};

/* An ordered list of graded variables. The declared order fixes the
   positions of exponent vectors and the canonical serialization order;
   it is independent of any Groebner monomial order. */
class RingSpec {
public:
    explicit RingSpec(std::vector<VarSpec> vars);

    std::size_t size() const { return vars_.size(); }
    const VarSpec& var(std::size_t i) const { return vars_[i]; }
    int degree(std::size_t i) const { return vars_[i].degree; }
    const std::string& name(std::size_t i) const { return vars_[i].name; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const RingSpec& other) const;
    bool operator!=(const RingSpec& other) const { return !(*this == other); }

private:
    std::vector<VarSpec> vars_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<VarSpec> vars);

/* Exponent vector; the length always matches the owning ring. */
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(std::size_t nvars);

    std::size_t size() const { return e_.size(); }
    int exp(std::size_t i) const { return e_[i]; }
    bool is_one() const;
    int total_degree() const;

    Monomial times(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    /* this / other; requires other.divides(*this) */
    Monomial divided_by(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    /* Lexicographic comparison in declared-variable order: -1, 0 or 1. */
    static int lex_cmp(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const { return e_ == other.e_; }
    bool operator!=(const Monomial& other) const { return e_ != other.e_; }

private:
    std::vector<int> e_;
};

int weighted_degree(const Monomial& m, const RingSpec& ring);

std::string format_monomial(const Monomial& m, const RingSpec& ring);

/* Canonical term order: declared variable order, lexicographic exponent
   comparison, biggest first. Used for serialization only. */
struct MonoLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::lex_cmp(a, b) > 0;
    }
};

/* A degree-preserving signed permutation of the ring variables:
   each variable maps to (+/-1) times a variable of the same degree. */
class SignedSubstitution {
public:
    struct Image {
        std::size_t var = 0;
        int sign = 1;
    };

    SignedSubstitution(RingPtr ring, std::vector<Image> images);
    static SignedSubstitution identity(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const Image& image(std::size_t i) const { return images_[i]; }
    bool is_identity() const;
    /* True when every variable maps to +/- itself (no permutation part). */
    bool is_diagonal() const;

    /* Composition: (a.after(b))(v) = a(b(v)). */
    SignedSubstitution after(const SignedSubstitution& inner) const;

    /* Image of a monomial: the permuted monomial and a global sign. */
    std::pair<Monomial, int> apply(const Monomial& m) const;

    bool operator==(const SignedSubstitution& other) const;
    bool operator<(const SignedSubstitution& other) const;

    std::string format() const;

private:
    RingPtr ring_;
    std::vector<Image> images_;
};

/* Sparse exact-rational multivariate polynomial. Immutable value type:
   all arithmetic returns new canonical polynomials (no zero coefficients,
   deduplicated keys). */
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat, MonoLexGreater>;

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, const Rat& c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial term(RingPtr ring, Monomial m, const Rat& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /* Weighted degree when all terms agree; nullopt otherwise.
       The zero polynomial reports degree 0. */
    std::optional<int> homogeneous_degree() const;

    Polynomial operator-() const;
    Polynomial scaled(const Rat& c) const;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    std::string format() const;
    static Polynomial parse(std::string_view text, RingPtr ring);

private:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    void add_term(const Monomial& m, const Rat& c);
    static void check_same_ring(const Polynomial& p, const Polynomial& q);

    RingPtr ring_;
    TermMap terms_;
};

Polynomial substitute(const Polynomial& p, const SignedSubstitution& s);

} // namespace qalg

#endif
