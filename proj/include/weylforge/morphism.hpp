#pragma once

#include "weylforge/systems.hpp"

#include <optional>
#include <vector>

namespace weylforge {

/// Endomorphism of CSD_n(K) as the tuple of generator images. Well-defined
/// iff [images[j], images[i]] = d_ij for all i < j (universal property with
/// identity on K).
struct Endomorphism {
    SignaturePtr sig;
    std::vector<NCPoly> images;

    static Endomorphism identity(const SignaturePtr& sig);

    friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
        return a.images == b.images;
    }
};

/// True iff all pairwise commutator relations hold.
bool endo_check(const Endomorphism& e);

/// Value of the unique K-algebra homomorphism at f: each standard monomial
/// maps to the ordered product of image powers. Image powers are memoized
/// per call.
NCPoly endo_apply(const Endomorphism& e, const NCPoly& f);

/// (outer o inner)(x_i) = outer(inner(x_i)).
Endomorphism endo_compose(const Endomorphism& outer, const Endomorphism& inner);

enum class ElementaryKind { Phi, Psi };

/// Elementary automorphisms of A_1:
///   Phi_{n,lambda}: t -> t + lambda*x^n, x -> x
///   Psi_{n,lambda}: t -> t,              x -> x + lambda*t^n
struct ElementaryLetter {
    ElementaryKind kind;
    unsigned exponent;
    FracElem lambda;
};

/// Letters compose right-to-left: the last letter applies first.
struct ElementaryWord {
    std::vector<ElementaryLetter> letters;
};

Endomorphism elementary(ElementaryKind kind, unsigned exponent, const FracElem& lambda);
Endomorphism word_evaluate(const ElementaryWord& w);
bool verify_factorization(const ElementaryWord& w, const Endomorphism& target);

struct InverseResult {
    std::optional<Endomorphism> found;  // empty = NotFoundWithinBounds
    std::vector<unsigned> bounds;
};

/// Bounded-ansatz inversion: posit each preimage as an unknown-coefficient
/// combination of standard monomials within per-variable degree caps
/// (constant term included), solve endo_apply(e, Q_i) = x_i exactly, verify
/// both composition directions and endo_check on success.
InverseResult endo_invert_ansatz(const Endomorphism& e, const std::vector<unsigned>& bounds);

struct LinearPartRank {
    unsigned rank = 0;
    bool surjective_linear = false;
};

/// Rank of the n x n coefficient matrix of linear-homogeneous images.
/// Throws when an image has degree > 1 or a constant term.
LinearPartRank linear_part_rank(const Endomorphism& e);

/// Coefficient-match a template word with symbolic lambdas against a target:
/// triangular exact elimination first, then the capped Groebner engine for
/// what remains. Unknown is a valid outcome (cap reached / nonlinear residue).
SolveResult solve_factorization_params(const ElementaryWord& tmpl,
                                       const std::vector<std::string>& unknown_names,
                                       const Endomorphism& target,
                                       const GroebnerCaps& caps = groebner_caps_from_env());

}  // namespace weylforge
