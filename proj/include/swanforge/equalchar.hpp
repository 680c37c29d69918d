#pragma once

#include <optional>
#include <variant>

#include "swanforge/forms.hpp"
#include "swanforge/laurent.hpp"

namespace swanforge {

// Engine context for K = F((π)): the residue field, the fixed uniformizer π
// and p-basis lifts x_1..x_n are implicit in the coordinate conventions.
struct EqContext {
    FieldConfig F;
    int cap_override = -1;  // precision cap; < 0 means 2·naive_level + 8

    explicit EqContext(FieldConfig f, int cap = -1) : F(std::move(f)), cap_override(cap) {}
    int cap_for(int naive_level) const {
        return cap_override >= 0 ? cap_override : 2 * naive_level + 8;
    }
};

// One term a dlog b of a class presentation in H²_p(K).
struct EqTerm {
    LaurentElt a, b;
};

struct EqPresentation {
    std::vector<EqTerm> terms;
};

// Coordinates Σ A_m dlog x_m + B dlog π with respect to the p-basis
// {x_1,...,x_n, π} of K.
struct NormalForm {
    std::vector<LaurentElt> A;
    LaurentElt B;

    static NormalForm zero(const EqContext& ctx, int cap);
    NormalForm operator+(const NormalForm& o) const;
    NormalForm operator-(const NormalForm& o) const;
    bool agrees_with(const NormalForm& o) const;
};

// Graded-quotient images M_j/M_{j-1} (j >= 1) and the tame (j = 0) report.
struct GradedOmega1 {
    Form1 w;  // class in Ω¹_F
};
struct GradedPair {
    Form1 w;       // representative of the Ω¹_F/Z¹_F part
    RatFunc c_b;   // representative of the F/F^p part
};
struct TameReport {
    RatFunc residue;                  // class in F/℘F
    std::optional<bool> residue_trivial;  // p = 2 only; nullopt = undecided
    std::optional<RatFunc> as_witness;
    Form1 unramified;                 // data only; Brauer triviality undecided
};
using GradedClassEq = std::variant<GradedOmega1, GradedPair, TameReport>;

bool graded_is_zero(const GradedClassEq& g, const FieldConfig& F);

// Witness that two normal forms present the same class:
// difference = d(g) + (Fr - 1)(Σ eta_x[m] dlog x_m + eta_pi dlog π).
struct EqCertificate {
    LaurentElt g;
    std::vector<LaurentElt> eta_x;
    LaurentElt eta_pi;

    static EqCertificate empty(const EqContext& ctx, int cap);
    NormalForm delta(const EqContext& ctx) const;  // dg + (Fr-1)η in coordinates
};

// d(g) in NormalForm coordinates.
NormalForm d_coords(const LaurentElt& g, const EqContext& ctx);

NormalForm to_normal_form(const EqPresentation& pres, const EqContext& ctx);
NormalForm to_normal_form_capped(const EqPresentation& pres, const EqContext& ctx, int cap);

int naive_level(const NormalForm& nf);

GradedClassEq graded_image(const NormalForm& nf, int j, const EqContext& ctx);

// Strips the π^{-j} layer when the level-j image vanishes.
std::pair<NormalForm, EqCertificate> reduce_level(const NormalForm& nf, int j,
                                                  const EqContext& ctx);

struct SwanResult {
    int sw = 0;
    GradedClassEq image;  // nonzero graded image, or the TameReport at sw = 0
    std::vector<EqCertificate> trace;
};

SwanResult swan(const NormalForm& nf, const EqContext& ctx);

TameReport residue_tame(const NormalForm& nf, const EqContext& ctx);

// Kato's rewriting move: a dlog(1+b) ≡ -(ab) dlog a mod M_{i-2j}, realized by
// the exact identity  a dlog(1+b) + ab dlog a
//     = d(ab/(1+b)) + (ab²/(1+b)²) dlog b + (ab²/(1+b)) dlog a.
struct SwiftMove {
    EqPresentation replacement;  // [ -(ab) dlog a ]
    int level_bound;             // i - 2j
    LaurentElt g;                // exact part
    EqPresentation remainder;    // the two M_{i-2j} terms
    bool verify(const LaurentElt& a, const LaurentElt& b, const EqContext& ctx) const;
};

SwiftMove swift_move(const LaurentElt& a, const LaurentElt& b, const EqContext& ctx);

// §5 canonicalization output: coefficients live in coordinates of the twisted
// basis (basis_x[m], basis_pi); the chain certifies equality with the input.
struct EqCanonical {
    int k = 0;
    bool wild_pi = false;  // p | k shape with a dlog π column
    NormalForm canonical;
    std::vector<LaurentElt> basis_x;
    LaurentElt basis_pi;
    std::vector<EqCertificate> chain;
    bool partial = false;
    bool fallback_basis = false;
    std::string note;

    EqPresentation as_presentation() const;
};

EqCanonical strong_canonicalize(const NormalForm& nf, const EqContext& ctx);

// Replays the chain: to_normal_form(canonical presentation) + Σ chain deltas
// must agree with nf coordinate-wise.
bool verify_canonical(const NormalForm& nf, const EqCanonical& canon, const EqContext& ctx);

struct SplitStep {
    enum class Kind { RootOfBasisX, RootOfResidueVar, RootOfPi, ArtinSchreier };
    Kind kind;
    int index = -1;        // basis slot or residue variable
    std::string note;
    bool syntactic = true;  // killed as p·(term); otherwise machine-checked below
};

struct SplittingCert {
    std::vector<SplitStep> steps;
    long long degree = 1;
    bool verified = false;
    std::string note;
};

SplittingCert splitting_certificate(const EqCanonical& canon, const EqContext& ctx);

}  // namespace swanforge
