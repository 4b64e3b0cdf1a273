#pragma once

#include <map>
#include <string>
#include <vector>

#include "tau/grouprep.hpp"
#include "tau/tautilt.hpp"

namespace tau {

struct HypothesisFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldTooSmall : std::runtime_error {
    unsigned degree;
    explicit FieldTooSmall(unsigned d)
        : std::runtime_error("field too small: extension of degree " + std::to_string(d) + " required"), degree(d)
    {
    }
};

struct UnsupportedQuotient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class QuotientKind { PGroup, Cyclic, Dihedral2p, Other };
std::string to_string(QuotientKind k);
QuotientKind quotient_kind_from_string(const std::string& s);

struct PairMetadata {
    QuotientKind kind = QuotientKind::Other;
    bool h2_trivial = false;
    bool basic_quotient_algebra = false;
};

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;
    std::vector<std::string> events;  // FieldNotSplitting, FieldTooSmall and similar
    std::map<std::string, std::string> info;

    void add(std::string name, bool passed, std::string detail = "");
    void merge(const Report& other);
    bool ok() const;
    std::vector<std::string> failures() const;
    std::string to_json() const;
};

// The quotient G~/G as a permutation group on the cosets.
struct QuotientGroup {
    PermGroup group;
    std::size_t order() const { return group.order(); }
};
QuotientGroup quotient_group(const NormalPair& np);
QuotientKind compute_quotient_kind(const NormalPair& np);
bool kind_compatible(QuotientKind k, const NormalPair& np);
// All simple k[G~/G]-modules are one-dimensional.
bool quotient_algebra_basic(const NormalPair& np);

struct CoveringPair {
    const NormalPair* np;
    const BlockIdem* b;
    const BlockIdem* btilde;
    PairMetadata meta;
};

// Blocks of kG~ covering b.
std::vector<std::size_t> covering_blocks(const std::vector<BlockIdem>& tilde_blocks, const BlockIdem& b,
                                         const NormalPair& np);

// The inertia group of B in G~ is all of G~.
bool inertia_is_whole(const CoveringPair& pair);
bool is_stable(const AMod& u, const NormalPair& np);
Report check_hypotheses(const CoveringPair& pair, const HasseQuiver& hasse);
// One-dimensional representations of G~/G over the field, as values on G~ elements.
std::vector<std::vector<Scalar>> linear_characters(const NormalPair& np);
std::size_t extension_count_e(const NormalPair& np);
// Number of simple k[G~/G]-modules.
std::size_t quotient_simple_count(const NormalPair& np);
std::vector<AMod> extending_modules(const AMod& s, const NormalPair& np);

// Block module over B viewed over kG, induced to kG~, cut by B~.
AMod ind_block(const AMod& m, const CoveringPair& pair);
STiltPair ind_stau(const STiltPair& x, const CoveringPair& pair);
Semibrick ind_semibrick(const Semibrick& s, const CoveringPair& pair);
// Multiplicity of PIM j of B~ in B~ Ind P_i, as rows j and columns i.
std::vector<std::vector<long>> induced_pim_matrix(const CoveringPair& pair);
bool same_semibrick(const Semibrick& a, const Semibrick& b);

Report verify_squares(const CoveringPair& pair, const HasseQuiver& hasse);
Report verify_hasse_embedding(const CoveringPair& pair, const HasseQuiver& hasse, const HasseQuiver& tilde_hasse);
bool counting_check(const std::vector<BlockIdem>& tilde_blocks, const BlockIdem& b, const NormalPair& np);
// Mackey, Frobenius reciprocity, tau and Ind, Ind summand count, pair sizes and
// label coherence.
Report property_suite(const CoveringPair& pair, const HasseQuiver& hasse, const HasseQuiver& tilde_hasse,
                      std::uint64_t seed, std::size_t random_modules = 10);

}  // namespace tau
