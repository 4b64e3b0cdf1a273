#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tau/clifford.hpp"
#include "tau/hasse_io.hpp"

namespace tau {

struct CatalogEntry {
    std::string name;
    unsigned p;
    std::size_t degree;                  // permutation degree
    std::vector<std::string> gt_gens;    // generators of G~ in cycle notation
    std::vector<std::string> words;      // generators of G as words in those of G~
    PairMetadata meta;
    long expected_sub = -1;              // principal block counts, -1 when unknown
    long expected_super = -1;
    std::string note;
    unsigned m = 1;                      // default field degree
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& name);

// Group algebras, normal pair and blocks of one catalog entry over F_{p^m}.
struct Instance {
    const CatalogEntry* entry;
    const Field* field;
    std::unique_ptr<GroupAlgebra> big, small;
    std::unique_ptr<NormalPair> np;
    std::vector<BlockIdem> blocks;                      // of kG
    std::optional<std::vector<BlockIdem>> tilde_blocks; // of kG~, on demand

    const std::vector<BlockIdem>& big_blocks();
};

// Builds the groups and the blocks of kG; blocks of kG~ are computed lazily.
std::unique_ptr<Instance> build_instance(const CatalogEntry& e, unsigned field_degree = 1);

struct BlockChoice {
    bool principal = true;
    std::size_t index = 0;
    std::string label() const { return principal ? "principal" : "block" + std::to_string(index); }
};
// Parses "principal" or "index N".
BlockChoice parse_block(const std::string& text);

struct RunOptions {
    BlockChoice block;
    unsigned field_degree = 1;
    std::uint64_t seed = 0;
    std::size_t max_vertices = 10000;
};

struct EnumerateResult {
    std::unique_ptr<Instance> instance;  // owns the algebra the quiver refers to
    HasseQuiver quiver;
    HasseSummary summary;
    std::string stem;  // <pair>.<side>.<block>
    std::vector<std::string> events;
};

// Enumerates the chosen block on the subgroup side or the overgroup side.
EnumerateResult run_enumerate(const CatalogEntry& e, bool super_side, const RunOptions& opt);

// Full verification; field events are recorded and the pair is rebuilt over
// the larger field until it succeeds or the field limit is reached.
Report run_verify(const CatalogEntry& e, const RunOptions& opt);

}  // namespace tau
