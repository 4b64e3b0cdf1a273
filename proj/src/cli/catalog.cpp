#include <chrono>
#include <sstream>

#include "tau/catalog.hpp"

namespace tau {

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = {
        {"A5-S5", 5, 5, {"(1 2 3 4 5)", "(1 2 3)", "(1 2)"}, {"a", "b"}, {QuotientKind::Cyclic, true, true}, 6, 70, ""},
        {"S3-S3xC3", 3, 6, {"(1 2 3)", "(1 2)", "(4 5 6)"}, {"a", "b"}, {QuotientKind::PGroup, true, true}, 6, 6, ""},
        {"A4-S4", 3, 4, {"(1 2 3)", "(1 2)(3 4)", "(1 2)"}, {"a", "b"}, {QuotientKind::Cyclic, true, true}, 2, 6, ""},
        {"C3-C3xC3", 3, 6, {"(1 2 3)", "(4 5 6)"}, {"a"}, {QuotientKind::PGroup, true, true}, 2, 2, ""},
        {"C5", 5, 5, {"(1 2 3 4 5)"}, {"a"}, {QuotientKind::PGroup, true, true}, 2, 2, "identity pair"},
        {"S3-S3xC2", 3, 5, {"(1 2 3)", "(1 2)", "(4 5)"}, {"a", "b"}, {QuotientKind::Cyclic, true, true}, 6, 6,
         "direct product with a p'-group"},
        {"C3-C6", 2, 5, {"(1 2 3)(4 5)"}, {"aa"}, {QuotientKind::PGroup, true, true}, 2, 2,
         "blocks of F2 C3 need F4"},
        {"C2-C4", 3, 4, {"(1 2 3 4)"}, {"aa"}, {QuotientKind::Cyclic, true, true}, 2, 2,
         "block index 1 extends only over F9"},
    };
    return entries;
}

const CatalogEntry* find_entry(const std::string& name)
{
    for (auto& e : catalog())
        if (e.name == name)
            return &e;
    return nullptr;
}

const std::vector<BlockIdem>& Instance::big_blocks()
{
    if (!tilde_blocks)
        tilde_blocks = central_primitive_idempotents(*big);
    return *tilde_blocks;
}

std::unique_ptr<Instance> build_instance(const CatalogEntry& e, unsigned field_degree)
{
    auto inst = std::make_unique<Instance>();
    inst->entry = &e;
    inst->field = &Field::get(e.p, field_degree);
    std::vector<Perm> gens;
    for (auto& c : e.gt_gens)
        gens.push_back(parse_cycles(c, e.degree));
    inst->big = std::make_unique<GroupAlgebra>(PermGroup(gens), *inst->field, e.name + ".big");
    std::vector<Perm> small;
    for (auto& w : e.words)
        small.push_back(inst->big->group.eval_word(w));
    inst->small = std::make_unique<GroupAlgebra>(PermGroup(small), *inst->field, e.name + ".small");
    inst->np = std::make_unique<NormalPair>(*inst->small, *inst->big, e.words);
    inst->blocks = central_primitive_idempotents(*inst->small);
    return inst;
}

BlockChoice parse_block(const std::string& text)
{
    BlockChoice b;
    if (text == "principal")
        return b;
    std::istringstream is(text);
    std::string word;
    long n = -1;
    is >> word >> n;
    std::string rest;
    if (word != "index" || n < 0 || (is >> rest))
        throw std::invalid_argument("block must be 'principal' or 'index N'");
    b.principal = false;
    b.index = std::size_t(n);
    return b;
}

namespace {

const BlockIdem& choose(const std::vector<BlockIdem>& blocks, const BlockChoice& c)
{
    if (c.principal)
        return blocks.at(0);
    if (c.index >= blocks.size())
        throw std::out_of_range("block index " + std::to_string(c.index) + " out of range; there are " +
                                std::to_string(blocks.size()) + " blocks");
    return blocks[c.index];
}

std::string field_name(const Field& f)
{
    return f.m() == 1 ? "F_" + std::to_string(f.p()) : "F_" + std::to_string(f.q());
}

std::uint64_t field_size(unsigned p, unsigned m)
{
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i)
        q *= p;
    return q;
}

constexpr std::uint64_t max_field_size = 1u << 12;

struct FieldEvent {
    std::string text;
    unsigned degree;
};

// Runs body over growing fields, recording the events raised on the way.
template <class Body>
void with_field_retry(unsigned p, unsigned m, std::vector<std::string>& events, Body body)
{
    while (true) {
        std::optional<FieldEvent> ev;
        try {
            body(m);
            return;
        } catch (const FieldNotSplitting& x) {
            ev = FieldEvent{"FieldNotSplitting", x.degree};
        } catch (const FieldTooSmall& x) {
            ev = FieldEvent{"FieldTooSmall", x.degree};
        }
        unsigned next = m * ev->degree;
        std::string msg = ev->text + "(degree=" + std::to_string(ev->degree) + ") over " +
                          field_name(Field::get(p, m));
        if (ev->degree < 2 || field_size(p, next) > max_field_size) {
            events.push_back(msg + "; field limit reached");
            throw std::runtime_error(events.back());
        }
        events.push_back(msg + "; rerun over F_" + std::to_string(field_size(p, next)));
        m = next;
    }
}

template <class F>
void stage(Report& r, const std::string& name, F f)
{
    try {
        f();
    } catch (const FieldNotSplitting&) {
        throw;
    } catch (const FieldTooSmall&) {
        throw;
    } catch (const std::exception& e) {
        r.add(name, false, e.what());
    }
}

Report verify_once(const CatalogEntry& e, const RunOptions& opt, unsigned m)
{
    auto inst = build_instance(e, m);
    const NormalPair& np = *inst->np;
    Report r;
    r.info["pair"] = e.name;
    r.info["field"] = field_name(*inst->field);
    r.info["block"] = opt.block.label();
    r.info["seed"] = std::to_string(opt.seed);
    r.info["quotient_kind"] = to_string(e.meta.kind);

    const BlockIdem& b = choose(inst->blocks, opt.block);
    HasseQuiver hasse = enumerate_hasse(*b.algebra, opt.max_vertices);
    r.add("sub_enumeration_complete", hasse.complete, std::to_string(hasse.vertices.size()) + " vertices");
    r.info["sub_vertices"] = std::to_string(hasse.vertices.size());

    // Extensions of the stable bricks decide whether the field is large enough
    // before anything on the overgroup side is computed.
    stage(r, "extensions", [&] {
        std::vector<AMod> bricks = b.algebra->structure().simples;
        for (auto& a : hasse.arrows)
            bricks.push_back(a.label);
        std::size_t e_count = extension_count_e(np);
        bool ok = true;
        for (auto& brick : bricks) {
            AMod u = inflate_block_module(*inst->small, brick);
            if (is_stable(u, np))
                ok &= extending_modules(u, np).size() == e_count;
        }
        r.info["extension_count_e"] = std::to_string(e_count);
        r.add("extension_count", ok, "each stable brick has e = " + std::to_string(e_count) + " extensions");
    });

    const auto& tblocks = inst->big_blocks();
    auto cov = covering_blocks(tblocks, b, np);
    if (cov.empty()) {
        r.add("covering_block", false, "no block of the overgroup covers the chosen block");
        return r;
    }
    CoveringPair pair{&np, &b, &tblocks[cov[0]], e.meta};
    HasseQuiver tilde = enumerate_hasse(*pair.btilde->algebra, opt.max_vertices);
    r.add("super_enumeration_complete", tilde.complete, std::to_string(tilde.vertices.size()) + " vertices");
    r.info["super_vertices"] = std::to_string(tilde.vertices.size());

    stage(r, "hypotheses", [&] { r.merge(check_hypotheses(pair, hasse)); });
    stage(r, "properties", [&] { r.merge(property_suite(pair, hasse, tilde, opt.seed)); });
    stage(r, "squares", [&] { r.merge(verify_squares(pair, hasse)); });
    stage(r, "counting", [&] {
        r.add("counting", counting_check(tblocks, b, np),
              std::to_string(quotient_simple_count(np)) + " x " + std::to_string(b.algebra->structure().count()));
    });
    if (e.meta.kind == QuotientKind::PGroup)
        stage(r, "hasse_embedding", [&] { r.merge(verify_hasse_embedding(pair, hasse, tilde)); });
    return r;
}

}  // namespace

EnumerateResult run_enumerate(const CatalogEntry& e, bool super_side, const RunOptions& opt)
{
    EnumerateResult out;
    with_field_retry(e.p, opt.field_degree, out.events, [&](unsigned m) {
        auto inst = build_instance(e, m);
        const auto& blocks = super_side ? inst->big_blocks() : inst->blocks;
        const BlockIdem& b = choose(blocks, opt.block);
        out.quiver = enumerate_hasse(*b.algebra, opt.max_vertices);
        out.summary = summarize(out.quiver, *b.algebra);
        out.instance = std::move(inst);
    });
    out.stem = e.name + (super_side ? ".super." : ".sub.") + opt.block.label();
    return out;
}

Report run_verify(const CatalogEntry& e, const RunOptions& opt)
{
    Report r;
    std::vector<std::string> events;
    auto start = std::chrono::steady_clock::now();
    try {
        with_field_retry(e.p, opt.field_degree, events, [&](unsigned m) { r = verify_once(e, opt, m); });
    } catch (const std::exception& x) {
        r = Report();
        r.info["pair"] = e.name;
        r.add("pipeline", false, x.what());
    }
    r.events.insert(r.events.begin(), events.begin(), events.end());
    std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << secs.count();
    r.info["seconds"] = os.str();
    return r;
}

}  // namespace tau
