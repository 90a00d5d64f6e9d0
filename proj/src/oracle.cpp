#include "gentle/oracle.hpp"

#include <memory>
#include <numeric>
#include <utility>
#include <variant>
#include <vector>

namespace gentle {

namespace {

void fold_expr_order(std::int64_t& N, const ScalarExpr& s) {
    if (std::holds_alternative<CycloScalar>(s)) {
        const auto& c = std::get<CycloScalar>(s);
        if (!c.is_zero()) N = std::lcm(N, c.order);
        return;
    }
    const auto& r = std::get<SymbolicRoot>(s);
    N = std::lcm(N, (std::int64_t)r.k);
    if (!r.radicand.is_zero()) N = std::lcm(N, r.radicand.order);
}

std::vector<std::pair<CycloScalar, int>> symbolic_root_needs(const ConeDecomposition& claimed) {
    std::vector<std::pair<CycloScalar, int>> needs;
    for (const auto& b : claimed.bands)
        if (std::holds_alternative<SymbolicRoot>(b.scalar)) {
            const auto& r = std::get<SymbolicRoot>(b.scalar);
            needs.emplace_back(r.radicand, r.k);
        }
    return needs;
}

template <class Ops>
VerifyReport verify_with(const GentleAlgebra& A, const RealizedMap& f,
                         const ConeDecomposition& claimed, const VerifyOptions& opts, Ops F) {
    VerifyReport rep;
    rep.field = F.name();
    std::mt19937_64 probe_rng(opts.seed);

    MatrixComplex<Ops> cone = mapping_cone(A, f, F);
    std::mt19937_64 order_rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
    ReduceStats stats = reduce_min(A, cone, opts.randomize_reduction ? &order_rng : nullptr);
    rep.eliminated_pairs = stats.eliminations;

    if (claimed.oracle_only) {
        // no closed form to compare against: check that minimization is
        // confluent by reducing a fresh cone in a scrambled order
        MatrixComplex<Ops> again = mapping_cone(A, f, F);
        std::mt19937_64 scramble(opts.seed + 1);
        reduce_min(A, again, &scramble);
        rep.graded_dims_match = slot_census(cone) == slot_census(again);
        rep.iso = rep.graded_dims_match &&
                  iso_probe(A, cone, again, opts.trials, probe_rng, &rep.trials_used);
        return rep;
    }

    Complex realized = realize_decomposition(A, claimed);
    MatrixComplex<Ops> target = embed_complex(A, realized, F);
    check_d_squared(A, target);
    reduce_min(A, target, nullptr);

    rep.graded_dims_match = slot_census(cone) == slot_census(target);
    rep.iso = rep.graded_dims_match &&
              iso_probe(A, cone, target, opts.trials, probe_rng, &rep.trials_used);
    return rep;
}

}  // namespace

std::int64_t verification_order(const RealizedMap& f, const ConeDecomposition& claimed) {
    std::int64_t N = 2;  // signs always live in the field
    if (f.field) N = std::lcm(N, f.field->order);
    for (const Complex* c : {&f.source, &f.target})
        for (const DiffEntry& e : c->diff) fold_expr_order(N, e.coeff);
    for (const auto& b : claimed.bands) fold_expr_order(N, b.scalar);
    return N;
}

VerifyReport verify_cone(const GentleAlgebra& A, const RealizedMap& f,
                         const ConeDecomposition& claimed, const VerifyOptions& opts) {
    std::int64_t N = verification_order(f, claimed);
    if (opts.mode == FieldCtx::Mode::cyclotomic) {
        CycloOps F{std::make_shared<CycloCtx>(CycloCtx::make(N))};
        VerifyReport rep = verify_with(A, f, claimed, opts, F);
        rep.field_order = N;
        return rep;
    }
    FpCtx ctx = FpCtx::make(N, symbolic_root_needs(claimed));
    FpOps F{std::make_shared<FpCtx>(ctx)};
    VerifyReport rep = verify_with(A, f, claimed, opts, F);
    rep.prime = ctx.p;
    rep.field_order = N;
    return rep;
}

}  // namespace gentle
