#include "gwzero/oracle_suite.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "gwzero/gw.hpp"
#include "gwzero/manifest.hpp"

namespace gwzero {

namespace {

using Rng = std::mt19937_64;

i64 rand_entry(Rng& rng, i64 bound) {
    std::uniform_int_distribution<i64> d(-bound, bound);
    return d(rng);
}

int rand_int(Rng& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
}

IVec rand_vec(Rng& rng, int n, i64 bound) {
    IVec v(static_cast<std::size_t>(n));
    for (auto& e : v) e = rand_entry(rng, bound);
    return v;
}

// A random minimal base from the catalog forms, then 1-3 blowups. Total
// rank stays <= 24.
Manifold4 random_blowup_base(Rng& rng, int blowups) {
    Manifold4 base = [&]() -> Manifold4 {
        if (rand_int(rng, 0, 1) == 0) {
            // even base: aH + bE8-, c1 = 0
            const int a = rand_int(rng, 1, 3);
            const int b = rand_int(rng, 0, (a >= 3) ? 1 : 2);
            std::ostringstream form;
            form << a << "H";
            if (b > 0) form << "+" << b << "E8-";
            BilinearLattice L = parse_form_expression(form.str());
            return Manifold4("B", std::move(L), IVec(static_cast<std::size_t>(2 * a + 8 * b), 0),
                             true, true);
        }
        // odd base: a<1> + b<-1>, c1 = (3,...,3,1,...,1)
        const int a = rand_int(rng, 1, 3);
        const int b = rand_int(rng, 0, 8);
        std::ostringstream form;
        form << a << "<1>";
        if (b > 0) form << "+" << b << "<-1>";
        BilinearLattice L = parse_form_expression(form.str());
        IVec c1;
        for (int i = 0; i < a; ++i) c1.push_back(3);
        for (int i = 0; i < b; ++i) c1.push_back(1);
        return Manifold4("B", std::move(L), std::move(c1), true, true);
    }();
    for (int i = 0; i < blowups; ++i) base = blow_up(base, "E" + std::to_string(i + 1));
    return base;
}

std::string describe_failure(const std::string& kind, std::uint64_t seed, int index,
                             const GWValue& ev, const GWValue& red) {
    std::ostringstream out;
    out << kind << " query #" << index << " (seed " << seed << "): eval = " << ev.str()
        << ", oracle = " << red.str();
    return out.str();
}

}  // namespace

OracleCheckReport run_oracle_check(const OracleCheckConfig& cfg) {
    OracleCheckReport report;
    report.seed = cfg.seed;
    Rng rng(cfg.seed);

    for (int i = 0; i < cfg.count; ++i) {
        const int blowups = rand_int(rng, 1, 3);
        const Manifold4 x = random_blowup_base(rng, blowups);
        const int rank = x.rank();
        const auto& exceptional = x.exceptional_classes();
        const Class2 cls =
            exceptional[static_cast<std::size_t>(rand_int(rng, 0, blowups - 1))];
        const int k = rand_int(rng, 0, cfg.max_k);
        const bool six = rand_int(rng, 0, 1) == 1;

        GWValue ev = GWValue::integer(0), red = GWValue::integer(0);
        std::string kind;
        if (!six) {
            kind = "4-manifold";
            GWQuery4 q{&x, cls, {}};
            for (int a = 0; a < k; ++a) {
                const int roll = rand_int(rng, 0, 19);
                if (roll < 2)
                    q.insertions.push_back(CohoClass4::unit(rand_entry(rng, cfg.max_entry)));
                else if (roll < 17)
                    q.insertions.push_back(CohoClass4::deg2(rand_vec(rng, rank, cfg.max_entry)));
                else
                    q.insertions.push_back(CohoClass4::point(rand_entry(rng, cfg.max_entry)));
            }
            ev = eval_4(q).value;
            red = reduce_via_axioms(q).value;
        } else {
            kind = "stabilization";
            const Stabilized6 s = stabilize(x);
            GWQuery6 q{&s, pushforward(cls), {}};
            for (int a = 0; a < k; ++a) {
                const int roll = rand_int(rng, 0, 19);
                if (roll < 2)
                    q.insertions.push_back(CohoClass6::unit(rand_entry(rng, cfg.max_entry)));
                else if (roll < 14)
                    q.insertions.push_back(CohoClass6::deg2(rand_vec(rng, rank, cfg.max_entry),
                                                            rand_entry(rng, cfg.max_entry)));
                else if (roll < 18)
                    q.insertions.push_back(CohoClass6::deg4(rand_entry(rng, cfg.max_entry),
                                                            rand_vec(rng, rank, cfg.max_entry)));
                else
                    q.insertions.push_back(CohoClass6::top(rand_entry(rng, cfg.max_entry)));
            }
            ev = eval_6(q).value;
            red = reduce_via_axioms(q).value;
        }

        ++report.total;
        if (!ev.is_integer() || !red.is_integer()) {
            ++report.skipped;
            continue;
        }
        ++report.compared;
        if (ev.value() != red.value()) {
            ++report.disagreements;
            if (report.failures.size() < 10)
                report.failures.push_back(describe_failure(kind, cfg.seed, i, ev, red));
        }
    }
    return report;
}

PermutationCheckReport run_permutation_check(int max_k) {
    PermutationCheckReport report;

    Manifold4 base = [] {
        BilinearLattice L = parse_form_expression("3H+2E8-");
        return Manifold4("M", std::move(L), IVec(22, 0), true, true);
    }();
    const Manifold4 x = blow_up(base, "E");
    const Stabilized6 s = stabilize(x);
    const Class2 e = x.exceptional_classes().front();
    const int rank = x.rank();

    // Distinguishable insertion data: entry patterns depend on the slot, so
    // a permutation that changed the value would be caught.
    auto deg2_4 = [&](int slot) {
        IVec phi(static_cast<std::size_t>(rank), 0);
        phi[static_cast<std::size_t>(slot % rank)] = slot + 1;
        phi.back() = -(slot + 2);
        return CohoClass4::deg2(std::move(phi));
    };
    auto deg2_6 = [&](int slot) {
        IVec phi(static_cast<std::size_t>(rank), 0);
        phi[static_cast<std::size_t>(slot % rank)] = 2 * slot + 1;
        phi.back() = slot - 3;
        return CohoClass6::deg2(std::move(phi), slot);
    };

    for (int k = 0; k <= max_k; ++k) {
        // 4-manifold: k degree-2 insertions.
        {
            GWQuery4 q{&x, e, {}};
            for (int i = 0; i < k; ++i) q.insertions.push_back(deg2_4(i));
            const GWValue ref_eval = eval_4(q).value;
            const GWValue ref_red = reduce_via_axioms(q).value;

            std::vector<int> idx(static_cast<std::size_t>(k));
            std::iota(idx.begin(), idx.end(), 0);
            do {
                GWQuery4 p{&x, e, {}};
                for (int i : idx) p.insertions.push_back(q.insertions[static_cast<std::size_t>(i)]);
                ++report.total;
                if (!(eval_4(p).value == ref_eval) ||
                    !(reduce_via_axioms(p).value == ref_red)) {
                    ++report.mismatches;
                    if (report.failures.size() < 10)
                        report.failures.push_back("4-manifold k=" + std::to_string(k) +
                                                  ": permutation changed the value");
                }
            } while (std::next_permutation(idx.begin(), idx.end()));
        }
        // stabilization: one degree-4 insertion plus k-1 degree-2 insertions.
        if (k >= 1) {
            GWQuery6 q{&s, pushforward(e), {}};
            q.insertions.push_back(pd_of_pushforward(s, e));
            for (int i = 1; i < k; ++i) q.insertions.push_back(deg2_6(i));
            const GWValue ref_eval = eval_6(q).value;
            const GWValue ref_red = reduce_via_axioms(q).value;

            std::vector<int> idx(static_cast<std::size_t>(k));
            std::iota(idx.begin(), idx.end(), 0);
            do {
                GWQuery6 p{&s, pushforward(e), {}};
                for (int i : idx) p.insertions.push_back(q.insertions[static_cast<std::size_t>(i)]);
                ++report.total;
                if (!(eval_6(p).value == ref_eval) ||
                    !(reduce_via_axioms(p).value == ref_red)) {
                    ++report.mismatches;
                    if (report.failures.size() < 10)
                        report.failures.push_back("stabilization k=" + std::to_string(k) +
                                                  ": permutation changed the value");
                }
            } while (std::next_permutation(idx.begin(), idx.end()));
        }
    }
    return report;
}

}  // namespace gwzero
